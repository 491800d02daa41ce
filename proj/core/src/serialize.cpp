#include "diffseq/serialize.hpp"

#include <ostream>

#include "diffseq/error.hpp"

namespace diffseq {

std::string to_text(const Coloring& s) { return s.to_string() + '\n'; }

Coloring from_text(std::string_view text) {
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw MalformedInput("coloring text: empty");
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] != '0' && text[k] != '1') {
      throw MalformedInput("coloring text: unexpected character at offset " + std::to_string(k));
    }
  }
  return Coloring::from_string(text);
}

std::string to_binary(const Coloring& s) {
  const std::uint64_t n = s.size();
  std::string out;
  out.reserve(8 + (n + 7) / 8);
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((n >> (8 * b)) & 0xff));
  const auto words = s.words();
  for (std::uint64_t byte = 0; byte < (n + 7) / 8; ++byte) {
    out.push_back(static_cast<char>((words[byte / 8] >> (8 * (byte % 8))) & 0xff));
  }
  return out;
}

Coloring from_binary(std::string_view bytes) {
  if (bytes.size() < 8) throw MalformedInput("coloring binary: truncated length header");
  std::uint64_t n = 0;
  for (int b = 0; b < 8; ++b) n |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[b])) << (8 * b);
  const std::uint64_t payload = bytes.size() - 8;
  if (n == 0) throw MalformedInput("coloring binary: zero length");
  if ((n + 7) / 8 != payload || n > payload * 8) {
    throw MalformedInput("coloring binary: header says " + std::to_string(n) + " bits but payload has " +
                         std::to_string(payload) + " bytes");
  }
  std::vector<std::uint64_t> words((n + 63) / 64, 0);
  for (std::uint64_t byte = 0; byte < payload; ++byte) {
    words[byte / 8] |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[8 + byte])) << (8 * (byte % 8));
  }
  if (n % 8 != 0) {
    const auto last = static_cast<unsigned char>(bytes.back());
    if (last >> (n % 8)) throw MalformedInput("coloring binary: nonzero padding bits");
  }
  return Coloring::from_words(std::move(words), n);
}

Coloring decode_coloring(std::string_view bytes) {
  bool textual = !bytes.empty();
  for (char ch : bytes) {
    if (ch != '0' && ch != '1' && ch != '\n' && ch != '\r') {
      textual = false;
      break;
    }
  }
  return textual ? from_text(bytes) : from_binary(bytes);
}

void write_coloring(std::ostream& out, const Coloring& s, ColoringEncoding enc) {
  const std::string data = enc == ColoringEncoding::kText ? to_text(s) : to_binary(s);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

}  // namespace diffseq
