#include "diffseq/coloring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

#include "diffseq/error.hpp"

namespace diffseq {

namespace {

constexpr std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

// Byte -> 32 bits: each source bit becomes the nibble of its block, stored
// LSB-first. Block 0011 reads 0,0,1,1 from low to high bit (0xC), 1100 is 0x3.
constexpr std::array<std::uint32_t, 256> make_expand_table() {
  std::array<std::uint32_t, 256> table{};
  for (unsigned b = 0; b < 256; ++b) {
    std::uint32_t out = 0;
    for (unsigned bit = 0; bit < 8; ++bit) {
      const std::uint32_t nibble = ((b >> bit) & 1u) ? 0x3u : 0xCu;
      out |= nibble << (4 * bit);
    }
    table[b] = out;
  }
  return table;
}

constexpr auto kExpandTable = make_expand_table();

std::uint64_t spread16(std::uint64_t bits16) {
  return static_cast<std::uint64_t>(kExpandTable[bits16 & 0xff]) |
         (static_cast<std::uint64_t>(kExpandTable[(bits16 >> 8) & 0xff]) << 32);
}

}  // namespace

Coloring::Coloring(std::size_t n) : words_(word_count(n), 0), size_(n) {}

Coloring Coloring::from_string(std::string_view bits) {
  Coloring out(bits.size());
  for (std::size_t k = 0; k < bits.size(); ++k) {
    const char ch = bits[k];
    if (ch != '0' && ch != '1') {
      throw InvalidArgument("coloring: invalid character at position " + std::to_string(k + 1));
    }
    if (ch == '1') out.words_[k >> 6] |= std::uint64_t{1} << (k & 63);
  }
  return out;
}

Coloring Coloring::from_words(std::vector<std::uint64_t> words, std::size_t n) {
  if (words.size() != word_count(n)) throw InvalidArgument("coloring: word count does not match length");
  Coloring out;
  out.words_ = std::move(words);
  out.size_ = n;
  if (n % 64 != 0) out.words_.back() &= (std::uint64_t{1} << (n % 64)) - 1;
  return out;
}

int Coloring::at(std::size_t i) const {
  if (i == 0 || i > size_) {
    throw InvalidArgument("coloring: index " + std::to_string(i) + " outside [1, " +
                          std::to_string(size_) + "]");
  }
  return color(i);
}

void Coloring::set(std::size_t i, int c) {
  if (i == 0 || i > size_) throw InvalidArgument("coloring: index out of range");
  if (c != 0 && c != 1) throw InvalidArgument("coloring: color must be 0 or 1");
  const std::size_t k = i - 1;
  const std::uint64_t mask = std::uint64_t{1} << (k & 63);
  if (c) {
    words_[k >> 6] |= mask;
  } else {
    words_[k >> 6] &= ~mask;
  }
}

std::string Coloring::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 1; i <= size_; ++i) {
    if (color(i)) out[i - 1] = '1';
  }
  return out;
}

std::vector<std::uint8_t> Coloring::to_colors() const {
  std::vector<std::uint8_t> out(size_);
  for (std::size_t i = 1; i <= size_; ++i) out[i - 1] = static_cast<std::uint8_t>(color(i));
  return out;
}

Coloring make_alternating(std::size_t l) {
  if (l == 0) throw InvalidArgument("make_alternating: length must be positive");
  Coloring out(l);
  for (std::size_t i = 1; i <= l; i += 2) out.set(i, 1);
  return out;
}

Coloring expand(const Coloring& s) {
  if (s.empty()) throw InvalidArgument("expand: empty coloring");
  if (s.size() > std::numeric_limits<std::size_t>::max() / 4) throw CapacityError("expand: length overflow");
  const std::size_t n = 4 * s.size();
  std::vector<std::uint64_t> out((n + 63) / 64, 0);
  const auto in = s.words();
  for (std::size_t w = 0; w < in.size(); ++w) {
    for (std::size_t q = 0; q < 4; ++q) {
      const std::size_t dst = 4 * w + q;
      if (dst >= out.size()) break;
      out[dst] = spread16(in[w] >> (16 * q));
    }
  }
  return Coloring::from_words(std::move(out), n);
}

Coloring expand_iter(const Coloring& s, unsigned r, std::uint64_t max_bits) {
  if (s.empty()) throw InvalidArgument("expand_iter: empty coloring");
  std::uint64_t len = s.size();
  for (unsigned i = 0; i < r; ++i) {
    if (len > max_bits / 4) {
      throw CapacityError("expand_iter: result exceeds capacity of " + std::to_string(max_bits) + " bits");
    }
    len *= 4;
  }
  Coloring out = s;
  for (unsigned i = 0; i < r; ++i) out = expand(out);
  return out;
}

std::uint64_t kappa_length(std::size_t l) {
  if (l == 0) return 0;
  const unsigned shift = 2 * static_cast<unsigned>(std::min<std::size_t>(l - 1, 40));
  if (shift >= 64 || static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(l))) + shift > 64) return 0;
  return static_cast<std::uint64_t>(l) << shift;
}

Coloring construct_kappa(std::size_t l, std::uint64_t max_bits) {
  if (l == 0) throw InvalidArgument("construct_kappa: l must be positive");
  const std::uint64_t len = kappa_length(l);
  if (len == 0 || len > max_bits) {
    throw CapacityError("construct_kappa: l = " + std::to_string(l) + " needs l*4^(l-1) bits, over the capacity of " +
                        std::to_string(max_bits));
  }
  return expand_iter(make_alternating(l), static_cast<unsigned>(l - 1), max_bits);
}

std::uint64_t pos(std::uint64_t i) {
  if (i == 0) throw InvalidArgument("pos: index must be positive");
  return (i - 1) / 4 + 1;
}

std::vector<std::uint8_t> periodic_coloring(std::size_t n, unsigned m) {
  if (m < 2) throw InvalidArgument("periodic_coloring: modulus must be at least 2");
  if (n == 0) throw InvalidArgument("periodic_coloring: length must be positive");
  if (m > 256) throw InvalidArgument("periodic_coloring: modulus must be at most 256");
  std::vector<std::uint8_t> out(n);
  for (std::size_t i = 1; i <= n; ++i) out[i - 1] = static_cast<std::uint8_t>(i % m);
  return out;
}

}  // namespace diffseq
