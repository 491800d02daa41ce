#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "diffseq/coloring.hpp"

namespace diffseq {

enum class ColoringEncoding { kText, kBinary };

// Text form: ASCII '0'/'1' characters, no separators, one trailing newline.
std::string to_text(const Coloring& s);
Coloring from_text(std::string_view text);

// Binary form: 8-byte little-endian length n, then ceil(n/8) bytes with
// bit i stored in byte (i-1)/8 at bit position (i-1)%8.
std::string to_binary(const Coloring& s);
Coloring from_binary(std::string_view bytes);

/// Text when every byte is '0', '1' or a line terminator, binary otherwise.
Coloring decode_coloring(std::string_view bytes);

void write_coloring(std::ostream& out, const Coloring& s, ColoringEncoding enc);

}  // namespace diffseq
