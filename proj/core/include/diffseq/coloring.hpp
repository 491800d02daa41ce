#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diffseq {

/// Default ceiling on the number of bits a constructed coloring may hold.
inline constexpr std::uint64_t kDefaultCapacityBits = std::uint64_t{1} << 28;

/// A 2-coloring of [n], stored as a packed bit vector.
///
/// All public indexing is 1-based: color(i) is the color of the integer i.
/// Bit i lives in word (i-1)/64 at bit (i-1)%64.
class Coloring {
 public:
  Coloring() = default;

  /// n positions, all colored 0.
  explicit Coloring(std::size_t n);

  /// Parses a string of '0'/'1' characters. Any other character is rejected.
  static Coloring from_string(std::string_view bits);

  /// Adopts packed words; bits past n in the last word are cleared.
  static Coloring from_words(std::vector<std::uint64_t> words, std::size_t n);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// Color of integer i, 1 <= i <= size(). Unchecked.
  int color(std::size_t i) const {
    const std::size_t k = i - 1;
    return static_cast<int>((words_[k >> 6] >> (k & 63)) & 1u);
  }

  /// Bounds-checked variant of color().
  int at(std::size_t i) const;

  void set(std::size_t i, int c);

  std::string to_string() const;
  std::span<const std::uint64_t> words() const { return words_; }

  /// Colors as a plain vector, element [i-1] holding color(i).
  std::vector<std::uint8_t> to_colors() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

/// 1010...: position i gets i mod 2.
Coloring make_alternating(std::size_t l);

/// Replaces each 0 by 0011 and each 1 by 1100.
Coloring expand(const Coloring& s);

/// r-fold expansion; expand_iter(s, 0) == s. Throws CapacityError when
/// |s| * 4^r exceeds max_bits.
Coloring expand_iter(const Coloring& s, unsigned r,
                     std::uint64_t max_bits = kDefaultCapacityBits);

/// The construction kappa(l) = expand_iter(make_alternating(l), l - 1),
/// a coloring of length l * 4^(l-1).
Coloring construct_kappa(std::size_t l,
                         std::uint64_t max_bits = kDefaultCapacityBits);

/// Length of kappa(l), or 0 when it does not fit in 64 bits.
std::uint64_t kappa_length(std::size_t l);

/// Block index ceil(i/4) of bit i of an expanded string.
std::uint64_t pos(std::uint64_t i);

/// m-ary coloring of [n] with position i colored i mod m.
/// Element [i-1] holds the color of i.
std::vector<std::uint8_t> periodic_coloring(std::size_t n, unsigned m);

}  // namespace diffseq
