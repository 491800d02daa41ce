#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace diffseq {

/// The set D of allowed gaps between consecutive terms of a diffsequence.
///
/// Either the powers {b^0, b^1, ...} of a base b >= 2, or an explicit finite
/// set of positive integers. Values are immutable once constructed.
class GapSet {
 public:
  enum class Kind { kPowers, kExplicit };

  /// Powers of two, the default gap set.
  GapSet();

  static GapSet powers_of(std::uint64_t base);
  static GapSet explicit_set(const std::set<std::uint64_t>& members);

  /// Parses the form produced by describe(): "powers-of-B" or "explicit:a,b,c".
  /// "pow2" is accepted as shorthand for powers-of-2.
  static GapSet parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint64_t base() const { return base_; }
  bool is_powers_of_two() const { return kind_ == Kind::kPowers && base_ == 2; }

  bool contains(std::uint64_t g) const;

  /// Members <= limit in increasing order.
  std::vector<std::uint64_t> members_up_to(std::uint64_t limit) const;

  std::string describe() const;

  friend bool operator==(const GapSet&, const GapSet&) = default;

 private:
  GapSet(Kind kind, std::uint64_t base, std::vector<std::uint64_t> members);

  Kind kind_;
  std::uint64_t base_;
  std::vector<std::uint64_t> members_;  // sorted; explicit sets only
};

}  // namespace diffseq
