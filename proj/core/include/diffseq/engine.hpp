#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "diffseq/coloring.hpp"
#include "diffseq/gap_set.hpp"

namespace diffseq {

/// Strictly increasing 1-based positions a_1 < ... < a_k.
using DiffSeq = std::vector<std::uint64_t>;

/// Indices j in [k-1] (1-based) where a_{j+1} - a_j = 1 and the color changes.
using HopSet = std::vector<std::uint64_t>;

/// Default size ceiling for the exhaustive oracle.
inline constexpr std::size_t kDefaultOracleLimit = 24;

struct PsiResult {
  std::uint64_t length = 0;
  std::uint64_t hops = 0;  // hops used by the witness
  DiffSeq witness;

  friend bool operator==(const PsiResult&, const PsiResult&) = default;
};

enum class Rejection {
  kNone,
  kGapNotInSet,          // some a_{j+1} - a_j is not in D
  kColorChangeAtLongGap, // color changes across a gap other than 1
  kTooManyHops,          // more than h hops
};

struct Admissibility {
  bool admissible = false;
  HopSet hops;
  Rejection reason = Rejection::kNone;
  std::uint64_t index = 0;  // first offending j, when rejected for a gap

  explicit operator bool() const { return admissible; }
};

/// Checks whether positions form a member of Psi_s(h): every gap lies in D,
/// every color change happens across a unit gap, and there are at most h
/// such changes. Throws InvalidArgument when positions are not strictly
/// increasing or fall outside [1, |s|].
Admissibility validate_diffseq(const Coloring& s, const GapSet& gaps,
                               std::span<const std::uint64_t> positions,
                               std::uint64_t h);

/// Longest monochromatic D-diffsequence (psi_s(0)).
PsiResult longest_mono(const Coloring& s, const GapSet& gaps);

/// Longest diffsequence with at most h hops.
///
/// Runs a suffix DP over (position, remaining hops) in O(n * (h+1) * |D<=n|)
/// time and O(n * (h+1)) space. h is capped at |s| - 1. The witness is the
/// lexicographically smallest position sequence of maximal length.
PsiResult psi(const Coloring& s, const GapSet& gaps, std::uint64_t h);

/// Exhaustive depth-first search over all admissible sequences. Independent of
/// psi() and used to cross-check it. Throws CapacityError when |s| > limit.
PsiResult brute_longest(const Coloring& s, const GapSet& gaps, std::uint64_t h,
                        std::size_t limit = kDefaultOracleLimit);

/// Result of mapping a monochromatic diffsequence of s^(1) back onto s.
struct PosReduction {
  std::vector<std::uint64_t> positions;  // pos(a_i), duplicates kept
  std::vector<int> pos_colors;           // s_{pos(a_i)}
  int color = 0;                         // c, the color in s^(1)
  std::size_t split = 0;                 // m: longest prefix colored 1 - c
  std::size_t distinct = 0;              // number of distinct pos values

  bool split_holds = false;     // pos-colors are (1-c)^m c^(k-m)
  bool distinct_holds = false;  // constant pos-colors => distinct >= k - 1
  bool locality_holds = false;  // color change in s => pos step 1, (1-c, c)

  bool all_hold() const { return split_holds && distinct_holds && locality_holds; }
};

/// Requires s1 == expand(s) and seq a nonempty monochromatic
/// powers-of-two diffsequence of s1; throws InvalidArgument otherwise.
PosReduction reduce_positions(const Coloring& s, const Coloring& s1,
                              std::span<const std::uint64_t> seq);

struct Lemma1Check {
  std::uint64_t lhs = 0;  // psi_{s^(1)}(h)
  std::uint64_t rhs = 0;  // psi_s(h+1) + 3h + 2
  bool holds = false;
};

/// Evaluates both sides of psi_{s^(1)}(h) <= psi_s(h+1) + 3h + 2.
/// The inequality is only claimed for powers of two; other gap sets are
/// rejected with InvalidArgument.
Lemma1Check verify_lemma1(const Coloring& s, const GapSet& gaps, std::uint64_t h);

}  // namespace diffseq
