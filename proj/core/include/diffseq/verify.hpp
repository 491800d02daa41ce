#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "diffseq/coloring.hpp"

namespace diffseq {

/// SplitMix64 (Steele, Lea, Flood 2014). Fixed arithmetic on uint64_t, so
/// streams are identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  Coloring coloring(std::size_t n);

 private:
  std::uint64_t state_;
};

/// A (string, hop budget) input for the property suites.
struct Case {
  Coloring s;
  std::uint64_t h = 0;
};

/// Halving-based shrinking: repeatedly tries dropping the front or back half
/// of the string, then single characters, then lowering h, keeping any
/// candidate that still fails. Returns the smallest failing case reached.
Case shrink_case(Case failing, const std::function<bool(const Case&)>& fails);

struct SuiteReport {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> lines;  // per-item detail, deterministic
  std::string counterexample;      // shrunk, when violations > 0

  bool passed() const { return violations == 0; }
};

/// psi_{s^(1)}(h) <= psi_s(h+1) + 3h + 2 on random s with 1 <= |s| <= max_len,
/// h <= max_h.
SuiteReport run_lemma1_suite(std::uint64_t trials, std::uint64_t seed,
                             std::size_t max_len = 64, std::uint64_t max_h = 3);

/// verify_construction for l = 1..l_max.
SuiteReport run_construction_suite(std::uint64_t l_max);

/// Random strings are expanded; monochromatic witnesses of the expansion are
/// mapped back with reduce_positions and every structural flag is checked.
SuiteReport run_corollary_suite(std::uint64_t trials, std::uint64_t seed,
                                std::size_t max_len = 32);

}  // namespace diffseq
