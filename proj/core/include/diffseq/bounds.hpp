#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "diffseq/coloring.hpp"

namespace diffseq {

using BigInt = boost::multiprecision::cpp_int;

/// (3l^2 - 3l + 2) / 2, the longest monochromatic diffsequence kappa(l) can
/// contain.
std::uint64_t budget(std::uint64_t l);

/// Largest l >= 1 with budget(l) < k. Requires k >= 2.
std::uint64_t choose_l(std::uint64_t k);

/// floor(sqrt(2(k-1)/3 + 1/4) + 1/2) evaluated in floating point. Agrees with
/// choose_l except when k is itself a budget value, where it is one too large.
std::uint64_t choose_l_closed_form(std::uint64_t k);

/// l * 4^(l-1), the length of kappa(l).
BigInt construction_length(std::uint64_t l);

/// 2^k - 1.
BigInt upper_bound(std::uint64_t k);

/// Closed-form lower bound (sqrt((8k-5)/12) - 1/2) * 2^(sqrt((8k-5)/3) - 3).
/// Overflows to +inf for very large k; eq2_log2 stays finite.
double eq2_value(std::uint64_t k);
double eq2_log2(std::uint64_t k);

/// Clifton's bound 2^sqrt(2k) ((sqrt2 - 1)k/8 - sqrt(k)/8) + sqrt(k)/2.
double clifton_bound(std::uint64_t k);
/// log2 of clifton_bound, or nullopt when the bound is not positive.
std::optional<double> clifton_log2(std::uint64_t k);

/// log2(l * 4^(l-1)) with l = choose_l(k).
double integer_bound_log2(std::uint64_t k);

struct BoundReport {
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  std::uint64_t budget = 0;
  BigInt integer_bound;  // l * 4^(l-1)
  double eq2_value = 0;
  double eq2_log2 = 0;
  double eq1_value = 0;
  std::optional<double> eq1_log2;
  BigInt upper_bound;  // 2^k - 1

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Fills every column for k >= 2. Throws InvalidArgument for k < 2.
BoundReport new_bound(std::uint64_t k);

struct ConstructionCheck {
  std::uint64_t l = 0;
  std::uint64_t length = 0;  // |kappa(l)|
  std::uint64_t psi0 = 0;    // longest monochromatic diffsequence in kappa(l)
  std::uint64_t budget = 0;
  bool holds = false;        // psi0 <= budget
  std::uint64_t implied_bound_k = 0;  // budget + 1
};

/// Builds kappa(l) and measures its longest monochromatic diffsequence.
/// CapacityError propagates from construct_kappa.
ConstructionCheck verify_construction(std::uint64_t l,
                                      std::uint64_t max_bits = kDefaultCapacityBits);

/// Smallest K <= k_max such that eq2 > eq1 for every K <= k <= k_max, or
/// nullopt when eq2 does not exceed eq1 at k_max.
std::optional<std::uint64_t> eq2_dominance_start(std::uint64_t k_max);

/// One output row of the bounds table.
struct BoundRow {
  BoundReport report;
  std::optional<std::uint64_t> exact_delta;
};

enum class TableFormat { kText, kCsv, kJson };

/// Columns: k, l, integer_bound, eq2, eq1, upper_2k_minus_1, exact_delta.
/// Reals carry 4 significant figures in text and CSV, full precision in JSON.
std::string render_bounds(const std::vector<BoundRow>& rows, TableFormat format);

/// 4 significant figures; values beyond double range are rendered from log2.
std::string format_sig4(double value, std::optional<double> log2_value = std::nullopt);

}  // namespace diffseq
