#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diffseq/coloring.hpp"
#include "diffseq/gap_set.hpp"

namespace diffseq {

/// An r-coloring of [n]; element [i-1] holds the color of i.
using ColorVector = std::vector<std::uint8_t>;

/// Length of the longest monochromatic D-diffsequence of an r-coloring.
std::uint64_t longest_mono_length(std::span<const std::uint8_t> colors,
                                  const GapSet& gaps);

/// True iff the coloring has no monochromatic D-diffsequence of length k.
bool avoids(std::span<const std::uint8_t> colors, const GapSet& gaps, std::uint64_t k);
bool avoids(const Coloring& s, const GapSet& gaps, std::uint64_t k);

/// Digits '0'..'9'; r is limited to 10 colors so certificates stay one
/// character per position.
std::string colors_to_string(std::span<const std::uint8_t> colors);
ColorVector colors_from_string(std::string_view text, unsigned r);

inline constexpr unsigned kMaxColors = 10;
inline constexpr std::uint64_t kDefaultMaxPositions = std::uint64_t{1} << 20;

struct SearchStats {
  std::uint64_t nodes = 0;      // successful extensions during the depth search
  std::uint64_t max_depth = 0;  // longest avoiding prefix seen

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct DeltaResult {
  std::string gaps;  // GapSet::describe()
  std::uint64_t k = 0;
  unsigned r = 2;
  std::uint64_t n_max = 0;
  // Delta(D, k; r) when determined; empty when every n <= n_max admits an
  // avoiding coloring.
  std::optional<std::uint64_t> value;
  // Avoiding coloring of [value - 1], or of [n_max] when the value exceeds it.
  ColorVector certificate;
  SearchStats stats;

  bool exceeds() const { return !value.has_value(); }

  friend bool operator==(const DeltaResult&, const DeltaResult&) = default;
};

struct DeltaOptions {
  // Defaults to 2^k - 1 for powers of two with r = 2; required otherwise.
  std::optional<std::uint64_t> n_max;
  unsigned jobs = 1;
  unsigned split_depth = 12;
  std::uint64_t max_positions = kDefaultMaxPositions;
};

/// The n_max a request runs with: options.n_max, else 2^k - 1 for powers of
/// two with r = 2. Throws InvalidArgument when neither applies.
std::uint64_t resolve_n_max(const GapSet& gaps, std::uint64_t k, unsigned r,
                            const DeltaOptions& options);

/// Exact Delta(D, k; r) by exhaustive backtracking.
///
/// Position 1 is fixed to color 1 (colors are interchangeable). The search
/// first determines the longest avoiding prefix length N, splitting the tree
/// into independent subtrees at split_depth; a second lexicographic pass then
/// extracts the smallest certificate of length N. The value and certificate do
/// not depend on the number of jobs.
DeltaResult delta_exact(const GapSet& gaps, std::uint64_t k, unsigned r,
                        const DeltaOptions& options = {});

/// Re-checks a result's certificate: right length and avoiding.
bool certificate_valid(const DeltaResult& result, const GapSet& gaps);

}  // namespace diffseq
