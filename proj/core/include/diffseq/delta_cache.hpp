#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "diffseq/exact_delta.hpp"

namespace diffseq {

/// JSON-lines store of computed Delta values keyed by (D, k, r).
///
/// One record per line:
///   {"D": "powers-of-2", "k": 3, "r": 2, "value": 7, "certificate": "100110", ...}
/// Records are untrusted: lookups re-validate the certificate and drop the
/// entry when it fails.
class DeltaCache {
 public:
  DeltaCache() = default;

  /// Loads path if it exists. Lines that fail to parse are skipped and
  /// reported through diagnostics().
  static DeltaCache load(const std::filesystem::path& path);

  /// A cached result usable for a request with the given n_max: a determined
  /// value, or an "exceeds" record whose n_max is at least the request.
  std::optional<DeltaResult> find(const GapSet& gaps, std::uint64_t k, unsigned r,
                                  std::optional<std::uint64_t> n_max = std::nullopt);

  void store(const DeltaResult& result);

  /// Writes every record, sorted by key.
  void save(const std::filesystem::path& path) const;

  const std::vector<std::string>& diagnostics() const { return diagnostics_; }
  std::size_t size() const { return records_.size(); }

 private:
  using Key = std::tuple<std::string, std::uint64_t, unsigned>;
  std::map<Key, DeltaResult> records_;
  std::vector<std::string> diagnostics_;
};

/// Computes Delta(D, k; r) for k in [k_min, k_max], reading and rewriting the
/// cache at cache_path when one is given. Problems with the cache are
/// appended to diagnostics when non-null.
std::vector<DeltaResult> delta_table(const GapSet& gaps, std::uint64_t k_min,
                                     std::uint64_t k_max, unsigned r,
                                     const DeltaOptions& options,
                                     const std::optional<std::filesystem::path>& cache_path,
                                     std::vector<std::string>* diagnostics = nullptr);

}  // namespace diffseq
