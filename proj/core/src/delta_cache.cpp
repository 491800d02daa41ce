#include "diffseq/delta_cache.hpp"

#include <fstream>
#include <sstream>

#include "diffseq/error.hpp"
#include "diffseq/json_io.hpp"

namespace diffseq {

DeltaCache DeltaCache::load(const std::filesystem::path& path) {
  DeltaCache cache;
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return cache;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    cache.diagnostics_.push_back("cache " + path.string() + ": unreadable, recomputing");
    return cache;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      DeltaResult r = delta_result_from_json(line);
      cache.records_[{r.gaps, r.k, r.r}] = std::move(r);
    } catch (const std::exception& e) {
      cache.diagnostics_.push_back("cache " + path.string() + " line " + std::to_string(line_no) +
                                   ": " + e.what());
    }
  }
  return cache;
}

std::optional<DeltaResult> DeltaCache::find(const GapSet& gaps, std::uint64_t k, unsigned r,
                                            std::optional<std::uint64_t> n_max) {
  const Key key{gaps.describe(), k, r};
  auto it = records_.find(key);
  if (it == records_.end()) return std::nullopt;

  const DeltaResult& rec = it->second;
  bool valid = false;
  try {
    valid = certificate_valid(rec, gaps);
  } catch (const std::exception&) {
    valid = false;
  }
  if (!valid) {
    diagnostics_.push_back("cache entry (" + rec.gaps + ", k=" + std::to_string(k) + ", r=" +
                           std::to_string(r) + "): certificate failed validation, recomputing");
    records_.erase(it);
    return std::nullopt;
  }

  DeltaResult out = rec;
  if (n_max) {
    if (rec.value) {
      if (*rec.value > *n_max) return std::nullopt;
    } else if (rec.n_max != *n_max) {
      return std::nullopt;
    }
    out.n_max = *n_max;
  }
  return out;
}

void DeltaCache::store(const DeltaResult& result) { records_[{result.gaps, result.k, result.r}] = result; }

void DeltaCache::save(const std::filesystem::path& path) const {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
    for (const auto& [key, rec] : records_) out << to_json(rec) << '\n';
    if (!out) throw std::runtime_error("cache: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::vector<DeltaResult> delta_table(const GapSet& gaps, std::uint64_t k_min, std::uint64_t k_max,
                                     unsigned r, const DeltaOptions& options,
                                     const std::optional<std::filesystem::path>& cache_path,
                                     std::vector<std::string>* diagnostics) {
  if (k_min == 0 || k_min > k_max) throw InvalidArgument("delta_table: need 1 <= k_min <= k_max");
  DeltaCache cache = cache_path ? DeltaCache::load(*cache_path) : DeltaCache();

  std::vector<DeltaResult> rows;
  bool dirty = false;
  for (std::uint64_t k = k_min; k <= k_max; ++k) {
    const std::uint64_t n_max = resolve_n_max(gaps, k, r, options);
    if (auto hit = cache.find(gaps, k, r, n_max)) {
      rows.push_back(std::move(*hit));
      continue;
    }
    DeltaOptions run = options;
    run.n_max = n_max;
    rows.push_back(delta_exact(gaps, k, r, run));
    cache.store(rows.back());
    dirty = true;
  }
  if (!cache.diagnostics().empty()) dirty = true;
  if (cache_path && dirty) cache.save(*cache_path);
  if (diagnostics) {
    diagnostics->insert(diagnostics->end(), cache.diagnostics().begin(), cache.diagnostics().end());
  }
  return rows;
}

}  // namespace diffseq
