#pragma once

#include <string>
#include <string_view>

#include "diffseq/bounds.hpp"
#include "diffseq/engine.hpp"
#include "diffseq/exact_delta.hpp"

namespace diffseq {

// Compact single-line JSON renderings; the parsers accept anything the
// renderers produce and throw MalformedInput otherwise.

/// {"length": n, "hops": t, "witness": [...]}
std::string to_json(const PsiResult& r);
PsiResult psi_result_from_json(std::string_view text);

/// {"D": ..., "k": ..., "r": ..., "value": n | null, "n_max": ...,
///  "certificate": "0110...", "nodes": ..., "max_depth": ...}
std::string to_json(const DeltaResult& r);
DeltaResult delta_result_from_json(std::string_view text);

/// Exact integers are emitted as decimal strings; eq1/eq2 are null when they
/// overflow a double, with their log2 always present.
std::string to_json(const BoundReport& r);
BoundReport bound_report_from_json(std::string_view text);

/// JSON array of 1-based positions.
std::string witness_to_json(const DiffSeq& seq);

}  // namespace diffseq
