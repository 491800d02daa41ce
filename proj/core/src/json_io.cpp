#include "diffseq/json_io.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "diffseq/error.hpp"

namespace diffseq {

using nlohmann::json;

namespace {

template <typename F>
auto parse_with(std::string_view text, const char* what, F&& build) {
  try {
    return build(json::parse(text));
  } catch (const json::exception& e) {
    throw MalformedInput(std::string(what) + ": " + e.what());
  }
}

json real_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double real_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

}  // namespace

std::string to_json(const PsiResult& r) {
  json j = {{"length", r.length}, {"hops", r.hops}, {"witness", r.witness}};
  return j.dump();
}

PsiResult psi_result_from_json(std::string_view text) {
  return parse_with(text, "psi result", [](const json& j) {
    PsiResult r;
    r.length = j.at("length").get<std::uint64_t>();
    r.hops = j.at("hops").get<std::uint64_t>();
    r.witness = j.at("witness").get<DiffSeq>();
    if (r.witness.size() != r.length) throw MalformedInput("psi result: witness length mismatch");
    return r;
  });
}

std::string to_json(const DeltaResult& r) {
  json j = {{"D", r.gaps},
            {"k", r.k},
            {"r", r.r},
            {"value", r.value ? json(*r.value) : json(nullptr)},
            {"n_max", r.n_max},
            {"certificate", colors_to_string(r.certificate)},
            {"nodes", r.stats.nodes},
            {"max_depth", r.stats.max_depth}};
  return j.dump();
}

DeltaResult delta_result_from_json(std::string_view text) {
  return parse_with(text, "delta result", [](const json& j) {
    DeltaResult r;
    r.gaps = j.at("D").get<std::string>();
    r.k = j.at("k").get<std::uint64_t>();
    r.r = j.at("r").get<unsigned>();
    if (r.r < 2 || r.r > kMaxColors) throw MalformedInput("delta result: r out of range");
    if (!j.at("value").is_null()) r.value = j.at("value").get<std::uint64_t>();
    r.n_max = j.value("n_max", r.value.value_or(0));
    r.certificate = colors_from_string(j.at("certificate").get<std::string>(), r.r);
    r.stats.nodes = j.value("nodes", std::uint64_t{0});
    r.stats.max_depth = j.value("max_depth", std::uint64_t{0});
    return r;
  });
}

std::string to_json(const BoundReport& r) {
  json j = {{"k", r.k},
            {"l", r.l},
            {"budget", r.budget},
            {"integer_bound", r.integer_bound.str()},
            {"eq2", real_or_null(r.eq2_value)},
            {"eq2_log2", r.eq2_log2},
            {"eq1", real_or_null(r.eq1_value)},
            {"eq1_log2", r.eq1_log2 ? json(*r.eq1_log2) : json(nullptr)},
            {"upper_2k_minus_1", r.upper_bound.str()}};
  return j.dump();
}

BoundReport bound_report_from_json(std::string_view text) {
  return parse_with(text, "bound report", [](const json& j) {
    BoundReport r;
    r.k = j.at("k").get<std::uint64_t>();
    r.l = j.at("l").get<std::uint64_t>();
    r.budget = j.at("budget").get<std::uint64_t>();
    try {
      r.integer_bound = BigInt(j.at("integer_bound").get<std::string>());
      r.upper_bound = BigInt(j.at("upper_2k_minus_1").get<std::string>());
    } catch (const std::runtime_error& e) {
      throw MalformedInput(std::string("bound report: bad integer: ") + e.what());
    }
    r.eq2_value = real_from(j.at("eq2"));
    r.eq2_log2 = j.at("eq2_log2").get<double>();
    r.eq1_value = real_from(j.at("eq1"));
    if (!j.at("eq1_log2").is_null()) r.eq1_log2 = j.at("eq1_log2").get<double>();
    return r;
  });
}

std::string witness_to_json(const DiffSeq& seq) { return json(seq).dump(); }

}  // namespace diffseq
