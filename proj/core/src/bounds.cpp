#include "diffseq/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "diffseq/engine.hpp"
#include "diffseq/error.hpp"
#include "diffseq/gap_set.hpp"

namespace diffseq {

std::uint64_t budget(std::uint64_t l) {
  if (l == 0) throw InvalidArgument("budget: l must be positive");
  if (l > (std::uint64_t{1} << 31)) throw CapacityError("budget: l too large");
  // one of l, l-1 is even, so l(l-1)/2 is exact
  const std::uint64_t pairs = (l % 2 == 0) ? (l / 2) * (l - 1) : l * ((l - 1) / 2);
  return 3 * pairs + 1;
}

std::uint64_t choose_l_closed_form(std::uint64_t k) {
  const double kd = static_cast<double>(k);
  return static_cast<std::uint64_t>(std::floor(std::sqrt(2.0 * (kd - 1.0) / 3.0 + 0.25) + 0.5));
}

std::uint64_t choose_l(std::uint64_t k) {
  if (k < 2) throw InvalidArgument("choose_l: k must be at least 2");
  std::uint64_t l = std::max<std::uint64_t>(1, choose_l_closed_form(k));
  while (l > 1 && budget(l) >= k) --l;
  while (budget(l + 1) < k) ++l;
  return l;
}

BigInt construction_length(std::uint64_t l) {
  if (l == 0) throw InvalidArgument("construction_length: l must be positive");
  return BigInt(l) << static_cast<unsigned>(2 * (l - 1));
}

BigInt upper_bound(std::uint64_t k) {
  if (k == 0) throw InvalidArgument("upper_bound: k must be positive");
  return (BigInt(1) << static_cast<unsigned>(k)) - 1;
}

double eq2_value(std::uint64_t k) {
  const double m = 8.0 * static_cast<double>(k) - 5.0;
  return (std::sqrt(m / 12.0) - 0.5) * std::exp2(std::sqrt(m / 3.0) - 3.0);
}

double eq2_log2(std::uint64_t k) {
  const double m = 8.0 * static_cast<double>(k) - 5.0;
  return std::log2(std::sqrt(m / 12.0) - 0.5) + (std::sqrt(m / 3.0) - 3.0);
}

double clifton_bound(std::uint64_t k) {
  const double kd = static_cast<double>(k);
  const double root = std::sqrt(kd);
  return std::exp2(std::sqrt(2.0 * kd)) * ((std::sqrt(2.0) - 1.0) * kd / 8.0 - root / 8.0) + root / 2.0;
}

std::optional<double> clifton_log2(std::uint64_t k) {
  const double value = clifton_bound(k);
  if (std::isfinite(value)) {
    if (value <= 0) return std::nullopt;
    return std::log2(value);
  }
  const double kd = static_cast<double>(k);
  const double bracket = (std::sqrt(2.0) - 1.0) * kd / 8.0 - std::sqrt(kd) / 8.0;
  // the additive sqrt(k)/2 is far below double resolution here
  return std::sqrt(2.0 * kd) + std::log2(bracket);
}

double integer_bound_log2(std::uint64_t k) {
  const std::uint64_t l = choose_l(k);
  return std::log2(static_cast<double>(l)) + static_cast<double>(2 * (l - 1));
}

BoundReport new_bound(std::uint64_t k) {
  if (k < 2) throw InvalidArgument("new_bound: k must be at least 2");
  BoundReport r;
  r.k = k;
  r.l = choose_l(k);
  r.budget = budget(r.l);
  r.integer_bound = construction_length(r.l);
  r.eq2_value = eq2_value(k);
  r.eq2_log2 = eq2_log2(k);
  r.eq1_value = clifton_bound(k);
  r.eq1_log2 = clifton_log2(k);
  r.upper_bound = upper_bound(k);
  return r;
}

ConstructionCheck verify_construction(std::uint64_t l, std::uint64_t max_bits) {
  const Coloring kappa = construct_kappa(l, max_bits);
  ConstructionCheck out;
  out.l = l;
  out.length = kappa.size();
  out.psi0 = longest_mono(kappa, GapSet()).length;
  out.budget = budget(l);
  out.holds = out.psi0 <= out.budget;
  out.implied_bound_k = out.budget + 1;
  return out;
}

std::optional<std::uint64_t> eq2_dominance_start(std::uint64_t k_max) {
  std::optional<std::uint64_t> start;
  for (std::uint64_t k = k_max; k >= 2; --k) {
    const auto eq1 = clifton_log2(k);
    if (eq1 && !(eq2_log2(k) > *eq1)) break;
    start = k;
  }
  return start;
}

std::string format_sig4(double value, std::optional<double> log2_value) {
  char buf[64];
  if (std::isfinite(value)) {
    std::snprintf(buf, sizeof buf, "%.4g", value);
    return buf;
  }
  if (!log2_value || !std::isfinite(*log2_value)) return value > 0 ? "inf" : "-inf";
  const double log10_value = *log2_value * std::log10(2.0);
  auto exponent = static_cast<long long>(std::floor(log10_value));
  double mantissa = std::pow(10.0, log10_value - static_cast<double>(exponent));
  mantissa = std::round(mantissa * 1000.0) / 1000.0;
  if (mantissa >= 10.0) {
    mantissa /= 10.0;
    ++exponent;
  }
  std::snprintf(buf, sizeof buf, "%.4ge+%lld", mantissa, exponent);
  return buf;
}

std::string render_bounds(const std::vector<BoundRow>& rows, TableFormat format) {
  if (format == TableFormat::kJson) {
    nlohmann::json out = nlohmann::json::array();
    for (const BoundRow& row : rows) {
      const BoundReport& r = row.report;
      auto real = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
      out.push_back({{"k", r.k},
                     {"l", r.l},
                     {"budget", r.budget},
                     {"integer_bound", r.integer_bound.str()},
                     {"eq2", real(r.eq2_value)},
                     {"eq2_log2", r.eq2_log2},
                     {"eq1", real(r.eq1_value)},
                     {"eq1_log2", r.eq1_log2 ? nlohmann::json(*r.eq1_log2) : nlohmann::json(nullptr)},
                     {"upper_2k_minus_1", r.upper_bound.str()},
                     {"exact_delta", row.exact_delta ? nlohmann::json(*row.exact_delta) : nlohmann::json(nullptr)}});
    }
    return out.dump() + "\n";
  }

  const std::vector<std::string> header{"k", "l", "integer_bound", "eq2", "eq1", "upper_2k_minus_1", "exact_delta"};
  std::vector<std::vector<std::string>> cells;
  for (const BoundRow& row : rows) {
    const BoundReport& r = row.report;
    cells.push_back({std::to_string(r.k), std::to_string(r.l), r.integer_bound.str(),
                     format_sig4(r.eq2_value, r.eq2_log2), format_sig4(r.eq1_value, r.eq1_log2),
                     r.upper_bound.str(), row.exact_delta ? std::to_string(*row.exact_delta) : ""});
  }

  std::string out;
  if (format == TableFormat::kCsv) {
    auto emit = [&](const std::vector<std::string>& line) {
      for (std::size_t c = 0; c < line.size(); ++c) {
        if (c) out += ',';
        out += line[c];
      }
      out += '\n';
    };
    emit(header);
    for (const auto& line : cells) emit(line);
    return out;
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) text += "  ";
      text += std::string(width[c] - line[c].size(), ' ') + line[c];
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out += text + '\n';
  };
  emit(header);
  for (const auto& line : cells) emit(line);
  return out;
}

}  // namespace diffseq
