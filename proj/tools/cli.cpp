#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "diffseq/bounds.hpp"
#include "diffseq/delta_cache.hpp"
#include "diffseq/engine.hpp"
#include "diffseq/error.hpp"
#include "diffseq/json_io.hpp"
#include "diffseq/serialize.hpp"
#include "diffseq/verify.hpp"

namespace diffseq::cli {

namespace {

enum class Format { kText, kJson, kCsv };

struct RunConfig {
  Format format = Format::kText;
  std::uint64_t seed = 42;
  std::optional<std::string> cache;
  unsigned jobs = 1;
  std::optional<std::string> out_path;
  std::uint64_t max_bits = kDefaultCapacityBits;
};

struct ConstructArgs {
  std::uint64_t l = 0;
  std::string encoding = "text";
};

struct PsiArgs {
  std::string coloring_path;
  std::uint64_t h = 0;
  std::string gaps = "powers-of-2";
};

struct DeltaArgs {
  std::uint64_t k = 0;
  unsigned r = 2;
  std::optional<std::uint64_t> n_max;
  std::string gaps = "powers-of-2";
  unsigned split_depth = 12;
};

struct BoundsArgs {
  std::uint64_t k_min = 0;
  std::uint64_t k_max = 0;
};

struct VerifyArgs {
  std::string target;
  std::uint64_t trials = 1000;
  std::uint64_t l_max = 6;
};

// A violated property; carries the report already rendered.
struct Violation {
  std::string rendered;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join_positions(const DiffSeq& seq, char sep) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(seq[i]);
  }
  return out;
}

std::string cmd_construct(const RunConfig& cfg, const ConstructArgs& a) {
  if (a.l == 0) throw UsageError("construct: l must be at least 1");
  const Coloring kappa = construct_kappa(a.l, cfg.max_bits);
  const auto enc = a.encoding == "binary" ? ColoringEncoding::kBinary : ColoringEncoding::kText;
  if (!cfg.out_path) {
    std::ostringstream data;
    write_coloring(data, kappa, enc);
    return data.str();
  }
  {
    std::ofstream file(*cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("construct: cannot write " + *cfg.out_path);
    write_coloring(file, kappa, enc);
  }
  switch (cfg.format) {
    case Format::kJson:
      return nlohmann::json{{"l", a.l}, {"length", kappa.size()}, {"encoding", a.encoding}}.dump() + "\n";
    case Format::kCsv:
      return "l,length,encoding\n" + std::to_string(a.l) + "," + std::to_string(kappa.size()) + "," + a.encoding + "\n";
    case Format::kText:
      break;
  }
  return "length " + std::to_string(kappa.size()) + "\n";
}

std::string cmd_psi(const RunConfig& cfg, const PsiArgs& a) {
  const Coloring s = decode_coloring(read_file(a.coloring_path));
  const PsiResult r = psi(s, GapSet::parse(a.gaps), a.h);
  switch (cfg.format) {
    case Format::kJson:
      return to_json(r) + "\n";
    case Format::kCsv:
      return "length,hops,witness\n" + std::to_string(r.length) + "," + std::to_string(r.hops) + "," +
             join_positions(r.witness, ' ') + "\n";
    case Format::kText:
      break;
  }
  return "length " + std::to_string(r.length) + "\nhops " + std::to_string(r.hops) + "\nwitness " +
         join_positions(r.witness, ' ') + "\n";
}

std::string cmd_delta(const RunConfig& cfg, const DeltaArgs& a, std::ostream& err) {
  const GapSet gaps = GapSet::parse(a.gaps);
  DeltaOptions opt;
  opt.n_max = a.n_max;
  opt.jobs = cfg.jobs;
  opt.split_depth = a.split_depth;
  std::vector<std::string> diagnostics;
  std::optional<std::filesystem::path> cache;
  if (cfg.cache) cache = *cfg.cache;
  const DeltaResult r = delta_table(gaps, a.k, a.k, a.r, opt, cache, &diagnostics).front();
  for (const auto& d : diagnostics) err << "warning: " << d << "\n";

  const std::string cert = colors_to_string(r.certificate);
  std::string rendered;
  switch (cfg.format) {
    case Format::kJson:
      rendered = to_json(r) + "\n";
      break;
    case Format::kCsv:
      rendered = "D,k,r,value,n_max,certificate,nodes,max_depth\n" + r.gaps + "," + std::to_string(r.k) + "," +
                 std::to_string(r.r) + "," + (r.value ? std::to_string(*r.value) : std::string(">n_max")) + "," +
                 std::to_string(r.n_max) + "," + cert + "," + std::to_string(r.stats.nodes) + "," +
                 std::to_string(r.stats.max_depth) + "\n";
      break;
    case Format::kText:
      rendered = "D " + r.gaps + "\nk " + std::to_string(r.k) + "\nr " + std::to_string(r.r) + "\nvalue " +
                 (r.value ? std::to_string(*r.value) : "exceeds n_max = " + std::to_string(r.n_max)) +
                 "\ncertificate " + cert + "\nnodes " + std::to_string(r.stats.nodes) + "\nmax_depth " +
                 std::to_string(r.stats.max_depth) + "\n";
      break;
  }
  if (!certificate_valid(r, gaps)) throw Violation{rendered + "certificate failed re-validation\n"};
  return rendered;
}

std::string cmd_bounds(const RunConfig& cfg, const BoundsArgs& a) {
  if (a.k_min < 2) throw UsageError("bounds: k-min must be at least 2");
  if (a.k_min > a.k_max) throw UsageError("bounds: k-min exceeds k-max");
  DeltaCache cache = cfg.cache ? DeltaCache::load(*cfg.cache) : DeltaCache();
  std::vector<BoundRow> rows;
  for (std::uint64_t k = a.k_min; k <= a.k_max; ++k) {
    BoundRow row{new_bound(k), std::nullopt};
    if (auto hit = cache.find(GapSet(), k, 2); hit && hit->value) row.exact_delta = hit->value;
    rows.push_back(std::move(row));
  }
  const TableFormat tf = cfg.format == Format::kJson  ? TableFormat::kJson
                         : cfg.format == Format::kCsv ? TableFormat::kCsv
                                                      : TableFormat::kText;
  return render_bounds(rows, tf);
}

std::string render_suite(const RunConfig& cfg, const SuiteReport& r) {
  if (cfg.format == Format::kJson) {
    nlohmann::json j{{"suite", r.name},
                     {"trials", r.trials},
                     {"violations", r.violations},
                     {"passed", r.passed()},
                     {"lines", r.lines}};
    if (!r.passed()) j["counterexample"] = r.counterexample;
    return j.dump() + "\n";
  }
  if (cfg.format == Format::kCsv) {
    return "suite,trials,violations,passed\n" + r.name + "," + std::to_string(r.trials) + "," +
           std::to_string(r.violations) + "," + (r.passed() ? "true" : "false") + "\n";
  }
  std::string out;
  for (const auto& line : r.lines) out += line + "\n";
  out += r.name + ": " + std::to_string(r.trials) + " trials, " + std::to_string(r.violations) + " violations, " +
         (r.passed() ? "PASS" : "FAIL") + "\n";
  if (!r.passed()) out += "counterexample: " + r.counterexample + "\n";
  return out;
}

std::string cmd_verify(const RunConfig& cfg, const VerifyArgs& a) {
  if (a.trials == 0) throw UsageError("verify: trials must be at least 1");
  SuiteReport report;
  if (a.target == "lemma1") {
    report = run_lemma1_suite(a.trials, cfg.seed);
  } else if (a.target == "construction") {
    report = run_construction_suite(a.l_max);
  } else {
    report = run_corollary_suite(a.trials, cfg.seed);
  }
  std::string rendered = render_suite(cfg, report);
  if (!report.passed()) throw Violation{std::move(rendered)};
  return rendered;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out, bool to_file) {
  if (to_file && cfg.out_path) {
    std::ofstream file(*cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + *cfg.out_path);
    file << text;
    return;
  }
  out << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diffsequence colorings: construction, longest sequences, exact Delta, bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_flag("-h,--help", "Print help");

  RunConfig cfg;
  const std::map<std::string, Format> formats{{"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  app.add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description("{text,json,csv}"));
  app.add_option("--seed", cfg.seed, "Seed for randomized verification");
  app.add_option("--cache", cfg.cache, "JSON-lines cache of exact Delta values");
  app.add_option("--jobs", cfg.jobs, "Worker threads for the exact search")->check(CLI::Range(1u, 1024u));
  app.add_option("--out", cfg.out_path, "Write output to this file");
  app.add_option("--max-bits", cfg.max_bits, "Capacity limit for constructed colorings");

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build kappa(l) = expand^(l-1)(1010...)");
  construct_cmd->add_option("l,--l", construct.l, "Construction parameter l")->required();
  construct_cmd->add_option("--encoding", construct.encoding, "Coloring file encoding")
      ->check(CLI::IsMember({"text", "binary"}));

  PsiArgs psi_args;
  auto* psi_cmd = app.add_subcommand("psi", "Longest diffsequence with at most h hops");
  psi_cmd->add_option("coloring,--coloring", psi_args.coloring_path, "Coloring file (text or binary)")->required();
  psi_cmd->set_help_flag("--help", "Print help");
  psi_cmd->add_option("--h", psi_args.h, "Hop budget");
  psi_cmd->add_option("--gaps", psi_args.gaps, "Gap set: powers-of-B or explicit:a,b,...");

  DeltaArgs delta;
  auto* delta_cmd = app.add_subcommand("delta", "Exact Delta(D, k; r) by exhaustive search");
  delta_cmd->add_option("k,--k", delta.k, "Target length")->required()->check(CLI::PositiveNumber);
  delta_cmd->add_option("--r", delta.r, "Number of colors")->check(CLI::Range(2u, 10u));
  delta_cmd->add_option("--n-max", delta.n_max, "Largest n to search (default 2^k - 1 for powers of two, r = 2)");
  delta_cmd->add_option("--gaps", delta.gaps, "Gap set: powers-of-B or explicit:a,b,...");
  delta_cmd->add_option("--split-depth", delta.split_depth, "Depth at which the search splits into tasks");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Lower and upper bounds on Delta(D, k)");
  bounds_cmd->add_option("--k-min", bounds.k_min)->required();
  bounds_cmd->add_option("--k-max", bounds.k_max)->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Seeded property suites");
  verify_cmd->add_option("target,--target", verify.target)
      ->required()
      ->check(CLI::IsMember({"lemma1", "construction", "corollaries"}));
  verify_cmd->add_option("--trials", verify.trials, "Random trials");
  verify_cmd->add_option("--l-max", verify.l_max, "Largest l for the construction suite");

  std::vector<std::string> argv_storage{"diffseq"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*construct_cmd) {
      emit(cfg, cmd_construct(cfg, construct), out, false);
    } else if (*psi_cmd) {
      emit(cfg, cmd_psi(cfg, psi_args), out, true);
    } else if (*delta_cmd) {
      emit(cfg, cmd_delta(cfg, delta, err), out, true);
    } else if (*bounds_cmd) {
      emit(cfg, cmd_bounds(cfg, bounds), out, true);
    } else if (*verify_cmd) {
      emit(cfg, cmd_verify(cfg, verify), out, true);
    }
  } catch (const Violation& v) {
    emit(cfg, v.rendered, out, true);
    return kExitViolation;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitOk;
}

}  // namespace diffseq::cli
