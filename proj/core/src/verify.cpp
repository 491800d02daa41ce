#include "diffseq/verify.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

#include "diffseq/bounds.hpp"
#include "diffseq/engine.hpp"

namespace diffseq {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // reject the top partial bucket so every residue is equally likely
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

Coloring SplitMix64::coloring(std::size_t n) {
  std::vector<std::uint64_t> words((n + 63) / 64);
  for (auto& w : words) w = next();
  return Coloring::from_words(std::move(words), n);
}

namespace {

Coloring slice(const Coloring& s, std::size_t first, std::size_t len) {
  Coloring out(len);
  for (std::size_t i = 0; i < len; ++i) out.set(i + 1, s.color(first + i));
  return out;
}

Coloring without(const Coloring& s, std::size_t drop) {
  Coloring out(s.size() - 1);
  for (std::size_t i = 1, o = 1; i <= s.size(); ++i) {
    if (i != drop) out.set(o++, s.color(i));
  }
  return out;
}

std::string describe(const Case& c) { return "s=" + c.s.to_string() + " h=" + std::to_string(c.h); }

}  // namespace

Case shrink_case(Case failing, const std::function<bool(const Case&)>& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<Case> candidates;
    const std::size_t n = failing.s.size();
    if (n >= 2) {
      const std::size_t half = n / 2;
      candidates.push_back({slice(failing.s, 1, half), failing.h});
      candidates.push_back({slice(failing.s, half + 1, n - half), failing.h});
      candidates.push_back({slice(failing.s, 1, n - half), failing.h});
      for (std::size_t i = 1; i <= n; ++i) candidates.push_back({without(failing.s, i), failing.h});
    }
    if (failing.h > 0) {
      candidates.push_back({failing.s, failing.h / 2});
      candidates.push_back({failing.s, failing.h - 1});
    }
    for (Case& c : candidates) {
      if (fails(c)) {
        failing = std::move(c);
        progress = true;
        break;
      }
    }
  }
  return failing;
}

SuiteReport run_lemma1_suite(std::uint64_t trials, std::uint64_t seed, std::size_t max_len, std::uint64_t max_h) {
  SuiteReport report;
  report.name = "lemma1";
  report.trials = trials;
  const GapSet gaps;
  SplitMix64 rng(seed);
  auto fails = [&](const Case& c) { return !verify_lemma1(c.s, gaps, c.h).holds; };

  std::int64_t tightest = std::numeric_limits<std::int64_t>::max();
  std::string tightest_case;
  std::optional<Case> first_failure;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Case c{rng.coloring(rng.between(1, max_len)), rng.between(0, max_h)};
    const Lemma1Check check = verify_lemma1(c.s, gaps, c.h);
    const auto slack = static_cast<std::int64_t>(check.rhs) - static_cast<std::int64_t>(check.lhs);
    if (slack < tightest) {
      tightest = slack;
      tightest_case = describe(c);
    }
    if (!check.holds) {
      ++report.violations;
      if (!first_failure) first_failure = c;
    }
  }
  report.lines.push_back("tightest slack " + std::to_string(tightest) + " at " + tightest_case);
  if (first_failure) {
    const Case small = shrink_case(*first_failure, fails);
    const Lemma1Check check = verify_lemma1(small.s, gaps, small.h);
    report.counterexample = describe(small) + " lhs=" + std::to_string(check.lhs) + " rhs=" + std::to_string(check.rhs);
  }
  return report;
}

SuiteReport run_construction_suite(std::uint64_t l_max) {
  SuiteReport report;
  report.name = "construction";
  for (std::uint64_t l = 1; l <= l_max; ++l) {
    const ConstructionCheck check = verify_construction(l);
    ++report.trials;
    std::ostringstream line;
    line << "l=" << l << " length=" << check.length << " psi0=" << check.psi0 << " budget=" << check.budget
         << " slack=" << (static_cast<std::int64_t>(check.budget) - static_cast<std::int64_t>(check.psi0))
         << (check.holds ? " ok" : " VIOLATED");
    report.lines.push_back(line.str());
    if (!check.holds) {
      ++report.violations;
      if (report.counterexample.empty()) report.counterexample = line.str();
    }
  }
  return report;
}

namespace {

// A random monochromatic walk in s1 of color c, or empty when c is absent.
DiffSeq random_mono_walk(const Coloring& s1, int c, SplitMix64& rng) {
  std::vector<std::uint64_t> starts;
  for (std::uint64_t i = 1; i <= s1.size(); ++i) {
    if (s1.color(i) == c) starts.push_back(i);
  }
  if (starts.empty()) return {};
  const GapSet gaps;
  const auto steps = gaps.members_up_to(s1.size());
  DiffSeq walk{starts[rng.below(starts.size())]};
  for (;;) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t g : steps) {
      const std::uint64_t j = walk.back() + g;
      if (j > s1.size()) break;
      if (s1.color(j) == c) next.push_back(j);
    }
    if (next.empty() || rng.below(8) == 0) break;
    walk.push_back(next[rng.below(next.size())]);
  }
  return walk;
}

std::string join(const DiffSeq& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + std::to_string(seq[i]);
  return out;
}

}  // namespace

SuiteReport run_corollary_suite(std::uint64_t trials, std::uint64_t seed, std::size_t max_len) {
  SuiteReport report;
  report.name = "corollaries";
  report.trials = trials;
  const GapSet gaps;
  SplitMix64 rng(seed);

  auto witness_fails = [&](const Case& c) {
    const Coloring s1 = expand(c.s);
    return !reduce_positions(c.s, s1, longest_mono(s1, gaps).witness).all_hold();
  };

  std::uint64_t checked = 0;
  std::uint64_t constant = 0;
  std::uint64_t split = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Coloring s = rng.coloring(rng.between(1, max_len));
    const Coloring s1 = expand(s);
    std::vector<DiffSeq> witnesses{longest_mono(s1, gaps).witness};
    for (int c = 0; c < 2; ++c) {
      DiffSeq walk = random_mono_walk(s1, c, rng);
      if (!walk.empty()) witnesses.push_back(std::move(walk));
    }
    for (const DiffSeq& w : witnesses) {
      const PosReduction red = reduce_positions(s, s1, w);
      ++checked;
      if (red.split == 0 || red.split == w.size()) ++constant;
      if (red.split > 0 && red.split < w.size()) ++split;
      if (red.all_hold()) continue;
      ++report.violations;
      if (report.counterexample.empty()) {
        Case original{s, 0};
        if (witness_fails(original)) {
          const Case small = shrink_case(original, witness_fails);
          report.counterexample = describe(small) + " witness=" +
                                  join(longest_mono(expand(small.s), gaps).witness);
        } else {
          report.counterexample = describe(original) + " witness=" + join(w);
        }
      }
    }
  }
  report.lines.push_back("witnesses checked " + std::to_string(checked) + ", constant pos-colors " +
                         std::to_string(constant) + ", split " + std::to_string(split));
  return report;
}

}  // namespace diffseq
