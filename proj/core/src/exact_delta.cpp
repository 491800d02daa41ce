#include "diffseq/exact_delta.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <limits>
#include <thread>

#include "diffseq/error.hpp"

namespace diffseq {

std::uint64_t longest_mono_length(std::span<const std::uint8_t> colors, const GapSet& gaps) {
  const std::size_t n = colors.size();
  if (n == 0) return 0;
  const auto steps = gaps.members_up_to(n - 1);
  std::vector<std::uint32_t> ending(n);
  std::uint32_t longest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t best = 0;
    for (std::uint64_t g : steps) {
      if (g > i) break;
      if (colors[i - g] == colors[i]) best = std::max(best, ending[i - g]);
    }
    ending[i] = best + 1;
    longest = std::max(longest, ending[i]);
  }
  return longest;
}

bool avoids(std::span<const std::uint8_t> colors, const GapSet& gaps, std::uint64_t k) {
  if (k == 0) throw InvalidArgument("avoids: k must be positive");
  return longest_mono_length(colors, gaps) < k;
}

bool avoids(const Coloring& s, const GapSet& gaps, std::uint64_t k) {
  const auto colors = s.to_colors();
  return avoids(colors, gaps, k);
}

std::string colors_to_string(std::span<const std::uint8_t> colors) {
  std::string out(colors.size(), '0');
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] >= kMaxColors) throw InvalidArgument("colors_to_string: color out of range");
    out[i] = static_cast<char>('0' + colors[i]);
  }
  return out;
}

ColorVector colors_from_string(std::string_view text, unsigned r) {
  ColorVector out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch < '0' || static_cast<unsigned>(ch - '0') >= r) {
      throw MalformedInput("certificate: invalid color '" + std::string(1, ch) + "' for r = " + std::to_string(r));
    }
    out[i] = static_cast<std::uint8_t>(ch - '0');
  }
  return out;
}

namespace {

// Color of position 1; any avoiding coloring can be relabeled to start with it.
constexpr std::uint8_t kFirstColor = 1;

struct Outcome {
  std::uint64_t nodes = 0;
  std::uint64_t max_depth = 0;
  bool reached = false;  // a leaf at stop_depth was accepted by the visitor
};

// Backtracking over colorings of [n_max] that keep every monochromatic
// diffsequence shorter than k. ending[i] is the longest monochromatic
// diffsequence ending at i; undo is implicit because deeper entries are
// simply overwritten.
class Search {
 public:
  enum class Order { kShortestRunFirst, kLexicographic };

  Search(const GapSet& gaps, std::uint64_t k, unsigned r, std::uint64_t n_max)
      : steps_(gaps.members_up_to(n_max - 1)),
        k_(k),
        r_(r),
        n_max_(n_max),
        color_(n_max + 1),
        ending_(n_max + 1),
        cand_(n_max + 1),
        cand_len_(n_max + 1),
        count_(n_max + 1),
        next_(n_max + 1) {}

  std::uint64_t n_max() const { return n_max_; }

  // Installs a prefix for positions 1..prefix.size(); it must be avoiding.
  void load(std::span<const std::uint8_t> prefix) {
    for (std::size_t i = 1; i <= prefix.size(); ++i) {
      color_[i] = prefix[i - 1];
      ending_[i] = ending_value(i, prefix[i - 1]);
    }
  }

  ColorVector prefix(std::uint64_t len) const { return {color_.begin() + 1, color_.begin() + 1 + len}; }

  // Explores every avoiding extension of the loaded prefix of length start-1
  // up to stop_depth. on_leaf runs at each assignment of position stop_depth
  // and returns true to stop the search. cancel is polled between nodes.
  Outcome explore(std::uint64_t start, std::uint64_t stop_depth, Order order,
                  const std::function<bool()>& on_leaf, const std::function<bool()>& cancel = {}) {
    Outcome out;
    out.max_depth = start - 1;
    if (start > stop_depth) {
      out.reached = on_leaf();
      return out;
    }
    std::uint64_t p = start;
    prepare(p, order);
    for (;;) {
      if (next_[p] < count_[p]) {
        const unsigned slot = next_[p]++;
        color_[p] = cand_[p][slot];
        ending_[p] = cand_len_[p][slot];
        ++out.nodes;
        out.max_depth = std::max(out.max_depth, p);
        if (p == stop_depth) {
          if (on_leaf()) {
            out.reached = true;
            return out;
          }
          continue;
        }
        if (cancel && (out.nodes & 0xfff) == 0 && cancel()) return out;
        prepare(++p, order);
      } else {
        if (p == start) return out;
        --p;
      }
    }
  }

 private:
  std::uint32_t ending_value(std::uint64_t i, std::uint8_t c) const {
    std::uint32_t best = 0;
    for (std::uint64_t g : steps_) {
      if (g >= i) break;
      if (color_[i - g] == c) best = std::max(best, ending_[i - g]);
    }
    return best + 1;
  }

  void prepare(std::uint64_t i, Order order) {
    std::array<std::uint32_t, kMaxColors> best{};
    for (std::uint64_t g : steps_) {
      if (g >= i) break;
      auto& b = best[color_[i - g]];
      b = std::max(b, ending_[i - g]);
    }
    unsigned n = 0;
    for (unsigned c = 0; c < r_; ++c) {
      const std::uint32_t len = best[c] + 1;
      if (len >= k_) continue;
      cand_[i][n] = static_cast<std::uint8_t>(c);
      cand_len_[i][n] = len;
      ++n;
    }
    if (order == Order::kShortestRunFirst) {
      // insertion sort on (run length, color); at most kMaxColors entries
      for (unsigned a = 1; a < n; ++a) {
        for (unsigned b = a; b > 0 && cand_len_[i][b] < cand_len_[i][b - 1]; --b) {
          std::swap(cand_len_[i][b], cand_len_[i][b - 1]);
          std::swap(cand_[i][b], cand_[i][b - 1]);
        }
      }
    }
    count_[i] = n;
    next_[i] = 0;
  }

  std::vector<std::uint64_t> steps_;
  std::uint64_t k_;
  unsigned r_;
  std::uint64_t n_max_;
  std::vector<std::uint8_t> color_;
  std::vector<std::uint32_t> ending_;
  std::vector<std::array<std::uint8_t, kMaxColors>> cand_;
  std::vector<std::array<std::uint32_t, kMaxColors>> cand_len_;
  std::vector<unsigned> count_;
  std::vector<unsigned> next_;
};

struct DepthSearch {
  std::uint64_t nodes = 0;
  std::uint64_t max_depth = 0;  // == n_max when the bound was reached
};

// Finds the length of the longest avoiding coloring (capped at n_max).
// Subtrees below split_depth are independent tasks; the node count only sums
// tasks up to the first one that reaches n_max, so it is independent of how
// tasks are scheduled.
DepthSearch longest_avoiding(const GapSet& gaps, std::uint64_t k, unsigned r, std::uint64_t n_max,
                             unsigned jobs, unsigned split_depth) {
  const std::array<std::uint8_t, 1> root{kFirstColor};
  Search head(gaps, k, r, n_max);
  head.load(root);

  if (n_max <= split_depth + 1) {
    const Outcome o = head.explore(2, n_max, Search::Order::kShortestRunFirst, [] { return true; });
    return {o.nodes + 1, std::max<std::uint64_t>(o.max_depth, 1)};
  }

  std::vector<ColorVector> prefixes;
  const Outcome split = head.explore(2, split_depth, Search::Order::kShortestRunFirst, [&] {
    prefixes.push_back(head.prefix(split_depth));
    return false;
  });
  DepthSearch out{split.nodes + 1, std::max<std::uint64_t>(split.max_depth, 1)};
  if (prefixes.empty()) return out;

  const std::size_t task_count = prefixes.size();
  std::vector<Outcome> results(task_count);
  std::atomic<std::size_t> next_task{0};
  std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    Search search(gaps, k, r, n_max);
    for (;;) {
      const std::size_t t = next_task.fetch_add(1);
      if (t >= task_count || t > first_hit.load()) return;
      search.load(prefixes[t]);
      results[t] = search.explore(
          split_depth + 1, n_max, Search::Order::kShortestRunFirst, [] { return true; },
          [&] { return first_hit.load() < t; });
      if (results[t].reached) {
        std::size_t cur = first_hit.load();
        while (t < cur && !first_hit.compare_exchange_weak(cur, t)) {
        }
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(task_count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  const std::size_t last = std::min(first_hit.load(), task_count - 1);
  for (std::size_t t = 0; t <= last; ++t) {
    out.nodes += results[t].nodes;
    out.max_depth = std::max(out.max_depth, results[t].max_depth);
  }
  if (first_hit.load() < task_count) out.max_depth = n_max;
  return out;
}

ColorVector smallest_avoiding(const GapSet& gaps, std::uint64_t k, unsigned r, std::uint64_t n_max,
                              std::uint64_t length) {
  if (length == 0) return {};
  const std::array<std::uint8_t, 1> root{kFirstColor};
  Search search(gaps, k, r, n_max);
  search.load(root);
  const Outcome o = search.explore(2, length, Search::Order::kLexicographic, [] { return true; });
  if (!o.reached) throw std::logic_error("delta_exact: no avoiding coloring at the measured depth");
  return search.prefix(length);
}

}  // namespace

std::uint64_t resolve_n_max(const GapSet& gaps, std::uint64_t k, unsigned r, const DeltaOptions& options) {
  if (options.n_max) return *options.n_max;
  if (gaps.is_powers_of_two() && r == 2) {
    if (k >= 64) throw CapacityError("delta_exact: 2^k - 1 does not fit in 64 bits");
    return (std::uint64_t{1} << k) - 1;
  }
  throw InvalidArgument("delta_exact: n_max is required unless D is powers of two and r = 2");
}

DeltaResult delta_exact(const GapSet& gaps, std::uint64_t k, unsigned r, const DeltaOptions& options) {
  if (k == 0) throw InvalidArgument("delta_exact: k must be positive");
  if (r < 2 || r > kMaxColors) throw InvalidArgument("delta_exact: r must be in [2, 10]");

  const std::uint64_t n_max = resolve_n_max(gaps, k, r, options);
  if (n_max == 0) throw InvalidArgument("delta_exact: n_max must be positive");
  if (n_max > options.max_positions) {
    throw CapacityError("delta_exact: n_max = " + std::to_string(n_max) + " exceeds the limit of " +
                        std::to_string(options.max_positions) + " positions");
  }

  DeltaResult out;
  out.gaps = gaps.describe();
  out.k = k;
  out.r = r;
  out.n_max = n_max;
  if (k == 1) {
    out.value = 1;
    return out;
  }

  const DepthSearch depth = longest_avoiding(gaps, k, r, n_max, std::max(1u, options.jobs), options.split_depth);
  out.stats = {depth.nodes, depth.max_depth};
  if (depth.max_depth < n_max) out.value = depth.max_depth + 1;
  out.certificate = smallest_avoiding(gaps, k, r, n_max, depth.max_depth);
  return out;
}

bool certificate_valid(const DeltaResult& result, const GapSet& gaps) {
  if (result.k == 0) return false;
  const std::uint64_t expected = result.value ? *result.value - 1 : result.n_max;
  if (result.certificate.size() != expected) return false;
  for (std::uint8_t c : result.certificate) {
    if (c >= result.r) return false;
  }
  return avoids(result.certificate, gaps, result.k);
}

}  // namespace diffseq
