#include "diffseq/engine.hpp"

#include <algorithm>
#include <functional>

#include "diffseq/error.hpp"

namespace diffseq {

namespace {

// Upper limit on DP table entries, n * (h+1).
constexpr std::uint64_t kMaxTableEntries = std::uint64_t{1} << 30;

void check_positions(std::uint64_t n, std::span<const std::uint64_t> positions) {
  for (std::size_t j = 0; j < positions.size(); ++j) {
    if (positions[j] == 0 || positions[j] > n) {
      throw InvalidArgument("diffseq: position " + std::to_string(positions[j]) + " outside [1, " +
                            std::to_string(n) + "]");
    }
    if (j > 0 && positions[j] <= positions[j - 1]) {
      throw InvalidArgument("diffseq: positions must be strictly increasing");
    }
  }
}

std::uint64_t count_hops(const Coloring& s, const DiffSeq& seq) {
  std::uint64_t hops = 0;
  for (std::size_t j = 1; j < seq.size(); ++j) {
    if (s.color(seq[j]) != s.color(seq[j - 1])) ++hops;
  }
  return hops;
}

}  // namespace

Admissibility validate_diffseq(const Coloring& s, const GapSet& gaps,
                               std::span<const std::uint64_t> positions, std::uint64_t h) {
  check_positions(s.size(), positions);
  Admissibility out;
  for (std::size_t j = 1; j < positions.size(); ++j) {
    const std::uint64_t gap = positions[j] - positions[j - 1];
    if (!gaps.contains(gap)) {
      out.reason = Rejection::kGapNotInSet;
      out.index = j;
      return out;
    }
    if (s.color(positions[j]) != s.color(positions[j - 1])) {
      if (gap != 1) {
        out.reason = Rejection::kColorChangeAtLongGap;
        out.index = j;
        return out;
      }
      out.hops.push_back(j);
    }
  }
  if (out.hops.size() > h) {
    out.reason = Rejection::kTooManyHops;
    return out;
  }
  out.admissible = true;
  return out;
}

PsiResult psi(const Coloring& s, const GapSet& gaps, std::uint64_t h) {
  const std::size_t n = s.size();
  if (n == 0) return {};
  const std::size_t hops = static_cast<std::size_t>(std::min<std::uint64_t>(h, n - 1));
  if ((hops + 1) > kMaxTableEntries / n) {
    throw CapacityError("psi: table of " + std::to_string(n) + " x " + std::to_string(hops + 1) +
                        " entries exceeds the limit");
  }
  const std::vector<std::uint64_t> steps = gaps.members_up_to(n - 1);
  const bool unit = gaps.contains(1);

  // best[t*n + i-1]: longest admissible sequence starting at i with at most
  // t hops.
  std::vector<std::uint32_t> best((hops + 1) * n);
  for (std::size_t t = 0; t <= hops; ++t) {
    std::uint32_t* row = best.data() + t * n;
    const std::uint32_t* lower = t ? best.data() + (t - 1) * n : nullptr;
    for (std::size_t i = n; i >= 1; --i) {
      const int c = s.color(i);
      std::uint32_t tail = 0;
      for (std::uint64_t g : steps) {
        const std::size_t j = i + g;
        if (j > n) break;
        if (s.color(j) == c) tail = std::max(tail, row[j - 1]);
      }
      if (lower && unit && i < n && s.color(i + 1) != c) tail = std::max(tail, lower[i]);
      row[i - 1] = tail + 1;
    }
  }

  const std::uint32_t* top = best.data() + hops * n;
  const std::size_t start = static_cast<std::size_t>(std::max_element(top, top + n) - top) + 1;

  PsiResult out;
  out.length = top[start - 1];
  std::size_t i = start;
  std::size_t t = hops;
  out.witness.reserve(out.length);
  for (;;) {
    out.witness.push_back(i);
    const std::uint32_t need = best[t * n + i - 1] - 1;
    if (need == 0) break;
    const int c = s.color(i);
    bool moved = false;
    for (std::uint64_t g : steps) {
      const std::size_t j = i + g;
      if (j > n) break;
      if (s.color(j) == c) {
        if (best[t * n + j - 1] == need) {
          i = j;
          moved = true;
          break;
        }
      } else if (g == 1 && t > 0 && best[(t - 1) * n + j - 1] == need) {
        i = j;
        --t;
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("psi: witness reconstruction lost its path");
  }
  out.hops = count_hops(s, out.witness);
  return out;
}

PsiResult longest_mono(const Coloring& s, const GapSet& gaps) { return psi(s, gaps, 0); }

PsiResult brute_longest(const Coloring& s, const GapSet& gaps, std::uint64_t h, std::size_t limit) {
  const std::size_t n = s.size();
  if (n > limit) {
    throw CapacityError("brute_longest: length " + std::to_string(n) + " exceeds oracle limit " +
                        std::to_string(limit));
  }
  PsiResult out;
  DiffSeq path;
  std::uint64_t path_hops = 0;

  // Preorder with increasing successors visits sequences in lexicographic
  // order, so the first sequence of a given length is the smallest one.
  std::function<void()> extend = [&] {
    if (path.size() > out.length) {
      out.length = path.size();
      out.witness = path;
      out.hops = path_hops;
    }
    const std::uint64_t last = path.back();
    for (std::uint64_t next = last + 1; next <= n; ++next) {
      if (!gaps.contains(next - last)) continue;
      const bool change = s.color(next) != s.color(last);
      if (change && (next - last != 1 || path_hops == h)) continue;
      path.push_back(next);
      path_hops += change;
      extend();
      path_hops -= change;
      path.pop_back();
    }
  };
  for (std::uint64_t first = 1; first <= n; ++first) {
    path.assign(1, first);
    extend();
  }
  return out;
}

PosReduction reduce_positions(const Coloring& s, const Coloring& s1, std::span<const std::uint64_t> seq) {
  if (s.empty() || s1 != expand(s)) throw InvalidArgument("reduce_positions: s1 is not the expansion of s");
  if (seq.empty()) throw InvalidArgument("reduce_positions: empty sequence");
  check_positions(s1.size(), seq);
  const GapSet powers_of_two;
  const int c = s1.color(seq[0]);
  for (std::size_t j = 1; j < seq.size(); ++j) {
    if (!powers_of_two.contains(seq[j] - seq[j - 1])) {
      throw InvalidArgument("reduce_positions: gap is not a power of two");
    }
    if (s1.color(seq[j]) != c) throw InvalidArgument("reduce_positions: sequence is not monochromatic");
  }

  PosReduction out;
  out.color = c;
  const std::size_t k = seq.size();
  out.positions.reserve(k);
  out.pos_colors.reserve(k);
  for (std::uint64_t a : seq) {
    out.positions.push_back(pos(a));
    out.pos_colors.push_back(s.color(out.positions.back()));
  }

  while (out.split < k && out.pos_colors[out.split] == 1 - c) ++out.split;
  out.split_holds = std::all_of(out.pos_colors.begin() + static_cast<std::ptrdiff_t>(out.split),
                                out.pos_colors.end(), [c](int pc) { return pc == c; });

  out.distinct = 1;
  for (std::size_t j = 1; j < k; ++j) out.distinct += out.positions[j] != out.positions[j - 1];
  const bool constant = std::all_of(out.pos_colors.begin(), out.pos_colors.end(),
                                    [&](int pc) { return pc == out.pos_colors.front(); });
  out.distinct_holds = !constant || out.distinct + 1 >= k;

  out.locality_holds = true;
  for (std::size_t j = 1; j < k; ++j) {
    if (out.pos_colors[j] == out.pos_colors[j - 1]) continue;
    const bool step = out.positions[j] == out.positions[j - 1] + 1;
    const bool order = out.pos_colors[j - 1] == 1 - c && out.pos_colors[j] == c;
    if (!step || !order) out.locality_holds = false;
  }
  return out;
}

Lemma1Check verify_lemma1(const Coloring& s, const GapSet& gaps, std::uint64_t h) {
  if (!gaps.is_powers_of_two()) throw InvalidArgument("verify_lemma1: requires D = powers of two");
  Lemma1Check out;
  out.lhs = psi(expand(s), gaps, h).length;
  out.rhs = psi(s, gaps, h + 1).length + 3 * h + 2;
  out.holds = out.lhs <= out.rhs;
  return out;
}

}  // namespace diffseq
