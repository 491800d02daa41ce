#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "diffseq/bounds.hpp"
#include "diffseq/error.hpp"
#include "diffseq/exact_delta.hpp"
#include "oracle.hpp"

using namespace diffseq;

namespace {

ColorVector digits(std::string_view s) { return colors_from_string(s, kMaxColors); }

}  // namespace

TEST_SUITE("exact_delta") {

TEST_CASE("avoids") {
  const GapSet d;
  CHECK(avoids(digits("10"), d, 2));
  CHECK_FALSE(avoids(digits("11"), d, 2));
  CHECK(avoids(Coloring::from_string("11000011"), d, 5));
  CHECK_FALSE(avoids(Coloring::from_string("11000011"), d, 4));
  CHECK(avoids(ColorVector{}, d, 1));
  CHECK_FALSE(avoids(digits("0"), d, 1));
  CHECK(avoids(digits("012012012"), d, 2));
  CHECK_THROWS_AS(avoids(digits("0"), d, 0), InvalidArgument);
}

TEST_CASE("small values for powers of two") {
  const GapSet d;
  const DeltaResult k1 = delta_exact(d, 1, 2);
  CHECK(k1.value == 1);
  CHECK(k1.certificate.empty());

  const DeltaResult k2 = delta_exact(d, 2, 2);
  CHECK(k2.value == 3);
  CHECK(colors_to_string(k2.certificate) == "10");

  const std::uint64_t expected[] = {0, 1, 3, 7, 11, 17};  // enumeration oracle, see below
  for (std::uint64_t k = 1; k <= 5; ++k) {
    const DeltaResult r = delta_exact(d, k, 2);
    CHECK(r.value == expected[k]);
    CHECK(certificate_valid(r, d));
    CHECK(r.n_max == (std::uint64_t{1} << k) - 1);
  }
}

TEST_CASE("larger k against an independent longest-avoider search") {
  // values from a separate incremental DFS, first color fixed to 1
  const GapSet d;
  const std::uint64_t expected[] = {25, 35, 51};
  for (std::uint64_t k = 6; k <= 8; ++k) {
    const DeltaResult r = delta_exact(d, k, 2);
    CHECK(r.value == expected[k - 6]);
    CHECK(certificate_valid(r, d));
  }
  CHECK(colors_to_string(delta_exact(d, 6, 2).certificate) == "100101101001011010010110");
}

TEST_CASE("agrees with full enumeration of 2-colorings for 2^k - 1 <= 15") {
  const GapSet d;
  for (std::uint64_t k = 1; k <= 4; ++k) {
    const auto expected = oracle::delta_by_enumeration(k, 2, (std::size_t{1} << k) - 1);
    REQUIRE(expected.has_value());
    const DeltaResult got = delta_exact(d, k, 2);
    CHECK(got.value == expected->value);
    CHECK(colors_to_string(got.certificate) == expected->certificate);
  }
}

TEST_CASE("3 colors") {
  const GapSet d;
  // i mod 3 never repeats a color across a power-of-two gap
  DeltaOptions opt;
  opt.n_max = 10;
  const DeltaResult r = delta_exact(d, 2, 3, opt);
  CHECK(r.exceeds());
  CHECK(colors_to_string(r.certificate) == "1021021021");
  CHECK(certificate_valid(r, d));

  const auto expected = oracle::delta_by_enumeration(2, 3, 8);
  CHECK_FALSE(expected.has_value());

  opt.n_max = 40;
  const DeltaResult k3 = delta_exact(d, 3, 3, opt);
  CHECK(k3.exceeds());
  CHECK(certificate_valid(k3, d));

  CHECK_THROWS_AS(delta_exact(d, 2, 3), InvalidArgument);  // no default n_max
}

TEST_CASE("explicit gap sets and tiny n_max") {
  DeltaOptions opt;
  opt.n_max = 30;
  // D = {1}: monochromatic runs; alternating avoids k = 2 forever
  const DeltaResult runs = delta_exact(GapSet::explicit_set({1}), 2, 2, opt);
  CHECK(runs.exceeds());
  CHECK(runs.certificate.size() == 30);

  // D = {1, 2}, k = 2: a 2-coloring of [3] must repeat within distance 2
  const DeltaResult near = delta_exact(GapSet::explicit_set({1, 2}), 2, 2, opt);
  CHECK(near.value == 3);

  opt.n_max = 1;
  const DeltaResult one = delta_exact(GapSet(), 3, 2, opt);
  CHECK(one.exceeds());
  CHECK(colors_to_string(one.certificate) == "1");

  opt.n_max = 5;
  const DeltaResult capped = delta_exact(GapSet(), 3, 2, opt);
  CHECK(capped.exceeds());
  CHECK(capped.certificate.size() == 5);
  CHECK(certificate_valid(capped, GapSet()));
}

TEST_CASE("argument and capacity errors") {
  const GapSet d;
  CHECK_THROWS_AS(delta_exact(d, 0, 2), InvalidArgument);
  CHECK_THROWS_AS(delta_exact(d, 2, 1), InvalidArgument);
  CHECK_THROWS_AS(delta_exact(d, 2, 11), InvalidArgument);
  DeltaOptions opt;
  opt.n_max = 0;
  CHECK_THROWS_AS(delta_exact(d, 2, 2, opt), InvalidArgument);
  CHECK_THROWS_AS(delta_exact(d, 30, 2), CapacityError);
  opt.n_max = 100;
  opt.max_positions = 50;
  CHECK_THROWS_AS(delta_exact(d, 3, 2, opt), CapacityError);
}

TEST_CASE("results do not depend on jobs or split depth") {
  const GapSet d;
  for (std::uint64_t k = 2; k <= 5; ++k) {
    DeltaOptions base;
    const DeltaResult ref = delta_exact(d, k, 2, base);
    for (unsigned split : {2u, 4u, 8u, 12u}) {
      for (unsigned jobs : {1u, 3u}) {
        DeltaOptions opt;
        opt.split_depth = split;
        opt.jobs = jobs;
        const DeltaResult r = delta_exact(d, k, 2, opt);
        CHECK(r.value == ref.value);
        CHECK(r.certificate == ref.certificate);
        CHECK(r.stats.max_depth == ref.stats.max_depth);
        CHECK(r.stats.nodes == ref.stats.nodes);
      }
    }
  }
  // early termination at n_max with cancellation of later subtrees
  DeltaOptions opt;
  opt.n_max = 60;
  opt.split_depth = 6;
  DeltaResult first;
  for (unsigned jobs : {1u, 2u, 4u}) {
    opt.jobs = jobs;
    const DeltaResult r = delta_exact(GapSet::explicit_set({2}), 3, 2, opt);
    CHECK(r.exceeds());
    if (jobs == 1) first = r;
    CHECK(r == first);
  }
}

TEST_CASE("certificates survive relabeling; sandwich and monotonicity") {
  const GapSet d;
  std::uint64_t prev = 0;
  for (std::uint64_t k = 2; k <= 5; ++k) {
    const DeltaResult r = delta_exact(d, k, 2);
    REQUIRE(r.value);
    ColorVector flipped = r.certificate;
    for (auto& c : flipped) c = static_cast<std::uint8_t>(1 - c);
    CHECK(avoids(flipped, d, k));
    CHECK(*r.value >= prev);
    prev = *r.value;
    CHECK(construction_length(choose_l(k)) <= *r.value);
    CHECK(*r.value <= upper_bound(k));
  }

  DeltaOptions opt;
  opt.n_max = 12;
  const DeltaResult three = delta_exact(GapSet::explicit_set({1, 3}), 3, 3, opt);
  std::vector<std::uint8_t> perm{0, 1, 2};
  do {
    ColorVector relabeled = three.certificate;
    for (auto& c : relabeled) c = perm[c];
    CHECK(avoids(relabeled, GapSet::explicit_set({1, 3}), 3));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}
