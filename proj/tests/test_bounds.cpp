#include <doctest.h>

#include <cmath>

#include "diffseq/bounds.hpp"
#include "diffseq/error.hpp"

using namespace diffseq;

TEST_SUITE("bounds") {

TEST_CASE("budget") {
  CHECK(budget(1) == 1);
  CHECK(budget(2) == 4);
  CHECK(budget(3) == 10);
  CHECK(budget(4) == 19);
  for (std::uint64_t l = 1; l < 2000; ++l) CHECK(2 * budget(l) == 3 * l * l - 3 * l + 2);
  CHECK_THROWS_AS(budget(0), InvalidArgument);
}

TEST_CASE("choose_l") {
  CHECK(choose_l(7) == 2);
  CHECK(choose_l(2) == 1);
  CHECK(choose_l(11) == 3);
  CHECK(choose_l(5) == 2);
  CHECK_THROWS_AS(choose_l(1), InvalidArgument);
  CHECK_THROWS_AS(choose_l(0), InvalidArgument);
}

TEST_CASE("closed form for l is one too large exactly at budget values") {
  for (std::uint64_t k = 2; k <= 200000; ++k) {
    const std::uint64_t l = choose_l(k);
    const std::uint64_t closed = choose_l_closed_form(k);
    const bool at_budget = budget(l + 1) == k;
    CHECK(closed == (at_budget ? l + 1 : l));
  }
  CHECK(choose_l_closed_form(4) == 2);
  CHECK(choose_l(4) == 1);
  CHECK(choose_l_closed_form(10) == 3);
  CHECK(choose_l(10) == 2);
}

TEST_CASE("defining property of choose_l up to 10^6") {
  for (std::uint64_t k = 2; k <= 1'000'000; ++k) {
    const std::uint64_t l = choose_l(k);
    REQUIRE(budget(l) < k);
    REQUIRE(k <= budget(l + 1));
  }
}

TEST_CASE("integer bound dominates eq2 up to 10^6") {
  for (std::uint64_t k = 2; k <= 1'000'000; ++k) REQUIRE(integer_bound_log2(k) >= eq2_log2(k));
  // where both fit in a double the comparison is direct
  for (std::uint64_t k = 2; k <= 3000; ++k) {
    const double ib = construction_length(choose_l(k)).convert_to<double>();
    REQUIRE(ib >= eq2_value(k));
  }
}

TEST_CASE("equality between integer bound and eq2 at budget values") {
  // k = budget(L) makes the real-valued l exactly L, so eq2 = (L-1) 4^(L-2)
  for (std::uint64_t big_l = 2; big_l <= 12; ++big_l) {
    const std::uint64_t k = budget(big_l);
    if (k < 2) continue;
    CHECK(eq2_value(k) == construction_length(choose_l(k)).convert_to<double>());
  }
}

TEST_CASE("new_bound examples") {
  const BoundReport k7 = new_bound(7);
  CHECK(k7.l == 2);
  CHECK(k7.integer_bound == 8);
  CHECK(k7.eq2_value == doctest::Approx(3.4013).epsilon(1e-4));
  CHECK(std::abs(k7.eq2_value - 3.401) < 0.001);
  CHECK(k7.upper_bound == 127);
  CHECK(k7.budget == 4);

  const BoundReport k2 = new_bound(2);
  CHECK(k2.l == 1);
  CHECK(k2.integer_bound == 1);
  CHECK(k2.upper_bound == 3);

  const BoundReport k11 = new_bound(11);
  CHECK(k11.l == 3);
  CHECK(k11.integer_bound == 48);
  CHECK(k11.eq2_value == doctest::Approx(10.2017).epsilon(1e-4));
  CHECK(k11.eq2_value <= 48);

  CHECK_THROWS_AS(new_bound(1), InvalidArgument);
}

TEST_CASE("exact integers do not overflow") {
  const BoundReport r = new_bound(5000);
  CHECK(r.upper_bound == (BigInt(1) << 5000) - 1);
  CHECK(r.integer_bound == BigInt(r.l) << (2 * (r.l - 1)));
  CHECK(r.integer_bound <= r.upper_bound);
  CHECK(std::isinf(new_bound(1'000'000).eq2_value));
  CHECK(std::isfinite(new_bound(1'000'000).eq2_log2));
}

TEST_CASE("clifton_bound") {
  // direct evaluation with an independent calculator
  CHECK(clifton_bound(2) == doctest::Approx(0.414214).epsilon(1e-5));
  CHECK(clifton_bound(50) == doctest::Approx(1749.4057).epsilon(1e-6));
  CHECK(clifton_bound(1) == doctest::Approx(0.304849).epsilon(1e-5));
  CHECK(*clifton_log2(50) == doctest::Approx(std::log2(1749.4057)).epsilon(1e-6));
  CHECK(clifton_log2(1'000'000).has_value());
}

TEST_CASE("eq2 overtakes eq1") {
  const auto start = eq2_dominance_start(1'000'000);
  REQUIRE(start.has_value());
  CHECK(*start <= 1'000'000);
  for (std::uint64_t k = *start; k <= *start + 1000; ++k) CHECK(eq2_log2(k) > *clifton_log2(k));
  if (*start > 2) {
    const auto eq1 = clifton_log2(*start - 1);
    CHECK((eq1 && eq2_log2(*start - 1) <= *eq1));
  }
  MESSAGE("eq2 > eq1 for all k in [" << *start << ", 10^6]");
}

TEST_CASE("verify_construction") {
  const ConstructionCheck one = verify_construction(1);
  CHECK(one.psi0 == 1);
  CHECK(one.budget == 1);
  CHECK(one.holds);

  const ConstructionCheck two = verify_construction(2);
  CHECK(two.psi0 == 4);
  CHECK(two.budget == 4);
  CHECK(two.holds);
  CHECK(two.implied_bound_k == 5);

  const ConstructionCheck five = verify_construction(5);
  CHECK(five.length == 1280);
  CHECK(five.budget == 31);
  CHECK(five.psi0 <= 31);
  CHECK(five.holds);
  MESSAGE("kappa(5): psi0 = " << five.psi0 << ", slack " << five.budget - five.psi0);

  CHECK_THROWS_AS(verify_construction(5, 100), CapacityError);
}

TEST_CASE("format_sig4") {
  CHECK(format_sig4(3.4013017) == "3.401");
  CHECK(format_sig4(1749.4057) == "1749");
  CHECK(format_sig4(-0.2218) == "-0.2218");
  CHECK(format_sig4(123456.0) == "1.235e+05");
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(format_sig4(inf, 3000.0 / std::log10(2.0)) == "1e+3000");
  CHECK(format_sig4(inf, std::log2(5.5) + 2000.0 / std::log10(2.0)) == "5.5e+2000");
}

TEST_CASE("render_bounds") {
  const std::vector<BoundRow> rows{{new_bound(2), 3}, {new_bound(7), std::nullopt}};
  const std::string text = render_bounds(rows, TableFormat::kText);
  CHECK(text ==
        "k  l  integer_bound     eq2     eq1  upper_2k_minus_1  exact_delta\n"
        "2  1              1  0.2156  0.4142                 3            3\n"
        "7  2              8   3.401   1.747               127\n");
  CHECK(render_bounds(rows, TableFormat::kCsv) ==
        "k,l,integer_bound,eq2,eq1,upper_2k_minus_1,exact_delta\n"
        "2,1,1,0.2156,0.4142,3,3\n"
        "7,2,8,3.401,1.747,127,\n");
  const std::string json = render_bounds(rows, TableFormat::kJson);
  CHECK(json.find("\"exact_delta\":3") != std::string::npos);
  CHECK(json.find("\"exact_delta\":null") != std::string::npos);
  CHECK(json.find("\"integer_bound\":\"8\"") != std::string::npos);
}

}
