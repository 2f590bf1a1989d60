#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpfib/dp3.hpp"
#include "dpfib/sweep.hpp"

using namespace dpfib;

TEST_CASE("DP3Family::make rejects unsorted degrees") {
  CHECK_NOTHROW(DP3Family::make(2, 1, 1, -2));
  CHECK_THROWS_AS(DP3Family::make(0, 0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(DP3Family::make(1, 2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(DP3Family::make(1, 0, -1, 0), std::invalid_argument);
}

TEST_CASE("necessary_smooth_pic2") {
  CHECK(necessary_smooth_pic2({0, 0, 0, 1}));
  CHECK_FALSE(necessary_smooth_pic2({1, 1, 1, -3}));
  CHECK_FALSE(necessary_smooth_pic2({2, 1, 1, -3}));
  // d2 = d3, n < 0, 3 d3 = -n is excluded by the three-subscroll argument.
  CHECK_FALSE(necessary_smooth_pic2({3, 1, 1, -3}));
  // d1 > -n but d2 < -n.
  CHECK_FALSE(necessary_smooth_pic2({3, 1, 1, -2}));
}

TEST_CASE("smooth_pic2") {
  CHECK(smooth_pic2({0, 0, 0, 1}));
  CHECK_FALSE(smooth_pic2({0, 0, 0, 0}));
  CHECK(smooth_pic2({2, 1, 1, -2}));
  CHECK(smooth_pic2({1, 0, 0, 0}));
  CHECK(smooth_pic2({3, 2, 1, -1}));
  CHECK_FALSE(smooth_pic2({1, 1, 1, -3}));
  CHECK_FALSE(smooth_pic2({3, 1, 1, -3}));
}

TEST_CASE("k_cubed and euler_characteristic") {
  CHECK(k_cubed({0, 0, 0, 1}) == -10);
  CHECK(k_cubed({2, 1, 1, -2}) == -10);
  CHECK(k_cubed({1, 1, 1, -1}) == -8);
  CHECK(k_cubed_adjunction({0, 0, 0, 1}) == -10);
  CHECK(k_cubed_adjunction({2, 1, 1, -2}) == -10);
  CHECK(k_cubed_adjunction({1, 1, 1, -1}) == -8);

  CHECK(euler_characteristic({0, 0, 0, 1}) == -14);
  CHECK(euler_characteristic({2, 1, 1, -2}) == -14);
  CHECK(euler_characteristic({1, 1, 1, -1}) == -22);
}

TEST_CASE("cone_position") {
  CHECK(cone_position({2, 1, 1, -2}) == ConePosition::Inside);
  CHECK(cone_position({1, 1, 1, -1}) == ConePosition::Inside);
  CHECK(cone_position({3, 3, 3, -3}) == ConePosition::Outside);
  CHECK(cone_position({0, 0, 0, 4}) == ConePosition::Undetermined);
  CHECK(cone_position({0, 0, 0, 2}) == ConePosition::Inside);
}

TEST_CASE("degeneration: examples") {
  const auto a = degeneration({0, 0, 0, 1});
  CHECK(a.r == 0);
  CHECK(a.mu == 3);
  CHECK(a.ks2 == 5);
  CHECK(a.delta == RuledClass{5, 3});
  CHECK(a.two_k_plus_delta == RuledClass{1, -1});
  CHECK_FALSE(a.shokurov);
  CHECK(a.odp == 4);

  const auto b = degeneration({2, 1, 1, -2});
  CHECK(b.r == 1);
  CHECK(b.mu == 6);
  CHECK(b.ks2 == 2);
  CHECK(b.two_k_plus_delta == RuledClass{1, 0});
  CHECK(b.shokurov);
  CHECK(b.odp == 2);

  const auto c = degeneration({1, 0, 0, 0});
  CHECK(c.r == 1);
  CHECK(c.mu == 5);
  CHECK(c.ks2 == 3);
  CHECK(c.two_k_plus_delta == RuledClass{1, -1});
  CHECK_FALSE(c.shokurov);
  CHECK(c.odp == 2);

  CHECK_THROWS_AS(degeneration({0, 0, 0, 0}), PreconditionError);
}

TEST_CASE("shokurov_nonruled") {
  CHECK(shokurov_nonruled({0, 0, 0, 2}));
  CHECK_FALSE(shokurov_nonruled({0, 0, 0, 1}));
  CHECK(shokurov_nonruled({1, 1, 1, -1}));
  CHECK_THROWS_AS(shokurov_nonruled({1, 1, 1, -3}), PreconditionError);
}

TEST_CASE("classify: examples") {
  const auto rational = classify({0, 0, 0, 1});
  CHECK(rational.verdict == Verdict::Rational);
  CHECK(rational.route == Route::MainTheoremRational);
  CHECK(rational.degeneration.has_value());

  const auto cubic = classify({1, 0, 0, 0});
  CHECK(cubic.verdict == Verdict::Nonrational);
  CHECK(cubic.route == Route::CubicThreefold);

  const auto generic = classify({3, 2, 1, -1});
  CHECK(generic.verdict == Verdict::Nonrational);
  CHECK(generic.route == Route::ShokurovConicBundle);
  CHECK(generic.degeneration->two_k_plus_delta == RuledClass{1, 12});

  const auto bad = classify({0, 0, 0, 0});
  CHECK(bad.verdict == Verdict::NotGeneralSmoothPic2);
  CHECK(bad.route == Route::None);
  CHECK_FALSE(bad.degeneration.has_value());
}

TEST_CASE("classify: report invariants over a range") {
  for (const auto& rep : enumerate_serial({8, -12, 12})) {
    CHECK(rep.degeneration.has_value() == rep.smooth_pic2);
    const bool is_rational_family = rep.family == DP3Family{0, 0, 0, 1};
    CHECK((rep.verdict == Verdict::Rational) == (rep.smooth_pic2 && is_rational_family));
    CHECK(rep.euler == -4 * rep.k3 - 54);
  }
}

TEST_CASE("enumerate: counts and order") {
  const auto one = enumerate_serial({0, 1, 1});
  REQUIRE(one.size() == 1);
  CHECK(one[0].verdict == Verdict::Rational);

  const auto four = enumerate_serial({1, 0, 0});
  REQUIRE(four.size() == 4);
  CHECK(four[0].family == DP3Family{0, 0, 0, 0});
  CHECK(four[1].family == DP3Family{1, 0, 0, 0});
  CHECK(four[2].family == DP3Family{1, 1, 0, 0});
  CHECK(four[3].family == DP3Family{1, 1, 1, 0});

  CHECK(enumerate_serial({2, -2, 2}).size() == 50);
  CHECK(EnumerationRange{2, -2, 2}.family_count() == 50);

  for (std::int64_t m = 0; m <= 12; ++m) {
    const EnumerationRange r{m, -3, 4};
    const auto fams = families(r);
    CHECK(fams.size() == r.family_count());
    for (std::size_t i = 0; i + 1 < fams.size(); ++i) CHECK(fams[i] < fams[i + 1]);
  }

  CHECK_THROWS_AS(enumerate_serial({-1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_serial({1, 2, 1}), std::invalid_argument);
}

TEST_CASE("K_S^2 diagnostic agrees exactly when d2 = d3") {
  for (const auto& f : families({10, -15, 15})) {
    const auto k = ks2_discrepancy(f);
    CHECK(k.adjunction == -5 * f.d1 - 2 * f.d3 - 3 * f.n + 8);
    CHECK(k.agree() == (f.d2 == f.d3));
    if (smooth_pic2(f)) CHECK(k.printed == degeneration(f).ks2);
  }
}

TEST_CASE("dp4_rational") {
  CHECK(dp4_rational(0));
  CHECK(dp4_rational(-4));
  CHECK(dp4_rational(-8));
  CHECK_FALSE(dp4_rational(-14));
  CHECK_FALSE(dp4_rational(4));
  CHECK_FALSE(dp4_rational(-12));
}
