#include <doctest.h>

#include <cmath>
#include <complex>

#include "sumsets/averaging.hpp"
#include "sumsets/windowset.hpp"

using namespace sumsets;

TEST_CASE("measure_at interval family is uniform") {
  auto nu = measure_at(SequenceFamily::interval(), 4);
  CHECK(nu.support == std::vector<std::int64_t>{1, 2, 3, 4});
  for (const auto& w : nu.weights) CHECK(w == Rational(1, 4));
  CHECK(nu.is_probability());
}

TEST_CASE("power_floor support and ambiguity flags") {
  FloorAmbiguityReport flags;
  auto fam = SequenceFamily::power_floor(Real("1.5"));
  CHECK(family_values(fam, 5, &flags) ==
        std::vector<std::int64_t>{1, 2, 5, 8, 11});
  // 1^1.5 and 4^1.5 are exact integers: snapped and flagged.
  CHECK(flags.ambiguous_n == std::vector<std::int64_t>{1, 4});
  CHECK_THROWS_AS(SequenceFamily::power_floor(Real(2)), std::invalid_argument);
}

TEST_CASE("genpoly evaluation") {
  auto fam = SequenceFamily::genpoly(
      {{real_sqrt2(), 4}, {-real_pi(), 2}});
  CHECK(family_values(fam, 2) == std::vector<std::int64_t>{-2, 10});
  CHECK_THROWS_AS(SequenceFamily::genpoly({{Real(1), 0}}),
                  std::invalid_argument);
}

TEST_CASE("measure_at merges colliding values, mass exactly 1") {
  auto fam = SequenceFamily::explicit_values({5, 5, 7, 5});
  auto nu = measure_at(fam, 4);
  CHECK(nu.support == std::vector<std::int64_t>{5, 7});
  CHECK(nu.weights[0] == Rational(3, 4));
  CHECK(nu.total() == 1);
}

TEST_CASE("restrict") {
  auto nu = measure_at(SequenceFamily::interval(), 4);
  auto even = restrict(nu, [](std::int64_t n) { return n % 2 == 0; });
  CHECK(even.support == std::vector<std::int64_t>{2, 4});
  CHECK(even.total() == Rational(1, 2));
  auto all = restrict(nu, [](std::int64_t) { return true; });
  CHECK(all.total() == 1);

  // squares <= 100 intersected with multiples of 4
  std::vector<std::int64_t> squares;
  for (std::int64_t n = 1; n <= 10; ++n) squares.push_back(n * n);
  auto sq = measure_at(SequenceFamily::explicit_values(squares), 10);
  auto m4 = restrict(sq, [](std::int64_t n) { return n % 4 == 0; });
  CHECK(m4.support == std::vector<std::int64_t>{4, 16, 36, 64, 100});
  CHECK(m4.total() == Rational(1, 2));
}

TEST_CASE("weyl_sum basics") {
  auto nu = measure_at(SequenceFamily::interval(), 4);
  CHECK(std::abs(weyl_sum(nu, 0.0) - std::complex<double>{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(weyl_sum(nu, M_PI)) < 1e-12);  // alternating cancellation
}

TEST_CASE("weyl_sum matches the geometric closed form") {
  for (std::int64_t n_max : {100, 1000, 10000}) {
    auto nu = measure_at(SequenceFamily::interval(), n_max);
    for (double theta : {0.7, 2.1, 5.5}) {
      std::complex<double> q = std::polar(1.0, theta);
      std::complex<double> expect =
          q * (std::pow(q, static_cast<double>(n_max)) - 1.0) /
          (static_cast<double>(n_max) * (q - 1.0));
      auto got = weyl_sum(nu, theta);
      CHECK(std::abs(got - expect) < 1e-9 * std::abs(expect) + 1e-12);
    }
  }
}

TEST_CASE("weyl_sum linearity under restriction") {
  auto nu = measure_at(SequenceFamily::power_floor(Real("1.5")), 2000);
  auto a = restrict(nu, [](std::int64_t n) { return n % 3 == 0; });
  auto b = restrict(nu, [](std::int64_t n) { return n % 3 != 0; });
  for (double theta : {0.3, 1.9, 4.4}) {
    auto lhs = weyl_sum(a, theta) + weyl_sum(b, theta);
    CHECK(std::abs(lhs - weyl_sum(nu, theta)) < 1e-9);
  }
}

TEST_CASE("weyl_sum bounded by total mass") {
  auto nu = measure_at(SequenceFamily::power_floor(Real("1.5")), 500);
  for (double theta : default_theta_grid(64))
    CHECK(std::abs(weyl_sum(nu, theta)) <= 1.0 + 1e-12);
}

TEST_CASE("equidistribution profile: interval family decays geometrically") {
  std::vector<double> grid;
  for (int k = 1; k <= 7; ++k) grid.push_back(2.0 * M_PI * k / 8);
  auto rows = equidistribution_profile(SequenceFamily::interval(), grid, {1000});
  double bound = 2.0 / (1000.0 * std::abs(1.0 - std::polar(1.0, M_PI / 4)));
  CHECK(rows[0].max_abs <= bound + 1e-9);
}

TEST_CASE("equidistribution profile: point family never decays") {
  auto fam = SequenceFamily::explicit_values({0});
  auto rows = equidistribution_profile(fam, default_theta_grid(64), {1});
  CHECK(rows[0].max_abs == doctest::Approx(1.0));
}

TEST_CASE("d_nu extremes and direct recount") {
  auto fam = SequenceFamily::power_floor(Real("1.5"));
  CHECK(d_nu([](std::int64_t) { return true; }, fam, 100).value == 1);
  CHECK(d_nu([](std::int64_t) { return false; }, fam, 100).value == 0);

  auto even = [](std::int64_t n) { return n % 2 == 0; };
  auto res = d_nu(even, fam, 1000);
  // independent recount at the reported witness
  auto vals = family_values(fam, res.witness_j);
  std::int64_t hits = 0;
  for (auto v : vals) hits += (v % 2 == 0);
  CHECK(res.value == Rational(hits, res.witness_j));
  CHECK(res.tail_lo == 500);
  CHECK(res.tail_hi == 1000);
}
