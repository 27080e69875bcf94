#include <doctest.h>

#include <cmath>
#include <random>

#include "sumsets/numeric.hpp"

using namespace sumsets;

TEST_CASE("frac maps into [0,1) and is periodic") {
  CHECK(frac(Real("2.25")) == Real("0.25"));
  CHECK(frac(Real("-0.25")) == Real("0.75"));
  CHECK(frac(Real(7)) == Real(0));
  CHECK(frac(real_sqrt2()) == real_sqrt2() - 1);
}

TEST_CASE("dist_to_integer") {
  CHECK(dist_to_integer(Real("0.25")) == Real("0.25"));
  CHECK(dist_to_integer(Real("2.9")) == Real(3) - Real("2.9"));
  CHECK(dist_to_integer(Real(5)) == Real(0));
}

TEST_CASE("named constants resolve") {
  CHECK(abs(resolve_real("sqrt2") * resolve_real("sqrt2") - 2) <
        ldexp(Real(1), -180));
  CHECK(abs(resolve_real("sqrt3") * resolve_real("sqrt3") - 3) <
        ldexp(Real(1), -180));
  // golden = (sqrt5 - 1)/2 satisfies x^2 + x = 1
  Real g = resolve_real("golden");
  CHECK(abs(g * g + g - 1) < ldexp(Real(1), -180));
  CHECK(resolve_real("0.375") == Real(3) / 8);
  CHECK_THROWS_AS(resolve_real("nonsense"), std::invalid_argument);
}

TEST_CASE("double-double fractional multiply matches full precision") {
  Real alpha = frac(real_sqrt2());
  DD r = dd_from_real(alpha);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(1, std::int64_t(1) << 48);
  for (int t = 0; t < 200; ++t) {
    std::int64_t n = dist(rng);
    double fast = dd_frac_mul(n, r);
    double slow = to_double(frac(Real(n) * alpha));
    double diff = std::abs(fast - slow);
    diff = std::min(diff, 1.0 - diff);  // wrap at the 0/1 seam
    CHECK(diff < 1e-18);
  }
}

TEST_CASE("unit_phase lies on the unit circle") {
  DD r = dd_from_real(frac(real_sqrt3()));
  for (std::int64_t n : {1, 17, 123456, 99999999}) {
    auto z = unit_phase(n, r);
    CHECK(std::abs(std::abs(z) - 1.0) < 1e-14);
  }
}
