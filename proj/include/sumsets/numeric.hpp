// numeric.hpp
// Shared numeric types: exact rationals for counts and densities,
// extended-precision reals (192-bit mantissa) for orbit arithmetic,
// and a double-double helper for fast fractional-part evaluation.

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumsets {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// 192 binary digits of mantissa. Enough for frac(n*alpha) with n up to 1e8
// while keeping well over 128 significant bits, per the documented contract.
using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<192, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

inline constexpr int kRealMantissaBits = 192;

Real real_pi();
Real real_sqrt2();
Real real_sqrt3();
Real real_golden();  // frac of the golden ratio, (sqrt(5)-1)/2

// Resolves a named constant or decimal literal: "sqrt2", "sqrt3", "golden",
// "pi", "pi-frac", or e.g. "0.375". Throws std::invalid_argument otherwise.
Real resolve_real(const std::string& token);

// Fractional part in [0,1).
Real frac(const Real& x);

// Distance to the nearest integer.
Real dist_to_integer(const Real& x);

inline double to_double(const Real& x) { return static_cast<double>(x); }
inline double to_double(const Rational& q) { return static_cast<double>(q); }

// ---------------------------------------------------------------------------
// Double-double: an unevaluated sum hi+lo with ~106 bits of precision.
// Used for phase computation n*theta mod 2pi inside Weyl sums, where a
// full multiprecision multiply per term would dominate the runtime.
// ---------------------------------------------------------------------------
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

DD dd_from_real(const Real& x);
DD dd_from_double(double x);
DD dd_add(DD a, DD b);
DD dd_mul_double(DD a, double b);
// Fractional part of n*r, exact to ~1e-28 for |n| < 2^52.
double dd_frac_mul(std::int64_t n, DD r);

// e^{2*pi*i * frac(n*r)} where r is a rotation number in [0,1).
std::complex<double> unit_phase(std::int64_t n, DD r);

}  // namespace sumsets
