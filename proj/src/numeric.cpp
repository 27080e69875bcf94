#include "sumsets/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace sumsets {

Real real_pi() {
  // atan(1)*4 at full working precision.
  static const Real pi = atan(Real(1)) * 4;
  return pi;
}

Real real_sqrt2() {
  static const Real v = sqrt(Real(2));
  return v;
}

Real real_sqrt3() {
  static const Real v = sqrt(Real(3));
  return v;
}

Real real_golden() {
  static const Real v = (sqrt(Real(5)) - 1) / 2;
  return v;
}

Real resolve_real(const std::string& token) {
  if (token == "sqrt2") return real_sqrt2();
  if (token == "sqrt3") return real_sqrt3();
  if (token == "golden") return real_golden();
  if (token == "pi") return real_pi();
  if (token == "pi-frac") return frac(real_pi());
  try {
    return Real(token);
  } catch (const std::exception&) {
    throw std::invalid_argument("unrecognized real constant: '" + token + "'");
  }
}

Real frac(const Real& x) {
  Real f = x - floor(x);
  if (f < 0) f += 1;
  if (f >= 1) f -= 1;
  return f;
}

Real dist_to_integer(const Real& x) {
  Real f = frac(x);
  return f <= Real(0.5) ? f : Real(1) - f;
}

// ------------------------- double-double helpers ---------------------------

namespace {

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return {p, err};
}

inline DD dd_normalize(double hi, double lo) {
  DD s = two_sum(hi, lo);
  return s;
}

}  // namespace

DD dd_from_real(const Real& x) {
  double hi = static_cast<double>(x);
  double lo = static_cast<double>(x - Real(hi));
  return dd_normalize(hi, lo);
}

DD dd_from_double(double x) { return {x, 0.0}; }

DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  return dd_normalize(s.hi, lo);
}

DD dd_mul_double(DD a, double b) {
  DD p = two_prod(a.hi, b);
  double lo = p.lo + a.lo * b;
  return dd_normalize(p.hi, lo);
}

double dd_frac_mul(std::int64_t n, DD r) {
  // Split n so each product consumes at most ~26 bits, keeping the
  // double-double products exact.
  double nd = static_cast<double>(n);
  DD prod;
  if (n >= -(1ll << 26) && n < (1ll << 26)) {
    prod = dd_mul_double(r, nd);
  } else {
    std::int64_t n1 = n >> 26;            // high part
    std::int64_t n0 = n - (n1 << 26);     // low 26 bits
    // frac(n*r) = frac(n1 * frac(2^26 r) + n0 * r)
    DD r26 = dd_mul_double(r, static_cast<double>(1ll << 26));
    double f26 = std::floor(r26.hi);
    r26 = dd_add(r26, {-f26, 0.0});
    DD a = dd_mul_double(r26, static_cast<double>(n1));
    DD b = dd_mul_double(r, static_cast<double>(n0));
    prod = dd_add(a, b);
  }
  double fl = std::floor(prod.hi);
  double f = (prod.hi - fl) + prod.lo;
  if (f >= 1.0) f -= std::floor(f);
  if (f < 0.0) f += 1.0;
  return f;
}

std::complex<double> unit_phase(std::int64_t n, DD r) {
  double f = dd_frac_mul(n, r);
  double ang = 2.0 * M_PI * f;
  return {std::cos(ang), std::sin(ang)};
}

}  // namespace sumsets
