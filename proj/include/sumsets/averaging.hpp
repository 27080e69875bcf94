// averaging.hpp
// Equidistributed averaging sequences as finitely supported measures:
// family constructors, restriction, Weyl exponential sums, and densities
// along a sequence of measures.

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "sumsets/numeric.hpp"
#include "sumsets/windowset.hpp"

namespace sumsets {

// Finitely supported measure on the integers. Probability measures have
// total 1 exactly; sub-probability measures (total <= 1) are permitted.
struct FiniteMeasure {
  std::vector<std::int64_t> support;  // sorted, duplicate-free
  std::vector<Rational> weights;      // nonnegative, aligned with support

  Rational total() const;
  bool is_probability() const { return total() == 1; }
  // Validates invariants (sorted support, nonnegative weights).
  void check() const;
};

struct IntervalFamily {};
struct PowerFloorFamily {
  Real alpha;  // > 0, non-integer (checked at construction)
};
struct GenPolyFamily {
  // Sum of coeff * n^exponent terms; the caller flags irrationality,
  // the library does not prove it.
  struct Term {
    Real coeff;
    unsigned exponent;  // >= 1
  };
  std::vector<Term> terms;
};
struct ExplicitFamily {
  std::vector<std::int64_t> values;  // n-th set is the first j values
};

struct SequenceFamily {
  std::variant<IntervalFamily, PowerFloorFamily, GenPolyFamily, ExplicitFamily>
      kind;
  std::string description;

  static SequenceFamily interval();
  static SequenceFamily power_floor(const Real& alpha);  // rejects integer alpha
  static SequenceFamily genpoly(std::vector<GenPolyFamily::Term> terms);
  static SequenceFamily explicit_values(std::vector<std::int64_t> values);
};

// Floor evaluations within 2^-40 of an integer are snapped to it and
// reported here; the floor of an exact real is discontinuous, so these
// points are flagged rather than silently trusted.
struct FloorAmbiguityReport {
  std::vector<std::int64_t> ambiguous_n;
};

// The n-th raw value of the family (before deduplication), n >= 1.
std::int64_t family_value(const SequenceFamily& family, std::int64_t n,
                          FloorAmbiguityReport* flags = nullptr);
// First j raw values.
std::vector<std::int64_t> family_values(const SequenceFamily& family,
                                        std::int64_t j,
                                        FloorAmbiguityReport* flags = nullptr);

// Normalized counting measure on the family's j-th finite set; colliding
// floor values merge their mass, so the total is always exactly 1.
FiniteMeasure measure_at(const SequenceFamily& family, std::int64_t j,
                         FloorAmbiguityReport* flags = nullptr);

using MembershipFn = std::function<bool(std::int64_t)>;

// eta(E) = nu(A \cap E): sub-probability restriction.
FiniteMeasure restrict(const FiniteMeasure& nu, const MembershipFn& member);
FiniteMeasure restrict(const FiniteMeasure& nu, const WindowSet& a);

// Sum of w_n * e^{i n theta}; theta = 0 returns the total mass.
std::complex<double> weyl_sum(const FiniteMeasure& nu, double theta);

struct ProfileRow {
  std::int64_t j;
  double theta_argmax;
  double max_abs;
};

// For each j, max over the grid of |weyl_sum(measure_at(family,j), theta)|.
// The caller supplies the grid (theta = 0 must be excluded by the caller).
std::vector<ProfileRow> equidistribution_profile(
    const SequenceFamily& family, const std::vector<double>& theta_grid,
    const std::vector<std::int64_t>& j_list);

// Default grid {2 pi k / resolution : 1 <= k <= resolution-1}.
std::vector<double> default_theta_grid(int resolution = 1024);

struct SequenceDensity {
  Rational value;           // max over the scanned tail of nu_j(A)
  std::int64_t witness_j;   // j achieving the max
  std::int64_t tail_lo, tail_hi;  // scanned j range [j_max/2, j_max]
};

// d_nu(A) approximated by max over j in [j_max/2, j_max] of nu_j(A).
SequenceDensity d_nu(const MembershipFn& member, const SequenceFamily& family,
                     std::int64_t j_max);
SequenceDensity d_nu(const WindowSet& a, const SequenceFamily& family,
                     std::int64_t j_max);

}  // namespace sumsets
