// kronecker.hpp
// Torus-rotation Kronecker systems on T^d: Bohr set generation, uniform
// rotation averages, pushforward densities and the restricted-average vs
// convolution comparison, the cut-shift-reassemble construction, and the
// excess-AP region search.

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumsets/averaging.hpp"
#include "sumsets/numeric.hpp"
#include "sumsets/windowset.hpp"

namespace sumsets {

// Rotation z -> z + alpha on T^d. Orbit points are computed from the
// extended-precision representation of alpha as frac(n * alpha), never by
// iterated addition, so there is no drift for n up to ~1e8.
class TorusRotation {
 public:
  TorusRotation(std::vector<Real> alpha_frac,
                std::vector<bool> irrational_flags = {});

  int dimension() const { return static_cast<int>(alpha_.size()); }
  const std::vector<Real>& alpha() const { return alpha_; }
  const std::vector<bool>& irrational_flags() const { return irrational_; }
  int precision_bits() const { return kRealMantissaBits; }

  // frac(z0 + n*alpha), componentwise, at full working precision.
  std::vector<Real> orbit_point(std::int64_t n,
                                const std::vector<Real>& z0 = {}) const;

 private:
  std::vector<Real> alpha_;       // fractional parts, each in [0,1)
  std::vector<bool> irrational_;  // caller-declared flags
};

// Axis-aligned half-open box in T^d; wraparound allowed per axis (a > b
// means [a,1) u [0,b)).
struct TorusBox {
  std::vector<Real> lo, hi;
};

// Finite union of boxes, canonicalized to disjoint non-wrapping boxes on
// construction so that the measure is a plain sum of volumes.
class TorusRegion {
 public:
  explicit TorusRegion(int dimension);
  TorusRegion(int dimension, std::vector<TorusBox> boxes);

  int dimension() const { return dimension_; }
  const std::vector<TorusBox>& boxes() const { return boxes_; }
  Real measure() const;
  bool contains(const std::vector<Real>& point) const;
  // Distance from the point to the nearest box boundary (for flags).
  Real boundary_distance(const std::vector<Real>& point) const;

  // Translate by t (mod 1 per axis).
  TorusRegion translated(const std::vector<Real>& t) const;
  TorusRegion intersect(const TorusRegion& other) const;
  TorusRegion unite(const TorusRegion& other) const;

  static TorusRegion full(int dimension);
  static TorusRegion interval(const Real& a, const Real& b);  // d = 1

 private:
  int dimension_;
  std::vector<TorusBox> boxes_;  // disjoint, non-wrapping
  void canonicalize(std::vector<TorusBox> raw);
};

// Finite trigonometric polynomial sum of c * e^{2 pi i <k, z>}.
struct TrigPolynomial {
  struct Term {
    std::vector<std::int64_t> freq;
    std::complex<double> coeff;
  };
  std::vector<Term> terms;

  std::complex<double> evaluate(const std::vector<double>& z) const;
  // Integral against Haar measure = coefficient of the zero frequency.
  std::complex<double> constant_term() const;
};

// Histogram of a pushed-forward measure on a regular grid; bin masses are
// exact rationals so mass conservation is exact.
struct EmpiricalDensity {
  int dimension;
  std::int64_t resolution;          // bins per axis
  std::vector<Rational> bin_mass;   // row-major over the grid
  Rational total() const;
};

struct BohrSetResult {
  WindowSet set;
  std::vector<std::int64_t> boundary_flagged;  // n within error of a boundary
};

// {n in [lo,hi] : frac(z0 + n*alpha) in region}.
BohrSetResult bohr_set(const TorusRotation& rot, const TorusRegion& region,
                       std::int64_t lo, std::int64_t hi,
                       const std::vector<Real>& z0 = {});

struct EntryGapReport {
  std::int64_t max_gap;  // maximal gap between consecutive entry times
  std::int64_t gap_at;   // entry time preceding the maximal gap
  std::int64_t entries;  // number of entry times found
};

EntryGapReport entry_gap_bound(const TorusRotation& rot,
                               const TorusRegion& region, std::int64_t lo,
                               std::int64_t hi);

// Sum over n of nu({n}) * f(z + n*alpha).
std::complex<double> rotation_average(const TrigPolynomial& f,
                                      const TorusRotation& rot,
                                      const FiniteMeasure& nu,
                                      const std::vector<Real>& z = {});

// Histogram of {frac(n*alpha)} weighted by eta.
EmpiricalDensity pushforward_density(const FiniteMeasure& eta,
                                     const TorusRotation& rot,
                                     std::int64_t grid_resolution);

struct ConvolutionComparisonReport {
  std::int64_t grid_resolution;
  double sup_discrepancy;     // || phi - f * psi ||_inf over the grid
  Rational psi_integral;      // = eta total, exactly
  Rational eta_total;
  bool mass_conserved;        // psi_integral == eta_total
};

// Compares the direct restricted average phi(z) = sum eta(n) f(z - n alpha)
// against the grid convolution of f with the empirical density. Grids with
// d > 3 are rejected (memory limit).
ConvolutionComparisonReport restricted_average_vs_convolution(
    const TrigPolynomial& f, const TorusRotation& rot, const FiniteMeasure& eta,
    std::int64_t grid_resolution);

struct CutShiftResult {
  WindowSet reassembled;              // union of (I_j cap B) + r_j in window
  TorusRegion residual_region;        // V = intersection over the cluster
  Real residual_measure;
  std::vector<std::size_t> cluster;   // indices j in the convergent cluster
  bool containment_verified;          // bohr(V) cap union(I_j + r_j) subset of output
  std::int64_t containment_failures;  // boundary-flagged points excluded
};

// Cut a Bohr set into the intervals I_j, shift piece j by r_j, reassemble;
// cluster the shift images frac(r_j alpha) and compute the residual region
// V = intersection of (U + r_j alpha) over the clustered tail.
CutShiftResult cut_shift_reassemble(
    const TorusRotation& rot, const TorusRegion& region,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& intervals,
    const std::vector<std::int64_t>& shifts, std::int64_t window_lo,
    std::int64_t window_hi, const Real& cluster_radius = Real(1) / 20);

struct ExcessApResult {
  std::vector<std::int64_t> successful_d;     // m(W_d) > m(U) - eps
  std::vector<Real> region_measure;           // m(W_d) for each successful d
  std::int64_t best_d = 0;
  Real best_measure;
  // Empirical certification on B for the best d (when B supplied).
  std::optional<DensityEstimate> empirical_density;
};

// Scans d in [d_lo, d_hi] for m(W_d) = m(intersection of U - l*d*alpha)
// exceeding m(U) - eps; optionally certifies the best d empirically against
// a WindowSet B via ap_intersection_density.
ExcessApResult excess_ap_search(const TorusRotation& rot,
                                const TorusRegion& region, std::int64_t k,
                                const Real& eps, std::int64_t d_lo,
                                std::int64_t d_hi,
                                const WindowSet* b = nullptr,
                                std::int64_t density_m = 100000);

}  // namespace sumsets
