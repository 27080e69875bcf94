#include "sumsets/kronecker.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "sumsets/convolution.hpp"
#include "sumsets/parallel.hpp"

namespace sumsets {

namespace {

// Declared orbit-arithmetic error bound: well below 2^-120 for n <= 1e8
// at 192 mantissa bits; points closer than this to a region boundary are
// flagged.
const Real kBoundaryTol = Real(1) / pow(Real(2), 120);

Real wrap_distance(const Real& a, const Real& b) {
  Real d = abs(a - b);
  return d <= Real(0.5) ? d : Real(1) - d;
}

}  // namespace

// --------------------------- TorusRotation ---------------------------------

TorusRotation::TorusRotation(std::vector<Real> alpha_frac,
                             std::vector<bool> irrational_flags)
    : alpha_(std::move(alpha_frac)), irrational_(std::move(irrational_flags)) {
  if (alpha_.empty())
    throw std::invalid_argument("TorusRotation: dimension must be >= 1");
  for (auto& a : alpha_) a = frac(a);
  if (irrational_.empty()) irrational_.assign(alpha_.size(), true);
  if (irrational_.size() != alpha_.size())
    throw std::invalid_argument("TorusRotation: flag/alpha size mismatch");
}

std::vector<Real> TorusRotation::orbit_point(std::int64_t n,
                                             const std::vector<Real>& z0) const {
  if (!z0.empty() && static_cast<int>(z0.size()) != dimension())
    throw std::invalid_argument("orbit_point: z0 dimension mismatch");
  std::vector<Real> p(alpha_.size());
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    Real v = Real(n) * alpha_[i];
    if (!z0.empty()) v += z0[i];
    p[i] = frac(v);
  }
  return p;
}

// ---------------------------- TorusRegion ----------------------------------

TorusRegion::TorusRegion(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw std::invalid_argument("TorusRegion: dimension >= 1");
}

TorusRegion::TorusRegion(int dimension, std::vector<TorusBox> boxes)
    : dimension_(dimension) {
  if (dimension < 1) throw std::invalid_argument("TorusRegion: dimension >= 1");
  canonicalize(std::move(boxes));
}

namespace {

bool box_empty(const TorusBox& b) {
  for (std::size_t i = 0; i < b.lo.size(); ++i) {
    if (b.lo[i] >= b.hi[i]) return true;
  }
  return false;
}

// A \ B as a list of disjoint boxes (all non-wrapping).
std::vector<TorusBox> box_subtract(const TorusBox& a, const TorusBox& b) {
  const std::size_t d = a.lo.size();
  // No overlap: return a unchanged.
  for (std::size_t i = 0; i < d; ++i) {
    if (b.hi[i] <= a.lo[i] || b.lo[i] >= a.hi[i]) return {a};
  }
  std::vector<TorusBox> out;
  TorusBox core = a;  // progressively clipped to b along handled axes
  for (std::size_t i = 0; i < d; ++i) {
    if (b.lo[i] > core.lo[i]) {
      TorusBox left = core;
      left.hi[i] = b.lo[i];
      out.push_back(left);
    }
    if (b.hi[i] < core.hi[i]) {
      TorusBox right = core;
      right.lo[i] = b.hi[i];
      out.push_back(right);
    }
    core.lo[i] = std::max(core.lo[i], b.lo[i]);
    core.hi[i] = std::min(core.hi[i], b.hi[i]);
  }
  return out;
}

}  // namespace

void TorusRegion::canonicalize(std::vector<TorusBox> raw) {
  // 1) split wrapping axes (lo > hi, or hi > 1) into non-wrapping pieces.
  std::vector<TorusBox> flat;
  for (auto& b : raw) {
    if (static_cast<int>(b.lo.size()) != dimension_ ||
        static_cast<int>(b.hi.size()) != dimension_)
      throw std::invalid_argument("TorusBox: dimension mismatch");
    std::vector<TorusBox> acc{TorusBox{{}, {}}};
    for (int i = 0; i < dimension_; ++i) {
      Real lo = frac(b.lo[i]);
      Real raw_hi = b.hi[i];
      // Normalize hi: allow exactly 1; otherwise wrap into [0,1).
      Real hi = (raw_hi == 1) ? Real(1) : frac(raw_hi);
      std::vector<std::pair<Real, Real>> segs;
      if (raw_hi - b.lo[i] >= 1) {
        // Axis length >= 1 covers the whole circle (e.g. a translated full
        // axis arriving as [t, t+1)); frac would collapse it to empty.
        segs.emplace_back(Real(0), Real(1));
      } else if (hi > lo) {
        segs.emplace_back(lo, hi);
      } else if (hi == lo) {
        // Empty interval.
      } else {
        segs.emplace_back(lo, Real(1));
        if (hi > 0) segs.emplace_back(Real(0), hi);
      }
      std::vector<TorusBox> next;
      for (const auto& base : acc) {
        for (const auto& [slo, shi] : segs) {
          TorusBox nb = base;
          nb.lo.push_back(slo);
          nb.hi.push_back(shi);
          next.push_back(std::move(nb));
        }
      }
      acc = std::move(next);
    }
    for (auto& p : acc)
      if (!box_empty(p)) flat.push_back(std::move(p));
  }
  // 2) disjointify: subtract all previously accepted boxes from each new one.
  boxes_.clear();
  for (const auto& b : flat) {
    std::vector<TorusBox> pieces{b};
    for (const auto& have : boxes_) {
      std::vector<TorusBox> next;
      for (const auto& p : pieces) {
        auto sub = box_subtract(p, have);
        next.insert(next.end(), sub.begin(), sub.end());
      }
      pieces = std::move(next);
    }
    for (auto& p : pieces)
      if (!box_empty(p)) boxes_.push_back(std::move(p));
  }
}

Real TorusRegion::measure() const {
  Real m = 0;
  for (const auto& b : boxes_) {
    Real v = 1;
    for (int i = 0; i < dimension_; ++i) v *= b.hi[i] - b.lo[i];
    m += v;
  }
  return m;
}

bool TorusRegion::contains(const std::vector<Real>& point) const {
  for (const auto& b : boxes_) {
    bool inside = true;
    for (int i = 0; i < dimension_ && inside; ++i) {
      inside = point[i] >= b.lo[i] && point[i] < b.hi[i];
    }
    if (inside) return true;
  }
  return false;
}

Real TorusRegion::boundary_distance(const std::vector<Real>& point) const {
  Real best = Real(1);
  for (const auto& b : boxes_) {
    for (int i = 0; i < dimension_; ++i) {
      best = std::min(best, wrap_distance(point[i], b.lo[i]));
      best = std::min(best, wrap_distance(point[i], frac(b.hi[i])));
    }
  }
  return best;
}

TorusRegion TorusRegion::translated(const std::vector<Real>& t) const {
  if (static_cast<int>(t.size()) != dimension_)
    throw std::invalid_argument("translated: dimension mismatch");
  std::vector<TorusBox> moved;
  for (const auto& b : boxes_) {
    TorusBox nb;
    nb.lo.resize(dimension_);
    nb.hi.resize(dimension_);
    for (int i = 0; i < dimension_; ++i) {
      Real len = b.hi[i] - b.lo[i];
      nb.lo[i] = frac(b.lo[i] + t[i]);
      nb.hi[i] = nb.lo[i] + len;  // may exceed 1; canonicalize wraps it
    }
    moved.push_back(std::move(nb));
  }
  return TorusRegion(dimension_, std::move(moved));
}

TorusRegion TorusRegion::intersect(const TorusRegion& other) const {
  if (other.dimension_ != dimension_)
    throw std::invalid_argument("intersect: dimension mismatch");
  std::vector<TorusBox> out;
  for (const auto& a : boxes_) {
    for (const auto& b : other.boxes_) {
      TorusBox c;
      c.lo.resize(dimension_);
      c.hi.resize(dimension_);
      bool ok = true;
      for (int i = 0; i < dimension_ && ok; ++i) {
        c.lo[i] = std::max(a.lo[i], b.lo[i]);
        c.hi[i] = std::min(a.hi[i], b.hi[i]);
        ok = c.lo[i] < c.hi[i];
      }
      if (ok) out.push_back(std::move(c));
    }
  }
  TorusRegion r(dimension_);
  r.boxes_ = std::move(out);  // intersections of disjoint families stay disjoint
  return r;
}

TorusRegion TorusRegion::unite(const TorusRegion& other) const {
  if (other.dimension_ != dimension_)
    throw std::invalid_argument("unite: dimension mismatch");
  std::vector<TorusBox> all = boxes_;
  all.insert(all.end(), other.boxes_.begin(), other.boxes_.end());
  return TorusRegion(dimension_, std::move(all));
}

TorusRegion TorusRegion::full(int dimension) {
  TorusBox b;
  b.lo.assign(dimension, Real(0));
  b.hi.assign(dimension, Real(1));
  return TorusRegion(dimension, {b});
}

TorusRegion TorusRegion::interval(const Real& a, const Real& b) {
  TorusBox box;
  box.lo = {a};
  box.hi = {b};
  return TorusRegion(1, {box});
}

// --------------------------- TrigPolynomial --------------------------------

std::complex<double> TrigPolynomial::evaluate(const std::vector<double>& z) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& t : terms) {
    double phase = 0.0;
    for (std::size_t i = 0; i < t.freq.size(); ++i)
      phase += static_cast<double>(t.freq[i]) * z[i];
    acc += t.coeff * std::polar(1.0, 2.0 * M_PI * phase);
  }
  return acc;
}

std::complex<double> TrigPolynomial::constant_term() const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& t : terms) {
    bool zero = true;
    for (std::int64_t k : t.freq) zero = zero && (k == 0);
    if (zero) acc += t.coeff;
  }
  return acc;
}

Rational EmpiricalDensity::total() const {
  Rational t = 0;
  for (const auto& m : bin_mass) t += m;
  return t;
}

// ------------------------------ operations ---------------------------------

BohrSetResult bohr_set(const TorusRotation& rot, const TorusRegion& region,
                       std::int64_t lo, std::int64_t hi,
                       const std::vector<Real>& z0) {
  if (region.dimension() != rot.dimension())
    throw std::invalid_argument("bohr_set: dimension mismatch");
  BohrSetResult res{WindowSet(lo, hi, "bohr"), {}};
  for (std::int64_t n = lo; n <= hi; ++n) {
    std::vector<Real> p = rot.orbit_point(n, z0);
    if (region.contains(p)) res.set.insert(n);
    if (region.boundary_distance(p) < kBoundaryTol)
      res.boundary_flagged.push_back(n);
  }
  return res;
}

EntryGapReport entry_gap_bound(const TorusRotation& rot,
                               const TorusRegion& region, std::int64_t lo,
                               std::int64_t hi) {
  BohrSetResult b = bohr_set(rot, region, lo, hi);
  std::vector<std::int64_t> es = b.set.elements();
  EntryGapReport rep{0, lo, static_cast<std::int64_t>(es.size())};
  for (std::size_t i = 1; i < es.size(); ++i) {
    std::int64_t gap = es[i] - es[i - 1];
    if (gap > rep.max_gap) {
      rep.max_gap = gap;
      rep.gap_at = es[i - 1];
    }
  }
  return rep;
}

std::complex<double> rotation_average(const TrigPolynomial& f,
                                      const TorusRotation& rot,
                                      const FiniteMeasure& nu,
                                      const std::vector<Real>& z) {
  // Per character: f_k(z + n alpha) = e^{2 pi i <k,z>} e^{2 pi i n <k,alpha>},
  // so the average factors through one inner sum per term.
  std::vector<Real> z_use = z;
  if (z_use.empty()) z_use.assign(rot.dimension(), Real(0));
  std::complex<double> acc{0.0, 0.0};
  for (const auto& term : f.terms) {
    Real gamma = 0;
    double zphase = 0.0;
    for (int i = 0; i < rot.dimension(); ++i) {
      gamma += Real(term.freq[static_cast<std::size_t>(i)]) * rot.alpha()[static_cast<std::size_t>(i)];
      zphase += static_cast<double>(term.freq[static_cast<std::size_t>(i)]) *
                to_double(z_use[static_cast<std::size_t>(i)]);
    }
    DD r = dd_from_real(frac(gamma));
    std::complex<double> inner{0.0, 0.0};
    for (std::size_t i = 0; i < nu.support.size(); ++i)
      inner += to_double(nu.weights[i]) * unit_phase(nu.support[i], r);
    acc += term.coeff * std::polar(1.0, 2.0 * M_PI * zphase) * inner;
  }
  return acc;
}

EmpiricalDensity pushforward_density(const FiniteMeasure& eta,
                                     const TorusRotation& rot,
                                     std::int64_t grid_resolution) {
  if (grid_resolution < 1)
    throw std::invalid_argument("pushforward_density: resolution >= 1");
  int d = rot.dimension();
  std::int64_t cells = 1;
  for (int i = 0; i < d; ++i) {
    cells *= grid_resolution;
    if (cells > (1ll << 21))
      throw std::invalid_argument("pushforward_density: grid too large");
  }
  EmpiricalDensity out;
  out.dimension = d;
  out.resolution = grid_resolution;
  out.bin_mass.assign(static_cast<std::size_t>(cells), Rational(0));
  for (std::size_t i = 0; i < eta.support.size(); ++i) {
    std::vector<Real> p = rot.orbit_point(eta.support[i]);
    std::int64_t idx = 0;
    for (int a = 0; a < d; ++a) {
      std::int64_t bin =
          static_cast<std::int64_t>(floor(p[static_cast<std::size_t>(a)] *
                                          Real(grid_resolution)));
      bin = std::clamp<std::int64_t>(bin, 0, grid_resolution - 1);
      idx = idx * grid_resolution + bin;
    }
    out.bin_mass[static_cast<std::size_t>(idx)] += eta.weights[i];
  }
  return out;
}

ConvolutionComparisonReport restricted_average_vs_convolution(
    const TrigPolynomial& f, const TorusRotation& rot, const FiniteMeasure& eta,
    std::int64_t grid_resolution) {
  int d = rot.dimension();
  if (d > 3)
    throw std::invalid_argument(
        "restricted_average_vs_convolution: d > 3 grids rejected");
  EmpiricalDensity psi = pushforward_density(eta, rot, grid_resolution);
  std::int64_t cells = static_cast<std::int64_t>(psi.bin_mass.size());

  std::vector<std::int64_t> moduli(static_cast<std::size_t>(d),
                                   grid_resolution);
  auto cell_point = [&](std::int64_t idx) {
    std::vector<double> z(static_cast<std::size_t>(d));
    for (int i = d; i-- > 0;) {
      z[static_cast<std::size_t>(i)] =
          static_cast<double>(idx % grid_resolution) /
          static_cast<double>(grid_resolution);
      idx /= grid_resolution;
    }
    return z;
  };

  // Direct restricted average phi(z) = sum_n eta(n) f(z - n alpha):
  // factor each character through its inner Weyl-type sum.
  std::vector<std::complex<double>> phi(static_cast<std::size_t>(cells));
  std::vector<std::complex<double>> inner_sums;
  for (const auto& term : f.terms) {
    Real gamma = 0;
    for (int i = 0; i < d; ++i)
      gamma += Real(term.freq[static_cast<std::size_t>(i)]) *
               rot.alpha()[static_cast<std::size_t>(i)];
    DD r = dd_from_real(frac(-gamma));
    std::complex<double> inner{0.0, 0.0};
    for (std::size_t i = 0; i < eta.support.size(); ++i)
      inner += to_double(eta.weights[i]) * unit_phase(eta.support[i], r);
    inner_sums.push_back(inner);
  }
  for (std::int64_t c = 0; c < cells; ++c) {
    std::vector<double> z = cell_point(c);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t t = 0; t < f.terms.size(); ++t) {
      double phase = 0.0;
      for (int i = 0; i < d; ++i)
        phase += static_cast<double>(f.terms[t].freq[static_cast<std::size_t>(i)]) *
                 z[static_cast<std::size_t>(i)];
      acc += f.terms[t].coeff * std::polar(1.0, 2.0 * M_PI * phase) *
             inner_sums[t];
    }
    phi[static_cast<std::size_t>(c)] = acc;
  }

  // Grid convolution with the empirical density, via the shared cyclic
  // kernel on (Z/g)^d: (f * psi)(t) ~= sum_b f(z_b) mass(t - b).
  std::vector<std::complex<double>> f_samples(static_cast<std::size_t>(cells));
  std::vector<std::complex<double>> mass(static_cast<std::size_t>(cells));
  for (std::int64_t c = 0; c < cells; ++c) {
    f_samples[static_cast<std::size_t>(c)] = f.evaluate(cell_point(c));
    mass[static_cast<std::size_t>(c)] =
        to_double(psi.bin_mass[static_cast<std::size_t>(c)]);
  }
  std::vector<std::complex<double>> conv =
      cyclic_convolve_raw(moduli, f_samples, mass);

  ConvolutionComparisonReport rep;
  rep.grid_resolution = grid_resolution;
  rep.eta_total = eta.total();
  rep.psi_integral = psi.total();
  rep.mass_conserved = rep.psi_integral == rep.eta_total;
  double sup = 0.0;
  for (std::int64_t c = 0; c < cells; ++c)
    sup = std::max(sup, std::abs(phi[static_cast<std::size_t>(c)] -
                                 conv[static_cast<std::size_t>(c)]));
  rep.sup_discrepancy = sup;
  return rep;
}

CutShiftResult cut_shift_reassemble(
    const TorusRotation& rot, const TorusRegion& region,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& intervals,
    const std::vector<std::int64_t>& shifts, std::int64_t window_lo,
    std::int64_t window_hi, const Real& cluster_radius) {
  if (intervals.size() != shifts.size())
    throw std::invalid_argument("cut_shift_reassemble: plan size mismatch");
  CutShiftResult res{WindowSet(window_lo, window_hi, "cut-shift"),
                     TorusRegion::full(rot.dimension()), Real(0), {}, true, 0};

  // Reassemble union of (I_j cap B) + r_j, clipped to the window.
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    auto [ilo, ihi] = intervals[j];
    for (std::int64_t n = ilo; n <= ihi; ++n) {
      std::int64_t m = n + shifts[j];
      if (m < window_lo || m > window_hi) continue;
      if (region.contains(rot.orbit_point(n))) res.reassembled.insert(m);
    }
  }

  // Cluster the shift images frac(r_j alpha): pick the center with the
  // most neighbors within cluster_radius (per-axis wrap distance).
  std::vector<std::vector<Real>> images;
  for (std::int64_t r : shifts) images.push_back(rot.orbit_point(r));
  std::size_t best_center = 0, best_count = 0;
  for (std::size_t a = 0; a < images.size(); ++a) {
    std::size_t cnt = 0;
    for (std::size_t b = 0; b < images.size(); ++b) {
      bool close = true;
      for (int i = 0; i < rot.dimension() && close; ++i)
        close = wrap_distance(images[a][static_cast<std::size_t>(i)],
                              images[b][static_cast<std::size_t>(i)]) <=
                cluster_radius;
      cnt += close;
    }
    if (cnt > best_count) {
      best_count = cnt;
      best_center = a;
    }
  }
  for (std::size_t b = 0; b < images.size(); ++b) {
    bool close = true;
    for (int i = 0; i < rot.dimension() && close; ++i)
      close = wrap_distance(images[best_center][static_cast<std::size_t>(i)],
                            images[b][static_cast<std::size_t>(i)]) <=
              cluster_radius;
    if (close) res.cluster.push_back(b);
  }

  // Residual region V = intersection over the cluster of U + r_j alpha.
  TorusRegion v = region.translated(images[res.cluster.front()]);
  for (std::size_t idx = 1; idx < res.cluster.size(); ++idx)
    v = v.intersect(region.translated(images[res.cluster[idx]]));
  res.residual_region = v;
  res.residual_measure = v.measure();

  // Containment check: bohr(V) intersected with the clustered shifted
  // intervals must lie inside the reassembled set.
  res.containment_failures = 0;
  for (std::size_t ci : res.cluster) {
    auto [ilo, ihi] = intervals[ci];
    std::int64_t slo = std::max(window_lo, ilo + shifts[ci]);
    std::int64_t shi = std::min(window_hi, ihi + shifts[ci]);
    for (std::int64_t m = slo; m <= shi; ++m) {
      std::vector<Real> p = rot.orbit_point(m);
      if (!v.contains(p)) continue;
      if (!res.reassembled.contains(m)) {
        if (v.boundary_distance(p) < kBoundaryTol) continue;  // flagged
        ++res.containment_failures;
      }
    }
  }
  res.containment_verified = res.containment_failures == 0;
  return res;
}

ExcessApResult excess_ap_search(const TorusRotation& rot,
                                const TorusRegion& region, std::int64_t k,
                                const Real& eps, std::int64_t d_lo,
                                std::int64_t d_hi, const WindowSet* b,
                                std::int64_t density_m) {
  if (k < 0) throw std::invalid_argument("excess_ap_search: k >= 0");
  ExcessApResult res;
  res.best_measure = Real(-1);
  Real threshold = region.measure() - eps;
  for (std::int64_t d = d_lo; d <= d_hi; ++d) {
    TorusRegion w = region;
    for (std::int64_t l = 1; l <= k; ++l) {
      std::vector<Real> t(static_cast<std::size_t>(rot.dimension()));
      for (int i = 0; i < rot.dimension(); ++i)
        t[static_cast<std::size_t>(i)] =
            frac(Real(-l * d) * rot.alpha()[static_cast<std::size_t>(i)]);
      w = w.intersect(region.translated(t));
    }
    Real m = w.measure();
    if (m > threshold) {
      res.successful_d.push_back(d);
      res.region_measure.push_back(m);
    }
    if (m > res.best_measure) {
      res.best_measure = m;
      res.best_d = d;
    }
  }
  if (b != nullptr && res.best_d > 0) {
    res.empirical_density =
        ap_intersection_density(*b, k, res.best_d,
                                std::min<std::int64_t>(density_m, b->length()));
  }
  return res;
}

}  // namespace sumsets
