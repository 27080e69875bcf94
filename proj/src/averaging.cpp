#include "sumsets/averaging.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "sumsets/parallel.hpp"

namespace sumsets {

Rational FiniteMeasure::total() const {
  Rational t = 0;
  for (const auto& w : weights) t += w;
  return t;
}

void FiniteMeasure::check() const {
  if (support.size() != weights.size())
    throw std::logic_error("FiniteMeasure: support/weight size mismatch");
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i > 0 && support[i] <= support[i - 1])
      throw std::logic_error("FiniteMeasure: support not sorted/unique");
    if (weights[i] < 0) throw std::logic_error("FiniteMeasure: negative weight");
  }
}

SequenceFamily SequenceFamily::interval() {
  return {IntervalFamily{}, "interval"};
}

SequenceFamily SequenceFamily::power_floor(const Real& alpha) {
  if (alpha <= 0) throw std::invalid_argument("power_floor: alpha must be > 0");
  if (alpha == floor(alpha))
    throw std::invalid_argument("power_floor: integer alpha rejected");
  return {PowerFloorFamily{alpha}, "power_floor"};
}

SequenceFamily SequenceFamily::genpoly(std::vector<GenPolyFamily::Term> terms) {
  if (terms.empty()) throw std::invalid_argument("genpoly: no terms");
  for (const auto& t : terms) {
    if (t.exponent < 1)
      throw std::invalid_argument("genpoly: exponent must be >= 1");
  }
  return {GenPolyFamily{std::move(terms)}, "genpoly"};
}

SequenceFamily SequenceFamily::explicit_values(std::vector<std::int64_t> v) {
  return {ExplicitFamily{std::move(v)}, "explicit"};
}

namespace {

// Snap threshold for floor ambiguity: 2^-40.
const Real kSnapEps = Real(1) / (Real(1ll << 40));

std::int64_t floor_with_flag(const Real& x, std::int64_t n,
                             FloorAmbiguityReport* flags) {
  Real nearest = floor(x + Real(0.5));
  if (abs(x - nearest) < kSnapEps) {
    if (flags) flags->ambiguous_n.push_back(n);
    if (nearest < Real(std::numeric_limits<std::int64_t>::min()) ||
        nearest > Real(std::numeric_limits<std::int64_t>::max()))
      throw std::overflow_error("family value exceeds int64 range");
    return static_cast<std::int64_t>(nearest);
  }
  Real f = floor(x);
  if (f < Real(std::numeric_limits<std::int64_t>::min()) ||
      f > Real(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("family value exceeds int64 range");
  return static_cast<std::int64_t>(f);
}

}  // namespace

std::int64_t family_value(const SequenceFamily& family, std::int64_t n,
                          FloorAmbiguityReport* flags) {
  if (n < 1) throw std::invalid_argument("family_value: n >= 1 required");
  if (std::holds_alternative<IntervalFamily>(family.kind)) return n;
  if (const auto* pf = std::get_if<PowerFloorFamily>(&family.kind)) {
    Real x = pow(Real(n), pf->alpha);
    return floor_with_flag(x, n, flags);
  }
  if (const auto* gp = std::get_if<GenPolyFamily>(&family.kind)) {
    Real x = 0;
    for (const auto& t : gp->terms) {
      Real p = 1;
      for (unsigned e = 0; e < t.exponent; ++e) p *= Real(n);
      x += t.coeff * p;
    }
    return floor_with_flag(x, n, flags);
  }
  const auto& ev = std::get<ExplicitFamily>(family.kind);
  if (n > static_cast<std::int64_t>(ev.values.size()))
    throw std::out_of_range("explicit family exhausted");
  return ev.values[static_cast<std::size_t>(n - 1)];
}

std::vector<std::int64_t> family_values(const SequenceFamily& family,
                                        std::int64_t j,
                                        FloorAmbiguityReport* flags) {
  if (j < 1) throw std::invalid_argument("family_values: j >= 1 required");
  std::vector<std::int64_t> out(static_cast<std::size_t>(j));
  for (std::int64_t n = 1; n <= j; ++n)
    out[static_cast<std::size_t>(n - 1)] = family_value(family, n, flags);
  return out;
}

FiniteMeasure measure_at(const SequenceFamily& family, std::int64_t j,
                         FloorAmbiguityReport* flags) {
  if (j < 1) throw std::invalid_argument("measure_at: j >= 1 required");
  std::vector<std::int64_t> vals = family_values(family, j, flags);
  std::map<std::int64_t, std::int64_t> mult;
  for (std::int64_t v : vals) ++mult[v];
  FiniteMeasure nu;
  nu.support.reserve(mult.size());
  nu.weights.reserve(mult.size());
  for (const auto& [v, m] : mult) {
    nu.support.push_back(v);
    nu.weights.emplace_back(m, j);
  }
  return nu;
}

FiniteMeasure restrict(const FiniteMeasure& nu, const MembershipFn& member) {
  FiniteMeasure out;
  for (std::size_t i = 0; i < nu.support.size(); ++i) {
    if (member(nu.support[i])) {
      out.support.push_back(nu.support[i]);
      out.weights.push_back(nu.weights[i]);
    }
  }
  return out;
}

FiniteMeasure restrict(const FiniteMeasure& nu, const WindowSet& a) {
  return restrict(nu, [&a](std::int64_t n) { return a.contains(n); });
}

std::complex<double> weyl_sum(const FiniteMeasure& nu, double theta) {
  DD r = dd_from_real(Real(theta) / (2 * real_pi()));
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < nu.support.size(); ++i) {
    acc += to_double(nu.weights[i]) * unit_phase(nu.support[i], r);
  }
  return acc;
}

std::vector<double> default_theta_grid(int resolution) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(resolution - 1));
  for (int k = 1; k < resolution; ++k)
    grid.push_back(2.0 * M_PI * k / resolution);
  return grid;
}

std::vector<ProfileRow> equidistribution_profile(
    const SequenceFamily& family, const std::vector<double>& theta_grid,
    const std::vector<std::int64_t>& j_list) {
  if (j_list.empty()) return {};
  std::vector<std::int64_t> js = j_list;
  std::sort(js.begin(), js.end());
  std::int64_t j_max = js.back();
  std::vector<std::int64_t> vals = family_values(family, j_max);

  // For each theta accumulate the raw sum over n, snapshotting at each j.
  // Mass-merging on collisions leaves the sum unchanged, so the raw
  // accumulation equals weyl_sum(measure_at(family, j), theta).
  std::vector<std::vector<double>> abs_at(js.size(),
                                          std::vector<double>(theta_grid.size()));
  parallel_for(static_cast<std::int64_t>(theta_grid.size()),
               [&](std::int64_t tb, std::int64_t te) {
    for (std::int64_t ti = tb; ti < te; ++ti) {
      DD r = dd_from_real(Real(theta_grid[static_cast<std::size_t>(ti)]) /
                          (2 * real_pi()));
      std::complex<double> acc{0.0, 0.0};
      std::size_t next_j = 0;
      for (std::int64_t n = 1; n <= j_max; ++n) {
        acc += unit_phase(vals[static_cast<std::size_t>(n - 1)], r);
        while (next_j < js.size() && js[next_j] == n) {
          abs_at[next_j][static_cast<std::size_t>(ti)] =
              std::abs(acc) / static_cast<double>(n);
          ++next_j;
        }
      }
    }
  });

  std::vector<ProfileRow> rows;
  for (std::size_t ji = 0; ji < js.size(); ++ji) {
    ProfileRow row{js[ji], 0.0, -1.0};
    for (std::size_t ti = 0; ti < theta_grid.size(); ++ti) {
      if (abs_at[ji][ti] > row.max_abs) {
        row.max_abs = abs_at[ji][ti];
        row.theta_argmax = theta_grid[ti];
      }
    }
    rows.push_back(row);
  }
  return rows;
}

SequenceDensity d_nu(const MembershipFn& member, const SequenceFamily& family,
                     std::int64_t j_max) {
  if (j_max < 1) throw std::invalid_argument("d_nu: j_max >= 1 required");
  std::int64_t tail_lo = std::max<std::int64_t>(1, j_max / 2);
  std::vector<std::int64_t> vals = family_values(family, j_max);
  std::int64_t hits = 0;
  SequenceDensity out;
  out.value = 0;
  out.witness_j = tail_lo;
  out.tail_lo = tail_lo;
  out.tail_hi = j_max;
  for (std::int64_t n = 1; n <= j_max; ++n) {
    if (member(vals[static_cast<std::size_t>(n - 1)])) ++hits;
    if (n >= tail_lo) {
      Rational v(hits, n);
      if (v > out.value) {
        out.value = v;
        out.witness_j = n;
      }
    }
  }
  return out;
}

SequenceDensity d_nu(const WindowSet& a, const SequenceFamily& family,
                     std::int64_t j_max) {
  return d_nu([&a](std::int64_t n) { return a.contains(n); }, family, j_max);
}

}  // namespace sumsets
