#include "sumsets/verify.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "sumsets/parallel.hpp"

namespace sumsets {

namespace {

// Copy of s restricted to [lo,hi] (word-level).
WindowSet restrict_to(const WindowSet& s, std::int64_t lo, std::int64_t hi) {
  lo = std::max(lo, s.lo());
  hi = std::min(hi, s.hi());
  if (lo > hi) return WindowSet(s.lo(), s.lo());
  WindowSet out(lo, hi);
  or_shifted(out.mutable_words(), out.length(), s.words(), s.length(),
             s.lo() - lo);
  out.mask_tail();
  return out;
}

}  // namespace

ThicknessReport verify_thickness(const WindowSet& a, const WindowSet& b,
                                 std::int64_t out_lo, std::int64_t out_hi,
                                 std::int64_t max_interval_L,
                                 std::int64_t margin) {
  WindowSet s = sumset(a, b, out_lo, out_hi);
  ThicknessReport rep;
  rep.window_lo = out_lo;
  rep.window_hi = out_hi;
  rep.margin = margin;
  rep.max_interval_L = max_interval_L;
  rep.longest_run_overall = longest_run(s);
  WindowSet interior = restrict_to(s, out_lo + margin, out_hi - margin);
  std::int64_t run_lo = 0;
  rep.interior_longest_run = longest_run(interior, &run_lo);
  rep.interior_run_lo = run_lo;
  rep.all_lengths_present = rep.interior_longest_run >= max_interval_L;
  return rep;
}

namespace {

// Top local maxima of the Fourier magnitude spectrum of the indicator,
// reported as rotation candidates k/N (grid-accurate only).
std::vector<double> harvest_rotations(const WindowSet& s, int count) {
  const std::int64_t n = s.length();
  if (n < 16 || count <= 0) return {};
  std::vector<double> in(static_cast<std::size_t>(n), 0.0);
  for (std::int64_t i = 0; i < n; ++i)
    if (s.contains(s.lo() + i)) in[static_cast<std::size_t>(i)] = 1.0;
  std::size_t out_n = static_cast<std::size_t>(n / 2 + 1);
  std::vector<std::complex<double>> out(out_n);
  fftw_plan plan = fftw_plan_dft_r2c_1d(
      static_cast<int>(n), in.data(),
      reinterpret_cast<fftw_complex*>(out.data()), FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);

  std::vector<double> mag(out_n);
  for (std::size_t i = 0; i < out_n; ++i) mag[i] = std::abs(out[i]);
  std::vector<double> picks;
  for (int c = 0; c < count; ++c) {
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t k = 1; k + 1 < out_n; ++k)
      if (mag[k] > best_mag) {
        best_mag = mag[k];
        best = k;
      }
    if (best_mag <= 0.0) break;
    picks.push_back(static_cast<double>(best) / static_cast<double>(n));
    // Blank the peak's neighborhood so the next pick is a distinct peak.
    for (std::size_t k = best >= 3 ? best - 3 : 1; k <= best + 3 && k < out_n;
         ++k)
      mag[k] = -1.0;
  }
  return picks;
}

// Widest free arc for one candidate rotation: bins hit by non-member
// phases are forbidden per block; the worst tenth of the blocks is dropped
// (the thick-subfamily allowance) and the rest are intersected.
BohrContentCandidate scan_candidate(const WindowSet& s, DD r, double alpha,
                                    bool harvested, int bins,
                                    std::int64_t block_len) {
  const std::int64_t n_blocks =
      std::max<std::int64_t>(1, (s.length() + block_len - 1) / block_len);
  std::vector<std::vector<bool>> forbidden(
      static_cast<std::size_t>(n_blocks),
      std::vector<bool>(static_cast<std::size_t>(bins), false));
  for (std::int64_t n = s.lo(); n <= s.hi(); ++n) {
    if (s.contains(n)) continue;
    double ph = dd_frac_mul(n, r);
    int bin = static_cast<int>(ph * bins);
    if (bin >= bins) bin = bins - 1;
    std::size_t blk = static_cast<std::size_t>((n - s.lo()) / block_len);
    forbidden[blk][static_cast<std::size_t>(bin)] = true;
  }
  // Rank blocks by how smeared they are, drop the worst tenth.
  std::vector<std::pair<std::int64_t, std::size_t>> load;
  for (std::size_t b = 0; b < forbidden.size(); ++b) {
    std::int64_t c = 0;
    for (bool f : forbidden[b]) c += f;
    load.emplace_back(c, b);
  }
  std::sort(load.begin(), load.end());
  std::size_t keep = load.size() - load.size() / 10;
  std::vector<bool> any(static_cast<std::size_t>(bins), false);
  for (std::size_t i = 0; i < keep; ++i)
    for (int k = 0; k < bins; ++k)
      if (forbidden[load[i].second][static_cast<std::size_t>(k)])
        any[static_cast<std::size_t>(k)] = true;
  // Largest circular run of free bins.
  std::int64_t best_len = 0, best_start = 0, cur_len = 0, cur_start = 0;
  for (int k = 0; k < 2 * bins; ++k) {
    if (!any[static_cast<std::size_t>(k % bins)]) {
      if (cur_len == 0) cur_start = k;
      if (++cur_len > best_len && cur_len <= bins) {
        best_len = cur_len;
        best_start = cur_start;
      }
    } else {
      cur_len = 0;
    }
  }
  BohrContentCandidate cand;
  cand.alpha = alpha;
  cand.harvested = harvested;
  cand.arc_lo = static_cast<double>(best_start % bins) / bins;
  cand.arc_len = static_cast<double>(best_len) / bins;
  return cand;
}

}  // namespace

PiecewiseBohrReport verify_piecewise_bohr_content(
    const WindowSet& s, const std::vector<Real>& supplied_alphas,
    double threshold, int harvest_count, int bins, std::int64_t block_len) {
  PiecewiseBohrReport rep;
  rep.threshold = threshold;
  rep.best_measure = 0.0;
  rep.best_alpha = 0.0;
  for (const Real& a : supplied_alphas) {
    DD r = dd_from_real(frac(a));
    rep.candidates.push_back(
        scan_candidate(s, r, to_double(frac(a)), false, bins, block_len));
  }
  for (double a : harvest_rotations(s, harvest_count))
    rep.candidates.push_back(
        scan_candidate(s, dd_from_double(a), a, true, bins, block_len));
  for (const auto& c : rep.candidates) {
    if (c.arc_len > rep.best_measure) {
      rep.best_measure = c.arc_len;
      rep.best_alpha = c.alpha;
    }
  }
  rep.meets_threshold = rep.best_measure >= threshold;
  return rep;
}

ApDensityReport verify_ap_density(const WindowSet& s, std::int64_t k,
                                  const Rational& threshold, std::int64_t d_lo,
                                  std::int64_t d_hi, std::int64_t subwindow_m,
                                  const Real* alpha, double dist_bound) {
  if (d_lo < 1 || d_hi < d_lo)
    throw std::invalid_argument("verify_ap_density: bad d range");
  ApDensityReport rep;
  rep.k = k;
  rep.threshold = threshold;
  rep.d_lo = d_lo;
  rep.d_hi = d_hi;
  rep.subwindow_m = subwindow_m;
  rep.best_density = 0;

  const std::int64_t n_d = d_hi - d_lo + 1;
  std::vector<Rational> density(static_cast<std::size_t>(n_d), Rational(-1));
  parallel_for(n_d, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e; ++i) {
      std::int64_t d = d_lo + i;
      if (s.length() - k * d < subwindow_m) continue;  // window too short
      WindowSet inter = ap_intersection(s, k, d);
      density[static_cast<std::size_t>(i)] =
          banach_density_estimate(inter, subwindow_m).value;
    }
  });
  for (std::int64_t i = 0; i < n_d; ++i) {
    const Rational& v = density[static_cast<std::size_t>(i)];
    if (v > rep.best_density) {
      rep.best_density = v;
      rep.best_d = d_lo + i;
    }
    if (v > threshold) {
      rep.successful_d.push_back(d_lo + i);
      rep.successful_density.push_back(v);
    }
  }
  if (alpha != nullptr) {
    rep.dist_bound = dist_bound;
    for (std::int64_t d : rep.successful_d) {
      double dist = to_double(dist_to_integer(Real(d) * (*alpha)));
      rep.max_dist_to_int = std::max(rep.max_dist_to_int, dist);
    }
    rep.region_condition_ok =
        rep.successful_d.empty() || rep.max_dist_to_int <= dist_bound;
  }
  return rep;
}

BlockerVerifyReport verify_blocker(
    const std::string& kind, const FiniteAbelianGroup& g, const Rational& eps,
    std::int64_t window_lo, std::int64_t window_hi, std::int64_t l_max,
    std::int64_t w, std::int64_t banach_m, const Rational& slack,
    const std::vector<SequenceFamily>& dnu_families, std::int64_t dnu_j_max) {
  WindowSet a = example_set(kind, window_lo, window_hi);
  BlockerResult blocker =
      build_blocker(a, g, eps, /*z=*/0, window_lo, window_hi);
  BlockerVerifyReport rep{kind,
                          std::move(blocker),
                          {},
                          {},
                          0,
                          false,
                          {},
                          false,
                          {},
                          false};
  rep.replay = replay_certificate(rep.blocker.cert);
  rep.b_density = banach_density_estimate(rep.blocker.b, banach_m);
  rep.density_floor = 1 - eps - slack;
  rep.density_ok = rep.b_density.value >= rep.density_floor;
  WindowSet sum = sumset(a, rep.blocker.b, window_lo, window_hi);
  rep.scan = piecewise_syndetic_scan(sum, l_max, w);
  rep.not_pws = rep.scan.verdict == PwsVerdict::kNotPwsAtScale;
  const WindowSet& b = rep.blocker.b;
  for (const auto& fam : dnu_families)
    rep.d_nu_values.push_back(d_nu(
        [&b](std::int64_t n) { return b.in_window(n) && b.contains(n); }, fam,
        dnu_j_max));
  rep.all_ok = rep.replay.all_ok && rep.density_ok && rep.not_pws;
  return rep;
}

CutShiftVerifyReport verify_cut_shift(
    const TorusRotation& rot, const TorusRegion& u,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& intervals,
    const std::vector<std::int64_t>& shifts, std::int64_t window_lo,
    std::int64_t window_hi, const Real& cluster_radius) {
  CutShiftVerifyReport rep{
      cut_shift_reassemble(rot, u, intervals, shifts, window_lo, window_hi,
                           cluster_radius),
      u.measure(), Real(0), true, 0, 0};
  rep.residual_measure = rep.result.residual_measure;

  // Independent confirmation: walk the window once, test membership in the
  // clustered translated intervals and in V directly from the orbit, and
  // demand the reassembled set contains every such point (boundary-flagged
  // orbit points excluded).
  const TorusRegion& v = rep.result.residual_region;
  std::vector<std::pair<std::int64_t, std::int64_t>> cluster_intervals;
  for (std::size_t j : rep.result.cluster) {
    cluster_intervals.emplace_back(intervals[j].first + shifts[j],
                                   intervals[j].second + shifts[j]);
  }
  for (std::int64_t n = window_lo; n <= window_hi; ++n) {
    bool in_shifted = false;
    for (const auto& [lo, hi] : cluster_intervals)
      if (n >= lo && n <= hi) {
        in_shifted = true;
        break;
      }
    if (!in_shifted) continue;
    auto z = rot.orbit_point(n);
    if (!v.contains(z)) continue;
    if (v.boundary_distance(z) < ldexp(Real(1), -100)) {
      ++rep.boundary_excluded;
      continue;
    }
    ++rep.checked_points;
    if (!rep.result.reassembled.contains(n)) rep.containment_confirmed = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// JSON serialization and the experiment driver
// ---------------------------------------------------------------------------

Json to_json(const ThicknessReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["window_lo"] = r.window_lo;
  j["window_hi"] = r.window_hi;
  j["margin"] = r.margin;
  j["max_interval_L"] = r.max_interval_L;
  j["longest_run_overall"] = r.longest_run_overall;
  j["interior_longest_run"] = r.interior_longest_run;
  j["interior_run_lo"] = r.interior_run_lo;
  j["all_lengths_present"] = r.all_lengths_present;
  return j;
}

Json to_json(const PiecewiseBohrReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["heuristic"] = r.heuristic;
  j["note"] =
      "candidate-family search; the true rotation may be missed, the verdict "
      "is evidence-graded only";
  j["threshold"] = r.threshold;
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    Json cj;
    cj["alpha"] = c.alpha;
    cj["harvested"] = c.harvested;
    cj["arc_lo"] = c.arc_lo;
    cj["arc_len"] = c.arc_len;
    cands.push_back(std::move(cj));
  }
  j["candidates"] = std::move(cands);
  j["best_measure"] = r.best_measure;
  j["best_alpha"] = r.best_alpha;
  j["meets_threshold"] = r.meets_threshold;
  return j;
}

Json to_json(const ApDensityReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["k"] = r.k;
  j["threshold"] = rational_json(r.threshold);
  j["d_lo"] = r.d_lo;
  j["d_hi"] = r.d_hi;
  j["subwindow_m"] = r.subwindow_m;
  j["successful_d"] = r.successful_d;
  Json dens = Json::array();
  for (const auto& v : r.successful_density) dens.push_back(rational_json(v));
  j["successful_density"] = std::move(dens);
  j["best_d"] = r.best_d;
  j["best_density"] = rational_json(r.best_density);
  j["max_dist_to_int"] = r.max_dist_to_int;
  j["dist_bound"] = r.dist_bound;
  j["region_condition_ok"] = r.region_condition_ok;
  return j;
}

Json to_json(const CertificateReplay& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["cosets_disjoint"] = r.cosets_disjoint;
  j["measure_ok"] = r.measure_ok;
  j["empty_interior_ok"] = r.empty_interior_ok;
  j["budget_ok"] = r.budget_ok;
  j["all_ok"] = r.all_ok;
  return j;
}

Json to_json(const BlockerVerifyReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = r.kind;
  j["certificate"] = certificate_json(r.blocker.cert);
  j["replay"] = to_json(r.replay);
  j["b_count"] = r.blocker.b.count();
  j["b_density"] = to_json(r.b_density);
  j["density_floor"] = rational_json(r.density_floor);
  j["density_ok"] = r.density_ok;
  j["scan"] = to_json(r.scan);
  j["not_pws"] = r.not_pws;
  Json dnu = Json::array();
  for (const auto& d : r.d_nu_values) dnu.push_back(to_json(d));
  j["d_nu_values"] = std::move(dnu);
  j["all_ok"] = r.all_ok;
  return j;
}

Json to_json(const CutShiftVerifyReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["input_measure"] = real_json(r.input_measure);
  j["residual_measure"] = real_json(r.residual_measure);
  j["cluster"] = r.result.cluster;
  j["reassembled_count"] = r.result.reassembled.count();
  j["containment_verified_internal"] = r.result.containment_verified;
  j["containment_confirmed"] = r.containment_confirmed;
  j["checked_points"] = r.checked_points;
  j["boundary_excluded"] = r.boundary_excluded;
  return j;
}

namespace {

WindowSet build_operand_set(const Json& spec, std::int64_t lo,
                            std::int64_t hi) {
  if (spec.contains("set"))
    return parse_set_spec(spec.at("set").get<std::string>(), lo, hi);
  WindowSet a = parse_set_spec(spec.at("a_set").get<std::string>(), lo, hi);
  WindowSet b(lo, hi);
  if (spec.contains("b_rotation")) {
    TorusRotation rot =
        parse_rotation_spec(spec.at("b_rotation").get<std::string>());
    TorusRegion reg = parse_region_spec(
        spec.at("b_region").get<std::string>(), rot.dimension());
    b = bohr_set(rot, reg, lo, hi).set;
  } else {
    b = parse_set_spec(spec.at("b_set").get<std::string>(), lo, hi);
  }
  return sumset(a, b, lo, hi);
}

}  // namespace

Json run_experiment(const Json& spec) {
  const std::string name = spec.at("name").get<std::string>();
  std::int64_t lo = spec.at("window").at(0).get<std::int64_t>();
  std::int64_t hi = spec.at("window").at(1).get<std::int64_t>();
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["spec"] = spec;
  if (name == "thickness") {
    WindowSet a = parse_set_spec(spec.at("a_set").get<std::string>(), lo, hi);
    WindowSet b(lo, hi);
    if (spec.contains("b_rotation")) {
      TorusRotation rot =
          parse_rotation_spec(spec.at("b_rotation").get<std::string>());
      TorusRegion reg = parse_region_spec(
          spec.at("b_region").get<std::string>(), rot.dimension());
      b = bohr_set(rot, reg, lo, hi).set;
    } else {
      b = parse_set_spec(spec.at("b_set").get<std::string>(), lo, hi);
    }
    ThicknessReport r = verify_thickness(
        a, b, lo, hi, spec.at("max_interval_L").get<std::int64_t>(),
        spec.value("margin", std::int64_t(0)));
    out["report"] = to_json(r);
    out["passed"] = r.all_lengths_present;
  } else if (name == "piecewise_bohr_content") {
    WindowSet s = build_operand_set(spec, lo, hi);
    std::vector<Real> alphas;
    if (spec.contains("alphas"))
      for (const auto& tok : spec.at("alphas"))
        alphas.push_back(resolve_real(tok.get<std::string>()));
    PiecewiseBohrReport r = verify_piecewise_bohr_content(
        s, alphas, spec.at("threshold").get<double>(),
        spec.value("harvest_count", 4));
    out["report"] = to_json(r);
    out["passed"] = r.meets_threshold;
  } else if (name == "ap_density") {
    WindowSet s = build_operand_set(spec, lo, hi);
    const Real alpha = spec.contains("alpha")
                           ? resolve_real(spec.at("alpha").get<std::string>())
                           : Real(0);
    ApDensityReport r = verify_ap_density(
        s, spec.at("k").get<std::int64_t>(),
        rational_from_json(spec.at("threshold")),
        spec.at("d_lo").get<std::int64_t>(),
        spec.at("d_hi").get<std::int64_t>(),
        spec.at("subwindow_m").get<std::int64_t>(),
        spec.contains("alpha") ? &alpha : nullptr,
        spec.value("dist_bound", 0.0));
    out["report"] = to_json(r);
    out["passed"] = !r.successful_d.empty() && r.region_condition_ok;
  } else if (name == "blocker") {
    FiniteAbelianGroup g =
        FiniteAbelianGroup::parse(spec.at("group").get<std::string>());
    std::vector<SequenceFamily> fams;
    if (spec.contains("dnu_families"))
      for (const auto& f : spec.at("dnu_families"))
        fams.push_back(parse_family_spec(f.get<std::string>()));
    BlockerVerifyReport r = verify_blocker(
        spec.at("kind").get<std::string>(), g,
        rational_from_json(spec.at("eps")), lo, hi,
        spec.at("L_max").get<std::int64_t>(), spec.at("W").get<std::int64_t>(),
        spec.at("banach_m").get<std::int64_t>(),
        rational_from_json(spec.at("slack")), fams,
        spec.value("dnu_j_max", std::int64_t(10000)));
    out["report"] = to_json(r);
    out["passed"] = r.all_ok;
  } else if (name == "cut_shift") {
    TorusRotation rot =
        parse_rotation_spec(spec.at("rotation").get<std::string>());
    TorusRegion u = parse_region_spec(spec.at("region").get<std::string>(),
                                      rot.dimension());
    std::vector<std::pair<std::int64_t, std::int64_t>> intervals;
    for (const auto& iv : spec.at("intervals"))
      intervals.emplace_back(iv.at(0).get<std::int64_t>(),
                             iv.at(1).get<std::int64_t>());
    std::vector<std::int64_t> shifts =
        spec.at("shifts").get<std::vector<std::int64_t>>();
    Real radius = spec.contains("cluster_radius")
                      ? resolve_real(spec.at("cluster_radius").get<std::string>())
                      : Real(1) / 20;
    CutShiftVerifyReport r =
        verify_cut_shift(rot, u, intervals, shifts, lo, hi, radius);
    out["report"] = to_json(r);
    out["passed"] = r.containment_confirmed;
  } else {
    throw std::invalid_argument("unknown experiment name: " + name);
  }
  return out;
}

bool experiment_passed(const Json& report) {
  return report.at("passed").get<bool>();
}

}  // namespace sumsets
