// verify.hpp
// Experiment harness: composes the set, averaging, torus and
// group modules into named, replayable experiments with explicit pass/fail
// criteria and full witnesses.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumsets/averaging.hpp"
#include "sumsets/finitegroup.hpp"
#include "sumsets/io.hpp"
#include "sumsets/kronecker.hpp"
#include "sumsets/windowset.hpp"

namespace sumsets {

// ---------------------------------------------------------------------------
// Thickness: does the interior of A+B contain a run of every length up to
// max_interval_L? Interior means [lo+margin, hi-margin]; sums truncated at
// the window edge would otherwise produce false negatives.
// ---------------------------------------------------------------------------
struct ThicknessReport {
  std::int64_t window_lo, window_hi, margin;
  std::int64_t max_interval_L;
  std::int64_t longest_run_overall;
  std::int64_t interior_longest_run;
  std::int64_t interior_run_lo;
  bool all_lengths_present;  // interior_longest_run >= max_interval_L
};

ThicknessReport verify_thickness(const WindowSet& a, const WindowSet& b,
                                 std::int64_t out_lo, std::int64_t out_hi,
                                 std::int64_t max_interval_L,
                                 std::int64_t margin);

// ---------------------------------------------------------------------------
// Piecewise Bohr content detector. For each candidate rotation (supplied at
// full precision, or harvested from the largest Fourier peaks of the
// indicator and therefore only grid-accurate), finds the widest arc U such
// that every block of the window keeps the non-members of S out of U, and
// compares m(U) against the threshold. This is a heuristic searcher over a
// candidate family -- it can miss the true rotation and never claims to be
// a decision procedure.
// ---------------------------------------------------------------------------
struct BohrContentCandidate {
  double alpha;        // candidate rotation (double echo)
  bool harvested;      // true when found by the spectrum scan
  double arc_lo;       // detected U = [arc_lo, arc_lo + arc_len) mod 1
  double arc_len;
};

struct PiecewiseBohrReport {
  bool heuristic = true;  // always: the candidate family may miss alpha
  double threshold;
  std::vector<BohrContentCandidate> candidates;
  double best_measure;    // max arc_len over candidates
  double best_alpha;
  bool meets_threshold;
};

PiecewiseBohrReport verify_piecewise_bohr_content(
    const WindowSet& s, const std::vector<Real>& supplied_alphas,
    double threshold, int harvest_count = 4, int bins = 4096,
    std::int64_t block_len = 1 << 14);

// ---------------------------------------------------------------------------
// AP density: scan d for high Banach density of the (k+1)-fold AP
// intersection of S, and cross-check successful d against the rotation
// condition dist(d*alpha, Z) <= dist_bound when a rotation is given.
// ---------------------------------------------------------------------------
struct ApDensityReport {
  std::int64_t k;
  Rational threshold;
  std::int64_t d_lo, d_hi;
  std::int64_t subwindow_m;
  std::vector<std::int64_t> successful_d;
  std::vector<Rational> successful_density;
  std::int64_t best_d = 0;
  Rational best_density;
  // Region cross-check (present only when alpha supplied).
  double max_dist_to_int = 0.0;
  double dist_bound = 0.0;
  bool region_condition_ok = true;
};

ApDensityReport verify_ap_density(const WindowSet& s, std::int64_t k,
                                  const Rational& threshold, std::int64_t d_lo,
                                  std::int64_t d_hi, std::int64_t subwindow_m,
                                  const Real* alpha = nullptr,
                                  double dist_bound = 0.0);

// ---------------------------------------------------------------------------
// Blocker pipeline: build B from the example-set kind, replay the
// certificate, check the density floor on B, scan A+B for piecewise
// syndeticity at scale, and measure d_nu(B) for supplied families.
// ---------------------------------------------------------------------------
struct BlockerVerifyReport {
  std::string kind;
  BlockerResult blocker;
  CertificateReplay replay;
  DensityEstimate b_density;       // banach estimate at subwindow M
  Rational density_floor;          // 1 - eps - slack
  bool density_ok;
  PwsScanReport scan;              // of A+B over the window
  bool not_pws;                    // scan verdict == not_pws_at_scale
  std::vector<SequenceDensity> d_nu_values;
  bool all_ok;                     // replay && density_ok && not_pws
};

BlockerVerifyReport verify_blocker(
    const std::string& kind, const FiniteAbelianGroup& g, const Rational& eps,
    std::int64_t window_lo, std::int64_t window_hi, std::int64_t l_max,
    std::int64_t w, std::int64_t banach_m, const Rational& slack,
    const std::vector<SequenceFamily>& dnu_families = {},
    std::int64_t dnu_j_max = 10000);

// ---------------------------------------------------------------------------
// Cut-shift-reassemble with an independent containment confirmation on the
// window (direct set comparison, not the construction's own bookkeeping).
// ---------------------------------------------------------------------------
struct CutShiftVerifyReport {
  CutShiftResult result;
  Real input_measure;      // m(U)
  Real residual_measure;   // m(V)
  bool containment_confirmed;
  std::int64_t checked_points;
  std::int64_t boundary_excluded;
};

CutShiftVerifyReport verify_cut_shift(
    const TorusRotation& rot, const TorusRegion& u,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& intervals,
    const std::vector<std::int64_t>& shifts, std::int64_t window_lo,
    std::int64_t window_hi, const Real& cluster_radius = Real(1) / 20);

// ---------------------------------------------------------------------------
// JSON experiment driver. The spec names the experiment and carries its
// inputs; the report echoes the spec, so re-running a stored spec must
// reproduce the stored report byte-for-byte (fixed precision settings).
// ---------------------------------------------------------------------------
Json run_experiment(const Json& spec);

Json to_json(const ThicknessReport& r);
Json to_json(const PiecewiseBohrReport& r);
Json to_json(const ApDensityReport& r);
Json to_json(const BlockerVerifyReport& r);
Json to_json(const CutShiftVerifyReport& r);
Json to_json(const CertificateReplay& r);

// True when every per-criterion verdict in an experiment report passes.
bool experiment_passed(const Json& report);

}  // namespace sumsets
