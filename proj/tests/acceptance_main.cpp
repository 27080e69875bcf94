// Acceptance gate: seven end-to-end criteria, each printed as a single
// PASS/FAIL line with its pinned thresholds. Exit status is nonzero when
// any criterion fails. Criterion 4c is a scale-limited verdict that the
// construction cannot satisfy on this group (see the line's note); it is
// reported honestly rather than weakened.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sumsets/verify.hpp"

using namespace sumsets;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

// --------------------------------------------------------------------------
// 1. Convolution bound exactness: >= 1024 random rational pairs across all
// cyclic orders <= 64, zero tolerance.
// --------------------------------------------------------------------------
void criterion1() {
  std::mt19937_64 rng(20260823);
  std::uniform_int_distribution<int> num(0, 6);
  std::int64_t checked = 0, passed = 0;
  for (std::int64_t n = 1; n <= 64; ++n) {
    FiniteAbelianGroup g({n});
    for (int t = 0; t < 16; ++t) {
      auto draw = [&] {
        while (true) {
          std::vector<Rational> v;
          bool nonzero = false;
          for (std::int64_t i = 0; i < n; ++i) {
            v.emplace_back(num(rng), 6);
            if (v.back() != 0) nonzero = true;
          }
          if (nonzero) return GroupFunction(g, std::move(v));
        }
      };
      auto rep = steinhaus_check(draw(), draw());
      ++checked;
      passed += rep.all_ok;
    }
  }
  report("criterion-1 convolution-bounds-exact", passed == checked && checked >= 1024,
         std::to_string(passed) + "/" + std::to_string(checked) +
             " random pairs satisfied all three bounds exactly");
}

// --------------------------------------------------------------------------
// 2. Weyl decay for power_floor(1.5) with pinned goldens (rel tol 1e-6)
// plus the non-equidistributed squares contrast.
// --------------------------------------------------------------------------
bool near_rel(double got, double want, double rel) {
  return std::abs(got - want) <= rel * std::abs(want);
}

void criterion2() {
  const std::vector<std::int64_t> js = {1000, 10000, 100000};
  auto rows = equidistribution_profile(SequenceFamily::power_floor(Real("1.5")),
                                       default_theta_grid(1024), js);
  const double golden_max[3] = {0.071111774610582421, 0.041399999999999999,
                               0.024219999999999999};
  const double golden_theta[3] = {4.7246608266877752, M_PI, M_PI};
  bool ok = true;
  std::string detail = "maxima";
  for (int i = 0; i < 3; ++i) {
    ok = ok && near_rel(rows[i].max_abs, golden_max[i], 1e-6);
    ok = ok && std::abs(rows[i].theta_argmax - golden_theta[i]) < 1e-9;
    char buf[64];
    std::snprintf(buf, sizeof buf, " %.6g", rows[i].max_abs);
    detail += buf;
  }
  ok = ok && rows[0].max_abs > rows[1].max_abs &&
       rows[1].max_abs > rows[2].max_abs && rows[2].max_abs < 0.05;

  // Contrast family: the squares never equidistribute; the peak at
  // theta = 3*pi/2 stays near 1/sqrt(2) for every j.
  std::vector<std::int64_t> squares;
  for (std::int64_t n = 1; n <= 100000; ++n)
    squares.push_back(n * n);
  auto c = equidistribution_profile(SequenceFamily::explicit_values(squares),
                                    default_theta_grid(1024), js);
  const double golden_contrast[3] = {0.70710678118661285, 0.7071067811871975,
                                     0.70710678119317405};
  for (int i = 0; i < 3; ++i) {
    ok = ok && c[i].max_abs >= 0.3;
    ok = ok && near_rel(c[i].max_abs, golden_contrast[i], 1e-6);
  }
  detail += "; contrast stays near 0.7071 (>= 0.3) at every j";
  report("criterion-2 weyl-decay-goldens", ok, detail);
}

// --------------------------------------------------------------------------
// 3. Thickness: A = floor(n^1.5) support (n <= 1e4), B = Bohr(sqrt2,
// [0,0.3)) on [0,1e6]; the interior (margin 1000) holds a run of every
// length up to 50.
// --------------------------------------------------------------------------
void criterion3() {
  WindowSet a(0, 1000000);
  for (std::int64_t v :
       family_values(SequenceFamily::power_floor(Real("1.5")), 10000))
    if (v >= 0 && v <= 1000000) a.insert(v);
  auto rot = TorusRotation({frac(real_sqrt2())}, {true});
  auto b = bohr_set(rot, TorusRegion::interval(Real(0), Real(3) / 10), 0,
                    1000000).set;
  auto r = verify_thickness(a, b, 0, 1000000, 50, 1000);
  report("criterion-3 thickness", r.all_lengths_present,
         "interior run " + std::to_string(r.interior_longest_run) +
             " >= 50 (margin 1000)");
}

// --------------------------------------------------------------------------
// 4. Blocker pipeline for squares and primes on product:4,9,5,7,11,13,
// eps = 1/5, window [0,1e6]. 4c is a scale-limited verdict: with W = 200
// far above the cheapest usable coset period, no mass budget below eps can
// produce 25 consecutive missed residues, so A+B stays piecewise syndetic
// at this scale and the line fails honestly.
// --------------------------------------------------------------------------
void criterion4() {
  auto g = FiniteAbelianGroup::parse("product:4,9,5,7,11,13");
  for (const char* kind : {"squares", "primes"}) {
    auto rep = verify_blocker(kind, g, Rational(1, 5), 0, 1000000, 24, 200,
                              10000, Rational(1, 50));
    std::string tag = std::string("criterion-4 blocker-") + kind;
    report(tag + " (a) replay", rep.replay.all_ok,
           "certificate re-verified by independent loops");
    char buf[96];
    std::snprintf(buf, sizeof buf, "banach density %.6f >= 0.78",
                  to_double(rep.b_density.value));
    report(tag + " (b) density", rep.density_ok, buf);
    report(tag + " (c) not-pws-at-scale", rep.not_pws,
           rep.not_pws
               ? "sumset not piecewise syndetic at (24, 200)"
               : "sumset still piecewise syndetic at this scale (witness L=" +
                     std::to_string(rep.scan.witness_L) +
                     "); unattainable for any sub-eps coset budget on this "
                     "group -- reported honestly");
  }
}

// --------------------------------------------------------------------------
// 5. AP density: B = Bohr(sqrt2, [0,0.4)) on [0,1e6], k = 3; some
// d <= 1e4 reaches banach AP-intersection density > 0.4 - 0.1, and all
// successful d satisfy dist(d*sqrt2, Z) <= 0.04.
// --------------------------------------------------------------------------
void criterion5() {
  auto rot = TorusRotation({frac(real_sqrt2())}, {true});
  auto b = bohr_set(rot, TorusRegion::interval(Real(0), Real(4) / 10), 0,
                    1000000).set;
  Real alpha = frac(real_sqrt2());
  auto rep = verify_ap_density(b, 3, Rational(3, 10), 1, 10000, 100000, &alpha,
                               0.04);
  bool ok = !rep.successful_d.empty() && rep.best_d == 5741 &&
            rep.best_density == Rational(2499, 6250) &&
            rep.region_condition_ok;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%zu successful d; best d=%lld density %.5f > 0.3; max "
                "dist-to-int %.4f <= 0.04",
                rep.successful_d.size(),
                static_cast<long long>(rep.best_d),
                to_double(rep.best_density), rep.max_dist_to_int);
  report("criterion-5 ap-density", ok, buf);
}

// --------------------------------------------------------------------------
// 6. Restricted average vs grid convolution: single character, eta =
// uniform{1..1e5} restricted to n = 0,1 mod 5, 256 bins. Discrepancy
// < 0.05 and exact mass conservation (integral = 2/5).
// --------------------------------------------------------------------------
void criterion6() {
  auto rot = TorusRotation({frac(real_sqrt2())}, {true});
  FiniteMeasure nu;
  for (std::int64_t n = 1; n <= 100000; ++n) {
    nu.support.push_back(n);
    nu.weights.push_back(Rational(1, 100000));
  }
  auto eta = restrict(nu, [](std::int64_t n) { return n % 5 <= 1; });
  TrigPolynomial f{{{{1}, {1.0, 0.0}}}};
  auto rep = restricted_average_vs_convolution(f, rot, eta, 256);
  bool ok = rep.sup_discrepancy < 0.05 && rep.mass_conserved &&
            rep.psi_integral == Rational(2, 5);
  char buf[96];
  std::snprintf(buf, sizeof buf,
                "sup discrepancy %.2e < 0.05; integral exactly 2/5: %s",
                rep.sup_discrepancy, rep.mass_conserved ? "yes" : "no");
  report("criterion-6 convolution-identity", ok, buf);
}

// --------------------------------------------------------------------------
// 7. Two-route oracles: bitset sumset vs triple loop on >= 1000 random
// instances; packed big-integer convolution vs the direct formula on every
// abelian group of order <= 128.
// --------------------------------------------------------------------------
void enumerate_groups(std::int64_t max_order,
                      std::vector<std::vector<std::int64_t>>& out) {
  // Abelian groups of order n = multisets of prime-power cyclic factors.
  for (std::int64_t n = 1; n <= max_order; ++n) {
    std::vector<std::pair<std::int64_t, int>> fact;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        int e = 0;
        while (m % p == 0) m /= p, ++e;
        fact.push_back({p, e});
      }
    if (m > 1) fact.push_back({m, 1});
    // Partitions of each exponent -> prime-power moduli.
    std::vector<std::vector<std::vector<std::int64_t>>> choices;
    for (auto [p, e] : fact) {
      std::vector<std::vector<std::int64_t>> parts;
      std::vector<std::int64_t> cur;
      std::function<void(int, int)> gen = [&](int rest, int maxpart) {
        if (rest == 0) {
          std::vector<std::int64_t> mods;
          for (std::int64_t part : cur) {
            std::int64_t q = 1;
            for (int i = 0; i < part; ++i) q *= p;
            mods.push_back(q);
          }
          parts.push_back(mods);
          return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
          cur.push_back(k);
          gen(rest - k, k);
          cur.pop_back();
        }
      };
      gen(e, e);
      choices.push_back(std::move(parts));
    }
    std::vector<std::vector<std::int64_t>> acc{{}};
    for (const auto& axis : choices) {
      std::vector<std::vector<std::int64_t>> next;
      for (const auto& base : acc)
        for (const auto& pick : axis) {
          auto merged = base;
          merged.insert(merged.end(), pick.begin(), pick.end());
          next.push_back(std::move(merged));
        }
      acc = std::move(next);
    }
    for (auto& mods : acc) out.push_back(std::move(mods));
  }
}

void criterion7() {
  std::mt19937_64 rng(424242);
  // Route A vs route B for sumsets.
  std::uniform_int_distribution<std::int64_t> off(-30, 30);
  std::uniform_int_distribution<std::int64_t> len(0, 50);
  std::bernoulli_distribution coin(0.35);
  std::int64_t sum_trials = 0, sum_ok = 0;
  for (int t = 0; t < 1200; ++t) {
    auto rand_set = [&](std::int64_t lo, std::int64_t hi) {
      WindowSet s(lo, hi);
      for (std::int64_t n = lo; n <= hi; ++n)
        if (coin(rng)) s.insert(n);
      return s;
    };
    std::int64_t alo = off(rng), blo = off(rng);
    WindowSet a = rand_set(alo, alo + len(rng));
    WindowSet b = rand_set(blo, blo + len(rng));
    std::int64_t olo = off(rng), ohi = olo + len(rng) + 10;
    WindowSet fast = sumset(a, b, olo, ohi);
    WindowSet slow(olo, ohi);
    for (std::int64_t x : a.elements())
      for (std::int64_t y : b.elements())
        if (x + y >= olo && x + y <= ohi) slow.insert(x + y);
    ++sum_trials;
    sum_ok += fast == slow;
  }

  // Packed vs direct convolution on every abelian group of order <= 128.
  std::vector<std::vector<std::int64_t>> groups;
  enumerate_groups(128, groups);
  std::uniform_int_distribution<int> num(0, 5);
  std::int64_t conv_trials = 0, conv_ok = 0;
  for (const auto& mods : groups) {
    FiniteAbelianGroup g(mods.empty() ? std::vector<std::int64_t>{1} : mods);
    auto draw = [&] {
      std::vector<Rational> v;
      for (std::int64_t i = 0; i < g.order(); ++i) v.emplace_back(num(rng), 5);
      return GroupFunction(g, std::move(v));
    };
    auto f = draw(), h = draw();
    ++conv_trials;
    conv_ok += convolve_packed(f, h).values() == convolve(f, h).values();
  }
  bool ok = sum_ok == sum_trials && conv_ok == conv_trials && sum_trials >= 1000;
  report("criterion-7 two-route-oracles", ok,
         std::to_string(sum_ok) + "/" + std::to_string(sum_trials) +
             " sumsets exact; " + std::to_string(conv_ok) + "/" +
             std::to_string(conv_trials) +
             " group convolutions exact (all abelian groups of order <= 128)");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  std::printf("%s: %d failing line(s)\n",
              g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
