#include <doctest.h>

#include "sumsets/verify.hpp"

using namespace sumsets;

TEST_CASE("verify_thickness on a full sumset and a structured failure") {
  WindowSet a = WindowSet::full(0, 500);
  WindowSet b = WindowSet::from_elements(0, 0, {0});
  auto r = verify_thickness(a, b, 0, 500, 20, 10);
  CHECK(r.all_lengths_present);
  CHECK(r.interior_longest_run >= 20);
  CHECK(r.longest_run_overall == 501);

  WindowSet evens(0, 500);
  for (std::int64_t n = 0; n <= 500; n += 2) evens.insert(n);
  auto r2 = verify_thickness(evens, evens, 0, 1000, 5, 10);
  CHECK_FALSE(r2.all_lengths_present);
  CHECK(r2.interior_longest_run == 1);
}

TEST_CASE("piecewise Bohr content detector recovers a genuine Bohr set") {
  auto rot = TorusRotation({frac(real_sqrt2())}, {true});
  auto u = TorusRegion::interval(Real(0), Real(3) / 10);
  auto s = bohr_set(rot, u, 0, (1 << 16) - 1).set;
  auto rep = verify_piecewise_bohr_content(s, {frac(real_sqrt2())}, 0.25);
  CHECK(rep.heuristic);
  CHECK(rep.meets_threshold);
  CHECK(rep.best_measure > 0.25);
  CHECK(rep.best_measure < 0.35);
}

TEST_CASE("piecewise Bohr content detector rejects an unstructured set") {
  WindowSet evens(0, (1 << 16) - 1);
  for (std::int64_t n = 0; n < (1 << 16); n += 2) evens.insert(n);
  auto rep = verify_piecewise_bohr_content(evens, {frac(real_sqrt2())}, 0.25);
  // Under an irrational rotation the non-members spread over the circle, so
  // no wide arc stays free of them.
  bool supplied_wide = false;
  for (const auto& c : rep.candidates)
    if (!c.harvested && c.arc_len > 0.1) supplied_wide = true;
  CHECK_FALSE(supplied_wide);
}

TEST_CASE("verify_ap_density on the even numbers") {
  WindowSet evens(0, 2000);
  for (std::int64_t n = 0; n <= 2000; n += 2) evens.insert(n);
  Real half = Real(1) / 2;
  // Threshold comparison is strict, so ask for anything below the exact 1/2.
  auto rep = verify_ap_density(evens, 1, Rational(2, 5), 1, 10, 100, &half, 0.1);
  CHECK(rep.successful_d == std::vector<std::int64_t>{2, 4, 6, 8, 10});
  CHECK(rep.best_density == Rational(1, 2));
  for (const auto& q : rep.successful_density) CHECK(q == Rational(1, 2));
  // Every successful d is even, so dist(d/2, Z) = 0 <= 0.1.
  CHECK(rep.region_condition_ok);
  CHECK(rep.max_dist_to_int == 0.0);
}

TEST_CASE("verify_blocker small pipeline is internally consistent") {
  auto g = FiniteAbelianGroup::parse("cyclic:8");
  auto rep = verify_blocker("squares", g, Rational(1, 2), 0, 2000, 3, 50, 100,
                            Rational(1, 10), {SequenceFamily::interval()}, 500);
  CHECK(rep.replay.all_ok);
  CHECK(rep.blocker.cert.feasible);
  CHECK(rep.density_floor == Rational(2, 5));
  CHECK(rep.b_density.value >= rep.density_floor);
  CHECK(rep.density_ok);
  // At this tiny modulus A+B misses only isolated residues, so the sumset
  // is still piecewise syndetic at scale; the report must say so honestly.
  CHECK_FALSE(rep.not_pws);
  CHECK_FALSE(rep.all_ok);
  REQUIRE(rep.d_nu_values.size() == 1);
  CHECK(rep.d_nu_values[0].value >= rep.density_floor);
}

TEST_CASE("verify_cut_shift confirms containment independently") {
  auto rot = TorusRotation({frac(real_sqrt2())}, {true});
  auto u = TorusRegion::interval(Real(0), Real(1) / 10);
  auto rep = verify_cut_shift(rot, u, {{0, 9999}}, {0}, 0, 9999);
  CHECK(rep.containment_confirmed);
  CHECK(abs(rep.input_measure - Real(1) / 10) < ldexp(Real(1), -150));
  CHECK(abs(rep.residual_measure - Real(1) / 10) < ldexp(Real(1), -90));
  CHECK(rep.checked_points > 0);
}

TEST_CASE("run_experiment is deterministic and echoes its spec") {
  Json spec;
  spec["name"] = "thickness";
  spec["window"] = {0, 500};
  spec["a_set"] = "gen:squares";
  spec["b_set"] = "all";
  spec["max_interval_L"] = 20;
  spec["margin"] = 10;
  auto r1 = run_experiment(spec);
  auto r2 = run_experiment(spec);
  CHECK(r1.dump() == r2.dump());  // byte-for-byte replayable
  CHECK(r1.at("spec").dump() == spec.dump());
  CHECK(experiment_passed(r1));
}

TEST_CASE("experiment_passed reports failures") {
  Json spec;
  spec["name"] = "ap_density";
  spec["window"] = {0, 2000};
  spec["set"] = "gen:squares";
  spec["k"] = 2;
  spec["threshold"] = rational_json(Rational(9, 10));  // unattainably high
  spec["d_lo"] = 1;
  spec["d_hi"] = 20;
  spec["subwindow_m"] = 100;
  auto r = run_experiment(spec);
  CHECK_FALSE(experiment_passed(r));
  CHECK(r.at("passed").get<bool>() == false);
}
