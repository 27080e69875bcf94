#include <doctest.h>

#include <random>
#include <set>

#include "sumsets/windowset.hpp"

using namespace sumsets;

namespace {

WindowSet make(std::int64_t lo, std::int64_t hi,
               std::initializer_list<std::int64_t> elems) {
  return WindowSet::from_elements(lo, hi, std::vector<std::int64_t>(elems));
}

// Reference sumset by triple loop.
WindowSet slow_sumset(const WindowSet& a, const WindowSet& b, std::int64_t lo,
                      std::int64_t hi) {
  WindowSet out(lo, hi);
  for (std::int64_t x : a.elements())
    for (std::int64_t y : b.elements())
      if (x + y >= lo && x + y <= hi) out.insert(x + y);
  return out;
}

WindowSet random_set(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi,
                     double p) {
  WindowSet s(lo, hi);
  std::bernoulli_distribution coin(p);
  for (std::int64_t n = lo; n <= hi; ++n)
    if (coin(rng)) s.insert(n);
  return s;
}

}  // namespace

TEST_CASE("sumset basic examples") {
  CHECK(sumset(make(0, 2, {0, 2}), make(0, 1, {0, 1}), 0, 3) ==
        WindowSet::full(0, 3));
  WindowSet b = make(0, 10, {1, 3, 8});
  CHECK(sumset(make(0, 0, {0}), b, 0, 10) == b);
  CHECK(sumset(make(0, 16, {1, 4, 9, 16}), make(0, 1, {0, 1}), 0, 20) ==
        make(0, 20, {1, 2, 4, 5, 9, 10, 16, 17}));
}

TEST_CASE("sumset equals triple loop on random small instances") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> off(-40, 40);
  std::uniform_int_distribution<std::int64_t> len(0, 63);
  for (int t = 0; t < 1200; ++t) {
    std::int64_t alo = off(rng), blo = off(rng);
    WindowSet a = random_set(rng, alo, alo + len(rng), 0.3);
    WindowSet b = random_set(rng, blo, blo + len(rng), 0.3);
    std::int64_t olo = off(rng), ohi = olo + len(rng) + 20;
    CHECK(sumset(a, b, olo, ohi) == slow_sumset(a, b, olo, ohi));
  }
}

TEST_CASE("sumset commutes and is monotone") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    WindowSet a = random_set(rng, 0, 80, 0.3);
    WindowSet b = random_set(rng, 0, 80, 0.3);
    CHECK(sumset(a, b, 0, 160) == sumset(b, a, 0, 160));
    WindowSet a2 = a;
    a2.insert(17);
    WindowSet s = sumset(a, b, 0, 160), s2 = sumset(a2, b, 0, 160);
    for (std::int64_t n : s.elements()) CHECK(s2.contains(n));
  }
}

TEST_CASE("banach density examples") {
  WindowSet evens(0, 999);
  for (std::int64_t n = 0; n <= 999; n += 2) evens.insert(n);
  auto d = banach_density_estimate(evens, 100);
  CHECK(d.value == Rational(1, 2));
  CHECK(d.window_length == 100);
  CHECK(banach_density_estimate(WindowSet::full(0, 99), 10).value == 1);
  // Witness window really achieves the value.
  WindowSet s = WindowSet::from_elements(0, 200, {5, 6, 7, 8, 100});
  auto e = banach_density_estimate(s, 10);
  std::int64_t c = 0;
  for (std::int64_t n = e.witness_lo; n <= e.witness_hi; ++n)
    c += s.contains(n);
  CHECK(Rational(c, 10) == e.value);
}

TEST_CASE("banach density is antitone in window multiples") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    WindowSet s = random_set(rng, 0, 999, 0.4);
    auto v1 = banach_density_estimate(s, 50).value;
    auto v2 = banach_density_estimate(s, 100).value;
    auto v3 = banach_density_estimate(s, 200).value;
    CHECK(v2 <= v1);
    CHECK(v3 <= v2);
  }
}

TEST_CASE("upper density examples") {
  WindowSet evens(0, 1000);
  for (std::int64_t n = 0; n <= 1000; n += 2) evens.insert(n);
  CHECK(upper_density_estimate(evens, 1000).value >= Rational(1, 2));
  CHECK(upper_density_estimate(WindowSet(0, 1000), 1000).value == 0);
}

TEST_CASE("longest_run") {
  CHECK(longest_run(make(0, 10, {3, 4, 5, 9})) == 3);
  CHECK(longest_run(WindowSet(0, 10)) == 0);
  WindowSet evens(0, 100);
  for (std::int64_t n = 0; n <= 100; n += 2) evens.insert(n);
  CHECK(longest_run(evens) == 1);
  std::int64_t lo = -1;
  CHECK(longest_run(make(0, 10, {3, 4, 5, 9}), &lo) == 3);
  CHECK(lo == 3);
}

TEST_CASE("syndetic_at_scale") {
  WindowSet evens(0, 1000);
  for (std::int64_t n = 0; n <= 1000; n += 2) evens.insert(n);
  CHECK(syndetic_at_scale(evens, 1).syndetic);
  CHECK_FALSE(syndetic_at_scale(evens, 0).syndetic);
  WindowSet squares(0, 10000);
  for (std::int64_t n = 0; n * n <= 10000; ++n) squares.insert(n * n);
  auto r = syndetic_at_scale(squares, 100);
  CHECK_FALSE(r.syndetic);
  CHECK(r.worst_gap == 198);  // the block between 99^2 and 100^2
  // Monotone in L.
  CHECK(syndetic_at_scale(evens, 5).syndetic);
}

TEST_CASE("piecewise syndetic scan") {
  WindowSet evens(0, 1000);
  for (std::int64_t n = 0; n <= 1000; n += 2) evens.insert(n);
  auto r = piecewise_syndetic_scan(evens, 1, 100);
  CHECK(r.verdict == PwsVerdict::kPwsAtScale);
  CHECK(r.witness_L == 1);
  // Witness replays: evens + {0..1} covers the claimed interval.
  WindowSet f(0, r.witness_L);
  for (std::int64_t n = 0; n <= r.witness_L; ++n) f.insert(n);
  WindowSet cover = sumset(evens, f, r.covered_lo, r.covered_hi);
  CHECK(cover == WindowSet::full(r.covered_lo, r.covered_hi));

  WindowSet sevens(0, 1000);
  for (std::int64_t n = 0; n <= 1000; n += 7) sevens.insert(n);
  CHECK(piecewise_syndetic_scan(sevens, 6, 50).verdict ==
        PwsVerdict::kPwsAtScale);
  CHECK(piecewise_syndetic_scan(sevens, 5, 50).verdict ==
        PwsVerdict::kNotPwsAtScale);

  WindowSet squares(0, 1000000);
  for (std::int64_t n = 0; n * n <= 1000000; ++n) squares.insert(n * n);
  CHECK(piecewise_syndetic_scan(squares, 10, 100).verdict ==
        PwsVerdict::kNotPwsAtScale);
}

TEST_CASE("pws verdict agrees with longest_run cross-check") {
  std::mt19937_64 rng(3);
  std::bernoulli_distribution coin(0.2);
  WindowSet s(0, 2000);
  for (std::int64_t n = 0; n <= 2000; ++n)
    if (coin(rng)) s.insert(n);
  for (std::int64_t l = 0; l <= 8; ++l) {
    WindowSet f(0, l);
    for (std::int64_t i = 0; i <= l; ++i) f.insert(i);
    std::int64_t run = longest_run(sumset(s, f, 0, 2000));
    auto rep = piecewise_syndetic_scan(s, l, run);
    if (run > 0) CHECK(rep.verdict == PwsVerdict::kPwsAtScale);
    CHECK(rep.max_run_per_L[static_cast<std::size_t>(l)] == run);
  }
}

TEST_CASE("ap intersection density") {
  CHECK(ap_intersection_density(WindowSet::full(0, 999), 3, 7, 100).value == 1);
  WindowSet evens(0, 1000);
  for (std::int64_t n = 0; n <= 1000; n += 2) evens.insert(n);
  CHECK(ap_intersection_density(evens, 1, 2, 100).value == Rational(1, 2));
  // Intersection matches the direct definition.
  std::mt19937_64 rng(9);
  WindowSet s = random_set(rng, 0, 300, 0.5);
  WindowSet inter = ap_intersection(s, 2, 5);
  for (std::int64_t n = inter.lo(); n <= inter.hi(); ++n) {
    bool expect = s.contains(n) && s.contains(n + 5) && s.contains(n + 10);
    CHECK(inter.contains(n) == expect);
  }
}

TEST_CASE("set invariants and window guards") {
  WindowSet s(10, 20);
  s.insert(15);
  CHECK(s.contains(15));
  CHECK_FALSE(s.contains(9));
  CHECK(s.count() == 1);
  CHECK_THROWS(banach_density_estimate(s, 0));
  CHECK_THROWS(banach_density_estimate(s, 100));
  // provenance never affects equality
  WindowSet t(10, 20, "other");
  t.insert(15);
  CHECK(s == t);
}
