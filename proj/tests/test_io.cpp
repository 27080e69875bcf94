#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "sumsets/io.hpp"
#include "sumsets/verify.hpp"

using namespace sumsets;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/sumsets_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("rational JSON round trip") {
  for (const Rational& q :
       {Rational(0), Rational(3, 7), Rational(-5, 9),
        Rational(BigInt("123456789012345678901234567890"),
                 BigInt("987654321098765432109876543211"))}) {
    CHECK(rational_from_json(rational_json(q)) == q);
  }
  // Big values serialize as strings, small ones as numbers.
  auto big = rational_json(Rational(BigInt("123456789012345678901234567890")));
  CHECK(big.at("num").is_string());
  auto small = rational_json(Rational(2, 3));
  CHECK(small.at("num").is_number());
}

TEST_CASE("real JSON carries precision") {
  auto j = real_json(real_sqrt2());
  CHECK(j.at("precision_bits").get<int>() == kRealMantissaBits);
  Real back(j.at("value").get<std::string>());
  CHECK(abs(back - real_sqrt2()) < ldexp(Real(1), -190));
}

TEST_CASE("set file round trip") {
  TempFile f("roundtrip.set");
  WindowSet s = WindowSet::from_elements(-5, 100, {-5, -3, 0, 7, 64, 100});
  for (std::int64_t n = 20; n <= 40; ++n) s.insert(n);  // exercises run lines
  write_set_file(s, f.path);
  CHECK(read_set_file(f.path) == s);
}

TEST_CASE("parse_family_spec") {
  CHECK(family_values(parse_family_spec("interval"), 3) ==
        std::vector<std::int64_t>{1, 2, 3});
  CHECK(family_values(parse_family_spec("power:1.5"), 5) ==
        std::vector<std::int64_t>{1, 2, 5, 8, 11});
  CHECK(family_values(parse_family_spec("genpoly:sqrt2*n^4-pi*n^2"), 2) ==
        std::vector<std::int64_t>{-2, 10});
  CHECK(family_values(parse_family_spec("explicit:4,4,9"), 3) ==
        std::vector<std::int64_t>{4, 4, 9});
  TempFile f("family.txt");
  {
    std::ofstream out(f.path);
    out << "10\n20\n30\n";
  }
  CHECK(family_values(parse_family_spec("file:" + f.path), 3) ==
        std::vector<std::int64_t>{10, 20, 30});
  CHECK_THROWS_AS(parse_family_spec("power:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("bogus"), std::invalid_argument);
}

TEST_CASE("parse_rotation_spec") {
  auto rot = parse_rotation_spec("torus:d=2,alpha=sqrt2,0.25");
  CHECK(rot.dimension() == 2);
  CHECK(rot.alpha()[0] == frac(real_sqrt2()));
  CHECK(rot.alpha()[1] == Real(1) / 4);
  CHECK(rot.irrational_flags() == std::vector<bool>{true, false});
  CHECK_THROWS_AS(parse_rotation_spec("torus:d=2,alpha=sqrt2"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_rotation_spec("circle:d=1,alpha=sqrt2"),
                  std::invalid_argument);
}

TEST_CASE("parse_region_spec") {
  auto r = parse_region_spec("box:0,0.25|box:0.5,0.75", 1);
  CHECK(r.measure() == Real(1) / 2);
  auto r2 = parse_region_spec("box:0,0.5,0.25,0.75", 2);
  CHECK(r2.measure() == Real(1) / 4);
  CHECK_THROWS_AS(parse_region_spec("box:0,0.5,0.25", 2), std::invalid_argument);
}

TEST_CASE("parse_set_spec") {
  CHECK(parse_set_spec("all", 0, 9) == WindowSet::full(0, 9));
  CHECK(parse_set_spec("empty", 0, 9) == WindowSet(0, 9));
  CHECK(parse_set_spec("explicit:1,5,7", 0, 9) ==
        WindowSet::from_elements(0, 9, {1, 5, 7}));
  CHECK(parse_set_spec("gen:squares", 0, 20) ==
        WindowSet::from_elements(0, 20, {0, 1, 4, 9, 16}));
  CHECK(parse_set_spec("mod:4;r=0,1", 0, 9) ==
        WindowSet::from_elements(0, 9, {0, 1, 4, 5, 8, 9}));
  CHECK(parse_set_spec("family:power:1.5;n=5", 0, 11) ==
        WindowSet::from_elements(0, 11, {1, 2, 5, 8, 11}));
}

TEST_CASE("grammar errors name the failing production") {
  using Catch = std::invalid_argument;
  try {
    parse_set_spec("mod:4;q=0", 0, 9);
    FAIL("expected a throw");
  } catch (const Catch& e) {
    CHECK(std::string(e.what()).find("mod") != std::string::npos);
  }
  try {
    parse_family_spec("genpoly:n^0");
    FAIL("expected a throw");
  } catch (const Catch& e) {
    CHECK(std::string(e.what()).find("genpoly") != std::string::npos);
  }
}

TEST_CASE("certificate JSON round trip replays cleanly") {
  auto g = FiniteAbelianGroup::parse("cyclic:8");
  GroupSubset e(g);
  for (auto x : {0, 1, 4}) e.insert(x);
  auto cert = steinhaus_converse(e, Rational(1, 2), enumerate_subgroups(g, 8));
  REQUIRE(cert.feasible);
  auto j = certificate_json(cert);
  auto back = certificate_from_json(j);
  CHECK(back.group_spec == cert.group_spec);
  CHECK(back.e == cert.e);
  CHECK(back.k == cert.k);
  CHECK(back.mass_used == cert.mass_used);
  CHECK(back.eps == cert.eps);
  CHECK(replay_certificate(back).all_ok);
  // Serialization is stable.
  CHECK(certificate_json(back).dump() == j.dump());
}

TEST_CASE("profile_csv") {
  auto csv = profile_csv({{100, 3.14, 0.25}});
  CHECK(csv.find("j,theta_argmax,max_abs") == 0);
  CHECK(csv.find("100,") != std::string::npos);
}
