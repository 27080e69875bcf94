// Command-line surface for the sumsets library: set generation, density and
// syndeticity scans, Weyl profiles, Bohr sets, group convolution checks,
// blocker construction, and the replayable experiment driver.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "sumsets/io.hpp"
#include "sumsets/parallel.hpp"
#include "sumsets/verify.hpp"

namespace {

using namespace sumsets;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerdict = 2;

std::pair<std::int64_t, std::int64_t> parse_window(const std::string& w) {
  auto colon = w.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("spec parse error in <window>: " + w +
                                " (expected lo:hi)");
  return {std::stoll(w.substr(0, colon)), std::stoll(w.substr(colon + 1))};
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

WindowSet load_set(const std::string& spec, std::int64_t lo, std::int64_t hi) {
  return parse_set_spec(spec, lo, hi);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write: " + out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  }
}

std::string set_file_text(const WindowSet& s) {
  std::ostringstream out;
  out << "#window " << s.lo() << ' ' << s.hi() << '\n';
  auto elems = s.elements();
  std::size_t i = 0;
  while (i < elems.size()) {
    std::size_t j = i;
    while (j + 1 < elems.size() && elems[j + 1] == elems[j] + 1) ++j;
    if (j - i + 1 >= 2)
      out << "run " << elems[i] << ' ' << (j - i + 1) << '\n';
    else
      out << elems[i] << '\n';
    i = j + 1;
  }
  return out.str();
}

// Group function spec: "ind:e1,e2,..." | "const:p/q" | "rand:<seed>[,den]".
GroupFunction parse_function_spec(const FiniteAbelianGroup& g,
                                  const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("spec parse error in <function-spec>: " + spec);
  std::string head = spec.substr(0, colon), body = spec.substr(colon + 1);
  if (head == "ind") {
    GroupSubset s(g);
    if (body.find(':') != std::string::npos) {
      // Full set spec: residues of the set's elements in the group.
      for (std::int64_t n : parse_set_spec(body, 0, g.order() - 1).elements())
        s.insert(g.residue_of_integer(n));
    } else {
      // Bare comma list of element indices.
      std::size_t pos = 0;
      while (pos < body.size()) {
        auto comma = body.find(',', pos);
        s.insert(std::stoll(body.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    return GroupFunction::indicator(s);
  }
  if (head == "const") return GroupFunction::constant(g, parse_rational(body));
  if (head == "rand") {
    auto comma = body.find(',');
    unsigned seed = static_cast<unsigned>(std::stoul(body.substr(0, comma)));
    std::int64_t den =
        comma == std::string::npos ? 64 : std::stoll(body.substr(comma + 1));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(0, den);
    std::vector<Rational> vals(static_cast<std::size_t>(g.order()));
    for (auto& v : vals) v = Rational(dist(rng), den);
    return GroupFunction(g, std::move(vals));
  }
  throw std::invalid_argument("spec parse error in <function-spec>: " + spec);
}

struct TrigTerm {
  std::complex<double> c;
  std::vector<std::int64_t> freq;
};

// Poly spec: terms joined by '|', each "re:im:k1[,k2...]".
TrigPolynomial parse_poly_spec(const std::string& spec) {
  TrigPolynomial poly;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto bar = spec.find('|', pos);
    std::string term = spec.substr(
        pos, bar == std::string::npos ? std::string::npos : bar - pos);
    auto c1 = term.find(':'), c2 = term.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw std::invalid_argument("spec parse error in <poly-term>: " + term);
    TrigPolynomial::Term t;
    t.coeff = {std::stod(term.substr(0, c1)),
               std::stod(term.substr(c1 + 1, c2 - c1 - 1))};
    std::string freqs = term.substr(c2 + 1);
    std::size_t fp = 0;
    while (fp < freqs.size()) {
      auto comma = freqs.find(',', fp);
      t.freq.push_back(std::stoll(freqs.substr(
          fp, comma == std::string::npos ? std::string::npos : comma - fp)));
      if (comma == std::string::npos) break;
      fp = comma + 1;
    }
    poly.terms.push_back(std::move(t));
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  return poly;
}

int run(int argc, char** argv) {
  CLI::App app{"sumsets: desk-scale sumset-structure experiments"};
  app.require_subcommand(1);

  int threads = 0;
  int precision_bits = kRealMantissaBits;
  if (const char* env = std::getenv("SUMSETS_PRECISION_BITS"))
    precision_bits = std::atoi(env);
  unsigned seed = 1;
  app.add_option("--threads", threads, "worker thread budget (0 = auto)");
  app.add_option("--precision-bits", precision_bits,
                 "required real precision (compiled mantissa: 192 bits)");
  app.add_option("--seed", seed, "seed for randomized inputs");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a set file");
  std::string gen_kind, gen_window, gen_out;
  gen->add_option("kind", gen_kind, "example kind or set spec")->required();
  gen->add_option("--window", gen_window, "lo:hi")->required();
  gen->add_option("-o,--out", gen_out, "output path (default stdout)");

  // density
  auto* density = app.add_subcommand("density", "density estimates");
  std::string den_set, den_window, den_mode = "banach", den_out;
  std::int64_t den_m = 0;
  density->add_option("--set", den_set, "set spec")->required();
  density->add_option("--window", den_window, "lo:hi")->required();
  density->add_option("--mode", den_mode, "banach | upper");
  density->add_option("--m", den_m, "subwindow length / prefix bound")
      ->required();
  density->add_option("-o,--out", den_out, "output path");

  // sumset
  auto* sum = app.add_subcommand("sumset", "A+B over a window");
  std::string sum_a, sum_b, sum_window, sum_outwin, sum_out;
  sum->add_option("--a", sum_a, "set spec for A")->required();
  sum->add_option("--b", sum_b, "set spec for B")->required();
  sum->add_option("--window", sum_window, "input window lo:hi")->required();
  sum->add_option("--out-window", sum_outwin, "output window (default input)");
  sum->add_option("-o,--out", sum_out, "output path");

  // scan
  auto* scan = app.add_subcommand("scan", "piecewise-syndetic / syndetic scan");
  std::string scan_set, scan_window, scan_mode = "pws", scan_out;
  std::int64_t scan_lmax = 0, scan_w = 0, scan_l = 0;
  scan->add_option("--set", scan_set, "set spec")->required();
  scan->add_option("--window", scan_window, "lo:hi")->required();
  scan->add_option("--mode", scan_mode, "pws | syndetic | longest-run");
  scan->add_option("--L-max", scan_lmax, "max shift bound (pws)");
  scan->add_option("--W", scan_w, "target interval length (pws)");
  scan->add_option("--L", scan_l, "gap bound (syndetic)");
  scan->add_option("-o,--out", scan_out, "output path");

  // weyl
  auto* weyl = app.add_subcommand("weyl", "Weyl sums over the theta grid");
  std::string weyl_family, weyl_out;
  std::int64_t weyl_j = 0;
  int weyl_grid = 1024;
  weyl->add_option("--family", weyl_family, "family spec")->required();
  weyl->add_option("--j", weyl_j, "measure index j")->required();
  weyl->add_option("--theta-grid", weyl_grid, "grid resolution");
  weyl->add_option("-o,--out", weyl_out, "output path");

  // profile
  auto* profile = app.add_subcommand("profile", "equidistribution profile");
  std::string prof_family, prof_jlist, prof_out;
  int prof_grid = 1024;
  profile->add_option("--family", prof_family, "family spec")->required();
  profile->add_option("--j-list", prof_jlist, "comma-separated j values")
      ->required();
  profile->add_option("--theta-grid", prof_grid, "grid resolution");
  profile->add_option("-o,--out", prof_out, "output path");

  // bohr
  auto* bohr = app.add_subcommand("bohr", "Bohr set from a rotation + region");
  std::string bohr_rot, bohr_region, bohr_window, bohr_out;
  bool bohr_json = false;
  bohr->add_option("--rotation", bohr_rot, "torus:d=1,alpha=sqrt2")->required();
  bohr->add_option("--region", bohr_region, "box:0,0.4")->required();
  bohr->add_option("--window", bohr_window, "lo:hi")->required();
  bohr->add_flag("--json", bohr_json, "emit JSON report instead of a set file");
  bohr->add_option("-o,--out", bohr_out, "output path");

  // rotavg
  auto* rotavg = app.add_subcommand("rotavg", "rotation average of a polynomial");
  std::string ra_rot, ra_poly, ra_family, ra_out;
  std::int64_t ra_j = 0;
  rotavg->add_option("--rotation", ra_rot, "rotation spec")->required();
  rotavg->add_option("--poly", ra_poly, "re:im:k terms joined by |")->required();
  rotavg->add_option("--family", ra_family, "family spec for nu")->required();
  rotavg->add_option("--j", ra_j, "measure index j")->required();
  rotavg->add_option("-o,--out", ra_out, "output path");

  // steinhaus
  auto* stein = app.add_subcommand("steinhaus", "convolution bound check");
  std::string st_group, st_f, st_g, st_out;
  stein->add_option("--group", st_group, "cyclic:N or product:...")->required();
  stein->add_option("--f", st_f, "function spec")->required();
  stein->add_option("--g", st_g, "function spec")->required();
  stein->add_option("-o,--out", st_out, "output path");

  // converse
  auto* conv = app.add_subcommand("converse", "large-K blocker certificate");
  std::string cv_group, cv_kind, cv_window, cv_out;
  std::string cv_eps = "1/5";
  std::int64_t cv_max_index = 0;
  conv->add_option("--group", cv_group, "group spec")->required();
  conv->add_option("--kind", cv_kind, "example kind projected into the group")
      ->required();
  conv->add_option("--window", cv_window, "projection scan window lo:hi")
      ->required();
  conv->add_option("--eps", cv_eps, "mass budget (rational)");
  conv->add_option("--max-index", cv_max_index, "coset basis index bound");
  conv->add_option("-o,--out", cv_out, "output path");

  // blocker
  auto* blk = app.add_subcommand("blocker", "full blocker pipeline");
  std::string bl_group, bl_kind, bl_window, bl_out;
  std::string bl_eps = "1/5", bl_slack = "1/50";
  std::int64_t bl_lmax = 24, bl_w = 200, bl_m = 10000;
  blk->add_option("--group", bl_group, "group spec")->required();
  blk->add_option("--kind", bl_kind, "example kind for A")->required();
  blk->add_option("--window", bl_window, "lo:hi")->required();
  blk->add_option("--eps", bl_eps, "mass budget (rational)");
  blk->add_option("--slack", bl_slack, "density slack (rational)");
  blk->add_option("--L-max", bl_lmax, "scan shift bound");
  blk->add_option("--W", bl_w, "scan target length");
  blk->add_option("--banach-m", bl_m, "density subwindow");
  blk->add_option("-o,--out", bl_out, "output path");

  // experiment
  auto* exp = app.add_subcommand("experiment", "run a JSON experiment spec");
  std::string exp_spec, exp_out;
  exp->add_option("--spec", exp_spec, "experiment spec file")->required();
  exp->add_option("-o,--out", exp_out, "report output path");

  // replay
  auto* rep = app.add_subcommand("replay", "re-verify a report or certificate");
  std::string rep_report, rep_cert;
  rep->add_option("--report", rep_report, "stored experiment report");
  rep->add_option("--certificate", rep_cert, "stored blocker certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (precision_bits > kRealMantissaBits) {
    std::cerr << "requested precision " << precision_bits
              << " bits exceeds the compiled mantissa (" << kRealMantissaBits
              << ")\n";
    return kExitUsage;
  }
  set_thread_budget(threads);

  if (*gen) {
    auto [lo, hi] = parse_window(gen_window);
    bool bare = gen_kind.find(':') == std::string::npos &&
                gen_kind != "all" && gen_kind != "empty";
    std::string spec = gen_kind;
    if (bare || gen_kind.rfind("powers:", 0) == 0 ||
        gen_kind.rfind("sparse_digit:", 0) == 0)
      spec = "gen:" + gen_kind;
    emit(set_file_text(parse_set_spec(spec, lo, hi)), gen_out);
  } else if (*density) {
    auto [lo, hi] = parse_window(den_window);
    WindowSet s = load_set(den_set, lo, hi);
    DensityEstimate d;
    if (den_mode == "banach")
      d = banach_density_estimate(s, den_m);
    else if (den_mode == "upper")
      d = upper_density_estimate(s, den_m);
    else
      throw std::invalid_argument("density --mode must be banach or upper");
    emit(to_json(d).dump(2), den_out);
  } else if (*sum) {
    auto [lo, hi] = parse_window(sum_window);
    auto [olo, ohi] =
        sum_outwin.empty() ? std::make_pair(lo, hi) : parse_window(sum_outwin);
    WindowSet s = sumset(load_set(sum_a, lo, hi), load_set(sum_b, lo, hi), olo,
                         ohi);
    emit(set_file_text(s), sum_out);
  } else if (*scan) {
    auto [lo, hi] = parse_window(scan_window);
    WindowSet s = load_set(scan_set, lo, hi);
    if (scan_mode == "pws") {
      emit(to_json(piecewise_syndetic_scan(s, scan_lmax, scan_w)).dump(2),
           scan_out);
    } else if (scan_mode == "syndetic") {
      emit(to_json(syndetic_at_scale(s, scan_l)).dump(2), scan_out);
    } else if (scan_mode == "longest-run") {
      Json j;
      j["longest_run"] = longest_run(s);
      emit(j.dump(2), scan_out);
    } else {
      throw std::invalid_argument("scan --mode must be pws|syndetic|longest-run");
    }
  } else if (*weyl) {
    SequenceFamily fam = parse_family_spec(weyl_family);
    FiniteMeasure nu = measure_at(fam, weyl_j);
    std::ostringstream csv;
    csv.precision(17);
    csv << "theta,re,im,abs\n";
    for (double theta : default_theta_grid(weyl_grid)) {
      auto w = weyl_sum(nu, theta);
      csv << theta << ',' << w.real() << ',' << w.imag() << ',' << std::abs(w)
          << '\n';
    }
    emit(csv.str(), weyl_out);
  } else if (*profile) {
    SequenceFamily fam = parse_family_spec(prof_family);
    std::vector<std::int64_t> js;
    std::istringstream in(prof_jlist);
    std::string tok;
    while (std::getline(in, tok, ',')) js.push_back(std::stoll(tok));
    auto rows = equidistribution_profile(fam, default_theta_grid(prof_grid), js);
    emit(profile_csv(rows), prof_out);
  } else if (*bohr) {
    auto [lo, hi] = parse_window(bohr_window);
    TorusRotation rot = parse_rotation_spec(bohr_rot);
    TorusRegion reg = parse_region_spec(bohr_region, rot.dimension());
    BohrSetResult r = bohr_set(rot, reg, lo, hi);
    if (bohr_json) {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["count"] = r.set.count();
      j["boundary_flagged"] = r.boundary_flagged;
      emit(j.dump(2), bohr_out);
    } else {
      emit(set_file_text(r.set), bohr_out);
    }
  } else if (*rotavg) {
    TorusRotation rot = parse_rotation_spec(ra_rot);
    TrigPolynomial poly = parse_poly_spec(ra_poly);
    FiniteMeasure nu = measure_at(parse_family_spec(ra_family), ra_j);
    auto v = rotation_average(poly, rot, nu);
    Json j;
    j["re"] = v.real();
    j["im"] = v.imag();
    j["constant_term_re"] = poly.constant_term().real();
    j["constant_term_im"] = poly.constant_term().imag();
    emit(j.dump(2), ra_out);
  } else if (*stein) {
    FiniteAbelianGroup g = FiniteAbelianGroup::parse(st_group);
    auto r = steinhaus_check(parse_function_spec(g, st_f),
                             parse_function_spec(g, st_g));
    emit(to_json(r).dump(2), st_out);
  } else if (*conv) {
    auto [lo, hi] = parse_window(cv_window);
    FiniteAbelianGroup g = FiniteAbelianGroup::parse(cv_group);
    WindowSet a = example_set(cv_kind, lo, hi);
    Projection proj = project_set(a, g);
    auto basis = enumerate_subgroups(
        g, cv_max_index > 0 ? cv_max_index : g.order());
    BlockerCertificate cert =
        steinhaus_converse(proj.set, parse_rational(cv_eps), basis);
    cert.window_lo = lo;
    cert.window_hi = hi;
    emit(certificate_json(cert).dump(2), cv_out);
  } else if (*blk) {
    auto [lo, hi] = parse_window(bl_window);
    FiniteAbelianGroup g = FiniteAbelianGroup::parse(bl_group);
    auto r = verify_blocker(bl_kind, g, parse_rational(bl_eps), lo, hi,
                            bl_lmax, bl_w, bl_m, parse_rational(bl_slack));
    emit(to_json(r).dump(2), bl_out);
  } else if (*exp) {
    std::ifstream in(exp_spec);
    if (!in) throw std::runtime_error("cannot open spec: " + exp_spec);
    Json spec = Json::parse(in);
    Json report = run_experiment(spec);
    emit(report.dump(2), exp_out);
    if (!experiment_passed(report)) return kExitVerdict;
  } else if (*rep) {
    if (!rep_cert.empty()) {
      std::ifstream in(rep_cert);
      if (!in) throw std::runtime_error("cannot open certificate: " + rep_cert);
      BlockerCertificate cert = certificate_from_json(Json::parse(in));
      CertificateReplay r = replay_certificate(cert);
      emit(to_json(r).dump(2), std::string());
      if (!r.all_ok) return kExitVerdict;
    } else if (!rep_report.empty()) {
      std::ifstream in(rep_report);
      if (!in) throw std::runtime_error("cannot open report: " + rep_report);
      Json stored = Json::parse(in);
      Json fresh = run_experiment(stored.at("spec"));
      bool same = fresh.dump() == stored.dump();
      Json j;
      j["identical"] = same;
      j["passed"] = experiment_passed(fresh);
      emit(j.dump(2), std::string());
      if (!same || !experiment_passed(fresh)) return kExitVerdict;
    } else {
      throw std::invalid_argument("replay needs --report or --certificate");
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
