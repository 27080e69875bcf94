#include "sumsets/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sumsets {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string::npos ? std::string::npos
                                                         : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

[[noreturn]] void grammar_error(const std::string& production,
                                const std::string& text) {
  throw std::invalid_argument("spec parse error in <" + production +
                              ">: " + text);
}

bool is_named_constant(const std::string& tok) {
  return tok == "sqrt2" || tok == "sqrt3" || tok == "golden" || tok == "pi" ||
         tok == "pi-frac";
}

// One genpoly term: [sign] [const '*'] n ['^' exp]  or  [sign] const.
// Constant-only terms (exponent 0) are rejected by the family constructor.
GenPolyFamily::Term parse_genpoly_term(const std::string& raw, bool negate) {
  GenPolyFamily::Term t{Real(1), 1};
  std::string body = raw;
  auto star = body.find('*');
  std::string coef_tok, var_tok;
  if (star != std::string::npos) {
    coef_tok = body.substr(0, star);
    var_tok = body.substr(star + 1);
  } else if (!body.empty() && body[0] == 'n') {
    var_tok = body;
  } else {
    grammar_error("genpoly-term", raw);
  }
  if (!coef_tok.empty()) t.coeff = resolve_real(coef_tok);
  if (var_tok.empty() || var_tok[0] != 'n') grammar_error("genpoly-term", raw);
  if (var_tok.size() > 1) {
    if (var_tok[1] != '^') grammar_error("genpoly-term", raw);
    t.exponent = static_cast<unsigned>(std::stoul(var_tok.substr(2)));
  }
  if (negate) t.coeff = -t.coeff;
  return t;
}

}  // namespace

SequenceFamily parse_family_spec(const std::string& spec) {
  if (spec == "interval") return SequenceFamily::interval();
  auto colon = spec.find(':');
  if (colon == std::string::npos) grammar_error("family-spec", spec);
  std::string head = spec.substr(0, colon), body = spec.substr(colon + 1);
  if (head == "power") return SequenceFamily::power_floor(resolve_real(body));
  if (head == "genpoly") {
    // Terms separated by +/- signs (a leading sign is allowed).
    std::vector<GenPolyFamily::Term> terms;
    std::size_t pos = 0;
    bool neg = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
      neg = body[0] == '-';
      pos = 1;
    }
    while (pos < body.size()) {
      std::size_t end = body.find_first_of("+-", pos);
      std::string term = body.substr(
          pos, end == std::string::npos ? std::string::npos : end - pos);
      terms.push_back(parse_genpoly_term(term, neg));
      if (end == std::string::npos) break;
      neg = body[end] == '-';
      pos = end + 1;
    }
    return SequenceFamily::genpoly(std::move(terms));
  }
  if (head == "explicit") {
    std::vector<std::int64_t> vals;
    for (const auto& tok : split(body, ',')) vals.push_back(std::stoll(tok));
    return SequenceFamily::explicit_values(std::move(vals));
  }
  if (head == "file") {
    std::ifstream in(body);
    if (!in) grammar_error("family-file", body);
    std::vector<std::int64_t> vals;
    std::int64_t v;
    while (in >> v) vals.push_back(v);
    return SequenceFamily::explicit_values(std::move(vals));
  }
  grammar_error("family-spec", spec);
}

TorusRotation parse_rotation_spec(const std::string& spec) {
  if (spec.rfind("torus:", 0) != 0) grammar_error("rotation-spec", spec);
  std::string body = spec.substr(6);
  auto parts = split(body, ',');
  if (parts.empty() || parts[0].rfind("d=", 0) != 0)
    grammar_error("rotation-spec", spec);
  int d = std::stoi(parts[0].substr(2));
  if (d < 1 || static_cast<int>(parts.size()) != d + 1)
    grammar_error("rotation-spec", spec);
  if (parts[1].rfind("alpha=", 0) != 0) grammar_error("rotation-spec", spec);
  parts[1] = parts[1].substr(6);
  std::vector<Real> alpha;
  std::vector<bool> irr;
  for (int i = 0; i < d; ++i) {
    alpha.push_back(frac(resolve_real(parts[static_cast<std::size_t>(i + 1)])));
    irr.push_back(is_named_constant(parts[static_cast<std::size_t>(i + 1)]));
  }
  return TorusRotation(std::move(alpha), std::move(irr));
}

TorusRegion parse_region_spec(const std::string& spec, int dimension) {
  std::vector<TorusBox> boxes;
  for (const auto& piece : split(spec, '|')) {
    if (piece.rfind("box:", 0) != 0) grammar_error("region-spec", piece);
    auto nums = split(piece.substr(4), ',');
    if (static_cast<int>(nums.size()) != 2 * dimension)
      grammar_error("region-spec (need 2 endpoints per axis)", piece);
    TorusBox b;
    for (int i = 0; i < dimension; ++i) {
      b.lo.push_back(resolve_real(nums[static_cast<std::size_t>(2 * i)]));
      b.hi.push_back(resolve_real(nums[static_cast<std::size_t>(2 * i + 1)]));
    }
    boxes.push_back(std::move(b));
  }
  return TorusRegion(dimension, std::move(boxes));
}

WindowSet parse_set_spec(const std::string& spec, std::int64_t lo,
                         std::int64_t hi) {
  if (spec == "all") return WindowSet::full(lo, hi, spec);
  if (spec == "empty") return WindowSet(lo, hi, spec);
  auto colon = spec.find(':');
  if (colon == std::string::npos) grammar_error("set-spec", spec);
  std::string head = spec.substr(0, colon), body = spec.substr(colon + 1);
  if (head == "gen") {
    WindowSet s = example_set(body, lo, hi);
    s.set_provenance(spec);
    return s;
  }
  if (head == "explicit") {
    WindowSet s(lo, hi, spec);
    for (const auto& tok : split(body, ',')) {
      std::int64_t v = std::stoll(tok);
      if (v >= lo && v <= hi) s.insert(v);
    }
    return s;
  }
  if (head == "mod") {
    auto semi = body.find(';');
    if (semi == std::string::npos || body.compare(semi + 1, 2, "r=") != 0)
      grammar_error("set-spec mod:<q>;r=...", spec);
    std::int64_t q = std::stoll(body.substr(0, semi));
    if (q <= 0) grammar_error("set-spec mod (q > 0)", spec);
    std::vector<bool> keep(static_cast<std::size_t>(q), false);
    for (const auto& tok : split(body.substr(semi + 3), ','))
      keep[static_cast<std::size_t>(((std::stoll(tok) % q) + q) % q)] = true;
    WindowSet s(lo, hi, spec);
    for (std::int64_t n = lo; n <= hi; ++n)
      if (keep[static_cast<std::size_t>(((n % q) + q) % q)]) s.insert(n);
    return s;
  }
  if (head == "family") {
    auto semi = body.find(";n=");
    if (semi == std::string::npos) grammar_error("set-spec family:...;n=j", spec);
    SequenceFamily fam = parse_family_spec(body.substr(0, semi));
    std::int64_t j = std::stoll(body.substr(semi + 3));
    WindowSet s(lo, hi, spec);
    for (std::int64_t v : family_values(fam, j))
      if (v >= lo && v <= hi) s.insert(v);
    return s;
  }
  if (head == "file") {
    WindowSet f = read_set_file(body);
    WindowSet s(lo, hi, spec);
    for (std::int64_t n : f.elements())
      if (n >= lo && n <= hi) s.insert(n);
    return s;
  }
  grammar_error("set-spec", spec);
}

WindowSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open set file: " + path);
  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  std::string tag;
  std::int64_t lo, hi;
  if (!(hs >> tag >> lo >> hi) || tag != "#window")
    throw std::runtime_error("set file missing '#window lo hi' header: " + path);
  WindowSet s(lo, hi);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "run") {
      std::int64_t start, len;
      if (!(ls >> start >> len))
        throw std::runtime_error("bad run line in set file: " + line);
      for (std::int64_t n = start; n < start + len; ++n) s.insert(n);
    } else {
      s.insert(std::stoll(first));
    }
  }
  return s;
}

void write_set_file(const WindowSet& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write set file: " + path);
  out << "#window " << s.lo() << ' ' << s.hi() << '\n';
  auto elems = s.elements();
  std::size_t i = 0;
  while (i < elems.size()) {
    std::size_t j = i;
    while (j + 1 < elems.size() && elems[j + 1] == elems[j] + 1) ++j;
    std::size_t len = j - i + 1;
    if (len >= 2)
      out << "run " << elems[i] << ' ' << len << '\n';
    else
      out << elems[i] << '\n';
    i = j + 1;
  }
}

Json rational_json(const Rational& q) {
  Json j;
  BigInt num = numerator(q), den = denominator(q);
  auto fits = [](const BigInt& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
  };
  if (fits(num))
    j["num"] = static_cast<std::int64_t>(num);
  else
    j["num"] = num.str();
  if (fits(den))
    j["den"] = static_cast<std::int64_t>(den);
  else
    j["den"] = den.str();
  return j;
}

Rational rational_from_json(const Json& j) {
  auto part = [&](const char* key) {
    const auto& v = j.at(key);
    if (v.is_string()) return BigInt(v.get<std::string>());
    return BigInt(v.get<std::int64_t>());
  };
  return Rational(part("num"), part("den"));
}

Json real_json(const Real& x) {
  Json j;
  j["value"] = x.str(60);
  j["precision_bits"] = kRealMantissaBits;
  return j;
}

Json to_json(const DensityEstimate& d) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["value"] = rational_json(d.value);
  j["window_length"] = d.window_length;
  j["witness_lo"] = d.witness_lo;
  j["witness_hi"] = d.witness_hi;
  return j;
}

Json to_json(const SyndeticReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["syndetic"] = r.syndetic;
  j["worst_gap"] = r.worst_gap;
  j["gap_lo"] = r.gap_lo;
  j["gap_hi"] = r.gap_hi;
  return j;
}

Json to_json(const PwsScanReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["shift_bound"] = r.shift_bound;
  j["target_length"] = r.target_length;
  j["window_lo"] = r.window_lo;
  j["window_hi"] = r.window_hi;
  j["verdict"] =
      r.verdict == PwsVerdict::kPwsAtScale ? "pws_at_scale" : "not_pws_at_scale";
  j["witness_L"] = r.witness_L;
  j["covered_lo"] = r.covered_lo;
  j["covered_hi"] = r.covered_hi;
  j["max_run_per_L"] = r.max_run_per_L;
  return j;
}

Json to_json(const SteinhausReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["mean_f"] = rational_json(r.mean_f);
  j["mean_g"] = rational_json(r.mean_g);
  j["support_measure"] = rational_json(r.support_measure);
  j["sup_value"] = rational_json(r.sup_value);
  j["mean_conv"] = rational_json(r.mean_conv);
  j["support_ok"] = r.support_ok;
  j["sup_ok"] = r.sup_ok;
  j["mean_ok"] = r.mean_ok;
  j["all_ok"] = r.all_ok;
  return j;
}

Json to_json(const SequenceDensity& d) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["value"] = rational_json(d.value);
  j["witness_j"] = d.witness_j;
  j["tail_lo"] = d.tail_lo;
  j["tail_hi"] = d.tail_hi;
  return j;
}

Json to_json(const EntryGapReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["max_gap"] = r.max_gap;
  j["gap_at"] = r.gap_at;
  j["entries"] = r.entries;
  return j;
}

Json to_json(const ConvolutionComparisonReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["grid_resolution"] = r.grid_resolution;
  j["sup_discrepancy"] = r.sup_discrepancy;
  j["psi_integral"] = rational_json(r.psi_integral);
  j["eta_total"] = rational_json(r.eta_total);
  j["mass_conserved"] = r.mass_conserved;
  return j;
}

Json certificate_json(const BlockerCertificate& cert) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = cert.group_spec;
  j["e_elements"] = cert.e.elements();
  Json cosets = Json::array();
  for (const auto& sel : cert.cosets) {
    Json c;
    c["subgroup_step"] = sel.coset.sub.step;
    c["index"] = sel.coset.sub.index;
    c["representative"] = sel.coset.rep;
    c["projected_classes"] = sel.projected_classes;
    c["cost"] = rational_json(sel.cost);
    cosets.push_back(std::move(c));
  }
  j["cosets"] = std::move(cosets);
  j["k_elements"] = cert.k.elements();
  j["k_measure"] = rational_json(cert.k_measure);
  j["mass_used"] = rational_json(cert.mass_used);
  j["eps"] = rational_json(cert.eps);
  j["feasible"] = cert.feasible;
  j["min_achievable"] = rational_json(cert.min_achievable);
  j["z"] = cert.z;
  j["window_lo"] = cert.window_lo;
  j["window_hi"] = cert.window_hi;
  return j;
}

BlockerCertificate certificate_from_json(const Json& j) {
  FiniteAbelianGroup g =
      FiniteAbelianGroup::parse(j.at("group").get<std::string>());
  GroupSubset e(g), k(g);
  for (std::int64_t x : j.at("e_elements").get<std::vector<std::int64_t>>())
    e.insert(x);
  for (std::int64_t x : j.at("k_elements").get<std::vector<std::int64_t>>())
    k.insert(x);
  BlockerCertificate cert{j.at("group").get<std::string>(),
                          std::move(e),
                          {},
                          std::move(k),
                          rational_from_json(j.at("k_measure")),
                          rational_from_json(j.at("mass_used")),
                          rational_from_json(j.at("eps")),
                          j.at("feasible").get<bool>(),
                          rational_from_json(j.at("min_achievable")),
                          j.at("z").get<std::int64_t>(),
                          j.at("window_lo").get<std::int64_t>(),
                          j.at("window_hi").get<std::int64_t>()};
  for (const auto& c : j.at("cosets")) {
    Subgroup h{c.at("subgroup_step").get<std::vector<std::int64_t>>(),
               c.at("index").get<std::int64_t>()};
    Coset v{std::move(h),
            c.at("representative").get<std::vector<std::int64_t>>()};
    cert.cosets.push_back(SelectedCoset{
        std::move(v), c.at("projected_classes").get<std::int64_t>(),
        rational_from_json(c.at("cost"))});
  }
  return cert;
}

std::string profile_csv(const std::vector<ProfileRow>& rows) {
  std::ostringstream out;
  out << "j,theta_argmax,max_abs\n";
  out.precision(17);
  for (const auto& r : rows)
    out << r.j << ',' << r.theta_argmax << ',' << r.max_abs << '\n';
  return out.str();
}

}  // namespace sumsets
