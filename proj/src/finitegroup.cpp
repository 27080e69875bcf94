#include "sumsets/finitegroup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sumsets/convolution.hpp"

namespace sumsets {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> moduli,
                                       std::int64_t order_cap)
    : moduli_(std::move(moduli)) {
  if (moduli_.empty())
    throw std::invalid_argument("group needs at least one modulus");
  order_ = 1;
  for (std::int64_t q : moduli_) {
    if (q <= 0) throw std::invalid_argument("modulus must be positive");
    if (order_ > order_cap / q)
      throw std::invalid_argument("group order exceeds the memory cap");
    order_ *= q;
  }
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& spec,
                                             std::int64_t order_cap) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("group spec must be cyclic:N or product:...");
  std::string head = spec.substr(0, colon);
  std::string body = spec.substr(colon + 1);
  std::vector<std::int64_t> moduli;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string tok = body.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    moduli.push_back(std::stoll(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (head == "cyclic") {
    if (moduli.size() != 1)
      throw std::invalid_argument("cyclic spec takes one modulus");
  } else if (head != "product") {
    throw std::invalid_argument("unknown group spec kind: " + head);
  }
  return FiniteAbelianGroup(std::move(moduli), order_cap);
}

std::string FiniteAbelianGroup::spec_string() const {
  std::string out = moduli_.size() == 1 ? "cyclic:" : "product:";
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(moduli_[i]);
  }
  return out;
}

std::int64_t FiniteAbelianGroup::index_of(
    const std::vector<std::int64_t>& tuple) const {
  if (tuple.size() != moduli_.size())
    throw std::invalid_argument("tuple rank mismatch");
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= moduli_[i])
      throw std::out_of_range("residue out of range");
    idx = idx * moduli_[i] + tuple[i];
  }
  return idx;
}

std::vector<std::int64_t> FiniteAbelianGroup::tuple_of(
    std::int64_t index) const {
  std::vector<std::int64_t> t(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    t[i] = index % moduli_[i];
    index /= moduli_[i];
  }
  return t;
}

std::int64_t FiniteAbelianGroup::add(std::int64_t a, std::int64_t b) const {
  // Componentwise addition via decode/encode; rank is tiny so this is cheap.
  auto ta = tuple_of(a), tb = tuple_of(b);
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    ta[i] += tb[i];
    if (ta[i] >= moduli_[i]) ta[i] -= moduli_[i];
    idx = idx * moduli_[i] + ta[i];
  }
  return idx;
}

std::int64_t FiniteAbelianGroup::neg(std::int64_t a) const {
  auto t = tuple_of(a);
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::int64_t v = t[i] == 0 ? 0 : moduli_[i] - t[i];
    idx = idx * moduli_[i] + v;
  }
  return idx;
}

std::int64_t FiniteAbelianGroup::residue_of_integer(std::int64_t n) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::int64_t r = n % moduli_[i];
    if (r < 0) r += moduli_[i];
    idx = idx * moduli_[i] + r;
  }
  return idx;
}

GroupSubset::GroupSubset(FiniteAbelianGroup group)
    : group_(std::move(group)),
      bits_(static_cast<std::size_t>(group_.order()), false) {}

void GroupSubset::insert(std::int64_t index) {
  auto i = static_cast<std::size_t>(index);
  if (!bits_[i]) {
    bits_[i] = true;
    ++count_;
  }
}

void GroupSubset::erase(std::int64_t index) {
  auto i = static_cast<std::size_t>(index);
  if (bits_[i]) {
    bits_[i] = false;
    --count_;
  }
}

std::vector<std::int64_t> GroupSubset::elements() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (std::int64_t i = 0; i < group_.order(); ++i)
    if (bits_[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

GroupSubset GroupSubset::complement() const {
  GroupSubset out(group_);
  for (std::int64_t i = 0; i < group_.order(); ++i)
    if (!bits_[static_cast<std::size_t>(i)]) out.insert(i);
  return out;
}

GroupSubset GroupSubset::full(const FiniteAbelianGroup& g) {
  GroupSubset out(g);
  for (std::int64_t i = 0; i < g.order(); ++i) out.insert(i);
  return out;
}

GroupSubset group_sumset(const GroupSubset& a, const GroupSubset& b) {
  if (!(a.group() == b.group()))
    throw std::invalid_argument("group mismatch in sumset");
  GroupSubset out(a.group());
  auto ea = a.elements(), eb = b.elements();
  for (std::int64_t x : ea)
    for (std::int64_t y : eb) out.insert(a.group().add(x, y));
  return out;
}

GroupSubset group_difference(const GroupSubset& a, const GroupSubset& b) {
  if (!(a.group() == b.group()))
    throw std::invalid_argument("group mismatch in difference");
  GroupSubset out(a.group());
  auto ea = a.elements(), eb = b.elements();
  for (std::int64_t x : ea)
    for (std::int64_t y : eb) out.insert(a.group().sub(x, y));
  return out;
}

GroupFunction::GroupFunction(FiniteAbelianGroup group,
                             std::vector<Rational> values,
                             bool check_unit_range)
    : group_(std::move(group)), values_(std::move(values)) {
  if (static_cast<std::int64_t>(values_.size()) != group_.order())
    throw std::invalid_argument("GroupFunction: value count != group order");
  if (check_unit_range) {
    for (const auto& v : values_)
      if (v < 0 || v > 1)
        throw std::invalid_argument("GroupFunction: value outside [0,1]");
  }
}

GroupFunction GroupFunction::indicator(const GroupSubset& s) {
  std::vector<Rational> vals(static_cast<std::size_t>(s.group().order()), 0);
  for (std::int64_t i = 0; i < s.group().order(); ++i)
    if (s.contains(i)) vals[static_cast<std::size_t>(i)] = 1;
  return GroupFunction(s.group(), std::move(vals));
}

GroupFunction GroupFunction::constant(const FiniteAbelianGroup& g,
                                      const Rational& c) {
  return GroupFunction(g,
                       std::vector<Rational>(static_cast<std::size_t>(g.order()), c));
}

Rational GroupFunction::mean() const {
  Rational s = 0;
  for (const auto& v : values_) s += v;
  return s / group_.order();
}

Rational GroupFunction::sup() const {
  Rational m = values_[0];
  for (const auto& v : values_)
    if (v > m) m = v;
  return m;
}

Rational GroupFunction::support_measure() const {
  std::int64_t n = 0;
  for (const auto& v : values_)
    if (v != 0) ++n;
  return Rational(n, group_.order());
}

GroupFunction GroupFunction::shifted(std::int64_t a) const {
  std::vector<Rational> vals(values_.size());
  for (std::int64_t t = 0; t < group_.order(); ++t)
    vals[static_cast<std::size_t>(t)] =
        values_[static_cast<std::size_t>(group_.sub(t, a))];
  return GroupFunction(group_, std::move(vals), false);
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
  if (!(f.group() == g.group()))
    throw std::invalid_argument("group mismatch in convolve");
  auto raw = cyclic_convolve_raw<Rational>(f.group().moduli(), f.values(),
                                           g.values());
  for (auto& v : raw) v /= f.group().order();
  return GroupFunction(f.group(), std::move(raw), false);
}

GroupFunction convolve_packed(const GroupFunction& f, const GroupFunction& g) {
  if (!(f.group() == g.group()))
    throw std::invalid_argument("group mismatch in convolve");
  const auto& q = f.group().moduli();
  const std::size_t k = q.size();
  const std::int64_t order = f.group().order();

  // Common scaling to integers.
  BigInt lcm_den = 1;
  for (const auto& v : f.values())
    lcm_den = boost::multiprecision::lcm(lcm_den, BigInt(denominator(v)));
  for (const auto& v : g.values())
    lcm_den = boost::multiprecision::lcm(lcm_den, BigInt(denominator(v)));
  auto scale = [&](const Rational& v) {
    return BigInt(numerator(v)) * (lcm_den / BigInt(denominator(v)));
  };

  // Padded strides: axis i occupies base-(2q_i - 1) digit positions so the
  // plain integer product never carries between axes.
  std::vector<std::int64_t> width(k), stride(k);
  std::int64_t slots = 1;
  for (std::size_t i = k; i-- > 0;) {
    width[i] = 2 * q[i] - 1;
    stride[i] = slots;
    slots *= width[i];
  }

  // Digit width: product coefficients are bounded by order * L^2.
  BigInt coeff_bound = BigInt(order) * lcm_den * lcm_den;
  unsigned bits = boost::multiprecision::msb(coeff_bound) + 2;

  auto pack = [&](const GroupFunction& h) {
    BigInt x = 0;
    for (std::int64_t idx = 0; idx < order; ++idx) {
      BigInt c = scale(h.at(idx));
      if (c == 0) continue;
      auto t = h.group().tuple_of(idx);
      std::int64_t e = 0;
      for (std::size_t i = 0; i < k; ++i) e += t[i] * stride[i];
      x += c << (bits * static_cast<unsigned long>(e));
    }
    return x;
  };

  BigInt prod = pack(f) * pack(g);
  BigInt mask = (BigInt(1) << bits) - 1;
  std::vector<BigInt> acc(static_cast<std::size_t>(order), BigInt(0));
  std::vector<std::int64_t> coord(k);
  for (std::int64_t e = 0; e < slots && prod != 0; ++e) {
    BigInt digit = prod & mask;
    prod >>= bits;
    if (digit == 0) continue;
    std::int64_t rem = e, idx = 0;
    for (std::size_t i = k; i-- > 0;) {
      coord[i] = rem % width[i];
      rem /= width[i];
    }
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t r = coord[i] % q[i];
      idx = idx * q[i] + r;
    }
    acc[static_cast<std::size_t>(idx)] += digit;
  }

  BigInt den = lcm_den * lcm_den * order;
  std::vector<Rational> vals(static_cast<std::size_t>(order));
  for (std::int64_t t = 0; t < order; ++t)
    vals[static_cast<std::size_t>(t)] =
        Rational(acc[static_cast<std::size_t>(t)], den);
  return GroupFunction(f.group(), std::move(vals), false);
}

SteinhausReport steinhaus_check(const GroupFunction& f,
                                const GroupFunction& g) {
  SteinhausReport rep;
  rep.mean_f = f.mean();
  rep.mean_g = g.mean();
  if (rep.mean_f <= 0 || rep.mean_g <= 0)
    throw std::invalid_argument("steinhaus_check: inputs must have positive mean");
  GroupFunction conv = convolve(f, g);
  rep.support_measure = conv.support_measure();
  rep.sup_value = conv.sup();
  rep.mean_conv = conv.mean();
  rep.support_ok = rep.support_measure >= std::max(rep.mean_f, rep.mean_g);
  rep.sup_ok = rep.sup_value <= std::min(rep.mean_f, rep.mean_g);
  rep.mean_ok = rep.mean_conv == rep.mean_f * rep.mean_g;
  rep.all_ok = rep.support_ok && rep.sup_ok && rep.mean_ok;
  return rep;
}

Projection project_set(const WindowSet& a, const FiniteAbelianGroup& g) {
  Projection p{GroupSubset(g), a.lo(), a.hi()};
  for (std::int64_t n : a.elements()) p.set.insert(g.residue_of_integer(n));
  return p;
}

namespace {

std::vector<std::int64_t> divisors_of(std::int64_t q) {
  std::vector<std::int64_t> d;
  for (std::int64_t i = 1; i * i <= q; ++i) {
    if (q % i == 0) {
      d.push_back(i);
      if (i != q / i) d.push_back(q / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g,
                                          std::int64_t max_index) {
  std::vector<std::vector<std::int64_t>> axis_divisors;
  for (std::int64_t q : g.moduli()) axis_divisors.push_back(divisors_of(q));
  std::vector<Subgroup> out;
  std::vector<std::int64_t> step(g.rank());
  auto rec = [&](auto&& self, std::size_t i, std::int64_t index) -> void {
    if (i == g.rank()) {
      out.push_back(Subgroup{step, index});
      return;
    }
    for (std::int64_t d : axis_divisors[i]) {
      if (index > max_index / d) continue;
      step[i] = d;
      self(self, i + 1, index * d);
    }
  };
  rec(rec, 0, 1);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.index != b.index) return a.index < b.index;
    return a.step < b.step;
  });
  return out;
}

std::int64_t projected_class_count(const GroupSubset& e, const Subgroup& h) {
  const auto& g = e.group();
  std::vector<bool> seen(static_cast<std::size_t>(h.index), false);
  std::int64_t n = 0;
  for (std::int64_t x : e.elements()) {
    auto t = g.tuple_of(x);
    std::int64_t cls = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
      cls = cls * h.step[i] + t[i] % h.step[i];
    if (!seen[static_cast<std::size_t>(cls)]) {
      seen[static_cast<std::size_t>(cls)] = true;
      ++n;
    }
  }
  return n;
}

BlockerCertificate steinhaus_converse(const GroupSubset& e, const Rational& eps,
                                      const std::vector<Subgroup>& basis) {
  const auto& g = e.group();
  BlockerCertificate cert{g.spec_string(),
                          e,
                          {},
                          GroupSubset::full(g),
                          0,
                          0,
                          eps,
                          false,
                          0,
                          0,
                          0,
                          -1};
  if (e.size() == 0)
    throw std::invalid_argument("steinhaus_converse: E must be nonempty");

  bool have_min = false;
  for (const auto& h : basis) {
    std::int64_t classes = projected_class_count(e, h);
    Rational cost(classes, h.index);
    if (!have_min || cost < cert.min_achievable) {
      cert.min_achievable = cost;
      have_min = true;
    }
    if (cert.mass_used + cost < eps) {
      // Representative 0: the cost m(V - E) is shift-invariant, so the coset
      // through the identity is as good as any and keeps selection
      // deterministic.
      Coset v{h, std::vector<std::int64_t>(g.rank(), 0)};
      cert.cosets.push_back(SelectedCoset{v, classes, cost});
      cert.mass_used += cost;

      // Remove V - E from K: classes (rep - e) mod step.
      std::vector<bool> bad(static_cast<std::size_t>(h.index), false);
      for (std::int64_t x : e.elements()) {
        auto t = g.tuple_of(x);
        std::int64_t cls = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
          std::int64_t r = (v.rep[i] - t[i] % h.step[i]) % h.step[i];
          if (r < 0) r += h.step[i];
          cls = cls * h.step[i] + r;
        }
        bad[static_cast<std::size_t>(cls)] = true;
      }
      for (std::int64_t x = 0; x < g.order(); ++x) {
        if (!cert.k.contains(x)) continue;
        auto t = g.tuple_of(x);
        std::int64_t cls = 0;
        for (std::size_t i = 0; i < t.size(); ++i)
          cls = cls * h.step[i] + t[i] % h.step[i];
        if (bad[static_cast<std::size_t>(cls)]) cert.k.erase(x);
      }
    }
  }
  cert.k_measure = cert.k.measure();
  cert.feasible = !cert.cosets.empty();
  return cert;
}

CertificateReplay replay_certificate(const BlockerCertificate& cert) {
  const auto& g = cert.e.group();
  CertificateReplay rep{true, true, true, true, true};
  rep.budget_ok = cert.mass_used < cert.eps;

  auto e_elems = cert.e.elements();
  Rational union_mass = 0;
  std::vector<bool> covered_subgroup_ok;
  for (const auto& sel : cert.cosets) {
    const auto& h = sel.coset.sub;
    // Enumerate V = {x : x_i == rep_i mod step_i} directly.
    std::vector<std::int64_t> v_elems;
    for (std::int64_t x = 0; x < g.order(); ++x) {
      auto t = g.tuple_of(x);
      bool in = true;
      for (std::size_t i = 0; i < t.size() && in; ++i)
        in = (t[i] % h.step[i]) == sel.coset.rep[i];
      if (in) v_elems.push_back(x);
    }
    // (E + K) disjoint from V  <=>  v - e never lands in K.
    bool disjoint = true;
    std::vector<bool> diff_seen(static_cast<std::size_t>(g.order()), false);
    std::int64_t diff_count = 0;
    for (std::int64_t v : v_elems) {
      for (std::int64_t e : e_elems) {
        std::int64_t d = g.sub(v, e);
        if (cert.k.contains(d)) disjoint = false;
        if (!diff_seen[static_cast<std::size_t>(d)]) {
          diff_seen[static_cast<std::size_t>(d)] = true;
          ++diff_count;
        }
      }
    }
    union_mass += Rational(diff_count, g.order());
    if (!disjoint) rep.cosets_disjoint = false;
    covered_subgroup_ok.push_back(disjoint);
  }
  // Per-coset m(V - E) sums bound the union from above, so m(K) must be at
  // least 1 - sum. Checked against independently recomputed coset masses.
  Rational listed_sum = 0;
  for (const auto& sel : cert.cosets) listed_sum += sel.cost;
  rep.measure_ok = cert.k.measure() >= 1 - listed_sum &&
                   cert.k.measure() == cert.k_measure &&
                   listed_sum == cert.mass_used;
  // Every covered subgroup misses at least one of its cosets (its verified V).
  rep.empty_interior_ok = true;
  for (bool ok : covered_subgroup_ok)
    if (!ok) rep.empty_interior_ok = false;
  if (cert.cosets.empty()) rep.empty_interior_ok = false;
  rep.all_ok = rep.cosets_disjoint && rep.measure_ok && rep.empty_interior_ok &&
               rep.budget_ok;
  return rep;
}

BlockerResult build_blocker(const WindowSet& a, const FiniteAbelianGroup& g,
                            const Rational& eps, std::int64_t z,
                            std::int64_t window_lo, std::int64_t window_hi,
                            std::int64_t max_subgroup_index) {
  if (max_subgroup_index <= 0) max_subgroup_index = g.order();
  Projection proj = project_set(a, g);
  auto basis = enumerate_subgroups(g, max_subgroup_index);
  BlockerCertificate cert = steinhaus_converse(proj.set, eps, basis);
  cert.z = z;
  cert.window_lo = window_lo;
  cert.window_hi = window_hi;

  WindowSet b(window_lo, window_hi);
  if (cert.feasible) {
    const auto& q = g.moduli();
    std::vector<std::int64_t> res(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      std::int64_t r = (z + window_lo) % q[i];
      if (r < 0) r += q[i];
      res[i] = r;
    }
    for (std::int64_t n = window_lo; n <= window_hi; ++n) {
      std::int64_t idx = 0;
      for (std::size_t i = 0; i < q.size(); ++i) idx = idx * q[i] + res[i];
      if (cert.k.contains(idx)) b.insert(n);
      for (std::size_t i = 0; i < q.size(); ++i)
        if (++res[i] == q[i]) res[i] = 0;
    }
  }
  return BlockerResult{std::move(b), std::move(cert)};
}

WindowSet squares_set(std::int64_t lo, std::int64_t hi) {
  WindowSet s(lo, hi);
  for (std::int64_t n = 0; n * n <= hi; ++n)
    if (n * n >= lo) s.insert(n * n);
  return s;
}

WindowSet kth_powers_set(int k, std::int64_t lo, std::int64_t hi) {
  if (k < 1) throw std::invalid_argument("kth_powers_set: k >= 1 required");
  WindowSet s(lo, hi);
  for (std::int64_t n = 0;; ++n) {
    std::int64_t p = 1;
    bool over = false;
    for (int i = 0; i < k && !over; ++i) {
      if (n != 0 && p > hi / n) over = true;
      else p *= n;
    }
    if (over || p > hi) {
      if (n >= 2) break;  // 0^k and 1^k may exceed a small window; keep going
      continue;
    }
    if (p >= lo) s.insert(p);
  }
  return s;
}

namespace {

std::vector<bool> prime_sieve(std::int64_t hi) {
  std::vector<bool> is_prime(static_cast<std::size_t>(std::max<std::int64_t>(hi + 1, 2)), true);
  is_prime[0] = false;
  if (hi >= 1) is_prime[1] = false;
  for (std::int64_t p = 2; p * p <= hi; ++p)
    if (is_prime[static_cast<std::size_t>(p)])
      for (std::int64_t m = p * p; m <= hi; m += p)
        is_prime[static_cast<std::size_t>(m)] = false;
  return is_prime;
}

}  // namespace

WindowSet primes_set(std::int64_t lo, std::int64_t hi) {
  WindowSet s(lo, hi);
  if (hi < 2) return s;
  auto is_prime = prime_sieve(hi);
  for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n)
    if (is_prime[static_cast<std::size_t>(n)]) s.insert(n);
  return s;
}

WindowSet prime_powers_set(std::int64_t lo, std::int64_t hi) {
  WindowSet s(lo, hi);
  if (hi < 2) return s;
  auto is_prime = prime_sieve(hi);
  for (std::int64_t p = 2; p <= hi; ++p) {
    if (!is_prime[static_cast<std::size_t>(p)]) continue;
    for (std::int64_t v = p; v <= hi; ) {
      if (v >= lo) s.insert(v);
      if (v > hi / p) break;
      v *= p;
    }
  }
  return s;
}

WindowSet sums_two_squares_set(std::int64_t lo, std::int64_t hi) {
  WindowSet s(lo, hi);
  for (std::int64_t n = 1; n * n + 1 <= hi; ++n)
    for (std::int64_t m = n; n * n + m * m <= hi; ++m) {
      std::int64_t v = n * n + m * m;
      if (v >= lo) s.insert(v);
    }
  return s;
}

WindowSet squarefull_set(std::int64_t lo, std::int64_t hi) {
  // Every square-full number is a^2 b^3 and every a^2 b^3 is square-full.
  WindowSet s(lo, hi);
  for (std::int64_t b = 1; b * b * b <= hi; ++b) {
    std::int64_t b3 = b * b * b;
    for (std::int64_t a = 1; a * a <= hi / b3; ++a) {
      std::int64_t v = a * a * b3;
      if (v >= lo) s.insert(v);
    }
  }
  return s;
}

WindowSet sparse_digit_set(const std::vector<std::int64_t>& digits,
                           std::int64_t lo, std::int64_t hi) {
  if (digits.empty())
    throw std::invalid_argument("sparse_digit_set: empty digit list");
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] <= 0)
      throw std::invalid_argument("sparse_digit_set: digits must be positive");
    if (i > 0) {
      if (digits[i] % digits[i - 1] != 0)
        throw std::invalid_argument(
            "sparse_digit_set: each digit must divide the next");
      if (digits[i] < 3 * digits[i - 1])
        throw std::invalid_argument(
            "sparse_digit_set: successive ratio must be >= 3");
    }
  }
  WindowSet s(lo, hi);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t sum) -> void {
    if (sum >= lo && sum <= hi) s.insert(sum);
    for (std::size_t j = i; j < digits.size(); ++j) {
      if (digits[j] > hi - sum) break;  // digits ascend: later ones overflow too
      self(self, j + 1, sum + digits[j]);
    }
  };
  rec(rec, 0, 0);
  return s;
}

WindowSet example_set(const std::string& kind, std::int64_t lo,
                      std::int64_t hi) {
  auto colon = kind.find(':');
  std::string head = kind.substr(0, colon);
  if (head == "squares") return squares_set(lo, hi);
  if (head == "primes") return primes_set(lo, hi);
  if (head == "prime_powers") return prime_powers_set(lo, hi);
  if (head == "sums_two_squares") return sums_two_squares_set(lo, hi);
  if (head == "squarefull") return squarefull_set(lo, hi);
  if (head == "powers") {
    if (colon == std::string::npos)
      throw std::invalid_argument("powers kind needs :k");
    return kth_powers_set(std::stoi(kind.substr(colon + 1)), lo, hi);
  }
  if (head == "sparse_digit") {
    if (colon == std::string::npos)
      throw std::invalid_argument("sparse_digit kind needs :n1,n2,...");
    std::vector<std::int64_t> digits;
    std::string body = kind.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      digits.push_back(std::stoll(body.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return sparse_digit_set(digits, lo, hi);
  }
  throw std::invalid_argument("unknown example set kind: " + kind);
}

}  // namespace sumsets
