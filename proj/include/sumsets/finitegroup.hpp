// finitegroup.hpp
// Exact arithmetic on finite abelian groups Z/q1 x ... x Z/qk: normalized
// convolution (direct and packed big-integer routes), the convolution
// support/sup/mean bounds, coset-based blocker certificates, and the
// standard example sets (squares, primes, square-full numbers, ...).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumsets/numeric.hpp"
#include "sumsets/windowset.hpp"

namespace sumsets {

// Product of cyclic groups; elements are flat mixed-radix indices with the
// residue tuple recoverable via tuple_of. Order is capped (default 2^21
// elements) because subsets are materialized as bitsets.
class FiniteAbelianGroup {
 public:
  static constexpr std::int64_t kDefaultOrderCap = std::int64_t(1) << 21;

  explicit FiniteAbelianGroup(std::vector<std::int64_t> moduli,
                              std::int64_t order_cap = kDefaultOrderCap);
  // "cyclic:N" or "product:q1,q2,...".
  static FiniteAbelianGroup parse(const std::string& spec,
                                  std::int64_t order_cap = kDefaultOrderCap);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::int64_t order() const { return order_; }
  std::size_t rank() const { return moduli_.size(); }
  std::string spec_string() const;

  std::int64_t index_of(const std::vector<std::int64_t>& tuple) const;
  std::vector<std::int64_t> tuple_of(std::int64_t index) const;
  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const {
    return add(a, neg(b));
  }
  // Index of the residue tuple (n mod q1, ..., n mod qk); n may be negative.
  std::int64_t residue_of_integer(std::int64_t n) const;

  bool operator==(const FiniteAbelianGroup& other) const {
    return moduli_ == other.moduli_;
  }

 private:
  std::vector<std::int64_t> moduli_;
  std::int64_t order_;
};

class GroupSubset {
 public:
  explicit GroupSubset(FiniteAbelianGroup group);

  const FiniteAbelianGroup& group() const { return group_; }
  bool contains(std::int64_t index) const {
    return bits_[static_cast<std::size_t>(index)];
  }
  void insert(std::int64_t index);
  void erase(std::int64_t index);
  std::int64_t size() const { return count_; }
  Rational measure() const { return Rational(count_, group_.order()); }
  std::vector<std::int64_t> elements() const;

  GroupSubset complement() const;
  static GroupSubset full(const FiniteAbelianGroup& g);

  bool operator==(const GroupSubset& other) const {
    return group_ == other.group_ && bits_ == other.bits_;
  }

 private:
  FiniteAbelianGroup group_;
  std::vector<bool> bits_;
  std::int64_t count_ = 0;
};

// {a + b : a in A, b in B}, exact enumeration.
GroupSubset group_sumset(const GroupSubset& a, const GroupSubset& b);
// {a - b : a in A, b in B}.
GroupSubset group_difference(const GroupSubset& a, const GroupSubset& b);

// Values are rationals; check_unit_range enforces 0 <= f <= 1 (required by
// the convolution bound ops, optional for general use).
class GroupFunction {
 public:
  GroupFunction(FiniteAbelianGroup group, std::vector<Rational> values,
                bool check_unit_range = true);
  static GroupFunction indicator(const GroupSubset& s);
  static GroupFunction constant(const FiniteAbelianGroup& g, const Rational& c);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(std::int64_t index) const {
    return values_[static_cast<std::size_t>(index)];
  }

  Rational mean() const;                 // (1/|G|) sum of values
  Rational sup() const;                  // max value
  Rational support_measure() const;      // |{t : f(t) != 0}| / |G|
  GroupFunction shifted(std::int64_t a) const;  // t -> f(t - a)

 private:
  FiniteAbelianGroup group_;
  std::vector<Rational> values_;
};

// f*g(t) = (1/|G|) sum_z f(z) g(t-z), exact. `convolve` is the direct
// reference loop; `convolve_packed` evaluates the same formula by packing
// scaled integer coefficients into one big-integer product (Kronecker
// substitution with per-axis padded strides, folded back mod q_i) and must
// agree exactly.
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);
GroupFunction convolve_packed(const GroupFunction& f, const GroupFunction& g);

struct SteinhausReport {
  Rational mean_f, mean_g;
  Rational support_measure;   // of f*g
  Rational sup_value;         // of f*g
  Rational mean_conv;         // mean of f*g
  bool support_ok;            // support_measure >= max(mean_f, mean_g)
  bool sup_ok;                // sup_value <= min(mean_f, mean_g)
  bool mean_ok;               // mean_conv == mean_f * mean_g
  bool all_ok;
};

// All three convolution bounds, each checked exactly; zero-mean inputs are
// rejected.
SteinhausReport steinhaus_check(const GroupFunction& f, const GroupFunction& g);

struct Projection {
  GroupSubset set;
  std::int64_t scan_lo, scan_hi;  // integer range whose residues were taken
};

// Residues of A (restricted to its window) in G.
Projection project_set(const WindowSet& a, const FiniteAbelianGroup& g);

// Subgroup H = {x : step_i divides x_i}; step_i | q_i; index = prod step_i.
// For pairwise coprime moduli this family is the complete subgroup lattice.
struct Subgroup {
  std::vector<std::int64_t> step;
  std::int64_t index;
};

struct Coset {
  Subgroup sub;
  std::vector<std::int64_t> rep;  // rep_i in [0, step_i)
};

// All product-form subgroups with index <= max_index, ordered by
// (index, lexicographic step vector).
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g,
                                          std::int64_t max_index);

// Number of distinct residue classes of E in G/H.
std::int64_t projected_class_count(const GroupSubset& e, const Subgroup& h);

struct SelectedCoset {
  Coset coset;
  std::int64_t projected_classes;  // |pi_H(E)|
  Rational cost;                   // m(V - E) = projected_classes / index
};

struct BlockerCertificate {
  std::string group_spec;
  GroupSubset e;
  std::vector<SelectedCoset> cosets;
  GroupSubset k;             // complement of union(V_n - E)
  Rational k_measure;
  Rational mass_used;        // sum of coset costs, < eps
  Rational eps;
  bool feasible;
  Rational min_achievable;   // smallest single-coset cost when infeasible
  // Generator data for B = {n in window : (z + n) mod G in K}.
  std::int64_t z = 0;
  std::int64_t window_lo = 0, window_hi = -1;
};

// Greedy first-fit over the basis in index order: a subgroup's coset
// (representative 0 -- cost is shift-invariant) is taken whenever its cost
// keeps the running mass strictly below eps. K is the complement of the
// union of V - E over the selections.
BlockerCertificate steinhaus_converse(const GroupSubset& e, const Rational& eps,
                                      const std::vector<Subgroup>& basis);

struct CertificateReplay {
  bool cosets_disjoint;      // (E + K) meets no selected coset, direct loop
  bool measure_ok;           // m(K) >= 1 - sum m(V_n - E)
  bool empty_interior_ok;    // every covered subgroup has a missed coset
  bool budget_ok;            // mass_used < eps
  bool all_ok;
};

// Independent re-verification of a certificate (direct loops, no reuse of
// the construction-time bookkeeping).
CertificateReplay replay_certificate(const BlockerCertificate& cert);

struct BlockerResult {
  WindowSet b;
  BlockerCertificate cert;
};

// B = {n in [window_lo, window_hi] : (z + n) mod G in K} for the K built by
// steinhaus_converse on the projection of A.
BlockerResult build_blocker(const WindowSet& a, const FiniteAbelianGroup& g,
                            const Rational& eps, std::int64_t z,
                            std::int64_t window_lo, std::int64_t window_hi,
                            std::int64_t max_subgroup_index = 0);  // 0 = |G|

// Example integer sets, exact within [lo, hi].
WindowSet squares_set(std::int64_t lo, std::int64_t hi);
WindowSet kth_powers_set(int k, std::int64_t lo, std::int64_t hi);
WindowSet primes_set(std::int64_t lo, std::int64_t hi);
WindowSet prime_powers_set(std::int64_t lo, std::int64_t hi);
WindowSet sums_two_squares_set(std::int64_t lo, std::int64_t hi);  // n, m >= 1
WindowSet squarefull_set(std::int64_t lo, std::int64_t hi);
// Subset sums of (n_i); requires n_i | n_{i+1} and n_{i+1}/n_i >= 3.
WindowSet sparse_digit_set(const std::vector<std::int64_t>& digits,
                           std::int64_t lo, std::int64_t hi);

// Dispatcher for the kind mini-language: "squares", "powers:k", "primes",
// "prime_powers", "sums_two_squares", "squarefull", "sparse_digit:1,3,9".
WindowSet example_set(const std::string& kind, std::int64_t lo,
                      std::int64_t hi);

}  // namespace sumsets
