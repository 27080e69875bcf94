// windowset.hpp
// Finite-window integer-set arithmetic: bitset-backed sets over [lo,hi],
// exact density estimators, and the syndetic / thick / piecewise-syndetic
// classification scans.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumsets/numeric.hpp"

namespace sumsets {

// A finite-window view [lo,hi] of an integer set, one bit per integer.
// Equality compares window and membership only, never provenance.
class WindowSet {
 public:
  WindowSet() : lo_(0), hi_(0), words_(1, 0) {}
  WindowSet(std::int64_t lo, std::int64_t hi, std::string provenance = {});

  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  std::int64_t length() const { return hi_ - lo_ + 1; }
  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  bool in_window(std::int64_t n) const { return n >= lo_ && n <= hi_; }
  bool contains(std::int64_t n) const;
  void insert(std::int64_t n);
  void erase(std::int64_t n);

  std::int64_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::int64_t> elements() const;

  // Word-level access for the scan/sumset kernels.
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& mutable_words() { return words_; }
  // Clears bits past the last valid position (class invariant).
  void mask_tail();

  bool operator==(const WindowSet& o) const {
    return lo_ == o.lo_ && hi_ == o.hi_ && words_ == o.words_;
  }
  bool operator!=(const WindowSet& o) const { return !(*this == o); }

  static WindowSet from_elements(std::int64_t lo, std::int64_t hi,
                                 const std::vector<std::int64_t>& elems,
                                 std::string provenance = {});
  // Full window [lo,hi].
  static WindowSet full(std::int64_t lo, std::int64_t hi,
                        std::string provenance = {});

 private:
  std::int64_t lo_, hi_;
  std::vector<std::uint64_t> words_;
  std::string provenance_;
};

// ORs src bits, shifted by `shift` positions, into dst (clipped to dst).
// dst bit j receives src bit (j - shift).
void or_shifted(std::vector<std::uint64_t>& dst, std::int64_t dst_bits,
                const std::vector<std::uint64_t>& src, std::int64_t src_bits,
                std::int64_t shift);
// ANDs dst with src shifted by `shift` (bits outside src read as 0).
void and_shifted(std::vector<std::uint64_t>& dst, std::int64_t dst_bits,
                 const std::vector<std::uint64_t>& src, std::int64_t src_bits,
                 std::int64_t shift);

// Exact density value with the window that witnesses it.
struct DensityEstimate {
  Rational value;               // in [0,1], exact
  std::int64_t window_length;   // M (or N for prefix densities)
  std::int64_t witness_lo = 0;  // [witness_lo, witness_hi] achieves `value`
  std::int64_t witness_hi = 0;
};

enum class PwsVerdict { kPwsAtScale, kNotPwsAtScale };

struct PwsScanReport {
  std::int64_t shift_bound;      // L_max
  std::int64_t target_length;    // W
  std::int64_t window_lo, window_hi;
  PwsVerdict verdict;
  // Witness when pws_at_scale: F = {0..witness_L} and a covered interval.
  std::int64_t witness_L = -1;
  std::int64_t covered_lo = 0, covered_hi = 0;
  // Exhaustive-failure record: max run of S+{0..L} for each L <= L_max.
  std::vector<std::int64_t> max_run_per_L;
};

struct SyndeticReport {
  bool syndetic;       // every length-(L+1) subwindow meets S
  std::int64_t worst_gap;  // longest block of consecutive non-members
  std::int64_t gap_lo = 0, gap_hi = 0;  // location of the worst gap
};

// A+B = {a+b} clipped to out_window. Sums falling outside are dropped;
// size out_window as [A.lo+B.lo, A.hi+B.hi] for the untruncated sumset.
// Throws std::overflow_error if any a+b overflows int64.
WindowSet sumset(const WindowSet& a, const WindowSet& b, std::int64_t out_lo,
                 std::int64_t out_hi);

// Exact max over all length-M subwindows of the relative count.
DensityEstimate banach_density_estimate(const WindowSet& s, std::int64_t m);

// Exact max over prefixes [1,n], n <= N (window must contain [1,N]).
DensityEstimate upper_density_estimate(const WindowSet& s, std::int64_t n_max);

std::int64_t longest_run(const WindowSet& s);
// Longest run location too.
std::int64_t longest_run(const WindowSet& s, std::int64_t* run_lo);

SyndeticReport syndetic_at_scale(const WindowSet& s, std::int64_t l);

// Tests exactly the canonical families F_L = {0..L} for L = 0..L_max; this
// dominates every F contained in {0..L} up to shift, so the verdict equals
// the exhaustive answer over all such families.
PwsScanReport piecewise_syndetic_scan(const WindowSet& s, std::int64_t l_max,
                                      std::int64_t w);

// Intersection of the k+1 translates S - l*d over the window shrunk by k*d.
WindowSet ap_intersection(const WindowSet& s, std::int64_t k, std::int64_t d);
DensityEstimate ap_intersection_density(const WindowSet& s, std::int64_t k,
                                        std::int64_t d, std::int64_t m);

}  // namespace sumsets
