#include "sumsets/windowset.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace sumsets {

namespace {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::uint64_t fetch(const std::vector<std::uint64_t>& words,
                           std::int64_t idx) {
  if (idx < 0 || idx >= static_cast<std::int64_t>(words.size())) return 0;
  return words[static_cast<std::size_t>(idx)];
}

// src bits shifted by `shift`, evaluated at dst word j.
inline std::uint64_t shifted_word(const std::vector<std::uint64_t>& src,
                                  std::int64_t j, std::int64_t shift) {
  std::int64_t s = 64 * j - shift;
  std::int64_t q = floor_div(s, 64);
  int r = static_cast<int>(s - 64 * q);
  std::uint64_t val = fetch(src, q) >> r;
  if (r != 0) val |= fetch(src, q + 1) << (64 - r);
  return val;
}

}  // namespace

WindowSet::WindowSet(std::int64_t lo, std::int64_t hi, std::string provenance)
    : lo_(lo), hi_(hi), provenance_(std::move(provenance)) {
  if (hi < lo) throw std::invalid_argument("WindowSet: hi < lo");
  words_.assign(static_cast<std::size_t>((length() + 63) / 64), 0);
}

bool WindowSet::contains(std::int64_t n) const {
  if (!in_window(n)) return false;
  std::uint64_t i = static_cast<std::uint64_t>(n - lo_);
  return (words_[i >> 6] >> (i & 63)) & 1u;
}

void WindowSet::insert(std::int64_t n) {
  if (!in_window(n)) throw std::out_of_range("WindowSet::insert out of window");
  std::uint64_t i = static_cast<std::uint64_t>(n - lo_);
  words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
}

void WindowSet::erase(std::int64_t n) {
  if (!in_window(n)) return;
  std::uint64_t i = static_cast<std::uint64_t>(n - lo_);
  words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

std::int64_t WindowSet::count() const {
  std::int64_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::vector<std::int64_t> WindowSet::elements() const {
  std::vector<std::int64_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(lo_ + static_cast<std::int64_t>(wi) * 64 + b);
      w &= w - 1;
    }
  }
  return out;
}

void WindowSet::mask_tail() {
  int rem = static_cast<int>(length() & 63);
  if (rem != 0 && !words_.empty()) {
    words_.back() &= (~std::uint64_t{0}) >> (64 - rem);
  }
}

WindowSet WindowSet::from_elements(std::int64_t lo, std::int64_t hi,
                                   const std::vector<std::int64_t>& elems,
                                   std::string provenance) {
  WindowSet s(lo, hi, std::move(provenance));
  for (std::int64_t n : elems) {
    if (s.in_window(n)) s.insert(n);
  }
  return s;
}

WindowSet WindowSet::full(std::int64_t lo, std::int64_t hi,
                          std::string provenance) {
  WindowSet s(lo, hi, std::move(provenance));
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.mask_tail();
  return s;
}

void or_shifted(std::vector<std::uint64_t>& dst, std::int64_t dst_bits,
                const std::vector<std::uint64_t>& src, std::int64_t /*src_bits*/,
                std::int64_t shift) {
  std::int64_t nwords = (dst_bits + 63) / 64;
  for (std::int64_t j = 0; j < nwords; ++j) {
    dst[static_cast<std::size_t>(j)] |= shifted_word(src, j, shift);
  }
  int rem = static_cast<int>(dst_bits & 63);
  if (rem != 0) dst[static_cast<std::size_t>(nwords - 1)] &=
      (~std::uint64_t{0}) >> (64 - rem);
}

void and_shifted(std::vector<std::uint64_t>& dst, std::int64_t dst_bits,
                 const std::vector<std::uint64_t>& src, std::int64_t /*src_bits*/,
                 std::int64_t shift) {
  std::int64_t nwords = (dst_bits + 63) / 64;
  for (std::int64_t j = 0; j < nwords; ++j) {
    dst[static_cast<std::size_t>(j)] &= shifted_word(src, j, shift);
  }
}

WindowSet sumset(const WindowSet& a, const WindowSet& b, std::int64_t out_lo,
                 std::int64_t out_hi) {
  if (out_hi < out_lo) throw std::invalid_argument("sumset: empty out_window");
  WindowSet out(out_lo, out_hi,
                "(" + a.provenance() + ")+(" + b.provenance() + ")");
  std::int64_t result_bits = out.length();
  for (std::int64_t av : a.elements()) {
    std::int64_t probe;
    if (__builtin_add_overflow(av, b.hi(), &probe)) {
      throw std::overflow_error("sumset: a+b overflows int64");
    }
    // dst bit j holds integer out_lo + j; src bit i holds integer b.lo + i.
    // a + (b.lo + i) = out_lo + j  =>  j = i + (a + b.lo - out_lo).
    std::int64_t shift = av + b.lo() - out_lo;
    or_shifted(out.mutable_words(), result_bits, b.words(), b.length(), shift);
  }
  return out;
}

DensityEstimate banach_density_estimate(const WindowSet& s, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("banach_density_estimate: M <= 0");
  if (m > s.length())
    throw std::invalid_argument("banach_density_estimate: M > window length");
  // Initial window [lo, lo+m-1], then slide by one.
  std::int64_t cnt = 0;
  for (std::int64_t n = s.lo(); n < s.lo() + m; ++n) cnt += s.contains(n);
  std::int64_t best = cnt, best_lo = s.lo();
  for (std::int64_t p = s.lo() + 1; p + m - 1 <= s.hi(); ++p) {
    cnt += s.contains(p + m - 1);
    cnt -= s.contains(p - 1);
    if (cnt > best) {
      best = cnt;
      best_lo = p;
    }
  }
  DensityEstimate e;
  e.value = Rational(best, m);
  e.window_length = m;
  e.witness_lo = best_lo;
  e.witness_hi = best_lo + m - 1;
  return e;
}

DensityEstimate upper_density_estimate(const WindowSet& s, std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("upper_density_estimate: N < 1");
  if (!s.in_window(1) || !s.in_window(n_max))
    throw std::invalid_argument("upper_density_estimate: [1,N] not in window");
  std::int64_t cnt = 0;
  Rational best = 0;
  std::int64_t best_n = 1;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    cnt += s.contains(n);
    Rational v(cnt, n);
    if (v > best) {
      best = v;
      best_n = n;
    }
  }
  DensityEstimate e;
  e.value = best;
  e.window_length = best_n;
  e.witness_lo = 1;
  e.witness_hi = best_n;
  return e;
}

std::int64_t longest_run(const WindowSet& s, std::int64_t* run_lo) {
  std::int64_t best = 0, best_lo = s.lo();
  std::int64_t cur = 0, cur_lo = s.lo();
  const auto& words = s.words();
  std::int64_t len = s.length();
  for (std::int64_t i = 0; i < len;) {
    std::uint64_t w = words[static_cast<std::size_t>(i >> 6)];
    if ((i & 63) == 0 && i + 64 <= len && w == ~std::uint64_t{0}) {
      if (cur == 0) cur_lo = s.lo() + i;
      cur += 64;
      i += 64;
      continue;
    }
    if ((i & 63) == 0 && i + 64 <= len && w == 0 && cur == 0) {
      i += 64;
      continue;
    }
    bool bit = (w >> (i & 63)) & 1u;
    if (bit) {
      if (cur == 0) cur_lo = s.lo() + i;
      ++cur;
    } else {
      if (cur > best) {
        best = cur;
        best_lo = cur_lo;
      }
      cur = 0;
    }
    ++i;
  }
  if (cur > best) {
    best = cur;
    best_lo = cur_lo;
  }
  if (run_lo) *run_lo = best_lo;
  return best;
}

std::int64_t longest_run(const WindowSet& s) { return longest_run(s, nullptr); }

SyndeticReport syndetic_at_scale(const WindowSet& s, std::int64_t l) {
  // Worst gap = longest block of consecutive non-members (edges included).
  SyndeticReport r;
  std::int64_t worst = 0, worst_lo = 0, worst_hi = 0;
  std::int64_t cur = 0, cur_lo = s.lo();
  for (std::int64_t n = s.lo(); n <= s.hi(); ++n) {
    if (!s.contains(n)) {
      if (cur == 0) cur_lo = n;
      ++cur;
      if (cur > worst) {
        worst = cur;
        worst_lo = cur_lo;
        worst_hi = n;
      }
    } else {
      cur = 0;
    }
  }
  r.worst_gap = worst;
  r.gap_lo = worst_lo;
  r.gap_hi = worst_hi;
  r.syndetic = worst <= l;
  return r;
}

PwsScanReport piecewise_syndetic_scan(const WindowSet& s, std::int64_t l_max,
                                      std::int64_t w) {
  if (w > s.length())
    throw std::invalid_argument("piecewise_syndetic_scan: W > window length");
  PwsScanReport rep;
  rep.shift_bound = l_max;
  rep.target_length = w;
  rep.window_lo = s.lo();
  rep.window_hi = s.hi();
  rep.verdict = PwsVerdict::kNotPwsAtScale;

  std::vector<std::int64_t> elems = s.elements();
  for (std::int64_t l = 0; l <= l_max; ++l) {
    // S + {0..L} is the union of [e, e+L]; chains with successive gaps
    // <= L+1 merge into runs.
    std::int64_t best = 0, best_start = 0;
    if (!elems.empty()) {
      std::int64_t chain_start = elems[0];
      std::int64_t prev = elems[0];
      auto flush = [&](std::int64_t last) {
        std::int64_t end = std::min(last + l, s.hi());
        std::int64_t run = end - chain_start + 1;
        if (run > best) {
          best = run;
          best_start = chain_start;
        }
      };
      for (std::size_t i = 1; i < elems.size(); ++i) {
        if (elems[i] - prev > l + 1) {
          flush(prev);
          chain_start = elems[i];
        }
        prev = elems[i];
      }
      flush(prev);
    }
    rep.max_run_per_L.push_back(best);
    if (best >= w && rep.verdict == PwsVerdict::kNotPwsAtScale) {
      rep.verdict = PwsVerdict::kPwsAtScale;
      rep.witness_L = l;
      rep.covered_lo = best_start;
      rep.covered_hi = best_start + w - 1;
      // Keep filling max_run_per_L for the full record.
    }
  }
  return rep;
}

WindowSet ap_intersection(const WindowSet& s, std::int64_t k, std::int64_t d) {
  if (k < 0 || d <= 0)
    throw std::invalid_argument("ap_intersection: need k >= 0, d > 0");
  std::int64_t new_hi = s.hi() - k * d;
  if (new_hi < s.lo())
    throw std::invalid_argument("ap_intersection: window shrinks to empty");
  WindowSet out = WindowSet::full(s.lo(), new_hi, s.provenance() + " ap-core");
  for (std::int64_t l = 0; l <= k; ++l) {
    // out bit j (= integer lo+j) needs s bit at integer lo+j+l*d.
    and_shifted(out.mutable_words(), out.length(), s.words(), s.length(),
                -l * d);
  }
  out.mask_tail();
  return out;
}

DensityEstimate ap_intersection_density(const WindowSet& s, std::int64_t k,
                                        std::int64_t d, std::int64_t m) {
  WindowSet core = ap_intersection(s, k, d);
  return banach_density_estimate(core, std::min<std::int64_t>(m, core.length()));
}

}  // namespace sumsets
