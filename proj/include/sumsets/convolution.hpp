// convolution.hpp
// One cyclic-convolution kernel shared by the finite-group module (exact
// rationals) and the discretized-torus grid path (complex doubles). The
// group is a product of cyclic factors; indices are mixed-radix row-major.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sumsets {

inline std::int64_t mixed_radix_order(const std::vector<std::int64_t>& moduli) {
  std::int64_t order = 1;
  for (std::int64_t q : moduli) {
    if (q <= 0) throw std::invalid_argument("modulus must be positive");
    order *= q;
  }
  return order;
}

// h[t] = sum_z f[z] * g[t - z], indices in the product group. The caller
// divides by the order for the normalized Haar convolution.
template <typename T>
std::vector<T> cyclic_convolve_raw(const std::vector<std::int64_t>& moduli,
                                   const std::vector<T>& f,
                                   const std::vector<T>& g) {
  std::int64_t order = mixed_radix_order(moduli);
  if (static_cast<std::int64_t>(f.size()) != order ||
      static_cast<std::int64_t>(g.size()) != order)
    throw std::invalid_argument("cyclic_convolve: size mismatch");
  const std::size_t k = moduli.size();
  std::vector<std::int64_t> zt(k), tt(k), dt(k);
  std::vector<T> h(static_cast<std::size_t>(order), T{});

  auto decode = [&](std::int64_t idx, std::vector<std::int64_t>& out) {
    for (std::size_t i = k; i-- > 0;) {
      out[i] = idx % moduli[i];
      idx /= moduli[i];
    }
  };
  auto encode = [&](const std::vector<std::int64_t>& v) {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * moduli[i] + v[i];
    return idx;
  };

  for (std::int64_t t = 0; t < order; ++t) {
    decode(t, tt);
    T acc{};
    for (std::int64_t z = 0; z < order; ++z) {
      decode(z, zt);
      for (std::size_t i = 0; i < k; ++i) {
        dt[i] = tt[i] - zt[i];
        if (dt[i] < 0) dt[i] += moduli[i];
      }
      acc += f[static_cast<std::size_t>(z)] *
             g[static_cast<std::size_t>(encode(dt))];
    }
    h[static_cast<std::size_t>(t)] = acc;
  }
  return h;
}

}  // namespace sumsets
