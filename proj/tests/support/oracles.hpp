#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cubiccert/polynomial.hpp"

namespace cubiccert::testing {

// Test-side oracle: brute-force common projective zero of three ternary
// quadrics over GF(p), using only coefficient reduction and direct evaluation.
inline bool common_zero_mod(const std::array<Polynomial, 3>& qs, std::uint64_t p) {
  std::array<std::vector<std::pair<Monomial, std::uint64_t>>, 3> reduced;
  for (int i = 0; i < 3; ++i) {
    for (const auto& [m, c] : qs[i].terms()) {
      const mpq_class& q = c.as_rational();
      mpz_class num = q.get_num() % static_cast<long>(p);
      if (num < 0) num += static_cast<long>(p);
      mpz_class den_inv;
      mpz_class den = q.get_den();
      mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mpz_class(static_cast<long>(p)).get_mpz_t());
      mpz_class r = (num * den_inv) % static_cast<long>(p);
      reduced[i].emplace_back(m, r.get_ui());
    }
  }
  auto eval = [&](int i, std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    std::uint64_t s = 0;
    const std::uint64_t v[3] = {x, y, z};
    for (const auto& [m, c] : reduced[i]) {
      std::uint64_t t = c;
      for (int k = 0; k < 3; ++k) {
        for (unsigned e = 0; e < m[k]; ++e) t = t * v[k] % p;
      }
      s = (s + t) % p;
    }
    return s;
  };
  auto all_zero = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    return eval(0, x, y, z) == 0 && eval(1, x, y, z) == 0 && eval(2, x, y, z) == 0;
  };
  if (all_zero(0, 0, 1)) return true;
  for (std::uint64_t z = 0; z < p; ++z) {
    if (all_zero(0, 1, z)) return true;
  }
  for (std::uint64_t y = 0; y < p; ++y) {
    for (std::uint64_t z = 0; z < p; ++z) {
      if (all_zero(1, y, z)) return true;
    }
  }
  return false;
}

inline bool p_divides(const Scalar& s, std::uint64_t p) {
  return s.is_zero() || s.as_rational().get_num() % static_cast<unsigned long>(p) == 0;
}

inline bool p_divides_denominators(const std::array<Polynomial, 3>& qs, std::uint64_t p) {
  for (const auto& q : qs) {
    if (denominator_lcm(q) % static_cast<unsigned long>(p) == 0) return true;
  }
  return false;
}

}  // namespace cubiccert::testing
