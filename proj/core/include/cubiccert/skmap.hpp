#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "cubiccert/cubic_form.hpp"
#include "cubiccert/smoothness.hpp"

namespace cubiccert {

/// The degree-3 correspondence from {f(x) + x0^3 = 0} x {g(y) + y0^3 = 0}
/// onto {f(z') - g(z'') = 0}, sending (x, y) to (x1/x0, ..., y1/y0, ...).
struct SKMapSpec {
  CubicForm f;
  CubicForm g;
  unsigned degree = 3;
  /// f(x1..xn) + x0^3 in n+1 variables, x0 at slot 0.
  Polynomial source_f;
  /// g(y1..ym) + y0^3 in m+1 variables, y0 at slot 0.
  Polynomial source_g;
  /// f(z0..z_{n-1}) - g(z_n..z_{n+m-1}).
  Polynomial target;
  SmoothnessVerdict f_smoothness;
  SmoothnessVerdict g_smoothness;

  std::size_t n() const { return f.nvars(); }
  std::size_t m() const { return g.nvars(); }
};

/// Throws SingularInput when f or g is singular.
SKMapSpec build_sk_map(const CubicForm& f, const CubicForm& g);

/// All three polynomials live in n+m+2 variables ordered x0, x1..xn, y0, y1..ym.
struct SKIdentityReport {
  bool holds = false;
  /// y0^3 f(x) - x0^3 g(y)
  Polynomial lhs;
  /// y0^3 (f(x) + x0^3) - x0^3 (g(y) + y0^3)
  Polynomial via_sources;
  /// target(x1 y0, ..., xn y0, y1 x0, ..., ym x0)
  Polynomial via_pullback;
};

SKIdentityReport verify_sk_identity(const SKMapSpec& s);

/// A projective point z of the target over GF(p) with f(z') != 0, normalized so
/// the first nonzero coordinate is 1. Deterministic in the seed.
/// Throws BadPrime (p < 5 or p divides a denominator) or ExhaustedSearch.
std::vector<std::uint64_t> sample_target_point(const SKMapSpec& s, std::uint64_t p, std::uint64_t seed);

/// Number of lambda in GF(p)* with lambda^3 f(z') = -1, i.e. the number of
/// GF(p)-points over z. Throws PreconditionViolated unless z is on the target with f(z') != 0.
std::uint64_t fiber_count(const SKMapSpec& s, std::uint64_t p, const std::vector<std::uint64_t>& z);

struct FiberReport {
  std::uint64_t prime = 0;
  std::uint64_t samples = 0;
  /// fiber size -> number of samples
  std::map<std::uint64_t, std::uint64_t> histogram;
  mpq_class mean;
};

/// Sample k uses seed splitmix64(seed + k). Throws PreconditionViolated for n_samples = 0.
FiberReport fiber_statistics(const SKMapSpec& s, std::uint64_t p, std::uint64_t n_samples, std::uint64_t seed);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace cubiccert
