#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "cubiccert/polynomial.hpp"

namespace cubiccert {

/// Determinant of the Sylvester matrix of f and g viewed as polynomials in
/// variable `elim` with coefficients in the remaining variables. The result
/// keeps the input arity and does not involve `elim`.
Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::size_t elim);

using IntMatrix3 = std::array<std::array<long, 3>, 3>;

struct MacaulayResult {
  Scalar value;
  /// Number of extra attempts needed because the extraneous minor vanished.
  unsigned retries = 0;
  /// Unimodular substitution x -> A x applied before the successful attempt.
  std::optional<IntMatrix3> change_of_variables;
  /// The quadrics are linearly dependent, so they share a zero and the value is 0 without a matrix.
  bool dependent = false;

  std::string provenance() const;
};

/// Macaulay resultant of three ternary quadrics over QQ: det of the 15x15
/// degree-4 matrix divided by its extraneous 3x3 minor. Zero iff the quadrics
/// share a projective zero over the algebraic closure.
MacaulayResult macaulay_resultant_q3(const Polynomial& q1, const Polynomial& q2, const Polynomial& q3,
                                     std::uint64_t seed = 0);

/// Monic gcd over QQ of two univariate polynomials, or of two binary forms
/// (handled by dehomogenizing and restoring the common power of the second variable).
Polynomial univariate_gcd(const Polynomial& f, const Polynomial& g);

}  // namespace cubiccert
