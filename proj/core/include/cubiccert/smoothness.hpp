#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cubiccert/cubic_form.hpp"

namespace cubiccert {

enum class Smoothness { Smooth, Singular };

/// The reduction at p has no Jacobian zero in projective space over GF(p) and
/// p divides neither the coefficient denominators nor the block invariant.
struct GoodReductionPrime {
  std::uint64_t p = 0;
};

/// An explicit rational point where every partial derivative vanishes.
struct SingularPoint {
  std::vector<mpq_class> coords;
  Domain field;
};

struct ResultantZero {
  std::string provenance;
};

using SmoothnessWitness = std::variant<GoodReductionPrime, SingularPoint, ResultantZero>;

/// Exhaustive search for a common zero of all partials over P^{n-1}(GF(p)).
struct JacobianScreen {
  std::uint64_t prime = 0;
  bool ran = false;
  bool found_zero = false;
  std::uint64_t points_checked = 0;
};

struct SmoothnessVerdict {
  Smoothness verdict = Smoothness::Smooth;
  SmoothnessWitness witness;
  /// Index of the block that made a whole form singular.
  std::optional<std::size_t> block;
  /// False when the verdict rests only on a rational-point screen (blocks wider than 3 variables).
  bool exact = true;
  /// Independent whole-form screen; the outcome must agree with the verdict.
  std::optional<JacobianScreen> whole_form_screen;

  bool is_smooth() const { return verdict == Smoothness::Smooth; }
};

/// Discriminant 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2 of a u^3 + b u^2 v + c u v^2 + d v^3.
mpq_class binary_cubic_discriminant(const CubicForm& binary);

/// First `count` primes p = 1 (mod 3), p > 5, that do not divide `avoid`.
std::vector<std::uint64_t> screening_primes(const mpz_class& avoid, std::size_t count = 10);

/// Next prime q > after with q = 1 (mod 3).
std::uint64_t next_prime_1_mod_3(std::uint64_t after);

/// Exhaustive Jacobian-zero search for f reduced mod p; stops at the first zero.
JacobianScreen screen_jacobian(const Polynomial& f, std::uint64_t p,
                               std::optional<std::vector<std::uint64_t>>* zero = nullptr);

/// True when every partial derivative of f vanishes at the point.
bool jacobian_vanishes_at(const Polynomial& f, std::span<const mpq_class> point);

/// Blocks of 1 to 3 variables. Throws TooManyVariables beyond that.
SmoothnessVerdict block_smoothness(const CubicForm& block);

/// Smooth iff every block is; cross-checked by a whole-form mod-p screen when it is small enough.
SmoothnessVerdict form_smoothness(const CubicForm& f, const BlockDecomposition& d);

std::string describe(const SmoothnessVerdict& v);

}  // namespace cubiccert
