#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cubiccert/scalar.hpp"

namespace cubiccert {

/// Exponent vector, one entry per variable slot.
using Monomial = std::vector<unsigned>;

unsigned monomial_degree(const Monomial& m);

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken by the first differing exponent (x0 > x1 > ...).
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial in a fixed number of variables over a Domain. Zero
/// coefficients are never stored, so equality is equality of term maps.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, GrlexDescending>;

  Polynomial() = default;
  Polynomial(std::size_t arity, Domain domain) : arity_(arity), domain_(domain) {}

  static Polynomial constant(std::size_t arity, const Scalar& c);
  static Polynomial variable(std::size_t arity, Domain domain, std::size_t index);
  static Polynomial term(std::size_t arity, const Scalar& c, Monomial exponents);

  std::size_t arity() const { return arity_; }
  Domain domain() const { return domain_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of a monomial, zero when absent.
  Scalar coefficient(const Monomial& m) const;
  /// Adds c * m, removing the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  /// Highest exponent of variable i (0 for the zero polynomial).
  unsigned degree_in(std::size_t i) const;
  /// Variable slots that occur with positive exponent.
  std::vector<std::size_t> used_variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);
  Polynomial pow(unsigned e) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Coefficient-wise reduction to GF(p). Throws BadPrime if p divides a denominator.
  Polynomial reduce_mod(std::uint64_t p) const;

  /// Moves variable i to slot mapping[i] in a ring of `new_arity` variables.
  Polynomial embed(std::size_t new_arity, std::span<const std::size_t> mapping) const;

  /// Canonical text, e.g. "x0^3 - 3/2*x1^2*x2 + x3*x4*x5". Accepted by parse_form.
  std::string to_string() const;

 private:
  void require_compatible(const Polynomial& other) const;

  std::size_t arity_ = 0;
  Domain domain_;
  TermMap terms_;
};

/// Evaluates `target` at the polynomial images of its variables.
Polynomial substitute(const Polynomial& target, std::span<const Polynomial> images);

Polynomial partial_derivative(const Polynomial& f, std::size_t i);

Scalar evaluate(const Polynomial& f, std::span<const Scalar> point);

/// Fast GF(p) evaluation at residues; f must already be over GF(p).
std::uint64_t evaluate_mod(const Polynomial& f, std::span<const std::uint64_t> point);

/// Least common multiple of the coefficient denominators (1 over GF(p)).
mpz_class denominator_lcm(const Polynomial& f);

}  // namespace cubiccert
