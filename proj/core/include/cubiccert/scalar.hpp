#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace cubiccert {

/// Coefficient domain: the rationals (characteristic 0) or GF(p).
class Domain {
 public:
  constexpr Domain() = default;

  static constexpr Domain rationals() { return Domain{}; }
  /// Throws InvalidPrime unless p is a prime below 2^31.
  static Domain prime_field(std::uint64_t p);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr std::uint64_t characteristic() const { return p_; }

  std::string to_string() const;

  friend constexpr bool operator==(Domain, Domain) = default;

 private:
  explicit constexpr Domain(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact element of a Domain. Rationals are kept in lowest terms with a
/// positive denominator; residues live in [0, p).
class Scalar {
 public:
  Scalar() : Scalar(Domain::rationals(), 0) {}
  Scalar(Domain domain, long value);
  Scalar(Domain domain, const mpz_class& value);
  /// Reduces q modulo p for prime fields; throws BadPrime when p divides the denominator.
  Scalar(Domain domain, const mpq_class& value);

  static Scalar rational(const mpq_class& q) { return Scalar(Domain::rationals(), q); }
  static Scalar residue(std::uint64_t p, std::uint64_t r);

  Domain domain() const { return domain_; }
  bool is_zero() const;
  bool is_one() const;

  /// Valid only for rational scalars.
  const mpq_class& as_rational() const;
  /// Valid only for prime-field scalars.
  std::uint64_t as_residue() const;

  Scalar reduce_mod(std::uint64_t p) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  /// Throws ZeroInput on division by zero.
  Scalar& operator/=(const Scalar& other);
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  void require_same_domain(const Scalar& other) const;

  Domain domain_;
  std::variant<mpq_class, std::uint64_t> value_;
};

namespace modp {

inline std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + b) % p; }
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b) % p; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// Throws ZeroInput for a == 0.
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
/// Reduces a rational modulo p; throws BadPrime when p divides the denominator.
std::uint64_t from_rational(const mpq_class& q, std::uint64_t p);

}  // namespace modp

}  // namespace cubiccert
