#include "cubiccert/scalar.hpp"

#include <ostream>

#include "cubiccert/errors.hpp"

namespace cubiccert {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotQuadric: return "NotQuadric";
    case ErrorCode::NotTernary: return "NotTernary";
    case ErrorCode::DivisionDegenerate: return "DivisionDegenerate";
    case ErrorCode::NotUnivariate: return "NotUnivariate";
    case ErrorCode::InvalidPrime: return "InvalidPrime";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotHomogeneousDegree3: return "NotHomogeneousDegree3";
    case ErrorCode::UnusedVariableSlot: return "UnusedVariableSlot";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::Undecided: return "Undecided";
    case ErrorCode::BlockTooLarge: return "BlockTooLarge";
    case ErrorCode::TooFewVariables: return "TooFewVariables";
    case ErrorCode::OutsideTheorem: return "OutsideTheorem";
    case ErrorCode::NoDerivation: return "NoDerivation";
    case ErrorCode::FormSingular: return "FormSingular";
    case ErrorCode::MalformedCertificate: return "MalformedCertificate";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::ExhaustedSearch: return "ExhaustedSearch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotAllLinesRational: return "NotAllLinesRational";
    case ErrorCode::UnexpectedGrouping: return "UnexpectedGrouping";
    case ErrorCode::PrimeMismatch: return "PrimeMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NoWitnessFound: return "NoWitnessFound";
    case ErrorCode::BlockNotSplit: return "BlockNotSplit";
    case ErrorCode::RepeatedFactor: return "RepeatedFactor";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Domain Domain::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidPrime, std::to_string(p) + " is not a prime below 2^31");
  }
  return Domain(p);
}

std::string Domain::to_string() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

namespace modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) result = mul(result, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error(ErrorCode::ZeroInput, "inverse of zero in GF(" + std::to_string(p) + ")");
  return pow(a, p - 2, p);
}

std::uint64_t from_rational(const mpq_class& q, std::uint64_t p) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class den = q.get_den() % pz;
  if (den == 0) {
    throw Error(ErrorCode::BadPrime,
                std::to_string(p) + " divides the denominator of " + q.get_str());
  }
  mpz_class num = q.get_num() % pz;
  if (num < 0) num += pz;
  return mul(num.get_ui(), inv(den.get_ui(), p), p);
}

}  // namespace modp

Scalar::Scalar(Domain domain, long value) : domain_(domain) {
  if (domain.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = modp::reduce(value, domain.characteristic());
  }
}

Scalar::Scalar(Domain domain, const mpz_class& value) : Scalar(domain, mpq_class(value)) {}

Scalar::Scalar(Domain domain, const mpq_class& value) : domain_(domain) {
  if (domain.is_rational()) {
    mpq_class q(value);
    q.canonicalize();
    value_ = std::move(q);
  } else {
    value_ = modp::from_rational(value, domain.characteristic());
  }
}

Scalar Scalar::residue(std::uint64_t p, std::uint64_t r) {
  Scalar s;
  s.domain_ = Domain::prime_field(p);
  s.value_ = r % p;
  return s;
}

bool Scalar::is_zero() const {
  if (domain_.is_rational()) return std::get<mpq_class>(value_) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (domain_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::as_rational() const {
  if (!domain_.is_rational()) throw Error(ErrorCode::DomainMismatch, "scalar is not rational");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::as_residue() const {
  if (domain_.is_rational()) throw Error(ErrorCode::DomainMismatch, "scalar is not a residue");
  return std::get<std::uint64_t>(value_);
}

Scalar Scalar::reduce_mod(std::uint64_t p) const {
  if (!domain_.is_rational()) {
    if (domain_.characteristic() != p) {
      throw Error(ErrorCode::DomainMismatch, "cannot reduce " + domain_.to_string() + " modulo " + std::to_string(p));
    }
    return *this;
  }
  return Scalar(Domain::prime_field(p), std::get<mpq_class>(value_));
}

void Scalar::require_same_domain(const Scalar& other) const {
  if (domain_ != other.domain_) {
    throw Error(ErrorCode::DomainMismatch, domain_.to_string() + " vs " + other.domain_.to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (domain_.is_rational()) {
    std::get<mpq_class>(r.value_) = -std::get<mpq_class>(value_);
  } else {
    std::get<std::uint64_t>(r.value_) = modp::sub(0, std::get<std::uint64_t>(value_), domain_.characteristic());
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_domain(other);
  if (domain_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = modp::add(v, std::get<std::uint64_t>(other.value_), domain_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_domain(other);
  if (domain_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = modp::sub(v, std::get<std::uint64_t>(other.value_), domain_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_domain(other);
  if (domain_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = modp::mul(v, std::get<std::uint64_t>(other.value_), domain_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_domain(other);
  return *this *= other.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInput, "division by zero");
  Scalar r(*this);
  if (domain_.is_rational()) {
    std::get<mpq_class>(r.value_) = 1 / std::get<mpq_class>(value_);
  } else {
    std::get<std::uint64_t>(r.value_) = modp::inv(std::get<std::uint64_t>(value_), domain_.characteristic());
  }
  return r;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result(domain_, 1);
  Scalar base(*this);
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.domain_ == b.domain_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (domain_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace cubiccert
