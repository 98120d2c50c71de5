#include "cubiccert/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "cubiccert/errors.hpp"

namespace cubiccert {

unsigned monomial_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = monomial_degree(a);
  const unsigned db = monomial_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(std::size_t arity, const Scalar& c) {
  Polynomial p(arity, c.domain());
  p.add_term(Monomial(arity, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, Domain domain, std::size_t index) {
  if (index >= arity) {
    throw Error(ErrorCode::IndexOutOfRange, "variable " + std::to_string(index) + " in arity " + std::to_string(arity));
  }
  Monomial m(arity, 0);
  m[index] = 1;
  return term(arity, Scalar(domain, 1), std::move(m));
}

Polynomial Polynomial::term(std::size_t arity, const Scalar& c, Monomial exponents) {
  if (exponents.size() != arity) throw Error(ErrorCode::ArityMismatch, "monomial length differs from arity");
  Polynomial p(arity, c.domain());
  p.add_term(exponents, c);
  return p;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(domain_, 0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.size() != arity_) throw Error(ErrorCode::ArityMismatch, "monomial length differs from arity");
  if (c.domain() != domain_) throw Error(ErrorCode::DomainMismatch, c.domain().to_string() + " vs " + domain_.to_string());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(monomial_degree(terms_.begin()->first));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = monomial_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return monomial_degree(t.first) == d; });
}

unsigned Polynomial::degree_in(std::size_t i) const {
  if (i >= arity_) throw Error(ErrorCode::IndexOutOfRange, "variable " + std::to_string(i));
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
  return d;
}

std::vector<std::size_t> Polynomial::used_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] > 0; })) {
      out.push_back(i);
    }
  }
  return out;
}

void Polynomial::require_compatible(const Polynomial& other) const {
  if (arity_ != other.arity_) {
    throw Error(ErrorCode::ArityMismatch, std::to_string(arity_) + " vs " + std::to_string(other.arity_));
  }
  if (domain_ != other.domain_) {
    throw Error(ErrorCode::DomainMismatch, domain_.to_string() + " vs " + other.domain_.to_string());
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  Polynomial r(a.arity_, a.domain_);
  Monomial m(a.arity_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.domain() != domain_) throw Error(ErrorCode::DomainMismatch, c.domain().to_string() + " vs " + domain_.to_string());
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(arity_, Scalar(domain_, 1));
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.arity_ == b.arity_ && a.domain_ == b.domain_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::reduce_mod(std::uint64_t p) const {
  Polynomial r(arity_, Domain::prime_field(p));
  for (const auto& [m, c] : terms_) r.add_term(m, c.reduce_mod(p));
  return r;
}

Polynomial Polynomial::embed(std::size_t new_arity, std::span<const std::size_t> mapping) const {
  if (mapping.size() != arity_) throw Error(ErrorCode::ArityMismatch, "embedding map length differs from arity");
  for (std::size_t target : mapping) {
    if (target >= new_arity) throw Error(ErrorCode::IndexOutOfRange, "embedding target " + std::to_string(target));
  }
  Polynomial r(new_arity, domain_);
  Monomial m(new_arity);
  for (const auto& [src, c] : terms_) {
    std::fill(m.begin(), m.end(), 0u);
    for (std::size_t i = 0; i < arity_; ++i) m[mapping[i]] += src[i];
    r.add_term(m, c);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coef = c.to_string();
    bool negative = false;
    if (domain_.is_rational() && c.as_rational() < 0) {
      negative = true;
      coef = (-c).to_string();
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i);
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      out += coef;
    } else if (coef == "1") {
      out += vars;
    } else {
      out += coef + "*" + vars;
    }
  }
  return out;
}

Polynomial substitute(const Polynomial& target, std::span<const Polynomial> images) {
  if (images.size() != target.arity()) {
    throw Error(ErrorCode::ArityMismatch, "substitute needs " + std::to_string(target.arity()) + " images, got " +
                                              std::to_string(images.size()));
  }
  if (images.empty()) return target;
  const std::size_t arity = images.front().arity();
  const Domain domain = images.front().domain();
  for (const auto& img : images) {
    if (img.arity() != arity) throw Error(ErrorCode::ArityMismatch, "substitution images differ in arity");
    if (img.domain() != domain) throw Error(ErrorCode::DomainMismatch, "substitution images differ in domain");
  }
  if (target.domain() != domain) {
    throw Error(ErrorCode::DomainMismatch, target.domain().to_string() + " vs " + domain.to_string());
  }

  // Cache powers of each image; cubic forms only need exponents up to 3.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(arity, Scalar(domain, 1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Polynomial result(arity, domain);
  for (const auto& [m, c] : target.terms()) {
    Polynomial term = Polynomial::constant(arity, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) term *= power(i, m[i]);
    }
    result += term;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
  if (i >= f.arity()) {
    throw Error(ErrorCode::IndexOutOfRange, "variable " + std::to_string(i) + " in arity " + std::to_string(f.arity()));
  }
  Polynomial r(f.arity(), f.domain());
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    Monomial dm(m);
    dm[i] -= 1;
    r.add_term(dm, c * Scalar(f.domain(), static_cast<long>(m[i])));
  }
  return r;
}

Scalar evaluate(const Polynomial& f, std::span<const Scalar> point) {
  if (point.size() != f.arity()) throw Error(ErrorCode::ArityMismatch, "point length differs from arity");
  for (const auto& s : point) {
    if (s.domain() != f.domain()) throw Error(ErrorCode::DomainMismatch, s.domain().to_string() + " vs " + f.domain().to_string());
  }
  Scalar total(f.domain(), 0);
  for (const auto& [m, c] : f.terms()) {
    Scalar t(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) t *= point[i].pow(m[i]);
    }
    total += t;
  }
  return total;
}

std::uint64_t evaluate_mod(const Polynomial& f, std::span<const std::uint64_t> point) {
  if (f.domain().is_rational()) throw Error(ErrorCode::DomainMismatch, "evaluate_mod needs a GF(p) polynomial");
  if (point.size() != f.arity()) throw Error(ErrorCode::ArityMismatch, "point length differs from arity");
  const std::uint64_t p = f.domain().characteristic();
  std::uint64_t total = 0;
  for (const auto& [m, c] : f.terms()) {
    std::uint64_t t = c.as_residue();
    for (std::size_t i = 0; i < m.size() && t != 0; ++i) {
      for (unsigned e = 0; e < m[i]; ++e) t = modp::mul(t, point[i] % p, p);
    }
    total = modp::add(total, t, p);
  }
  return total;
}

mpz_class denominator_lcm(const Polynomial& f) {
  mpz_class l = 1;
  if (!f.domain().is_rational()) return l;
  for (const auto& [m, c] : f.terms()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.as_rational().get_den_mpz_t());
  }
  return l;
}

}  // namespace cubiccert
