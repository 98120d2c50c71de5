#include "cubiccert/resultant.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <unordered_map>

#include "cubiccert/errors.hpp"
#include "cubiccert/modp.hpp"

namespace cubiccert {

namespace {

// Coefficients of f as a polynomial in variable `elim`, index = exponent.
std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t elim) {
  std::vector<Polynomial> coeffs(f.degree_in(elim) + 1, Polynomial(f.arity(), f.domain()));
  for (const auto& [m, c] : f.terms()) {
    Monomial rest(m);
    rest[elim] = 0;
    coeffs[m[elim]].add_term(rest, c);
  }
  return coeffs;
}

// Division-free determinant by Laplace expansion along rows, memoized on the
// set of consumed columns.
class LaplaceDeterminant {
 public:
  LaplaceDeterminant(const std::vector<std::vector<Polynomial>>& m, std::size_t arity, Domain domain)
      : m_(m), arity_(arity), domain_(domain) {}

  Polynomial compute() { return expand(0); }

 private:
  Polynomial expand(std::uint32_t used) {
    const std::size_t n = m_.size();
    const auto row = static_cast<std::size_t>(std::popcount(used));
    if (row == n) return Polynomial::constant(arity_, Scalar(domain_, 1));
    if (auto it = memo_.find(used); it != memo_.end()) return it->second;

    Polynomial total(arity_, domain_);
    std::size_t free_before = 0;
    for (std::size_t col = 0; col < n; ++col) {
      if (used & (1u << col)) continue;
      const Polynomial& entry = m_[row][col];
      if (!entry.is_zero()) {
        Polynomial minor = expand(used | (1u << col));
        if (!minor.is_zero()) {
          Polynomial term = entry * minor;
          if (free_before % 2 == 1) {
            total -= term;
          } else {
            total += term;
          }
        }
      }
      ++free_before;
    }
    memo_.emplace(used, total);
    return total;
  }

  const std::vector<std::vector<Polynomial>>& m_;
  std::size_t arity_;
  Domain domain_;
  std::unordered_map<std::uint32_t, Polynomial> memo_;
};

constexpr std::size_t kMaxSylvesterSize = 20;

// Degree-4 monomials in three variables, grlex descending.
std::vector<Monomial> quartic_monomials() {
  std::vector<Monomial> out;
  for (unsigned a = 5; a-- > 0;) {
    for (unsigned b = 5 - a; b-- > 0;) {
      out.push_back({a, b, 4 - a - b});
    }
  }
  return out;
}

void require_ternary_quadric(const Polynomial& q, const char* name) {
  if (q.arity() != 3) throw Error(ErrorCode::NotTernary, std::string(name) + " has arity " + std::to_string(q.arity()));
  if (!q.domain().is_rational()) throw Error(ErrorCode::DomainMismatch, std::string(name) + " must have rational coefficients");
  if (q.is_zero() || q.total_degree() != 2 || !q.is_homogeneous()) {
    throw Error(ErrorCode::NotQuadric, std::string(name) + " = " + q.to_string() + " is not a quadratic form");
  }
}

std::optional<mpq_class> macaulay_quotient(const std::array<Polynomial, 3>& qs) {
  const auto monos = quartic_monomials();
  std::map<Monomial, std::size_t> column;
  for (std::size_t i = 0; i < monos.size(); ++i) column[monos[i]] = i;

  RationalMatrix big(monos.size(), std::vector<mpq_class>(monos.size(), 0));
  std::vector<std::size_t> non_reduced;
  for (std::size_t r = 0; r < monos.size(); ++r) {
    const Monomial& m = monos[r];
    std::size_t divisible = 0;
    std::optional<std::size_t> owner;
    for (std::size_t i = 0; i < 3; ++i) {
      if (m[i] >= 2) {
        ++divisible;
        if (!owner) owner = i;
      }
    }
    if (divisible >= 2) non_reduced.push_back(r);
    Monomial shift(m);
    shift[*owner] -= 2;
    for (const auto& [qm, c] : qs[*owner].terms()) {
      Monomial prod{qm[0] + shift[0], qm[1] + shift[1], qm[2] + shift[2]};
      big[r][column.at(prod)] = c.as_rational();
    }
  }

  RationalMatrix minor(non_reduced.size(), std::vector<mpq_class>(non_reduced.size()));
  for (std::size_t i = 0; i < non_reduced.size(); ++i) {
    for (std::size_t j = 0; j < non_reduced.size(); ++j) minor[i][j] = big[non_reduced[i]][non_reduced[j]];
  }
  const mpq_class denominator = det_rational(std::move(minor));
  if (denominator == 0) return std::nullopt;
  return det_rational(std::move(big)) / denominator;
}

IntMatrix3 random_unimodular(std::mt19937_64& rng) {
  IntMatrix3 a{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int step = 0; step < 6; ++step) {
    const auto i = static_cast<std::size_t>(rng() % 3);
    auto j = static_cast<std::size_t>(rng() % 2);
    if (j >= i) ++j;
    const long c = static_cast<long>(rng() % 5) - 2;
    for (std::size_t k = 0; k < 3; ++k) a[i][k] += c * a[j][k];
  }
  return a;
}

Polynomial apply_change(const Polynomial& q, const IntMatrix3& a) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < 3; ++i) {
    Polynomial row(3, q.domain());
    for (std::size_t k = 0; k < 3; ++k) {
      row += Polynomial::variable(3, q.domain(), k) * Scalar(q.domain(), a[i][k]);
    }
    images.push_back(std::move(row));
  }
  return substitute(q, images);
}

using Dense = std::vector<mpq_class>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense dense_remainder(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = dense_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

// Coefficients of f in variable `var`, assuming no other variable occurs.
Dense to_dense(const Polynomial& f, std::size_t var) {
  Dense out(f.is_zero() ? 0 : f.degree_in(var) + 1, 0);
  for (const auto& [m, c] : f.terms()) out[m[var]] += c.as_rational();
  return out;
}

}  // namespace

Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::size_t elim) {
  if (f.arity() != g.arity()) throw Error(ErrorCode::ArityMismatch, "resultant operands differ in arity");
  if (f.domain() != g.domain()) throw Error(ErrorCode::DomainMismatch, "resultant operands differ in domain");
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroInput, "resultant of a zero polynomial");
  if (elim >= f.arity()) throw Error(ErrorCode::IndexOutOfRange, "elimination variable " + std::to_string(elim));

  const auto a = coefficients_in(f, elim);
  const auto b = coefficients_in(g, elim);
  const std::size_t n = a.size() - 1;
  const std::size_t m = b.size() - 1;
  const std::size_t size = n + m;
  if (size == 0) return Polynomial::constant(f.arity(), Scalar(f.domain(), 1));
  if (size > kMaxSylvesterSize) {
    throw Error(ErrorCode::InvalidArgument, "Sylvester matrix of size " + std::to_string(size) + " is too large");
  }

  const Polynomial zero(f.arity(), f.domain());
  std::vector<std::vector<Polynomial>> sylvester(size, std::vector<Polynomial>(size, zero));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) sylvester[r][r + k] = a[n - k];
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) sylvester[m + r][r + k] = b[m - k];
  }
  return LaplaceDeterminant(sylvester, f.arity(), f.domain()).compute();
}

std::string MacaulayResult::provenance() const {
  std::ostringstream os;
  if (dependent) return "linearly dependent quadrics";
  os << "macaulay degree-4 matrix, retries=" << retries;
  if (change_of_variables) {
    os << ", x -> A x with A = [";
    for (std::size_t i = 0; i < 3; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < 3; ++j) os << (j ? " " : "") << (*change_of_variables)[i][j];
    }
    os << "]";
  }
  return os.str();
}

MacaulayResult macaulay_resultant_q3(const Polynomial& q1, const Polynomial& q2, const Polynomial& q3,
                                     std::uint64_t seed) {
  require_ternary_quadric(q1, "q1");
  require_ternary_quadric(q2, "q2");
  require_ternary_quadric(q3, "q3");

  std::array<Polynomial, 3> qs{q1, q2, q3};
  // Two conics always meet, so a dependent triple shares their common zero.
  RationalMatrix coeffs(6, std::vector<mpq_class>(3));
  std::size_t row = 0;
  for (unsigned a = 0; a <= 2; ++a) {
    for (unsigned b = 0; a + b <= 2; ++b, ++row) {
      for (std::size_t k = 0; k < 3; ++k) coeffs[row][k] = qs[k].coefficient(Monomial{a, b, 2 - a - b}).as_rational();
    }
  }
  if (!nullspace_rational(coeffs).empty()) {
    MacaulayResult r{Scalar(Domain::rationals(), 0), 0, std::nullopt};
    r.dependent = true;
    return r;
  }
  if (auto r = macaulay_quotient(qs)) {
    return MacaulayResult{Scalar::rational(*r), 0, std::nullopt};
  }

  constexpr unsigned kMaxRetries = 8;
  for (unsigned attempt = 1; attempt <= kMaxRetries; ++attempt) {
    std::mt19937_64 rng(seed + attempt);
    const IntMatrix3 a = random_unimodular(rng);
    std::array<Polynomial, 3> changed{apply_change(q1, a), apply_change(q2, a), apply_change(q3, a)};
    if (auto r = macaulay_quotient(changed)) {
      return MacaulayResult{Scalar::rational(*r), attempt, a};
    }
  }
  throw Error(ErrorCode::DivisionDegenerate,
              "extraneous minor vanished after " + std::to_string(kMaxRetries) + " changes of variables");
}

Polynomial univariate_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.arity() != g.arity()) throw Error(ErrorCode::ArityMismatch, "gcd operands differ in arity");
  if (!f.domain().is_rational() || !g.domain().is_rational()) {
    throw Error(ErrorCode::DomainMismatch, "univariate_gcd works over QQ");
  }
  const std::size_t arity = f.arity();
  const Domain qq = Domain::rationals();

  std::vector<std::size_t> vars = f.used_variables();
  for (auto v : g.used_variables()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  if (vars.empty()) {
    if (f.is_zero() && g.is_zero()) return Polynomial(arity, qq);
    return Polynomial::constant(arity, Scalar(qq, 1));
  }

  if (vars.size() == 1) {
    const std::size_t x = vars[0];
    const Dense d = dense_gcd(to_dense(f, x), to_dense(g, x));
    Polynomial out(arity, qq);
    for (std::size_t k = 0; k < d.size(); ++k) {
      Monomial m(arity, 0);
      m[x] = static_cast<unsigned>(k);
      out.add_term(m, Scalar::rational(d[k]));
    }
    return out;
  }

  if (vars.size() != 2 || !f.is_homogeneous() || !g.is_homogeneous()) {
    throw Error(ErrorCode::NotUnivariate, "gcd needs univariate inputs or binary forms");
  }

  // Binary forms: dehomogenize at t = 1, track the power of t separately.
  const std::size_t s = vars[0];
  const std::size_t t = vars[1];
  auto t_power = [&](const Polynomial& h) -> std::optional<unsigned> {
    if (h.is_zero()) return std::nullopt;
    unsigned lowest = h.degree_in(t);
    for (const auto& [m, c] : h.terms()) lowest = std::min(lowest, m[t]);
    return lowest;
  };
  auto dehomogenize = [&](const Polynomial& h) {
    Dense out(h.is_zero() ? 0 : h.degree_in(s) + 1, 0);
    for (const auto& [m, c] : h.terms()) out[m[s]] += c.as_rational();
    return out;
  };

  const auto tf = t_power(f);
  const auto tg = t_power(g);
  unsigned common_t = 0;
  if (tf && tg) {
    common_t = std::min(*tf, *tg);
  } else if (tf) {
    common_t = *tf;
  } else if (tg) {
    common_t = *tg;
  }

  const Dense d = dense_gcd(dehomogenize(f), dehomogenize(g));
  Polynomial out(arity, qq);
  if (d.empty()) return out;
  const std::size_t e = d.size() - 1;
  for (std::size_t k = 0; k <= e; ++k) {
    Monomial m(arity, 0);
    m[s] = static_cast<unsigned>(k);
    m[t] = static_cast<unsigned>(e - k) + common_t;
    out.add_term(m, Scalar::rational(d[k]));
  }
  return out;
}

}  // namespace cubiccert
