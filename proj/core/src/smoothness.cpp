#include "cubiccert/smoothness.hpp"

#include <algorithm>
#include <numeric>

#include "cubiccert/errors.hpp"
#include "cubiccert/modp.hpp"
#include "cubiccert/resultant.hpp"

namespace cubiccert {

namespace {

constexpr std::uint64_t kWholeFormScreenLimit = 200'000;
constexpr long kHeightSearchBound = 6;

struct BlockAnalysis {
  SmoothnessVerdict verdict;
  /// Nonzero invariant (coefficient, discriminant, or resultant) of a smooth block.
  mpq_class invariant = 0;
};

std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < f.arity(); ++i) out.push_back(partial_derivative(f, i));
  return out;
}

bool good_at(const mpq_class& invariant, const mpz_class& den_lcm, std::uint64_t p) {
  const mpz_class pz(static_cast<unsigned long>(p));
  return invariant.get_num() % pz != 0 && invariant.get_den() % pz != 0 && den_lcm % pz != 0;
}

SingularPoint rational_point(std::vector<mpq_class> coords) {
  // Clear denominators and content so the representative is a primitive integer vector.
  mpz_class l = 1;
  for (const auto& c : coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  mpz_class g = 0;
  for (auto& c : coords) {
    c *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  if (g != 0) {
    for (auto& c : coords) c /= g;
  }
  auto lead = std::find_if(coords.begin(), coords.end(), [](const mpq_class& c) { return c != 0; });
  if (lead != coords.end() && *lead < 0) {
    for (auto& c : coords) c = -c;
  }
  return SingularPoint{std::move(coords), Domain::rationals()};
}

// A vector v with sum v_i * df/dx_i == 0 identically is a vertex of the cone f,
// hence a rational singular point.
std::optional<SingularPoint> cone_vertex(const Polynomial& f) {
  const auto grad = gradient(f);
  std::map<Monomial, std::size_t, GrlexDescending> rows;
  for (const auto& g : grad) {
    for (const auto& [m, c] : g.terms()) rows.emplace(m, 0);
  }
  std::size_t r = 0;
  for (auto& [m, idx] : rows) idx = r++;
  RationalMatrix mat(rows.size(), std::vector<mpq_class>(grad.size(), 0));
  for (std::size_t j = 0; j < grad.size(); ++j) {
    for (const auto& [m, c] : grad[j].terms()) mat[rows.at(m)][j] = c.as_rational();
  }
  auto kernel = nullspace_rational(std::move(mat));
  if (kernel.empty()) return std::nullopt;
  return rational_point(std::move(kernel.front()));
}

std::optional<SingularPoint> small_height_singular_point(const Polynomial& f) {
  const auto grad = gradient(f);
  const std::size_t n = f.arity();
  std::vector<long> v(n, -kHeightSearchBound);
  std::vector<Scalar> point(n);
  while (true) {
    const auto lead = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
    if (lead != v.end() && *lead > 0 &&
        std::accumulate(v.begin(), v.end(), 0L, [](long g, long x) { return std::gcd(g, x); }) == 1) {
      for (std::size_t i = 0; i < n; ++i) point[i] = Scalar(Domain::rationals(), v[i]);
      if (std::all_of(grad.begin(), grad.end(), [&](const Polynomial& g) { return evaluate(g, point).is_zero(); })) {
        std::vector<mpq_class> coords(v.begin(), v.end());
        return SingularPoint{std::move(coords), Domain::rationals()};
      }
    }
    std::size_t i = 0;
    while (i < n && ++v[i] > kHeightSearchBound) v[i++] = -kHeightSearchBound;
    if (i == n) return std::nullopt;
  }
}

// Repeated linear factor of a singular binary cubic: gcd of its partials, cut down to degree 1.
SingularPoint binary_singular_point(const Polynomial& f) {
  Polynomial g = univariate_gcd(partial_derivative(f, 0), partial_derivative(f, 1));
  while (g.total_degree() > 1) {
    Polynomial d = partial_derivative(g, 0);
    if (d.is_zero()) d = partial_derivative(g, 1);
    g = univariate_gcd(g, d);
  }
  if (g.total_degree() != 1) {
    throw Error(ErrorCode::Undecided, "singular binary cubic without a linear common factor: " + f.to_string());
  }
  const mpq_class alpha = g.coefficient({1, 0}).as_rational();
  const mpq_class beta = g.coefficient({0, 1}).as_rational();
  return rational_point({-beta, alpha});
}

SmoothnessVerdict smooth_with_prime(const Polynomial& f, const mpq_class& invariant) {
  const mpz_class den = denominator_lcm(f);
  for (std::uint64_t p : screening_primes(den, 32)) {
    if (!good_at(invariant, den, p)) continue;
    const JacobianScreen screen = screen_jacobian(f, p);
    if (screen.found_zero) {
      throw Error(ErrorCode::Undecided, "nonzero invariant but a Jacobian zero mod " + std::to_string(p) +
                                            " for " + f.to_string());
    }
    SmoothnessVerdict v;
    v.verdict = Smoothness::Smooth;
    v.witness = GoodReductionPrime{p};
    return v;
  }
  throw Error(ErrorCode::Undecided, "no good screening prime for " + f.to_string());
}

SmoothnessVerdict singular_with(SmoothnessWitness w) {
  SmoothnessVerdict v;
  v.verdict = Smoothness::Singular;
  v.witness = std::move(w);
  return v;
}

BlockAnalysis analyze_block(const CubicForm& block) {
  const Polynomial& f = block.poly();
  switch (block.nvars()) {
    case 1: {
      const mpq_class a = f.coefficient({3}).as_rational();
      return {smooth_with_prime(f, a), a};
    }
    case 2: {
      const mpq_class disc = binary_cubic_discriminant(block);
      if (disc != 0) return {smooth_with_prime(f, disc), disc};
      return {singular_with(binary_singular_point(f)), 0};
    }
    case 3: {
      const auto grad = gradient(f);
      const MacaulayResult res = macaulay_resultant_q3(grad[0], grad[1], grad[2]);
      const mpq_class r = res.value.as_rational();
      if (r != 0) return {smooth_with_prime(f, r), r};
      if (auto vertex = cone_vertex(f)) return {singular_with(std::move(*vertex)), 0};
      if (auto point = small_height_singular_point(f)) return {singular_with(std::move(*point)), 0};
      return {singular_with(ResultantZero{res.provenance()}), 0};
    }
    default:
      throw Error(ErrorCode::TooManyVariables,
                  "block has " + std::to_string(block.nvars()) + " variables; at most 3 are supported");
  }
}

SmoothnessVerdict fallback_form_screen(const CubicForm& f) {
  if (auto vertex = cone_vertex(f.poly())) return singular_with(std::move(*vertex));
  const mpz_class den = denominator_lcm(f.poly());
  for (std::uint64_t p : screening_primes(den)) {
    if (projective_point_count(f.nvars(), p) > kWholeFormScreenLimit) break;
    const JacobianScreen screen = screen_jacobian(f.poly(), p);
    if (!screen.found_zero) {
      SmoothnessVerdict v;
      v.witness = GoodReductionPrime{p};
      v.exact = false;
      v.whole_form_screen = screen;
      return v;
    }
  }
  throw Error(ErrorCode::Undecided, "blocks wider than 3 variables and no decisive mod-p screen");
}

}  // namespace

mpq_class binary_cubic_discriminant(const CubicForm& binary) {
  if (binary.nvars() != 2) throw Error(ErrorCode::InvalidArgument, "binary cubic expected");
  const Polynomial& f = binary.poly();
  const mpq_class a = f.coefficient({3, 0}).as_rational();
  const mpq_class b = f.coefficient({2, 1}).as_rational();
  const mpq_class c = f.coefficient({1, 2}).as_rational();
  const mpq_class d = f.coefficient({0, 3}).as_rational();
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
}

std::uint64_t next_prime_1_mod_3(std::uint64_t after) {
  std::uint64_t q = after + 1;
  while (q % 3 != 1 || !is_prime(q)) ++q;
  return q;
}

std::vector<std::uint64_t> screening_primes(const mpz_class& avoid, std::size_t count) {
  std::vector<std::uint64_t> out;
  std::uint64_t q = 5;
  while (out.size() < count) {
    q = next_prime_1_mod_3(q);
    if (avoid % mpz_class(static_cast<unsigned long>(q)) != 0) out.push_back(q);
  }
  return out;
}

JacobianScreen screen_jacobian(const Polynomial& f, std::uint64_t p,
                               std::optional<std::vector<std::uint64_t>>* zero) {
  const Polynomial reduced = f.domain().is_rational() ? f.reduce_mod(p) : f;
  std::vector<Polynomial> grad;
  for (std::size_t i = 0; i < reduced.arity(); ++i) grad.push_back(partial_derivative(reduced, i));

  JacobianScreen screen;
  screen.prime = p;
  screen.ran = true;
  for_each_projective_point(reduced.arity(), p, [&](std::span<const std::uint64_t> pt) {
    ++screen.points_checked;
    for (const auto& g : grad) {
      if (evaluate_mod(g, pt) != 0) return true;
    }
    screen.found_zero = true;
    if (zero) *zero = std::vector<std::uint64_t>(pt.begin(), pt.end());
    return false;
  });
  return screen;
}

bool jacobian_vanishes_at(const Polynomial& f, std::span<const mpq_class> point) {
  if (point.size() != f.arity()) throw Error(ErrorCode::ArityMismatch, "point length differs from arity");
  if (std::all_of(point.begin(), point.end(), [](const mpq_class& c) { return c == 0; })) return false;
  std::vector<Scalar> pt;
  for (const auto& c : point) pt.push_back(Scalar::rational(c));
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (!evaluate(partial_derivative(f, i), pt).is_zero()) return false;
  }
  return true;
}

SmoothnessVerdict block_smoothness(const CubicForm& block) { return analyze_block(block).verdict; }

SmoothnessVerdict form_smoothness(const CubicForm& f, const BlockDecomposition& d) {
  if (std::any_of(d.blocks.begin(), d.blocks.end(), [](const Block& b) { return b.variables.size() > 3; })) {
    return fallback_form_screen(f);
  }

  std::vector<BlockAnalysis> analyses;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    analyses.push_back(analyze_block(d.blocks[i].form));
    if (analyses.back().verdict.is_smooth()) continue;

    SmoothnessVerdict v = analyses.back().verdict;
    v.block = i;
    if (auto* sp = std::get_if<SingularPoint>(&v.witness)) {
      std::vector<mpq_class> global(f.nvars(), 0);
      for (std::size_t k = 0; k < d.blocks[i].variables.size(); ++k) global[d.blocks[i].variables[k]] = sp->coords[k];
      if (!jacobian_vanishes_at(f.poly(), global)) {
        throw Error(ErrorCode::Undecided, "embedded singular point failed re-verification");
      }
      sp->coords = std::move(global);
      // The reduced point must be a Jacobian zero of the reduced form.
      const mpz_class den = denominator_lcm(f.poly());
      const std::uint64_t p = screening_primes(den).front();
      std::vector<std::uint64_t> residues;
      for (const auto& c : sp->coords) residues.push_back(modp::from_rational(c, p));
      const Polynomial reduced = f.poly().reduce_mod(p);
      JacobianScreen screen{p, true, true, 1};
      for (std::size_t k = 0; k < reduced.arity(); ++k) {
        if (evaluate_mod(partial_derivative(reduced, k), residues) != 0) screen.found_zero = false;
      }
      v.whole_form_screen = screen;
    }
    return v;
  }

  // All blocks smooth: pick one prime that is good for every block and rerun each block screen there.
  const mpz_class den = denominator_lcm(f.poly());
  std::uint64_t common = 0;
  for (std::uint64_t q = 5; common == 0;) {
    q = next_prime_1_mod_3(q);
    if (den % mpz_class(static_cast<unsigned long>(q)) == 0) continue;
    if (std::all_of(analyses.begin(), analyses.end(), [&](const BlockAnalysis& a) {
          return good_at(a.invariant, den, q);
        })) {
      common = q;
    }
  }
  for (const auto& b : d.blocks) {
    if (screen_jacobian(b.form.poly(), common).found_zero) {
      throw Error(ErrorCode::Undecided, "block screen disagrees at good prime " + std::to_string(common));
    }
  }

  SmoothnessVerdict v;
  v.verdict = Smoothness::Smooth;
  v.witness = GoodReductionPrime{common};
  if (projective_point_count(f.nvars(), common) <= kWholeFormScreenLimit) {
    v.whole_form_screen = screen_jacobian(f.poly(), common);
  } else {
    v.whole_form_screen = JacobianScreen{common, false, false, 0};
  }
  return v;
}

std::string describe(const SmoothnessVerdict& v) {
  std::string out = v.is_smooth() ? "Smooth" : "Singular";
  if (const auto* g = std::get_if<GoodReductionPrime>(&v.witness)) {
    out += " (good reduction at p = " + std::to_string(g->p) + ")";
  } else if (const auto* s = std::get_if<SingularPoint>(&v.witness)) {
    out += " (singular point (";
    for (std::size_t i = 0; i < s->coords.size(); ++i) out += (i ? " : " : "") + s->coords[i].get_str();
    out += "))";
  } else if (const auto* r = std::get_if<ResultantZero>(&v.witness)) {
    out += " (resultant vanishes: " + r->provenance + ")";
  }
  if (!v.exact) out += " [rational-point screen only]";
  return out;
}

}  // namespace cubiccert
