#include "cubiccert/skmap.hpp"

#include <numeric>
#include <random>

#include "cubiccert/errors.hpp"
#include "cubiccert/modp.hpp"

namespace cubiccert {

namespace {

std::vector<std::size_t> slots(std::size_t first, std::size_t count) {
  std::vector<std::size_t> out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

Polynomial cube_of(std::size_t arity, std::size_t slot) {
  return Polynomial::variable(arity, Domain::rationals(), slot).pow(3);
}

SmoothnessVerdict require_smooth(const CubicForm& f, const char* which) {
  SmoothnessVerdict v = form_smoothness(f, decompose_blocks(f));
  if (!v.is_smooth()) throw Error(ErrorCode::SingularInput, std::string(which) + " is singular: " + describe(v));
  return v;
}

// Target and f reduced mod p, shared by the sampler and the fiber counter.
struct Reduced {
  std::uint64_t p;
  Polynomial target;
  Polynomial f;
  std::size_t n;
};

Reduced reduce(const SKMapSpec& s, std::uint64_t p) {
  Domain::prime_field(p);
  if (p < 5) throw Error(ErrorCode::BadPrime, "fiber checks need p >= 5, got " + std::to_string(p));
  return Reduced{p, s.target.reduce_mod(p), s.f.poly().reduce_mod(p), s.n()};
}

std::uint64_t f_at(const Reduced& r, std::span<const std::uint64_t> z) {
  return evaluate_mod(r.f, z.subspan(0, r.n));
}

std::vector<std::uint64_t> sample(const Reduced& r, std::uint64_t seed) {
  const std::size_t dim = r.target.arity();
  std::mt19937_64 rng(seed);
  const std::uint64_t bound = 2000 * r.p + 100000;
  std::vector<std::uint64_t> z(dim);
  for (std::uint64_t attempt = 0; attempt < bound; ++attempt) {
    bool nonzero = false;
    for (auto& c : z) {
      c = rng() % r.p;
      nonzero = nonzero || c != 0;
    }
    if (!nonzero || evaluate_mod(r.target, z) != 0 || f_at(r, z) == 0) continue;
    return normalize_projective(z, r.p);
  }
  throw Error(ErrorCode::ExhaustedSearch, "no target point with f != 0 found over GF(" + std::to_string(r.p) + ") after " +
                                              std::to_string(bound) + " attempts; try another prime");
}

std::uint64_t count_fiber(const Reduced& r, std::span<const std::uint64_t> z) {
  if (z.size() != r.target.arity()) throw Error(ErrorCode::PreconditionViolated, "point has the wrong number of coordinates");
  for (auto c : z) {
    if (c >= r.p) throw Error(ErrorCode::PreconditionViolated, "coordinate not reduced mod p");
  }
  if (evaluate_mod(r.target, z) != 0) throw Error(ErrorCode::PreconditionViolated, "point is not on the target");
  const std::uint64_t fz = f_at(r, z);
  if (fz == 0) throw Error(ErrorCode::PreconditionViolated, "f vanishes at the point");
  const std::uint64_t minus_one = r.p - 1;
  std::uint64_t count = 0;
  for (std::uint64_t lambda = 1; lambda < r.p; ++lambda) {
    if (modp::mul(modp::pow(lambda, 3, r.p), fz, r.p) == minus_one) ++count;
  }
  return count;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SKMapSpec build_sk_map(const CubicForm& f, const CubicForm& g) {
  SmoothnessVerdict fv = require_smooth(f, "f");
  SmoothnessVerdict gv = require_smooth(g, "g");
  const std::size_t n = f.nvars();
  const std::size_t m = g.nvars();

  Polynomial source_f = f.poly().embed(n + 1, slots(1, n)) + cube_of(n + 1, 0);
  Polynomial source_g = g.poly().embed(m + 1, slots(1, m)) + cube_of(m + 1, 0);
  Polynomial target = f.poly().embed(n + m, slots(0, n)) - g.poly().embed(n + m, slots(n, m));
  return SKMapSpec{f, g, 3, std::move(source_f), std::move(source_g), std::move(target), std::move(fv), std::move(gv)};
}

SKIdentityReport verify_sk_identity(const SKMapSpec& s) {
  const std::size_t n = s.n();
  const std::size_t m = s.m();
  const std::size_t arity = n + m + 2;
  const std::size_t y0 = n + 1;
  const Domain qq = Domain::rationals();

  const Polynomial x0_cubed = cube_of(arity, 0);
  const Polynomial y0_cubed = cube_of(arity, y0);
  const Polynomial fx = s.f.poly().embed(arity, slots(1, n));
  const Polynomial gy = s.g.poly().embed(arity, slots(y0 + 1, m));

  SKIdentityReport r;
  r.lhs = y0_cubed * fx - x0_cubed * gy;
  r.via_sources = y0_cubed * s.source_f.embed(arity, slots(0, n + 1)) - x0_cubed * s.source_g.embed(arity, slots(y0, m + 1));

  std::vector<Polynomial> images;
  images.reserve(n + m);
  const Polynomial x0 = Polynomial::variable(arity, qq, 0);
  const Polynomial y0v = Polynomial::variable(arity, qq, y0);
  for (std::size_t i = 1; i <= n; ++i) images.push_back(Polynomial::variable(arity, qq, i) * y0v);
  for (std::size_t j = 1; j <= m; ++j) images.push_back(Polynomial::variable(arity, qq, y0 + j) * x0);
  r.via_pullback = substitute(s.target, images);

  r.holds = r.lhs == r.via_sources && r.lhs == r.via_pullback;
  return r;
}

std::vector<std::uint64_t> sample_target_point(const SKMapSpec& s, std::uint64_t p, std::uint64_t seed) {
  return sample(reduce(s, p), seed);
}

std::uint64_t fiber_count(const SKMapSpec& s, std::uint64_t p, const std::vector<std::uint64_t>& z) {
  return count_fiber(reduce(s, p), z);
}

FiberReport fiber_statistics(const SKMapSpec& s, std::uint64_t p, std::uint64_t n_samples, std::uint64_t seed) {
  if (n_samples == 0) throw Error(ErrorCode::PreconditionViolated, "need at least one sample");
  const Reduced r = reduce(s, p);
  FiberReport report;
  report.prime = p;
  report.samples = n_samples;
  mpz_class total = 0;
  for (std::uint64_t k = 0; k < n_samples; ++k) {
    const auto z = sample(r, splitmix64(seed + k));
    const std::uint64_t size = count_fiber(r, z);
    ++report.histogram[size];
    total += static_cast<unsigned long>(size);
  }
  report.mean = mpq_class(total, mpz_class(static_cast<unsigned long>(n_samples)));
  report.mean.canonicalize();
  return report;
}

}  // namespace cubiccert
