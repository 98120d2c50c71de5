#include "cubiccert/cubic_surface.hpp"

#include <algorithm>
#include <map>

#include "cubiccert/errors.hpp"
#include "cubiccert/modp.hpp"
#include "cubiccert/resultant.hpp"
#include "cubiccert/smoothness.hpp"

namespace cubiccert {

namespace {

void require_ternary(const CubicForm& f) {
  if (f.nvars() != 3) {
    throw Error(ErrorCode::NotTernary, "surface equations need a ternary form, got " + std::to_string(f.nvars()) + " variables");
  }
}

// f(d u + o t) - t^3 at (u, t) = (1,0), (0,1), (1,1), (1,-1): a binary cubic
// vanishing at four distinct points of P^1 is zero.
bool identity_at_samples(const Polynomial& fp, const Vec3& d, const Vec3& o, std::uint64_t p) {
  const std::array<std::array<std::uint64_t, 2>, 4> samples{{{1, 0}, {0, 1}, {1, 1}, {1, p - 1}}};
  for (const auto& [u, t] : samples) {
    std::array<std::uint64_t, 3> pt{};
    for (int i = 0; i < 3; ++i) pt[i] = modp::add(modp::mul(d[i], u, p), modp::mul(o[i], t, p), p);
    const std::uint64_t t3 = modp::pow(t, 3, p);
    if (evaluate_mod(fp, pt) != t3) return false;
  }
  return true;
}

void check_good_reduction(const CubicForm& f, std::uint64_t p) {
  const Polynomial& poly = f.poly();
  MacaulayResult r = macaulay_resultant_q3(partial_derivative(poly, 0), partial_derivative(poly, 1),
                                           partial_derivative(poly, 2));
  if (r.value.is_zero()) throw Error(ErrorCode::SingularInput, "the curve f = 0 is singular");
  const mpz_class num = r.value.as_rational().get_num();
  if (num % static_cast<unsigned long>(p) == 0) {
    throw Error(ErrorCode::BadPrime, "f has bad reduction at p = " + std::to_string(p));
  }
}

}  // namespace

LineOnSurface LineOnSurface::canonical() const {
  LineOnSurface out = *this;
  std::size_t pivot = 0;
  while (pivot < 3 && direction[pivot] % p == 0) ++pivot;
  if (pivot == 3) throw Error(ErrorCode::InvalidArgument, "line direction is zero");
  const std::uint64_t scale = modp::inv(direction[pivot] % p, p);
  for (int i = 0; i < 3; ++i) out.direction[i] = modp::mul(direction[i] % p, scale, p);
  const std::uint64_t shift = offset[pivot] % p;
  for (int i = 0; i < 3; ++i) out.offset[i] = modp::sub(offset[i] % p, modp::mul(shift, out.direction[i], p), p);
  return out;
}

std::array<Vec4, 2> LineOnSurface::span() const {
  return {Vec4{direction[0], direction[1], direction[2], 0}, Vec4{offset[0], offset[1], offset[2], 1}};
}

bool line_on_surface(const LineOnSurface& l, const CubicForm& f) {
  require_ternary(f);
  const std::uint64_t p = l.p;
  const Domain field = Domain::prime_field(p);
  const Polynomial u = Polynomial::variable(2, field, 0);
  const Polynomial t = Polynomial::variable(2, field, 1);
  std::vector<Polynomial> images;
  for (int i = 0; i < 3; ++i) {
    images.push_back(u * Scalar::residue(p, l.direction[i]) + t * Scalar::residue(p, l.offset[i]));
  }
  return (substitute(f.poly().reduce_mod(p), images) - t.pow(3)).is_zero();
}

std::vector<LineOnSurface> find_lines(const CubicForm& f, std::uint64_t p) {
  require_ternary(f);
  Domain::prime_field(p);
  if (p % 3 != 1) throw Error(ErrorCode::BadPrime, "need p = 1 (mod 3), got " + std::to_string(p));
  const Polynomial fp = f.poly().reduce_mod(p);
  check_good_reduction(f, p);

  std::vector<LineOnSurface> lines;
  for_each_projective_point(3, p, [&](std::span<const std::uint64_t> dir) {
    if (evaluate_mod(fp, dir) != 0) return true;
    const Vec3 d{dir[0], dir[1], dir[2]};
    std::size_t pivot = 0;
    while (d[pivot] == 0) ++pivot;
    const std::size_t free1 = pivot == 0 ? 1 : 0;
    const std::size_t free2 = pivot == 2 ? 1 : 2;
    for (std::uint64_t a = 0; a < p; ++a) {
      for (std::uint64_t b = 0; b < p; ++b) {
        Vec3 o{};
        o[free1] = a;
        o[free2] = b;
        if (identity_at_samples(fp, d, o, p)) lines.push_back(LineOnSurface{p, d, o});
      }
    }
    return true;
  });

  for (const auto& l : lines) {
    if (!line_on_surface(l, f)) {
      throw Error(ErrorCode::UnexpectedGrouping, "line failed the symbolic membership replay");
    }
  }
  std::sort(lines.begin(), lines.end());
  if (lines.size() > 27) {
    throw Error(ErrorCode::UnexpectedGrouping, "found " + std::to_string(lines.size()) + " lines on a smooth cubic surface");
  }
  if (lines.size() < 27) throw NotAllLinesRationalError(lines.size(), p, next_prime_1_mod_3(p));
  return lines;
}

std::vector<EckardtGroup> group_by_eckardt(const std::vector<LineOnSurface>& lines, const CubicForm& f) {
  require_ternary(f);
  std::map<Vec3, std::vector<LineOnSurface>> classes;
  for (const auto& l : lines) {
    const LineOnSurface c = l.canonical();
    classes[c.direction].push_back(c);
  }
  if (classes.size() != 9) {
    throw Error(ErrorCode::UnexpectedGrouping, "expected 9 direction classes, got " + std::to_string(classes.size()));
  }
  std::vector<EckardtGroup> groups;
  for (auto& [dir, members] : classes) {
    if (members.size() != 3) {
      throw Error(ErrorCode::UnexpectedGrouping, "direction class of size " + std::to_string(members.size()));
    }
    const std::uint64_t p = members.front().p;
    EckardtGroup g;
    g.base_point = Vec4{dir[0], dir[1], dir[2], 0};
    std::sort(members.begin(), members.end());
    std::copy(members.begin(), members.end(), g.lines.begin());
    ModMatrix m{{dir[0], dir[1], dir[2], 0}};
    for (const auto& l : members) m.push_back({l.offset[0], l.offset[1], l.offset[2], 1});
    g.rank = rank_mod(m, p);
    if (g.rank > 3) throw Error(ErrorCode::UnexpectedGrouping, "lines of a direction class are not coplanar");
    const std::array<std::uint64_t, 3> pt{dir[0], dir[1], dir[2]};
    if (evaluate_mod(f.poly().reduce_mod(p), pt) != 0) {
      throw Error(ErrorCode::UnexpectedGrouping, "base point is not on the curve f = 0");
    }
    groups.push_back(g);
  }
  return groups;
}

LineMeeting lines_meet(const LineOnSurface& a, const LineOnSurface& b) {
  if (a.p != b.p) {
    throw Error(ErrorCode::PrimeMismatch, "lines over GF(" + std::to_string(a.p) + ") and GF(" + std::to_string(b.p) + ")");
  }
  const std::uint64_t p = a.p;
  const auto [a1, a2] = a.span();
  const auto [b1, b2] = b.span();
  ModMatrix rows{{a1.begin(), a1.end()}, {a2.begin(), a2.end()}, {b1.begin(), b1.end()}, {b2.begin(), b2.end()}};

  LineMeeting out;
  out.det = det_mod(rows, p);
  out.disjoint = out.det != 0;
  if (out.disjoint) return out;

  const std::size_t rank = rank_mod(rows, p);
  if (rank == 2) {
    out.same_line = true;
    out.point = Vec4{a1[0], a1[1], a1[2], 0};
    return out;
  }
  // alpha a1 + beta a2 - gamma b1 - delta b2 = 0
  ModMatrix cols(4, std::vector<std::uint64_t>(4));
  for (int i = 0; i < 4; ++i) {
    cols[i][0] = a1[i];
    cols[i][1] = a2[i];
    cols[i][2] = modp::sub(0, b1[i], p);
    cols[i][3] = modp::sub(0, b2[i], p);
  }
  const auto kernel = nullspace_mod(cols, p);
  const auto& k = kernel.front();
  std::vector<std::uint64_t> pt(4);
  for (int i = 0; i < 4; ++i) pt[i] = modp::add(modp::mul(k[0], a1[i], p), modp::mul(k[1], a2[i], p), p);
  pt = normalize_projective(pt, p);
  out.point = Vec4{pt[0], pt[1], pt[2], pt[3]};
  return out;
}

}  // namespace cubiccert
