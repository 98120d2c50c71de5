#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "cubiccert/errors.hpp"
#include "cubiccert/fourfold.hpp"
#include "cubiccert/modp.hpp"
#include "cubiccert/typecalc.hpp"

namespace cubiccert {
namespace {

const CubicForm& fermat() {
  static const CubicForm f = parse_form("x0^3 + x1^3 + x2^3");
  return f;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

// Leibniz expansion; slow but shares nothing with the elimination routines.
std::uint64_t det_by_permutations(const std::array<std::array<std::uint64_t, 6>, 6>& a, std::uint64_t p) {
  std::array<std::size_t, 6> perm;
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t pos = 0, neg = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = i + 1; j < 6; ++j) inversions += perm[i] > perm[j];
    }
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < 6; ++i) prod = prod * a[i][perm[i]] % p;
    (inversions % 2 ? neg : pos) += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return (pos % p + p - neg % p) % p;
}

std::uint64_t joint_det(const PlaneInP5& a, const PlaneInP5& b) {
  std::array<std::array<std::uint64_t, 6>, 6> m{};
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      m[r][c] = a.matrix[r][c];
      m[r][c + 3] = b.matrix[r][c];
    }
  }
  return det_by_permutations(m, a.p);
}

// Every point of the plane satisfies f(z0,z1,z2) = g(z3,z4,z5).
bool plane_points_on_fourfold(const PlaneInP5& pl, const CubicForm& f, const CubicForm& g) {
  const std::uint64_t p = pl.p;
  const Polynomial fp = f.poly().reduce_mod(p);
  const Polynomial gp = g.poly().reduce_mod(p);
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) {
      for (std::uint64_t c = 0; c < p; ++c) {
        std::vector<std::uint64_t> z(6);
        for (std::size_t r = 0; r < 6; ++r) {
          z[r] = (a * pl.matrix[r][0] + b * pl.matrix[r][1] + c * pl.matrix[r][2]) % p;
        }
        const std::vector<std::uint64_t> left(z.begin(), z.begin() + 3), right(z.begin() + 3, z.end());
        if (evaluate_mod(fp, left) != evaluate_mod(gp, right)) return false;
      }
    }
  }
  return true;
}

TEST(Planes, EveryPairSpansAContainedPlane) {
  const auto lines = find_lines(fermat(), 13);
  for (const auto& l : lines) {
    for (const auto& m : lines) {
      const PlaneInP5 pl = build_plane(l, fermat(), m, fermat());
      ASSERT_TRUE(pl.residual.is_zero());
      std::vector<std::vector<std::uint64_t>> cols(3, std::vector<std::uint64_t>(6));
      for (std::size_t r = 0; r < 6; ++r) {
        for (std::size_t c = 0; c < 3; ++c) cols[c][r] = pl.matrix[r][c];
      }
      ASSERT_EQ(rank_mod(cols, 13), 3u);
    }
  }
  // the point enumeration is slower; spot-check a spread of pairs
  for (std::size_t i = 0; i < lines.size(); i += 4) {
    for (std::size_t j = 0; j < lines.size(); j += 5) {
      EXPECT_TRUE(plane_points_on_fourfold(build_plane(lines[i], fermat(), lines[j], fermat()), fermat(), fermat()));
    }
  }
}

TEST(Planes, ErrorsOnMismatchedInputs) {
  const auto a = find_lines(fermat(), 13);
  const auto b = find_lines(fermat(), 19);
  EXPECT_EQ(code_of([&] { build_plane(a[0], fermat(), b[0], fermat()); }), ErrorCode::PrimeMismatch);
  const CubicForm other = parse_form("x0^3 + 2*x1^3 + x2^3");
  EXPECT_EQ(code_of([&] { build_plane(a[0], other, a[0], fermat()); }), ErrorCode::PreconditionViolated);
}

TEST(Planes, SelfAndSharedLinePairsMeet) {
  const auto lines = find_lines(fermat(), 13);
  const PlaneInP5 a = build_plane(lines[0], fermat(), lines[0], fermat());
  const PlanePair self = planes_disjoint(a, a);
  EXPECT_FALSE(self.disjoint);
  EXPECT_EQ(self.det, 0u);
  for (std::size_t j = 1; j < lines.size(); ++j) {
    const PlaneInP5 b = build_plane(lines[0], fermat(), lines[j], fermat());
    EXPECT_FALSE(planes_disjoint(a, b).disjoint) << j;
  }
}

TEST(Witness, FirstWitnessAgreesWithLeibniz) {
  const auto lines = find_lines(fermat(), 13);
  const DisjointWitness w = find_disjoint_witness(lines, fermat(), lines, fermat());
  EXPECT_EQ(w.l, lines[0]);
  EXPECT_EQ(w.m, lines[0]);
  EXPECT_TRUE(w.l1_vs_l.disjoint);
  EXPECT_FALSE(w.m1_vs_m.disjoint);
  ASSERT_TRUE(w.m1_vs_m.point.has_value());
  EXPECT_NE((*w.m1_vs_m.point)[3], 0u);
  EXPECT_NE(w.det6, 0u);
  EXPECT_EQ(w.det6, joint_det(w.plane1, w.plane2));
  EXPECT_EQ(planes_disjoint(w.plane1, w.plane2).det, w.det6);
}

TEST(Witness, ExhaustiveScanHasNoCounterexample) {
  const auto lines = find_lines(fermat(), 13);
  const WitnessScan scan = scan_disjoint_witnesses(lines, fermat(), lines, fermat(), true);
  EXPECT_EQ(scan.base_pairs, 27u * 27u);
  EXPECT_TRUE(scan.counterexamples.empty());
  EXPECT_EQ(scan.disjoint_pairs, scan.hypothesis_pairs);
  EXPECT_GT(scan.shared_line_pairs, 0u);
  EXPECT_EQ(scan.shared_line_disjoint, 0u);
  EXPECT_GT(scan.planes_built, 0u);

  // independent count: per l the lines missing it, per m the lines meeting it off t = 0
  std::uint64_t expected = 0;
  for (const auto& l : lines) {
    std::uint64_t miss = 0;
    for (const auto& l1 : lines) miss += lines_meet(l1, l).disjoint;
    for (const auto& m : lines) {
      std::uint64_t hit = 0;
      for (const auto& m1 : lines) {
        const LineMeeting r = lines_meet(m1, m);
        hit += !r.disjoint && !r.same_line && r.point && (*r.point)[3] != 0;
      }
      expected += miss * hit;
    }
  }
  EXPECT_EQ(scan.hypothesis_pairs, expected);
  EXPECT_EQ(expected, 27u * 27u * 16u * 8u);
}

TEST(Witness, SpotCheckDeterminantsAgainstLeibniz) {
  const auto lines = find_lines(fermat(), 13);
  for (std::size_t i = 0; i < lines.size(); i += 3) {
    for (std::size_t j = 0; j < lines.size(); j += 7) {
      const PlaneInP5 a = build_plane(lines[0], fermat(), lines[1], fermat());
      const PlaneInP5 b = build_plane(lines[i], fermat(), lines[j], fermat());
      EXPECT_EQ(planes_disjoint(a, b).det, joint_det(a, b));
    }
  }
}

std::vector<CubicForm> binary(std::initializer_list<const char*> texts) {
  std::vector<CubicForm> out;
  for (const char* t : texts) out.push_back(parse_form(t));
  return out;
}

// Every point of {first = 0} lies on the sum of the blocks.
bool space_contained(const std::vector<LinearForm>& forms, const std::vector<CubicForm>& blocks, std::uint64_t p) {
  const std::size_t dim = 2 * blocks.size();
  std::vector<std::vector<std::uint64_t>> rows(forms.begin(), forms.end());
  const auto basis = nullspace_mod(rows, p);
  if (basis.size() != blocks.size()) return false;
  std::vector<Polynomial> reduced;
  for (const auto& b : blocks) reduced.push_back(b.poly().reduce_mod(p));
  std::vector<std::uint64_t> coeff(basis.size(), 0);
  while (true) {
    std::vector<std::uint64_t> z(dim, 0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      for (std::size_t i = 0; i < dim; ++i) z[i] = (z[i] + coeff[k] * basis[k][i]) % p;
    }
    std::uint64_t total = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      total += evaluate_mod(reduced[b], std::vector<std::uint64_t>{z[2 * b], z[2 * b + 1]});
    }
    if (total % p != 0) return false;
    std::size_t k = 0;
    while (k < coeff.size() && ++coeff[k] == p) coeff[k++] = 0;
    if (k == coeff.size()) break;
  }
  return true;
}

TEST(LinearSpaces, CubeDifferencesAtSeven) {
  const auto blocks = binary({"x0^3 - x1^3", "x0^3 - x1^3"});
  const LinearSpacesReport r = disjoint_linear_spaces_2type(blocks, 7);
  using F = std::array<std::array<std::uint64_t, 2>, 3>;
  ASSERT_EQ(r.factors.size(), 2u);
  EXPECT_EQ(r.factors[0], (F{{{1, 6}, {1, 5}, {1, 3}}}));
  EXPECT_EQ(r.factors[1], r.factors[0]);
  EXPECT_TRUE(r.first_contained);
  EXPECT_TRUE(r.second_contained);
  EXPECT_EQ(r.rank, 4u);
  EXPECT_TRUE(r.disjoint);
  EXPECT_TRUE(space_contained(r.first, blocks, 7));
  EXPECT_TRUE(space_contained(r.second, blocks, 7));
}

TEST(LinearSpaces, SharedFactorsMeet) {
  const auto blocks = binary({"x0^3 - x1^3", "x0^3 - x1^3"});
  const LinearSpacesReport same = disjoint_linear_spaces_2type(blocks, 7, {{0, 0}, {1, 1}});
  EXPECT_EQ(same.rank, 2u);
  EXPECT_FALSE(same.disjoint);
  const LinearSpacesReport half = disjoint_linear_spaces_2type(blocks, 7, {{0, 1}, {2, 2}});
  EXPECT_EQ(half.rank, 3u);
  EXPECT_FALSE(half.disjoint);
  EXPECT_TRUE(half.first_contained);
}

TEST(LinearSpaces, ThreeBlocksAtASplittingPrime) {
  const auto blocks = binary({"x0^3 - x1^3", "x0^3 - 2*x1^3", "x0^2*x1 + x0*x1^2"});
  const std::uint64_t p = find_splitting_prime(blocks);
  EXPECT_EQ(p, 31u);
  const LinearSpacesReport r = disjoint_linear_spaces_2type(blocks, p);
  EXPECT_EQ(r.rank, 6u);
  EXPECT_TRUE(r.disjoint);
  EXPECT_TRUE(space_contained(r.first, blocks, p));
  EXPECT_TRUE(space_contained(r.second, blocks, p));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Polynomial bp = blocks[b].poly().reduce_mod(p);
    for (const auto& fac : r.factors[b]) {
      // the factor c0 u + c1 v vanishes at (c1, -c0)
      EXPECT_EQ(evaluate_mod(bp, std::vector<std::uint64_t>{fac[1], (p - fac[0]) % p}), 0u);
    }
  }
  // no smaller prime at least 5 splits all three
  for (std::uint64_t q = 5; q < p; ++q) {
    if (!is_prime(q)) continue;
    EXPECT_ANY_THROW(disjoint_linear_spaces_2type(blocks, q)) << q;
  }
}

TEST(LinearSpaces, Errors) {
  EXPECT_EQ(code_of([] { disjoint_linear_spaces_2type(binary({"x0^3 - 2*x1^3", "x0^3 - x1^3"}), 7); }),
            ErrorCode::BlockNotSplit);
  EXPECT_EQ(code_of([] { disjoint_linear_spaces_2type(binary({"x0^2*x1", "x0^3 - x1^3"}), 7); }),
            ErrorCode::RepeatedFactor);
  EXPECT_EQ(code_of([] { disjoint_linear_spaces_2type(binary({"x0^3 - x1^3"}), 7); }), ErrorCode::TooFewVariables);
  EXPECT_EQ(code_of([] { disjoint_linear_spaces_2type(binary({"x0^3 - x1^3", "x0^3 - x1^3"}), 7, {{0, 3}, {0, 1}}); }),
            ErrorCode::IndexOutOfRange);
}

TEST(SlotPairs, SplitsAndRejects) {
  const auto blocks = slot_pair_blocks(parse_form("x0^3 - x1^3 + x2^3 + x2*x3^2 + x3^3"));
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0].to_string(), "x0^3 - x1^3");
  EXPECT_EQ(blocks[1].to_string(), "x0^3 + x0*x1^2 + x1^3");
  EXPECT_EQ(code_of([] { slot_pair_blocks(parse_form("x0^3 + x1*x2^2 + x3^3")); }), ErrorCode::OutsideTheorem);
  EXPECT_EQ(code_of([] { slot_pair_blocks(parse_form("x0^3 + x1^3 + x2^3")); }), ErrorCode::OutsideTheorem);
}

TEST(RationalityLeaf, ValidOnlyWhereTheWitnessApplies) {
  for (const auto& t : {TypeSignature({3, 3}), TypeSignature({2, 2}), TypeSignature({2, 2, 2})}) {
    const Certificate c = rationality_witness_certificate(t);
    EXPECT_TRUE(validate_certificate(c).valid) << t.to_string();
    EXPECT_EQ(c.conclusion, Statement::rational(t));
  }
  EXPECT_ANY_THROW(rationality_witness_certificate(TypeSignature({3, 1})));
  EXPECT_ANY_THROW(rationality_witness_certificate(TypeSignature({3, 3, 3})));
}

}  // namespace
}  // namespace cubiccert
