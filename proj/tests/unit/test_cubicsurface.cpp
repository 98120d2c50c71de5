#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "cubiccert/cubic_surface.hpp"
#include "cubiccert/errors.hpp"
#include "cubiccert/modp.hpp"
#include "support/generators.hpp"

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

// Every GF(p)-point of the line, normalized.
std::set<std::vector<std::uint64_t>> points_of(const LineOnSurface& l) {
  const std::uint64_t p = l.p;
  const auto s = l.span();
  std::set<std::vector<std::uint64_t>> out;
  auto add = [&](std::uint64_t u, std::uint64_t t) {
    std::vector<std::uint64_t> v(4);
    for (std::size_t i = 0; i < 4; ++i) v[i] = (u * s[0][i] + t * s[1][i]) % p;
    out.insert(normalize_projective(v, p));
  };
  add(1, 0);
  for (std::uint64_t u = 0; u < p; ++u) add(u, 1);
  return out;
}

bool points_on_surface(const LineOnSurface& l, const CubicForm& f) {
  const Polynomial fp = f.poly().reduce_mod(l.p);
  for (const auto& pt : points_of(l)) {
    const std::uint64_t t3 = pt[3] * pt[3] % l.p * pt[3] % l.p;
    const std::vector<std::uint64_t> xyz(pt.begin(), pt.begin() + 3);
    if (evaluate_mod(fp, xyz) != t3) return false;
  }
  return true;
}

class FermatLines : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FermatLines, TwentySevenDistinctCanonicalLines) {
  const std::uint64_t p = GetParam();
  const auto lines = find_lines(fermat(), p);
  ASSERT_EQ(lines.size(), 27u);
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
  EXPECT_EQ(std::set<LineOnSurface>(lines.begin(), lines.end()).size(), 27u);
  for (const auto& l : lines) {
    EXPECT_TRUE(l.is_canonical());
    EXPECT_TRUE(line_on_surface(l, fermat()));
    EXPECT_TRUE(points_on_surface(l, fermat()));
  }
}

TEST_P(FermatLines, IncidenceMatchesPointSets) {
  const std::uint64_t p = GetParam();
  const auto lines = find_lines(fermat(), p);
  std::vector<std::set<std::vector<std::uint64_t>>> pts;
  for (const auto& l : lines) pts.push_back(points_of(l));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::size_t meets = 0;
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (i == j) continue;
      std::vector<std::vector<std::uint64_t>> common;
      std::set_intersection(pts[i].begin(), pts[i].end(), pts[j].begin(), pts[j].end(), std::back_inserter(common));
      const LineMeeting r = lines_meet(lines[i], lines[j]);
      EXPECT_EQ(r.disjoint, common.empty());
      EXPECT_EQ(r.disjoint, r.det != 0);
      if (!common.empty()) {
        ++meets;
        ASSERT_EQ(common.size(), 1u);
        ASSERT_TRUE(r.point.has_value());
        EXPECT_EQ(std::vector<std::uint64_t>(r.point->begin(), r.point->end()), common.front());
      }
    }
    // every line on a smooth cubic surface meets exactly ten others
    EXPECT_EQ(meets, 10u) << i;
  }
}

INSTANTIATE_TEST_SUITE_P(SplitPrimes, FermatLines, ::testing::Values(13, 19, 31));

TEST(FindLines, RejectsPrimesOutsideOneModThree) {
  EXPECT_EQ(code_of([] { find_lines(fermat(), 5); }), ErrorCode::BadPrime);
  EXPECT_EQ(code_of([] { find_lines(fermat(), 11); }), ErrorCode::BadPrime);
  EXPECT_EQ(code_of([] { find_lines(fermat(), 9); }), ErrorCode::InvalidPrime);
}

TEST(FindLines, RejectsBadReduction) {
  EXPECT_EQ(code_of([] { find_lines(parse_form("x0^3 + x1^3 + 7*x2^3"), 7); }), ErrorCode::BadPrime);
}

TEST(FindLines, RejectsSingularAndNonTernary) {
  EXPECT_EQ(code_of([] { find_lines(parse_form("(x0 + x1)^3 + x2^3"), 13); }), ErrorCode::SingularInput);
  EXPECT_EQ(code_of([] { find_lines(parse_form("x0^3 + x1^3"), 13); }), ErrorCode::NotTernary);
}

TEST(FindLines, ReportsPartialSplitting) {
  try {
    find_lines(parse_form("x0^3 + 2*x1^3 + 3*x2^3"), 13);
    FAIL() << "expected a partial count";
  } catch (const NotAllLinesRationalError& e) {
    EXPECT_LT(e.found(), 27u);
    EXPECT_EQ(e.next_prime(), 19u);
  }
}

TEST(Eckardt, NineCoplanarTriplesOnTheCurve) {
  const std::uint64_t p = 13;
  const auto lines = find_lines(fermat(), p);
  const auto groups = group_by_eckardt(lines, fermat());
  ASSERT_EQ(groups.size(), 9u);
  const Polynomial fp = fermat().poly().reduce_mod(p);
  std::set<LineOnSurface> seen;
  for (const auto& g : groups) {
    EXPECT_EQ(g.rank, 3u);
    EXPECT_EQ(g.base_point[3], 0u);
    EXPECT_EQ(evaluate_mod(fp, std::vector<std::uint64_t>(g.base_point.begin(), g.base_point.begin() + 3)), 0u);
    for (std::size_t a = 0; a < 3; ++a) {
      seen.insert(g.lines[a]);
      for (std::size_t b = a + 1; b < 3; ++b) {
        const LineMeeting r = lines_meet(g.lines[a], g.lines[b]);
        ASSERT_FALSE(r.disjoint);
        ASSERT_TRUE(r.point.has_value());
        EXPECT_EQ((*r.point)[3], 0u);
        EXPECT_EQ(*r.point, g.base_point);
      }
    }
  }
  EXPECT_EQ(seen.size(), 27u);
}

TEST(Eckardt, RejectsIncompleteSets) {
  auto lines = find_lines(fermat(), 13);
  lines.pop_back();
  EXPECT_EQ(code_of([&] { group_by_eckardt(lines, fermat()); }), ErrorCode::UnexpectedGrouping);
}

TEST(LinesMeet, SelfMeetingAndPrimeMismatch) {
  const auto a = find_lines(fermat(), 13);
  const auto b = find_lines(fermat(), 19);
  const LineMeeting self = lines_meet(a[4], a[4]);
  EXPECT_TRUE(self.same_line);
  EXPECT_FALSE(self.disjoint);
  EXPECT_EQ(self.det, 0u);
  EXPECT_EQ(code_of([&] { lines_meet(a[0], b[0]); }), ErrorCode::PrimeMismatch);
}

TEST(Canonical, IdempotentAndInvariantUnderReparametrization) {
  testing::Gen gen(3);
  const std::uint64_t p = 19;
  for (const auto& l : find_lines(fermat(), p)) {
    EXPECT_EQ(l.canonical().canonical(), l.canonical());
    for (int k = 0; k < 10; ++k) {
      const auto alpha = static_cast<std::uint64_t>(gen.int_in(1, static_cast<long>(p) - 1));
      const auto beta = static_cast<std::uint64_t>(gen.int_in(0, static_cast<long>(p) - 1));
      // u -> alpha u + beta t
      LineOnSurface r = l;
      for (std::size_t i = 0; i < 3; ++i) {
        r.direction[i] = alpha * l.direction[i] % p;
        r.offset[i] = (l.offset[i] + beta * l.direction[i]) % p;
      }
      EXPECT_TRUE(line_on_surface(r, fermat()));
      EXPECT_EQ(r.canonical(), l);
      EXPECT_EQ(points_of(r), points_of(l));
    }
  }
}

TEST(Membership, PerturbedLineFails) {
  const auto lines = find_lines(fermat(), 13);
  LineOnSurface l = lines[0];
  const auto pivot = static_cast<std::size_t>(std::find(l.direction.begin(), l.direction.end(), 1u) - l.direction.begin());
  const std::size_t other = (pivot + 1) % 3;
  l.offset[other] = (l.offset[other] + 1) % 13;
  EXPECT_EQ(line_on_surface(l, fermat()), points_on_surface(l, fermat()));
  EXPECT_FALSE(line_on_surface(l, fermat()));
}

}  // namespace
}  // namespace cubiccert
