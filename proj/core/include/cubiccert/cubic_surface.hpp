#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubiccert/cubic_form.hpp"

namespace cubiccert {

using Vec3 = std::array<std::uint64_t, 3>;
using Vec4 = std::array<std::uint64_t, 4>;

/// The line (u, t) -> (a1 u + a0 t, b1 u + b0 t, c1 u + c0 t, t) on f(x0,x1,x2) - t^3 = 0 over GF(p).
struct LineOnSurface {
  std::uint64_t p = 0;
  Vec3 direction{};
  Vec3 offset{};

  /// Direction scaled so its first nonzero entry is 1, offset with a 0 at that pivot.
  LineOnSurface canonical() const;
  bool is_canonical() const { return canonical() == *this; }
  /// The two spanning vectors (direction, 0) and (offset, 1) in GF(p)^4.
  std::array<Vec4, 2> span() const;

  friend auto operator<=>(const LineOnSurface&, const LineOnSurface&) = default;
};

/// Replays f(a(u,t), b(u,t), c(u,t)) - t^3 = 0 symbolically over GF(p).
bool line_on_surface(const LineOnSurface& l, const CubicForm& f);

/// All lines of f - t^3 = 0 over GF(p), sorted by direction then offset.
/// Throws BadPrime (p != 1 mod 3, bad reduction), SingularInput, or
/// NotAllLinesRationalError when fewer than 27 are defined over GF(p).
std::vector<LineOnSurface> find_lines(const CubicForm& f, std::uint64_t p);

/// Three coplanar lines through a point of the curve f = 0 in the plane t = 0.
struct EckardtGroup {
  Vec4 base_point{};
  std::array<LineOnSurface, 3> lines;
  /// Rank of {direction, offset1, offset2, offset3} in GF(p)^4.
  std::size_t rank = 0;
};

/// Partitions 27 lines by direction. Throws UnexpectedGrouping unless there are
/// 9 classes of 3, each coplanar, each based on the curve f = 0.
std::vector<EckardtGroup> group_by_eckardt(const std::vector<LineOnSurface>& lines, const CubicForm& f);

struct LineMeeting {
  bool disjoint = false;
  /// Determinant of the 4x4 matrix of spanning vectors.
  std::uint64_t det = 0;
  /// Common point, first nonzero coordinate 1; for identical lines, the point at t = 0.
  std::optional<Vec4> point;
  bool same_line = false;
};

/// Throws PrimeMismatch for lines over different fields.
LineMeeting lines_meet(const LineOnSurface& a, const LineOnSurface& b);

}  // namespace cubiccert
