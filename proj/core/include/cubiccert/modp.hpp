#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace cubiccert {

using ModMatrix = std::vector<std::vector<std::uint64_t>>;
using RationalMatrix = std::vector<std::vector<mpq_class>>;

std::size_t rank_mod(ModMatrix m, std::uint64_t p);
/// Square matrices only.
std::uint64_t det_mod(ModMatrix m, std::uint64_t p);
/// Basis of {x : m x = 0}; each basis vector has a 1 in its own free column.
std::vector<std::vector<std::uint64_t>> nullspace_mod(ModMatrix m, std::uint64_t p);

mpq_class det_rational(RationalMatrix m);
std::vector<std::vector<mpq_class>> nullspace_rational(RationalMatrix m);

/// Number of points of P^{n-1}(GF(p)), saturating at UINT64_MAX.
std::uint64_t projective_point_count(std::size_t n, std::uint64_t p);

/// Visits canonical representatives (first nonzero coordinate 1) of every point
/// of P^{n-1}(GF(p)). Stops early when the visitor returns false.
void for_each_projective_point(std::size_t n, std::uint64_t p,
                               const std::function<bool(std::span<const std::uint64_t>)>& visit);

/// Scales v so its first nonzero entry is 1; zero vectors are returned unchanged.
std::vector<std::uint64_t> normalize_projective(std::vector<std::uint64_t> v, std::uint64_t p);

}  // namespace cubiccert
