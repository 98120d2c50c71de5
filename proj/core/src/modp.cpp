#include "cubiccert/modp.hpp"

#include <limits>
#include <utility>

#include "cubiccert/errors.hpp"
#include "cubiccert/scalar.hpp"

namespace cubiccert {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_mod(ModMatrix& m, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m[pr][c] % p == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[r], m[pr]);
    const std::uint64_t inv = modp::inv(m[r][c] % p, p);
    for (auto& x : m[r]) x = modp::mul(x % p, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] % p == 0) continue;
      const std::uint64_t factor = m[i][c] % p;
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] = modp::sub(m[i][j] % p, modp::mul(factor, m[r][j], p), p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> rref_rational(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[r], m[pr]);
    const mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class factor = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_mod(ModMatrix m, std::uint64_t p) { return rref_mod(m, p).size(); }

std::uint64_t det_mod(ModMatrix m, std::uint64_t p) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "det_mod needs a square matrix");
  }
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = c;
    while (pr < n && m[pr][c] % p == 0) ++pr;
    if (pr == n) return 0;
    if (pr != c) {
      std::swap(m[pr], m[c]);
      det = modp::sub(0, det, p);
    }
    const std::uint64_t pivot = m[c][c] % p;
    det = modp::mul(det, pivot, p);
    const std::uint64_t inv = modp::inv(pivot, p);
    for (std::size_t i = c + 1; i < n; ++i) {
      const std::uint64_t factor = modp::mul(m[i][c] % p, inv, p);
      if (factor == 0) continue;
      for (std::size_t j = c; j < n; ++j) {
        m[i][j] = modp::sub(m[i][j] % p, modp::mul(factor, m[c][j] % p, p), p);
      }
    }
  }
  return det;
}

std::vector<std::vector<std::uint64_t>> nullspace_mod(ModMatrix m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> basis;
  if (m.empty()) return basis;
  const std::size_t cols = m.front().size();
  const auto pivots = rref_mod(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = modp::sub(0, m[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

mpq_class det_rational(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "det_rational needs a square matrix");
  }
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = c;
    while (pr < n && m[pr][c] == 0) ++pr;
    if (pr == n) return 0;
    if (pr != c) {
      std::swap(m[pr], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const mpq_class factor = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= factor * m[c][j];
    }
  }
  return det;
}

std::vector<std::vector<mpq_class>> nullspace_rational(RationalMatrix m) {
  std::vector<std::vector<mpq_class>> basis;
  if (m.empty()) return basis;
  const std::size_t cols = m.front().size();
  const auto pivots = rref_rational(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::uint64_t projective_point_count(std::size_t n, std::uint64_t p) {
  if (n == 0) return 0;
  std::uint64_t total = 0;
  std::uint64_t term = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() - term) return std::numeric_limits<std::uint64_t>::max();
    total += term;
    if (i + 1 < n) {
      if (term > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
      term *= p;
    }
  }
  return total;
}

void for_each_projective_point(std::size_t n, std::uint64_t p,
                               const std::function<bool(std::span<const std::uint64_t>)>& visit) {
  std::vector<std::uint64_t> v(n, 0);
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    // Odometer over the coordinates after the leading one.
    while (true) {
      if (!visit(v)) return;
      bool advanced = false;
      for (std::size_t i = n; i > lead + 1;) {
        --i;
        if (++v[i] < p) {
          advanced = true;
          break;
        }
        v[i] = 0;
      }
      if (!advanced) break;
    }
  }
}

std::vector<std::uint64_t> normalize_projective(std::vector<std::uint64_t> v, std::uint64_t p) {
  for (auto x : v) {
    if (x % p != 0) {
      const std::uint64_t inv = modp::inv(x % p, p);
      for (auto& y : v) y = modp::mul(y % p, inv, p);
      break;
    }
  }
  return v;
}

}  // namespace cubiccert
