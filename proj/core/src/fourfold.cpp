#include "cubiccert/fourfold.hpp"

#include "cubiccert/errors.hpp"
#include "cubiccert/smoothness.hpp"

namespace cubiccert {

namespace {

void require_same_prime(std::uint64_t a, std::uint64_t b) {
  if (a != b) throw Error(ErrorCode::PrimeMismatch, "GF(" + std::to_string(a) + ") vs GF(" + std::to_string(b) + ")");
}

ModMatrix as_rows(const PlaneInP5& plane) {
  ModMatrix m;
  for (const auto& row : plane.matrix) m.emplace_back(row.begin(), row.end());
  return m;
}

// Projective roots of a binary cubic over GF(p): (r, 1) for r ascending, then (1, 0).
std::vector<std::array<std::uint64_t, 2>> binary_roots(const Polynomial& fp, std::uint64_t p) {
  std::vector<std::array<std::uint64_t, 2>> roots;
  for (std::uint64_t r = 0; r < p; ++r) {
    const std::array<std::uint64_t, 2> pt{r, 1};
    if (evaluate_mod(fp, pt) == 0) roots.push_back(pt);
  }
  const std::array<std::uint64_t, 2> inf{1, 0};
  if (evaluate_mod(fp, inf) == 0) roots.push_back(inf);
  return roots;
}

// The form vanishing at (r0 : r1), i.e. r1 u - r0 v, scaled to a leading 1.
std::array<std::uint64_t, 2> factor_of_root(const std::array<std::uint64_t, 2>& r, std::uint64_t p) {
  auto v = normalize_projective({r[1], modp::sub(0, r[0], p)}, p);
  return {v[0], v[1]};
}

void require_binary(const std::vector<CubicForm>& blocks) {
  if (blocks.size() < 2) throw Error(ErrorCode::TooFewVariables, "need at least two binary blocks");
  for (const auto& b : blocks) {
    if (b.nvars() != 2) throw Error(ErrorCode::InvalidArgument, "block " + b.to_string() + " is not binary");
  }
}

bool block_splits(const CubicForm& b, std::uint64_t p) {
  const mpq_class disc = binary_cubic_discriminant(b);
  if (disc == 0 || modp::from_rational(disc, p) == 0) return false;
  return binary_roots(b.poly().reduce_mod(p), p).size() == 3;
}

bool divides_denominator(const CubicForm& b, std::uint64_t p) {
  return denominator_lcm(b.poly()) % static_cast<unsigned long>(p) == 0;
}

}  // namespace

PlaneInP5 build_plane(const LineOnSurface& l, const CubicForm& f, const LineOnSurface& m, const CubicForm& g) {
  require_same_prime(l.p, m.p);
  const std::uint64_t p = l.p;
  if (f.nvars() != 3 || g.nvars() != 3) throw Error(ErrorCode::NotTernary, "planes need two ternary forms");
  PlaneInP5 plane;
  plane.p = p;
  for (int i = 0; i < 3; ++i) {
    plane.matrix[i] = {l.direction[i], 0, l.offset[i]};
    plane.matrix[3 + i] = {0, m.direction[i], m.offset[i]};
  }
  if (rank_mod(as_rows(plane), p) != 3) throw Error(ErrorCode::RankDeficient, "plane matrix has rank below 3");

  const Domain field = Domain::prime_field(p);
  const Polynomial u = Polynomial::variable(3, field, 0);
  const Polynomial v = Polynomial::variable(3, field, 1);
  const Polynomial t = Polynomial::variable(3, field, 2);
  std::vector<Polynomial> left, right;
  for (int i = 0; i < 3; ++i) {
    left.push_back(u * Scalar::residue(p, l.direction[i]) + t * Scalar::residue(p, l.offset[i]));
    right.push_back(v * Scalar::residue(p, m.direction[i]) + t * Scalar::residue(p, m.offset[i]));
  }
  plane.residual = substitute(f.poly().reduce_mod(p), left) - substitute(g.poly().reduce_mod(p), right);
  if (!plane.residual.is_zero()) {
    throw Error(ErrorCode::PreconditionViolated, "plane is not contained in the fourfold: residual " + plane.residual.to_string());
  }
  return plane;
}

PlanePair planes_disjoint(const PlaneInP5& a, const PlaneInP5& b) {
  require_same_prime(a.p, b.p);
  ModMatrix m(6, std::vector<std::uint64_t>(6));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 3; ++j) {
      m[i][j] = a.matrix[i][j];
      m[i][3 + j] = b.matrix[i][j];
    }
  }
  PlanePair out;
  out.det = det_mod(std::move(m), a.p);
  out.disjoint = out.det != 0;
  return out;
}

bool witness_hypotheses(const LineMeeting& l1_vs_l, const LineMeeting& m1_vs_m) {
  return l1_vs_l.disjoint && !m1_vs_m.disjoint && !m1_vs_m.same_line && m1_vs_m.point && (*m1_vs_m.point)[3] != 0;
}

DisjointWitness find_disjoint_witness(const std::vector<LineOnSurface>& lines_s, const CubicForm& f,
                                      const std::vector<LineOnSurface>& lines_t, const CubicForm& g) {
  if (lines_s.size() != 27 || lines_t.size() != 27) {
    throw Error(ErrorCode::PreconditionViolated, "need 27 lines on each surface");
  }
  require_same_prime(lines_s.front().p, lines_t.front().p);
  const LineOnSurface& l = lines_s.front();
  const LineOnSurface& m = lines_t.front();
  for (const auto& l1 : lines_s) {
    const LineMeeting a = lines_meet(l1, l);
    if (!a.disjoint) continue;
    for (const auto& m1 : lines_t) {
      const LineMeeting b = lines_meet(m1, m);
      if (!witness_hypotheses(a, b)) continue;
      DisjointWitness w{l.p, l, m, l1, m1, build_plane(l, f, m, g), build_plane(l1, f, m1, g), 0, a, b};
      const PlanePair pp = planes_disjoint(w.plane1, w.plane2);
      if (!pp.disjoint) throw Error(ErrorCode::NoWitnessFound, "planes meet although the line hypotheses hold");
      w.det6 = pp.det;
      return w;
    }
  }
  throw Error(ErrorCode::NoWitnessFound, "no (l1, m1) satisfies the line hypotheses over GF(" + std::to_string(l.p) + ")");
}

WitnessScan scan_disjoint_witnesses(const std::vector<LineOnSurface>& lines_s, const CubicForm& f,
                                    const std::vector<LineOnSurface>& lines_t, const CubicForm& g, bool all_bases) {
  if (lines_s.empty() || lines_t.empty()) throw Error(ErrorCode::PreconditionViolated, "no lines to scan");
  require_same_prime(lines_s.front().p, lines_t.front().p);
  const std::size_t ns = lines_s.size();
  const std::size_t nt = lines_t.size();

  std::vector<std::vector<LineMeeting>> meet_s(ns), meet_t(nt);
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < ns; ++j) meet_s[i].push_back(lines_meet(lines_s[j], lines_s[i]));
  }
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t j = 0; j < nt; ++j) meet_t[i].push_back(lines_meet(lines_t[j], lines_t[i]));
  }
  std::vector<std::vector<PlaneInP5>> planes(ns);
  WitnessScan scan;
  scan.p = lines_s.front().p;
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      planes[i].push_back(build_plane(lines_s[i], f, lines_t[j], g));
      ++scan.planes_built;
    }
  }

  const std::size_t l_end = all_bases ? ns : 1;
  const std::size_t m_end = all_bases ? nt : 1;
  for (std::size_t l = 0; l < l_end; ++l) {
    for (std::size_t m = 0; m < m_end; ++m) {
      ++scan.base_pairs;
      for (std::size_t l1 = 0; l1 < ns; ++l1) {
        for (std::size_t m1 = 0; m1 < nt; ++m1) {
          if (l1 == l) {
            ++scan.shared_line_pairs;
            if (planes_disjoint(planes[l][m], planes[l1][m1]).disjoint) ++scan.shared_line_disjoint;
            continue;
          }
          if (!witness_hypotheses(meet_s[l][l1], meet_t[m][m1])) continue;
          ++scan.hypothesis_pairs;
          if (planes_disjoint(planes[l][m], planes[l1][m1]).disjoint) {
            ++scan.disjoint_pairs;
          } else {
            scan.counterexamples.push_back({l, m, l1, m1});
          }
        }
      }
    }
  }
  return scan;
}

LinearSpacesReport disjoint_linear_spaces_2type(const std::vector<CubicForm>& blocks, std::uint64_t p,
                                                std::vector<std::pair<std::size_t, std::size_t>> choice) {
  require_binary(blocks);
  Domain::prime_field(p);
  if (p < 5) throw Error(ErrorCode::BadPrime, "need p >= 5, got " + std::to_string(p));
  const std::size_t n = blocks.size();
  if (choice.empty()) choice.assign(n, {0, 1});
  if (choice.size() != n) throw Error(ErrorCode::InvalidArgument, "one factor pair per block is required");

  LinearSpacesReport out;
  out.p = p;
  out.choice = choice;
  for (std::size_t i = 0; i < n; ++i) {
    const CubicForm& b = blocks[i];
    if (divides_denominator(b, p)) throw Error(ErrorCode::BadPrime, "p divides a denominator of " + b.to_string());
    const mpq_class disc = binary_cubic_discriminant(b);
    if (disc == 0) throw Error(ErrorCode::RepeatedFactor, b.to_string() + " has a repeated factor");
    if (modp::from_rational(disc, p) == 0) {
      throw Error(ErrorCode::RepeatedFactor, b.to_string() + " acquires a repeated factor mod " + std::to_string(p));
    }
    const auto roots = binary_roots(b.poly().reduce_mod(p), p);
    if (roots.size() != 3) {
      throw Error(ErrorCode::BlockNotSplit, b.to_string() + " does not split over GF(" + std::to_string(p) + ")");
    }
    std::array<std::array<std::uint64_t, 2>, 3> fs{};
    for (int k = 0; k < 3; ++k) fs[k] = factor_of_root(roots[k], p);
    out.factors.push_back(fs);
    if (choice[i].first > 2 || choice[i].second > 2) throw Error(ErrorCode::IndexOutOfRange, "factor index above 2");
  }

  const Domain field = Domain::prime_field(p);
  auto build = [&](bool second, std::vector<LinearForm>& forms) {
    // Parametrize {l_i = 0}: block i is s_i times the root of its chosen factor.
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& fac = out.factors[i][second ? choice[i].second : choice[i].first];
      LinearForm form(2 * n, 0);
      form[2 * i] = fac[0];
      form[2 * i + 1] = fac[1];
      forms.push_back(form);
      const Polynomial s = Polynomial::variable(n, field, i);
      images.push_back(s * Scalar::residue(p, fac[1]));
      images.push_back(s * Scalar::residue(p, modp::sub(0, fac[0], p)));
    }
    Polynomial sum(2 * n, field);
    for (std::size_t i = 0; i < n; ++i) {
      const std::array<std::size_t, 2> slots{2 * i, 2 * i + 1};
      sum += blocks[i].poly().reduce_mod(p).embed(2 * n, slots);
    }
    return substitute(sum, images).is_zero();
  };
  out.first_contained = build(false, out.first);
  out.second_contained = build(true, out.second);

  ModMatrix combined;
  for (const auto& f : out.first) combined.push_back(f);
  for (const auto& f : out.second) combined.push_back(f);
  out.rank = rank_mod(combined, p);
  out.disjoint = out.rank == 2 * n;
  return out;
}

std::vector<CubicForm> slot_pair_blocks(const CubicForm& f) {
  const std::size_t arity = f.nvars();
  if (arity % 2 != 0) throw Error(ErrorCode::OutsideTheorem, "odd number of variables cannot pair into binary blocks");
  std::vector<Polynomial> parts(arity / 2, Polynomial(2, Domain::rationals()));
  for (const auto& [mono, c] : f.poly().terms()) {
    std::optional<std::size_t> pair;
    for (std::size_t i = 0; i < arity; ++i) {
      if (mono[i] == 0) continue;
      if (pair && *pair != i / 2) {
        throw Error(ErrorCode::OutsideTheorem, "a term mixes the variable pairs " + std::to_string(*pair) + " and " + std::to_string(i / 2));
      }
      pair = i / 2;
    }
    const std::size_t k = *pair;
    parts[k].add_term(Monomial{mono[2 * k], mono[2 * k + 1]}, c);
  }
  std::vector<CubicForm> out;
  for (auto& part : parts) out.emplace_back(std::move(part));
  return out;
}

std::uint64_t find_splitting_prime(const std::vector<CubicForm>& blocks, std::uint64_t from) {
  require_binary(blocks);
  for (const auto& b : blocks) {
    if (binary_cubic_discriminant(b) == 0) throw Error(ErrorCode::RepeatedFactor, b.to_string() + " has a repeated factor");
  }
  for (std::uint64_t p = std::max<std::uint64_t>(from, 5); p < 100000; ++p) {
    if (!is_prime(p)) continue;
    bool ok = true;
    for (const auto& b : blocks) ok = ok && !divides_denominator(b, p) && block_splits(b, p);
    if (ok) return p;
  }
  throw Error(ErrorCode::ExhaustedSearch, "no splitting prime below 100000");
}

Certificate rationality_witness_certificate(const TypeSignature& t) {
  Certificate c{Statement::rational(t), Rule::RationalityWitness, {}, std::string(rule_citation(Rule::RationalityWitness))};
  if (auto v = validate_certificate(c); !v) throw Error(ErrorCode::PreconditionViolated, v.reason);
  return c;
}

}  // namespace cubiccert
