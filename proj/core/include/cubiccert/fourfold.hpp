#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubiccert/cubic_surface.hpp"
#include "cubiccert/modp.hpp"
#include "cubiccert/typecalc.hpp"

namespace cubiccert {

/// A plane in P^5 over GF(p), given by a 6x3 matrix whose columns are the
/// images of the u, v, t basis vectors.
struct PlaneInP5 {
  std::uint64_t p = 0;
  std::array<std::array<std::uint64_t, 3>, 6> matrix{};
  /// f(rows 0-2) - g(rows 3-5) as a polynomial in (u, v, t); zero for a contained plane.
  Polynomial residual;
};

/// The plane swept by l on f - t^3 = 0 and m on g - t^3 = 0 inside f(z0,z1,z2) - g(z3,z4,z5) = 0.
/// Throws PrimeMismatch, RankDeficient, or PreconditionViolated if containment fails.
PlaneInP5 build_plane(const LineOnSurface& l, const CubicForm& f, const LineOnSurface& m, const CubicForm& g);

struct PlanePair {
  bool disjoint = false;
  std::uint64_t det = 0;
};

/// Two planes of P^5 are disjoint iff the 6x6 matrix [A | B] is invertible.
PlanePair planes_disjoint(const PlaneInP5& a, const PlaneInP5& b);

struct DisjointWitness {
  std::uint64_t p = 0;
  LineOnSurface l, m, l1, m1;
  PlaneInP5 plane1, plane2;
  std::uint64_t det6 = 0;
  /// l1 against l: disjoint.
  LineMeeting l1_vs_l;
  /// m1 against m: a single point with t != 0.
  LineMeeting m1_vs_m;
};

/// l1 misses l, and m1 meets m in one point off the plane t = 0.
bool witness_hypotheses(const LineMeeting& l1_vs_l, const LineMeeting& m1_vs_m);

/// Fixes l = lines_s[0], m = lines_t[0] and returns the first (l1, m1) in sort
/// order meeting the hypotheses. Throws NoWitnessFound when none exists or when
/// the first candidate's planes meet.
DisjointWitness find_disjoint_witness(const std::vector<LineOnSurface>& lines_s, const CubicForm& f,
                                      const std::vector<LineOnSurface>& lines_t, const CubicForm& g);

struct WitnessScan {
  std::uint64_t p = 0;
  /// (l, m) base pairs visited.
  std::uint64_t base_pairs = 0;
  /// (l, m, l1, m1) meeting the hypotheses.
  std::uint64_t hypothesis_pairs = 0;
  std::uint64_t disjoint_pairs = 0;
  /// Indices (l, m, l1, m1) whose planes meet despite the hypotheses.
  std::vector<std::array<std::size_t, 4>> counterexamples;
  /// Quadruples with l1 = l, and how many of those were (wrongly) disjoint.
  std::uint64_t shared_line_pairs = 0;
  std::uint64_t shared_line_disjoint = 0;
  /// Every plane built passed the containment replay.
  std::uint64_t planes_built = 0;
};

/// Scans every (l1, m1) for the first (l, m), or for every (l, m) when `all_bases` is set.
WitnessScan scan_disjoint_witnesses(const std::vector<LineOnSurface>& lines_s, const CubicForm& f,
                                    const std::vector<LineOnSurface>& lines_t, const CubicForm& g, bool all_bases);

/// A linear form on P^{2n-1}; block i uses slots 2i, 2i+1.
using LinearForm = std::vector<std::uint64_t>;

struct LinearSpacesReport {
  std::uint64_t p = 0;
  /// Per block, the three linear factors over GF(p), first nonzero coefficient 1.
  std::vector<std::array<std::array<std::uint64_t, 2>, 3>> factors;
  std::vector<std::pair<std::size_t, std::size_t>> choice;
  std::vector<LinearForm> first;
  std::vector<LinearForm> second;
  bool first_contained = false;
  bool second_contained = false;
  std::size_t rank = 0;
  /// rank == 2n: the two P^{n-1} do not meet.
  bool disjoint = false;
};

/// Builds L = {l_i = 0} and L' = {l'_i = 0} from one factor pair per binary block.
/// `choice` defaults to factors (0, 1) in every block. Throws BlockNotSplit,
/// RepeatedFactor, BadPrime, or TooFewVariables (fewer than 2 blocks).
LinearSpacesReport disjoint_linear_spaces_2type(const std::vector<CubicForm>& blocks, std::uint64_t p,
                                                std::vector<std::pair<std::size_t, std::size_t>> choice = {});

/// Reads f in 2n variables as a sum of binary forms in the slot pairs (2i, 2i+1).
/// Throws OutsideTheorem when a term mixes two pairs or the arity is odd.
std::vector<CubicForm> slot_pair_blocks(const CubicForm& f);

/// Smallest prime >= from, at least 5, over which every binary block splits into distinct factors.
std::uint64_t find_splitting_prime(const std::vector<CubicForm>& blocks, std::uint64_t from = 5);

/// Certificate leaf recording rationality from a pair of disjoint linear spaces.
Certificate rationality_witness_certificate(const TypeSignature& t);

}  // namespace cubiccert
