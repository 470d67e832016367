#pragma once

#include <map>
#include <utility>
#include <vector>

#include "forge/linalg.hpp"

namespace forge::lattice {

// Rational polyhedral cone given by its generating lattice vectors. All cones
// handled here are simplicial: generators linearly independent over Q.
struct LatticeCone {
  std::vector<IntVec> generators;
  int ambient_dim = 0;
};

bool generators_independent(const std::vector<IntVec>& gens);

// Strong convexity (sigma cap -sigma = {0}); for independent generators this
// is automatic, so the test is rank(gens) == #gens.
bool is_strongly_convex(const std::vector<IntVec>& gens);

// True iff every lattice point of the real cone is a non-negative integer
// combination of the generators. For a simplicial cone this holds exactly
// when the generators form a Z-basis of the saturation of their span, i.e.
// the gcd of the maximal minors of the generator matrix is 1 (then each
// generator is automatically primitive; both are checked). Equivalence with
// the parallelepiped enumeration is cross-asserted in the test suite.
bool cone_is_smooth(const std::vector<IntVec>& generators);

// All lattice points {sum c_i g_i : 0 <= c_i < 1}; the brute-force oracle
// behind cone_is_smooth and the stabilizer orders. Cardinality equals
// |det(generator matrix)| for square generator sets. Exponential in |det|,
// guarded against oversized bounding boxes.
std::vector<IntVec> fundamental_parallelepiped_points(const std::vector<IntVec>& generators);

// All k x k column-submatrix determinants of a k x n matrix, keyed by the
// ascending tuple of retained column indices (0-based).
std::map<std::vector<int>, Int> retained_minors(const IntMat& omega);

// The complementary convention Delta_{p,q}: minor obtained by deleting
// columns p and q (0-based); requires n == k + 2.
Int minor_deleting(const IntMat& omega, int p, int q);
std::map<std::pair<int, int>, Int> deleted_pair_minors(const IntMat& omega);

}  // namespace forge::lattice
