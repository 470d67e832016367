#include <doctest.h>

#include "forge/errors.hpp"
#include "forge/lattice.hpp"
#include "oracles.hpp"

using namespace forge;
using forge::lattice::cone_is_smooth;
using forge::lattice::fundamental_parallelepiped_points;

namespace {

const IntMat kExampleOmega{{1, 0, 1, 1}, {0, 1, 1, 2}};

}  // namespace

TEST_CASE("deleted-column minors of the worked example") {
  auto deltas = lattice::deleted_pair_minors(kExampleOmega);
  CHECK(deltas.at({0, 1}) == 1);
  CHECK(deltas.at({0, 2}) == -1);
  CHECK(deltas.at({0, 3}) == -1);
  CHECK(deltas.at({1, 2}) == 2);
  CHECK(deltas.at({1, 3}) == 1);
  CHECK(deltas.at({2, 3}) == 1);
}

TEST_CASE("retained minors: identity and one-row matrices") {
  auto id = lattice::retained_minors(IntMat::identity(2));
  CHECK(id.size() == 1);
  CHECK(id.at({0, 1}) == 1);

  IntMat row{{1, 5, 7}};  // (1, a, b)
  auto deltas = lattice::deleted_pair_minors(row);
  CHECK(deltas.at({1, 2}) == 1);
  CHECK(deltas.at({0, 2}) == 5);
  CHECK(deltas.at({0, 1}) == 7);
}

TEST_CASE("integer kernel of the worked example") {
  IntMat kernel = integer_kernel(kExampleOmega);
  REQUIRE(kernel.rows() == 2);
  CHECK(testing::kernel_is_valid(kExampleOmega, kernel));
  CHECK(testing::in_row_span(kernel, IntVec{-1, -1, 1, 0}));
  CHECK(testing::in_row_span(kernel, IntVec{-1, -2, 0, 1}));
}

TEST_CASE("integer kernel edge cases") {
  CHECK(integer_kernel(IntMat{{1}}).rows() == 0);
  IntMat zero(1, 2);
  IntMat kernel = integer_kernel(zero);
  CHECK(kernel.rows() == 2);
  CHECK(testing::kernel_is_valid(zero, kernel));
}

TEST_CASE("kernel correctness and saturation on random matrices") {
  testing::Rng rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = rng.uniform(1, 3), cols = rng.uniform(1, 5);
    IntMat a = testing::random_int_matrix(rng, rows, cols, -5, 5);
    CHECK(testing::kernel_is_valid(a, integer_kernel(a)));
  }
}

TEST_CASE("cone smoothness: conifold facet, CP^2 cone, primitive rays") {
  CHECK(cone_is_smooth({IntVec{1, 0, 1}, IntVec{0, 1, 1}}));
  CHECK_FALSE(cone_is_smooth({IntVec{1, 0, 1}, IntVec{0, 1, 1}, IntVec{-1, -1, 1}}));
  CHECK(cone_is_smooth({IntVec{1, 1}}));
  CHECK(cone_is_smooth({IntVec{-1, 1}}));
  CHECK_THROWS_AS(cone_is_smooth({IntVec{1, 0}, IntVec{2, 0}}), ValidationError);
}

TEST_CASE("CP^2 cone obstruction is (0,0,1)") {
  auto points = fundamental_parallelepiped_points(
      {IntVec{1, 0, 1}, IntVec{0, 1, 1}, IntVec{-1, -1, 1}});
  // |det| = 3, so three points including the origin and the obstruction.
  CHECK(points.size() == 3);
  CHECK(std::find(points.begin(), points.end(), IntVec{0, 0, 0}) != points.end());
  CHECK(std::find(points.begin(), points.end(), IntVec{0, 0, 1}) != points.end());
}

TEST_CASE("fundamental parallelepiped examples") {
  CHECK(fundamental_parallelepiped_points({IntVec{1, 0}, IntVec{0, 1}}) ==
        std::vector<IntVec>{IntVec{0, 0}});
  auto two = fundamental_parallelepiped_points({IntVec{1, 1}, IntVec{-1, 1}});
  CHECK(two == std::vector<IntVec>{IntVec{0, 0}, IntVec{0, 1}});
  CHECK(fundamental_parallelepiped_points({IntVec{2, 0}, IntVec{0, 1}}).size() == 2);
}

TEST_CASE("parallelepiped point count equals |det| for square generator sets") {
  testing::Rng rng(7);
  int done = 0;
  while (done < 40) {
    IntMat g = testing::random_int_matrix(rng, 2, 2, -4, 4);
    Int det = determinant(g);
    if (det == 0) continue;
    auto pts = fundamental_parallelepiped_points({g.row(0), g.row(1)});
    CHECK(Int(static_cast<long>(pts.size())) == abs(det));
    ++done;
  }
}

TEST_CASE("cross-oracle: minor-gcd smoothness equals trivial parallelepiped") {
  testing::Rng rng(99);
  int done = 0;
  while (done < 80) {
    int r = rng.uniform(1, 3);
    std::vector<IntVec> gens;
    for (int i = 0; i < r; ++i) {
      IntVec v{Int(rng.uniform(-3, 3)), Int(rng.uniform(-3, 3)), Int(rng.uniform(-3, 3))};
      if (is_zero(v)) continue;
      gens.push_back(v);
    }
    if (static_cast<int>(gens.size()) < r) continue;
    if (!lattice::generators_independent(gens)) continue;
    bool smooth = cone_is_smooth(gens);
    auto pts = fundamental_parallelepiped_points(gens);
    bool trivial = pts.size() == 1 && is_zero(pts[0]);
    CHECK(smooth == trivial);
    ++done;
  }
}

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  Rat q(2, -4);
  CHECK(numerator(q) == -1);
  CHECK(denominator(q) == 2);
  CHECK(Rat(7, 7) == 1);
}

TEST_CASE("determinant, Hermite and Smith form sanity") {
  CHECK(determinant(IntMat{{2, 0}, {0, 3}}) == 6);
  CHECK(determinant(IntMat{{1, 2}, {2, 4}}) == 0);
  CHECK(determinant(IntMat(0, 0)) == 1);

  testing::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    IntMat a = testing::random_int_matrix(rng, 3, 3, -6, 6);
    HermiteResult hr = hermite_form(a);
    CHECK(abs(determinant(hr.u)) == 1);
    CHECK(hr.u.mul(a) == hr.h);
    SmithResult snf = smith_form(a);
    CHECK(snf.u.mul(a).mul(snf.v) == snf.s);
    Int prod = 1;
    for (const Int& d : snf.divisors) prod *= d;
    CHECK(prod == abs(determinant(a)));
    for (size_t i = 1; i < snf.divisors.size(); ++i)
      CHECK(snf.divisors[i] % snf.divisors[i - 1] == 0);
  }
}
