#pragma once

#include <array>
#include <complex>
#include <vector>

#include "forge/lattice.hpp"
#include "forge/linalg.hpp"

namespace forge::reduction {

// Integral k x n weight matrix driving the torus reduction. For the toric
// 7-manifold case n = k + 2, with the normal form [I_k | a | b] accessors.
class WeightMatrix {
 public:
  explicit WeightMatrix(IntMat omega);
  static WeightMatrix normal_form(const std::vector<Int>& a, const std::vector<Int>& b);

  int k() const { return omega_.rows(); }
  int n() const { return omega_.cols(); }
  const IntMat& matrix() const { return omega_; }
  bool is_normal_form() const;
  Int a(int i) const;  // column k entries
  Int b(int i) const;  // column k+1 entries

 private:
  IntMat omega_;
};

bool is_nondegenerate(const WeightMatrix& w);

// d = gcd of all maximal minors equals 1.
bool is_reduced(const WeightMatrix& w);

// gcd over every length-(k+1) column subset of its k+1 facet minors equals
// the determinantal divisor d. For normal-form input the closed criterion
// (a_i, b_i nonzero and coprime, no (a_i,b_i) = +-(a_j,b_j)) is evaluated as
// well and the two answers are asserted to agree.
bool is_admissible(const WeightMatrix& w);

// The normal-form criterion on its own, for cross-oracle tests.
bool normal_form_admissible(const std::vector<Int>& a, const std::vector<Int>& b);

// |G_Omega| = sum over spanning trees T of K_{k+2} of prod |Delta_{s,t}|,
// with Delta_{s,t} the deleted-column minors. Enumeration over edge subsets
// with a union-find tree test; falls back to the matrix-tree determinant for
// sizes past the enumeration guard (both are exact).
Int torsion_order(const WeightMatrix& w);
Int torsion_order_enumerated(const WeightMatrix& w);   // throws past the guard
Int torsion_order_matrix_tree(const WeightMatrix& w);  // weighted matrix-tree determinant

struct CohomologyTable {
  std::array<int, 8> betti{};  // b_0..b_7
  Int torsion;                 // |G_Omega| in degree 4
};
CohomologyTable cohomology_table(const WeightMatrix& w);

// Z-basis of ker(Omega) as rows: the weights of the residual T^{n-k} action.
// Raw material only; no claim that these reproduce the isotropy data.
IntMat toric_quotient_map(const WeightMatrix& w);

// One quaternionic moment-map value per row of Omega, split into the
// i-component and the complex jk-part (u = z + w j coordinates).
struct QuaternionResidual {
  double i_part = 0;
  std::complex<double> jk{0, 0};
  double norm() const;
};

std::vector<QuaternionResidual> moment_residual(const WeightMatrix& w,
                                                const std::vector<std::complex<double>>& z,
                                                const std::vector<std::complex<double>>& wj);

// | |z|^2 + |w|^2 - 1 |, the distance from the sphere constraint.
double sphere_defect(const std::vector<std::complex<double>>& z,
                     const std::vector<std::complex<double>>& wj);

}  // namespace forge::reduction
