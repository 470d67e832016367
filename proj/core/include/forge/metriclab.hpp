#pragma once

#include <array>
#include <vector>

#include "forge/fanpoly.hpp"

namespace forge::metriclab {

using Vec2d = std::array<double, 2>;

struct Mat2d {
  // [[a, b], [c, d]]
  double a = 0, b = 0, c = 0, d = 0;
  double det() const { return a * d - b * c; }
};

struct MomentResult {
  Vec2d y{};
  double residual = 0;
  int iterations = 0;
};

struct SolitonResult {
  Vec2d b{};
  double residual = 0;
  int iterations = 0;
};

// Divided difference of exp over the given nodes (repeated nodes allowed);
// series evaluation after centering when the spread is small, confluent
// Newton table otherwise.
double exp_divided_difference(std::vector<double> nodes);

// Floating-point lab for the canonical (Guillemin) metric of a labeled
// polytope: l_k(x) = <x, u_k> - lambda_k with u_k the marked facet normals.
class MetricProblem {
 public:
  // Requires h strictly upper convex so Sigma_h is full-dimensional and the
  // rays are exactly its facets.
  static MetricProblem from_fan(const fanpoly::AugmentedFan& fan,
                                const fanpoly::SupportFunction& h);
  static MetricProblem from_polytope(const fanpoly::RationalPolytope& poly);

  int facet_count() const { return static_cast<int>(normals_.size()); }
  const std::vector<Vec2d>& vertices() const { return vertices_; }

  bool interior(const Vec2d& y) const;
  // G(y) = 1/2 sum l_k log l_k; gradient 1/2 sum u_k (1 + log l_k);
  // Hessian 1/2 sum u_k u_k^T / l_k, positive definite on the interior.
  double potential_G(const Vec2d& y) const;
  Vec2d grad_G(const Vec2d& y) const;
  Mat2d hess_G(const Vec2d& y) const;

  // Solve grad G(y) = x by damped Newton (feasibility backtracking); the
  // inverse of the moment map. Throws NumericError on non-convergence.
  MomentResult moment(const Vec2d& x, double tol = 1e-12, int max_iter = 400) const;
  // F(x) = <x, y> - G(y) at y = moment(x); the dual potential.
  double potential_F(const Vec2d& x, double tol = 1e-12) const;
  Mat2d hess_F(const Vec2d& x, double tol = 1e-12) const;

  // Tensor-grid quadrature of det Hess F over [-R, R]^2; converges to the
  // Euclidean volume of the polytope.
  double numeric_volume(double cutoff_r = 12.0, int grid = 200) const;

  // Barycenter via fan triangulation with per-triangle closed forms.
  Vec2d futaki_quadrature() const;

  // Exact-in-b integrals over the polytope via divided differences of exp
  // on the triangulation: integral of e^{<b,y>}, y e^{<b,y>}, y y^T e^{<b,y>}.
  double integral_exp(const Vec2d& b) const;
  Vec2d integral_y_exp(const Vec2d& b) const;
  Mat2d integral_yy_exp(const Vec2d& b) const;

  // Newton solve of integral(y e^{<b,y>}) = 0; b = 0 iff the barycenter
  // vanishes. Throws NumericError on non-convergence.
  SolitonResult soliton_vector(double tol = 1e-12, int max_iter = 100) const;

 private:
  std::vector<Vec2d> normals_;
  std::vector<double> offsets_;
  std::vector<Vec2d> vertices_;  // ccw
};

double pairwise_sum(std::vector<double>& values);

}  // namespace forge::metriclab
