#include "forge/metriclab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "forge/errors.hpp"

namespace forge::metriclab {

namespace {

double factorial(int n) {
  double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

double exp_divided_difference(std::vector<double> nodes) {
  const int n = static_cast<int>(nodes.size()) - 1;  // order
  if (n < 0) throw ValidationError("exp_divided_difference: no nodes");
  double mean = 0;
  for (double x : nodes) mean += x;
  mean /= static_cast<double>(nodes.size());
  double spread = 0;
  for (double& x : nodes) {
    x -= mean;
    spread = std::max(spread, std::abs(x));
  }

  if (spread <= 1.0) {
    // [y_0..y_n]exp = sum_{j>=0} h_j(y) / (n+j)! with h_j the complete
    // homogeneous symmetric polynomials of the centered nodes.
    constexpr int kTerms = 48;
    std::vector<double> h(kTerms, 0.0);
    h[0] = 1.0;
    for (double y : nodes)
      for (int j = 1; j < kTerms; ++j) h[j] += y * h[j - 1];
    double sum = 0, fact = factorial(n);
    for (int j = 0; j < kTerms; ++j) {
      sum += h[j] / fact;
      fact *= static_cast<double>(n + j + 1);
    }
    return std::exp(mean) * sum;
  }

  // Confluent Newton table; repeated nodes are exactly equal by construction.
  std::sort(nodes.begin(), nodes.end());
  const int m = static_cast<int>(nodes.size());
  std::vector<double> dd(nodes.size());
  for (int i = 0; i < m; ++i) dd[i] = std::exp(nodes[i]);
  for (int j = 1; j < m; ++j)
    for (int i = m - 1; i >= j; --i) {
      double lo = nodes[i - j], hi = nodes[i];
      if (hi == lo)
        dd[i] = std::exp(hi) / factorial(j);
      else
        dd[i] = (dd[i] - dd[i - 1]) / (hi - lo);
    }
  return std::exp(mean) * dd[m - 1];
}

MetricProblem MetricProblem::from_fan(const fanpoly::AugmentedFan& fan,
                                      const fanpoly::SupportFunction& h) {
  if (!fanpoly::is_strictly_upper_convex(fan, h))
    throw ValidationError("MetricProblem: support function must be strictly upper convex");
  return from_polytope(fanpoly::polytope_from_support(fan, h));
}

MetricProblem MetricProblem::from_polytope(const fanpoly::RationalPolytope& poly) {
  if (!poly.full_dimensional())
    throw ValidationError("MetricProblem: polytope must be full-dimensional");
  MetricProblem p;
  for (const auto& c : poly.constraints()) {
    p.normals_.push_back({to_double(c.normal.x), to_double(c.normal.y)});
    p.offsets_.push_back(to_double(c.offset));
  }
  for (const auto& v : poly.vertices()) p.vertices_.push_back({to_double(v.x), to_double(v.y)});
  return p;
}

bool MetricProblem::interior(const Vec2d& y) const {
  for (size_t k = 0; k < normals_.size(); ++k)
    if (normals_[k][0] * y[0] + normals_[k][1] * y[1] - offsets_[k] <= 0) return false;
  return true;
}

double MetricProblem::potential_G(const Vec2d& y) const {
  double g = 0;
  for (size_t k = 0; k < normals_.size(); ++k) {
    double l = normals_[k][0] * y[0] + normals_[k][1] * y[1] - offsets_[k];
    if (l <= 0) throw ValidationError("potential_G: point not in the interior");
    g += l * std::log(l);
  }
  return 0.5 * g;
}

Vec2d MetricProblem::grad_G(const Vec2d& y) const {
  Vec2d g{0, 0};
  for (size_t k = 0; k < normals_.size(); ++k) {
    double l = normals_[k][0] * y[0] + normals_[k][1] * y[1] - offsets_[k];
    if (l <= 0) throw ValidationError("grad_G: point not in the interior");
    double w = 1.0 + std::log(l);
    g[0] += 0.5 * normals_[k][0] * w;
    g[1] += 0.5 * normals_[k][1] * w;
  }
  return g;
}

Mat2d MetricProblem::hess_G(const Vec2d& y) const {
  Mat2d hh;
  for (size_t k = 0; k < normals_.size(); ++k) {
    double l = normals_[k][0] * y[0] + normals_[k][1] * y[1] - offsets_[k];
    if (l <= 0) throw ValidationError("hess_G: point not in the interior");
    double ux = normals_[k][0], uy = normals_[k][1];
    hh.a += 0.5 * ux * ux / l;
    hh.b += 0.5 * ux * uy / l;
    hh.d += 0.5 * uy * uy / l;
  }
  hh.c = hh.b;
  return hh;
}

MomentResult MetricProblem::moment(const Vec2d& x, double tol, int max_iter) const {
  Vec2d y{0, 0};
  for (const Vec2d& v : vertices_) {
    y[0] += v[0];
    y[1] += v[1];
  }
  y[0] /= static_cast<double>(vertices_.size());
  y[1] /= static_cast<double>(vertices_.size());

  double residual = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iter; ++it) {
    Vec2d g = grad_G(y);
    Vec2d r{g[0] - x[0], g[1] - x[1]};
    residual = std::hypot(r[0], r[1]);
    if (residual <= tol) return {y, residual, it};
    Mat2d hh = hess_G(y);
    double det = hh.det();
    if (det <= 0) throw NumericError("moment: Hessian lost positivity");
    Vec2d step{-(hh.d * r[0] - hh.b * r[1]) / det, -(-hh.c * r[0] + hh.a * r[1]) / det};
    // Backtrack until interior (the gradient blows up at the boundary) and
    // the residual does not increase.
    double t = 1.0;
    bool moved = false;
    for (int back = 0; back < 60; ++back) {
      Vec2d trial{y[0] + t * step[0], y[1] + t * step[1]};
      if (interior(trial)) {
        Vec2d gt = grad_G(trial);
        double rt = std::hypot(gt[0] - x[0], gt[1] - x[1]);
        if (rt < residual || t < 1e-8) {
          y = trial;
          moved = true;
          break;
        }
      }
      t *= 0.5;
    }
    if (!moved) throw NumericError("moment: line search failed");
  }
  throw NumericError("moment: Newton did not converge to tolerance " + std::to_string(tol) +
                     " (last residual " + std::to_string(residual) + ")");
}

double MetricProblem::potential_F(const Vec2d& x, double tol) const {
  MomentResult m = moment(x, tol);
  return x[0] * m.y[0] + x[1] * m.y[1] - potential_G(m.y);
}

Mat2d MetricProblem::hess_F(const Vec2d& x, double tol) const {
  MomentResult m = moment(x, tol);
  Mat2d hg = hess_G(m.y);
  double det = hg.det();
  return {hg.d / det, -hg.b / det, -hg.c / det, hg.a / det};
}

double pairwise_sum(std::vector<double>& values) {
  // Deterministic pairwise reduction.
  if (values.empty()) return 0;
  size_t n = values.size();
  while (n > 1) {
    size_t half = (n + 1) / 2;
    for (size_t i = 0; i < n / 2; ++i) values[i] = values[2 * i] + values[2 * i + 1];
    if (n % 2 == 1) values[n / 2] = values[n - 1];
    n = half;
  }
  return values[0];
}

double MetricProblem::numeric_volume(double cutoff_r, int grid) const {
  if (grid <= 0) throw ValidationError("numeric_volume: grid must be positive");
  const double cell = 2.0 * cutoff_r / grid;
  std::vector<double> cells;
  cells.reserve(static_cast<size_t>(grid) * grid);
  for (int i = 0; i < grid; ++i) {
    double x0 = -cutoff_r + (i + 0.5) * cell;
    for (int j = 0; j < grid; ++j) {
      double x1 = -cutoff_r + (j + 0.5) * cell;
      MomentResult m = moment({x0, x1});
      Mat2d hg = hess_G(m.y);
      cells.push_back(cell * cell / hg.det());  // det Hess F = 1 / det Hess G
    }
  }
  return pairwise_sum(cells);
}

namespace {

struct Triangle {
  Vec2d v0, v1, v2;
  double doubled_area;  // cross(v1 - v0, v2 - v0), positive for ccw
};

std::vector<Triangle> fan_triangulation(const std::vector<Vec2d>& verts) {
  std::vector<Triangle> tris;
  for (size_t i = 1; i + 1 < verts.size(); ++i) {
    Triangle t{verts[0], verts[i], verts[i + 1], 0};
    t.doubled_area = (t.v1[0] - t.v0[0]) * (t.v2[1] - t.v0[1]) -
                     (t.v1[1] - t.v0[1]) * (t.v2[0] - t.v0[0]);
    tris.push_back(t);
  }
  return tris;
}

}  // namespace

Vec2d MetricProblem::futaki_quadrature() const {
  std::vector<double> areas, mx, my;
  for (const Triangle& t : fan_triangulation(vertices_)) {
    double a = 0.5 * t.doubled_area;
    areas.push_back(a);
    mx.push_back(a * (t.v0[0] + t.v1[0] + t.v2[0]) / 3.0);
    my.push_back(a * (t.v0[1] + t.v1[1] + t.v2[1]) / 3.0);
  }
  double total = pairwise_sum(areas);
  return {pairwise_sum(mx) / total, pairwise_sum(my) / total};
}

double MetricProblem::integral_exp(const Vec2d& b) const {
  std::vector<double> parts;
  for (const Triangle& t : fan_triangulation(vertices_)) {
    double a0 = b[0] * t.v0[0] + b[1] * t.v0[1];
    double a1 = b[0] * t.v1[0] + b[1] * t.v1[1];
    double a2 = b[0] * t.v2[0] + b[1] * t.v2[1];
    parts.push_back(t.doubled_area * exp_divided_difference({a0, a1, a2}));
  }
  return pairwise_sum(parts);
}

Vec2d MetricProblem::integral_y_exp(const Vec2d& b) const {
  std::vector<double> px, py;
  for (const Triangle& t : fan_triangulation(vertices_)) {
    double al[3] = {b[0] * t.v0[0] + b[1] * t.v0[1], b[0] * t.v1[0] + b[1] * t.v1[1],
                    b[0] * t.v2[0] + b[1] * t.v2[1]};
    const Vec2d vs[3] = {t.v0, t.v1, t.v2};
    double sx = 0, sy = 0;
    for (int j = 0; j < 3; ++j) {
      // integral of lambda_j e^{<b,y>} = 2A * DD(exp; alpha with alpha_j doubled)
      double dd = exp_divided_difference({al[0], al[1], al[2], al[j]});
      sx += vs[j][0] * dd;
      sy += vs[j][1] * dd;
    }
    px.push_back(t.doubled_area * sx);
    py.push_back(t.doubled_area * sy);
  }
  return {pairwise_sum(px), pairwise_sum(py)};
}

Mat2d MetricProblem::integral_yy_exp(const Vec2d& b) const {
  std::vector<double> paa, pab, pbb;
  for (const Triangle& t : fan_triangulation(vertices_)) {
    double al[3] = {b[0] * t.v0[0] + b[1] * t.v0[1], b[0] * t.v1[0] + b[1] * t.v1[1],
                    b[0] * t.v2[0] + b[1] * t.v2[1]};
    const Vec2d vs[3] = {t.v0, t.v1, t.v2};
    double sxx = 0, sxy = 0, syy = 0;
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) {
        double dd = exp_divided_difference({al[0], al[1], al[2], al[j], al[l]});
        double c = (j == l ? 2.0 : 1.0) * dd;
        sxx += vs[j][0] * vs[l][0] * c;
        sxy += vs[j][0] * vs[l][1] * c;
        syy += vs[j][1] * vs[l][1] * c;
      }
    paa.push_back(t.doubled_area * sxx);
    pab.push_back(t.doubled_area * sxy);
    pbb.push_back(t.doubled_area * syy);
  }
  double xx = pairwise_sum(paa), xy = pairwise_sum(pab), yy = pairwise_sum(pbb);
  return {xx, xy, xy, yy};
}

SolitonResult MetricProblem::soliton_vector(double tol, int max_iter) const {
  Vec2d b{0, 0};
  double residual = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iter; ++it) {
    Vec2d g = integral_y_exp(b);
    residual = std::hypot(g[0], g[1]);
    if (residual <= tol) return {b, residual, it};
    Mat2d hh = integral_yy_exp(b);
    double det = hh.det();
    if (det <= 0) throw NumericError("soliton_vector: Hessian lost positivity");
    Vec2d step{-(hh.d * g[0] - hh.b * g[1]) / det, -(-hh.c * g[0] + hh.a * g[1]) / det};
    double t = 1.0;
    bool moved = false;
    double z0 = integral_exp(b);
    for (int back = 0; back < 60; ++back) {
      Vec2d trial{b[0] + t * step[0], b[1] + t * step[1]};
      double z = integral_exp(trial);
      Vec2d gt = integral_y_exp(trial);
      double rt = std::hypot(gt[0], gt[1]);
      // The objective integral e^{<b,y>} is strictly convex with the soliton
      // vector as its unique minimizer; accept on objective or residual gain.
      if (z < z0 || rt < residual) {
        b = trial;
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved) throw NumericError("soliton_vector: line search failed");
  }
  throw NumericError("soliton_vector: Newton did not converge (residual " +
                     std::to_string(residual) + ")");
}

}  // namespace forge::metriclab
