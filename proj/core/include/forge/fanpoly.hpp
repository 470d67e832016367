#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forge/linalg.hpp"

namespace forge::fanpoly {

struct Vec2 {
  Int x;
  Int y;
  bool operator==(const Vec2&) const = default;
  Vec2 operator-() const { return {-x, -y}; }
};

struct RVec2 {
  Rat x;
  Rat y;
  bool operator==(const RVec2&) const = default;
};

inline Int cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Int dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rat dot(const RVec2& m, const Vec2& n) { return m.x * Rat(n.x) + m.y * Rat(n.y); }
inline Int l1_norm(const Vec2& a) { return abs(a.x) + abs(a.y); }
Vec2 primitive(const Vec2& v);
Int content(const Vec2& v);

// Integer values h(n(rho)), one per ray, aligned with the fan's ray order.
// SF(Delta*) is identified with Z^{Delta(1)} throughout; the finer Z-valuedness
// of l_sigma on the sublattices Z{p_1,...,p_r} is not modeled separately.
struct SupportFunction {
  std::vector<Int> values;
};

// Complete simplicial fan in Z^2 (Z^1 for the handful of curve cases) with a
// marked lattice point on every ray. Rays are stored in canonical
// counterclockwise order starting from the smallest angle in [0, 2pi); for
// n = 2 the maximal cones are the consecutive ray pairs.
class AugmentedFan {
 public:
  AugmentedFan() = default;  // empty placeholder; operations require a built fan

  static AugmentedFan surface(std::vector<Vec2> marked_rays);
  static std::pair<AugmentedFan, SupportFunction> surface_with_support(
      const std::vector<std::pair<Vec2, Int>>& marked);
  // Complete fan in Z^1: two rays with opposite signs.
  static AugmentedFan line(const Int& positive_mark, const Int& negative_mark);

  int dim() const { return dim_; }
  int ray_count() const { return static_cast<int>(rays_.size()); }
  const std::vector<Vec2>& rays() const;  // dim 2 only
  const Vec2& ray(int i) const;
  const std::vector<IntVec>& rays_generic() const { return generic_; }

  bool operator==(const AugmentedFan&) const = default;

 private:
  int dim_ = 2;
  std::vector<Vec2> rays_;
  std::vector<IntVec> generic_;
};

// Exact convex polytope Sigma_h in M_R cut out by <m, n(rho)> >= h(n(rho)).
// Possibly empty or lower-dimensional; vertices kept in counterclockwise
// cyclic order with a deterministic starting vertex.
class RationalPolytope {
 public:
  struct Constraint {
    Vec2 normal;  // the marked point n(rho)
    Int offset;   // h(n(rho))
    Int label;    // marking multiplicity a_rho = content(n(rho))
  };

  static RationalPolytope from_constraints(std::vector<Constraint> constraints);
  // Polygon from an explicit counterclockwise vertex list with facet labels
  // (label i sits on edge v_i -> v_{i+1}); constraints are derived.
  static RationalPolytope from_vertices(std::vector<RVec2> vertices,
                                        std::vector<Int> edge_labels = {});

  bool empty() const { return vertices_.empty(); }
  bool full_dimensional() const { return vertices_.size() >= 3; }
  const std::vector<RVec2>& vertices() const { return vertices_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  // For full-dimensional polytopes: index into constraints() of the facet
  // supporting edge v_i -> v_{i+1}.
  const std::vector<int>& edge_constraints() const { return edge_constraints_; }
  Int edge_label(int i) const;

 private:
  std::vector<Constraint> constraints_;
  std::vector<RVec2> vertices_;
  std::vector<int> edge_constraints_;
};

enum class Verdict { Einstein, SolitonOnly };

struct SymmetryInfo {
  bool symmetric = false;          // W0 fixes only the origin
  bool special_symmetric = false;  // -I in W0
  int group_order = 1;
};

struct FanoReport {
  bool is_fano = false;
  int index = 1;
  bool is_symmetric = false;
  bool is_special_symmetric = false;
  RVec2 barycenter;
  Rat volume;
  Verdict einstein = Verdict::SolitonOnly;
};

RationalPolytope polytope_from_support(const AugmentedFan& fan, const SupportFunction& h);

// h upper convex with distinct linear pieces on adjacent maximal cones:
// checked wall by wall by evaluating l_sigma on the opposite cone's extra
// generator.
bool is_strictly_upper_convex(const AugmentedFan& fan, const SupportFunction& h);

// Marked points are exactly the vertices, in convex position, of their hull
// with 0 interior; equivalently -k is strictly upper convex.
bool is_fano(const AugmentedFan& fan);

SupportFunction canonical_support(const AugmentedFan& fan);      // k = +1 on rays
SupportFunction anticanonical_support(const AugmentedFan& fan);  // -k

// Largest m such that the class of -k in SF(Delta*)/M is divisible by m,
// i.e. m h(n(rho)) = -1 + <f, n(rho)> has a solution (h, f). Candidates m
// divide the gcd of coefficient sums over the ray relation lattice (any
// relation sum c_rho n(rho) = 0 forces m | sum c_rho); each candidate is
// settled by a complete search over f mod m.
int index(const AugmentedFan& fan);

struct IndexCertificate {
  int m = 1;
  Vec2 f;
  SupportFunction h;  // m*h = -k + <f, .>
};
IndexCertificate index_with_certificate(const AugmentedFan& fan);

// W0 = {gamma in GL(2,Z) : gamma permutes the marked rays}, enumerated
// exactly from images of two independent marked points.
SymmetryInfo symmetry(const AugmentedFan& fan);

Rat volume(const RationalPolytope& poly);  // 0 for empty/degenerate
RVec2 barycenter(const RationalPolytope& poly);

FanoReport einstein_verdict(const AugmentedFan& fan);

// Inverse of polytope_from_support on strictly upper convex data: normal fan
// with markings a_rho * (primitive inward normal) and offsets h = facet value.
std::pair<AugmentedFan, SupportFunction> fan_from_polytope(const RationalPolytope& poly);

// Sigma_h cap M: monomial basis of H^0(X, L_h).
std::vector<Vec2> lattice_points(const RationalPolytope& poly);

int second_betti(const AugmentedFan& fan);  // rays - 2 for surfaces

}  // namespace forge::fanpoly
