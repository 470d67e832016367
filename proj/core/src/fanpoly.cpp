#include "forge/fanpoly.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "forge/errors.hpp"

namespace forge::fanpoly {

Int content(const Vec2& v) { return gcd(v.x, v.y); }

Vec2 primitive(const Vec2& v) {
  Int g = content(v);
  if (g == 0) throw ValidationError("primitive: zero vector");
  return {v.x / g, v.y / g};
}

namespace {

// 0 for the open upper half-plane plus the positive x-axis, 1 otherwise;
// with the cross product this orders rays by angle in [0, 2pi).
int half_class(const Vec2& v) {
  if (v.y > 0 || (v.y == 0 && v.x > 0)) return 0;
  return 1;
}

bool angular_less(const Vec2& a, const Vec2& b) {
  int ca = half_class(a), cb = half_class(b);
  if (ca != cb) return ca < cb;
  return cross(a, b) > 0;
}

int rat_half_class(const RVec2& v) {
  if (v.y > 0 || (v.y == 0 && v.x > 0)) return 0;
  return 1;
}

Rat rat_cross(const RVec2& a, const RVec2& b) { return a.x * b.y - a.y * b.x; }

}  // namespace

AugmentedFan AugmentedFan::surface(std::vector<Vec2> marked_rays) {
  if (marked_rays.size() < 3) throw ValidationError("fan not complete: fewer than 3 rays");
  for (const Vec2& v : marked_rays)
    if (v.x == 0 && v.y == 0) throw ValidationError("fan has a zero ray");
  // A complete fan's rays cannot fit in a closed half-plane; a minimal
  // enclosing half-plane can be bounded by one of the rays, so testing the
  // two normals of every ray is exhaustive.
  for (const Vec2& r : marked_rays) {
    for (int s = 0; s < 2; ++s) {
      Vec2 w = s == 0 ? Vec2{-r.y, r.x} : Vec2{r.y, -r.x};
      bool half = true;
      for (const Vec2& v : marked_rays)
        if (dot(w, v) < 0) {
          half = false;
          break;
        }
      if (half) throw ValidationError("fan not complete: rays lie in a closed half-plane");
    }
  }
  std::sort(marked_rays.begin(), marked_rays.end(), angular_less);
  for (size_t i = 0; i + 1 < marked_rays.size(); ++i)
    if (half_class(marked_rays[i]) == half_class(marked_rays[i + 1]) &&
        cross(marked_rays[i], marked_rays[i + 1]) == 0)
      throw ValidationError("fan has parallel rays with equal direction");
  for (size_t i = 0; i < marked_rays.size(); ++i) {
    const Vec2& a = marked_rays[i];
    const Vec2& b = marked_rays[(i + 1) % marked_rays.size()];
    if (cross(a, b) <= 0) throw ValidationError("fan not complete: angular gap >= pi");
  }
  AugmentedFan fan;
  fan.dim_ = 2;
  fan.rays_ = std::move(marked_rays);
  fan.generic_.reserve(fan.rays_.size());
  for (const Vec2& v : fan.rays_) fan.generic_.push_back(IntVec{v.x, v.y});
  return fan;
}

std::pair<AugmentedFan, SupportFunction> AugmentedFan::surface_with_support(
    const std::vector<std::pair<Vec2, Int>>& marked) {
  std::vector<std::pair<Vec2, Int>> sorted = marked;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return angular_less(a.first, b.first); });
  std::vector<Vec2> rays;
  SupportFunction h;
  for (const auto& [v, val] : sorted) {
    rays.push_back(v);
    h.values.push_back(val);
  }
  AugmentedFan fan = surface(rays);
  if (fan.rays_ != rays) throw ValidationError("surface_with_support: ray order drift");
  return {fan, h};
}

AugmentedFan AugmentedFan::line(const Int& positive_mark, const Int& negative_mark) {
  if (positive_mark <= 0 || negative_mark >= 0)
    throw ValidationError("line fan: marks must have opposite signs");
  AugmentedFan fan;
  fan.dim_ = 1;
  fan.generic_ = {IntVec{positive_mark}, IntVec{negative_mark}};
  return fan;
}

const std::vector<Vec2>& AugmentedFan::rays() const {
  if (dim_ != 2) throw ValidationError("rays(): not a surface fan");
  return rays_;
}

const Vec2& AugmentedFan::ray(int i) const {
  if (dim_ != 2) throw ValidationError("ray(): not a surface fan");
  return rays_.at(i);
}

namespace {

void check_support(const AugmentedFan& fan, const SupportFunction& h) {
  if (static_cast<int>(h.values.size()) != fan.ray_count())
    throw ValidationError("support function length does not match ray count");
}

// Linear function l_sigma in M_Q with <l, a> = ha, <l, b> = hb.
RVec2 cone_linear(const Vec2& a, const Vec2& b, const Int& ha, const Int& hb) {
  Int d = cross(a, b);
  if (d == 0) throw ValidationError("cone_linear: degenerate cone");
  // Solve [a; b] l = (ha, hb) by Cramer on the transpose pairing.
  Rat lx = Rat(ha * b.y - hb * a.y, d);
  Rat ly = Rat(hb * a.x - ha * b.x, d);
  return {lx, ly};
}

struct VertexCandidate {
  RVec2 point;
  bool operator<(const VertexCandidate& o) const {
    if (point.x != o.point.x) return point.x < o.point.x;
    return point.y < o.point.y;
  }
  bool operator==(const VertexCandidate& o) const { return point == o.point; }
};

}  // namespace

RationalPolytope RationalPolytope::from_constraints(std::vector<Constraint> constraints) {
  RationalPolytope poly;
  poly.constraints_ = std::move(constraints);
  const auto& cs = poly.constraints_;
  const int n = static_cast<int>(cs.size());

  std::vector<VertexCandidate> candidates;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Int d = cross(cs[i].normal, cs[j].normal);
      if (d == 0) continue;
      // <m, n_i> = h_i and <m, n_j> = h_j.
      Rat x = Rat(cs[i].offset * cs[j].normal.y - cs[j].offset * cs[i].normal.y, d);
      Rat y = Rat(cs[j].offset * cs[i].normal.x - cs[i].offset * cs[j].normal.x, d);
      RVec2 m{x, y};
      bool feasible = true;
      for (int t = 0; t < n && feasible; ++t)
        if (dot(m, cs[t].normal) < Rat(cs[t].offset)) feasible = false;
      if (feasible) candidates.push_back({m});
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (candidates.empty()) return poly;

  std::vector<RVec2> verts;
  verts.reserve(candidates.size());
  for (const auto& c : candidates) verts.push_back(c.point);

  if (verts.size() >= 3) {
    // Counterclockwise around the centroid, then rotate the lexicographic
    // minimum to the front for deterministic output.
    RVec2 center{0, 0};
    for (const auto& v : verts) {
      center.x += v.x;
      center.y += v.y;
    }
    center.x /= Rat(static_cast<int>(verts.size()));
    center.y /= Rat(static_cast<int>(verts.size()));
    std::sort(verts.begin(), verts.end(), [&](const RVec2& a, const RVec2& b) {
      RVec2 da{a.x - center.x, a.y - center.y};
      RVec2 db{b.x - center.x, b.y - center.y};
      int ca = rat_half_class(da), cb = rat_half_class(db);
      if (ca != cb) return ca < cb;
      return rat_cross(da, db) > 0;
    });
    size_t start = 0;
    for (size_t i = 1; i < verts.size(); ++i)
      if (verts[i].x < verts[start].x ||
          (verts[i].x == verts[start].x && verts[i].y < verts[start].y))
        start = i;
    std::rotate(verts.begin(), verts.begin() + static_cast<long>(start), verts.end());
  }
  poly.vertices_ = std::move(verts);

  // Collinear "vertices" can appear when three constraints meet a common
  // point set; a polygon came out degenerate if its area vanishes.
  if (poly.vertices_.size() >= 3) {
    Rat area2 = 0;
    const auto& v = poly.vertices_;
    for (size_t i = 0; i < v.size(); ++i) {
      const RVec2& a = v[i];
      const RVec2& b = v[(i + 1) % v.size()];
      area2 += a.x * b.y - b.x * a.y;
    }
    if (area2 == 0) {
      // Collinear: keep only the lexicographic extremes of the segment.
      auto lex_less = [](const RVec2& a, const RVec2& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
      };
      RVec2 lo = poly.vertices_[0], hi = poly.vertices_[0];
      for (const RVec2& p : poly.vertices_) {
        if (lex_less(p, lo)) lo = p;
        if (lex_less(hi, p)) hi = p;
      }
      poly.vertices_ = (lo == hi) ? std::vector<RVec2>{lo} : std::vector<RVec2>{lo, hi};
    }
  }

  if (poly.full_dimensional()) {
    const auto& v = poly.vertices_;
    for (size_t i = 0; i < v.size(); ++i) {
      const RVec2& a = v[i];
      const RVec2& b = v[(i + 1) % v.size()];
      int found = -1;
      for (int t = 0; t < n; ++t)
        if (dot(a, cs[t].normal) == Rat(cs[t].offset) && dot(b, cs[t].normal) == Rat(cs[t].offset)) {
          found = t;
          break;
        }
      if (found < 0) throw ValidationError("polytope edge without supporting constraint");
      poly.edge_constraints_.push_back(found);
    }
  }
  return poly;
}

RationalPolytope RationalPolytope::from_vertices(std::vector<RVec2> vertices,
                                                 std::vector<Int> edge_labels) {
  if (vertices.size() < 3) throw ValidationError("from_vertices: need at least 3 vertices");
  if (edge_labels.empty()) edge_labels.assign(vertices.size(), Int(1));
  if (edge_labels.size() != vertices.size())
    throw ValidationError("from_vertices: label count must match edge count");

  std::vector<Constraint> cs;
  const size_t n = vertices.size();
  for (size_t i = 0; i < n; ++i) {
    const RVec2& a = vertices[i];
    const RVec2& b = vertices[(i + 1) % n];
    Rat dx = b.x - a.x, dy = b.y - a.y;
    if (dx == 0 && dy == 0) throw ValidationError("from_vertices: repeated vertex");
    Int t = lcm(denominator(dx), denominator(dy));
    IntVec dir{numerator(dx) * (t / denominator(dx)), numerator(dy) * (t / denominator(dy))};
    IntVec pd = forge::primitive(dir);
    Vec2 inward{-pd[1], pd[0]};  // interior on the left of a ccw edge
    if (edge_labels[i] <= 0) throw ValidationError("from_vertices: labels must be positive");
    Vec2 marked{inward.x * edge_labels[i], inward.y * edge_labels[i]};
    Rat off = dot(a, marked);
    if (denominator(off) != 1)
      throw ValidationError("from_vertices: non-integral support value on a facet");
    cs.push_back({marked, numerator(off), edge_labels[i]});
  }
  RationalPolytope poly = from_constraints(std::move(cs));
  if (!poly.full_dimensional())
    throw ValidationError("from_vertices: vertex list is not a full-dimensional ccw polygon");
  return poly;
}

Int RationalPolytope::edge_label(int i) const {
  if (!full_dimensional()) throw ValidationError("edge_label: polytope not full-dimensional");
  return constraints_[edge_constraints_.at(i)].label;
}

RationalPolytope polytope_from_support(const AugmentedFan& fan, const SupportFunction& h) {
  check_support(fan, h);
  std::vector<RationalPolytope::Constraint> cs;
  for (int i = 0; i < fan.ray_count(); ++i) {
    const Vec2& n = fan.ray(i);
    cs.push_back({n, h.values[i], content(n)});
  }
  return RationalPolytope::from_constraints(std::move(cs));
}

bool is_strictly_upper_convex(const AugmentedFan& fan, const SupportFunction& h) {
  check_support(fan, h);
  const int n = fan.ray_count();
  for (int i = 0; i < n; ++i) {
    const Vec2& a = fan.ray(i);
    const Vec2& b = fan.ray((i + 1) % n);
    const Vec2& c = fan.ray((i + 2) % n);
    RVec2 l = cone_linear(a, b, h.values[i], h.values[(i + 1) % n]);
    if (dot(l, c) <= Rat(h.values[(i + 2) % n])) return false;
  }
  return true;
}

bool is_fano(const AugmentedFan& fan) {
  const int n = fan.ray_count();
  for (int i = 0; i < n; ++i) {
    const Vec2& prev = fan.ray((i + n - 1) % n);
    const Vec2& cur = fan.ray(i);
    const Vec2& next = fan.ray((i + 1) % n);
    Vec2 e1{cur.x - prev.x, cur.y - prev.y};
    Vec2 e2{next.x - cur.x, next.y - cur.y};
    if (cross(e1, e2) <= 0) return false;
  }
  return true;
}

SupportFunction canonical_support(const AugmentedFan& fan) {
  return {std::vector<Int>(fan.ray_count(), Int(1))};
}

SupportFunction anticanonical_support(const AugmentedFan& fan) {
  return {std::vector<Int>(fan.ray_count(), Int(-1))};
}

namespace {

std::vector<Int> positive_divisors(Int g) {
  std::vector<Int> divs;
  for (Int d = 1; d * d <= g; ++d) {
    if (g % d == 0) {
      divs.push_back(d);
      if (d * d != g) divs.push_back(g / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

IndexCertificate index_with_certificate(const AugmentedFan& fan) {
  if (!is_fano(fan)) throw ValidationError("index: fan is not Fano");
  const int n = fan.ray_count();

  IntMat rays(n, 2);
  for (int i = 0; i < n; ++i) {
    rays.at(i, 0) = fan.ray(i).x;
    rays.at(i, 1) = fan.ray(i).y;
  }
  IntMat relations = integer_kernel(rays.transpose());
  Int g = 0;
  for (int i = 0; i < relations.rows(); ++i) {
    Int s = 0;
    for (int j = 0; j < n; ++j) s += relations.at(i, j);
    g = gcd(g, s);
  }
  // A complete fan admits a relation with nonzero coefficient sum (the rays
  // cannot all lie on an affine line), so g >= 1.
  if (g == 0) throw ValidationError("index: degenerate relation lattice");

  std::vector<Int> divs = positive_divisors(g);
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    const Int& m = *it;
    for (Int f1 = 0; f1 < m; ++f1)
      for (Int f2 = 0; f2 < m; ++f2) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
          Int v = f1 * fan.ray(i).x + f2 * fan.ray(i).y - 1;
          if (v % m != 0) ok = false;
        }
        if (ok) {
          IndexCertificate cert;
          cert.m = static_cast<int>(m.convert_to<long>());
          cert.f = {f1, f2};
          cert.h.values.resize(n);
          for (int i = 0; i < n; ++i)
            cert.h.values[i] = (f1 * fan.ray(i).x + f2 * fan.ray(i).y - 1) / m;
          return cert;
        }
      }
  }
  throw ValidationError("index: no certificate found");  // unreachable; m = 1 always works
}

int index(const AugmentedFan& fan) { return index_with_certificate(fan).m; }

SymmetryInfo symmetry(const AugmentedFan& fan) {
  const auto& rays = fan.rays();
  const int n = static_cast<int>(rays.size());
  std::set<std::pair<Int, Int>> ray_set;
  for (const Vec2& v : rays) ray_set.insert({v.x, v.y});

  const Vec2& u = rays[0];
  int vi = -1;
  for (int i = 1; i < n; ++i)
    if (cross(u, rays[i]) != 0) {
      vi = i;
      break;
    }
  if (vi < 0) throw ValidationError("symmetry: rays do not span");
  const Vec2& v = rays[vi];
  Int d = cross(u, v);

  std::vector<std::array<Int, 4>> group;
  for (const Vec2& p : rays)
    for (const Vec2& q : rays) {
      // gamma * [u v] = [p q]  =>  gamma = [p q] adj([u v]) / det.
      Int a_num = p.x * v.y - q.x * u.y;
      Int b_num = q.x * u.x - p.x * v.x;
      Int c_num = p.y * v.y - q.y * u.y;
      Int e_num = q.y * u.x - p.y * v.x;
      if (a_num % d != 0 || b_num % d != 0 || c_num % d != 0 || e_num % d != 0) continue;
      Int a = a_num / d, b = b_num / d, c = c_num / d, e = e_num / d;
      Int det = a * e - b * c;
      if (det != 1 && det != -1) continue;
      bool permutes = true;
      for (const Vec2& r : rays) {
        Int ix = a * r.x + b * r.y;
        Int iy = c * r.x + e * r.y;
        if (!ray_set.count({ix, iy})) {
          permutes = false;
          break;
        }
      }
      if (permutes) group.push_back({a, b, c, e});
    }
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());

  SymmetryInfo info;
  info.group_order = static_cast<int>(group.size());
  // Common fixed subspace: stack (gamma - I) and take the rank.
  std::vector<IntVec> stacked;
  bool has_minus_i = false;
  for (const auto& g : group) {
    stacked.push_back(IntVec{g[0] - 1, g[1]});
    stacked.push_back(IntVec{g[2], g[3] - 1});
    if (g[0] == -1 && g[1] == 0 && g[2] == 0 && g[3] == -1) has_minus_i = true;
  }
  info.symmetric = !stacked.empty() && rank(IntMat::from_rows(stacked)) == 2;
  info.special_symmetric = has_minus_i;
  return info;
}

Rat volume(const RationalPolytope& poly) {
  if (!poly.full_dimensional()) return 0;
  const auto& v = poly.vertices();
  Rat area2 = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    const RVec2& a = v[i];
    const RVec2& b = v[(i + 1) % v.size()];
    area2 += a.x * b.y - b.x * a.y;
  }
  return area2 / 2;
}

RVec2 barycenter(const RationalPolytope& poly) {
  if (!poly.full_dimensional())
    throw ValidationError("barycenter: polytope empty or lower-dimensional");
  const auto& v = poly.vertices();
  Rat area2 = 0, cx = 0, cy = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    const RVec2& a = v[i];
    const RVec2& b = v[(i + 1) % v.size()];
    Rat w = a.x * b.y - b.x * a.y;
    area2 += w;
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  if (area2 == 0) throw ValidationError("barycenter: degenerate polytope");
  return {cx / (3 * area2), cy / (3 * area2)};
}

FanoReport einstein_verdict(const AugmentedFan& fan) {
  if (!is_fano(fan)) throw ValidationError("einstein_verdict: fan is not Fano");
  FanoReport report;
  report.is_fano = true;
  report.index = index(fan);
  SymmetryInfo sym = symmetry(fan);
  report.is_symmetric = sym.symmetric;
  report.is_special_symmetric = sym.special_symmetric;
  RationalPolytope sigma = polytope_from_support(fan, anticanonical_support(fan));
  report.barycenter = barycenter(sigma);
  report.volume = volume(sigma);
  report.einstein = (report.barycenter.x == 0 && report.barycenter.y == 0)
                        ? Verdict::Einstein
                        : Verdict::SolitonOnly;
  if (report.is_special_symmetric && report.index > 2)
    throw ValidationError("einstein_verdict: special symmetric fan with index > 2");
  return report;
}

std::pair<AugmentedFan, SupportFunction> fan_from_polytope(const RationalPolytope& poly) {
  if (!poly.full_dimensional())
    throw ValidationError("fan_from_polytope: polytope not full-dimensional");
  const auto& v = poly.vertices();
  std::vector<std::pair<Vec2, Int>> marked;
  for (size_t i = 0; i < v.size(); ++i) {
    const RVec2& a = v[i];
    const RVec2& b = v[(i + 1) % v.size()];
    Rat dx = b.x - a.x, dy = b.y - a.y;
    Int t = lcm(denominator(dx), denominator(dy));
    IntVec dir{numerator(dx) * (t / denominator(dx)), numerator(dy) * (t / denominator(dy))};
    IntVec pd = forge::primitive(dir);
    Vec2 inward{-pd[1], pd[0]};
    Int label = poly.edge_label(static_cast<int>(i));
    Vec2 n{inward.x * label, inward.y * label};
    Rat off = dot(a, n);
    if (denominator(off) != 1)
      throw ValidationError("fan_from_polytope: facet offset is not an integer");
    marked.push_back({n, numerator(off)});
  }
  return AugmentedFan::surface_with_support(marked);
}

std::vector<Vec2> lattice_points(const RationalPolytope& poly) {
  std::vector<Vec2> out;
  if (poly.empty()) return out;
  const auto& v = poly.vertices();
  Rat minx = v[0].x, maxx = v[0].x, miny = v[0].y, maxy = v[0].y;
  for (const RVec2& p : v) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  for (Int x = ceil_rat(minx); x <= floor_rat(maxx); ++x)
    for (Int y = ceil_rat(miny); y <= floor_rat(maxy); ++y) {
      RVec2 m{Rat(x), Rat(y)};
      bool inside = true;
      for (const auto& c : poly.constraints())
        if (dot(m, c.normal) < Rat(c.offset)) {
          inside = false;
          break;
        }
      if (inside) out.push_back({x, y});
    }
  return out;
}

int second_betti(const AugmentedFan& fan) { return fan.ray_count() - 2; }

}  // namespace forge::fanpoly
