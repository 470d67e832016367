#include "forge/asd.hpp"

#include <algorithm>
#include <set>

#include "forge/errors.hpp"

namespace forge::asd {

using fanpoly::cross;

IsotropyData IsotropyData::create(std::vector<Vec2> vectors) {
  if (vectors.size() < 3) throw ValidationError("isotropy data needs at least 3 vectors (k >= 0)");
  const Vec2& first = vectors.front();
  const Vec2& last = vectors.back();
  if (first.x != -last.x || first.y != -last.y)
    throw ValidationError("isotropy data must satisfy v_0 = -v_{k+2}");
  for (const Vec2& v : vectors)
    if (v.x == 0 && v.y == 0) throw ValidationError("isotropy data contains the zero vector");
  for (size_t i = 1; i < vectors.size(); ++i)
    if (cross(vectors[i - 1], vectors[i]) == 0)
      throw ValidationError("consecutive isotropy vectors must be linearly independent");
  IsotropyData data;
  data.v_ = std::move(vectors);
  return data;
}

bool check_conditions_ab(const IsotropyData& data) {
  const auto& v = data.vectors();
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i].x <= v[i - 1].x) return false;  // condition a
  // Condition b: (n_i - n_{i-1})/(m_i - m_{i-1}) strictly increasing; the
  // denominators are positive once condition a holds.
  for (size_t i = 2; i < v.size(); ++i) {
    Int dn1 = v[i - 1].y - v[i - 2].y, dm1 = v[i - 1].x - v[i - 2].x;
    Int dn2 = v[i].y - v[i - 1].y, dm2 = v[i].x - v[i - 1].x;
    if (dn1 * dm2 >= dn2 * dm1) return false;
  }
  return true;
}

std::vector<Vec2> doubled_cycle(const IsotropyData& data) {
  std::vector<Vec2> out = data.vectors();
  const auto& v = data.vectors();
  for (size_t i = 1; i + 1 < v.size(); ++i) out.push_back(-v[i]);
  return out;
}

namespace {

// Strict convex position: every point is a vertex of the hull and no point
// lies on the open boundary between hull vertices.
bool strictly_convex_position(std::vector<Vec2> pts) {
  std::set<std::pair<Int, Int>> seen;
  for (const Vec2& p : pts)
    if (!seen.insert({p.x, p.y}).second) return false;  // repeats
  if (pts.size() < 3) return false;
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  // Monotone chain with strict turns; collinear points are not hull vertices.
  auto build = [&](bool lower) {
    std::vector<Vec2> chain;
    for (size_t idx = 0; idx < pts.size(); ++idx) {
      const Vec2& p = pts[lower ? idx : pts.size() - 1 - idx];
      while (chain.size() >= 2) {
        Vec2 a = chain[chain.size() - 2], b = chain.back();
        Int turn = cross(Vec2{b.x - a.x, b.y - a.y}, Vec2{p.x - b.x, p.y - b.y});
        if (turn > 0) break;
        chain.pop_back();
      }
      chain.push_back(p);
    }
    return chain;
  };
  std::vector<Vec2> lower = build(true);
  std::vector<Vec2> upper = build(false);
  size_t hull = lower.size() + upper.size() - 2;
  return hull == pts.size();
}

}  // namespace

bool check_calderbank_singer(const IsotropyData& data) {
  return strictly_convex_position(doubled_cycle(data));
}

std::vector<Int> stabilizer_orders(const IsotropyData& data) {
  const auto& v = data.vectors();
  std::vector<Int> out;
  for (size_t i = 1; i < v.size(); ++i) out.push_back(abs(cross(v[i - 1], v[i])));
  return out;
}

AugmentedFan fano_from_isotropy(const IsotropyData& data) {
  if (!check_calderbank_singer(data))
    throw ValidationError("isotropy data fails the Calderbank-Singer convex-position check");
  return AugmentedFan::surface(doubled_cycle(data));
}

std::pair<AugmentedFan, AugmentedFan> divisor_fans(const IsotropyData& data, int i) {
  int n = data.k() + 2;
  if (i < 1 || i > n) throw ValidationError("divisor_fans: index out of range");
  if (!check_calderbank_singer(data))
    throw ValidationError("divisor_fans: data fails the classification check");
  std::vector<Vec2> rho = doubled_cycle(data);  // rho_1..rho_{2n}, 0-based here

  // The doubled cycle must be a convex cyclic order for the adjacency in the
  // divisor formula to make sense; consecutive cross products share a sign.
  int sign = 0;
  for (size_t t = 0; t < rho.size(); ++t) {
    Int c = cross(rho[t], rho[(t + 1) % rho.size()]);
    int s = c > 0 ? 1 : (c < 0 ? -1 : 0);
    if (s == 0) throw ValidationError("divisor_fans: doubled cycle not strictly convex");
    if (sign == 0) sign = s;
    if (s != sign)
      throw ValidationError("divisor_fans: data is not cyclically ordered along its polygon");
  }

  auto at = [&](int one_based) -> const Vec2& { return rho[static_cast<size_t>(one_based - 1)]; };
  std::vector<Vec2> d_rays;
  for (int t = 1; t <= i; ++t) d_rays.push_back(at(t));
  Vec2 folded{at(i + 1).x - at(i).x, at(i + 1).y - at(i).y};
  d_rays.push_back(folded);
  for (int t = n + i + 1; t <= 2 * n; ++t) d_rays.push_back(at(t));

  std::vector<Vec2> dbar_rays;
  for (const Vec2& r : d_rays) dbar_rays.push_back(-r);
  return {AugmentedFan::surface(d_rays), AugmentedFan::surface(dbar_rays)};
}

AsdReport analyze(const IsotropyData& data) {
  AsdReport report;
  report.conditions_ab_as_given = check_conditions_ab(data);
  report.admits_asd_einstein = check_calderbank_singer(data);
  report.stabilizer_orders = stabilizer_orders(data);
  report.b2_orbifold = data.k();
  if (report.admits_asd_einstein) {
    report.fano_surface = fano_from_isotropy(data);
    report.b2_surface = fanpoly::second_betti(*report.fano_surface);
  }
  return report;
}

}  // namespace forge::asd
