// Test-only oracles and generators, independent of the library paths they
// verify.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "forge/asd.hpp"
#include "forge/fanpoly.hpp"
#include "forge/linalg.hpp"

namespace forge::testing {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(eng);
  }
  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng);
  }
};

inline IntMat random_int_matrix(Rng& rng, int rows, int cols, int lo, int hi) {
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.uniform(lo, hi);
  return m;
}

// Product of bounded elementary matrices; always det +-1.
inline IntMat random_unimodular(Rng& rng, int n) {
  IntMat u = IntMat::identity(n);
  for (int step = 0; step < 6; ++step) {
    int i = rng.uniform(0, n - 1), j = rng.uniform(0, n - 1);
    if (i == j) continue;
    Int c = rng.uniform(-2, 2);
    for (int col = 0; col < n; ++col) u.at(i, col) += c * u.at(j, col);
  }
  if (rng.uniform(0, 1)) {
    for (int col = 0; col < n; ++col) u.at(0, col) = -u.at(0, col);
  }
  return u;
}

// Hermite/Smith-based kernel verification: every row annihilates A, the row
// count matches the rank defect, and the row lattice is saturated.
inline bool kernel_is_valid(const IntMat& a, const IntMat& kernel) {
  for (int i = 0; i < kernel.rows(); ++i) {
    IntVec x = kernel.row(i);
    for (int r = 0; r < a.rows(); ++r) {
      Int s = 0;
      for (int c = 0; c < a.cols(); ++c) s += a.at(r, c) * x[static_cast<size_t>(c)];
      if (s != 0) return false;
    }
  }
  if (kernel.rows() != a.cols() - rank(a)) return false;
  if (kernel.rows() == 0) return true;
  SmithResult snf = smith_form(kernel);
  if (static_cast<int>(snf.divisors.size()) != kernel.rows()) return false;
  for (const Int& d : snf.divisors)
    if (d != 1) return false;
  return true;
}

// Is v in the row span of basis over Q? (For saturated bases this equals
// lattice membership.)
inline bool in_row_span(const IntMat& basis, const IntVec& v) {
  std::vector<IntVec> rows;
  for (int i = 0; i < basis.rows(); ++i) rows.push_back(basis.row(i));
  int r = basis.rows() == 0 ? 0 : rank(basis);
  rows.push_back(v);
  return rank(IntMat::from_rows(rows)) == r;
}

// Finite-difference gradient check helper.
template <typename F>
std::array<double, 2> finite_diff_grad(const F& f, std::array<double, 2> x, double h) {
  return {(f({x[0] + h, x[1]}) - f({x[0] - h, x[1]})) / (2 * h),
          (f({x[0], x[1] + h}) - f({x[0], x[1] - h})) / (2 * h)};
}

// Monte-Carlo area and barycenter of a polytope with a 3-sigma band.
struct McEstimate {
  double area;
  double area_sigma;
  std::array<double, 2> barycenter;
};

inline McEstimate monte_carlo_polygon(const fanpoly::RationalPolytope& poly, Rng& rng, int n) {
  double minx = 1e30, maxx = -1e30, miny = 1e30, maxy = -1e30;
  for (const auto& v : poly.vertices()) {
    minx = std::min(minx, to_double(v.x));
    maxx = std::max(maxx, to_double(v.x));
    miny = std::min(miny, to_double(v.y));
    maxy = std::max(maxy, to_double(v.y));
  }
  double box = (maxx - minx) * (maxy - miny);
  int hits = 0;
  double sx = 0, sy = 0;
  for (int i = 0; i < n; ++i) {
    double x = rng.real(minx, maxx), y = rng.real(miny, maxy);
    bool inside = true;
    for (const auto& c : poly.constraints())
      if (to_double(c.normal.x) * x + to_double(c.normal.y) * y < to_double(c.offset) - 1e-12) {
        inside = false;
        break;
      }
    if (inside) {
      ++hits;
      sx += x;
      sy += y;
    }
  }
  double p = static_cast<double>(hits) / n;
  McEstimate est;
  est.area = p * box;
  est.area_sigma = box * std::sqrt(p * (1 - p) / n);
  est.barycenter = {sx / hits, sy / hits};
  return est;
}

// Random isotropy data built as a strictly convex difference chain, so
// conditions a and b hold as given.
inline asd::IsotropyData random_isotropy(Rng& rng, int max_k = 3, int max_step = 3) {
  using fanpoly::Vec2;
  for (int attempt = 0; attempt < 200; ++attempt) {
    int k = rng.uniform(0, max_k);
    int steps = k + 2;
    std::vector<Vec2> deltas;
    std::set<std::pair<long, long>> slopes_seen;
    int guard = 0;
    while (static_cast<int>(deltas.size()) < steps && guard++ < 500) {
      long dm = rng.uniform(1, max_step);
      long dn = rng.uniform(-max_step, max_step);
      long g = std::gcd(dm, std::abs(dn));
      if (g == 0) g = 1;
      if (!slopes_seen.insert({dn / g, dm / g}).second) continue;
      deltas.push_back(Vec2{Int(dm), Int(dn)});
    }
    if (static_cast<int>(deltas.size()) < steps) continue;
    std::sort(deltas.begin(), deltas.end(), [](const Vec2& a, const Vec2& b) {
      return a.y * b.x < b.y * a.x;  // slope order; dm > 0
    });
    Vec2 total{0, 0};
    for (const Vec2& d : deltas) {
      total.x += d.x;
      total.y += d.y;
    }
    bool doubled = (total.x % 2 != 0) || (total.y % 2 != 0);
    std::vector<Vec2> scaled = deltas;
    if (doubled)
      for (Vec2& d : scaled) {
        d.x *= 2;
        d.y *= 2;
      }
    Vec2 v0{0, 0};
    for (const Vec2& d : scaled) {
      v0.x -= d.x;
      v0.y -= d.y;
    }
    v0.x /= 2;
    v0.y /= 2;
    std::vector<Vec2> data{v0};
    Vec2 cur = v0;
    for (const Vec2& d : scaled) {
      cur = Vec2{cur.x + d.x, cur.y + d.y};
      data.push_back(cur);
    }
    try {
      asd::IsotropyData iso = asd::IsotropyData::create(data);
      if (!asd::check_conditions_ab(iso)) continue;
      if (!asd::check_calderbank_singer(iso)) continue;
      return iso;
    } catch (const std::exception&) {
      continue;
    }
  }
  throw std::runtime_error("random_isotropy: generation failed");
}

inline fanpoly::AugmentedFan random_special_symmetric_fan(Rng& rng) {
  return asd::fano_from_isotropy(random_isotropy(rng));
}

// Random Fano fan (not necessarily symmetric): convex-position marked points
// around the origin.
inline fanpoly::AugmentedFan random_fano_fan(Rng& rng) {
  using fanpoly::Vec2;
  for (int attempt = 0; attempt < 500; ++attempt) {
    int count = rng.uniform(3, 7);
    std::vector<Vec2> pts;
    std::set<std::pair<long, long>> dirs;
    for (int i = 0; i < count; ++i) {
      long x = rng.uniform(-4, 4), y = rng.uniform(-4, 4);
      if (x == 0 && y == 0) continue;
      long g = std::gcd(std::abs(x), std::abs(y));
      auto dir = std::make_pair(x / g, y / g);
      if (!dirs.insert(dir).second) continue;
      pts.push_back(Vec2{Int(x), Int(y)});
    }
    if (pts.size() < 3) continue;
    try {
      fanpoly::AugmentedFan fan = fanpoly::AugmentedFan::surface(pts);
      if (fanpoly::is_fano(fan)) return fan;
      // Keep only hull vertices of the marked set and retry them as a fan.
      continue;
    } catch (const std::exception&) {
      continue;
    }
  }
  throw std::runtime_error("random_fano_fan: generation failed");
}

// Literal Calderbank-Singer normalization search (bounded): does some run of
// the doubled cycle, under some gamma in GL(2,Z) with entries bounded by
// 2 * max coordinate, satisfy conditions a and b?
inline bool cs_bounded_search(const asd::IsotropyData& data) {
  using fanpoly::Vec2;
  std::vector<Vec2> cycle = asd::doubled_cycle(data);
  const int n = static_cast<int>(cycle.size());
  const int run = data.count();
  long maxc = 0;
  for (const Vec2& v : cycle)
    maxc = std::max({maxc, std::abs(v.x.convert_to<long>()), std::abs(v.y.convert_to<long>())});
  long bound = 2 * maxc;

  auto satisfies_ab = [](const std::vector<Vec2>& v) {
    for (size_t i = 1; i < v.size(); ++i)
      if (v[i].x <= v[i - 1].x) return false;
    for (size_t i = 2; i < v.size(); ++i) {
      Int dn1 = v[i - 1].y - v[i - 2].y, dm1 = v[i - 1].x - v[i - 2].x;
      Int dn2 = v[i].y - v[i - 1].y, dm2 = v[i].x - v[i - 1].x;
      if (dn1 * dm2 >= dn2 * dm1) return false;
    }
    return true;
  };

  for (int reversed = 0; reversed < 2; ++reversed) {
    std::vector<Vec2> cyc = cycle;
    if (reversed) std::reverse(cyc.begin(), cyc.end());
    for (int shift = 0; shift < n; ++shift) {
      std::vector<Vec2> candidate;
      for (int t = 0; t < run; ++t) candidate.push_back(cyc[static_cast<size_t>((shift + t) % n)]);
      // v_0 = -v_last holds along antipodal runs of the doubled cycle.
      if (candidate.front().x != -candidate.back().x ||
          candidate.front().y != -candidate.back().y)
        continue;
      for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
          for (long c = -bound; c <= bound; ++c) {
            // Solve the determinant condition for the last entry cheaply.
            for (long det : {1L, -1L}) {
              // a*d - b*c = det  =>  d = (det + b*c) / a when a != 0.
              long d;
              if (a != 0) {
                if ((det + b * c) % a != 0) continue;
                d = (det + b * c) / a;
              } else {
                if (b * c != -det) continue;
                d = 0;  // any d gives det via -bc; d bounded scan below
              }
              for (long dd = (a != 0 ? d : -bound); dd <= (a != 0 ? d : bound); ++dd) {
                if (a * dd - b * c != det) continue;
                if (std::abs(dd) > bound) continue;
                std::vector<Vec2> mapped;
                mapped.reserve(candidate.size());
                for (const Vec2& v : candidate)
                  mapped.push_back(Vec2{a * v.x + b * v.y, c * v.x + dd * v.y});
                if (satisfies_ab(mapped)) return true;
              }
            }
          }
    }
  }
  return false;
}

// Are two fans related by a unimodular map of the lattice?
inline bool fans_unimodular_equivalent(const fanpoly::AugmentedFan& f1,
                                       const fanpoly::AugmentedFan& f2) {
  using fanpoly::Vec2;
  if (f1.ray_count() != f2.ray_count()) return false;
  const auto& r1 = f1.rays();
  const auto& r2 = f2.rays();
  std::set<std::pair<Int, Int>> target;
  for (const Vec2& v : r2) target.insert({v.x, v.y});
  const Vec2& u = r1[0];
  int vi = -1;
  for (int i = 1; i < static_cast<int>(r1.size()); ++i)
    if (fanpoly::cross(u, r1[static_cast<size_t>(i)]) != 0) {
      vi = i;
      break;
    }
  if (vi < 0) return false;
  const Vec2& v = r1[static_cast<size_t>(vi)];
  Int det_uv = fanpoly::cross(u, v);
  for (const Vec2& p : r2)
    for (const Vec2& q : r2) {
      Int a_num = p.x * v.y - q.x * u.y;
      Int b_num = q.x * u.x - p.x * v.x;
      Int c_num = p.y * v.y - q.y * u.y;
      Int d_num = q.y * u.x - p.y * v.x;
      if (a_num % det_uv != 0 || b_num % det_uv != 0 || c_num % det_uv != 0 ||
          d_num % det_uv != 0)
        continue;
      Int a = a_num / det_uv, b = b_num / det_uv, c = c_num / det_uv, d = d_num / det_uv;
      if (abs(a * d - b * c) != 1) continue;
      bool all = true;
      for (const Vec2& r : r1) {
        Int ix = a * r.x + b * r.y, iy = c * r.x + d * r.y;
        if (!target.count({ix, iy})) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
  return false;
}

}  // namespace forge::testing
