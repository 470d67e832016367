#include "forge/lattice.hpp"

#include <algorithm>

#include "forge/errors.hpp"

namespace forge::lattice {

bool generators_independent(const std::vector<IntVec>& gens) {
  if (gens.empty()) return true;
  return rank(IntMat::from_rows(gens)) == static_cast<int>(gens.size());
}

bool is_strongly_convex(const std::vector<IntVec>& gens) {
  return generators_independent(gens);
}

bool cone_is_smooth(const std::vector<IntVec>& generators) {
  if (generators.empty()) throw ValidationError("cone_is_smooth: no generators");
  for (const IntVec& g : generators)
    if (is_zero(g)) throw ValidationError("cone_is_smooth: zero generator");
  if (!generators_independent(generators))
    throw ValidationError("cone_is_smooth: dependent generators");
  for (const IntVec& g : generators)
    if (content(g) != 1) return false;
  return maximal_minor_gcd(IntMat::from_rows(generators)) == 1;
}

std::vector<IntVec> fundamental_parallelepiped_points(const std::vector<IntVec>& generators) {
  if (generators.empty()) throw ValidationError("parallelepiped: no generators");
  if (!generators_independent(generators))
    throw ValidationError("parallelepiped: dependent generators");
  const int r = static_cast<int>(generators.size());
  const int d = static_cast<int>(generators[0].size());

  // Coordinate-wise bounding box of {sum c_i g_i : c in [0,1)}.
  IntVec lo(d, 0), hi(d, 0);
  for (const IntVec& g : generators)
    for (int j = 0; j < d; ++j) {
      if (g[j] < 0) lo[j] += g[j];
      if (g[j] > 0) hi[j] += g[j];
    }
  Int box = 1;
  for (int j = 0; j < d; ++j) {
    box *= hi[j] - lo[j] + 1;
    if (box > 4'000'000) throw ValidationError("parallelepiped: bounding box too large");
  }

  // Solve x = sum c_i g_i on an independent coordinate subset, verify on all.
  IntMat gt(d, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < d; ++j) gt.at(j, i) = generators[i][j];
  std::vector<int> coord;
  {
    std::vector<int> rows_left(d);
    for (int j = 0; j < d; ++j) rows_left[j] = j;
    for (int j = 0; j < d && static_cast<int>(coord.size()) < r; ++j) {
      coord.push_back(j);
      std::vector<IntVec> sel;
      for (int c : coord) {
        IntVec rw(r);
        for (int i = 0; i < r; ++i) rw[i] = gt.at(c, i);
        sel.push_back(rw);
      }
      if (rank(IntMat::from_rows(sel)) != static_cast<int>(coord.size())) coord.pop_back();
    }
  }
  IntMat square(r, r);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) square.at(i, k) = gt.at(coord[i], k);

  std::vector<IntVec> points;
  IntVec x(d, lo[0]);
  for (int j = 0; j < d; ++j) x[j] = lo[j];
  while (true) {
    RatVec rhs(r);
    for (int i = 0; i < r; ++i) rhs[i] = Rat(x[coord[i]]);
    auto c = solve_rational(square, rhs);
    bool inside = c.has_value();
    if (inside)
      for (int i = 0; i < r; ++i)
        if ((*c)[i] < 0 || (*c)[i] >= 1) {
          inside = false;
          break;
        }
    if (inside) {
      // Consistency on the remaining coordinates (point must lie in the span).
      for (int j = 0; j < d && inside; ++j) {
        Rat acc = 0;
        for (int i = 0; i < r; ++i) acc += (*c)[i] * Rat(generators[i][j]);
        if (acc != Rat(x[j])) inside = false;
      }
      if (inside) points.push_back(x);
    }
    int j = 0;
    for (; j < d; ++j) {
      if (x[j] < hi[j]) {
        ++x[j];
        break;
      }
      x[j] = lo[j];
    }
    if (j == d) break;
  }
  std::sort(points.begin(), points.end());
  return points;
}

namespace {

void column_subsets(int n, int k, std::vector<int>& cur, int start,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
    cur.push_back(i);
    column_subsets(n, k, cur, i + 1, out);
    cur.pop_back();
  }
}

}  // namespace

std::map<std::vector<int>, Int> retained_minors(const IntMat& omega) {
  int k = omega.rows(), n = omega.cols();
  if (k > n) throw ValidationError("retained_minors: more rows than columns");
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  column_subsets(n, k, cur, 0, subsets);
  std::map<std::vector<int>, Int> out;
  for (const auto& s : subsets) out[s] = determinant(omega.select_columns(s));
  return out;
}

Int minor_deleting(const IntMat& omega, int p, int q) {
  int k = omega.rows(), n = omega.cols();
  if (n != k + 2) throw ValidationError("minor_deleting: requires n == k + 2");
  if (p == q || p < 0 || q < 0 || p >= n || q >= n)
    throw ValidationError("minor_deleting: bad column pair");
  std::vector<int> keep;
  for (int j = 0; j < n; ++j)
    if (j != p && j != q) keep.push_back(j);
  return determinant(omega.select_columns(keep));
}

std::map<std::pair<int, int>, Int> deleted_pair_minors(const IntMat& omega) {
  int k = omega.rows(), n = omega.cols();
  if (n != k + 2) throw ValidationError("deleted_pair_minors: requires n == k + 2");
  std::map<std::pair<int, int>, Int> out;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) out[{p, q}] = minor_deleting(omega, p, q);
  return out;
}

}  // namespace forge::lattice
