#include "forge/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "forge/errors.hpp"

namespace forge::reduction {

WeightMatrix::WeightMatrix(IntMat omega) : omega_(std::move(omega)) {
  if (omega_.rows() > omega_.cols())
    throw ValidationError("weight matrix must have k <= n");
}

WeightMatrix WeightMatrix::normal_form(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) throw ValidationError("normal_form: |a| != |b|");
  int k = static_cast<int>(a.size());
  IntMat m(k, k + 2);
  for (int i = 0; i < k; ++i) {
    m.at(i, i) = 1;
    m.at(i, k) = a[i];
    m.at(i, k + 1) = b[i];
  }
  return WeightMatrix(std::move(m));
}

bool WeightMatrix::is_normal_form() const {
  if (n() != k() + 2) return false;
  for (int i = 0; i < k(); ++i)
    for (int j = 0; j < k(); ++j)
      if (omega_.at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Int WeightMatrix::a(int i) const {
  if (!is_normal_form()) throw ValidationError("a(): matrix not in normal form");
  return omega_.at(i, k());
}

Int WeightMatrix::b(int i) const {
  if (!is_normal_form()) throw ValidationError("b(): matrix not in normal form");
  return omega_.at(i, k() + 1);
}

bool is_nondegenerate(const WeightMatrix& w) {
  if (w.k() == 0) return true;
  for (const auto& [cols, det] : lattice::retained_minors(w.matrix()))
    if (det == 0) return false;
  return true;
}

bool is_reduced(const WeightMatrix& w) {
  if (!is_nondegenerate(w)) throw ValidationError("is_reduced: degenerate weight matrix");
  if (w.k() == 0) return true;
  return maximal_minor_gcd(w.matrix()) == 1;
}

bool normal_form_admissible(const std::vector<Int>& a, const std::vector<Int>& b) {
  int k = static_cast<int>(a.size());
  for (int i = 0; i < k; ++i) {
    if (a[i] == 0 || b[i] == 0) return false;
    if (gcd(a[i], b[i]) != 1) return false;
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (a[i] == a[j] && b[i] == b[j]) return false;
      if (a[i] == -a[j] && b[i] == -b[j]) return false;
    }
  return true;
}

bool is_admissible(const WeightMatrix& w) {
  if (!is_nondegenerate(w)) throw ValidationError("is_admissible: degenerate weight matrix");
  int k = w.k(), n = w.n();
  if (k == 0) return true;

  auto minors = lattice::retained_minors(w.matrix());
  Int d = 0;
  for (const auto& [cols, det] : minors) d = gcd(d, det);

  bool general = true;
  // Every (k+1)-subset of columns; gcd of the k+1 minors dropping one each.
  std::vector<int> comb(k + 1);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    Int g = 0;
    for (int drop = 0; drop <= k; ++drop) {
      std::vector<int> cols;
      for (int t = 0; t <= k; ++t)
        if (t != drop) cols.push_back(comb[t]);
      g = gcd(g, minors.at(cols));
    }
    if (g != d) {
      general = false;
      break;
    }
    int i = k;
    while (i >= 0 && comb[i] == n - (k + 1) + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j <= k; ++j) comb[j] = comb[j - 1] + 1;
  }

  if (w.is_normal_form()) {
    std::vector<Int> a(k), b(k);
    for (int i = 0; i < k; ++i) {
      a[i] = w.a(i);
      b[i] = w.b(i);
    }
    bool fast = normal_form_admissible(a, b);
    if (fast != general)
      throw ValidationError("is_admissible: normal-form criterion disagrees with gcd test");
  }
  return general;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<std::pair<std::pair<int, int>, Int>> edge_weights(const WeightMatrix& w) {
  std::vector<std::pair<std::pair<int, int>, Int>> edges;
  for (const auto& [pq, det] : lattice::deleted_pair_minors(w.matrix()))
    edges.push_back({pq, abs(det)});
  return edges;
}

constexpr long kEnumerationGuard = 3'000'000;

}  // namespace

Int torsion_order_enumerated(const WeightMatrix& w) {
  int nv = w.n();
  if (nv != w.k() + 2) throw ValidationError("torsion_order: requires n == k + 2");
  auto edges = edge_weights(w);
  int ne = static_cast<int>(edges.size());
  int tree_edges = nv - 1;
  if (binomial(ne, tree_edges) > kEnumerationGuard)
    throw ValidationError("torsion_order_enumerated: edge-subset count past guard");

  Int total = 0;
  std::vector<int> comb(tree_edges);
  std::iota(comb.begin(), comb.end(), 0);
  if (tree_edges == 0) return 1;  // k = 0: a point graph, empty product
  while (true) {
    UnionFind uf(nv);
    bool acyclic = true;
    for (int t = 0; t < tree_edges && acyclic; ++t)
      acyclic = uf.unite(edges[comb[t]].first.first, edges[comb[t]].first.second);
    if (acyclic) {  // n-1 acyclic edges on n vertices span
      Int prod = 1;
      for (int t = 0; t < tree_edges; ++t) prod *= edges[comb[t]].second;
      total += prod;
    }
    int i = tree_edges - 1;
    while (i >= 0 && comb[i] == ne - tree_edges + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < tree_edges; ++j) comb[j] = comb[j - 1] + 1;
  }
  return total;
}

Int torsion_order_matrix_tree(const WeightMatrix& w) {
  int nv = w.n();
  if (nv != w.k() + 2) throw ValidationError("torsion_order: requires n == k + 2");
  if (nv == 2) return 1;
  IntMat lap(nv, nv);
  for (const auto& [pq, weight] : edge_weights(w)) {
    auto [p, q] = pq;
    lap.at(p, q) -= weight;
    lap.at(q, p) -= weight;
    lap.at(p, p) += weight;
    lap.at(q, q) += weight;
  }
  std::vector<int> keep(nv - 1);
  std::iota(keep.begin(), keep.end(), 0);
  IntMat reduced(nv - 1, nv - 1);
  for (int i = 0; i < nv - 1; ++i)
    for (int j = 0; j < nv - 1; ++j) reduced.at(i, j) = lap.at(i, j);
  return determinant(reduced);
}

Int torsion_order(const WeightMatrix& w) {
  int nv = w.n();
  if (nv != w.k() + 2) throw ValidationError("torsion_order: requires n == k + 2");
  int ne = nv * (nv - 1) / 2;
  if (binomial(ne, nv - 1) <= kEnumerationGuard) return torsion_order_enumerated(w);
  return torsion_order_matrix_tree(w);
}

CohomologyTable cohomology_table(const WeightMatrix& w) {
  if (!is_admissible(w)) throw ValidationError("cohomology_table: inadmissible weight matrix");
  CohomologyTable table;
  int k = w.k();
  table.betti = {1, 0, k, 0, 0, k, 0, 1};
  table.torsion = torsion_order(w);
  return table;
}

IntMat toric_quotient_map(const WeightMatrix& w) { return integer_kernel(w.matrix()); }

double QuaternionResidual::norm() const {
  return std::sqrt(i_part * i_part + std::norm(jk));
}

std::vector<QuaternionResidual> moment_residual(const WeightMatrix& w,
                                                const std::vector<std::complex<double>>& z,
                                                const std::vector<std::complex<double>>& wj) {
  size_t n = static_cast<size_t>(w.n());
  if (z.size() != n || wj.size() != n)
    throw ValidationError("moment_residual: coordinate count must equal n");
  std::vector<QuaternionResidual> out(static_cast<size_t>(w.k()));
  for (int j = 0; j < w.k(); ++j) {
    double i_part = 0;
    std::complex<double> c{0, 0};
    for (size_t l = 0; l < n; ++l) {
      double al = to_double(w.matrix().at(j, static_cast<int>(l)));
      i_part += al * (std::norm(z[l]) - std::norm(wj[l]));
      c += al * std::conj(wj[l]) * z[l];
    }
    out[static_cast<size_t>(j)] = {i_part, 2.0 * c};
  }
  return out;
}

double sphere_defect(const std::vector<std::complex<double>>& z,
                     const std::vector<std::complex<double>>& wj) {
  double s = 0;
  for (const auto& v : z) s += std::norm(v);
  for (const auto& v : wj) s += std::norm(v);
  return std::abs(s - 1.0);
}

}  // namespace forge::reduction
