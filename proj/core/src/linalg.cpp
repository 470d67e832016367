#include "forge/linalg.hpp"

#include <algorithm>
#include <functional>

#include "forge/errors.hpp"

namespace forge {

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

IntVec primitive(const IntVec& v) {
  Int g = content(v);
  if (g == 0) throw ValidationError("primitive() on the zero vector");
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw ValidationError("dot: dimension mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw ValidationError("add: dimension mismatch");
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw ValidationError("sub: dimension mismatch");
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec negate(const IntVec& a) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

IntVec scale(const Int& c, const IntVec& a) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

IntMat::IntMat(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw ValidationError("IntMat: ragged rows");
    for (const auto& x : r) data_.push_back(x);
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
  IntMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw ValidationError("from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMat::row(int i) const {
  IntVec out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = at(i, j);
  return out;
}

IntVec IntMat::col(int j) const {
  IntVec out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

IntMat IntMat::transpose() const {
  IntMat m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

IntMat IntMat::mul(const IntMat& other) const {
  if (cols_ != other.rows_) throw ValidationError("mul: dimension mismatch");
  IntMat m(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) m.at(i, j) += a * other.at(k, j);
    }
  return m;
}

IntMat IntMat::select_columns(const std::vector<int>& cols) const {
  IntMat m(rows_, static_cast<int>(cols.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] < 0 || cols[j] >= cols_) throw ValidationError("select_columns: index out of range");
      m.at(i, static_cast<int>(j)) = at(i, cols[j]);
    }
  return m;
}

Int determinant(const IntMat& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant: matrix not square");
  int n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num / prev;  // exact by Bareiss
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

int rank(const IntMat& m) {
  // Fraction-free elimination over a rational copy.
  int rows = m.rows(), cols = m.cols();
  std::vector<RatVec> a(rows, RatVec(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = Rat(m.at(i, j));
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

void enumerate_subsets(int n, int k, std::vector<int>& cur, int start,
                       const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cur.size()) == k) {
    fn(cur);
    return;
  }
  for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
    cur.push_back(i);
    enumerate_subsets(n, k, cur, i + 1, fn);
    cur.pop_back();
  }
}

}  // namespace

Int maximal_minor_gcd(const IntMat& m) {
  int r = std::min(m.rows(), m.cols());
  Int g = 0;
  std::vector<int> cur;
  if (m.rows() <= m.cols()) {
    enumerate_subsets(m.cols(), r, cur, 0, [&](const std::vector<int>& cols) {
      g = gcd(g, determinant(m.select_columns(cols)));
    });
  } else {
    IntMat t = m.transpose();
    enumerate_subsets(t.cols(), r, cur, 0, [&](const std::vector<int>& cols) {
      g = gcd(g, determinant(t.select_columns(cols)));
    });
  }
  return abs(g);
}

HermiteResult hermite_form(const IntMat& a) {
  int rows = a.rows(), cols = a.cols();
  IntMat h = a;
  IntMat u = IntMat::identity(rows);
  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(h.at(i, c), h.at(j, c));
    for (int c = 0; c < rows; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto add_multiple = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < cols; ++c) h.at(dst, c) += q * h.at(src, c);
    for (int c = 0; c < rows; ++c) u.at(dst, c) += q * u.at(src, c);
  };
  auto negate_row = [&](int i) {
    for (int c = 0; c < cols; ++c) h.at(i, c) = -h.at(i, c);
    for (int c = 0; c < rows; ++c) u.at(i, c) = -u.at(i, c);
  };

  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Euclidean reduction down column c among rows >= r.
    while (true) {
      int pivot = -1;
      for (int i = r; i < rows; ++i) {
        if (h.at(i, c) == 0) continue;
        if (pivot < 0 || abs(h.at(i, c)) < abs(h.at(pivot, c))) pivot = i;
      }
      if (pivot < 0) break;
      swap_rows(r, pivot);
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (h.at(i, c) == 0) continue;
        Int q = floor_div(h.at(i, c), h.at(r, c));
        add_multiple(i, r, -q);
        if (h.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < rows && h.at(r, c) != 0) {
      if (h.at(r, c) < 0) negate_row(r);
      for (int i = 0; i < r; ++i) {
        Int q = floor_div(h.at(i, c), h.at(r, c));
        add_multiple(i, r, -q);
      }
      ++r;
    }
  }
  return {h, u};
}

IntMat integer_kernel(const IntMat& a) {
  // Row-reduce [A^T | I]; rows whose A^T-block vanished carry kernel vectors.
  int m = a.rows(), n = a.cols();
  IntMat b(n, m + n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) b.at(i, j) = a.at(j, i);
    b.at(i, m + i) = 1;
  }
  HermiteResult hr = hermite_form(b);
  std::vector<IntVec> basis;
  for (int i = 0; i < n; ++i) {
    bool zero = true;
    for (int j = 0; j < m; ++j)
      if (hr.h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) continue;
    IntVec v(n);
    for (int j = 0; j < n; ++j) v[j] = hr.h.at(i, m + j);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return IntMat(0, n);
  return hermite_form(IntMat::from_rows(basis)).h;
}

SmithResult smith_form(const IntMat& a) {
  int rows = a.rows(), cols = a.cols();
  IntMat s = a;
  IntMat u = IntMat::identity(rows);
  IntMat v = IntMat::identity(cols);

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(s.at(i, c), s.at(j, c));
    for (int c = 0; c < rows; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(s.at(r, i), s.at(r, j));
    for (int r = 0; r < cols; ++r) std::swap(v.at(r, i), v.at(r, j));
  };
  auto row_op = [&](int dst, int src, const Int& q) {
    for (int c = 0; c < cols; ++c) s.at(dst, c) += q * s.at(src, c);
    for (int c = 0; c < rows; ++c) u.at(dst, c) += q * u.at(src, c);
  };
  auto col_op = [&](int dst, int src, const Int& q) {
    for (int r = 0; r < rows; ++r) s.at(r, dst) += q * s.at(r, src);
    for (int r = 0; r < cols; ++r) v.at(r, dst) += q * v.at(r, src);
  };

  int t = 0;
  int dim = std::min(rows, cols);
  while (t < dim) {
    // Locate a minimal nonzero pivot in the trailing block.
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (s.at(i, j) != 0 && (pi < 0 || abs(s.at(i, j)) < abs(s.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool again = false;
    for (int i = t + 1; i < rows; ++i) {
      if (s.at(i, t) == 0) continue;
      row_op(i, t, -floor_div(s.at(i, t), s.at(t, t)));
      if (s.at(i, t) != 0) again = true;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (s.at(t, j) == 0) continue;
      col_op(j, t, -floor_div(s.at(t, j), s.at(t, t)));
      if (s.at(t, j) != 0) again = true;
    }
    if (again) continue;
    // Enforce divisibility d_t | entries of the trailing block.
    bool fixed = true;
    for (int i = t + 1; i < rows && fixed; ++i)
      for (int j = t + 1; j < cols && fixed; ++j)
        if (s.at(i, j) % s.at(t, t) != 0) {
          row_op(t, i, 1);
          fixed = false;
        }
    if (!fixed) continue;
    if (s.at(t, t) < 0) {
      for (int c = 0; c < cols; ++c) s.at(t, c) = -s.at(t, c);
      for (int c = 0; c < rows; ++c) u.at(t, c) = -u.at(t, c);
    }
    ++t;
  }
  std::vector<Int> divisors;
  for (int i = 0; i < dim; ++i)
    if (s.at(i, i) != 0) divisors.push_back(s.at(i, i));
  return {s, u, v, divisors};
}

std::optional<RatVec> solve_rational(const IntMat& a, const RatVec& b) {
  if (a.rows() != a.cols() || static_cast<int>(b.size()) != a.rows())
    throw ValidationError("solve_rational: shape mismatch");
  int n = a.rows();
  std::vector<RatVec> m(n, RatVec(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(a.at(i, j));
    m[i][n] = b[i];
  }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(m[c], m[pivot]);
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (int j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

}  // namespace forge
