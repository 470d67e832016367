#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "forge/numbers.hpp"

namespace forge {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

Int content(const IntVec& v);        // gcd of entries, 0 for the zero vector
IntVec primitive(const IntVec& v);   // v / content(v); throws on zero vector
bool is_zero(const IntVec& v);

Int dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec negate(const IntVec& a);
IntVec scale(const Int& c, const IntVec& a);

// Dense arbitrary-precision integer matrix.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  IntMat(std::initializer_list<std::initializer_list<Int>> rows);
  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<IntVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  IntVec row(int i) const;
  IntVec col(int j) const;
  IntMat transpose() const;
  IntMat mul(const IntMat& other) const;
  IntMat select_columns(const std::vector<int>& cols) const;

  bool operator==(const IntMat& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

// Exact determinant via Bareiss fraction-free elimination; square input.
Int determinant(const IntMat& m);

// Rank over the rationals.
int rank(const IntMat& m);

// gcd of all maximal (min(rows, cols)-sized) minors; 0 when rank-deficient.
Int maximal_minor_gcd(const IntMat& m);

// Row Hermite normal form H = U * A with U unimodular: echelon shape, positive
// pivots, entries above each pivot reduced into [0, pivot).
struct HermiteResult {
  IntMat h;
  IntMat u;
};
HermiteResult hermite_form(const IntMat& a);

// Z-basis of {x : A x = 0}, one vector per row, in Hermite-reduced form so
// the output is deterministic. The basis spans a saturated sublattice.
IntMat integer_kernel(const IntMat& a);

// Smith normal form U * A * V = S with S diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithResult {
  IntMat s;
  IntMat u;
  IntMat v;
  std::vector<Int> divisors;  // nonzero elementary divisors
};
SmithResult smith_form(const IntMat& a);

// Exact solve A x = b over Q for square A; nullopt when A is singular.
std::optional<RatVec> solve_rational(const IntMat& a, const RatVec& b);

}  // namespace forge
