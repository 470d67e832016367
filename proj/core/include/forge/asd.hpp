#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "forge/fanpoly.hpp"

namespace forge::asd {

using fanpoly::AugmentedFan;
using fanpoly::Vec2;

// Cyclically ordered lattice vectors v_0, ..., v_{k+2} recording the isotropy
// subgroups along the boundary of the orbit polygon, with v_0 = -v_{k+2}.
class IsotropyData {
 public:
  static IsotropyData create(std::vector<Vec2> vectors);

  int k() const { return static_cast<int>(v_.size()) - 3; }
  int count() const { return static_cast<int>(v_.size()); }
  const std::vector<Vec2>& vectors() const { return v_; }
  const Vec2& at(int i) const { return v_.at(static_cast<size_t>(i)); }

 private:
  std::vector<Vec2> v_;
};

// Conditions a (m_i strictly increasing) and b (difference slopes strictly
// increasing) evaluated on the data exactly as given; a vanishing slope
// denominator counts as failure, not an error.
bool check_conditions_ab(const IsotropyData& data);

// Existence of a toric anti-self-dual Einstein metric: the doubled set
// v_0,...,v_{k+2}, -v_1,...,-v_{k+1} must be in strictly convex position
// (all points vertices of their hull, none on an open edge, no repeats).
// The literal arrange-by-GL(2,Z) search lives in the test suite as a bounded
// secondary verifier.
bool check_calderbank_singer(const IsotropyData& data);

// |det(v_{i-1}, v_i)| for i = 1..k+2: orders of the vertex stabilizers.
std::vector<Int> stabilizer_orders(const IsotropyData& data);

// The doubled vectors in the cyclic order v_0..v_{k+2}, -v_1..-v_{k+1}.
std::vector<Vec2> doubled_cycle(const IsotropyData& data);

// Special symmetric toric Fano surface with the 2k+4 doubled vectors as
// marked rays; requires check_calderbank_singer.
AugmentedFan fano_from_isotropy(const IsotropyData& data);

// Fans of the two degree-one divisors D, Dbar at the i-th reducible member
// of the pencil (1-based, 1 <= i <= k+2): rays
// (rho_1..rho_i, -rho_i + rho_{i+1}, rho_{n+i+1}..rho_{2n}) and their
// negatives, indices along the doubled cycle, n = k+2.
std::pair<AugmentedFan, AugmentedFan> divisor_fans(const IsotropyData& data, int i);

struct AsdReport {
  bool admits_asd_einstein = false;
  bool conditions_ab_as_given = false;
  std::vector<Int> stabilizer_orders;
  int b2_orbifold = 0;
  std::optional<AugmentedFan> fano_surface;  // present iff admits_asd_einstein
  int b2_surface = 0;                        // 2k + 2 when the metric exists
};

AsdReport analyze(const IsotropyData& data);

}  // namespace forge::asd
