#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "forge/fanpoly.hpp"
#include "forge/lattice.hpp"

namespace forge::sasaki {

using fanpoly::AugmentedFan;
using fanpoly::SupportFunction;
using fanpoly::Vec2;
using fanpoly::Verdict;

// Lifted cones of the fan C_h of L_h^x: each maximal cone spanned by the
// n(rho_i) lifts to the cone on the (n(rho_i), h(n(rho_i))).
std::vector<lattice::LatticeCone> cone_fan(const AugmentedFan& fan, const SupportFunction& h);

// h is globally linear (h = <f, .>), so the lifted cones sit inside a
// hyperplane and the total space degenerates to X x C^*.
bool lift_is_degenerate(const AugmentedFan& fan, const SupportFunction& h);

// The total space L_h^x is a smooth simply connected cone: every lifted
// maximal cone passes the unimodular-saturation test and the lifted markings
// generate Z^{n+1} (the quotient Z^{n+1}/span is pi_1, e.g. the Z_3 obstruction
// (0,0,1) for the anticanonical cone over CP^2).
bool total_space_smooth(const AugmentedFan& fan, const SupportFunction& h);

// Support function of K_X^{1/Ind(X)}, the bundle whose S^1-subbundle carries
// the Sasaki structure; derived from the index certificate.
SupportFunction se_lift(const AugmentedFan& fan);

// w_2(M) = 0 for the S^1-space of the bundle with support l: an F_2
// feasibility problem over a in {0,1}, f in (Z/2)^2 for
// 1 + a l(n(rho)) + <f, n(rho)> = 0 (mod 2) on every ray.
bool spin_w2(const AugmentedFan& fan, const SupportFunction& l);

enum class DiffeoKind { S5, ConnSumSxS, XInfConnSum, Unknown };

struct Diffeotype {
  DiffeoKind kind = DiffeoKind::Unknown;
  int count = 0;  // #count(S^2 x S^3), or X_inf # count M_inf
  std::string str() const;
  bool operator==(const Diffeotype&) const = default;
};

// Smale-Barden/Oh classification for simply connected toric 5-manifolds
// (torsion-free H_2): S^5, #k(S^2xS^3), or X_inf#(k-1)M_inf. Non-spin with
// b_2 = 0 is rejected (it would force torsion).
Diffeotype classify_5mfd(int b2, bool spin);

struct SasakiReport {
  int dimension = 5;
  int b2 = 0;
  bool simply_connected = true;  // tracked from the pi_1^orb hypotheses, not computed
  bool spin = true;
  Diffeotype diffeotype;
  Verdict einstein = Verdict::SolitonOnly;
  Rat volume_factor;          // 2c Vol(Sigma_{-k}) when Einstein
  double volume_numeric = 0;  // 2c (pi/3)^3 Vol(Sigma_{-k})
};

// The SE 5-manifold over a 3-Sasakian space with b_2(S) = b2_s:
// b_2(M) = 2 b2_s + 1 and M = #(2 b2_s + 1)(S^2 x S^3).
SasakiReport se_from_3sasakian(int b2_s);

// Exact factor 2c Vol(Sigma_{-k}) and numeric 2c (pi/3)^3 Vol(Sigma_{-k})
// with c = Ind(X); requires the Einstein verdict.
std::pair<Rat, double> volume_se(const AugmentedFan& fan);

// Full chain for a Fano fan: verdict, index, smoothness of the K^{1/ind}
// cone, spin, diffeotype, volume.
SasakiReport analyze_fan(const AugmentedFan& fan);

// The positive-Ricci family fans Delta*_{k,p}. As printed the ray data fails
// fan validation (all rays in the closed upper half-plane; for k = 1 two rays
// are parallel); with repair = true the second coordinates of sigma_j, j >= 2
// are negated and the result is re-validated. repair = false reproduces the
// failure.
std::pair<AugmentedFan, SupportFunction> delta_kp_family(int k, int p, bool repair = false);

struct JoinFactor {
  int m = 1;         // dimension 2m + 1
  int b2 = 0;
  int index = 1;     // Ind(M)
  Int ord = 1;       // lcm of leaf holonomy orders
  bool einstein = false;
  bool spin = true;
  bool positive = true;
};

struct JoinReport {
  std::array<int, 2> m{};
  std::array<int, 2> relative_index{};
  std::array<Int, 2> chosen_k{};
  Int quotient_order = 1;  // > 1 when gcd(k1, k2) was divided out
  bool smooth = false;     // gcd(v1 k2, v2 k1) = 1
  int dimension = 0;       // 2(m1 + m2) + 1
  int b2 = 0;              // b2(M1) + b2(M2) + 1
  bool einstein = false;   // both Einstein and (k1, k2) = (l1, l2)
  bool spin = true;
  bool positive = false;
};

JoinReport join(const JoinFactor& m1, const JoinFactor& m2, Int k1, Int k2);

// The standard sphere S^{2m+1} as a join factor (Ind = m + 1, Ord = 1).
JoinFactor sphere_factor(int m);

// Weighted projective weights of the Galicki-Lawson quotient orbifold:
// a_1 = p_2 + p_3, a_2 = p_1 + p_3, a_3 = p_1 + p_2.
std::array<Int, 3> eschenburg_weights(const Int& p1, const Int& p2, const Int& p3);

}  // namespace forge::sasaki
