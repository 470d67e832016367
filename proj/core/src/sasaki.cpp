#include "forge/sasaki.hpp"

#include <cmath>

#include "forge/errors.hpp"

namespace forge::sasaki {

namespace {

void check_support(const AugmentedFan& fan, const SupportFunction& h) {
  if (static_cast<int>(h.values.size()) != fan.ray_count())
    throw ValidationError("support function length does not match ray count");
}

std::vector<IntVec> lifted_markings(const AugmentedFan& fan, const SupportFunction& h) {
  std::vector<IntVec> lifted;
  for (int i = 0; i < fan.ray_count(); ++i) {
    IntVec v = fan.rays_generic()[static_cast<size_t>(i)];
    v.push_back(h.values[static_cast<size_t>(i)]);
    lifted.push_back(std::move(v));
  }
  return lifted;
}

}  // namespace

std::vector<lattice::LatticeCone> cone_fan(const AugmentedFan& fan, const SupportFunction& h) {
  check_support(fan, h);
  std::vector<IntVec> lifted = lifted_markings(fan, h);
  std::vector<lattice::LatticeCone> cones;
  const int n = fan.ray_count();
  if (fan.dim() == 1) {
    for (int i = 0; i < n; ++i) cones.push_back({{lifted[static_cast<size_t>(i)]}, 2});
    return cones;
  }
  for (int i = 0; i < n; ++i) {
    lattice::LatticeCone cone;
    cone.ambient_dim = 3;
    cone.generators = {lifted[static_cast<size_t>(i)], lifted[static_cast<size_t>((i + 1) % n)]};
    cones.push_back(std::move(cone));
  }
  return cones;
}

bool lift_is_degenerate(const AugmentedFan& fan, const SupportFunction& h) {
  check_support(fan, h);
  return rank(IntMat::from_rows(lifted_markings(fan, h))) < fan.dim() + 1;
}

bool total_space_smooth(const AugmentedFan& fan, const SupportFunction& h) {
  check_support(fan, h);
  for (const auto& cone : cone_fan(fan, h))
    if (!lattice::cone_is_smooth(cone.generators)) return false;
  // pi_1 of the complement of the apex: the lifted markings must generate
  // the full lattice Z^{n+1}.
  SmithResult snf = smith_form(IntMat::from_rows(lifted_markings(fan, h)));
  if (static_cast<int>(snf.divisors.size()) != fan.dim() + 1) return false;
  for (const Int& d : snf.divisors)
    if (d != 1) return false;
  return true;
}

SupportFunction se_lift(const AugmentedFan& fan) {
  fanpoly::IndexCertificate cert = fanpoly::index_with_certificate(fan);
  SupportFunction h;
  h.values.reserve(cert.h.values.size());
  for (const Int& v : cert.h.values) h.values.push_back(-v);  // K^{1/m} = L_{-h}
  return h;
}

bool spin_w2(const AugmentedFan& fan, const SupportFunction& l) {
  check_support(fan, l);
  for (int a = 0; a <= 1; ++a)
    for (int f1 = 0; f1 <= 1; ++f1)
      for (int f2 = 0; f2 <= 1; ++f2) {
        bool ok = true;
        for (int i = 0; i < fan.ray_count() && ok; ++i) {
          const Vec2& n = fan.ray(i);
          Int val = 1 + a * l.values[static_cast<size_t>(i)] + f1 * n.x + f2 * n.y;
          if (val % 2 != 0) ok = false;
        }
        if (ok) return true;
      }
  return false;
}

std::string Diffeotype::str() const {
  switch (kind) {
    case DiffeoKind::S5:
      return "S^5";
    case DiffeoKind::ConnSumSxS:
      return count == 1 ? "S^2xS^3" : "#" + std::to_string(count) + "(S^2xS^3)";
    case DiffeoKind::XInfConnSum:
      return count == 0 ? "X_inf" : "X_inf#" + std::to_string(count) + "(S^2xS^3)";
    case DiffeoKind::Unknown:
      break;
  }
  return "unknown";
}

Diffeotype classify_5mfd(int b2, bool spin) {
  if (b2 < 0) throw ValidationError("classify_5mfd: negative b2");
  if (spin) {
    if (b2 == 0) return {DiffeoKind::S5, 0};
    return {DiffeoKind::ConnSumSxS, b2};
  }
  if (b2 == 0)
    throw ValidationError("classify_5mfd: non-spin with b2 = 0 has torsion H_2 (excluded)");
  return {DiffeoKind::XInfConnSum, b2 - 1};
}

SasakiReport se_from_3sasakian(int b2_s) {
  if (b2_s < 0) throw ValidationError("se_from_3sasakian: negative b2");
  SasakiReport report;
  report.dimension = 5;
  report.b2 = 2 * b2_s + 1;
  report.simply_connected = true;
  report.spin = true;
  report.einstein = Verdict::Einstein;
  report.diffeotype = classify_5mfd(report.b2, true);
  return report;
}

std::pair<Rat, double> volume_se(const AugmentedFan& fan) {
  fanpoly::FanoReport verdict = fanpoly::einstein_verdict(fan);
  if (verdict.einstein != Verdict::Einstein)
    throw ValidationError("volume_se: no Sasaki-Einstein metric (soliton only)");
  Rat factor = Rat(2 * verdict.index) * verdict.volume;
  const double pi = 3.14159265358979323846;
  double numeric = to_double(factor) * std::pow(pi / 3.0, 3);
  return {factor, numeric};
}

SasakiReport analyze_fan(const AugmentedFan& fan) {
  fanpoly::FanoReport verdict = fanpoly::einstein_verdict(fan);
  SasakiReport report;
  report.dimension = 5;
  report.b2 = fanpoly::second_betti(fan) - 1;
  report.einstein = verdict.einstein;
  SupportFunction lift = se_lift(fan);
  bool smooth = total_space_smooth(fan, lift);
  report.simply_connected = smooth;
  report.spin = spin_w2(fan, lift);
  if (smooth) {
    report.diffeotype = classify_5mfd(report.b2, report.spin);
  } else {
    report.diffeotype = {DiffeoKind::Unknown, 0};
  }
  if (report.einstein == Verdict::Einstein) {
    if (!report.spin)
      throw ValidationError("analyze_fan: Einstein verdict with w_2 != 0 is inconsistent");
    auto [factor, numeric] = volume_se(fan);
    report.volume_factor = factor;
    report.volume_numeric = numeric;
  }
  return report;
}

std::pair<AugmentedFan, SupportFunction> delta_kp_family(int k, int p, bool repair) {
  if (k < 1 || p < 0) throw ValidationError("delta_kp_family: requires k >= 1, p >= 0");
  std::vector<std::pair<Vec2, Int>> marked;
  auto add = [&](Int x, Int y, Int l, bool flip) {
    marked.push_back({Vec2{x, flip ? Int(-y) : y}, l});
  };
  add(-1, 0, 0, false);  // sigma_0, l = 0
  add(0, 1, -1, false);  // sigma_1
  if (k == 1) {
    add(1, Int(1 + p), -1, repair);
    add(0, Int(2 + p), -1, repair);
  } else {
    for (int j = 2; j <= k; ++j) add(j - 1, Int(j) * (j - 1) / 2 - 1, -1, repair);
    add(k, Int(k + 1) * k / 2 - 1 + p, -1, repair);
    add(0, Int(k + 1) * k / 2 + p, -1, repair);
  }
  auto [fan, l] = AugmentedFan::surface_with_support(marked);
  if (repair) {
    if (!fanpoly::is_strictly_upper_convex(fan, l))
      throw ValidationError("delta_kp_family: support function not strictly upper convex");
    // pi_1^orb proxy: the marked rays generate Z^2.
    SmithResult snf = smith_form(IntMat::from_rows(fan.rays_generic()));
    for (const Int& d : snf.divisors)
      if (d != 1) throw ValidationError("delta_kp_family: rays do not generate Z^2");
  }
  return {fan, l};
}

JoinFactor sphere_factor(int m) {
  JoinFactor f;
  f.m = m;
  f.b2 = 0;
  f.index = m + 1;
  f.ord = 1;
  f.einstein = true;
  f.spin = true;
  f.positive = true;
  return f;
}

JoinReport join(const JoinFactor& m1, const JoinFactor& m2, Int k1, Int k2) {
  if (k1 <= 0 || k2 <= 0) throw ValidationError("join: k1, k2 must be positive");
  JoinReport report;
  Int g = gcd(k1, k2);
  if (g != 1) {
    // (M1 *_{k1,k2} M2) = (M1 *_{k1/g,k2/g} M2)/Z_g: reduce and report.
    k1 /= g;
    k2 /= g;
  }
  report.quotient_order = g;
  report.chosen_k = {k1, k2};
  report.m = {m1.m, m2.m};
  int ind_gcd = static_cast<int>(gcd(Int(m1.index), Int(m2.index)).convert_to<long>());
  report.relative_index = {m1.index / ind_gcd, m2.index / ind_gcd};
  report.smooth = gcd(m1.ord * k2, m2.ord * k1) == 1;
  report.dimension = 2 * (m1.m + m2.m) + 1;
  report.b2 = m1.b2 + m2.b2 + 1;
  report.einstein = m1.einstein && m2.einstein && k1 == Int(report.relative_index[0]) &&
                    k2 == Int(report.relative_index[1]);
  report.spin = m1.spin && m2.spin;
  report.positive = m1.positive && m2.positive;
  return report;
}

std::array<Int, 3> eschenburg_weights(const Int& p1, const Int& p2, const Int& p3) {
  return {p2 + p3, p1 + p3, p1 + p2};
}

}  // namespace forge::sasaki
