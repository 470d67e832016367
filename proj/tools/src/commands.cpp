#include "forge/commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>

#include <json.hpp>

#include "forge/documents.hpp"
#include "forge/errors.hpp"
#include "forge/metriclab.hpp"
#include "forge/svg.hpp"

namespace forge::cli {

using nlohmann::json;

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kMathError;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumericError;
  }
}

template <typename Doc>
Doc expect_document(const std::string& path) {
  doc::Document d = doc::load_document(path);
  if (auto* p = std::get_if<Doc>(&d)) return std::move(*p);
  throw ParseError(path + ": unexpected document kind for this command");
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

double duality_tolerance(const std::optional<double>& override_value) {
  if (override_value) return *override_value;
  if (const char* env = std::getenv("FORGE_TOLERANCE")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 1e-8;
}

int cmd_weights(const std::string& path, bool json_out, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    auto doc = expect_document<doc::WeightMatrixDoc>(path);
    const auto& w = doc.weights;
    bool nondeg = reduction::is_nondegenerate(w);
    bool reduced = nondeg && reduction::is_reduced(w);
    bool admissible = nondeg && reduction::is_admissible(w);

    json j;
    j["kind"] = "weights_report";
    j["format_version"] = doc::kFormatVersion;
    j["nondegenerate"] = nondeg;
    j["reduced"] = reduced;
    j["admissible"] = admissible;
    json minors = json::object();
    for (const auto& [cols, det] : lattice::retained_minors(w.matrix())) {
      std::string key;
      for (size_t i = 0; i < cols.size(); ++i) key += (i ? "," : "") + std::to_string(cols[i] + 1);
      minors[key] = to_string(det);
    }
    j["minors"] = minors;
    if (w.n() == w.k() + 2) {
      json deltas = json::object();
      for (const auto& [pq, det] : lattice::deleted_pair_minors(w.matrix()))
        deltas[std::to_string(pq.first + 1) + "," + std::to_string(pq.second + 1)] =
            to_string(det);
      j["delta"] = deltas;
    }
    if (admissible && w.n() == w.k() + 2) {
      auto table = reduction::cohomology_table(w);
      j["b2"] = table.betti[2];
      j["torsion_order"] = to_string(table.torsion);
    }

    if (json_out) {
      out << j.dump(2) << "\n";
    } else {
      out << "nondegenerate=" << bool_str(nondeg) << "\n";
      out << "reduced=" << bool_str(reduced) << "\n";
      out << "admissible=" << bool_str(admissible) << "\n";
      for (auto& [k, v] : j["minors"].items()) out << "minor[" << k << "]=" << v.get<std::string>() << "\n";
      if (j.contains("delta"))
        for (auto& [k, v] : j["delta"].items()) out << "delta[" << k << "]=" << v.get<std::string>() << "\n";
      if (j.contains("b2")) {
        out << "b2=" << j["b2"].get<int>() << "\n";
        out << "torsion_order=" << j["torsion_order"].get<std::string>() << "\n";
      }
    }
    return admissible ? kOk : kMathError;
  });
}

namespace {

json fan_report_json(const fanpoly::AugmentedFan& fan,
                     const std::optional<fanpoly::SupportFunction>& doc_support,
                     const FanFlags& flags) {
  bool all = !(flags.einstein || flags.volume || flags.index || flags.smooth || flags.spin);
  json j;
  j["kind"] = "fan_report";
  j["format_version"] = doc::kFormatVersion;
  if (all || flags.einstein || flags.volume || flags.index) {
    fanpoly::FanoReport report = fanpoly::einstein_verdict(fan);
    if (all) {
      j["fano"] = report.is_fano;
      j["symmetric"] = report.is_symmetric;
      j["special_symmetric"] = report.is_special_symmetric;
      j["barycenter"] = {to_string(report.barycenter.x), to_string(report.barycenter.y)};
      j["b2_surface"] = fanpoly::second_betti(fan);
    }
    if (all || flags.index) j["index"] = report.index;
    if (all || flags.volume) j["vol_sigma"] = to_string(report.volume);
    if (all || flags.einstein)
      j["einstein"] = report.einstein == fanpoly::Verdict::Einstein;
  }
  if (all || flags.smooth || flags.spin) {
    fanpoly::SupportFunction lift =
        doc_support.has_value() ? *doc_support : sasaki::se_lift(fan);
    if (all || flags.smooth) j["smooth"] = sasaki::total_space_smooth(fan, lift);
    if (all || flags.spin) j["spin"] = sasaki::spin_w2(fan, lift);
  }
  return j;
}

void print_kv(const json& j, std::ostream& out) {
  static const char* order[] = {"fano",       "symmetric", "special_symmetric",
                                "barycenter", "index",     "vol_sigma",
                                "einstein",   "smooth",    "spin",
                                "b2_surface"};
  for (const char* key : order) {
    if (!j.contains(key)) continue;
    const json& v = j.at(key);
    out << key << "=";
    if (v.is_boolean()) out << bool_str(v.get<bool>());
    else if (v.is_string()) out << v.get<std::string>();
    else if (v.is_array()) out << "(" << v[0].get<std::string>() << "," << v[1].get<std::string>() << ")";
    else out << v.dump();
    out << "\n";
  }
}

}  // namespace

int cmd_fan(const std::string& path, const FanFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    auto doc = expect_document<doc::FanDoc>(path);
    json j = fan_report_json(doc.fan, doc.support, flags);
    if (flags.json)
      out << j.dump(2) << "\n";
    else
      print_kv(j, out);
    return kOk;
  });
}

int cmd_isotropy(const std::string& path, const std::optional<std::string>& emit_fan_path,
                 bool json_out, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    auto doc = expect_document<doc::IsotropyDoc>(path);
    const auto& data = doc.data;
    asd::AsdReport report = asd::analyze(data);

    json j;
    j["kind"] = "isotropy_report";
    j["format_version"] = doc::kFormatVersion;
    j["conditions_ab"] = report.conditions_ab_as_given;
    j["calderbank_singer"] = report.admits_asd_einstein;
    json orders = json::array();
    for (const auto& o : report.stabilizer_orders) orders.push_back(to_string(o));
    j["stabilizer_orders"] = orders;
    j["b2_orbifold"] = report.b2_orbifold;

    auto emit_text = [&](const json& jj) {
      out << "conditions_ab=" << bool_str(jj["conditions_ab"].get<bool>()) << "\n";
      out << "calderbank_singer=" << bool_str(jj["calderbank_singer"].get<bool>()) << "\n";
      out << "stabilizer_orders=[";
      for (size_t i = 0; i < jj["stabilizer_orders"].size(); ++i)
        out << (i ? "," : "") << jj["stabilizer_orders"][i].get<std::string>();
      out << "]\n";
      out << "b2_orbifold=" << jj["b2_orbifold"].get<int>() << "\n";
    };

    if (!report.admits_asd_einstein) {
      if (json_out)
        out << j.dump(2) << "\n";
      else
        emit_text(j);
      err << "error: isotropy data fails the Calderbank-Singer convex-position check\n";
      return kMathError;
    }

    const auto& fan = *report.fano_surface;
    fanpoly::FanoReport verdict = fanpoly::einstein_verdict(fan);
    fanpoly::SupportFunction lift = sasaki::se_lift(fan);
    sasaki::SasakiReport sas = sasaki::se_from_3sasakian(report.b2_orbifold);
    bool smooth = sasaki::total_space_smooth(fan, lift);
    auto [factor, numeric] = sasaki::volume_se(fan);

    j["b2_surface"] = report.b2_surface;
    j["special_symmetric"] = verdict.is_special_symmetric;
    j["fano"] = verdict.is_fano;
    j["index"] = verdict.index;
    j["vol_sigma"] = to_string(verdict.volume);
    j["einstein"] = verdict.einstein == fanpoly::Verdict::Einstein;
    j["total_space_smooth"] = smooth;
    j["sasaki_b2"] = sas.b2;
    j["diffeotype"] = sas.diffeotype.str();
    j["volume_se_factor"] = to_string(factor);
    j["volume_se"] = fmt_double(numeric);

    if (json_out) {
      out << j.dump(2) << "\n";
    } else {
      emit_text(j);
      out << "b2_surface=" << report.b2_surface << "\n";
      out << "special_symmetric=" << bool_str(verdict.is_special_symmetric) << "\n";
      out << "fano=" << bool_str(verdict.is_fano) << "\n";
      out << "index=" << verdict.index << "\n";
      out << "vol_sigma=" << to_string(verdict.volume) << "\n";
      out << "einstein=" << bool_str(verdict.einstein == fanpoly::Verdict::Einstein) << "\n";
      out << "total_space_smooth=" << bool_str(smooth) << "\n";
      out << "sasaki_b2=" << sas.b2 << "\n";
      out << "diffeotype=" << sas.diffeotype.str() << "\n";
      out << "volume_se_factor=" << to_string(factor) << "\n";
      out << "volume_se=" << fmt_double(numeric) << "\n";
    }

    if (emit_fan_path) {
      std::ofstream f(*emit_fan_path, std::ios::binary);
      if (!f) throw ParseError("cannot write " + *emit_fan_path);
      f << doc::serialize_fan(fan, std::nullopt, true);
    }
    return kOk;
  });
}

int cmd_join(const std::string& path, bool json_out, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    auto doc = expect_document<doc::JoinDoc>(path);
    sasaki::JoinReport report = sasaki::join(doc.factor1, doc.factor2, doc.k1, doc.k2);
    if (json_out) {
      json j;
      j["kind"] = "join_report";
      j["format_version"] = doc::kFormatVersion;
      j["dim"] = report.dimension;
      j["b2"] = report.b2;
      j["smooth"] = report.smooth;
      j["einstein"] = report.einstein;
      j["spin"] = report.spin;
      j["positive"] = report.positive;
      j["relative_indices"] = {report.relative_index[0], report.relative_index[1]};
      j["k"] = {to_string(report.chosen_k[0]), to_string(report.chosen_k[1])};
      j["quotient_order"] = to_string(report.quotient_order);
      out << j.dump(2) << "\n";
    } else {
      if (report.quotient_order != 1)
        err << "warning: gcd(k1,k2) = " << to_string(report.quotient_order)
            << " != 1; join reduced, result is the Z_" << to_string(report.quotient_order)
            << " quotient\n";
      out << "dim=" << report.dimension << " b2=" << report.b2 << " smooth="
          << bool_str(report.smooth) << " einstein=" << bool_str(report.einstein) << "\n";
    }
    return kOk;
  });
}

int cmd_render(const std::string& path, const std::string& svg_path, bool polytope_mode,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    doc::Document d = doc::load_document(path);
    std::string svg_text;
    if (auto* fd = std::get_if<doc::FanDoc>(&d)) {
      if (polytope_mode) {
        fanpoly::SupportFunction h =
            fd->support.has_value() ? *fd->support : fanpoly::anticanonical_support(fd->fan);
        svg_text = svg::render_polytope(fanpoly::polytope_from_support(fd->fan, h));
      } else {
        svg_text = svg::render_fan(fd->fan);
      }
    } else if (auto* id = std::get_if<doc::IsotropyDoc>(&d)) {
      svg_text = svg::render_fan(asd::fano_from_isotropy(id->data));
    } else {
      throw ParseError(path + ": render expects a fan or isotropy document");
    }
    if (svg_path == "-") {
      out << svg_text;
    } else {
      std::ofstream f(svg_path, std::ios::binary);
      if (!f) throw ParseError("cannot write " + svg_path);
      f << svg_text;
    }
    return kOk;
  });
}

int cmd_metric(const std::string& path, const MetricFlags& flags, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&]() -> int {
    auto doc = expect_document<doc::FanDoc>(path);
    const auto& fan = doc.fan;
    if (!fanpoly::is_fano(fan)) throw ValidationError("metric lab requires a Fano fan");
    fanpoly::SupportFunction h =
        doc.support.has_value() ? *doc.support : fanpoly::anticanonical_support(fan);
    metriclab::MetricProblem problem = metriclab::MetricProblem::from_fan(fan, h);
    double tol = duality_tolerance(flags.tolerance);

    // Legendre duality residuals on a deterministic grid of dual points.
    double max_residual = 0;
    for (int i = -3; i <= 3; ++i)
      for (int j = -3; j <= 3; ++j) {
        metriclab::Vec2d x{1.3 * i, 1.3 * j};
        auto m = problem.moment(x, 1e-13);
        metriclab::Vec2d g = problem.grad_G(m.y);
        max_residual =
            std::max(max_residual, std::hypot(g[0] - x[0], g[1] - x[1]));
      }
    out << "duality_max_residual=" << fmt_double(max_residual) << "\n";
    out << "duality_tolerance=" << fmt_double(tol) << "\n";
    if (max_residual > tol)
      throw NumericError("duality residual " + fmt_double(max_residual) +
                         " exceeds tolerance " + fmt_double(tol));

    if (flags.check_volume) {
      Rat exact = fanpoly::volume(fanpoly::polytope_from_support(fan, h));
      double num = problem.numeric_volume(flags.cutoff, flags.grid);
      double rel = std::abs(num - to_double(exact)) / to_double(exact);
      out << "vol_exact=" << to_string(exact) << "\n";
      out << "vol_num=" << fmt_double(num) << "\n";
      out << "rel_err=" << fmt_double(rel) << "\n";
    }
    if (flags.soliton) {
      metriclab::SolitonResult s = problem.soliton_vector(1e-12);
      out << "soliton=(" << fmt_double(s.b[0]) << "," << fmt_double(s.b[1]) << ")\n";
      out << "soliton_residual=" << fmt_double(s.residual) << "\n";
      out << "soliton_iterations=" << s.iterations << "\n";
    }
    return kOk;
  });
}

}  // namespace forge::cli
