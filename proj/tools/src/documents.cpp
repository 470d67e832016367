#include "forge/documents.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "forge/errors.hpp"

namespace forge::doc {

using nlohmann::json;

namespace {

Int json_int(const json& j, const std::string& what) {
  try {
    if (j.is_string()) return parse_int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long long>());
  } catch (const std::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
  throw ParseError(what + ": expected an integer or a decimal string");
}

fanpoly::Vec2 json_vec2(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw ParseError(what + ": expected a pair");
  return {json_int(j[0], what), json_int(j[1], what)};
}

json require(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ParseError("missing field \"" + key + "\"");
  return j.at(key);
}

sasaki::JoinFactor parse_factor(const json& j) {
  sasaki::JoinFactor f;
  f.m = static_cast<int>(json_int(require(j, "m"), "factor m").convert_to<long>());
  f.b2 = static_cast<int>(json_int(require(j, "b2"), "factor b2").convert_to<long>());
  f.index = static_cast<int>(json_int(require(j, "index"), "factor index").convert_to<long>());
  f.ord = json_int(require(j, "ord"), "factor ord");
  f.einstein = require(j, "einstein").get<bool>();
  f.spin = j.value("spin", true);
  f.positive = j.value("positive", true);
  return f;
}

}  // namespace

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  std::string kind = require(j, "kind").get<std::string>();
  Int version = json_int(require(j, "format_version"), "format_version");
  if (version != kFormatVersion)
    throw ParseError("unsupported format_version " + to_string(version));

  if (kind == "weight_matrix") {
    json entries = require(j, "entries");
    if (!entries.is_array() || entries.empty())
      throw ParseError("weight_matrix: \"entries\" must be a non-empty array of rows");
    int rows = static_cast<int>(entries.size());
    int cols = static_cast<int>(entries[0].size());
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      if (static_cast<int>(entries[i].size()) != cols)
        throw ParseError("weight_matrix: ragged rows");
      for (int c = 0; c < cols; ++c) m.at(i, c) = json_int(entries[i][c], "entry");
    }
    return WeightMatrixDoc{reduction::WeightMatrix(std::move(m))};
  }

  if (kind == "augmented_fan") {
    int dim = static_cast<int>(json_int(require(j, "dim"), "dim").convert_to<long>());
    if (dim != 2) throw ParseError("augmented_fan: only dim = 2 documents are supported");
    json rays = require(j, "rays");
    if (!rays.is_array() || rays.size() < 3) throw ParseError("augmented_fan: need >= 3 rays");
    std::vector<std::pair<fanpoly::Vec2, Int>> marked;
    std::vector<fanpoly::Vec2> plain;
    bool anticanonical = false;
    std::optional<fanpoly::SupportFunction> support;
    if (j.contains("support")) {
      const json& s = j.at("support");
      anticanonical = s.value("anticanonical", false);
      if (s.contains("values")) {
        if (s.at("values").size() != rays.size())
          throw ParseError("augmented_fan: support values must match ray count");
        for (size_t i = 0; i < rays.size(); ++i)
          marked.push_back({json_vec2(rays[i], "ray"), json_int(s.at("values")[i], "support")});
      }
    }
    FanDoc doc;
    if (!marked.empty()) {
      auto [fan, h] = fanpoly::AugmentedFan::surface_with_support(marked);
      doc.fan = fan;
      doc.support = h;
    } else {
      for (const auto& r : rays) plain.push_back(json_vec2(r, "ray"));
      doc.fan = fanpoly::AugmentedFan::surface(plain);
    }
    doc.anticanonical = anticanonical;
    return doc;
  }

  if (kind == "isotropy_data") {
    json vectors = require(j, "vectors");
    if (!vectors.is_array()) throw ParseError("isotropy_data: \"vectors\" must be an array");
    std::vector<fanpoly::Vec2> v;
    for (const auto& e : vectors) v.push_back(json_vec2(e, "vector"));
    return IsotropyDoc{asd::IsotropyData::create(std::move(v))};
  }

  if (kind == "join_spec") {
    json factors = require(j, "factors");
    if (!factors.is_array() || factors.size() != 2)
      throw ParseError("join_spec: \"factors\" must list exactly two factors");
    json k = require(j, "k");
    if (!k.is_array() || k.size() != 2) throw ParseError("join_spec: \"k\" must be a pair");
    JoinDoc doc{parse_factor(factors[0]), parse_factor(factors[1]), json_int(k[0], "k1"),
                json_int(k[1], "k2")};
    return doc;
  }

  throw ParseError("unknown document kind \"" + kind + "\"");
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string serialize_fan(const fanpoly::AugmentedFan& fan,
                          const std::optional<fanpoly::SupportFunction>& support,
                          bool anticanonical) {
  json j;
  j["kind"] = "augmented_fan";
  j["format_version"] = kFormatVersion;
  j["dim"] = 2;
  json rays = json::array();
  for (const auto& r : fan.rays()) {
    // Ray coordinates stay plain JSON integers (they are small); computed
    // invariants elsewhere use decimal strings.
    rays.push_back({r.x.convert_to<long long>(), r.y.convert_to<long long>()});
  }
  j["rays"] = rays;
  if (support.has_value()) {
    json vals = json::array();
    for (const auto& v : support->values) vals.push_back(to_string(v));
    j["support"] = {{"values", vals}};
  } else if (anticanonical) {
    j["support"] = {{"anticanonical", true}};
  }
  return j.dump(2) + "\n";
}

}  // namespace forge::doc
