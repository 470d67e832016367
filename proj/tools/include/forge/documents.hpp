#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "forge/asd.hpp"
#include "forge/fanpoly.hpp"
#include "forge/reduction.hpp"
#include "forge/sasaki.hpp"

namespace forge::doc {

inline constexpr int kFormatVersion = 1;

struct WeightMatrixDoc {
  reduction::WeightMatrix weights;
};

struct FanDoc {
  fanpoly::AugmentedFan fan;
  // Either the anticanonical -k or explicit per-ray values (aligned with the
  // "rays" array of the document, re-sorted with the fan).
  std::optional<fanpoly::SupportFunction> support;
  bool anticanonical = false;
};

struct IsotropyDoc {
  asd::IsotropyData data;
};

struct JoinDoc {
  sasaki::JoinFactor factor1;
  sasaki::JoinFactor factor2;
  Int k1 = 1;
  Int k2 = 1;
};

using Document = std::variant<WeightMatrixDoc, FanDoc, IsotropyDoc, JoinDoc>;

// Parse a UTF-8 JSON document envelope; integers may be JSON numbers or
// decimal strings, rationals are "p/q" strings. Throws ParseError on
// malformed input and ValidationError on mathematically invalid payloads.
Document parse_document(const std::string& text);
Document load_document(const std::string& path);

std::string serialize_fan(const fanpoly::AugmentedFan& fan,
                          const std::optional<fanpoly::SupportFunction>& support,
                          bool anticanonical);

}  // namespace forge::doc
