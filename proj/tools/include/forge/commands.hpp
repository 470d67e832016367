#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace forge::cli {

// Exit-code contract: 0 success, 1 parse error, 2 mathematical precondition
// failure, 3 numeric failure.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;
inline constexpr int kMathError = 2;
inline constexpr int kNumericError = 3;

struct FanFlags {
  bool einstein = false;
  bool volume = false;
  bool index = false;
  bool smooth = false;
  bool spin = false;
  bool json = false;
};

struct MetricFlags {
  bool check_volume = false;
  bool soliton = false;
  int grid = 200;
  double cutoff = 12.0;
  std::optional<double> tolerance;  // else FORGE_TOLERANCE or 1e-8
};

int cmd_weights(const std::string& path, bool json_out, std::ostream& out, std::ostream& err);
int cmd_fan(const std::string& path, const FanFlags& flags, std::ostream& out, std::ostream& err);
int cmd_isotropy(const std::string& path, const std::optional<std::string>& emit_fan_path,
                 bool json_out, std::ostream& out, std::ostream& err);
int cmd_join(const std::string& path, bool json_out, std::ostream& out, std::ostream& err);
int cmd_render(const std::string& path, const std::string& svg_path, bool polytope_mode,
               std::ostream& out, std::ostream& err);
int cmd_metric(const std::string& path, const MetricFlags& flags, std::ostream& out,
               std::ostream& err);

double duality_tolerance(const std::optional<double>& override_value);

}  // namespace forge::cli
