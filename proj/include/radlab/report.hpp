#pragma once

// Run configuration, run reports, and the three artifact encoders (canonical
// JSON, CSV, standalone SVG).  Reproducibility contract: a report serialized
// twice from the same config and version is byte-identical, so wall-clock
// timing never enters an artifact; it is surfaced on stderr instead.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace radlab {

inline constexpr const char* kArtifactVersion = "radlab 1.0.0";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One named assertion with the tolerance it was checked against.  The
// convention for sign: value is the measured quantity and pass reflects the
// documented comparison (usually value <= tolerance).
struct RunCheck {
  std::string name;
  bool pass = true;
  double value = 0.0;
  double tolerance = 0.0;
};

struct RunConfig {
  std::string command;
  std::vector<int> dims;
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerance_overrides;
  std::string out_path;  // empty selects stdout
  std::string csv_path;
  std::string svg_path;
};

struct RunReport {
  RunConfig config;
  std::vector<RunCheck> checks;
  nlohmann::json metrics;  // command-specific payload
  double wall_seconds = 0.0;  // stderr only, never serialized
  std::string version = kArtifactVersion;
};

// Shortest round-trip decimal form of a finite double; the same encoder the
// JSON serializer uses, so CSV and JSON agree byte-for-byte on every number.
std::string fmt_double(double x);

// Sorted-key two-space-indented dump with a trailing newline.
std::string canonical_json(const nlohmann::json& j);

// Full artifact document {checks, config, metrics, version}; wall time is
// deliberately absent.
nlohmann::json report_json(const RunReport& report);

bool all_checks_pass(const RunReport& report);

// Returns the effective tolerance for a named check.  Overrides may only
// loosen the documented default and by at most a factor of 10; anything else
// is a UsageError.
double resolve_tolerance(const RunConfig& config, const std::string& name,
                         double default_tol);

// First row is the header.  Fields containing separators or quotes are
// quoted with doubled inner quotes.
std::string csv_encode(const std::vector<std::vector<std::string>>& rows);

// ---- SVG line/scatter plot -------------------------------------------------

struct SvgSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
  bool draw_line = true;
  bool draw_markers = true;
};

struct SvgSpec {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  std::vector<SvgSeries> series;
};

// Standalone single-panel plot; every marker carries data-x / data-y
// attributes with the exact values so the artifact embeds its data points.
std::string svg_line_plot(const SvgSpec& spec);

// ---- file helpers ----------------------------------------------------------

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace radlab
