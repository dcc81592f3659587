#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cli {

enum class Format { Pretty, Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

inline constexpr int kDegreeCap = 30;

struct RunConfig {
  Format format = Format::Pretty;
  std::uint64_t seed = 42;
  unsigned threads = 1;
  bool unsafe_degree = false;
  std::optional<std::string> output;
};

/// Rendered text plus the process exit code.
struct Outcome {
  std::string text;
  int exit_code = kExitOk;
  std::vector<std::string> warnings;
};

/// Inclusive integer range parsed from "a..b" or a single integer.
struct Interval {
  int lo = 0;
  int hi = 0;
};
Interval parse_interval(const std::string& text);

/// Rejects degrees above the cap unless unsafe_degree is set.
void check_degree(const RunConfig& cfg, long degree, const char* what);

struct GwArgs {
  int n = 2;
  int max_deg = 8;
};
struct PhiArgs {
  int D = 2;
  int delta = 0;
  std::optional<std::string> rho;
};
struct RelationsArgs {
  int D = 2;
  int delta = 0;
  std::optional<std::string> rho;
  bool minimal_support = true;
  std::optional<std::string> check_file;
};
struct VerifyArgs {
  std::string conjecture;
  int max_degree = 9;
};
struct NumericArgs {
  bool auto_mode = false;
  int D = 4;
  int delta = 0;
  std::optional<std::string> relation;
  std::optional<std::string> conjecture;
  std::uint64_t samples = 100;
  double tol = 1e-8;
  int max_degree = 7;
};
struct MineArgs {
  int k_max = 8;
  int d_sweep = 24;
  std::vector<std::string> bfiles;
};

Outcome cmd_gw(const RunConfig& cfg, const GwArgs& a);
Outcome cmd_phi(const RunConfig& cfg, const PhiArgs& a);
Outcome cmd_relations(const RunConfig& cfg, const RelationsArgs& a);
Outcome cmd_verify(const RunConfig& cfg, const VerifyArgs& a);
Outcome cmd_numeric(const RunConfig& cfg, const NumericArgs& a);
Outcome cmd_mine(const RunConfig& cfg, const MineArgs& a);

// render.cpp

/// Titled table; pretty output aligns columns, CSV quotes where needed.
struct Table {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

std::string render_tables(const RunConfig& cfg, const std::vector<Table>& tables,
                          const std::vector<std::string>& footer = {});
/// Pretty-printed JSON with the seed attached, newline terminated.
std::string render_json(const RunConfig& cfg, nlohmann::json doc);
std::string format_double(double v);

}  // namespace cli
