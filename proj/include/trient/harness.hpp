#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "trient/measures.hpp"

namespace trient::harness {

using Json = nlohmann::json;

inline constexpr std::string_view kSchema = "tri-entangle/1";

struct RunConfig {
  std::uint64_t seed = 1;
  /// Unset means the suite default.
  std::optional<std::size_t> samples;
  std::optional<double> alpha;
  std::optional<MeasureKind> measure;
  double q = 2.0;
  std::optional<double> tolerance;
  /// Worker threads; 0 picks hardware concurrency. Never affects output.
  unsigned threads = 0;

  Json to_json() const;
};

/// Column table used for csv and table output. Cells are preformatted,
/// locale-independent strings.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

struct Report {
  std::string command;
  bool passed = false;
  Json data = Json::object();
  Table table;
};

/// Shortest round-trip decimal form, always with '.' as separator.
std::string fmt(double v);
std::string fmt(std::size_t v);
std::string fmt(bool v);

// Fixtures.
Report table1_report();
Report case1_report(const RunConfig& cfg);
Report case2_report(const RunConfig& cfg);
Report case3_report(const RunConfig& cfg);
Report lemma_s2_report(const RunConfig& cfg);
Report qudit_report();

// Randomized suites.
const std::vector<std::string>& suite_names();
/// Throws ArgumentError for an unknown suite name.
Report run_suite(std::string_view name, const RunConfig& cfg);

// CSV figure data.
const std::vector<std::string>& figure_targets();
/// Throws ArgumentError for an unknown target.
Report figure(std::string_view target, const RunConfig& cfg);

enum class OutputFormat { Json, Csv, Table };
OutputFormat parse_format(std::string_view name);

/// Json output wraps the report as {"schema", "command", "config", "passed",
/// "data"} with sorted keys; csv and table render `report.table`.
std::string render(const Report& report, const RunConfig& cfg, OutputFormat format);

}  // namespace trient::harness
