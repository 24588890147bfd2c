#include <charconv>
#include <sstream>

#include "common.hpp"
#include "trient/errors.hpp"

namespace trient::harness {

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt(std::size_t v) { return std::to_string(v); }

std::string fmt(bool v) { return v ? "true" : "false"; }

Json RunConfig::to_json() const {
  Json j;
  j["seed"] = seed;
  j["samples"] = samples ? Json(*samples) : Json(nullptr);
  j["alpha"] = alpha ? Json(*alpha) : Json(nullptr);
  j["measure"] = measure ? Json(std::string(to_string(*measure))) : Json(nullptr);
  j["q"] = q;
  j["tolerance"] = tolerance ? Json(*tolerance) : Json(nullptr);
  return j;
}

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != header.size()) throw ArgumentError("table row width does not match header");
  rows.push_back(std::move(row));
}

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "table") return OutputFormat::Table;
  throw ArgumentError("unknown output format '" + std::string(name) + "' (expected json, csv or table)");
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string render_table(const Report& report) {
  const Table& t = report.table;
  std::vector<std::size_t> width(t.header.size());
  for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << (i ? "  " : "") << cells[i];
      if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size(), ' ');
    }
    os << '\n';
  };
  line(t.header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : t.rows) line(r);
  os << report.command << ": " << (report.passed ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace

std::string render(const Report& report, const RunConfig& cfg, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      Json j;
      j["schema"] = std::string(kSchema);
      j["command"] = report.command;
      j["config"] = cfg.to_json();
      j["passed"] = report.passed;
      j["data"] = report.data;
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: return render_csv(report.table);
    case OutputFormat::Table: return render_table(report);
  }
  return {};
}

namespace detail {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json amplitudes_json(const PureState& state) {
  Json j;
  j["dims"] = state.dims();
  Json amps = Json::array();
  for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i) amps.push_back(complex_json(state.amplitudes()[i]));
  j["amplitudes"] = std::move(amps);
  return j;
}

Json matrix_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json measurement_json(const LocalMeasurement& m) {
  Json j;
  j["party"] = m.party();
  Json kraus = Json::array();
  for (const auto& k : m.kraus()) kraus.push_back(matrix_json(k));
  j["kraus"] = std::move(kraus);
  return j;
}

}  // namespace detail

}  // namespace trient::harness
