#include "advmatch/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"

#include "advmatch/error.hpp"

namespace advmatch {

using nlohmann::json;

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw InvalidArgument("unknown report format '" + std::string(name) + "'");
}

namespace {

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

json to_json(const RunReport& r) {
  json j;
  j["instance_id"] = r.instance_id;
  j["algo"] = r.algo;
  j["k"] = r.k;
  j["cost"] = r.cost;
  j["opt_cost"] = r.opt_cost;
  // JSON has no infinity; an unbounded ratio is written as null.
  j["ratio"] = std::isfinite(r.ratio) ? json(r.ratio) : json(nullptr);
  j["oracle_bits_read"] = r.oracle_bits_read;
  j["aux_bits"] = r.aux_bits;
  j["seed"] = r.seed;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

RunReport from_json(const json& j) {
  RunReport r;
  r.instance_id = j.at("instance_id").get<std::string>();
  r.algo = j.at("algo").get<std::string>();
  r.k = j.at("k").get<std::size_t>();
  r.cost = j.at("cost").get<double>();
  r.opt_cost = j.at("opt_cost").get<double>();
  r.ratio = j.at("ratio").is_null() ? std::numeric_limits<double>::infinity()
                                    : j.at("ratio").get<double>();
  r.oracle_bits_read = j.at("oracle_bits_read").get<std::size_t>();
  r.aux_bits = j.at("aux_bits").get<std::size_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  return r;
}

}  // namespace

std::string format_reports(std::span<const RunReport> reports, ReportFormat format) {
  if (format == ReportFormat::json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  out << kReportCsvHeader << '\n';
  for (const auto& r : reports) {
    out << csv_field(r.instance_id) << ',' << csv_field(r.algo) << ',' << r.k << ','
        << format_number(r.cost) << ',' << format_number(r.opt_cost) << ','
        << format_number(r.ratio) << ',' << r.oracle_bits_read << ',' << r.aux_bits << ','
        << r.seed << ',' << format_number(r.wall_time_ms) << '\n';
  }
  return out.str();
}

void emit_report(std::span<const RunReport> reports, ReportFormat format,
                 const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << format_reports(reports, format);
  if (!out) throw Error("failed writing " + path.string());
}

std::vector<RunReport> parse_reports_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (!doc.is_array()) throw ParseError("report document must be a JSON array");
    std::vector<RunReport> out;
    for (const auto& item : doc) out.push_back(from_json(item));
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::vector<RunReport> load_reports_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_reports_json(buf.str());
}

ReportSummary summarize(std::span<const RunReport> reports) {
  ReportSummary s;
  s.runs = reports.size();
  double ratio_sum = 0.0;
  for (const auto& r : reports) {
    ratio_sum += r.ratio;
    s.max_ratio = std::max(s.max_ratio, r.ratio);
    s.max_bits = std::max(s.max_bits, r.oracle_bits_read);
    s.total_cost += r.cost;
    s.total_opt += r.opt_cost;
  }
  if (s.runs > 0) s.mean_ratio = ratio_sum / static_cast<double>(s.runs);
  return s;
}

}  // namespace advmatch
