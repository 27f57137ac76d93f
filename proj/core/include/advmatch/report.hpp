#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "advmatch/experiment.hpp"

namespace advmatch {

enum class ReportFormat { json, csv };

ReportFormat parse_report_format(std::string_view name);

/// Fixed CSV column order.
inline constexpr std::string_view kReportCsvHeader =
    "instance_id,algo,k,cost,opt_cost,ratio,oracle_bits_read,aux_bits,seed,wall_time_ms";

std::string format_reports(std::span<const RunReport> reports, ReportFormat format);
void emit_report(std::span<const RunReport> reports, ReportFormat format,
                 const std::filesystem::path& path);

std::vector<RunReport> parse_reports_json(std::string_view text);
std::vector<RunReport> load_reports_json(const std::filesystem::path& path);

struct ReportSummary {
  std::size_t runs = 0;
  double mean_ratio = 0.0;
  double max_ratio = 0.0;
  std::size_t max_bits = 0;
  double total_cost = 0.0;
  double total_opt = 0.0;
};

ReportSummary summarize(std::span<const RunReport> reports);

}  // namespace advmatch
