#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "asymada/boost.hpp"
#include "asymada/harness.hpp"

namespace asymada {

inline constexpr std::string_view kCurveCsvHeader =
    "t,bound,bound_pos,bound_neg,train_err,train_err_pos,train_err_neg,test_err,test_err_pos,test_err_neg";

std::string curves_to_csv(const CurveSeries& series);
// Parses curves_to_csv output; throws DataError on a header mismatch or bad row.
std::vector<CurveRow> curves_from_csv(const std::string& text);

// "curves_gamma_<gamma>.csv"
std::string curve_file_name(double gamma);

struct CurveFile {
  std::filesystem::path path;
  double gamma = 0.5;
  std::size_t rows = 0;
  bool empty = false;  // header-only file
};

// One CSV per series in `out_dir` (created if needed).
std::vector<CurveFile> emit_curves_csv(std::span<const CurveSeries> series, const std::filesystem::path& out_dir);

enum class Panel { Bounds, Train, Test };
std::string_view to_string(Panel panel);

// Static SVG line chart: rounds on x, values in [0, 1.05 max] on y, one
// polyline per quantity (overall / positive / negative) per series.
// Throws UsageError on empty input or series of unequal length.
std::string figure_svg(std::span<const CurveSeries> series, Panel panel);
std::filesystem::path emit_figure_svg(std::span<const CurveSeries> series, Panel panel,
                                      const std::filesystem::path& out);

std::string loocv_report_json(const LoocvResult& result, int t_max);
std::string loocv_file_name(double gamma);

// Text table of gamma, FN, FP, ClErr, AsErr as two-decimal percentages.
std::string summary_table(std::span<const LoocvResult> results);

// One line per RoundRecord.
std::string round_log_csv(std::span<const RoundRecord> records);

std::string identity_report_json(const IdentityReport& report, double tolerance);

}  // namespace asymada
