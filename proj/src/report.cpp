#include "asymada/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "asymada/csv_loader.hpp"
#include "asymada/dataset_io.hpp"
#include "asymada/errors.hpp"
#include "asymada/format.hpp"

namespace asymada {

using nlohmann::ordered_json;

std::string curves_to_csv(const CurveSeries& series) {
  std::string out(kCurveCsvHeader);
  out += '\n';
  for (const auto& r : series.rows) {
    out += std::to_string(r.t);
    for (double v : {r.bound, r.bound_pos, r.bound_neg, r.train_err, r.train_err_pos, r.train_err_neg, r.test_err,
                     r.test_err_pos, r.test_err_neg}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

std::vector<CurveRow> curves_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCurveCsvHeader) throw DataError("curve file header mismatch");
  std::vector<CurveRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split_csv_line(line, ',');
    if (cells.size() != 10) throw DataError("curve file line " + std::to_string(line_no) + ": expected 10 fields");
    try {
      CurveRow r;
      r.t = static_cast<int>(parse_double(cells[0]));
      double* fields[] = {&r.bound,         &r.bound_pos, &r.bound_neg,    &r.train_err,    &r.train_err_pos,
                          &r.train_err_neg, &r.test_err,  &r.test_err_pos, &r.test_err_neg};
      for (std::size_t k = 0; k < 9; ++k) *fields[k] = parse_double(cells[k + 1]);
      rows.push_back(r);
    } catch (const UsageError& e) {
      throw DataError("curve file line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

std::string curve_file_name(double gamma) { return "curves_gamma_" + format_double(gamma) + ".csv"; }

std::vector<CurveFile> emit_curves_csv(std::span<const CurveSeries> series, const std::filesystem::path& out_dir) {
  if (series.empty()) throw UsageError("no curve series to write");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  std::vector<CurveFile> files;
  for (const auto& s : series) {
    CurveFile f;
    f.path = out_dir / curve_file_name(s.gamma);
    f.gamma = s.gamma;
    f.rows = s.rows.size();
    f.empty = s.rows.empty();
    write_text_file(f.path, curves_to_csv(s));
    files.push_back(f);
  }
  return files;
}

std::string loocv_file_name(double gamma) { return "loocv_gamma_" + format_double(gamma) + ".json"; }

std::string loocv_report_json(const LoocvResult& result, int t_max) {
  const EvalReport& r = result.report;
  ordered_json j;
  j["gamma"] = result.gamma;
  j["t_max"] = t_max;
  j["n"] = result.predictions.size();
  j["counts"] = {{"tp", r.counts.tp}, {"fn", r.counts.fn}, {"tn", r.counts.tn}, {"fp", r.counts.fp}};
  j["fn_rate"] = r.fn_rate;
  j["fp_rate"] = r.fp_rate;
  j["cl_err"] = r.cl_err;
  j["as_err"] = r.as_err;
  j["predictions"] = result.predictions;
  return j.dump(2) + "\n";
}

std::string summary_table(std::span<const LoocvResult> results) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-10s %10s %10s %10s %10s\n", "gamma", "FN", "FP", "ClErr", "AsErr");
  out += buf;
  for (const auto& r : results) {
    std::snprintf(buf, sizeof buf, "%-10.4f %10s %10s %10s %10s\n", r.gamma, format_percent(r.report.fn_rate).c_str(),
                  format_percent(r.report.fp_rate).c_str(), format_percent(r.report.cl_err).c_str(),
                  format_percent(r.report.as_err).c_str());
    out += buf;
  }
  return out;
}

std::string round_log_csv(std::span<const RoundRecord> records) {
  std::string out =
      "t,feature,threshold,polarity,alpha,alpha_clamped,eps,eps_pos,eps_neg,eps_decomposed,r,z,z_pos,z_neg,"
      "p_pos,p_neg,p_global,bound,bound_pos,bound_neg,train_error,train_error_pos,train_error_neg\n";
  for (const auto& r : records) {
    out += std::to_string(r.round) + ',' + std::to_string(r.stump.feature) + ',' + format_double(r.stump.threshold) +
           ',' + std::to_string(r.stump.polarity) + ',' + format_double(r.alpha) + ',' +
           (r.alpha_clamped ? "1" : "0");
    for (double v : {r.eps, r.eps_pos, r.eps_neg, r.eps_decomposed, r.r, r.z, r.z_pos, r.z_neg, r.p_pos_before,
                     r.p_neg_before, r.p_global_before, r.bound, r.bound_pos, r.bound_neg, r.train_error,
                     r.train_error_pos, r.train_error_neg}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

std::string identity_report_json(const IdentityReport& rep, double tolerance) {
  ordered_json j;
  j["rounds"] = rep.rounds;
  j["clamped_rounds"] = rep.clamped_rounds;
  j["tolerance"] = tolerance;
  j["residuals"] = {{"partition", rep.partition},
                    {"bound_product", rep.bound_product},
                    {"bound_correlation", rep.bound_correlation},
                    {"eps_mixture", rep.eps_mixture},
                    {"alpha_mixture", rep.alpha_mixture}};
  j["ok"] = rep.ok(tolerance);
  return j.dump(2) + "\n";
}

}  // namespace asymada
