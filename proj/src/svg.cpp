#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include "asymada/dataset_io.hpp"
#include "asymada/errors.hpp"
#include "asymada/format.hpp"
#include "asymada/report.hpp"

namespace asymada {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 170.0;  // legend column
constexpr double kTop = 36.0;
constexpr double kBottom = 52.0;

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                  "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

struct Quantity {
  const char* name;
  const char* dash;  // empty = solid
};
constexpr std::array<Quantity, 3> kQuantities = {{{"overall", ""}, {"positive", "7,4"}, {"negative", "2,3"}}};

std::array<double, 3> values_of(const CurveRow& r, Panel panel) {
  switch (panel) {
    case Panel::Bounds: return {r.bound, r.bound_pos, r.bound_neg};
    case Panel::Train: return {r.train_err, r.train_err_pos, r.train_err_neg};
    case Panel::Test: return {r.test_err, r.test_err_pos, r.test_err_neg};
  }
  return {0.0, 0.0, 0.0};
}

const char* title_of(Panel panel) {
  switch (panel) {
    case Panel::Bounds: return "Training error bounds";
    case Panel::Train: return "Training errors";
    case Panel::Test: return "Test errors";
  }
  return "";
}

std::string fmt(const char* pattern, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

std::string num(double v) { return fmt("%.2f", v); }

}  // namespace

std::string_view to_string(Panel panel) {
  switch (panel) {
    case Panel::Bounds: return "bounds";
    case Panel::Train: return "train";
    case Panel::Test: return "test";
  }
  return "unknown";
}

std::string figure_svg(std::span<const CurveSeries> series, Panel panel) {
  if (series.empty()) throw UsageError("no series to plot");
  const std::size_t rounds = series.front().rows.size();
  for (const auto& s : series) {
    if (s.rows.size() != rounds) throw UsageError("all series must have the same number of rounds");
  }

  double vmax = 0.0;
  for (const auto& s : series) {
    for (const auto& r : s.rows) {
      for (double v : values_of(r, panel)) vmax = std::max(vmax, v);
    }
  }
  const double ymax = vmax > 0.0 ? 1.05 * vmax : 1.0;
  const double xmax = rounds > 1 ? static_cast<double>(series.front().rows.back().t) : 1.0;
  const double xmin = rounds > 1 ? static_cast<double>(series.front().rows.front().t) : 0.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double t) { return kLeft + (t - xmin) / (xmax - xmin) * plot_w; };
  auto py = [&](double v) { return kTop + plot_h - std::clamp(v / ymax, 0.0, 1.0) * plot_h; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) + "\" fill=\"white\"/>\n";
  out += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"22\" font-family=\"sans-serif\" font-size=\"15\" "
         "text-anchor=\"middle\">" + std::string(title_of(panel)) + "</text>\n";

  // Axes and ticks.
  out += "<g stroke=\"#444\" stroke-width=\"1\" fill=\"none\">\n";
  out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" + num(kLeft + plot_w) +
         "\" y2=\"" + num(kTop + plot_h) + "\"/>\n";
  out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) + "\" y2=\"" +
         num(kTop + plot_h) + "\"/>\n";
  out += "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#222\">\n";
  for (int k = 0; k <= 5; ++k) {
    const double v = ymax * k / 5.0;
    out += "<line x1=\"" + num(kLeft - 4) + "\" y1=\"" + num(py(v)) + "\" x2=\"" + num(kLeft + plot_w) + "\" y2=\"" +
           num(py(v)) + "\" stroke=\"#ddd\"/>\n";
    out += "<text x=\"" + num(kLeft - 7) + "\" y=\"" + num(py(v) + 4) + "\" text-anchor=\"end\">" +
           fmt("%.3g", v) + "</text>\n";
  }
  for (int k = 0; k <= 5; ++k) {
    const double t = xmin + (xmax - xmin) * k / 5.0;
    out += "<text x=\"" + num(px(t)) + "\" y=\"" + num(kTop + plot_h + 16) + "\" text-anchor=\"middle\">" +
           fmt("%.0f", t) + "</text>\n";
  }
  out += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 12) +
         "\" text-anchor=\"middle\">round</text>\n";
  out += "</g>\n";

  // Data.
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % kPalette.size()];
    for (std::size_t q = 0; q < kQuantities.size(); ++q) {
      out += "<polyline class=\"series\" data-gamma=\"" + format_double(series[s].gamma) + "\" data-quantity=\"" +
             kQuantities[q].name + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"";
      if (*kQuantities[q].dash) out += std::string(" stroke-dasharray=\"") + kQuantities[q].dash + "\"";
      out += " points=\"";
      for (std::size_t i = 0; i < series[s].rows.size(); ++i) {
        const auto& row = series[s].rows[i];
        if (i) out += ' ';
        out += num(px(rounds > 1 ? row.t : xmin)) + "," + num(py(values_of(row, panel)[q]));
      }
      out += "\"/>\n";
    }
  }

  // Legend: one swatch per gamma, one line style per quantity.
  const double lx = kLeft + plot_w + 18;
  double ly = kTop + 8;
  out += "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222\">\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    out += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 24) + "\" y2=\"" + num(ly) +
           "\" stroke=\"" + kPalette[s % kPalette.size()] + "\" stroke-width=\"3\"/>\n";
    out += "<text x=\"" + num(lx + 30) + "\" y=\"" + num(ly + 4) + "\">gamma = " + fmt("%.4g", series[s].gamma) +
           "</text>\n";
    ly += 18;
  }
  ly += 8;
  for (const auto& q : kQuantities) {
    out += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 24) + "\" y2=\"" + num(ly) +
           "\" stroke=\"#222\" stroke-width=\"1.5\"";
    if (*q.dash) out += std::string(" stroke-dasharray=\"") + q.dash + "\"";
    out += "/>\n<text x=\"" + num(lx + 30) + "\" y=\"" + num(ly + 4) + "\">" + q.name + "</text>\n";
    ly += 18;
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::filesystem::path emit_figure_svg(std::span<const CurveSeries> series, Panel panel,
                                      const std::filesystem::path& out) {
  const std::string svg = figure_svg(series, panel);
  if (out.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(out.parent_path(), ec);
  }
  write_text_file(out, svg);
  return out;
}

}  // namespace asymada
