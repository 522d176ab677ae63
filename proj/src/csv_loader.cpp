#include "asymada/csv_loader.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "asymada/errors.hpp"
#include "asymada/format.hpp"

namespace asymada {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

std::size_t resolve(const ColumnRef& ref, const std::vector<std::string>& header, std::size_t width) {
  if (const auto* idx = std::get_if<std::size_t>(&ref)) {
    if (*idx >= width) throw DataError("column index " + std::to_string(*idx) + " out of range");
    return *idx;
  }
  const auto& name = std::get<std::string>(ref);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw DataError("column '" + name + "' not found in header");
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line, char delimiter) {
  std::vector<std::string> out;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == delimiter) {
      out.push_back(trim(cell));
      cell.clear();
    } else {
      cell += c;
    }
  }
  out.push_back(trim(cell));
  return out;
}

LoadedCsv parse_csv(const std::string& text, const CsvSchema& schema) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  std::vector<std::string> header;
  std::size_t width = 0;
  std::size_t label_col = 0;
  std::vector<std::size_t> feature_cols;
  bool resolved = false;

  auto resolve_columns = [&](std::size_t w) {
    width = w;
    label_col = resolve(schema.label_column, header, width);
    if (schema.feature_columns.empty()) {
      for (std::size_t i = 0; i < width; ++i) {
        if (i != label_col) feature_cols.push_back(i);
      }
    } else {
      for (const auto& ref : schema.feature_columns) feature_cols.push_back(resolve(ref, header, width));
    }
    if (feature_cols.empty()) throw DataError("no feature columns");
    resolved = true;
  };

  std::vector<LabeledSample> samples;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split_csv_line(line, schema.delimiter);
    if (!resolved) {
      if (schema.has_header) {
        header = cells;
        resolve_columns(cells.size());
        continue;
      }
      resolve_columns(cells.size());
    }
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (cells.size() != width) {
      throw DataError(where + "expected " + std::to_string(width) + " fields, got " + std::to_string(cells.size()));
    }

    LabeledSample s;
    const std::string& lab = cells[label_col];
    if (lab.empty()) throw DataError(where + "missing label");
    if (lab == schema.positive_label) {
      s.label = 1;
    } else if (!schema.negative_label || lab == *schema.negative_label) {
      s.label = -1;
    } else {
      throw DataError(where + "unmapped label value '" + lab + "'");
    }

    s.features.reserve(feature_cols.size());
    for (std::size_t c : feature_cols) {
      const std::string& cell = cells[c];
      const std::string col = header.empty() ? "column " + std::to_string(c) : "column '" + header[c] + "'";
      if (cell.empty() || cell == "?" || cell == "NA") throw DataError(where + "missing value in " + col);
      double v = 0.0;
      try {
        v = parse_double(cell);
      } catch (const UsageError&) {
        throw DataError(where + "non-numeric value '" + cell + "' in " + col);
      }
      if (!std::isfinite(v)) throw DataError(where + "non-finite value in " + col);
      s.features.push_back(v);
    }
    samples.push_back(std::move(s));
  }
  if (samples.empty()) throw DataError("no data rows");

  LoadedCsv out;
  for (std::size_t c : feature_cols) {
    out.feature_names.push_back(header.empty() ? "x" + std::to_string(c) : header[c]);
  }
  out.dataset = Dataset::from_samples(std::move(samples));
  return out;
}

LoadedCsv load_csv(const std::filesystem::path& path, const CsvSchema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_csv(ss.str(), schema);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

}  // namespace asymada
