#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "asymada/dataset.hpp"

namespace asymada {

// A column addressed by header name or zero-based index.
using ColumnRef = std::variant<std::string, std::size_t>;

struct CsvSchema {
  ColumnRef label_column = std::string("label");
  std::string positive_label = "1";
  // When set, label values other than positive_label and negative_label are
  // rejected; otherwise every other value maps to -1.
  std::optional<std::string> negative_label;
  char delimiter = ',';
  bool has_header = true;
  // Empty means every column except the label.
  std::vector<ColumnRef> feature_columns;
};

struct LoadedCsv {
  Dataset dataset;
  std::vector<std::string> feature_names;
};

// Reads a CSV into a positives-first dataset. Throws DataError naming the
// 1-based line for malformed rows, missing or non-numeric features, and
// unmapped labels; throws DataError if a class ends up empty.
LoadedCsv load_csv(const std::filesystem::path& path, const CsvSchema& schema);
LoadedCsv parse_csv(const std::string& text, const CsvSchema& schema);

std::vector<std::string> split_csv_line(const std::string& line, char delimiter);

}  // namespace asymada
