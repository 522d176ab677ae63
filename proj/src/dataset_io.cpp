#include "asymada/dataset_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "asymada/errors.hpp"
#include "asymada/format.hpp"

namespace asymada {

using nlohmann::ordered_json;

std::string canonical_csv(const Dataset& data) {
  std::string out;
  for (std::size_t f = 0; f < data.dim(); ++f) out += "x" + std::to_string(f) + ",";
  out += "label\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (double v : data.features(i)) {
      out += format_double(v);
      out += ',';
    }
    out += data.label(i) > 0 ? "1\n" : "-1\n";
  }
  return out;
}

CsvSchema canonical_schema() {
  CsvSchema s;
  s.label_column = std::string("label");
  s.positive_label = "1";
  s.negative_label = "-1";
  return s;
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string dataset_checksum(const Dataset& data) { return fnv1a64_hex(canonical_csv(data)); }

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw DataError("failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

ordered_json column_json(const ColumnRef& ref) {
  if (const auto* idx = std::get_if<std::size_t>(&ref)) return *idx;
  return std::get<std::string>(ref);
}

ordered_json shape_json(const Dataset& data) {
  ordered_json j;
  j["m"] = data.num_positives();
  j["n"] = data.size();
  j["d"] = data.dim();
  j["checksum"] = dataset_checksum(data);
  j["checksum_algorithm"] = "fnv1a64(canonical_csv)";
  return j;
}

}  // namespace

std::string cloud_manifest_json(const Dataset& data, const CloudSpec& spec, const std::string& source) {
  ordered_json j;
  j["source"] = source;
  j["spec"] = {{"n_pos", spec.n_pos},
               {"n_neg", spec.n_neg},
               {"inner_radius", spec.inner_radius},
               {"outer_radius", spec.outer_radius},
               {"gap", spec.gap},
               {"overlap_fraction", spec.overlap_fraction}};
  j["seed"] = spec.seed;
  j["rng"] = kCloudRngId;
  j["separable"] = spec.separable();
  j.update(shape_json(data));
  return j.dump(2) + "\n";
}

std::string csv_manifest_json(const Dataset& data, const CsvSchema& schema, const std::string& source) {
  ordered_json j;
  j["source"] = source;
  ordered_json s;
  s["label_column"] = column_json(schema.label_column);
  s["positive_label"] = schema.positive_label;
  if (schema.negative_label) s["negative_label"] = *schema.negative_label;
  s["delimiter"] = std::string(1, schema.delimiter);
  s["has_header"] = schema.has_header;
  s["feature_columns"] = ordered_json::array();
  for (const auto& c : schema.feature_columns) s["feature_columns"].push_back(column_json(c));
  j["schema"] = s;
  j["seed"] = nullptr;
  j.update(shape_json(data));
  return j.dump(2) + "\n";
}

}  // namespace asymada
