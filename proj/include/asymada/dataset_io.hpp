#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "asymada/cloud.hpp"
#include "asymada/csv_loader.hpp"
#include "asymada/dataset.hpp"

namespace asymada {

// Canonical serialization: header "x0,...,x{d-1},label", then one row per
// sample in positives-first order, features in shortest round-trip decimal,
// label as 1 or -1, '\n' line endings.
std::string canonical_csv(const Dataset& data);

// Schema that reads canonical_csv output back.
CsvSchema canonical_schema();

// 64-bit FNV-1a over the bytes, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

// Checksum of canonical_csv(data).
std::string dataset_checksum(const Dataset& data);

void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

// Manifest JSON {source, spec|schema, seed, rng, m, n, d, checksum}.
std::string cloud_manifest_json(const Dataset& data, const CloudSpec& spec, const std::string& source);
std::string csv_manifest_json(const Dataset& data, const CsvSchema& schema, const std::string& source);

}  // namespace asymada
