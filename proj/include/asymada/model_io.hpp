#pragma once

#include <filesystem>
#include <string>

#include "asymada/classifier.hpp"

namespace asymada {

inline constexpr int kModelFormatVersion = 1;

// {"version":1,"gamma":g,"dim":d,"rounds":[{"alpha","feature","threshold","polarity"}...]}
std::string classifier_to_json(const StrongClassifier& classifier);
StrongClassifier classifier_from_json(const std::string& text);

void save_classifier(const StrongClassifier& classifier, const std::filesystem::path& path);
StrongClassifier load_classifier(const std::filesystem::path& path);

}  // namespace asymada
