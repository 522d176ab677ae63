#include "asymada/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "asymada/errors.hpp"

namespace asymada {

using nlohmann::ordered_json;

std::string classifier_to_json(const StrongClassifier& classifier) {
  ordered_json doc;
  doc["version"] = kModelFormatVersion;
  doc["gamma"] = classifier.gamma_used();
  doc["dim"] = classifier.dim();
  doc["rounds"] = ordered_json::array();
  for (const auto& r : classifier.rounds()) {
    doc["rounds"].push_back({{"alpha", r.alpha},
                             {"feature", r.stump.feature},
                             {"threshold", r.stump.threshold},
                             {"polarity", r.stump.polarity}});
  }
  return doc.dump(2) + "\n";
}

StrongClassifier classifier_from_json(const std::string& text) {
  try {
    const auto doc = ordered_json::parse(text);
    const int version = doc.at("version").get<int>();
    if (version != kModelFormatVersion) {
      throw DataError("unsupported model version " + std::to_string(version));
    }
    StrongClassifier c(doc.value("dim", std::size_t{0}), doc.at("gamma").get<double>());
    for (const auto& r : doc.at("rounds")) {
      Stump s;
      s.feature = r.at("feature").get<std::size_t>();
      s.threshold = r.at("threshold").get<double>();
      s.polarity = r.at("polarity").get<int>();
      if (s.polarity != 1 && s.polarity != -1) throw DataError("stump polarity must be +1 or -1");
      c.add(r.at("alpha").get<double>(), s);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed model document: ") + e.what());
  }
}

void save_classifier(const StrongClassifier& classifier, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << classifier_to_json(classifier);
  if (!out) throw DataError("failed writing " + path.string());
}

StrongClassifier load_classifier(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return classifier_from_json(ss.str());
}

}  // namespace asymada
