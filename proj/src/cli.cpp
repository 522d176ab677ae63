#include "asymada/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "asymada/boost.hpp"
#include "asymada/cloud.hpp"
#include "asymada/csv_loader.hpp"
#include "asymada/dataset_io.hpp"
#include "asymada/errors.hpp"
#include "asymada/fetch.hpp"
#include "asymada/format.hpp"
#include "asymada/harness.hpp"
#include "asymada/metrics.hpp"
#include "asymada/model_io.hpp"
#include "asymada/report.hpp"
#include "asymada/version.hpp"

namespace asymada {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string default_out_dir() {
  const char* env = std::getenv(kOutDirEnv);
  return env && *env ? env : ".";
}

struct DataOptions {
  std::string label_column = "label";
  std::string positive_label = "1";
  std::string negative_label;
  std::string delimiter = ",";
  bool no_header = false;
  std::string sample_weights;
};

void add_schema_options(CLI::App* cmd, DataOptions& o) {
  cmd->add_option("--label-column", o.label_column, "Label column name, or zero-based index with --no-header")
      ->capture_default_str();
  cmd->add_option("--positive-label", o.positive_label, "Label value mapped to +1")->capture_default_str();
  cmd->add_option("--negative-label", o.negative_label, "Label value mapped to -1 (others rejected when set)");
  cmd->add_option("--delimiter", o.delimiter, "Field delimiter")->capture_default_str();
  cmd->add_flag("--no-header", o.no_header, "Input has no header row");
  cmd->add_option("--sample-weights", o.sample_weights,
                  "File with one initial weight per data row; normalized within each class");
}

CsvSchema make_schema(const DataOptions& o) {
  CsvSchema s;
  if (o.delimiter.size() != 1) throw UsageError("delimiter must be a single character");
  s.delimiter = o.delimiter.front();
  s.has_header = !o.no_header;
  if (s.has_header) {
    s.label_column = o.label_column;
  } else {
    try {
      const double idx = parse_double(o.label_column);
      if (idx < 0 || idx != static_cast<double>(static_cast<std::size_t>(idx))) throw UsageError("");
      s.label_column = static_cast<std::size_t>(idx);
    } catch (const UsageError&) {
      throw UsageError("--label-column must be a column index when --no-header is given");
    }
  }
  s.positive_label = o.positive_label;
  if (!o.negative_label.empty()) s.negative_label = o.negative_label;
  return s;
}

Dataset load_data(const std::string& path, const DataOptions& o) {
  if (!fs::exists(path)) throw UsageError("data file not found: " + path);
  return load_csv(path, make_schema(o)).dataset;
}

// Per-class initial distributions from a per-row weight file, in canonical order.
std::pair<std::vector<double>, std::vector<double>> class_weights_from_file(const std::string& path,
                                                                            const Dataset& data) {
  std::istringstream in(read_text_file(path));
  std::vector<double> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      rows.push_back(parse_double(line));
    } catch (const UsageError&) {
      throw DataError(path + ": line " + std::to_string(line_no) + ": not a number");
    }
    if (!(rows.back() >= 0.0)) throw DataError(path + ": line " + std::to_string(line_no) + ": negative weight");
  }
  if (rows.size() != data.size()) {
    throw DataError(path + ": expected " + std::to_string(data.size()) + " weights, got " +
                    std::to_string(rows.size()));
  }
  std::vector<double> pos, neg;
  for (std::size_t i = 0; i < data.size(); ++i) {
    (data.is_positive(i) ? pos : neg).push_back(rows[data.source_rows()[i]]);
  }
  for (auto* v : {&pos, &neg}) {
    const double total = std::accumulate(v->begin(), v->end(), 0.0);
    if (!(total > 0.0)) throw DataError(path + ": a class has zero total weight");
    for (double& x : *v) x /= total;
  }
  return {pos, neg};
}

std::vector<double> parse_gamma_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_gamma(item));
  if (out.empty()) throw UsageError("empty gamma list");
  return out;
}

fs::path with_suffix(const fs::path& p, const std::string& suffix) {
  fs::path base = p;
  if (base.extension() == ".json") base.replace_extension();
  return fs::path(base.string() + suffix);
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!fs::is_directory(dir)) throw DataError("cannot create output directory " + dir.string());
}

ordered_json dataset_summary(const std::string& path, const Dataset& d) {
  return {{"path", path}, {"m", d.num_positives()}, {"n", d.size()}, {"d", d.dim()},
          {"checksum", dataset_checksum(d)}};
}

void write_run_manifest(const fs::path& dir, const std::string& command, ordered_json config,
                        ordered_json outputs, std::chrono::steady_clock::time_point start) {
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ordered_json j;
  j["tool"] = "asymada";
  j["version"] = kVersion;
  j["command"] = command;
  j["config"] = std::move(config);
  j["outputs"] = std::move(outputs);
  j["wall_time_seconds"] = wall;
  write_text_file(dir / "run_manifest.json", j.dump(2) + "\n");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymmetric (cost-sensitive) discrete AdaBoost with decision stumps", "asymada"};
  app.set_config("--config", "", "TOML/INI file with option values (command-line flags take precedence)");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // synth
  auto* synth = app.add_subcommand("synth", "Generate a synthetic disc/annulus cloud dataset");
  std::string preset = "plain";
  CloudSpec cloud;
  std::string synth_out = default_out_dir();
  std::string synth_name = "cloud";
  long long n_pos = 250, n_neg = 250;
  synth->add_option("--preset", preset, "Starting geometry: plain, separable or overlapping")
      ->check(CLI::IsMember({"plain", "separable", "overlapping"}))
      ->capture_default_str();
  synth->add_option("--pos", n_pos, "Number of positives")->capture_default_str();
  synth->add_option("--neg", n_neg, "Number of negatives")->capture_default_str();
  auto* opt_inner = synth->add_option("--inner", cloud.inner_radius, "Positive disc radius");
  auto* opt_outer = synth->add_option("--outer", cloud.outer_radius, "Negative annulus outer radius");
  auto* opt_gap = synth->add_option("--gap", cloud.gap, "Empty ring between the classes");
  auto* opt_overlap = synth->add_option("--overlap", cloud.overlap_fraction, "Overlap fraction in [0,1)");
  synth->add_option("--seed", cloud.seed, "Random seed")->capture_default_str();
  synth->add_option("--out", synth_out, "Output directory")->capture_default_str();
  synth->add_option("--name", synth_name, "Output file stem")->capture_default_str();

  // train
  auto* trn = app.add_subcommand("train", "Train an asymmetric AdaBoost classifier");
  DataOptions train_data;
  std::string train_path, train_gamma = "1/2", model_out, round_log, identity_out;
  int train_rounds = 100;
  std::optional<double> stop_err, stop_bound;
  trn->add_option("--data", train_path, "Training CSV")->required();
  add_schema_options(trn, train_data);
  trn->add_option("--gamma", train_gamma, "Asymmetry in (0,1), decimal or fraction like 2/3")->capture_default_str();
  trn->add_option("--rounds", train_rounds, "Maximum number of rounds")->capture_default_str();
  trn->add_option("--out", model_out, "Model JSON path (default: $ASYMADA_OUT_DIR/model.json)");
  trn->add_option("--round-log", round_log, "Per-round CSV (default: <model>.rounds.csv)");
  trn->add_option("--identity-report", identity_out, "Identity residual JSON (default: <model>.identities.json)");
  trn->add_option("--stop-train-err", stop_err, "Stop once the initial-weight training error is <= this");
  trn->add_option("--stop-bound", stop_bound, "Stop once the error bound is <= this");

  // loocv
  auto* cv = app.add_subcommand("loocv", "Leave-one-out cross-validation over a gamma sweep");
  DataOptions cv_data;
  std::string cv_path, cv_gammas = "1/2,3/5,2/3,7/8", cv_out = default_out_dir();
  int cv_rounds = 100;
  std::size_t cv_workers = 1;
  cv->add_option("--data", cv_path, "Dataset CSV")->required();
  add_schema_options(cv, cv_data);
  cv->add_option("--gammas", cv_gammas, "Comma-separated gammas")->capture_default_str();
  cv->add_option("--rounds", cv_rounds, "Rounds per fold")->capture_default_str();
  cv->add_option("--workers", cv_workers, "Worker threads")->capture_default_str();
  cv->add_option("--out", cv_out, "Output directory")->capture_default_str();

  // curves
  auto* fetch = app.add_subcommand("fetch", "Download a dataset file over plain HTTP");
  std::string fetch_url;
  std::string fetch_out;
  fetch->add_option("--url", fetch_url, "http:// URL")->required();
  fetch->add_option("--out", fetch_out, "Destination file")->required();

  auto* cur = app.add_subcommand("curves", "Per-round bound and error curves with SVG panels");
  DataOptions cur_data;
  std::string cur_train, cur_test, cur_gammas = "1/2,3/5,2/3,7/8", cur_out = default_out_dir();
  int cur_rounds = 100;
  std::size_t cur_workers = 1;
  cur->add_option("--train", cur_train, "Training CSV")->required();
  cur->add_option("--test", cur_test, "Test CSV")->required();
  add_schema_options(cur, cur_data);
  cur->add_option("--gammas", cur_gammas, "Comma-separated gammas")->capture_default_str();
  cur->add_option("--rounds", cur_rounds, "Rounds")->capture_default_str();
  cur->add_option("--workers", cur_workers, "Worker threads")->capture_default_str();
  cur->add_option("--out", cur_out, "Output directory")->capture_default_str();

  std::vector<std::string> argv_store(args.begin(), args.end());
  if (argv_store.empty()) argv_store.push_back("asymada");
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (*synth) {
      if (n_pos < 1 || n_neg < 1) throw UsageError("--pos and --neg must be at least 1");
      CloudSpec spec = preset == "separable"     ? CloudSpec::separable_default()
                       : preset == "overlapping" ? CloudSpec::overlapping_default()
                                                 : CloudSpec{};
      if (*opt_inner) spec.inner_radius = cloud.inner_radius;
      if (*opt_outer) spec.outer_radius = cloud.outer_radius;
      if (*opt_gap) spec.gap = cloud.gap;
      if (*opt_overlap) spec.overlap_fraction = cloud.overlap_fraction;
      spec.n_pos = static_cast<std::size_t>(n_pos);
      spec.n_neg = static_cast<std::size_t>(n_neg);
      spec.seed = cloud.seed;
      spec.validate();

      const Dataset data = gen_cloud(spec);
      ensure_dir(synth_out);
      const fs::path csv = fs::path(synth_out) / (synth_name + ".csv");
      const fs::path manifest = fs::path(synth_out) / (synth_name + ".manifest.json");
      write_text_file(csv, canonical_csv(data));
      write_text_file(manifest, cloud_manifest_json(data, spec, "synth:" + preset));
      out << "m=" << data.num_positives() << " n=" << data.size() << " d=" << data.dim()
          << " separable=" << (spec.separable() ? "yes" : "no") << " checksum=" << dataset_checksum(data) << "\n";
      out << "wrote " << csv.string() << "\nwrote " << manifest.string() << "\n";
      return kExitOk;
    }

    if (*trn) {
      const double gamma = parse_gamma(train_gamma);
      if (train_rounds < 1) throw UsageError("--rounds must be at least 1");
      const Dataset data = load_data(train_path, train_data);
      const auto fraction = parse_gamma_fraction(train_gamma);
      WeightInit init = fraction ? WeightInit::uniform(data.num_positives(), data.num_negatives(), *fraction)
                                 : WeightInit::uniform(data.num_positives(), data.num_negatives(), gamma);
      if (!train_data.sample_weights.empty()) {
        auto [pos, neg] = class_weights_from_file(train_data.sample_weights, data);
        init.d1_pos = std::move(pos);
        init.d1_neg = std::move(neg);
      }
      StopPolicy stop;
      stop.train_error_target = stop_err;
      stop.bound_target = stop_bound;

      const TrainResult run = train(data, init, train_rounds, stop);
      if (run.reason == StopReason::Degenerate && run.records.empty()) {
        throw DataError("no discriminating stump: every feature is constant");
      }
      const fs::path model = model_out.empty() ? fs::path(default_out_dir()) / "model.json" : fs::path(model_out);
      if (model.has_parent_path()) ensure_dir(model.parent_path());
      const fs::path log = round_log.empty() ? with_suffix(model, ".rounds.csv") : fs::path(round_log);
      const fs::path ident = identity_out.empty() ? with_suffix(model, ".identities.json") : fs::path(identity_out);

      const IdentityReport rep = verify_identities(run.records, init);
      save_classifier(run.classifier, model);
      write_text_file(log, round_log_csv(run.records));
      write_text_file(ident, identity_report_json(rep, kIdentityTolerance));

      const RoundRecord& last = run.records.back();
      out << "rounds=" << run.records.size() << " stop=" << to_string(run.reason)
          << " bound=" << format_double(last.bound) << " train_error=" << format_double(last.train_error)
          << " max_identity_residual=" << format_double(rep.max_residual()) << "\n";
      out << "wrote " << model.string() << "\nwrote " << log.string() << "\nwrote " << ident.string() << "\n";
      if (!rep.ok()) {
        err << "identity check failed: residual " << format_double(rep.max_residual()) << " exceeds "
            << format_double(kIdentityTolerance) << "\n";
        return kExitIdentity;
      }
      return kExitOk;
    }

    if (*cv) {
      ExperimentConfig config;
      config.gammas = parse_gamma_list(cv_gammas);
      config.t_max = cv_rounds;
      config.workers = cv_workers;
      config.validate();
      const Dataset data = load_data(cv_path, cv_data);
      if (!cv_data.sample_weights.empty()) {
        auto [pos, neg] = class_weights_from_file(cv_data.sample_weights, data);
        config.d1_pos = std::move(pos);
        config.d1_neg = std::move(neg);
      }
      const auto results = loocv(data, config);

      ensure_dir(cv_out);
      ordered_json outputs = ordered_json::array();
      for (const auto& r : results) {
        const fs::path p = fs::path(cv_out) / loocv_file_name(r.gamma);
        write_text_file(p, loocv_report_json(r, config.t_max));
        outputs.push_back(p.filename().string());
      }
      const std::string table = summary_table(results);
      write_text_file(fs::path(cv_out) / "summary.txt", table);
      outputs.push_back("summary.txt");

      ordered_json cfg;
      cfg["data"] = dataset_summary(cv_path, data);
      cfg["gammas"] = config.gammas;
      cfg["rounds"] = config.t_max;
      cfg["workers"] = config.workers;
      cfg["sample_weights"] = cv_data.sample_weights;
      write_run_manifest(cv_out, "loocv", cfg, outputs, start);
      out << table;
      return kExitOk;
    }

    if (*fetch) {
      const std::string body = http_get(fetch_url);
      const fs::path dest(fetch_out);
      if (dest.has_parent_path()) ensure_dir(dest.parent_path());
      write_text_file(dest, body);
      out << "bytes=" << body.size() << " fnv1a64=" << fnv1a64_hex(body) << "\nwrote " << dest.string() << "\n";
      return kExitOk;
    }

    if (*cur) {
      ExperimentConfig config;
      config.gammas = parse_gamma_list(cur_gammas);
      config.t_max = cur_rounds;
      config.workers = cur_workers;
      config.validate();
      const Dataset train_set = load_data(cur_train, cur_data);
      const Dataset test_set = load_data(cur_test, cur_data);
      if (!cur_data.sample_weights.empty()) {
        auto [pos, neg] = class_weights_from_file(cur_data.sample_weights, train_set);
        config.d1_pos = std::move(pos);
        config.d1_neg = std::move(neg);
      }
      const auto series = curve_run(config, train_set, test_set);

      ensure_dir(cur_out);
      ordered_json outputs = ordered_json::array();
      for (const auto& f : emit_curves_csv(series, cur_out)) {
        outputs.push_back({{"file", f.path.filename().string()}, {"rows", f.rows}, {"empty", f.empty}});
      }
      bool all_same_length = true;
      for (const auto& s : series) all_same_length = all_same_length && s.rows.size() == series.front().rows.size();
      if (all_same_length && !series.front().rows.empty()) {
        for (Panel p : {Panel::Bounds, Panel::Train, Panel::Test}) {
          const fs::path svg = fs::path(cur_out) / (std::string(to_string(p)) + ".svg");
          emit_figure_svg(series, p, svg);
          outputs.push_back({{"file", svg.filename().string()}});
        }
      } else {
        err << "warning: series lengths differ or are empty; SVG panels skipped\n";
      }

      ordered_json cfg;
      cfg["train"] = dataset_summary(cur_train, train_set);
      cfg["test"] = dataset_summary(cur_test, test_set);
      cfg["gammas"] = config.gammas;
      cfg["rounds"] = config.t_max;
      cfg["workers"] = config.workers;
      cfg["sample_weights"] = cur_data.sample_weights;
      write_run_manifest(cur_out, "curves", cfg, outputs, start);
      for (const auto& s : series) {
        const auto& last = s.rows.empty() ? CurveRow{} : s.rows.back();
        out << "gamma=" << format_double(s.gamma) << " rounds=" << s.rows.size()
            << " bound=" << format_double(last.bound) << " train_err=" << format_double(last.train_err)
            << " test_err=" << format_double(last.test_err) << "\n";
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace asymada
