#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <regex>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "asymada/cli.hpp"
#include "asymada/cloud.hpp"
#include "asymada/dataset_io.hpp"
#include "asymada/fetch.hpp"
#include "asymada/errors.hpp"

using namespace asymada;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "asymada");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("asymada_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string s(const fs::path& p) { return p.string(); }

nlohmann::json load_json(const fs::path& p) { return nlohmann::json::parse(read_text_file(p)); }

}  // namespace

TEST_CASE("top level") {
  CHECK(cli({"--version"}).code == 0);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({"train"}).code == 2);
}

TEST_CASE("synth") {
  const auto dir = temp_dir("synth");
  auto r = cli({"synth", "--pos", "250", "--neg", "250", "--overlap", "0.3", "--seed", "42", "--out", s(dir / "cloud")});
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "cloud" / "cloud.csv"));
  CHECK(fs::exists(dir / "cloud" / "cloud.manifest.json"));
  CHECK(r.out.find("m=250 n=500") != std::string::npos);
  CHECK(r.out.find("separable=no") != std::string::npos);

  r = cli({"synth", "--pos", "250", "--neg", "250", "--overlap", "0.3", "--seed", "42", "--out", s(dir / "again")});
  CHECK(load_json(dir / "cloud" / "cloud.manifest.json")["checksum"] ==
        load_json(dir / "again" / "cloud.manifest.json")["checksum"]);

  CHECK(cli({"synth", "--pos", "0", "--out", s(dir)}).code == 2);
  CHECK(cli({"synth", "--outer", "0.5", "--out", s(dir)}).code == 2);
  CHECK(cli({"synth", "--preset", "nope", "--out", s(dir)}).code == 2);

  r = cli({"synth", "--preset", "separable", "--name", "sep", "--out", s(dir)});
  CHECK(r.code == 0);
  CHECK(r.out.find("separable=yes") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("train") {
  const auto dir = temp_dir("train");
  REQUIRE(cli({"synth", "--preset", "overlapping", "--pos", "60", "--neg", "60", "--out", s(dir), "--name", "ov"}).code == 0);
  REQUIRE(cli({"synth", "--preset", "separable", "--out", s(dir), "--name", "sep"}).code == 0);
  const auto data = s(dir / "ov.csv");

  SUBCASE("writes model, round log and identity report") {
    const auto r = cli({"train", "--data", data, "--gamma", "0.875", "--rounds", "100", "--out", s(dir / "model.json")});
    CHECK(r.code == 0);
    const auto model = load_json(dir / "model.json");
    CHECK(model["rounds"].size() == 100);
    CHECK(model["gamma"] == 0.875);
    CHECK(fs::exists(dir / "model.rounds.csv"));
    CHECK(load_json(dir / "model.identities.json")["ok"] == true);
  }
  SUBCASE("fraction gamma") {
    CHECK(cli({"train", "--data", data, "--gamma", "2/3", "--rounds", "5", "--out", s(dir / "m.json")}).code == 0);
    CHECK(load_json(dir / "m.json")["gamma"].get<double>() == 2.0 / 3.0);
  }
  SUBCASE("gamma must be strictly inside (0,1)") {
    for (const char* g : {"1.0", "0", "1/1", "-0.2", "abc", "3/0"}) {
      INFO(g);
      CHECK(cli({"train", "--data", data, "--gamma", g, "--out", s(dir / "x.json")}).code == 2);
    }
  }
  SUBCASE("early stop on separable data") {
    const auto r = cli({"train", "--data", s(dir / "sep.csv"), "--rounds", "100", "--stop-train-err", "0", "--out",
                        s(dir / "sep.json")});
    CHECK(r.code == 0);
    const auto n = load_json(dir / "sep.json")["rounds"].size();
    CHECK(n < 100);
    CHECK(n >= 1);
  }
  SUBCASE("missing data file") {
    CHECK(cli({"train", "--data", s(dir / "nope.csv"), "--out", s(dir / "x.json")}).code == 2);
  }
  SUBCASE("bad data") {
    write_text_file(dir / "bad.csv", "a,label\n1,1\nx,0\n");
    const auto r = cli({"train", "--data", s(dir / "bad.csv"), "--out", s(dir / "x.json")});
    CHECK(r.code == 3);
    CHECK(r.err.find("line 3") != std::string::npos);
    write_text_file(dir / "const.csv", "a,label\n1,1\n1,0\n");
    CHECK(cli({"train", "--data", s(dir / "const.csv"), "--out", s(dir / "x.json")}).code == 3);
    write_text_file(dir / "one.csv", "a,label\n1,1\n2,1\n");
    CHECK(cli({"train", "--data", s(dir / "one.csv"), "--out", s(dir / "x.json")}).code == 3);
  }
  SUBCASE("schema options") {
    write_text_file(dir / "semi.csv", "9;2.5;bad\n8;1.0;good\n7;3.5;bad\n6;0.5;good\n");
    const auto r = cli({"train", "--data", s(dir / "semi.csv"), "--no-header", "--delimiter", ";", "--label-column", "2",
                        "--positive-label", "bad", "--negative-label", "good", "--rounds", "3", "--out",
                        s(dir / "semi.json")});
    CHECK(r.code == 0);
    CHECK(load_json(dir / "semi.json")["dim"] == 2);
  }
  SUBCASE("sample weights") {
    write_text_file(dir / "tiny.csv", "x,label\n1,1\n2,1\n3,0\n4,0\n");
    write_text_file(dir / "w.txt", "3\n1\n1\n1\n");
    CHECK(cli({"train", "--data", s(dir / "tiny.csv"), "--sample-weights", s(dir / "w.txt"), "--rounds", "2", "--out",
               s(dir / "w.json")})
              .code == 0);
    write_text_file(dir / "w2.txt", "1\n1\n");
    CHECK(cli({"train", "--data", s(dir / "tiny.csv"), "--sample-weights", s(dir / "w2.txt"), "--out",
               s(dir / "w.json")})
              .code != 0);
  }
  SUBCASE("output directory from the environment") {
    ::setenv(kOutDirEnv, s(dir / "envout").c_str(), 1);
    const auto r = cli({"train", "--data", data, "--rounds", "2"});
    ::unsetenv(kOutDirEnv);
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "envout" / "model.json"));
  }
  SUBCASE("config file, flags take precedence") {
    write_text_file(dir / "cfg.ini", "[train]\nrounds=7\ngamma=0.75\n");
    auto r = cli({"--config", s(dir / "cfg.ini"), "train", "--data", data, "--out", s(dir / "c.json")});
    CHECK(r.code == 0);
    CHECK(load_json(dir / "c.json")["rounds"].size() == 7);
    CHECK(load_json(dir / "c.json")["gamma"] == 0.75);
    r = cli({"--config", s(dir / "cfg.ini"), "train", "--data", data, "--rounds", "3", "--out", s(dir / "c.json")});
    CHECK(load_json(dir / "c.json")["rounds"].size() == 3);
  }
  fs::remove_all(dir);
}

TEST_CASE("loocv") {
  const auto dir = temp_dir("loocv");
  REQUIRE(cli({"synth", "--preset", "overlapping", "--pos", "25", "--neg", "25", "--out", s(dir)}).code == 0);
  const auto data = s(dir / "cloud.csv");
  const auto r1 = cli({"loocv", "--data", data, "--gammas", "0.5,0.6,0.6667,0.875", "--rounds", "20", "--workers",
                       "1", "--out", s(dir / "w1")});
  REQUIRE(r1.code == 0);

  // Header plus four rows; AsErr consistent with the printed FN and FP.
  std::istringstream in(r1.out);
  std::string line;
  std::getline(in, line);
  CHECK(line.find("AsErr") != std::string::npos);
  std::regex row(R"(^\s*([0-9.]+)\s+([0-9.]+)%\s+([0-9.]+)%\s+([0-9.]+)%\s+([0-9.]+)%\s*$)");
  int rows = 0;
  while (std::getline(in, line)) {
    std::smatch m;
    if (!std::regex_match(line, m, row)) continue;
    ++rows;
    const double g = std::stod(m[1]), fn = std::stod(m[2]), fp = std::stod(m[3]), as = std::stod(m[5]);
    CHECK(std::abs(g * fn + (1 - g) * fp - as) <= 0.005 + 0.005 + 1e-9);
  }
  CHECK(rows == 4);

  const auto r8 = cli({"loocv", "--data", data, "--gammas", "0.5,0.6,0.6667,0.875", "--rounds", "20", "--workers",
                       "8", "--out", s(dir / "w8")});
  REQUIRE(r8.code == 0);
  for (const auto& e : fs::directory_iterator(dir / "w1")) {
    const auto name = e.path().filename();
    if (name == "run_manifest.json") continue;
    CHECK(read_text_file(e.path()) == read_text_file(dir / "w8" / name));
  }
  const auto manifest = load_json(dir / "w8" / "run_manifest.json");
  CHECK(manifest["command"] == "loocv");
  CHECK(manifest["config"]["workers"] == 8);
  CHECK(manifest.contains("wall_time_seconds"));

  CHECK(cli({"loocv", "--data", data, "--gammas", "0.5,1.5", "--out", s(dir / "bad")}).code == 2);
  write_text_file(dir / "tiny.csv", "x,label\n1,1\n2,0\n3,0\n");
  CHECK(cli({"loocv", "--data", s(dir / "tiny.csv"), "--out", s(dir / "bad")}).code == 3);
  fs::remove_all(dir);
}

TEST_CASE("curves") {
  const auto dir = temp_dir("curves");
  REQUIRE(cli({"synth", "--preset", "separable", "--pos", "40", "--neg", "40", "--out", s(dir), "--name", "tr"}).code == 0);
  REQUIRE(cli({"synth", "--preset", "separable", "--pos", "40", "--neg", "40", "--seed", "7", "--out", s(dir), "--name",
               "te"})
              .code == 0);

  auto r = cli({"curves", "--train", s(dir / "tr.csv"), "--test", s(dir / "te.csv"), "--gammas", "0.5", "--rounds",
                "10", "--out", s(dir / "one")});
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "one" / "curves_gamma_0.5.csv"));
  for (const char* f : {"bounds.svg", "train.svg", "test.svg", "run_manifest.json"}) CHECK(fs::exists(dir / "one" / f));

  r = cli({"curves", "--train", s(dir / "tr.csv"), "--test", s(dir / "missing.csv"), "--out", s(dir / "x")});
  CHECK(r.code == 2);

  write_text_file(dir / "wide.csv", "a,b,c,label\n1,2,3,1\n4,5,6,0\n");
  r = cli({"curves", "--train", s(dir / "tr.csv"), "--test", s(dir / "wide.csv"), "--out", s(dir / "x")});
  CHECK(r.code == 3);
  fs::remove_all(dir);
}

TEST_CASE("fetch") {
  CHECK(parse_http_url("http://example.org/a/b.csv").path == "/a/b.csv");
  CHECK(parse_http_url("http://example.org:8080").port == 8080);
  CHECK_THROWS_AS(parse_http_url("https://example.org/x"), UsageError);
  CHECK_THROWS_AS(parse_http_url("ftp://example.org/x"), UsageError);
  CHECK_THROWS_AS(parse_http_url("http://host:99999/x"), UsageError);

  httplib::Server server;
  server.Get("/pima.csv", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("f1,label\n1,1\n2,0\n", "text/csv");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  const auto dir = temp_dir("fetch");
  const std::string base = "http://127.0.0.1:" + std::to_string(port);
  auto r = cli({"fetch", "--url", base + "/pima.csv", "--out", s(dir / "pima.csv")});
  CHECK(r.code == 0);
  CHECK(read_text_file(dir / "pima.csv") == "f1,label\n1,1\n2,0\n");
  r = cli({"fetch", "--url", base + "/missing", "--out", s(dir / "m.csv")});
  CHECK(r.code == 3);
  CHECK(cli({"fetch", "--url", "https://x/y", "--out", s(dir / "m.csv")}).code == 2);

  server.stop();
  t.join();
  fs::remove_all(dir);
}
