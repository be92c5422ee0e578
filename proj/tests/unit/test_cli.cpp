#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("ortho_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = ortho::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("construct") {
  TempDir d;
  const std::string scene =
      d.write("right.json", R"({"norm":{"kind":"lp","p":2},"triangle":[[0,0],[4,0],[0,3]]})");
  const Run r = run({"construct", "--scene", scene, "--out", d.file("a.json"), "--svg", d.file("a.svg")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(d.file("a.json")));
  CHECK(std::fabs(j["config"]["x4"][0].get<double>()) <= 1e-12);
  CHECK(std::fabs(j["config"]["x4"][1].get<double>()) <= 1e-12);
  CHECK(j["six_point_circle"]["radius"].get<double>() == doctest::Approx(1.25));
  CHECK(slurp(d.file("a.svg")).find("</svg>") != std::string::npos);

  REQUIRE(run({"construct", "--scene", scene, "--out", d.file("b.json")}).code == 0);
  CHECK(slurp(d.file("a.json")) == slurp(d.file("b.json")));

  const Run with_p4 = run({"construct", "--scene",
                           d.write("p4.json", R"({"norm":{"kind":"lp","p":2},"triangle":[[0,0],[4,0],[0,3]],"p4":[2,1.5]})")});
  CHECK(with_p4.code == 0);
  CHECK(with_p4.err.empty());

  const Run off = run({"construct", "--scene",
                       d.write("off.json", R"({"norm":{"kind":"lp","p":2},"triangle":[[0,0],[4,0],[0,3]],"p4":[1,1]})")});
  CHECK(off.code == 0);
  CHECK(off.err.find("warning") != std::string::npos);
  CHECK(nlohmann::json::parse(off.out)["config"]["lambda"].is_null());
}

TEST_CASE("construct errors") {
  TempDir d;
  const Run col = run({"construct", "--scene",
                       d.write("c.json", R"({"norm":{"kind":"lp","p":2},"triangle":[[0,0],[1,0],[2,0]]})")});
  CHECK(col.code == 2);
  CHECK(col.err.find("degenerate: collinear") != std::string::npos);
  CHECK(run({"construct", "--scene", d.write("bad.json", "{not json")}).code == 2);
  CHECK(run({"construct", "--scene", d.file("missing.json")}).code == 2);
  CHECK(run({"construct", "--scene",
             d.write("n.json", R"({"norm":{"kind":"lp","p":0.3},"triangle":[[0,0],[1,0],[0,1]]})")})
            .code == 2);
  CHECK(run({"construct"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("verify") {
  TempDir d;
  const Run ok = run({"verify", "--scene",
                      d.write("q.json", R"({"norm":{"kind":"lp","p":2},"points":[[-1,1.4142135623730951],[1,1.4142135623730951],[0,-1],[0,1]]})")});
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("orthocentric", 0) == 0);
  const Run col = run({"verify", "--scene",
                       d.write("c.json", R"({"norm":{"kind":"lp","p":2},"points":[[0,0],[1,0],[2.5,0],[4,0]]})")});
  CHECK(col.code == 1);
  CHECK(col.out.rfind("not orthocentric", 0) == 0);
  const Run dup = run({"verify", "--scene",
                       d.write("d.json", R"({"norm":{"kind":"lp","p":2},"points":[[4,0],[0,3],[0,0],[0,0]]})")});
  CHECK(dup.code == 3);
  CHECK(dup.out.rfind("indeterminate", 0) == 0);
  CHECK(run({"verify", "--scene", d.write("e.json", R"({"norm":{"kind":"lp","p":2},"points":[[4,0]]})")}).code == 2);
}

TEST_CASE("detect") {
  TempDir d;
  const std::string norm = d.write("n.json", R"({"kind":"lp","p":2})");
  const Run r = run({"detect", "--norm", norm, "--samples", "50", "--seed", "3", "--out", d.file("r.json"),
                     "--csv", d.file("r.csv")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("T2: consistent with Euclidean (max defect <= 1e-07)") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
  REQUIRE(run({"detect", "--norm", norm, "--samples", "50", "--seed", "3", "--out", d.file("s.json"),
               "--csv", d.file("s.csv"), "--serial"})
              .code == 0);
  CHECK(slurp(d.file("r.json")) == slurp(d.file("s.json")));
  CHECK(slurp(d.file("r.csv")) == slurp(d.file("s.csv")));

  const Run l15 = run({"detect", "--norm", R"({"kind":"lp","p":1.5})", "--samples", "50"});
  CHECK(l15.code == 0);
  CHECK(l15.out.find("non-Euclidean signature") != std::string::npos);

  CHECK(run({"detect", "--norm", norm, "--samples", "0"}).code == 2);
  CHECK(run({"detect", "--norm", norm, "--samples", "-4"}).code == 2);
  CHECK(run({"detect", "--norm", "nonsense", "--samples", "4"}).code == 2);
}

TEST_CASE("plot") {
  TempDir d;
  const Run r = run({"plot", "--norm", R"({"kind":"lp","p":"inf"})", "--phi", "0.3", "--svg", d.file("p.svg")});
  CHECK(r.code == 0);
  CHECK(slurp(d.file("p.svg")).find("</svg>") != std::string::npos);
  CHECK(run({"plot", "--norm", R"({"kind":"lp","p":2})", "--arc", "sideways"}).code == 2);
  CHECK(run({"plot", "--norm", R"({"kind":"lp","p":2})", "--radius", "0"}).code == 2);
}

TEST_CASE("help") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("construct") != std::string::npos);
}
