#include <filesystem>
#include <fstream>
#include <sstream>

#include "common.hpp"
#include "pz/cli.hpp"
#include "pz/error.hpp"
#include "pz/io.hpp"

using namespace pz;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str() const { return path.string(); }
};

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("doubles round-trip") {
    for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) CHECK(std::stod(format_double(x)) == x);
    CHECK(format_double(0.5) == "0.5");
  }

  TEST_CASE("header block") {
    const std::string h = header_block("dim", {{"b", 4.0}});
    CHECK(h.rfind(std::string("# pzeta ") + version() + "\n", 0) == 0);
    CHECK(h.find("# command: dim\n") != std::string::npos);
    CHECK(h.find("# config: {\"b\":4.0}\n") != std::string::npos);
    const auto j = header_json("dim", {{"b", 4.0}});
    CHECK(j["version"] == version());
  }

  TEST_CASE("csv table") {
    CsvTable t({"x", "y"});
    t.add_numbers({1.0, 0.25});
    t.add({"a", "b"});
    CHECK(t.render("# h\n") == "# h\nx,y\n1,0.25\na,b\n");
    CHECK_THROWS_AS(t.add({"only"}), DomainError);
  }

  TEST_CASE("orbit and zero tables") {
    const PantsSurface& s = pzt::surface(3.0);
    const std::string csv = orbits_csv(enumerate_orbits(s, 2, false), "");
    CHECK(csv.rfind("word,n,length,multiplier,primitive\n", 0) == 0);
    ZeroSet zs;
    zs.zeros.push_back({Complex(0.1, 2.0), 1e-9, 1, 3});
    const std::string z = zeros_csv(zs, 3.0, "");
    CHECK(z.rfind("re,im,rescaled_re,rescaled_im,residual,box\n", 0) == 0);
    const auto e = evaluation_json(pzt::zeta(3.0).eval(Complex(0.5, 1.0)));
    for (const char* k : {"s_re", "s_im", "value_re", "value_im", "N", "tail", "orbit_count"}) CHECK(e.contains(k));
    CHECK(surface_json(s).contains("b"));
  }
}

TEST_SUITE("cli") {
  TEST_CASE("usage errors") {
    CHECK(run({"--bogus"}).code == kExitUsage);
    CHECK(run({"dim"}).code == kExitUsage);
    CHECK(run({"dim", "--b", "-1"}).code == kExitUsage);
    CHECK(run({"count", "--b", "2", "--t", "x"}).code == kExitUsage);
    CHECK(run({"--kernel", "sse9", "dim", "--b", "2"}).code == kExitUsage);
    CHECK(run({"--version"}).code == kExitOk);
  }

  TEST_CASE("validate exit codes") {
    const Run ok = run({"validate", "--only", "6"});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("PASS") != std::string::npos);
    const Run bad = run({"validate", "--only", "2", "--inject-fault", "length"});
    CHECK(bad.code == kExitNumeric);
    CHECK(bad.out.find("FAIL") != std::string::npos);
  }

  TEST_CASE("count") {
    TempDir d("pz-cli-count");
    const Run r = run({"--out-dir", d.str(), "count", "--b", "2", "--t", "4.01,12", "-o", "c.csv"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["counts"][0]["N"] == 6);
    const std::string csv = slurp(d.path / "c.csv");
    CHECK(csv.rfind("# pzeta ", 0) == 0);
    CHECK(csv.find("t,N,words,log_N_over_t\n") != std::string::npos);
  }

  TEST_CASE("curves are deterministic") {
    TempDir d1("pz-cli-curves1"), d2("pz-cli-curves2");
    REQUIRE(run({"--out-dir", d1.str(), "curves", "--step", "0.01"}).code == kExitOk);
    REQUIRE(run({"--out-dir", d2.str(), "curves", "--step", "0.01"}).code == kExitOk);
    for (const char* f : {"curves-C1.csv", "curves-C2.csv", "curves-C3.csv", "curves-C4.csv", "curves-union.csv",
                          "curves.dat"}) {
      REQUIRE(fs::exists(d1.path / f));
      CHECK(slurp(d1.path / f) == slurp(d2.path / f));
    }
    CHECK(slurp(d1.path / "curves-union.csv").find("curve,t,sigma\n") != std::string::npos);
    CHECK(run({"curves", "--step", "0"}).code == kExitUsage);
  }

  TEST_CASE("zeros with a resumable journal") {
    TempDir d("pz-cli-zeros");
    const std::vector<std::string> args = {"--out-dir", d.str(), "zeros", "--b", "4", "--rect", "-0.02,0.2,0,20",
                                           "--strip-height", "5", "--format", "both", "-o", "z"};
    const Run first = run(args);
    REQUIRE(first.code == kExitOk);
    const auto j1 = nlohmann::json::parse(first.out);
    CHECK(j1["resumed_strips"] == 0);
    CHECK(fs::exists(d.path / "z.journal"));
    const std::string csv1 = slurp(d.path / "z.csv");
    const Run second = run(args);
    REQUIRE(second.code == kExitOk);
    CHECK(nlohmann::json::parse(second.out)["resumed_strips"].get<int>() > 0);
    CHECK(slurp(d.path / "z.csv") == csv1);
    CHECK(fs::exists(d.path / "z-rescaled.dat"));
    CHECK(nlohmann::json::parse(slurp(d.path / "z.json")).contains("header"));
    CHECK(csv1.find("re,im,rescaled_re,rescaled_im,residual,box\n") != std::string::npos);
  }

  TEST_CASE("traces") {
    TempDir d("pz-cli-traces");
    const Run r = run({"--out-dir", d.str(), "traces", "--b", "3", "--max-n", "3", "--s", "0.5,1", "-o", "t"});
    REQUIRE(r.code == kExitOk);
    for (const char* f : {"t-orbits.csv", "t-surface.json", "t-eval.jsonl", "t-traces.csv"}) CHECK(fs::exists(d.path / f));
    std::istringstream lines(slurp(d.path / "t-eval.jsonl"));
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(nlohmann::json::parse(header)["header"].contains("version"));
    CHECK(nlohmann::json::parse(row).contains("value_re"));
  }

  TEST_CASE("dim") {
    const Run r = run({"dim", "--b", "4", "--max-n", "11"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["delta"].get<double>() - 0.1728876161) < 1e-8);
  }
}
