// End-to-end checks of the meshmorph executable. The binary path comes in
// through the MESHMORPH_CLI compile definition.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  std::string cmd = std::string(MESHMORPH_CLI) + " " + args + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

size_t count_lines(const std::string& text) {
  size_t n = 0;
  for (char c : text) {
    if (c == '\n') ++n;
  }
  return n;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("preset run emits snapshots and a metrics CSV") {
  TempDir dir("meshmorph_cli_preset");
  std::string out = (dir.path / "run").string();
  int rc = run_cli("--gen cube --sub 2 --preset paper --m 1 --c-rel 0.0005 "
                   "--stride 50 --out " + out);
  REQUIRE(rc == 0);
  for (long iter : {0L, 50L, 100L, 150L, 200L}) {
    char name[32];
    std::snprintf(name, sizeof(name), "snap_%06ld.obj", iter);
    CHECK(fs::exists(fs::path(out) / name));
  }
  CHECK(fs::exists(fs::path(out) / "final.obj"));

  std::string csv = slurp(fs::path(out) / "metrics.csv");
  CHECK(count_lines(csv) == 6);  // header + 5 checkpoints
  CHECK(csv.rfind("iter,area,volume,sphericity,radius_cv,k_min,k_max,k_mean,k_std\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("identical config produces byte-identical outputs") {
  TempDir dir("meshmorph_cli_determinism");
  std::string a = (dir.path / "a").string();
  std::string b = (dir.path / "b").string();
  std::string args = "--gen dented_sphere --sub 2 --dent 0.4 --jitter 0.005 "
                     "--seed 7 --preset paper --m 1 --c-rel 0.0005 --stride 100";
  REQUIRE(run_cli(args + " --out " + a) == 0);
  REQUIRE(run_cli(args + " --out " + b) == 0);
  CHECK(slurp(fs::path(a) / "metrics.csv") == slurp(fs::path(b) / "metrics.csv"));
  CHECK(slurp(fs::path(a) / "final.obj") == slurp(fs::path(b) / "final.obj"));
  CHECK(slurp(fs::path(a) / "snap_000100.obj") ==
        slurp(fs::path(b) / "snap_000100.obj"));
}

TEST_CASE("missing input file fails with nonzero exit") {
  TempDir dir("meshmorph_cli_missing");
  CHECK(run_cli("--input /nonexistent/missing.obj --preset paper --m 1 "
                "--c 0.01 --out " + (dir.path / "x").string()) != 0);
}

TEST_CASE("conflicting or missing step size is rejected") {
  TempDir dir("meshmorph_cli_badargs");
  std::string out = (dir.path / "x").string();
  CHECK(run_cli("--gen cube --sub 1 --preset paper --m 1 --out " + out) != 0);
  CHECK(run_cli("--gen cube --sub 1 --preset paper --m 1 --c 0.1 --c-rel 0.1 "
                "--out " + out) != 0);
}

TEST_CASE("explicit phase schedules and curvature dumps") {
  TempDir dir("meshmorph_cli_phases");
  std::string out = (dir.path / "run").string();
  std::string dump = (dir.path / "k.csv").string();
  int rc = run_cli("--gen icosphere --sub 1 --phases 10:2:2,5:1:0 --c 0.002 "
                   "--stride 5 --out " + out + " --dump-curvature " + dump);
  REQUIRE(rc == 0);
  std::string csv = slurp(dump);
  CHECK(csv.rfind("vertex,k\n", 0) == 0);
  CHECK(count_lines(csv) == 43);  // header + 42 icosphere vertices
  // checkpoints: 0,5,10 (phase boundary),15 (end)
  CHECK(count_lines(slurp(fs::path(out) / "metrics.csv")) == 5);
}

TEST_CASE("roundtrip through --input") {
  TempDir dir("meshmorph_cli_roundtrip");
  std::string gen_out = (dir.path / "gen").string();
  REQUIRE(run_cli("--gen dumbbell --sub 1 --neck 0.2 --phases 1:1:1 "
                  "--c 0.001 --out " + gen_out) == 0);
  std::string morph_out = (dir.path / "morph").string();
  CHECK(run_cli("--input " + gen_out + "/final.obj --phases 2:2:1 "
                "--c-rel 0.001 --out " + morph_out) == 0);
  CHECK(fs::exists(fs::path(morph_out) / "final.obj"));
}
