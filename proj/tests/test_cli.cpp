#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SSPKIT_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (fgets(buffer, sizeof buffer, pipe)) output += buffer;
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "sspkit-cli-tests";
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("make-optimal writes the expected method file") {
  const fs::path file = work_dir() / "opt2.json";
  const CliResult res = run_cli("make-optimal --s 2 --out " + file.string());
  CHECK(res.exit_code == 0);

  const auto j = nlohmann::json::parse(read_file(file));
  CHECK(j["s"] == 2);
  CHECK(j["A"][0][0].get<double>() == 0.25);
  CHECK(j["A"][0][1].get<double>() == 0.0);
  CHECK(j["A"][1][0].get<double>() == 0.5);
  CHECK(j["A"][1][1].get<double>() == 0.25);
  CHECK(j["b"][0].get<double>() == 0.5);
  CHECK(j["b"][1].get<double>() == 0.5);
  CHECK(res.output.find("claimed radius 4") != std::string::npos);
}

TEST_CASE("make-optimal rejects s = 0") {
  CHECK(run_cli("make-optimal --s 0").exit_code == 2);
}

TEST_CASE("analyze the optimal two-stage method") {
  const fs::path method = work_dir() / "opt2.json";
  run_cli("make-optimal --s 2 --out " + method.string());
  const fs::path report = work_dir() / "analyze2.json";
  const CliResult res =
      run_cli("analyze " + method.string() + " --out " + report.string() + " --quiet");
  CHECK(res.exit_code == 0);

  const auto j = nlohmann::json::parse(read_file(report));
  CHECK(j["order2"] == true);
  CHECK(j["dirk"] == true);
  CHECK(j["unconditional"] == false);
  CHECK(std::abs(j["ssp_radius"].get<double>() - 4.0) <= 1e-6);
  CHECK(j["certificate_at_radius"]["feasible"] == true);
}

TEST_CASE("analyze Forward Euler") {
  const fs::path method = work_dir() / "fe.json";
  {
    std::ofstream out(method);
    out << R"({"label":"forward-euler","s":1,"A":[[0.0]],"b":[1.0]})";
  }
  const fs::path report = work_dir() / "analyze_fe.json";
  const CliResult res =
      run_cli("analyze " + method.string() + " --out " + report.string() + " --quiet");
  CHECK(res.exit_code == 0);
  const auto j = nlohmann::json::parse(read_file(report));
  CHECK(j["order2"] == false);
  CHECK(std::abs(j["ssp_radius"].get<double>() - 1.0) <= 1e-6);
}

TEST_CASE("analyze rejects malformed input") {
  const fs::path truncated = work_dir() / "truncated.json";
  {
    std::ofstream out(truncated);
    out << R"({"label":"x","s":2,"A":[[0.25,)";
  }
  CHECK(run_cli("analyze " + truncated.string()).exit_code == 2);
  CHECK(run_cli("analyze " + (work_dir() / "missing.json").string()).exit_code == 2);
}

TEST_CASE("verify passes and is byte-stable across reruns") {
  const fs::path a = work_dir() / "verify_a.json";
  const fs::path b = work_dir() / "verify_b.json";
  const CliResult first = run_cli("verify --seed 7 --out " + a.string() + " --quiet");
  CHECK(first.exit_code == 0);
  const CliResult second = run_cli("verify --seed 7 --out " + b.string() + " --quiet");
  CHECK(second.exit_code == 0);
  CHECK(read_file(a) == read_file(b));

  const auto j = nlohmann::json::parse(read_file(a));
  CHECK(j["all_passed"] == true);
  CHECK(j["checks"].size() >= 10);
}

TEST_CASE("verify with an injected fault exits 1") {
  const CliResult res = run_cli("verify --self-test-fault --quiet");
  CHECK(res.exit_code == 1);
}

TEST_CASE("search writes the per-restart CSV") {
  const fs::path csv = work_dir() / "search.csv";
  const CliResult res =
      run_cli("search --s 2 --restarts 3 --max-iters 30 --seed 5 --out " + csv.string());
  CHECK(res.exit_code == 0);
  const std::string text = read_file(csv);
  CHECK(text.rfind("s,restart,best_radius,distance_to_optimal,iterations\n", 0) == 0);
  int lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  CHECK(lines == 4);  // header + one row per restart
  CHECK(res.output.find("<= 4") != std::string::npos);
}

TEST_CASE("integrate the optimal member on advection") {
  const fs::path csv = work_dir() / "integrate.csv";
  const CliResult res = run_cli(
      "integrate --optimal-s 2 --problem advection --m 24 --steps 10 --tau-ratio 1.0 --out " +
      csv.string());
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("max_increase") != std::string::npos);
  const std::string text = read_file(csv);
  CHECK(text.rfind("step,tv\n", 0) == 0);
  int lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  CHECK(lines == 12);  // header + initial TV + one row per step
}

TEST_CASE("integrate usage errors exit 2") {
  CHECK(run_cli("integrate --optimal-s 2").exit_code == 2);  // missing --problem
  CHECK(run_cli("integrate --optimal-s 2 --problem advection --method-file x.json").exit_code ==
        2);  // mutually exclusive
  CHECK(run_cli("integrate --problem advection").exit_code == 2);  // no method source
}

TEST_CASE("unknown subcommand exits 2") { CHECK(run_cli("frobnicate").exit_code == 2); }
