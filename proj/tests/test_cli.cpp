#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dsel/cli.hpp"
#include "dsel/distribution.hpp"

using namespace dsel;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "dsel_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string sample_file() {
  const auto path = scratch_dir() / "sample50.csv";
  write_dataset(sample_dataset(case_study_distribution(), 50, 2), path);
  return path.string();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("usage errors exit with 1, help with 0") {
  CHECK(run_cli({}).code == cli::kInputError);
  CHECK(run_cli({"bogus"}).code == cli::kInputError);
  CHECK(run_cli({"select"}).code == cli::kInputError);  // --data is required
  CHECK(run_cli({"select", "--data", sample_file(), "--format", "xml"}).code == cli::kInputError);
  const auto help = run_cli({"--help"});
  CHECK(help.code == cli::kOk);
  CHECK(help.out.find("select") != std::string::npos);
}

TEST_CASE("select: human output") {
  const auto r = run_cli({"select", "--data", sample_file(), "--seed", "4"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.find("X1") != std::string::npos);
  CHECK(r.out.find("seed") != std::string::npos);
  CHECK(r.out.find("Termination:") != std::string::npos);
}

TEST_CASE("select: structured output is byte-identical across runs") {
  const std::vector<std::string> args{"select", "--data", sample_file(), "--seed", "11", "--format", "structured"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  REQUIRE(a.code == cli::kOk);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j.at("kind") == "selection_trace");
  CHECK(j.at("seed") == 11);
  CHECK(j.at("dataset").at("rows") == 50);
  CHECK(j.at("config").at("estimator").at("n_sub") == 100);
  CHECK(j.contains("termination"));
}

TEST_CASE("select: delimited output and --output file") {
  const auto path = scratch_dir() / "trace.tsv";
  const auto r = run_cli({"select", "--data", sample_file(), "--format", "delimited", "-o", path.string(),
                          "--n-sub", "20", "--max-iterations", "1"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.empty());
  const auto text = slurp(path);
  CHECK(text.rfind("# seed=0", 0) == 0);
  CHECK(text.find("termination=max_iterations") != std::string::npos);
}

TEST_CASE("select: bad inputs exit with 1") {
  CHECK(run_cli({"select", "--data", "/nonexistent.csv"}).code == cli::kInputError);
  const auto bad = scratch_dir() / "bad.csv";
  std::ofstream(bad) << "x,class\na,0\nb,7\n";
  const auto r = run_cli({"select", "--data", bad.string()});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run_cli({"select", "--data", sample_file(), "--n-sub", "1"}).code == cli::kInputError);
  CHECK(run_cli({"select", "--data", sample_file(), "--correction", "jackknife"}).code == cli::kInputError);
}

TEST_CASE("entropy") {
  const auto r = run_cli({"entropy", "--data", sample_file(), "--vars", "X1,X2", "--format", "structured"});
  REQUIRE(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("kind") == "entropy_estimate");
  CHECK(j.at("estimate").at("subset") == nlohmann::json::array({"X1", "X2"}));
  CHECK(j.at("estimate").at("sigma_est").get<double>() > 0.0);

  CHECK(run_cli({"entropy", "--data", sample_file(), "--all-vars"}).code == cli::kOk);
  CHECK(run_cli({"entropy", "--data", sample_file()}).code == cli::kOk);
  CHECK(run_cli({"entropy", "--data", sample_file(), "--vars", "X9"}).code == cli::kInputError);
}

TEST_CASE("oracle") {
  const auto r = run_cli({"oracle", "--distribution", "case-study", "--top", "3"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.find("{X1, X2}") != std::string::npos);
  CHECK(r.out.find("1*") != std::string::npos);

  const auto data = run_cli({"oracle", "--data", sample_file(), "--format", "structured"});
  REQUIRE(data.code == cli::kOk);
  const auto j = nlohmann::json::parse(data.out);
  CHECK(j.at("subsets").size() == 32);
  CHECK(j.at("evaluation") == "empirical_sample");

  CHECK(run_cli({"oracle"}).code == cli::kInputError);
}

TEST_CASE("simulate: tables, report and determinism") {
  const auto dir = scratch_dir() / "sim";
  std::filesystem::remove_all(dir);
  const std::vector<std::string> args{"simulate",   "--sizes",     "10,20", "--replicates", "20",
                                      "--n-sub",    "10",          "--seed", "3",           "--format",
                                      "structured", "--out-dir",   dir.string()};
  const auto a = run_cli(args);
  REQUIRE(a.code == cli::kOk);
  for (auto name : {"selection_frequency.csv", "stop_rate.csv", "moments.csv", "candidates.csv", "report.json"}) {
    CHECK(std::filesystem::exists(dir / name));
  }
  const auto b = run_cli(args);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j.at("metadata").at("master_seed") == 3);
  CHECK(j.at("sizes").size() == 2);

  CHECK(run_cli({"simulate", "--sizes", "1", "--replicates", "2"}).code == cli::kInputError);
  CHECK(run_cli({"simulate", "--replicates", "0"}).code == cli::kInputError);
  CHECK(run_cli({"simulate", "--distribution", "/nonexistent.csv"}).code == cli::kInputError);
}
