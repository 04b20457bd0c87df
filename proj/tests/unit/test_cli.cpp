#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "signet/cli.hpp"
#include "signet/error.hpp"
#include "signet/io.hpp"
#include "signet/learn.hpp"
#include "signet/serialize.hpp"
#include "support/fixtures.hpp"

using namespace signet;
using namespace signet::testing;
namespace fs = std::filesystem;

namespace {

const fs::path kData = SIGNET_TEST_DATA_DIR;

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("signet_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_fixture(const fs::path& dir, const SignedGraph& g) {
  const auto p = dir / "input.tsv";
  write_canonical(g, p);
  return p;
}

}  // namespace

TEST_CASE("params JSON round trip") {
  const auto g = power_law_graph(300, 1200, 2.5, 0.8, 1);
  const auto p = learn_parameters(g);
  const auto doc = to_json(p);
  CHECK(doc["schema_version"] == kSchemaVersion);
  const auto back = params_from_json(nlohmann::json::parse(doc.dump()));
  CHECK(back.rho == p.rho);
  CHECK(back.alpha == p.alpha);
  CHECK(back.beta == p.beta);
  CHECK(back.eta == p.eta);
  CHECK(back.delta_B == p.delta_B);
  CHECK(back.trace.size() == p.trace.size());
  CHECK(back.config.em_max_iters == p.config.em_max_iters);
  CHECK(to_json(back) == doc);

  auto wrong = doc;
  wrong["schema_version"] = 99;
  CHECK_THROWS_AS(params_from_json(wrong), Error);
  auto missing = doc;
  missing.erase("beta");
  CHECK_THROWS_AS(params_from_json(missing), Error);
  auto out_of_range = doc;
  out_of_range["alpha"] = 1.5;
  CHECK_THROWS_AS(params_from_json(out_of_range), Error);
}

TEST_CASE("grid parsing") {
  CHECK(cli::parse_grid("0.1,0.5,0.9") == std::vector<double>{0.1, 0.5, 0.9});
  const auto r = cli::parse_grid("0.2:0.8:0.3");
  REQUIRE(r.size() == 3);
  CHECK(r[2] == doctest::Approx(0.8));
  CHECK(cli::parse_grid("0:1:0.1").size() == 11);
  CHECK_THROWS_AS(cli::parse_grid("0.1,x"), Error);
  CHECK_THROWS_AS(cli::parse_grid("1.5"), Error);
  CHECK_THROWS_AS(cli::parse_grid("0:1:0"), Error);
}

TEST_CASE("analyze the triangle fixture") {
  TempDir tmp("analyze");
  const auto stats = cli::cmd_analyze(kData / "triangle.tsv", tmp.path);
  CHECK(stats.eta == 1.0);
  const auto doc = read_json(tmp.path / "stats.json");
  CHECK(doc["eta"] == 1.0);
  CHECK(doc["delta_B"] == 1.0);
  CHECK(doc["triangles"]["+++"] == 1);
  CHECK(slurp(tmp.path / "degree_hist.tsv") == "# columns: degree count\n2\t3\n");
  CHECK(slurp(tmp.path / "clustering.tsv").starts_with("# columns: vertex degree clustering\n"));
  CHECK(slurp(tmp.path / "clustering_binned.tsv").starts_with("# columns: degree vertices mean_clustering\n"));
}

TEST_CASE("malformed input raises ParseError") {
  TempDir tmp("malformed");
  try {
    cli::cmd_analyze(kData / "malformed.tsv", tmp.path);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}

TEST_CASE("generate writes seeded runs and manifests") {
  TempDir tmp("generate");
  const auto g = power_law_graph(300, 1200, 2.5, 0.85, 3);
  const auto input = write_fixture(tmp.path, g);
  cli::cmd_learn(input, LearnConfig{}, tmp.path / "params.json");
  cli::GenerateOptions opts;
  opts.runs = 3;
  opts.seed = 7;
  const auto files = cli::cmd_generate(input, tmp.path / "params.json", opts, tmp.path / "out");
  REQUIRE(files.size() == 3);
  const auto params = params_from_json(read_json(tmp.path / "params.json"));
  for (std::size_t r = 0; r < 3; ++r) {
    const auto stem = cli::run_stem(r);
    CHECK(read_canonical(tmp.path / "out" / (stem + ".tsv")) == generate(read_canonical(input), params, 7 + r));
    const auto manifest = read_json(tmp.path / "out" / (stem + ".json"));
    CHECK(manifest["seed"] == 7 + r);
    CHECK(manifest["model"] == "bscl");
    CHECK(manifest.contains("warnings"));
    CHECK(manifest["counters"]["steps"] == g.num_edges());
  }

  cli::cmd_evaluate(input, tmp.path / "out", tmp.path / "report.json", cli::ReportFormat::Json);
  const auto report = read_json(tmp.path / "report.json");
  CHECK(report["runs"].size() == 3);
  CHECK(report["schema_version"] == kSchemaVersion);
  cli::cmd_evaluate(input, tmp.path / "out", tmp.path / "report.tsv", cli::ReportFormat::Tsv);
  CHECK(slurp(tmp.path / "report.tsv").starts_with("# columns: network"));
}

TEST_CASE("thread count does not change results") {
  const auto g = power_law_graph(300, 1200, 2.5, 0.85, 4);
  const auto p = learn_parameters(g);
  cli::GenerateOptions one;
  one.runs = 4;
  auto many = one;
  many.threads = 3;
  const auto a = cli::generate_runs(g, p, one);
  const auto b = cli::generate_runs(g, p, many);
  for (std::size_t r = 0; r < 4; ++r) CHECK(a[r].graph == b[r].graph);
}

TEST_CASE("sweep") {
  const auto g = power_law_graph(300, 1200, 2.5, 0.85, 5);
  const auto p = learn_parameters(g);
  cli::GenerateOptions opts;
  opts.runs = 2;

  SUBCASE("1x1 grid equals generate then evaluate") {
    const auto result = cli::sweep(g, p, {0.7}, {0.6}, opts);
    REQUIRE(result.points.size() == 1);
    CHECK(result.points[0].nearest_learned);
    ModelParams q = p;
    q.alpha = 0.7;
    q.beta = 0.6;
    std::vector<NamedGraph> runs;
    for (std::size_t r = 0; r < 2; ++r) runs.push_back({cli::run_stem(r), generate(g, q, opts.seed + r)});
    const auto report = evaluate(g, runs);
    CHECK(result.points[0].mean_deltas.abs_delta_B == report.mean_deltas.abs_delta_B);
    CHECK(result.points[0].mean_deltas.abs_eta == report.mean_deltas.abs_eta);
  }
  SUBCASE("3x3 grid emits 9 rows with one marked") {
    const auto result = cli::sweep(g, p, {0.2, 0.5, 0.8}, {0.2, 0.5, 0.8}, opts);
    CHECK(result.points.size() == 9);
    const auto tsv = cli::format_sweep_tsv(result);
    std::istringstream in(tsv);
    std::size_t rows = 0, marked = 0;
    for (std::string line; std::getline(in, line);) {
      if (line.starts_with("#")) continue;
      ++rows;
      marked += line.ends_with("\t1");
    }
    CHECK(rows == 9);
    CHECK(marked == 1);
  }
}

TEST_CASE("pipeline is deterministic") {
  TempDir tmp("pipeline");
  const auto g = power_law_graph(300, 1200, 2.5, 0.85, 6);
  const auto input = write_fixture(tmp.path, g);
  cli::PipelineOptions opts;
  opts.generate.runs = 2;
  const auto a = cli::cmd_pipeline(input, tmp.path / "a", opts);
  const auto b = cli::cmd_pipeline(input, tmp.path / "b", opts);
  for (const auto* sub : {"bscl", "stcl"}) {
    for (std::size_t r = 0; r < 2; ++r) {
      const auto name = cli::run_stem(r) + ".tsv";
      CHECK(slurp(tmp.path / "a" / sub / name) == slurp(tmp.path / "b" / sub / name));
    }
  }
  CHECK(slurp(tmp.path / "a" / "params.json") == slurp(tmp.path / "b" / "params.json"));
  CHECK(slurp(tmp.path / "a" / "report.json") == slurp(tmp.path / "b" / "report.json"));
  CHECK(a.stcl.has_value());
  CHECK(fs::exists(tmp.path / "a" / "report.txt"));
}
