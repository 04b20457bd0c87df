#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "signet/evaluate.hpp"
#include "signet/generate.hpp"
#include "signet/metrics.hpp"
#include "signet/model.hpp"

namespace signet::cli {

namespace fs = std::filesystem;

enum class Model { Bscl, Stcl };
enum class ReportFormat { Json, Tsv };

Model parse_model(const std::string& name);
ReportFormat parse_format(const std::string& name);
std::string to_string(Model model);

/// Accepts `a,b,c` or `start:stop:step` (inclusive of stop up to rounding).
std::vector<double> parse_grid(const std::string& text);

/// Writes stats.json, degree_hist.tsv, clustering.tsv and
/// clustering_binned.tsv into `out_dir`.
GraphStats cmd_analyze(const fs::path& input, const fs::path& out_dir);

ModelParams cmd_learn(const fs::path& input, const LearnConfig& config, const fs::path& out);

struct GenerateOptions {
  std::size_t runs = 10;
  std::uint64_t seed = 42;
  Model model = Model::Bscl;
  std::size_t threads = 1;
};

/// Run r uses seed + r. Results come back in run order whatever the thread count.
std::vector<GenerationRun> generate_runs(const SignedGraph& input, const ModelParams& params,
                                         const GenerateOptions& options);

std::string run_stem(std::size_t run);

/// Writes run_XXX.tsv (canonical edge list) and run_XXX.json (manifest) per run.
std::vector<fs::path> cmd_generate(const fs::path& input, const fs::path& params_path,
                                   const GenerateOptions& options, const fs::path& out_dir);

/// Loads every run_*.tsv under `dir`, sorted by name.
std::vector<NamedGraph> load_generated(const fs::path& dir);

std::string format_report_table(const EvaluationReport& report);
std::string format_report_tsv(const EvaluationReport& report);

EvaluationReport cmd_evaluate(const fs::path& input, const fs::path& generated_dir, const fs::path& out,
                              ReportFormat format);

struct SweepPoint {
  double alpha = 0.0;
  double beta = 0.0;
  PropertyDeltas mean_deltas;
  bool nearest_learned = false;
};

struct SweepResult {
  double learned_alpha = 0.0;
  double learned_beta = 0.0;
  std::vector<SweepPoint> points;
};

/// Every grid point keeps the learned rho and reuses the same run seeds, so a
/// 1x1 grid reproduces generate followed by evaluate at that point.
SweepResult sweep(const SignedGraph& input, const ModelParams& learned, const std::vector<double>& alpha_grid,
                  const std::vector<double>& beta_grid, const GenerateOptions& options);

std::string format_sweep_tsv(const SweepResult& result);

/// `params_path` is optional; without it the parameters are learned first.
SweepResult cmd_sweep(const fs::path& input, const std::optional<fs::path>& params_path,
                      const std::vector<double>& alpha_grid, const std::vector<double>& beta_grid,
                      const GenerateOptions& options, const LearnConfig& config, const fs::path& out);

struct PipelineOptions {
  GenerateOptions generate;
  LearnConfig learn;
  bool baseline = true;  // also generate and evaluate STCL
};

struct PipelineResult {
  GraphStats stats;
  ModelParams params;
  EvaluationReport bscl;
  std::optional<EvaluationReport> stcl;
};

/// analyze -> learn -> generate -> evaluate. Layout under `out_dir`:
/// stats.json + plot TSVs, params.json, bscl/run_*, stcl/run_*, report.json,
/// report.tsv, report.txt and stcl_report.json.
PipelineResult cmd_pipeline(const fs::path& input, const fs::path& out_dir, const PipelineOptions& options,
                            std::ostream* log = nullptr);

}  // namespace signet::cli
