#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "signet/cli.hpp"
#include "signet/error.hpp"

namespace fs = std::filesystem;
using namespace signet;

namespace {

void add_learn_flags(CLI::App* cmd, LearnConfig& config, std::size_t& em_samples) {
  cmd->add_option("--em-samples", em_samples, "edges sampled per EM iteration (default min(M, 5000))");
  cmd->add_option("--em-iters", config.em_max_iters, "maximum EM iterations")->capture_default_str();
  cmd->add_option("--ab-iters", config.ab_max_iters, "maximum alpha/beta iterations")->capture_default_str();
}

void add_generate_flags(CLI::App* cmd, cli::GenerateOptions& gen) {
  cmd->add_option("--runs", gen.runs, "number of generated networks")->capture_default_str();
  cmd->add_option("--seed", gen.seed, "base seed; run r uses seed + r")->capture_default_str();
  cmd->add_option("--threads", gen.threads, "generation threads")->capture_default_str();
}

void print_warnings(const ModelParams& params) {
  for (const auto& w : params.warnings) std::cerr << "warning: " << w << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced signed Chung-Lu network toolkit"};
  app.require_subcommand(1);

  fs::path input, out, params_path, generated_dir;
  LearnConfig learn_config;
  std::size_t em_samples = 0;
  cli::GenerateOptions gen;
  std::string model = "bscl", format = "json", alpha_grid, beta_grid;
  bool no_baseline = false;

  auto* analyze = app.add_subcommand("analyze", "measure signed-network properties");
  analyze->add_option("input", input, "edge list or ratings CSV")->required();
  analyze->add_option("-o,--out", out, "output directory")->required();

  auto* learn = app.add_subcommand("learn", "learn rho, alpha and beta");
  learn->add_option("input", input)->required();
  learn->add_option("-o,--out", out, "params JSON")->required();
  learn->add_option("--seed", learn_config.seed)->capture_default_str();
  add_learn_flags(learn, learn_config, em_samples);

  auto* generate = app.add_subcommand("generate", "generate networks from learned parameters");
  generate->add_option("input", input)->required();
  generate->add_option("-p,--params", params_path, "params JSON")->required();
  generate->add_option("-o,--out", out, "output directory")->required();
  generate->add_option("--model", model, "bscl or stcl")->capture_default_str();
  add_generate_flags(generate, gen);

  auto* evaluate = app.add_subcommand("evaluate", "compare generated networks with the input");
  evaluate->add_option("input", input)->required();
  evaluate->add_option("generated", generated_dir, "directory of run_*.tsv")->required();
  evaluate->add_option("-o,--out", out, "report file")->required();
  evaluate->add_option("--format", format, "json or tsv")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "grid search over alpha and beta");
  sweep->add_option("input", input)->required();
  sweep->add_option("-o,--out", out, "surface TSV")->required();
  sweep->add_option("-p,--params", params_path, "params JSON (learned when omitted)");
  sweep->add_option("--alpha-grid", alpha_grid, "a,b,c or start:stop:step")->required();
  sweep->add_option("--beta-grid", beta_grid, "a,b,c or start:stop:step")->required();
  add_generate_flags(sweep, gen);
  add_learn_flags(sweep, learn_config, em_samples);

  auto* pipeline = app.add_subcommand("pipeline", "analyze, learn, generate and evaluate");
  pipeline->add_option("input", input)->required();
  pipeline->add_option("-o,--out", out, "output directory")->required();
  pipeline->add_flag("--no-baseline", no_baseline, "skip the STCL comparison");
  add_generate_flags(pipeline, gen);
  add_learn_flags(pipeline, learn_config, em_samples);

  CLI11_PARSE(app, argc, argv);

  try {
    if (em_samples > 0) learn_config.em_sample_size = em_samples;

    if (analyze->parsed()) {
      const auto stats = cli::cmd_analyze(input, out);
      std::cout << "N=" << stats.num_vertices << " M=" << stats.num_edges << " eta=" << stats.eta
                << " delta_B=";
      if (stats.delta_B) std::cout << *stats.delta_B; else std::cout << '-';
      std::cout << " triangles=" << stats.census.total() << '\n';
    } else if (learn->parsed()) {
      const auto params = cli::cmd_learn(input, learn_config, out);
      print_warnings(params);
      std::cout << "rho=" << params.rho << " alpha=" << params.alpha << " beta=" << params.beta << '\n';
    } else if (generate->parsed()) {
      gen.model = cli::parse_model(model);
      const auto files = cli::cmd_generate(input, params_path, gen, out);
      std::cout << "wrote " << files.size() << " networks to " << out.string() << '\n';
    } else if (evaluate->parsed()) {
      const auto report = cli::cmd_evaluate(input, generated_dir, out, cli::parse_format(format));
      std::cout << cli::format_report_table(report);
    } else if (sweep->parsed()) {
      const auto alphas = cli::parse_grid(alpha_grid);
      const auto betas = cli::parse_grid(beta_grid);
      std::optional<fs::path> params;
      if (!params_path.empty()) params = params_path;
      const auto result = cli::cmd_sweep(input, params, alphas, betas, gen, learn_config, out);
      std::cout << cli::format_sweep_tsv(result);
    } else if (pipeline->parsed()) {
      cli::PipelineOptions opts{gen, learn_config, !no_baseline};
      const auto result = cli::cmd_pipeline(input, out, opts, &std::cerr);
      std::cout << "BSCL\n" << cli::format_report_table(result.bscl);
      if (result.stcl) std::cout << "\nSTCL\n" << cli::format_report_table(*result.stcl);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
