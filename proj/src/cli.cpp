#include "signet/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>

#include "signet/baseline.hpp"
#include "signet/error.hpp"
#include "signet/io.hpp"
#include "signet/learn.hpp"
#include "signet/serialize.hpp"

namespace signet::cli {

namespace {

SignedGraph load_input(const fs::path& input) { return read_graph(resolve_data_path(input)).graph; }

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + dir.string() + ": " + ec.message());
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) ensure_dir(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << std::setprecision(10);
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  auto out = open_out(path);
  out << text;
}

void write_doc(const nlohmann::json& doc, const fs::path& path) {
  if (path.has_parent_path()) ensure_dir(path.parent_path());
  write_json(doc, path);
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw Error(ErrorKind::InvalidArgument, "not a number: '" + text + "'");
  return value;
}

std::string fmt(double x, int precision = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << x;
  return os.str();
}

void write_plot_files(const GraphStats& stats, const fs::path& out_dir) {
  {
    auto out = open_out(out_dir / "degree_hist.tsv");
    out << "# columns: degree count\n";
    for (const auto& [degree, count] : stats.degree_histogram) out << degree << '\t' << count << '\n';
  }
  {
    auto out = open_out(out_dir / "clustering.tsv");
    out << "# columns: vertex degree clustering\n";
    for (std::size_t v = 0; v < stats.degrees.size(); ++v) {
      out << v << '\t' << stats.degrees[v] << '\t' << stats.clustering[v] << '\n';
    }
  }
  {
    auto out = open_out(out_dir / "clustering_binned.tsv");
    out << "# columns: degree vertices mean_clustering\n";
    for (const auto& bin : clustering_by_degree(stats.degrees, stats.clustering)) {
      out << bin.degree << '\t' << bin.vertices << '\t' << bin.mean_clustering << '\n';
    }
  }
}

nlohmann::json manifest(const GenerationRun& run, std::size_t index, Model model, const ModelParams& params,
                        const fs::path& input) {
  return {
      {"schema_version", kSchemaVersion},
      {"kind", "generation_manifest"},
      {"model", to_string(model)},
      {"input", input.string()},
      {"run", index},
      {"seed", run.seed},
      {"seconds", run.seconds},
      {"num_vertices", run.graph.num_vertices()},
      {"num_edges", run.graph.num_edges()},
      {"params", to_json(params)},
      {"counters", to_json(run.counters)},
      {"warnings", params.warnings},
  };
}

std::vector<fs::path> write_runs(const std::vector<GenerationRun>& runs, Model model, const ModelParams& params,
                                 const fs::path& input, const fs::path& out_dir) {
  ensure_dir(out_dir);
  std::vector<fs::path> written;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const auto stem = run_stem(r);
    write_canonical(runs[r].graph, out_dir / (stem + ".tsv"));
    write_doc(manifest(runs[r], r, model, params, input), out_dir / (stem + ".json"));
    written.push_back(out_dir / (stem + ".tsv"));
  }
  return written;
}

std::vector<NamedGraph> name_runs(std::vector<GenerationRun>&& runs) {
  std::vector<NamedGraph> named;
  named.reserve(runs.size());
  for (std::size_t r = 0; r < runs.size(); ++r) named.push_back({run_stem(r), std::move(runs[r].graph)});
  return named;
}

void write_report(const EvaluationReport& report, const fs::path& out, ReportFormat format) {
  if (format == ReportFormat::Json) {
    write_doc(to_json(report), out);
  } else {
    write_text(out, format_report_tsv(report));
  }
}

}  // namespace

Model parse_model(const std::string& name) {
  if (name == "bscl") return Model::Bscl;
  if (name == "stcl") return Model::Stcl;
  throw Error(ErrorKind::InvalidArgument, "unknown model '" + name + "' (expected bscl or stcl)");
}

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "tsv") return ReportFormat::Tsv;
  throw Error(ErrorKind::InvalidArgument, "unknown format '" + name + "' (expected json or tsv)");
}

std::string to_string(Model model) { return model == Model::Bscl ? "bscl" : "stcl"; }

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw Error(ErrorKind::InvalidArgument, "range grid must be start:stop:step");
    const double start = parse_number(parts[0]);
    const double stop = parse_number(parts[1]);
    const double step = parse_number(parts[2]);
    if (!(step > 0.0) || stop < start) throw Error(ErrorKind::InvalidArgument, "bad grid range '" + text + "'");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::size_t k = 0; k < count; ++k) grid.push_back(start + static_cast<double>(k) * step);
  } else {
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) grid.push_back(parse_number(part));
  }
  if (grid.empty()) throw Error(ErrorKind::InvalidArgument, "empty grid");
  for (const double x : grid) {
    if (x < 0.0 || x > 1.0) throw Error(ErrorKind::InvalidArgument, "grid value outside [0, 1]: " + fmt(x));
  }
  return grid;
}

GraphStats cmd_analyze(const fs::path& input, const fs::path& out_dir) {
  const auto g = load_input(input);
  auto stats = stats_report(g);
  ensure_dir(out_dir);
  write_doc(to_json(stats), out_dir / "stats.json");
  write_plot_files(stats, out_dir);
  return stats;
}

ModelParams cmd_learn(const fs::path& input, const LearnConfig& config, const fs::path& out) {
  const auto g = load_input(input);
  auto params = learn_parameters(g, config);
  write_doc(to_json(params), out);
  return params;
}

std::vector<GenerationRun> generate_runs(const SignedGraph& input, const ModelParams& params,
                                         const GenerateOptions& options) {
  if (options.runs == 0) throw Error(ErrorKind::InvalidArgument, "--runs must be positive");
  std::vector<std::optional<GenerationRun>> slots(options.runs);
  auto one = [&](std::size_t r) {
    const auto seed = options.seed + r;
    slots[r] = options.model == Model::Bscl ? run_generation(input, params, seed) : stcl_run(input, params.rho, seed);
  };

  const auto threads = std::min(std::max<std::size_t>(options.threads, 1), options.runs);
  if (threads == 1) {
    for (std::size_t r = 0; r < options.runs; ++r) one(r);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t r = next++; r < options.runs; r = next++) one(r);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<GenerationRun> runs;
  runs.reserve(slots.size());
  for (auto& s : slots) runs.push_back(std::move(*s));
  return runs;
}

std::string run_stem(std::size_t run) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "run_%03zu", run);
  return buf;
}

std::vector<fs::path> cmd_generate(const fs::path& input, const fs::path& params_path,
                                   const GenerateOptions& options, const fs::path& out_dir) {
  const auto g = load_input(input);
  const auto params = params_from_json(read_json(params_path));
  return write_runs(generate_runs(g, params, options), options.model, params, input, out_dir);
}

std::vector<NamedGraph> load_generated(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorKind::Io, "not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && name.starts_with("run_") && entry.path().extension() == ".tsv") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw Error(ErrorKind::Io, "no run_*.tsv files in " + dir.string());
  std::vector<NamedGraph> graphs;
  for (const auto& f : files) graphs.push_back({f.stem().string(), read_canonical(f)});
  return graphs;
}

std::string format_report_table(const EvaluationReport& report) {
  std::ostringstream os;
  auto row = [&](const NetworkSummary& s) {
    os << std::left << std::setw(12) << s.name << std::right << std::setw(9) << s.num_vertices << std::setw(10)
       << s.num_edges << std::setw(8) << fmt(s.eta, 3) << std::setw(8)
       << (s.delta_B ? fmt(*s.delta_B, 3) : std::string("-")) << std::setw(10) << s.triangles;
    for (const double p : s.triangle_distribution) os << std::setw(8) << fmt(p, 3);
    os << std::setw(9) << fmt(s.average_clustering, 4) << '\n';
  };
  os << std::left << std::setw(12) << "network" << std::right << std::setw(9) << "N" << std::setw(10) << "M"
     << std::setw(8) << "eta" << std::setw(8) << "dB" << std::setw(10) << "tri";
  for (const auto* name : kTriangleTypeNames) os << std::setw(8) << name;
  os << std::setw(9) << "cc" << '\n';
  row(report.input);
  for (const auto& run : report.runs) row(run.summary);
  row(report.mean);

  os << "\nabsolute difference from input\n";
  os << std::left << std::setw(12) << "network" << std::right << std::setw(10) << "|d eta|" << std::setw(10)
     << "|d dB|" << std::setw(10) << "tri L1" << std::setw(10) << "deg KS" << '\n';
  auto drow = [&](const std::string& name, const PropertyDeltas& d) {
    os << std::left << std::setw(12) << name << std::right << std::setw(10) << fmt(d.abs_eta) << std::setw(10)
       << fmt(d.abs_delta_B) << std::setw(10) << fmt(d.triangle_l1) << std::setw(10) << fmt(d.degree_ks) << '\n';
  };
  for (const auto& run : report.runs) drow(run.summary.name, run.deltas);
  drow("mean", report.mean_deltas);
  drow("of-mean", report.deltas_of_mean);
  return os.str();
}

std::string format_report_tsv(const EvaluationReport& report) {
  std::ostringstream os;
  os << std::setprecision(10);
  os << "# columns: network num_vertices num_edges eta delta_B triangles";
  for (const auto* name : kTriangleTypeNames) os << " p" << name;
  os << " average_clustering abs_eta abs_delta_B triangle_l1 degree_ks\n";
  auto row = [&](const NetworkSummary& s, const std::optional<PropertyDeltas>& d) {
    os << s.name << '\t' << s.num_vertices << '\t' << s.num_edges << '\t' << s.eta << '\t';
    if (s.delta_B) os << *s.delta_B; else os << "nan";
    os << '\t' << s.triangles;
    for (const double p : s.triangle_distribution) os << '\t' << p;
    os << '\t' << s.average_clustering;
    if (d) {
      os << '\t' << d->abs_eta << '\t' << d->abs_delta_B << '\t' << d->triangle_l1 << '\t' << d->degree_ks;
    } else {
      os << "\t0\t0\t0\t0";
    }
    os << '\n';
  };
  row(report.input, std::nullopt);
  for (const auto& run : report.runs) row(run.summary, run.deltas);
  row(report.mean, report.mean_deltas);
  return os.str();
}

EvaluationReport cmd_evaluate(const fs::path& input, const fs::path& generated_dir, const fs::path& out,
                              ReportFormat format) {
  const auto g = load_input(input);
  const auto generated = load_generated(generated_dir);
  auto report = evaluate(g, generated, input.stem().string());
  write_report(report, out, format);
  return report;
}

SweepResult sweep(const SignedGraph& input, const ModelParams& learned, const std::vector<double>& alpha_grid,
                  const std::vector<double>& beta_grid, const GenerateOptions& options) {
  if (alpha_grid.empty() || beta_grid.empty()) throw Error(ErrorKind::InvalidArgument, "empty sweep grid");
  SweepResult result;
  result.learned_alpha = learned.alpha;
  result.learned_beta = learned.beta;
  GenerateOptions opts = options;
  opts.model = Model::Bscl;

  std::size_t nearest = 0;
  double best = std::numeric_limits<double>::infinity();
  for (const double a : alpha_grid) {
    for (const double b : beta_grid) {
      ModelParams p = learned;
      p.alpha = a;
      p.beta = b;
      const auto named = name_runs(generate_runs(input, p, opts));
      const auto report = evaluate(input, named);
      const double dist = std::hypot(a - learned.alpha, b - learned.beta);
      if (dist < best) {
        best = dist;
        nearest = result.points.size();
      }
      result.points.push_back({a, b, report.mean_deltas, false});
    }
  }
  result.points[nearest].nearest_learned = true;
  return result;
}

std::string format_sweep_tsv(const SweepResult& result) {
  std::ostringstream os;
  os << std::setprecision(10);
  os << "# learned: alpha=" << result.learned_alpha << " beta=" << result.learned_beta << '\n';
  os << "# columns: alpha beta abs_delta_B abs_eta triangle_l1 degree_ks learned\n";
  for (const auto& p : result.points) {
    os << p.alpha << '\t' << p.beta << '\t' << p.mean_deltas.abs_delta_B << '\t' << p.mean_deltas.abs_eta << '\t'
       << p.mean_deltas.triangle_l1 << '\t' << p.mean_deltas.degree_ks << '\t' << (p.nearest_learned ? 1 : 0)
       << '\n';
  }
  return os.str();
}

SweepResult cmd_sweep(const fs::path& input, const std::optional<fs::path>& params_path,
                      const std::vector<double>& alpha_grid, const std::vector<double>& beta_grid,
                      const GenerateOptions& options, const LearnConfig& config, const fs::path& out) {
  const auto g = load_input(input);
  const auto learned = params_path ? params_from_json(read_json(*params_path)) : learn_parameters(g, config);
  auto result = sweep(g, learned, alpha_grid, beta_grid, options);
  write_text(out, format_sweep_tsv(result));
  return result;
}

PipelineResult cmd_pipeline(const fs::path& input, const fs::path& out_dir, const PipelineOptions& options,
                            std::ostream* log) {
  auto say = [&](const std::string& msg) {
    if (log) *log << msg << '\n';
  };
  const auto g = load_input(input);
  ensure_dir(out_dir);
  PipelineResult result;

  result.stats = stats_report(g);
  write_doc(to_json(result.stats), out_dir / "stats.json");
  write_plot_files(result.stats, out_dir);
  say("analyze: N=" + std::to_string(g.num_vertices()) + " M=" + std::to_string(g.num_edges()) +
      " eta=" + fmt(result.stats.eta) +
      " delta_B=" + (result.stats.delta_B ? fmt(*result.stats.delta_B) : std::string("-")));

  LearnConfig learn_config = options.learn;
  learn_config.seed = options.generate.seed;
  result.params = learn_parameters(g, learn_config);
  write_doc(to_json(result.params), out_dir / "params.json");
  say("learn: rho=" + fmt(result.params.rho) + " alpha=" + fmt(result.params.alpha) +
      " beta=" + fmt(result.params.beta));
  for (const auto& w : result.params.warnings) say("warning: " + w);

  const std::string name = input.stem().string();
  GenerateOptions gen = options.generate;
  gen.model = Model::Bscl;
  auto runs = generate_runs(g, result.params, gen);
  write_runs(runs, Model::Bscl, result.params, input, out_dir / "bscl");
  result.bscl = evaluate(g, name_runs(std::move(runs)), name);
  write_report(result.bscl, out_dir / "report.json", ReportFormat::Json);
  write_report(result.bscl, out_dir / "report.tsv", ReportFormat::Tsv);
  std::string table = "BSCL\n" + format_report_table(result.bscl);
  say("generate+evaluate: bscl mean eta=" + fmt(result.bscl.mean.eta) +
      " delta_B=" + fmt(result.bscl.mean.delta_B.value_or(0.0)));

  if (options.baseline) {
    gen.model = Model::Stcl;
    auto stcl_runs = generate_runs(g, result.params, gen);
    write_runs(stcl_runs, Model::Stcl, result.params, input, out_dir / "stcl");
    result.stcl = evaluate(g, name_runs(std::move(stcl_runs)), name);
    write_report(*result.stcl, out_dir / "stcl_report.json", ReportFormat::Json);
    table += "\nSTCL\n" + format_report_table(*result.stcl);
    say("generate+evaluate: stcl mean eta=" + fmt(result.stcl->mean.eta) +
        " delta_B=" + fmt(result.stcl->mean.delta_B.value_or(0.0)));
  }
  write_text(out_dir / "report.txt", table);
  return result;
}

}  // namespace signet::cli
