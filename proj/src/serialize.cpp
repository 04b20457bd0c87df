#include "signet/serialize.hpp"

#include <fstream>

#include "signet/error.hpp"

namespace signet {

using nlohmann::json;

json to_json(const TriangleCensus& census) {
  json out = json::object();
  for (std::size_t k = 0; k < 4; ++k) out[kTriangleTypeNames[k]] = census.counts[k];
  out["total"] = census.total();
  out["balanced"] = census.balanced();
  return out;
}

namespace {

json distribution_json(const std::array<double, 4>& p) {
  json out = json::object();
  for (std::size_t k = 0; k < 4; ++k) out[kTriangleTypeNames[k]] = p[k];
  return out;
}

json optional_number(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

template <class T>
T require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

json to_json(const GraphStats& stats) {
  json hist = json::array();
  for (const auto& [degree, count] : stats.degree_histogram) hist.push_back({degree, count});
  std::uint64_t max_degree = 0;
  for (const auto d : stats.degrees) max_degree = std::max(max_degree, d);
  return {
      {"schema_version", kSchemaVersion},
      {"kind", "graph_stats"},
      {"num_vertices", stats.num_vertices},
      {"num_edges", stats.num_edges},
      {"num_positive", stats.num_positive},
      {"num_negative", stats.num_edges - stats.num_positive},
      {"eta", stats.eta},
      {"delta_B", optional_number(stats.delta_B)},
      {"triangles", to_json(stats.census)},
      {"triangle_distribution", distribution_json(stats.census.distribution())},
      {"average_clustering", stats.average_clustering},
      {"max_degree", max_degree},
      {"degree_histogram", hist},
  };
}

json to_json(const LearnConfig& config) {
  return {
      {"em_sample_size", config.em_sample_size ? json(*config.em_sample_size) : json(nullptr)},
      {"em_max_iters", config.em_max_iters},
      {"em_tol", config.em_tol},
      {"ab_max_iters", config.ab_max_iters},
      {"ab_tol", config.ab_tol},
      {"rho_init", config.rho_init},
      {"seed", config.seed},
  };
}

json to_json(const ModelParams& params) {
  json trace = json::array();
  for (const auto& step : params.trace) {
    trace.push_back({{"iteration", step.iteration}, {"alpha", step.alpha}, {"beta", step.beta}});
  }
  return {
      {"schema_version", kSchemaVersion},
      {"kind", "model_params"},
      {"rho", params.rho},
      {"alpha", params.alpha},
      {"beta", params.beta},
      {"eta", params.eta},
      {"delta_B", params.delta_B},
      {"config", to_json(params.config)},
      {"rho_trace", params.rho_trace},
      {"rho_converged", params.rho_converged},
      {"trace", trace},
      {"alpha_beta_converged", params.alpha_beta_converged},
      {"warnings", params.warnings},
  };
}

ModelParams params_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "params document is not an object");
  const int version = require<int>(doc, "schema_version");
  if (version != kSchemaVersion) {
    throw Error(ErrorKind::ParseError, "unsupported schema_version " + std::to_string(version));
  }
  ModelParams p;
  p.rho = require<double>(doc, "rho");
  p.alpha = require<double>(doc, "alpha");
  p.beta = require<double>(doc, "beta");
  p.eta = require<double>(doc, "eta");
  p.delta_B = require<double>(doc, "delta_B");
  if (doc.contains("config")) {
    const auto& c = doc.at("config");
    if (c.contains("em_sample_size") && !c.at("em_sample_size").is_null())
      p.config.em_sample_size = c.at("em_sample_size").get<std::size_t>();
    p.config.em_max_iters = c.value("em_max_iters", p.config.em_max_iters);
    p.config.em_tol = c.value("em_tol", p.config.em_tol);
    p.config.ab_max_iters = c.value("ab_max_iters", p.config.ab_max_iters);
    p.config.ab_tol = c.value("ab_tol", p.config.ab_tol);
    p.config.rho_init = c.value("rho_init", p.config.rho_init);
    p.config.seed = c.value("seed", p.config.seed);
  }
  p.rho_trace = doc.value("rho_trace", std::vector<double>{});
  p.rho_converged = doc.value("rho_converged", false);
  if (doc.contains("trace")) {
    for (const auto& step : doc.at("trace")) {
      p.trace.push_back({step.at("iteration").get<std::size_t>(), step.at("alpha").get<double>(),
                         step.at("beta").get<double>()});
    }
  }
  p.alpha_beta_converged = doc.value("alpha_beta_converged", false);
  p.warnings = doc.value("warnings", std::vector<std::string>{});
  try {
    p.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return p;
}

json to_json(const GenerationCounters& c) {
  return {
      {"steps", c.steps},
      {"wedge_insertions", c.wedge_insertions},
      {"wedge_positive", c.wedge_positive},
      {"wedge_balanced_branch", c.wedge_balanced_branch},
      {"wedge_ties", c.wedge_ties},
      {"random_insertions", c.random_insertions},
      {"random_positive", c.random_positive},
      {"fallbacks", c.fallbacks},
      {"collisions", c.collisions},
      {"queue_draws", c.queue_draws},
      {"pi_draws", c.pi_draws},
  };
}

json to_json(const NetworkSummary& s) {
  return {
      {"name", s.name},
      {"num_vertices", s.num_vertices},
      {"num_edges", s.num_edges},
      {"eta", s.eta},
      {"delta_B", optional_number(s.delta_B)},
      {"triangles", s.triangles},
      {"triangle_distribution", distribution_json(s.triangle_distribution)},
      {"average_clustering", s.average_clustering},
      {"max_degree", s.max_degree},
  };
}

json to_json(const PropertyDeltas& d) {
  return {
      {"abs_eta", d.abs_eta},
      {"abs_delta_B", d.abs_delta_B},
      {"triangle_l1", d.triangle_l1},
      {"degree_ks", d.degree_ks},
  };
}

json to_json(const EvaluationReport& report) {
  json runs = json::array();
  for (const auto& run : report.runs) runs.push_back({{"network", to_json(run.summary)}, {"deltas", to_json(run.deltas)}});
  return {
      {"schema_version", kSchemaVersion},
      {"kind", "evaluation_report"},
      {"input", to_json(report.input)},
      {"runs", runs},
      {"mean", {{"network", to_json(report.mean)}, {"deltas", to_json(report.mean_deltas)}}},
      {"deltas_of_mean", to_json(report.deltas_of_mean)},
  };
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

void write_json(const json& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

}  // namespace signet
