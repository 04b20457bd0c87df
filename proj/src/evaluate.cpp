#include "signet/evaluate.hpp"

#include <cmath>

#include "signet/error.hpp"

namespace signet {

NetworkSummary summarize(const std::string& name, const GraphStats& stats) {
  NetworkSummary s;
  s.name = name;
  s.num_vertices = stats.num_vertices;
  s.num_edges = stats.num_edges;
  s.eta = stats.eta;
  s.delta_B = stats.delta_B;
  s.triangles = stats.census.total();
  s.triangle_distribution = stats.census.distribution();
  s.average_clustering = stats.average_clustering;
  for (const auto d : stats.degrees) s.max_degree = std::max<std::size_t>(s.max_degree, d);
  return s;
}

namespace {

PropertyDeltas compare(const NetworkSummary& input, const NetworkSummary& other) {
  PropertyDeltas d;
  d.abs_eta = std::abs(other.eta - input.eta);
  d.abs_delta_B = std::abs(other.delta_B.value_or(0.0) - input.delta_B.value_or(0.0));
  d.triangle_l1 = distribution_l1(input.triangle_distribution, other.triangle_distribution);
  return d;
}

}  // namespace

EvaluationReport evaluate(const SignedGraph& input, std::span<const NamedGraph> generated,
                          const std::string& input_name) {
  if (generated.empty()) throw Error(ErrorKind::InvalidArgument, "nothing to evaluate");
  EvaluationReport report;
  const auto input_stats = stats_report(input);
  report.input = summarize(input_name, input_stats);

  const double runs = static_cast<double>(generated.size());
  auto& mean = report.mean;
  mean.name = "mean";
  double mean_delta_B = 0.0;
  double mean_vertices = 0.0, mean_edges = 0.0, mean_triangles = 0.0, mean_max_degree = 0.0;
  for (const auto& item : generated) {
    const auto stats = stats_report(item.graph);
    RunEvaluation run{summarize(item.name, stats), {}};
    run.deltas = compare(report.input, run.summary);
    run.deltas.degree_ks = degree_ks_statistic(input_stats.degrees, stats.degrees);

    mean.eta += run.summary.eta / runs;
    mean_delta_B += run.summary.delta_B.value_or(0.0) / runs;
    for (std::size_t k = 0; k < 4; ++k) mean.triangle_distribution[k] += run.summary.triangle_distribution[k] / runs;
    mean.average_clustering += run.summary.average_clustering / runs;
    mean_vertices += static_cast<double>(run.summary.num_vertices) / runs;
    mean_edges += static_cast<double>(run.summary.num_edges) / runs;
    mean_triangles += static_cast<double>(run.summary.triangles) / runs;
    mean_max_degree += static_cast<double>(run.summary.max_degree) / runs;

    report.mean_deltas.abs_eta += run.deltas.abs_eta / runs;
    report.mean_deltas.abs_delta_B += run.deltas.abs_delta_B / runs;
    report.mean_deltas.triangle_l1 += run.deltas.triangle_l1 / runs;
    report.mean_deltas.degree_ks += run.deltas.degree_ks / runs;
    report.runs.push_back(std::move(run));
  }
  mean.delta_B = mean_delta_B;
  mean.num_vertices = static_cast<std::size_t>(std::llround(mean_vertices));
  mean.num_edges = static_cast<std::size_t>(std::llround(mean_edges));
  mean.triangles = static_cast<std::uint64_t>(std::llround(mean_triangles));
  mean.max_degree = static_cast<std::size_t>(std::llround(mean_max_degree));

  report.deltas_of_mean = compare(report.input, mean);
  report.deltas_of_mean.degree_ks = report.mean_deltas.degree_ks;
  return report;
}

}  // namespace signet
