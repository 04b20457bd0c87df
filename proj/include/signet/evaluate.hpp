#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "signet/graph.hpp"
#include "signet/metrics.hpp"

namespace signet {

struct NetworkSummary {
  std::string name;
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  double eta = 0.0;
  std::optional<double> delta_B;
  std::uint64_t triangles = 0;
  std::array<double, 4> triangle_distribution{};
  double average_clustering = 0.0;
  std::size_t max_degree = 0;
};

NetworkSummary summarize(const std::string& name, const GraphStats& stats);

/// Differences from the input network. A generated graph without triangles
/// counts as delta_B = 0 and an all-zero triangle distribution.
struct PropertyDeltas {
  double abs_eta = 0.0;
  double abs_delta_B = 0.0;
  double triangle_l1 = 0.0;
  double degree_ks = 0.0;
};

struct RunEvaluation {
  NetworkSummary summary;
  PropertyDeltas deltas;
};

struct EvaluationReport {
  NetworkSummary input;
  std::vector<RunEvaluation> runs;
  NetworkSummary mean;           // arithmetic mean of per-run summaries
  PropertyDeltas mean_deltas;    // arithmetic mean of per-run deltas
  PropertyDeltas deltas_of_mean; // mean summary compared with the input
};

struct NamedGraph {
  std::string name;
  SignedGraph graph;
};

/// Throws InvalidArgument when `generated` is empty.
EvaluationReport evaluate(const SignedGraph& input, std::span<const NamedGraph> generated,
                          const std::string& input_name = "input");

}  // namespace signet
