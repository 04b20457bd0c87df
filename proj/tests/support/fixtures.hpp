#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "signet/graph.hpp"
#include "signet/random.hpp"

namespace signet::testing {

/// Chung-Lu graph with power-law expected degrees: weight_i ~ (i + 1)^(-1/(gamma-1)),
/// M distinct edges drawn with probability proportional to w_u w_v, each
/// positive with probability eta. Vertices left without edges stay isolated.
inline SignedGraph power_law_graph(std::size_t n, std::size_t m, double gamma, double eta, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) weights[i] = std::pow(static_cast<double>(i + 1), -1.0 / (gamma - 1.0));
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::unordered_set<std::uint64_t> seen;
  std::vector<SignedEdge> edges;
  while (edges.size() < m) {
    const auto u = static_cast<VertexId>(pick(rng));
    const auto v = static_cast<VertexId>(pick(rng));
    if (u == v || !seen.insert(pair_key(u, v)).second) continue;
    edges.push_back({u, v, bernoulli(rng, eta) ? Sign::Positive : Sign::Negative});
  }
  return SignedGraph::from_edges(edges, n);
}

/// Erdos-Renyi G(n, p) with independent signs.
inline SignedGraph random_signed_graph(std::size_t n, double p, double eta, Rng& rng) {
  std::vector<SignedEdge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (bernoulli(rng, p)) edges.push_back({u, v, bernoulli(rng, eta) ? Sign::Positive : Sign::Negative});
    }
  }
  return SignedGraph::from_edges(edges, n);
}

inline SignedGraph complete_graph(std::size_t n, Sign s = Sign::Positive) {
  std::vector<SignedEdge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v, s});
  return SignedGraph::from_edges(edges, n);
}

inline SignedGraph cycle_graph(std::size_t n) {
  std::vector<SignedEdge> edges;
  for (VertexId u = 0; u < n; ++u) edges.push_back({u, static_cast<VertexId>((u + 1) % n), Sign::Positive});
  return SignedGraph::from_edges(edges, n);
}

inline SignedGraph star_graph(std::size_t leaves) {
  std::vector<SignedEdge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v, Sign::Positive});
  return SignedGraph::from_edges(edges);
}

inline SignedGraph path_graph(std::size_t n) {
  std::vector<SignedEdge> edges;
  for (VertexId u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, Sign::Positive});
  return SignedGraph::from_edges(edges, n);
}

/// Wheel: hub 0 joined to a rim cycle 1..rim.
inline SignedGraph wheel_graph(std::size_t rim) {
  std::vector<SignedEdge> edges;
  for (VertexId v = 1; v <= rim; ++v) {
    edges.push_back({0, v, Sign::Positive});
    edges.push_back({v, static_cast<VertexId>(v % rim + 1), Sign::Positive});
  }
  return SignedGraph::from_edges(edges);
}

}  // namespace signet::testing

namespace signet::testing {

inline constexpr Sign P = Sign::Positive;
inline constexpr Sign N = Sign::Negative;

inline SignedGraph make_graph(std::initializer_list<SignedEdge> edges, std::optional<std::size_t> n = std::nullopt) {
  std::vector<SignedEdge> es(edges);
  return SignedGraph::from_edges(es, n);
}

}  // namespace signet::testing
