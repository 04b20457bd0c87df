#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "signet/random.hpp"

namespace signet {

using VertexId = std::uint32_t;

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::Positive : Sign::Negative;
}

constexpr Sign flip(Sign s) {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

constexpr int to_int(Sign s) { return static_cast<int>(s); }

constexpr char to_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

struct SignedEdge {
  VertexId u = 0;
  VertexId v = 0;
  Sign sign = Sign::Positive;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

struct Neighbor {
  VertexId id = 0;
  Sign sign = Sign::Positive;
};

/// Key for an unordered vertex pair; (u, v) and (v, u) map to the same key.
constexpr std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

using DegreeVector = std::vector<std::uint64_t>;

/// Immutable undirected signed graph over dense vertex ids [0, N).
///
/// Edges are stored canonically (u < v) in construction order. Adjacency is
/// a CSR layout whose per-vertex neighbor order follows that same order, so
/// anything that walks the graph with a seeded generator is reproducible.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Throws SelfLoop / DuplicateEdge. When `num_vertices` is given it must
  /// exceed every endpoint; otherwise N = 1 + max id (0 for no edges).
  static SignedGraph from_edges(std::span<const SignedEdge> edges,
                                std::optional<std::size_t> num_vertices = std::nullopt);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_positive() const noexcept { return num_positive_; }
  std::size_t num_negative() const noexcept { return edges_.size() - num_positive_; }

  std::span<const SignedEdge> edges() const noexcept { return edges_; }

  std::span<const Neighbor> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;
  DegreeVector degrees() const;

  std::optional<Sign> sign(VertexId u, VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const { return index_.contains(pair_key(u, v)); }

  /// Edges sorted by (u, v); the order used for canonical serialization.
  std::vector<SignedEdge> sorted_edges() const;

  /// Structural equality: same N and the same signed edge set.
  friend bool operator==(const SignedGraph& a, const SignedGraph& b);

 private:
  std::size_t num_vertices_ = 0;
  std::size_t num_positive_ = 0;
  std::vector<SignedEdge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::unordered_map<std::uint64_t, Sign> index_;
};

SignedGraph build_graph(std::span<const SignedEdge> edges,
                        std::optional<std::size_t> num_vertices = std::nullopt);

/// Degree-proportional vertex sampling vector: each edge contributes both
/// endpoints, so vertex i appears exactly d_i times among 2M entries.
class SamplingVector {
 public:
  static SamplingVector from_graph(const SignedGraph& g);

  /// Builds pi directly from a degree sequence (vertex order, each repeated
  /// d_i times). Throws EmptyGraph when the degrees sum to zero.
  static SamplingVector from_degrees(std::span<const std::uint64_t> degrees);

  std::span<const VertexId> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t num_vertices() const noexcept { return multiplicity_.size(); }
  std::size_t multiplicity(VertexId v) const { return multiplicity_.at(v); }
  double probability(VertexId v) const {
    return static_cast<double>(multiplicity(v)) / static_cast<double>(entries_.size());
  }

  VertexId draw(Rng& rng) const { return entries_[uniform_index(rng, entries_.size())]; }

 private:
  std::vector<VertexId> entries_;
  std::vector<std::size_t> multiplicity_;
};

SamplingVector build_sampling_vector(const SignedGraph& g);

struct TwoHop {
  VertexId via = 0;
  VertexId target = 0;
};

/// Uniform neighbor `via` of `from`, then uniform neighbor `target` of
/// `via`. Absent when `from` has no neighbors; `target == from` is a legal
/// outcome the caller treats as a collision. Works on any graph type that
/// exposes `neighbors(v)` as a span of Neighbor.
template <class Graph>
std::optional<TwoHop> two_hop_walk(const Graph& g, VertexId from, Rng& rng) {
  const auto first = g.neighbors(from);
  if (first.empty()) return std::nullopt;
  const VertexId via = first[uniform_index(rng, first.size())].id;
  const auto second = g.neighbors(via);
  const VertexId target = second[uniform_index(rng, second.size())].id;
  return TwoHop{via, target};
}

}  // namespace signet
