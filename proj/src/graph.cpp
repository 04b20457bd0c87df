#include "signet/graph.hpp"

#include <algorithm>
#include <string>

#include "signet/error.hpp"

namespace signet {

SignedGraph SignedGraph::from_edges(std::span<const SignedEdge> edges,
                                    std::optional<std::size_t> num_vertices) {
  SignedGraph g;
  g.edges_.reserve(edges.size());
  g.index_.reserve(edges.size());

  VertexId max_id = 0;
  for (const auto& e : edges) {
    if (e.u == e.v) throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(e.u));
    SignedEdge canon{std::min(e.u, e.v), std::max(e.u, e.v), e.sign};
    if (!g.index_.emplace(pair_key(canon.u, canon.v), canon.sign).second) {
      throw Error(ErrorKind::DuplicateEdge,
                  "(" + std::to_string(canon.u) + "," + std::to_string(canon.v) + ")");
    }
    max_id = std::max(max_id, canon.v);
    if (canon.sign == Sign::Positive) ++g.num_positive_;
    g.edges_.push_back(canon);
  }

  std::size_t n = edges.empty() ? 0 : static_cast<std::size_t>(max_id) + 1;
  if (num_vertices) {
    if (*num_vertices < n) {
      throw Error(ErrorKind::InvalidArgument,
                  "vertex count " + std::to_string(*num_vertices) + " below max id " +
                      std::to_string(max_id));
    }
    n = *num_vertices;
  }
  g.num_vertices_ = n;

  std::vector<std::size_t> counts(n + 1, 0);
  for (const auto& e : g.edges_) {
    ++counts[e.u + 1];
    ++counts[e.v + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) counts[i] += counts[i - 1];
  g.offsets_ = counts;

  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(counts.begin(), counts.end() - 1);
  for (const auto& e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = {e.v, e.sign};
    g.adjacency_[cursor[e.v]++] = {e.u, e.sign};
  }
  return g;
}

std::size_t SignedGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < num_vertices_; ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

DegreeVector SignedGraph::degrees() const {
  DegreeVector d(num_vertices_);
  for (std::size_t v = 0; v < num_vertices_; ++v) d[v] = offsets_[v + 1] - offsets_[v];
  return d;
}

std::optional<Sign> SignedGraph::sign(VertexId u, VertexId v) const {
  if (auto it = index_.find(pair_key(u, v)); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<SignedEdge> SignedGraph::sorted_edges() const {
  std::vector<SignedEdge> out = edges_;
  std::sort(out.begin(), out.end(), [](const SignedEdge& a, const SignedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return out;
}

bool operator==(const SignedGraph& a, const SignedGraph& b) {
  return a.num_vertices() == b.num_vertices() && a.sorted_edges() == b.sorted_edges();
}

SignedGraph build_graph(std::span<const SignedEdge> edges, std::optional<std::size_t> num_vertices) {
  return SignedGraph::from_edges(edges, num_vertices);
}

SamplingVector SamplingVector::from_graph(const SignedGraph& g) {
  if (g.num_edges() == 0) throw Error(ErrorKind::EmptyGraph, "sampling vector needs at least one edge");
  SamplingVector pi;
  pi.entries_.reserve(2 * g.num_edges());
  pi.multiplicity_.assign(g.num_vertices(), 0);
  for (const auto& e : g.edges()) {
    pi.entries_.push_back(e.u);
    pi.entries_.push_back(e.v);
    ++pi.multiplicity_[e.u];
    ++pi.multiplicity_[e.v];
  }
  return pi;
}

SamplingVector SamplingVector::from_degrees(std::span<const std::uint64_t> degrees) {
  SamplingVector pi;
  pi.multiplicity_.assign(degrees.size(), 0);
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    pi.multiplicity_[v] = degrees[v];
    pi.entries_.insert(pi.entries_.end(), degrees[v], static_cast<VertexId>(v));
  }
  if (pi.entries_.empty()) throw Error(ErrorKind::EmptyGraph, "degree sequence sums to zero");
  return pi;
}

SamplingVector build_sampling_vector(const SignedGraph& g) { return SamplingVector::from_graph(g); }

}  // namespace signet
