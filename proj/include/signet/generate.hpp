#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "signet/graph.hpp"
#include "signet/model.hpp"

namespace signet {

/// Mutable adjacency mirror of the live edge set. Neighbor lists use
/// swap-removal, so their order depends only on the operation sequence.
class LiveGraph {
 public:
  explicit LiveGraph(std::size_t num_vertices = 0) : adjacency_(num_vertices) {}

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return index_.size(); }
  std::span<const Neighbor> neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  bool has_edge(VertexId u, VertexId v) const { return index_.contains(pair_key(u, v)); }
  std::optional<Sign> sign(VertexId u, VertexId v) const;

  void insert(VertexId u, VertexId v, Sign s);
  void erase(VertexId u, VertexId v);

 private:
  std::vector<std::vector<Neighbor>> adjacency_;
  std::unordered_map<std::uint64_t, Sign> index_;
};

struct LiveEdge {
  VertexId u = 0;
  VertexId v = 0;
  Sign sign = Sign::Positive;
  std::uint64_t seq = 0;  // insertion order; smaller is older
};

enum class SignPolicy {
  Balanced,     // wedge closures pick the balance-majority sign
  Independent,  // every inserted edge is positive with probability eta
};

enum class BalanceBranch { Balanced, Unbalanced };

enum class InsertionKind { WedgeClosure, Random, Fallback };

struct GenerationOptions {
  SignPolicy policy = SignPolicy::Balanced;
  std::size_t step_retry_budget = 100;
  std::size_t fcl_retry_factor = 100;  // FCL budget is this times M
  std::size_t walk_attempts = 10;      // two-hop walks tried per wedge closure
};

/// Per-branch tallies, for checking sign frequencies branch by branch.
struct GenerationCounters {
  std::uint64_t steps = 0;
  std::uint64_t wedge_insertions = 0;
  std::uint64_t wedge_positive = 0;
  std::uint64_t wedge_balanced_branch = 0;
  std::uint64_t wedge_ties = 0;
  std::uint64_t random_insertions = 0;  // includes fallbacks
  std::uint64_t random_positive = 0;
  std::uint64_t fallbacks = 0;
  std::uint64_t collisions = 0;
  std::uint64_t queue_draws = 0;
  std::uint64_t pi_draws = 0;
};

struct StepOutcome {
  LiveEdge inserted;
  LiveEdge evicted;
  InsertionKind kind = InsertionKind::Random;
  std::size_t common_neighbors = 0;  // at insertion time
  std::size_t attempts = 0;
};

/// Generator state: live edges in FIFO order, adjacency mirror, frozen pi,
/// the collision queue and the run's private random stream.
class GenerationState {
 public:
  GenerationState(SamplingVector pi, std::size_t num_vertices, std::size_t target_edges, Rng rng,
                  GenerationOptions options = {});

  const LiveGraph& live() const noexcept { return live_; }
  const std::deque<LiveEdge>& fifo() const noexcept { return fifo_; }
  const std::deque<VertexId>& pending() const noexcept { return pending_; }
  const SamplingVector& pi() const noexcept { return pi_; }
  const GenerationCounters& counters() const noexcept { return counters_; }
  const GenerationOptions& options() const noexcept { return options_; }
  std::size_t target_edges() const noexcept { return target_edges_; }

  const ModelParams& params() const noexcept { return params_; }
  void set_params(const ModelParams& params);

  Rng& rng() noexcept { return rng_; }

  void enqueue(VertexId v) { pending_.push_back(v); }

  /// Front of the pending queue if any, else a draw from pi. With `partner`
  /// set, a queued vertex that would collide with it (same vertex or an
  /// existing edge) stays queued and pi is drawn instead.
  VertexId next_vertex(std::optional<VertexId> partner = std::nullopt);

  /// Appends an edge as the youngest live edge.
  LiveEdge push_edge(VertexId u, VertexId v, Sign s);
  /// Removes and returns the oldest live edge.
  LiveEdge evict_oldest();

  SignedGraph snapshot() const;

  /// Throws InvalidArgument if the live set, FIFO and adjacency disagree,
  /// or if a self-loop or duplicate pair is present.
  void audit() const;

  GenerationCounters& mutable_counters() noexcept { return counters_; }

 private:
  SamplingVector pi_;
  std::size_t target_edges_;
  Rng rng_;
  GenerationOptions options_;
  ModelParams params_;
  LiveGraph live_;
  std::deque<LiveEdge> fifo_;
  std::deque<VertexId> pending_;
  std::uint64_t next_seq_ = 0;
  GenerationCounters counters_;
};

/// Fast Chung-Lu start: M distinct non-loop pairs from independent pi draws,
/// then exactly round(eta * M) of them, chosen uniformly, made positive.
/// Throws Stall when the rejection budget runs out.
GenerationState fcl_initialize(const SamplingVector& pi, std::size_t num_edges, double eta, Rng rng,
                               std::optional<std::size_t> num_vertices = std::nullopt,
                               GenerationOptions options = {});

/// Balance-majority sign for a new edge (i, j) over all common neighbors.
/// Ties go positive with probability alpha. Throws NoCommonNeighbor.
Sign choose_wedge_sign(GenerationState& state, VertexId i, VertexId j, BalanceBranch branch, double alpha);

/// One insert-then-evict iteration. Throws RetryExhausted.
StepOutcome generation_step(GenerationState& state);

struct GenerationRun {
  SignedGraph graph;
  GenerationCounters counters;
  std::uint64_t seed = 0;
  double seconds = 0.0;
};

GenerationRun run_generation(const SignedGraph& input, const ModelParams& params, std::uint64_t seed,
                             GenerationOptions options = {});

/// FCL start followed by exactly M steps; every initial edge is evicted.
SignedGraph generate(const SignedGraph& input, const ModelParams& params, std::uint64_t seed);

}  // namespace signet
