#include "signet/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "signet/error.hpp"
#include "signet/metrics.hpp"

namespace signet {

std::optional<Sign> LiveGraph::sign(VertexId u, VertexId v) const {
  if (auto it = index_.find(pair_key(u, v)); it != index_.end()) return it->second;
  return std::nullopt;
}

void LiveGraph::insert(VertexId u, VertexId v, Sign s) {
  index_.emplace(pair_key(u, v), s);
  adjacency_[u].push_back({v, s});
  adjacency_[v].push_back({u, s});
}

void LiveGraph::erase(VertexId u, VertexId v) {
  index_.erase(pair_key(u, v));
  auto drop = [](std::vector<Neighbor>& list, VertexId target) {
    auto it = std::find_if(list.begin(), list.end(), [&](const Neighbor& n) { return n.id == target; });
    *it = list.back();
    list.pop_back();
  };
  drop(adjacency_[u], v);
  drop(adjacency_[v], u);
}

GenerationState::GenerationState(SamplingVector pi, std::size_t num_vertices, std::size_t target_edges,
                                 Rng rng, GenerationOptions options)
    : pi_(std::move(pi)),
      target_edges_(target_edges),
      rng_(std::move(rng)),
      options_(options),
      live_(num_vertices) {
  if (num_vertices < pi_.num_vertices()) {
    throw Error(ErrorKind::InvalidArgument, "vertex count below sampling vector range");
  }
}

void GenerationState::set_params(const ModelParams& params) {
  params.validate();
  params_ = params;
}

VertexId GenerationState::next_vertex(std::optional<VertexId> partner) {
  if (!pending_.empty()) {
    const VertexId front = pending_.front();
    const bool collides = partner && (front == *partner || live_.has_edge(front, *partner));
    if (!collides) {
      pending_.pop_front();
      ++counters_.queue_draws;
      return front;
    }
  }
  ++counters_.pi_draws;
  return pi_.draw(rng_);
}

LiveEdge GenerationState::push_edge(VertexId u, VertexId v, Sign s) {
  LiveEdge e{std::min(u, v), std::max(u, v), s, next_seq_++};
  live_.insert(e.u, e.v, s);
  fifo_.push_back(e);
  return e;
}

LiveEdge GenerationState::evict_oldest() {
  const LiveEdge e = fifo_.front();
  fifo_.pop_front();
  live_.erase(e.u, e.v);
  return e;
}

SignedGraph GenerationState::snapshot() const {
  std::vector<SignedEdge> edges;
  edges.reserve(fifo_.size());
  for (const auto& e : fifo_) edges.push_back({e.u, e.v, e.sign});
  return SignedGraph::from_edges(edges, live_.num_vertices());
}

void GenerationState::audit() const {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidArgument, "audit: " + why); };
  if (fifo_.size() != live_.num_edges()) fail("FIFO size differs from live edge count");
  std::unordered_set<std::uint64_t> seen;
  std::uint64_t last_seq = 0;
  bool first = true;
  for (const auto& e : fifo_) {
    if (e.u == e.v) fail("self-loop");
    if (!seen.insert(pair_key(e.u, e.v)).second) fail("duplicate pair");
    if (live_.sign(e.u, e.v) != e.sign) fail("sign mismatch between FIFO and adjacency");
    if (!first && e.seq <= last_seq) fail("FIFO out of insertion order");
    first = false;
    last_seq = e.seq;
  }
  std::size_t endpoint_total = 0;
  for (VertexId v = 0; v < live_.num_vertices(); ++v) {
    for (const auto& n : live_.neighbors(v)) {
      if (live_.sign(v, n.id) != n.sign) fail("asymmetric adjacency");
    }
    endpoint_total += live_.degree(v);
  }
  if (endpoint_total != 2 * fifo_.size()) fail("degree sum differs from 2M");
}

GenerationState fcl_initialize(const SamplingVector& pi, std::size_t num_edges, double eta, Rng rng,
                               std::optional<std::size_t> num_vertices, GenerationOptions options) {
  if (pi.size() == 0) throw Error(ErrorKind::EmptyGraph, "empty sampling vector");
  if (!(eta >= 0.0 && eta <= 1.0)) throw Error(ErrorKind::InvalidArgument, "eta outside [0, 1]");
  const std::size_t n = num_vertices.value_or(pi.num_vertices());
  GenerationState state(pi, n, num_edges, std::move(rng), options);

  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(num_edges);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(num_edges);
  const std::size_t budget = options.fcl_retry_factor * std::max<std::size_t>(num_edges, 1);
  std::size_t draws = 0;
  while (pairs.size() < num_edges) {
    if (++draws > budget) {
      throw Error(ErrorKind::Stall, "FCL placed " + std::to_string(pairs.size()) + " of " +
                                        std::to_string(num_edges) + " edges within the retry budget");
    }
    const VertexId u = pi.draw(state.rng());
    const VertexId v = pi.draw(state.rng());
    if (u == v || !chosen.insert(pair_key(u, v)).second) continue;
    pairs.emplace_back(u, v);
  }

  const auto positives = static_cast<std::size_t>(std::llround(eta * static_cast<double>(num_edges)));
  std::vector<std::size_t> order(num_edges);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), state.rng());
  std::vector<Sign> signs(num_edges, Sign::Negative);
  for (std::size_t k = 0; k < positives; ++k) signs[order[k]] = Sign::Positive;

  for (std::size_t k = 0; k < num_edges; ++k) state.push_edge(pairs[k].first, pairs[k].second, signs[k]);
  return state;
}

namespace {

struct CommonNeighborSigns {
  std::size_t closes_positive = 0;  // wedges whose sign product is +
  std::size_t closes_negative = 0;
  std::size_t total() const { return closes_positive + closes_negative; }
};

CommonNeighborSigns tally_common_neighbors(const LiveGraph& live, VertexId i, VertexId j) {
  CommonNeighborSigns out;
  const bool i_smaller = live.degree(i) <= live.degree(j);
  const VertexId scan = i_smaller ? i : j;
  const VertexId other = i_smaller ? j : i;
  for (const auto& n : live.neighbors(scan)) {
    if (n.id == other) continue;
    if (const auto s = live.sign(n.id, other)) {
      if (n.sign * *s == Sign::Positive) ++out.closes_positive;
      else ++out.closes_negative;
    }
  }
  return out;
}

}  // namespace

Sign choose_wedge_sign(GenerationState& state, VertexId i, VertexId j, BalanceBranch branch, double alpha) {
  const auto tally = tally_common_neighbors(state.live(), i, j);
  if (tally.total() == 0) {
    throw Error(ErrorKind::NoCommonNeighbor,
                "(" + std::to_string(i) + "," + std::to_string(j) + ") closes no wedge");
  }
  // A positive edge balances the wedges with product +, a negative edge the rest.
  const auto favored = tally.closes_positive;
  const auto disfavored = tally.closes_negative;
  if (favored == disfavored) {
    ++state.mutable_counters().wedge_ties;
    return bernoulli(state.rng(), alpha) ? Sign::Positive : Sign::Negative;
  }
  const Sign balancing = favored > disfavored ? Sign::Positive : Sign::Negative;
  return branch == BalanceBranch::Balanced ? balancing : flip(balancing);
}

StepOutcome generation_step(GenerationState& state) {
  const auto& params = state.params();
  const auto& options = state.options();
  auto& counters = state.mutable_counters();
  auto& rng = state.rng();
  const bool independent = options.policy == SignPolicy::Independent;
  const double random_alpha = independent ? params.eta : params.alpha;

  auto finish = [&](VertexId u, VertexId v, Sign s, InsertionKind kind, std::size_t common,
                    std::size_t attempt) {
    StepOutcome out;
    out.inserted = state.push_edge(u, v, s);
    out.evicted = state.evict_oldest();
    out.kind = kind;
    out.common_neighbors = common;
    out.attempts = attempt;
    ++counters.steps;
    return out;
  };

  for (std::size_t attempt = 1; attempt <= options.step_retry_budget; ++attempt) {
    VertexId vi = state.next_vertex();
    InsertionKind kind = InsertionKind::Random;

    if (bernoulli(rng, params.rho)) {
      for (std::size_t w = 0; w < options.walk_attempts; ++w) {
        const auto walk = two_hop_walk(state.live(), vi, rng);
        if (!walk) break;
        const VertexId vj = walk->target;
        if (vj == vi || state.live().has_edge(vi, vj)) continue;

        const auto tally = tally_common_neighbors(state.live(), vi, vj);
        const bool balanced = bernoulli(rng, params.beta);
        Sign s;
        if (independent) {
          s = bernoulli(rng, params.eta) ? Sign::Positive : Sign::Negative;
        } else {
          s = choose_wedge_sign(state, vi, vj, balanced ? BalanceBranch::Balanced : BalanceBranch::Unbalanced,
                                params.alpha);
        }
        ++counters.wedge_insertions;
        if (balanced) ++counters.wedge_balanced_branch;
        if (s == Sign::Positive) ++counters.wedge_positive;
        return finish(vi, vj, s, InsertionKind::WedgeClosure, tally.total(), attempt);
      }
      // No usable walk from vi: queue it and insert a random edge instead.
      state.enqueue(vi);
      ++counters.fallbacks;
      kind = InsertionKind::Fallback;
      vi = state.next_vertex();
    }

    const VertexId vj = state.next_vertex(vi);
    if (vi == vj || state.live().has_edge(vi, vj)) {
      ++counters.collisions;
      state.enqueue(vi);
      state.enqueue(vj);
      continue;
    }
    const Sign s = bernoulli(rng, random_alpha) ? Sign::Positive : Sign::Negative;
    ++counters.random_insertions;
    if (s == Sign::Positive) ++counters.random_positive;
    const auto common = tally_common_neighbors(state.live(), vi, vj).total();
    return finish(vi, vj, s, kind, common, attempt);
  }
  throw Error(ErrorKind::RetryExhausted,
              "no insertion within " + std::to_string(options.step_retry_budget) + " attempts");
}

GenerationRun run_generation(const SignedGraph& input, const ModelParams& params, std::uint64_t seed,
                             GenerationOptions options) {
  const auto started = std::chrono::steady_clock::now();
  const auto pi = SamplingVector::from_graph(input);
  auto state = fcl_initialize(pi, input.num_edges(), params.eta, make_rng(seed), input.num_vertices(), options);
  state.set_params(params);
  for (std::size_t step = 0; step < input.num_edges(); ++step) generation_step(state);

  GenerationRun run;
  run.graph = state.snapshot();
  run.counters = state.counters();
  run.seed = seed;
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return run;
}

SignedGraph generate(const SignedGraph& input, const ModelParams& params, std::uint64_t seed) {
  return run_generation(input, params, seed).graph;
}

}  // namespace signet
