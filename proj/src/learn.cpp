#include "signet/learn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "signet/error.hpp"
#include "signet/metrics.hpp"

namespace signet {
namespace {

constexpr double kRhoFloor = 1e-6;

constexpr double kRoundoff = 1e-12;

// Overshoot within roundoff of a bound is snapped silently, not reported.
ClampedValue clamp_unit(double x) {
  if (x > 1.0 && x <= 1.0 + kRoundoff) x = 1.0;
  if (x < 0.0 && x >= -kRoundoff) x = 0.0;
  return {std::clamp(x, 0.0, 1.0), x};
}

std::string describe_clamp(const char* name, const ClampedValue& v) {
  std::ostringstream out;
  out << name << " clamped from " << v.unclamped << " to " << v.value;
  return out.str();
}

}  // namespace

double em_edge_responsibility(const SignedGraph& g, const SamplingVector& pi, VertexId i, VertexId j,
                              double rho) {
  const double di = static_cast<double>(g.degree(i));
  double walk = 0.0;
  for (const auto& k : g.neighbors(i)) {
    if (g.has_edge(k.id, j)) walk += 1.0 / (di * static_cast<double>(g.degree(k.id)));
  }
  const double wedge = rho * walk;
  if (wedge == 0.0) return 0.0;
  const double random = (1.0 - rho) * pi.probability(j);
  return wedge / (wedge + random);
}

RhoFit em_learn_rho(const SignedGraph& g, const SamplingVector& pi, const LearnConfig& cfg) {
  cfg.validate();
  if (g.num_edges() == 0) throw Error(ErrorKind::EmptyGraph, "cannot learn rho without edges");

  auto rng = make_rng(cfg.seed);
  const std::size_t s = cfg.sample_size_for(g.num_edges());
  std::vector<std::size_t> all(g.num_edges());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<std::size_t> picked;
  picked.reserve(s);
  std::sample(all.begin(), all.end(), std::back_inserter(picked), s, rng);

  // (start, other) per sampled edge; walk weights do not depend on rho.
  std::vector<std::pair<VertexId, VertexId>> sample;
  sample.reserve(picked.size());
  for (const auto idx : picked) {
    const auto& e = g.edges()[idx];
    if (bernoulli(rng, 0.5)) sample.emplace_back(e.u, e.v);
    else sample.emplace_back(e.v, e.u);
  }

  RhoFit fit;
  double rho = cfg.rho_init;
  for (std::size_t t = 0; t < cfg.em_max_iters; ++t) {
    double total = 0.0;
    for (const auto& [i, j] : sample) total += em_edge_responsibility(g, pi, i, j, rho);
    const double next = std::clamp(total / static_cast<double>(sample.size()), kRhoFloor, 1.0 - kRhoFloor);
    fit.trace.push_back(next);
    const double change = std::abs(next - rho);
    rho = next;
    if (change < cfg.em_tol) {
      fit.converged = true;
      break;
    }
  }
  fit.rho = rho;
  return fit;
}

ClampedValue update_beta(double delta_B, const TriangleEstimates& est) {
  if (!(est.delta_triangle > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta_triangle must be positive");
  const double raw = (delta_B * (est.delta_triangle + est.delta_random) - est.delta_random_balanced) /
                     est.delta_triangle;
  return clamp_unit(raw);
}

double eta_triangle(double eta, double beta) {
  return beta * (eta * eta + (1.0 - eta) * (1.0 - eta)) + (1.0 - beta) * (eta * (1.0 - eta) + (1.0 - eta) * eta);
}

ClampedValue update_alpha(double eta, double rho, double beta) {
  if (rho >= 1.0) throw Error(ErrorKind::RhoAtOne, "alpha is undefined when every insertion closes a wedge");
  return clamp_unit((eta - rho * eta_triangle(eta, beta)) / (1.0 - rho));
}

ModelParams learn_parameters(const SignedGraph& g, const LearnConfig& cfg) {
  cfg.validate();
  ModelParams params;
  params.config = cfg;
  params.eta = compute_eta(g);

  const auto census = triangle_census(g);
  if (census.total() > 0) {
    params.delta_B = balanced_fraction(census);
  } else {
    params.delta_B = 0.0;
    params.warnings.emplace_back("input has no triangles; delta_B set to 0");
  }

  const auto pi = SamplingVector::from_graph(g);
  const auto rho_fit = em_learn_rho(g, pi, cfg);
  params.rho = rho_fit.rho;
  params.rho_trace = rho_fit.trace;
  params.rho_converged = rho_fit.converged;
  if (!rho_fit.converged) params.warnings.emplace_back("EM for rho did not reach em_tol");

  auto est = estimate_all(g.degrees(), g.num_edges(), params.eta, params.eta);
  double alpha = params.eta;
  double beta = params.delta_B;
  params.trace.push_back({0, alpha, beta});
  ClampedValue last_alpha{alpha, alpha}, last_beta{beta, beta};
  for (std::size_t t = 1; t <= cfg.ab_max_iters; ++t) {
    est.delta_random_balanced = delta_random_balanced(est.delta_random, params.eta, alpha);
    last_beta = update_beta(params.delta_B, est);
    last_alpha = update_alpha(params.eta, params.rho, last_beta.value);
    const double change = std::max(std::abs(last_alpha.value - alpha), std::abs(last_beta.value - beta));
    alpha = last_alpha.value;
    beta = last_beta.value;
    params.trace.push_back({t, alpha, beta});
    if (change < cfg.ab_tol) {
      params.alpha_beta_converged = true;
      break;
    }
  }
  if (!params.alpha_beta_converged) params.warnings.emplace_back("alpha/beta alternation did not reach ab_tol");
  if (last_beta.clamped()) params.warnings.push_back(describe_clamp("beta", last_beta));
  if (last_alpha.clamped()) params.warnings.push_back(describe_clamp("alpha", last_alpha));

  params.alpha = alpha;
  params.beta = beta;
  return params;
}

}  // namespace signet
