#pragma once

#include <string>
#include <vector>

#include "signet/estimators.hpp"
#include "signet/graph.hpp"
#include "signet/model.hpp"

namespace signet {

/// Posterior probability that edge (i, j), reached from starting vertex i,
/// was created by wedge closure:
///   W = rho * sum_{k in N(i)} [j in N(k)] / (d_i d_k),  R = (1 - rho) * pi_j,
///   returns W / (W + R).
/// The random-insertion likelihood uses pi_j, the chance of drawing the
/// second endpoint, not pi_i.
double em_edge_responsibility(const SignedGraph& g, const SamplingVector& pi, VertexId i, VertexId j,
                              double rho);

struct RhoFit {
  double rho = 0.0;
  std::vector<double> trace;  // rho after each iteration
  bool converged = false;
};

/// EM for rho. One uniform edge sample S (without replacement) and one
/// uniformly chosen conditioning endpoint per sampled edge are fixed up
/// front; rho is then iterated to a fixed point on that sample. The result
/// is clamped to [1e-6, 1 - 1e-6].
RhoFit em_learn_rho(const SignedGraph& g, const SamplingVector& pi, const LearnConfig& cfg);

/// A probability computed by a closed form and clamped into [0, 1].
struct ClampedValue {
  double value = 0.0;
  double unclamped = 0.0;
  bool clamped() const { return value != unclamped; }
};

/// beta = (delta_B (D_tri + D_rand) - D_rand_balanced) / D_tri, clamped.
ClampedValue update_beta(double delta_B, const TriangleEstimates& est);

/// Probability a wedge closure inserts a positive edge when wedge signs
/// follow eta: beta (eta^2 + (1-eta)^2) + (1 - beta) 2 eta (1 - eta).
double eta_triangle(double eta, double beta);

/// alpha = (eta - rho * eta_triangle(eta, beta)) / (1 - rho), clamped.
/// Throws RhoAtOne for rho >= 1.
ClampedValue update_alpha(double eta, double rho, double beta);

/// Measures eta, Delta_B and the triangle estimates, runs EM for rho once,
/// then alternates beta/alpha updates from alpha = eta, beta = Delta_B
/// until both move less than ab_tol. Warnings (clamps, triangle-free input)
/// are collected on the result.
ModelParams learn_parameters(const SignedGraph& g, const LearnConfig& cfg = {});

}  // namespace signet
