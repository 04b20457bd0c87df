#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace signet {

struct LearnConfig {
  std::optional<std::size_t> em_sample_size;  // s; unset means min(M, 5000)
  std::size_t em_max_iters = 50;              // I
  double em_tol = 1e-4;
  std::size_t ab_max_iters = 100;  // I'
  double ab_tol = 1e-6;
  double rho_init = 0.5;
  std::uint64_t seed = 42;

  /// Throws InvalidArgument on s == 0 or non-positive tolerances.
  void validate() const;
  std::size_t sample_size_for(std::size_t num_edges) const;
};

struct AlphaBetaStep {
  std::size_t iteration = 0;
  double alpha = 0.0;
  double beta = 0.0;
};

/// Learned model parameters plus what they were learned from.
struct ModelParams {
  double rho = 0.0;    // probability an insertion closes a wedge
  double alpha = 0.0;  // probability a random insertion is positive
  double beta = 0.0;   // probability a wedge closure favors balance
  double eta = 0.0;    // input positive-edge fraction
  double delta_B = 0.0;

  LearnConfig config;
  std::vector<double> rho_trace;
  std::vector<AlphaBetaStep> trace;
  bool rho_converged = false;
  bool alpha_beta_converged = false;
  std::vector<std::string> warnings;

  /// Throws InvalidArgument unless rho, alpha, beta, eta, delta_B are in [0, 1].
  void validate() const;
};

}  // namespace signet
