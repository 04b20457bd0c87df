#include "signet/baseline.hpp"

#include "signet/error.hpp"
#include "signet/metrics.hpp"

namespace signet {

BaselineTriangleExpectation analytic_triangle_distribution(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw Error(ErrorKind::InvalidArgument, "eta outside [0, 1]");
  const double q = 1.0 - eta;
  return {eta * eta * eta, 3.0 * eta * eta * q, 3.0 * eta * q * q, q * q * q};
}

GenerationRun stcl_run(const SignedGraph& input, double rho, std::uint64_t seed) {
  ModelParams params;
  params.rho = rho;
  params.eta = compute_eta(input);
  params.alpha = params.eta;
  params.beta = 0.5;
  GenerationOptions options;
  options.policy = SignPolicy::Independent;
  return run_generation(input, params, seed, options);
}

SignedGraph stcl_generate(const SignedGraph& input, double rho, std::uint64_t seed) {
  return stcl_run(input, rho, seed).graph;
}

}  // namespace signet
