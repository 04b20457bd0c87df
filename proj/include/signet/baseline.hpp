#pragma once

#include <array>
#include <cstdint>

#include "signet/generate.hpp"
#include "signet/graph.hpp"

namespace signet {

/// Triangle-type probabilities when every edge is positive independently
/// with probability eta.
struct BaselineTriangleExpectation {
  double p_ppp = 0.0;
  double p_ppm = 0.0;
  double p_pmm = 0.0;
  double p_mmm = 0.0;

  std::array<double, 4> as_array() const { return {p_ppp, p_ppm, p_pmm, p_mmm}; }
  double balanced() const { return p_ppp + p_pmm; }
};

BaselineTriangleExpectation analytic_triangle_distribution(double eta);

/// Signed TCL: the same generator with balance ignored. Every inserted edge
/// is positive with probability eta (alpha := eta) and the wedge-sign rule
/// is bypassed.
GenerationRun stcl_run(const SignedGraph& input, double rho, std::uint64_t seed);
SignedGraph stcl_generate(const SignedGraph& input, double rho, std::uint64_t seed);

}  // namespace signet
