#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "signet/graph.hpp"

namespace signet {

/// Expected triangles created per inserted edge, averaged over vertex pairs.
struct TriangleEstimates {
  double delta_random = 0.0;           // per random insertion
  double delta_random_balanced = 0.0;  // balanced share of the above
  double delta_triangle = 0.0;         // per wedge closure (>= 1)
  double avg_d = 0.0;
  double avg_d2 = 0.0;
};

/// s[k] = sum of d[j] for j > k (0-based), so s.back() == 0 and
/// s[k-1] == s[k] + d[k].
std::vector<double> suffix_degree_sums(std::span<const std::uint64_t> degrees);

/// O(N) closed form: (avg(d^2) - avg(d)) / (avg(d) M N (N-1)) * sum_k d_k s_k.
/// Requires M >= 1, N >= 2 and sum(d) == 2M; throws DegenerateDegrees when
/// every degree is zero.
double delta_random_fast(std::span<const std::uint64_t> degrees, std::uint64_t num_edges);

/// Literal O(N^3) average over unordered pairs {i, j} of
/// (d_i d_j / 2M) * sum_{l != i, j} d_l (d_l - 1) / 2M. Reference only.
double delta_random_exact(std::span<const std::uint64_t> degrees, std::uint64_t num_edges);

/// Share of wedges closed into balanced triangles by a random insertion whose
/// sign is positive with probability alpha, given wedge signs drawn from eta.
double balanced_random_coefficient(double eta, double alpha);
double delta_random_balanced(double delta_random, double eta, double alpha);

/// 1 + (avg(d^2) - avg(d)) / (avg(d) M N (N-1)) * sum_{i<j} (d_i - 1)(d_j - 1),
/// evaluated with a suffix sum. Zero-degree vertices contribute 0 rather than
/// -1 so the result stays >= 1; without isolated vertices this is exactly
/// sum_k (d_k - 1)(s_k - N + k + 1). Requires N >= 3, M >= 2.
double delta_triangle_fast(std::span<const std::uint64_t> degrees, std::uint64_t num_edges);

/// Literal O(N^3) counterpart of delta_triangle_fast with l != i, j.
double delta_triangle_exact(std::span<const std::uint64_t> degrees, std::uint64_t num_edges);

TriangleEstimates estimate_all(std::span<const std::uint64_t> degrees, std::uint64_t num_edges,
                               double eta, double alpha);

/// Uses the graph's own eta for alpha.
TriangleEstimates estimate_all(const SignedGraph& g);

}  // namespace signet
