#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "signet/graph.hpp"

namespace signet {

/// Signed triangle type, indexed by its number of negative edges.
enum class TriangleType : std::uint8_t { PPP = 0, PPM = 1, PMM = 2, MMM = 3 };

inline constexpr std::array<const char*, 4> kTriangleTypeNames{"+++", "++-", "+--", "---"};

struct TriangleCensus {
  std::array<std::uint64_t, 4> counts{};

  std::uint64_t& operator[](TriangleType t) { return counts[static_cast<std::size_t>(t)]; }
  std::uint64_t operator[](TriangleType t) const { return counts[static_cast<std::size_t>(t)]; }

  std::uint64_t total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
  // Even number of negative edges.
  std::uint64_t balanced() const { return counts[0] + counts[2]; }

  /// Fractions per type; all zero when there are no triangles.
  std::array<double, 4> distribution() const;

  friend bool operator==(const TriangleCensus&, const TriangleCensus&) = default;
};

/// Calls `visit(a, b, c, negatives)` once per triangle. Listing uses the
/// degree-ordered forward algorithm: edges point from lower to higher
/// (degree, id) rank and each triangle is found at its lowest-ranked vertex.
void for_each_triangle(const SignedGraph& g,
                       const std::function<void(VertexId, VertexId, VertexId, int)>& visit);

double compute_eta(const SignedGraph& g);
TriangleCensus triangle_census(const SignedGraph& g);
double balanced_fraction(const TriangleCensus& census);

/// Sign-agnostic triangles through each vertex.
std::vector<std::uint64_t> triangles_per_vertex(const SignedGraph& g);

/// c_i = 2 T_i / (d_i (d_i - 1)) for d_i >= 2, else 0.
std::vector<double> local_clustering(const SignedGraph& g);

std::map<std::uint64_t, std::uint64_t> degree_histogram(std::span<const std::uint64_t> degrees);

struct ClusteringBin {
  std::uint64_t degree = 0;
  std::uint64_t vertices = 0;
  double mean_clustering = 0.0;
};

std::vector<ClusteringBin> clustering_by_degree(std::span<const std::uint64_t> degrees,
                                                std::span<const double> clustering);

struct GraphStats {
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  std::size_t num_positive = 0;
  double eta = 0.0;
  std::optional<double> delta_B;  // absent for triangle-free graphs
  DegreeVector degrees;
  TriangleCensus census;
  std::vector<double> clustering;
  std::map<std::uint64_t, std::uint64_t> degree_histogram;
  double average_clustering = 0.0;
};

GraphStats stats_report(const SignedGraph& g);

/// Two-sample Kolmogorov-Smirnov statistic: sup |F_a(x) - F_b(x)|.
double ks_statistic(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// KS statistic between the degree distributions of non-isolated vertices.
double degree_ks_statistic(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// Sum over the four types of |p_a - p_b|.
double distribution_l1(const std::array<double, 4>& a, const std::array<double, 4>& b);

}  // namespace signet
