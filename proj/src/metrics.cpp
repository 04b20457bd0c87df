#include "signet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "signet/error.hpp"

namespace signet {

std::array<double, 4> TriangleCensus::distribution() const {
  std::array<double, 4> out{};
  const auto n = total();
  if (n == 0) return out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
  return out;
}

void for_each_triangle(const SignedGraph& g,
                       const std::function<void(VertexId, VertexId, VertexId, int)>& visit) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    const auto da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  // Oriented CSR: each edge stored once, at its lower-ranked endpoint.
  std::vector<std::size_t> offsets(n + 1, 0);
  for (const auto& e : g.edges()) ++offsets[(rank[e.u] < rank[e.v] ? e.u : e.v) + 1];
  for (std::size_t i = 1; i <= n; ++i) offsets[i] += offsets[i - 1];
  std::vector<Neighbor> out(g.num_edges());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& e : g.edges()) {
    const bool forward = rank[e.u] < rank[e.v];
    const VertexId lo = forward ? e.u : e.v;
    const VertexId hi = forward ? e.v : e.u;
    out[cursor[lo]++] = {hi, e.sign};
  }

  std::vector<std::int8_t> mark(n, 0);
  for (VertexId a = 0; a < n; ++a) {
    const auto a_begin = out.begin() + static_cast<std::ptrdiff_t>(offsets[a]);
    const auto a_end = out.begin() + static_cast<std::ptrdiff_t>(offsets[a + 1]);
    for (auto it = a_begin; it != a_end; ++it) mark[it->id] = static_cast<std::int8_t>(to_int(it->sign));
    for (auto ab = a_begin; ab != a_end; ++ab) {
      const VertexId b = ab->id;
      for (std::size_t k = offsets[b]; k < offsets[b + 1]; ++k) {
        const auto& bc = out[k];
        if (mark[bc.id] == 0) continue;
        const int negatives = (ab->sign == Sign::Negative) + (bc.sign == Sign::Negative) + (mark[bc.id] < 0);
        visit(a, b, bc.id, negatives);
      }
    }
    for (auto it = a_begin; it != a_end; ++it) mark[it->id] = 0;
  }
}

double compute_eta(const SignedGraph& g) {
  if (g.num_edges() == 0) throw Error(ErrorKind::EmptyGraph, "eta is undefined without edges");
  return static_cast<double>(g.num_positive()) / static_cast<double>(g.num_edges());
}

TriangleCensus triangle_census(const SignedGraph& g) {
  TriangleCensus census;
  for_each_triangle(g, [&](VertexId, VertexId, VertexId, int negatives) { ++census.counts[negatives]; });
  return census;
}

double balanced_fraction(const TriangleCensus& census) {
  if (census.total() == 0) throw Error(ErrorKind::NoTriangles, "balanced fraction needs a triangle");
  return static_cast<double>(census.balanced()) / static_cast<double>(census.total());
}

std::vector<std::uint64_t> triangles_per_vertex(const SignedGraph& g) {
  std::vector<std::uint64_t> t(g.num_vertices(), 0);
  for_each_triangle(g, [&](VertexId a, VertexId b, VertexId c, int) {
    ++t[a];
    ++t[b];
    ++t[c];
  });
  return t;
}

std::vector<double> local_clustering(const SignedGraph& g) {
  const auto t = triangles_per_vertex(g);
  std::vector<double> c(g.num_vertices(), 0.0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const double d = static_cast<double>(g.degree(v));
    if (d >= 2) c[v] = 2.0 * static_cast<double>(t[v]) / (d * (d - 1.0));
  }
  return c;
}

std::map<std::uint64_t, std::uint64_t> degree_histogram(std::span<const std::uint64_t> degrees) {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (const auto d : degrees) ++hist[d];
  return hist;
}

std::vector<ClusteringBin> clustering_by_degree(std::span<const std::uint64_t> degrees,
                                                std::span<const double> clustering) {
  std::map<std::uint64_t, std::pair<std::uint64_t, double>> acc;
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    auto& [count, sum] = acc[degrees[v]];
    ++count;
    sum += clustering[v];
  }
  std::vector<ClusteringBin> bins;
  bins.reserve(acc.size());
  for (const auto& [degree, cs] : acc) bins.push_back({degree, cs.first, cs.second / static_cast<double>(cs.first)});
  return bins;
}

GraphStats stats_report(const SignedGraph& g) {
  GraphStats s;
  s.num_vertices = g.num_vertices();
  s.num_edges = g.num_edges();
  s.num_positive = g.num_positive();
  s.eta = compute_eta(g);
  s.degrees = g.degrees();
  s.census = triangle_census(g);
  if (s.census.total() > 0) s.delta_B = balanced_fraction(s.census);
  s.clustering = local_clustering(g);
  s.degree_histogram = degree_histogram(s.degrees);
  if (!s.clustering.empty()) {
    s.average_clustering = std::accumulate(s.clustering.begin(), s.clustering.end(), 0.0) /
                           static_cast<double>(s.clustering.size());
  }
  return s;
}

double ks_statistic(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::InvalidArgument, "KS statistic of an empty sample");
  std::vector<std::uint64_t> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size()), ny = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double best = 0.0;
  while (i < x.size() || j < y.size()) {
    std::uint64_t value;
    if (j == y.size() || (i < x.size() && x[i] <= y[j])) value = x[i];
    else value = y[j];
    while (i < x.size() && x[i] == value) ++i;
    while (j < y.size() && y[j] == value) ++j;
    best = std::max(best, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return best;
}

double degree_ks_statistic(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::vector<std::uint64_t> x, y;
  std::copy_if(a.begin(), a.end(), std::back_inserter(x), [](auto d) { return d > 0; });
  std::copy_if(b.begin(), b.end(), std::back_inserter(y), [](auto d) { return d > 0; });
  return ks_statistic(x, y);
}

double distribution_l1(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  double total = 0.0;
  for (std::size_t i = 0; i < 4; ++i) total += std::abs(a[i] - b[i]);
  return total;
}

}  // namespace signet
