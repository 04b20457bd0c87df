#include <algorithm>
#include <cmath>
#include <map>

#include "doctest.h"
#include "signet/error.hpp"
#include "signet/metrics.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace signet;
using namespace signet::testing;

namespace {

SignedGraph flipped(const SignedGraph& g) {
  std::vector<SignedEdge> es;
  for (const auto& e : g.edges()) es.push_back({e.u, e.v, flip(e.sign)});
  return SignedGraph::from_edges(es, g.num_vertices());
}

SignedGraph relabeled(const SignedGraph& g, Rng& rng) {
  std::vector<VertexId> perm(g.num_vertices());
  for (VertexId v = 0; v < perm.size(); ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<SignedEdge> es;
  for (const auto& e : g.edges()) es.push_back({perm[e.u], perm[e.v], e.sign});
  return SignedGraph::from_edges(es, g.num_vertices());
}

}  // namespace

TEST_CASE("eta") {
  CHECK(compute_eta(complete_graph(4)) == 1.0);
  CHECK(compute_eta(make_graph({{0, 1, P}, {1, 2, P}, {2, 3, P}, {3, 0, N}})) == 0.75);
  CHECK_THROWS_AS(compute_eta(make_graph({}, 3)), Error);
}

TEST_CASE("census on small fixtures") {
  const auto k3 = make_graph({{0, 1, P}, {1, 2, P}, {0, 2, N}});
  const auto c = triangle_census(k3);
  CHECK(c[TriangleType::PPM] == 1);
  CHECK(c.total() == 1);
  CHECK(balanced_fraction(c) == 0.0);

  const auto k4 = triangle_census(complete_graph(4));
  CHECK(k4[TriangleType::PPP] == 4);
  CHECK(k4.total() == 4);

  CHECK(balanced_fraction(triangle_census(complete_graph(3))) == 1.0);
  CHECK(triangle_census(cycle_graph(5)).total() == 0);
  try {
    balanced_fraction(triangle_census(path_graph(4)));
    FAIL("expected NoTriangles");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoTriangles);
  }
}

TEST_CASE("census matches brute force on G(60, 0.2)") {
  Rng rng(60);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = random_signed_graph(60, 0.2, 0.6, rng);
    CHECK(triangle_census(g).counts == brute_census(g));
  }
}

TEST_CASE("census properties on random graphs") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = 3 + uniform_index(rng, 40);
    const double p = 0.05 + 0.5 * uniform_unit(rng);
    const auto g = random_signed_graph(n, p, uniform_unit(rng), rng);
    const auto census = triangle_census(g);
    CHECK(census.counts == brute_census(g));

    // Relabeling vertices changes nothing.
    CHECK(triangle_census(relabeled(g, rng)) == census);

    // Flipping every sign: recount, then compare with the swapped counts.
    const auto flip_census = triangle_census(flipped(g));
    CHECK(flip_census.counts == brute_census(flipped(g)));
    CHECK(flip_census.counts[0] == census.counts[3]);
    CHECK(flip_census.counts[1] == census.counts[2]);
    // Balanced triangles of the flipped graph are those with an even number
    // of positive edges in the original.
    CHECK(flip_census.balanced() == census.counts[1] + census.counts[3]);
  }
}

TEST_CASE("local clustering") {
  for (const double c : local_clustering(complete_graph(3))) CHECK(c == 1.0);
  for (const double c : local_clustering(path_graph(3))) CHECK(c == 0.0);
  const auto w = local_clustering(wheel_graph(5));
  CHECK(w[0] == doctest::Approx(0.5));
  CHECK(w[1] == doctest::Approx(2.0 / 3.0));

  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_signed_graph(30, 0.25, 0.5, rng);
    const auto got = local_clustering(g);
    const auto want = brute_clustering(g);
    for (std::size_t v = 0; v < got.size(); ++v) CHECK(got[v] == doctest::Approx(want[v]).epsilon(1e-12));
  }
}

TEST_CASE("stats report") {
  const auto star = stats_report(star_graph(3));
  CHECK(star.degree_histogram == std::map<std::uint64_t, std::uint64_t>{{1, 3}, {3, 1}});
  CHECK_FALSE(star.delta_B.has_value());

  const auto k3 = stats_report(complete_graph(3));
  CHECK(k3.eta == 1.0);
  CHECK(k3.delta_B == 1.0);
  CHECK(k3.average_clustering == 1.0);

  const auto bins = clustering_by_degree(star.degrees, star.clustering);
  REQUIRE(bins.size() == 2);
  CHECK(bins[0].degree == 1);
  CHECK(bins[0].vertices == 3);
}

TEST_CASE("KS and L1 distances") {
  const std::vector<std::uint64_t> a{1, 2, 3, 4};
  CHECK(ks_statistic(a, a) == 0.0);
  const std::vector<std::uint64_t> b{5, 6, 7, 8};
  CHECK(ks_statistic(a, b) == 1.0);
  const std::vector<std::uint64_t> c{1, 1, 2, 2};
  CHECK(ks_statistic(a, c) == doctest::Approx(0.5));
  // isolated vertices are ignored
  const std::vector<std::uint64_t> a0{0, 0, 1, 2, 3, 4};
  CHECK(degree_ks_statistic(a, a0) == 0.0);
  CHECK(distribution_l1({1, 0, 0, 0}, {0, 1, 0, 0}) == 2.0);
  CHECK(distribution_l1({0.5, 0.5, 0, 0}, {0.5, 0.25, 0.25, 0}) == doctest::Approx(0.5));
}
