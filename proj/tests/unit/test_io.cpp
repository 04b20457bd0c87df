#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "doctest.h"
#include "signet/error.hpp"
#include "signet/io.hpp"
#include "signet/metrics.hpp"
#include "support/fixtures.hpp"

using namespace signet;
using namespace signet::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Io;
}

SignedGraph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_canonical(in);
}

std::vector<RawRating> rows_of(const LabeledGraph& lg) {
  std::vector<RawRating> rows;
  for (const auto& e : lg.graph.edges()) {
    rows.push_back({lg.labels[e.u], lg.labels[e.v], static_cast<double>(to_int(e.sign)), std::nullopt});
  }
  return rows;
}

// Checks `g` against an independently computed pair-sum table keyed by labels.
void check_against_sums(const LabeledGraph& lg, const std::vector<RawRating>& rows) {
  std::map<std::pair<std::string, std::string>, double> sums;
  for (const auto& r : rows) {
    if (r.source == r.target) continue;
    auto key = std::minmax(r.source, r.target);
    sums[{key.first, key.second}] += r.weight;
  }
  std::size_t expected_edges = 0;
  for (const auto& [pair, w] : sums) expected_edges += w != 0.0;
  CHECK(lg.graph.num_edges() == expected_edges);
  for (const auto& e : lg.graph.edges()) {
    auto key = std::minmax(lg.labels[e.u], lg.labels[e.v]);
    const double w = sums.at({key.first, key.second});
    CHECK(w != 0.0);
    CHECK((w > 0) == (e.sign == Sign::Positive));
  }
}

}  // namespace

TEST_CASE("ingest aggregates both directions") {
  SUBCASE("positive sum") {
    std::vector<RawRating> rows{{"a", "b", 3, {}}, {"b", "a", -1, {}}};
    const auto lg = ingest_ratings(rows);
    CHECK(lg.graph.num_edges() == 1);
    CHECK(lg.graph.num_positive() == 1);
    CHECK(lg.labels == std::vector<std::string>{"a", "b"});
  }
  SUBCASE("zero sum drops the pair") {
    std::vector<RawRating> rows{{"a", "b", 1, {}}, {"b", "a", -1, {}}, {"a", "c", -2, {}}};
    const auto lg = ingest_ratings(rows);
    CHECK(lg.graph.num_edges() == 1);
    CHECK(lg.graph.num_vertices() == 2);
    CHECK(lg.graph.num_negative() == 1);
  }
  SUBCASE("nothing survives") {
    std::vector<RawRating> rows{{"a", "b", 1, {}}, {"b", "a", -1, {}}, {"c", "c", 5, {}}};
    CHECK(kind_of([&] { ingest_ratings(rows); }) == ErrorKind::EmptyResult);
  }
}

TEST_CASE("ingest is idempotent on canonical input") {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_signed_graph(40, 0.1, 0.8, rng);
    std::vector<RawRating> rows;
    for (const auto& e : g.edges()) {
      rows.push_back({std::to_string(e.u), std::to_string(e.v), double(to_int(e.sign)), std::nullopt});
    }
    const auto once = ingest_ratings(rows);
    const auto twice = ingest_ratings(rows_of(once));
    CHECK(twice.graph == once.graph);
    CHECK(twice.labels.size() == once.labels.size());
    // every surviving edge keeps its original sign
    for (const auto& e : once.graph.edges()) {
      const auto u = static_cast<VertexId>(std::stoul(once.labels[e.u]));
      const auto v = static_cast<VertexId>(std::stoul(once.labels[e.v]));
      CHECK(g.sign(u, v) == e.sign);
    }
    CHECK(once.graph.num_edges() == g.num_edges());
  }
}

TEST_CASE("ingest fuzz against pair sums") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pool = 2 + uniform_index(rng, 12);
    const auto count = 1 + uniform_index(rng, 60);
    std::vector<RawRating> rows;
    for (std::size_t r = 0; r < count; ++r) {
      rows.push_back({"v" + std::to_string(uniform_index(rng, pool)), "v" + std::to_string(uniform_index(rng, pool)),
                      static_cast<double>(static_cast<int>(uniform_index(rng, 7)) - 3), std::nullopt});
    }
    try {
      const auto lg = ingest_ratings(rows);
      check_against_sums(lg, rows);
      CHECK(lg.labels.size() == lg.graph.num_vertices());
      for (VertexId v = 0; v < lg.graph.num_vertices(); ++v) CHECK(lg.graph.degree(v) > 0);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EmptyResult);
    }
  }
}

TEST_CASE("parse ratings") {
  std::istringstream csv("source,target,rating,time\n# note\n7,8,-10,1\n8 9 2 3\n9,7,1\n");
  const auto rows = parse_ratings(csv);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].source == "7");
  CHECK(rows[0].weight == -10);
  CHECK(rows[0].timestamp == 1);
  CHECK_FALSE(rows[2].timestamp.has_value());

  std::istringstream bad("1,2\n");
  CHECK(kind_of([&] { parse_ratings(bad); }) == ErrorKind::MalformedRow);
  std::istringstream bad_weight("3,4,1,1\n1,2,x,4\n");
  CHECK(kind_of([&] { parse_ratings(bad_weight); }) == ErrorKind::MalformedRow);
}

TEST_CASE("canonical format") {
  SUBCASE("signed triangle from three lines") {
    const auto g = parse("0\t1\t+1\n1\t2\t-1\n0\t2\t-1\n");
    CHECK(g.num_edges() == 3);
    const auto census = triangle_census(g);
    CHECK(balanced_fraction(census) == 1.0);
  }
  SUBCASE("sign spellings") {
    const auto g = parse("u v s\n0 1 +\n1 2 -\n2 3 1\n3 4 -1\n");
    CHECK(g.num_positive() == 2);
    CHECK(g.num_negative() == 2);
  }
  SUBCASE("self-loop") { CHECK(kind_of([] { parse("0 0 +\n"); }) == ErrorKind::ParseError); }
  SUBCASE("duplicate") { CHECK(kind_of([] { parse("0 1 +\n1 0 -\n"); }) == ErrorKind::ParseError); }
  SUBCASE("bad sign") { CHECK(kind_of([] { parse("0 1 +\n1 2 2\n"); }) == ErrorKind::ParseError); }
  SUBCASE("error names the line") {
    try {
      parse("0 1 +\n\n2 2 +\n");
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
  }
}

TEST_CASE("canonical round trip") {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_signed_graph(25, 0.2, 0.6, rng);
    const auto text = to_canonical_string(g);
    CHECK(parse(text) == g);
    CHECK(to_canonical_string(parse(text)) == text);
  }
  const auto isolated = make_graph({{0, 1, P}}, 6);
  CHECK(parse(to_canonical_string(isolated)).num_vertices() == 6);
}

TEST_CASE("file formats are detected by column count") {
  const auto dir = std::filesystem::temp_directory_path() / "signet_test_io";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "ratings.csv") << "10,20,5,1\n20,30,-2,2\n";
    std::ofstream(dir / "canon.tsv") << "# c\n0\t1\t+1\n1\t2\t-1\n";
  }
  CHECK(detect_format(dir / "ratings.csv") == InputFormat::Ratings);
  CHECK(detect_format(dir / "canon.tsv") == InputFormat::Canonical);
  const auto lg = read_graph(dir / "ratings.csv");
  CHECK(lg.graph.num_edges() == 2);
  CHECK(lg.labels[0] == "10");
  CHECK(read_graph(dir / "canon.tsv").graph.num_negative() == 1);
  write_canonical(lg.graph, dir / "out.tsv");
  CHECK(read_canonical(dir / "out.tsv") == lg.graph);
  CHECK_THROWS_AS(read_canonical(dir / "missing.tsv"), Error);
  std::filesystem::remove_all(dir);
}
