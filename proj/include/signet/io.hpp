#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "signet/graph.hpp"

namespace signet {

/// One row of a directed, weighted trust/rating dataset.
struct RawRating {
  std::string source;
  std::string target;
  double weight = 0.0;
  std::optional<std::int64_t> timestamp;
};

/// A graph plus the original identifier of every dense vertex id.
struct LabeledGraph {
  SignedGraph graph;
  std::vector<std::string> labels;
};

/// Collapses directed ratings into an undirected signed graph. All weights
/// on an unordered pair (both directions) are summed; the pair is positive
/// for a positive sum, negative for a negative sum, and dropped on zero.
/// Self-loops are dropped. Vertices touching a surviving edge are relabeled
/// densely in first-appearance order. Throws EmptyResult if nothing survives.
LabeledGraph ingest_ratings(std::span<const RawRating> rows);

/// `source,target,rating[,time]`, comma or whitespace separated. A leading
/// non-numeric header and `#` comments are skipped. Throws MalformedRow.
std::vector<RawRating> parse_ratings(std::istream& in);

/// Canonical edge list: `u<TAB>v<TAB>s`, s in {+1, -1} (also `+`, `-`, `1`).
/// `#` comments; an optional `# vertices: N` directive fixes N so isolated
/// vertices survive a round trip. Throws ParseError(line, reason).
SignedGraph parse_canonical(std::istream& in);
SignedGraph read_canonical(const std::filesystem::path& path);

/// Writes edges sorted by (u, v); byte-identical for equal graphs.
void write_canonical(const SignedGraph& g, std::ostream& out);
void write_canonical(const SignedGraph& g, const std::filesystem::path& path);
std::string to_canonical_string(const SignedGraph& g);

enum class InputFormat { Canonical, Ratings };

/// 3 columns on the first data line means canonical, 4 means ratings.
InputFormat detect_format(const std::filesystem::path& path);

/// Reads either format. Canonical input keeps its ids (labels are the ids).
LabeledGraph read_graph(const std::filesystem::path& path);

/// Returns `path` if it exists, else `$SIGNET_DATA_DIR/path` if that exists,
/// else `path` unchanged so the caller reports the original name.
std::filesystem::path resolve_data_path(const std::filesystem::path& path);

}  // namespace signet
