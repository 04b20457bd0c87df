#include "signet/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "signet/error.hpp"

namespace signet {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  const bool has_comma = line.find(',') != std::string_view::npos;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t end;
    if (has_comma) {
      end = line.find(',', pos);
      if (end == std::string_view::npos) end = line.size();
      out.push_back(trim(line.substr(pos, end - pos)));
      pos = end + 1;
    } else {
      pos = line.find_first_not_of(" \t", pos);
      if (pos == std::string_view::npos) break;
      end = line.find_first_of(" \t", pos);
      if (end == std::string_view::npos) end = line.size();
      out.push_back(line.substr(pos, end - pos));
      pos = end;
    }
  }
  return out;
}

template <class T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return value;
}

std::optional<Sign> parse_sign(std::string_view s) {
  if (s == "+" || s == "+1" || s == "1") return Sign::Positive;
  if (s == "-" || s == "-1") return Sign::Negative;
  return std::nullopt;
}

// Content lines only: blank lines and `#` comments are reported as empty.
std::string_view content_of(std::string_view line) {
  line = trim(line);
  if (line.empty() || line.front() == '#') return {};
  return line;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& reason) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + reason);
}

}  // namespace

LabeledGraph ingest_ratings(std::span<const RawRating> rows) {
  std::unordered_map<std::string, std::size_t> raw_index;
  std::vector<std::string> raw_labels;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = raw_index.emplace(label, raw_labels.size());
    if (inserted) raw_labels.push_back(label);
    return it->second;
  };

  std::unordered_map<std::uint64_t, double> totals;
  std::vector<std::uint64_t> pair_order;
  for (const auto& row : rows) {
    if (row.source == row.target || row.weight == 0.0) continue;
    const auto a = static_cast<VertexId>(intern(row.source));
    const auto b = static_cast<VertexId>(intern(row.target));
    const auto key = pair_key(a, b);
    auto [it, inserted] = totals.emplace(key, 0.0);
    if (inserted) pair_order.push_back(key);
    it->second += row.weight;
  }

  LabeledGraph out;
  std::vector<SignedEdge> edges;
  std::unordered_map<std::size_t, VertexId> dense;
  auto relabel = [&](std::size_t raw) {
    auto [it, inserted] = dense.emplace(raw, static_cast<VertexId>(out.labels.size()));
    if (inserted) out.labels.push_back(raw_labels[raw]);
    return it->second;
  };
  for (const auto key : pair_order) {
    const double total = totals.at(key);
    if (total == 0.0) continue;
    const auto lo = static_cast<std::size_t>(key >> 32);
    const auto hi = static_cast<std::size_t>(key & 0xffffffffu);
    const VertexId u = relabel(lo);
    const VertexId v = relabel(hi);
    edges.push_back({u, v, total > 0 ? Sign::Positive : Sign::Negative});
  }
  if (edges.empty()) throw Error(ErrorKind::EmptyResult, "no signed pair survived aggregation");
  out.graph = SignedGraph::from_edges(edges, out.labels.size());
  return out;
}

std::vector<RawRating> parse_ratings(std::istream& in) {
  std::vector<RawRating> rows;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = content_of(line);
    if (body.empty()) continue;
    const auto fields = split_fields(body);
    const auto malformed = [&](const std::string& why) {
      throw Error(ErrorKind::MalformedRow, "line " + std::to_string(line_no) + ": " + why);
    };
    if (fields.size() < 3 || fields.size() > 4) malformed("expected 3 or 4 fields");
    const auto weight = parse_number<double>(fields[2]);
    if (!weight) {
      if (!seen_data) {
        seen_data = true;  // header row
        continue;
      }
      malformed("rating is not a number");
    }
    seen_data = true;
    RawRating row{std::string(fields[0]), std::string(fields[1]), *weight, std::nullopt};
    if (row.source.empty() || row.target.empty()) malformed("empty vertex id");
    if (fields.size() == 4) {
      const auto ts = parse_number<double>(fields[3]);
      if (!ts) malformed("time is not a number");
      row.timestamp = static_cast<std::int64_t>(*ts);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SignedGraph parse_canonical(std::istream& in) {
  std::vector<SignedEdge> edges;
  std::optional<std::size_t> declared_n;
  std::unordered_map<std::uint64_t, std::size_t> first_line;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto raw = trim(line);
    if (raw.starts_with("#")) {
      auto directive = trim(raw.substr(1));
      if (directive.starts_with("vertices:")) {
        const auto n = parse_number<std::size_t>(trim(directive.substr(9)));
        if (!n) parse_error(line_no, "bad vertices directive");
        declared_n = *n;
      }
      continue;
    }
    if (raw.empty()) continue;
    const auto fields = split_fields(raw);
    if (fields.size() != 3) parse_error(line_no, "expected 3 fields, got " + std::to_string(fields.size()));
    const auto u = parse_number<std::uint32_t>(fields[0]);
    const auto v = parse_number<std::uint32_t>(fields[1]);
    if (!u || !v) {
      if (!seen_data) {
        seen_data = true;  // header row
        continue;
      }
      parse_error(line_no, "vertex id is not a non-negative integer");
    }
    seen_data = true;
    const auto s = parse_sign(fields[2]);
    if (!s) parse_error(line_no, "sign must be +1 or -1");
    if (*u == *v) parse_error(line_no, "self-loop on vertex " + std::to_string(*u));
    if (auto [it, inserted] = first_line.emplace(pair_key(*u, *v), line_no); !inserted) {
      parse_error(line_no, "duplicate edge (first on line " + std::to_string(it->second) + ")");
    }
    edges.push_back({*u, *v, *s});
  }
  try {
    return SignedGraph::from_edges(edges, declared_n);
  } catch (const Error& e) {
    parse_error(line_no, e.what());
  }
}

SignedGraph read_canonical(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return parse_canonical(in);
}

void write_canonical(const SignedGraph& g, std::ostream& out) {
  out << "# signet canonical edge list\n";
  out << "# vertices: " << g.num_vertices() << "\n";
  for (const auto& e : g.sorted_edges()) {
    out << e.u << '\t' << e.v << '\t' << (e.sign == Sign::Positive ? "+1" : "-1") << '\n';
  }
}

void write_canonical(const SignedGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  write_canonical(g, out);
}

std::string to_canonical_string(const SignedGraph& g) {
  std::ostringstream out;
  write_canonical(g, out);
  return out.str();
}

InputFormat detect_format(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = content_of(line);
    if (body.empty()) continue;
    const auto n = split_fields(body).size();
    if (n == 3) return InputFormat::Canonical;
    if (n == 4) return InputFormat::Ratings;
    parse_error(line_no, "cannot detect format from " + std::to_string(n) + " columns");
  }
  throw Error(ErrorKind::ParseError, path.string() + " has no data lines");
}

LabeledGraph read_graph(const std::filesystem::path& path) {
  if (detect_format(path) == InputFormat::Canonical) {
    LabeledGraph out{read_canonical(path), {}};
    out.labels.reserve(out.graph.num_vertices());
    for (std::size_t v = 0; v < out.graph.num_vertices(); ++v) out.labels.push_back(std::to_string(v));
    return out;
  }
  std::ifstream in(path);
  const auto rows = parse_ratings(in);
  return ingest_ratings(rows);
}

std::filesystem::path resolve_data_path(const std::filesystem::path& path) {
  if (std::filesystem::exists(path)) return path;
  if (const char* root = std::getenv("SIGNET_DATA_DIR"); root && path.is_relative()) {
    auto candidate = std::filesystem::path(root) / path;
    if (std::filesystem::exists(candidate)) return candidate;
  }
  return path;
}

}  // namespace signet
