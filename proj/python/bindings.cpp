#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "signet/baseline.hpp"
#include "signet/error.hpp"
#include "signet/estimators.hpp"
#include "signet/evaluate.hpp"
#include "signet/generate.hpp"
#include "signet/io.hpp"
#include "signet/learn.hpp"
#include "signet/metrics.hpp"
#include "signet/serialize.hpp"

namespace py = pybind11;
using namespace signet;

namespace {

using EdgeTuple = std::tuple<VertexId, VertexId, int>;

Sign sign_from_int(int s) {
  if (s == 1) return Sign::Positive;
  if (s == -1) return Sign::Negative;
  throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1, got " + std::to_string(s));
}

SignedGraph graph_from_tuples(const std::vector<EdgeTuple>& edges, std::optional<std::size_t> n) {
  std::vector<SignedEdge> es;
  es.reserve(edges.size());
  for (const auto& [u, v, s] : edges) es.push_back({u, v, sign_from_int(s)});
  return SignedGraph::from_edges(es, n);
}

std::vector<EdgeTuple> edge_tuples(const SignedGraph& g) {
  std::vector<EdgeTuple> out;
  out.reserve(g.num_edges());
  for (const auto& e : g.sorted_edges()) out.emplace_back(e.u, e.v, to_int(e.sign));
  return out;
}

// Documents cross the boundary as JSON text; the Python side turns them into dicts.
std::string dump(const nlohmann::json& doc) { return doc.dump(); }

}  // namespace

PYBIND11_MODULE(_signet, m) {
  m.doc() = "Balanced signed Chung-Lu network toolkit";
  py::register_exception<Error>(m, "SignetError", PyExc_ValueError);

  py::class_<SignedGraph>(m, "Graph")
      .def(py::init(&graph_from_tuples), py::arg("edges"), py::arg("num_vertices") = py::none())
      .def_property_readonly("num_vertices", &SignedGraph::num_vertices)
      .def_property_readonly("num_edges", &SignedGraph::num_edges)
      .def_property_readonly("num_positive", &SignedGraph::num_positive)
      .def_property_readonly("num_negative", &SignedGraph::num_negative)
      .def("edges", &edge_tuples, "edges as sorted (u, v, sign) tuples")
      .def("degrees", [](const SignedGraph& g) { return g.degrees(); })
      .def("degree", &SignedGraph::degree)
      .def("has_edge", &SignedGraph::has_edge)
      .def("sign",
           [](const SignedGraph& g, VertexId u, VertexId v) -> std::optional<int> {
             const auto s = g.sign(u, v);
             if (!s) return std::nullopt;
             return to_int(*s);
           })
      .def("neighbors",
           [](const SignedGraph& g, VertexId v) {
             if (v >= g.num_vertices()) throw py::index_error("vertex out of range");
             std::vector<std::pair<VertexId, int>> out;
             for (const auto& nb : g.neighbors(v)) out.emplace_back(nb.id, to_int(nb.sign));
             return out;
           })
      .def("__eq__", [](const SignedGraph& a, const SignedGraph& b) { return a == b; })
      .def("__repr__", [](const SignedGraph& g) {
        std::ostringstream os;
        os << "Graph(num_vertices=" << g.num_vertices() << ", num_edges=" << g.num_edges() << ")";
        return os.str();
      });

  m.def("read_graph", [](const std::filesystem::path& p) { return read_graph(resolve_data_path(p)).graph; });
  m.def("ingest_ratings",
        [](const std::vector<std::tuple<std::string, std::string, double>>& rows) {
          std::vector<RawRating> raw;
          raw.reserve(rows.size());
          for (const auto& [s, t, w] : rows) raw.push_back({s, t, w, std::nullopt});
          auto lg = ingest_ratings(raw);
          return std::make_pair(std::move(lg.graph), std::move(lg.labels));
        },
        "collapse (source, target, weight) rows into (graph, labels)");
  m.def("parse_canonical", [](const std::string& text) {
    std::istringstream in(text);
    return parse_canonical(in);
  });
  m.def("to_canonical_string", &to_canonical_string);
  m.def("write_canonical", py::overload_cast<const SignedGraph&, const std::filesystem::path&>(&write_canonical));

  m.def("compute_eta", &compute_eta);
  m.def("triangle_census", [](const SignedGraph& g) { return triangle_census(g).counts; },
        "counts of (+++, ++-, +--, ---)");
  m.def("balanced_fraction", [](const SignedGraph& g) { return balanced_fraction(triangle_census(g)); });
  m.def("local_clustering", &local_clustering);
  m.def("_stats_json", [](const SignedGraph& g) { return dump(to_json(stats_report(g))); });

  m.def("estimate_triangles", [](const SignedGraph& g) {
    const auto e = estimate_all(g);
    py::dict d;
    d["delta_random"] = e.delta_random;
    d["delta_random_balanced"] = e.delta_random_balanced;
    d["delta_triangle"] = e.delta_triangle;
    return d;
  });
  m.def("em_edge_responsibility",
        [](const SignedGraph& g, VertexId i, VertexId j, double rho) {
          const auto pi = SamplingVector::from_graph(g);
          return em_edge_responsibility(g, pi, i, j, rho);
        },
        py::arg("graph"), py::arg("i"), py::arg("j"), py::arg("rho"));

  py::class_<LearnConfig>(m, "LearnConfig")
      .def(py::init<>())
      .def_readwrite("em_sample_size", &LearnConfig::em_sample_size)
      .def_readwrite("em_max_iters", &LearnConfig::em_max_iters)
      .def_readwrite("em_tol", &LearnConfig::em_tol)
      .def_readwrite("ab_max_iters", &LearnConfig::ab_max_iters)
      .def_readwrite("ab_tol", &LearnConfig::ab_tol)
      .def_readwrite("rho_init", &LearnConfig::rho_init)
      .def_readwrite("seed", &LearnConfig::seed);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](double rho, double alpha, double beta, double eta, double delta_B) {
             ModelParams p;
             p.rho = rho;
             p.alpha = alpha;
             p.beta = beta;
             p.eta = eta;
             p.delta_B = delta_B;
             p.validate();
             return p;
           }),
           py::arg("rho"), py::arg("alpha"), py::arg("beta"), py::arg("eta") = 0.0, py::arg("delta_B") = 0.0)
      .def_readwrite("rho", &ModelParams::rho)
      .def_readwrite("alpha", &ModelParams::alpha)
      .def_readwrite("beta", &ModelParams::beta)
      .def_readwrite("eta", &ModelParams::eta)
      .def_readwrite("delta_B", &ModelParams::delta_B)
      .def_readonly("warnings", &ModelParams::warnings)
      .def_readonly("rho_trace", &ModelParams::rho_trace)
      .def_readonly("rho_converged", &ModelParams::rho_converged)
      .def_readonly("alpha_beta_converged", &ModelParams::alpha_beta_converged)
      .def("to_json", [](const ModelParams& p) { return dump(to_json(p)); })
      .def_static("from_json", [](const std::string& text) { return params_from_json(nlohmann::json::parse(text)); })
      .def("__repr__", [](const ModelParams& p) {
        std::ostringstream os;
        os << "ModelParams(rho=" << p.rho << ", alpha=" << p.alpha << ", beta=" << p.beta << ")";
        return os.str();
      });

  m.def("learn", &learn_parameters, py::arg("graph"), py::arg("config") = LearnConfig{},
        py::call_guard<py::gil_scoped_release>());
  m.def("generate", &generate, py::arg("graph"), py::arg("params"), py::arg("seed") = 42,
        py::call_guard<py::gil_scoped_release>());
  m.def("stcl_generate", &stcl_generate, py::arg("graph"), py::arg("rho"), py::arg("seed") = 42,
        py::call_guard<py::gil_scoped_release>());
  m.def("analytic_triangle_distribution", [](double eta) { return analytic_triangle_distribution(eta).as_array(); });
  m.def("_evaluate_json", [](const SignedGraph& input, const std::vector<SignedGraph>& generated) {
    std::vector<NamedGraph> named;
    for (std::size_t r = 0; r < generated.size(); ++r) named.push_back({"run_" + std::to_string(r), generated[r]});
    return dump(to_json(evaluate(input, named)));
  });
}
