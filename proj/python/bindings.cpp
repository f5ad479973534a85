#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "cliquecomm/classical.hpp"
#include "cliquecomm/error.hpp"
#include "cliquecomm/graph.hpp"
#include "cliquecomm/io.hpp"
#include "cliquecomm/paley.hpp"
#include "cliquecomm/quantum.hpp"
#include "cliquecomm/recon.hpp"
#include "cliquecomm/relation.hpp"
#include "cliquecomm/version.hpp"

namespace py = pybind11;
using namespace cliquecomm;

namespace {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::kInvalidParams: return "InvalidParams";
    case ErrorKind::kEmptyGraph: return "EmptyGraph";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kInconsistent: return "Inconsistent";
    case ErrorKind::kConditionsFailed: return "ConditionsFailed";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kSearchExhausted: return "SearchExhausted";
    case ErrorKind::kConstructionFailed: return "ConstructionFailed";
  }
  return "Unknown";
}

std::vector<std::vector<std::string>> exact_rows(const ExactTable& t) {
  std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(t.rows()));
  for (int r = 0; r < t.rows(); ++r)
    for (int c = 0; c < t.rows(); ++c) rows[static_cast<std::size_t>(r)].push_back(to_string(t.at(r, c)));
  return rows;
}

std::vector<std::vector<double>> real_rows(const RealTable& t) {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(t.rows()));
  for (int r = 0; r < t.rows(); ++r)
    for (int c = 0; c < t.rows(); ++c) rows[static_cast<std::size_t>(r)].push_back(t.at(r, c));
  return rows;
}

RealTable real_from_rows(int n, int omega, const std::vector<std::vector<double>>& rows) {
  RealTable t(n, omega);
  if (rows.size() != static_cast<std::size_t>(t.rows())) throw Error(ErrorKind::kDimensionMismatch, "table has the wrong number of rows");
  for (int r = 0; r < t.rows(); ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (row.size() != static_cast<std::size_t>(t.rows())) throw Error(ErrorKind::kDimensionMismatch, "table row has the wrong length");
    for (int c = 0; c < t.rows(); ++c) t.at(r, c) = row[static_cast<std::size_t>(c)];
  }
  return t;
}

py::dict strategy_dict(const Strategy& s, const Relation& rel) {
  const ExactTable t = s.table();
  py::dict d;
  d["messages"] = s.messages;
  d["deterministic"] = s.deterministic();
  d["T0"] = check_T0(t, rel).ok;
  d["T1"] = check_T1(t, rel).ok;
  d["payoff"] = to_string(payoff(t, rel).value);
  d["table"] = exact_rows(t);
  return d;
}

}  // namespace

PYBIND11_MODULE(_cliquecomm, m) {
  m.doc() = "Clique-relation communication complexity";
  m.attr("__version__") = kVersion;

  static py::handle error_type = py::exception<Error>(m, "CliqueCommError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(error_type)(std::string(kind_name(e.kind())) + ": " + e.what());
      err.attr("kind") = kind_name(e.kind());
      err.attr("exit_code") = exit_code(e.kind());
      PyErr_SetObject(error_type.ptr(), err.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<Edge>&>(), py::arg("order"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def("adjacent", &Graph::adjacent)
      .def("edges", &Graph::edges)
      .def("edge_count", &Graph::edge_count)
      .def("to_json", [](const Graph& g) { return to_json(g).dump(); })
      .def_static("from_json", [](const std::string& s) {
        try {
          return graph_from_json(Json::parse(s));
        } catch (const Json::exception& e) {
          throw Error(ErrorKind::kInvalidParams, e.what());
        }
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
      });

  py::class_<CliqueSet>(m, "CliqueSet")
      .def(py::init<const Graph&, std::vector<std::vector<int>>>())
      .def_property_readonly("omega", &CliqueSet::omega)
      .def_property_readonly("count", &CliqueSet::count)
      .def("cliques", &CliqueSet::all);

  py::class_<Relation>(m, "Relation")
      .def_property_readonly("n", &Relation::n)
      .def_property_readonly("omega", &Relation::omega)
      .def("tuples", [](const Relation& r) {
        std::vector<std::tuple<int, int, int, int>> out;
        for (const auto& t : r.tuples()) out.emplace_back(t.x, t.a, t.y, t.b);
        return out;
      })
      .def("contains", py::overload_cast<int, int, int, int>(&Relation::contains, py::const_))
      .def("eta", &Relation::eta)
      .def("__len__", &Relation::size);

  m.def("gen_disconnected", &gen_disconnected, py::arg("n"), py::arg("omega"));
  m.def("gen_nncc", &gen_nncc, py::arg("n"), py::arg("omega"), py::arg("r"));
  m.def("gen_paley", &gen_paley, py::arg("q"));
  m.def("enumerate_maximum_cliques", &enumerate_maximum_cliques);
  m.def("check_conditions", [](const Graph& g, const CliqueSet& c, int cap) {
    const ConditionReport r = check_conditions(g, c, cap);
    py::dict d;
    d["G0"] = r.g0;
    d["G1"] = r.g1;
    d["G2_k"] = r.g2_k ? py::cast(*r.g2_k) : py::none();
    d["G2"] = r.g2 ? py::cast(*r.g2) : py::none();
    return d;
  }, py::arg("graph"), py::arg("cliques"), py::arg("g2_cap") = 16);

  m.def("build_relation", &build_relation);
  m.def("infer_graph", [](const Relation& rel) {
    const InferredGraph inf = infer_graph(rel, rel.n(), rel.omega());
    return py::make_tuple(inf.graph, inf.vertex_of_row);
  });

  m.def("ccr_protocol", [](const Graph& g, const CliqueSet& c, const Relation& rel) {
    const Strategy s = ccr_protocol(g, c, rel);
    py::dict d = strategy_dict(s, rel);
    d["permutations"] = permutations_of(s);
    return d;
  });
  m.def("sccr_protocol", [](const Graph& g, const CliqueSet& c, const Relation& rel) {
    return strategy_dict(sccr_protocol(g, c, rel), rel);
  });
  m.def("verify_classical_lower_bound", &verify_classical_lower_bound, py::arg("graph"), py::arg("relation"),
        py::arg("m"), py::arg("cap") = 12);
  m.def("count_T0_strategies", [](const Graph& g, const Relation& rel, int m) {
    return enumerate_T0_strategies(g, rel, m).size();
  });
  m.def("mixture_for_T1", [](const Graph& g, const Relation& rel) {
    const PublicCoinMixture mix = mixture_for_T1(g, rel);
    const ExactTable t = mix.table();
    return py::make_tuple(mix.members.size(), to_string(payoff(t, rel).value), exact_rows(t));
  });
  m.def("mixture_for_T2", [](const Graph& g, const Relation& rel) {
    const T2Mixture mix = mixture_for_T2(g, rel);
    const ExactTable t = mix.mixture.table();
    return py::make_tuple(mix.mixture.members.size(), to_string(payoff(t, rel).value), exact_rows(t));
  });
  m.def("min_oa_rows", &min_oa_rows, py::arg("k"), py::arg("cap") = 8);

  m.def("quantum_table", [](const Graph& g, const CliqueSet& c, const Relation& rel, int d, std::uint64_t seed) {
    const OrthogonalRepresentation rep = construct_for(g, c, d, seed);
    return real_rows(quantum_table(rep, g, c, rel));
  }, py::arg("graph"), py::arg("cliques"), py::arg("relation"), py::arg("d") = 0, py::arg("seed") = 1);
  m.def("table_payoff", [](const Relation& rel, const std::vector<std::vector<double>>& rows) {
    return payoff(real_from_rows(rel.n(), rel.omega(), rows), rel).value;
  });
  m.def("optimize_payoff", [](const Graph& g, const CliqueSet& c, int d, int restarts, std::uint64_t seed) {
    OptimizeOptions opts;
    opts.restarts = restarts;
    opts.seed = seed;
    return optimize_payoff(g, c, d, opts).payoff;
  }, py::arg("graph"), py::arg("cliques"), py::arg("d"), py::arg("restarts") = 32, py::arg("seed") = 1);
  m.def("check_qubit_mubs", [] { return check_mub(qubit_mubs(), 2); });
  m.def("rsp_payoff", [](const std::vector<double>& angles) { return rsp_payoff(angles).payoff; });
  m.def("symmetric_rsp_angles", &symmetric_rsp_angles);

  m.def("paley_payoff", &paley_payoff);
  m.def("theta_paley", &theta_paley, py::arg("q"), py::arg("tol") = 1e-6);
  m.def("paley_gram", [](int q) {
    const OptimalGram g = gram_opt(q);
    py::dict d;
    d["rank"] = g.rank;
    d["entry_sum"] = g.entry_sum;
    d["spectrum_ok"] = g.spectrum.ok;
    d["sum_ok"] = g.sum_ok;
    return d;
  });
  m.def("verify_k_squared", &verify_k_squared);

  m.def("simulate_rounds", [](const Relation& rel, const std::vector<std::vector<double>>& rows, int k, std::uint64_t seed) {
    const RunLog log = simulate_rounds(real_from_rows(rel.n(), rel.omega(), rows), k, seed);
    std::vector<std::tuple<int, int, int, int>> out;
    for (const auto& t : log.rounds) out.emplace_back(t.x, t.a, t.y, t.b);
    return out;
  });
  m.def("success_prob_exact", [](const Relation& rel, const std::vector<std::vector<double>>& rows, int k) {
    return success_prob_exact(real_from_rows(rel.n(), rel.omega(), rows), rel, k);
  });
  m.def("success_prob_mc", [](const Relation& rel, const std::vector<std::vector<double>>& rows, int k, int trials,
                              std::uint64_t seed) {
    const auto est = success_prob_mc(real_from_rows(rel.n(), rel.omega(), rows), rel, k, trials, seed);
    return py::make_tuple(est.mean, est.std_error);
  });
}
