#include "cliquecomm/io.hpp"

#include <iomanip>
#include <sstream>

#include "cliquecomm/error.hpp"

namespace cliquecomm {

namespace {

template <class Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kInvalidParams, std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Json table_header(int n, int omega, const char* kind) {
  return Json{{"schema_version", kSchemaVersion}, {"n", n}, {"omega", omega}, {"kind", kind}};
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"schema_version", kSchemaVersion}, {"order", g.order()}, {"edges", edges}};
}

Json to_json(const CliqueSet& c) {
  return Json{{"schema_version", kSchemaVersion}, {"omega", c.omega()}, {"cliques", c.all()}};
}

Json to_json(const Relation& r) {
  Json tuples = Json::array();
  for (const auto& t : r.tuples()) tuples.push_back({t.x, t.a, t.y, t.b});
  return Json{{"schema_version", kSchemaVersion}, {"n", r.n()}, {"omega", r.omega()}, {"tuples", tuples}};
}

Json to_json(const ExactTable& t) {
  Json j = table_header(t.n(), t.omega(), "exact");
  Json rows = Json::array();
  for (int r = 0; r < t.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < t.rows(); ++c) row.push_back(to_string(t.at(r, c)));
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

Json to_json(const RealTable& t) {
  Json j = table_header(t.n(), t.omega(), "quantum");
  Json rows = Json::array();
  for (int r = 0; r < t.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < t.rows(); ++c) row.push_back(t.at(r, c));
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

Json to_json(const Strategy& s) {
  Json enc = Json::array();
  for (int r = 0; r < s.n * s.omega; ++r) enc.push_back({r / s.omega + 1, r % s.omega, s.encoder[static_cast<std::size_t>(r)]});
  Json dec = Json::array();
  const bool det = s.deterministic();
  for (int m = 0; m < s.messages; ++m) {
    for (int y = 1; y <= s.n; ++y) {
      const auto& dist = s.decoder[static_cast<std::size_t>(m * s.n + (y - 1))];
      if (det) {
        dec.push_back({m, y, s.decode(m, y)});
      } else {
        Json d = Json::array();
        for (const auto& p : dist) d.push_back(to_string(p));
        dec.push_back({m, y, d});
      }
    }
  }
  return Json{{"schema_version", kSchemaVersion}, {"n", s.n}, {"omega", s.omega}, {"m", s.messages}, {"encoder", enc}, {"decoder", dec}};
}

Json to_json(const PublicCoinMixture& m) {
  Json members = Json::array();
  for (std::size_t i = 0; i < m.members.size(); ++i)
    members.push_back(Json{{"weight", to_string(m.weights[i])}, {"strategy", to_json(m.members[i])}});
  return Json{{"schema_version", kSchemaVersion}, {"coin_inputs", m.coin_inputs}, {"members", members}};
}

Json to_json(const OrthogonalRepresentation& rep) {
  Json vectors = Json::object();
  for (int v = 1; v <= rep.order(); ++v) {
    Json amps = Json::array();
    for (int k = 0; k < rep.d; ++k) amps.push_back({rep.vector(v)[k].real(), rep.vector(v)[k].imag()});
    vectors[std::to_string(v)] = amps;
  }
  return Json{{"schema_version", kSchemaVersion}, {"d", rep.d}, {"vectors", vectors}};
}

Graph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph(j.at("order").get<int>(), edges);
  });
}

CliqueSet cliques_from_json(const Graph& g, const Json& j) {
  return guarded("clique set", [&] { return CliqueSet(g, j.at("cliques").get<std::vector<std::vector<int>>>()); });
}

Relation relation_from_json(const Json& j) {
  return guarded("relation", [&] {
    std::vector<RelationTuple> tuples;
    for (const auto& t : j.at("tuples"))
      tuples.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>(), t.at(3).get<int>()});
    return Relation(j.at("n").get<int>(), j.at("omega").get<int>(), std::move(tuples));
  });
}

bool is_exact_table(const Json& j) { return j.value("kind", std::string()) == "exact"; }

ExactTable exact_table_from_json(const Json& j) {
  return guarded("table", [&] {
    ExactTable t(j.at("n").get<int>(), j.at("omega").get<int>());
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != t.rows()) throw Error(ErrorKind::kInvalidParams, "table row count mismatch");
    for (int r = 0; r < t.rows(); ++r) {
      if (static_cast<int>(rows.at(static_cast<std::size_t>(r)).size()) != t.rows())
        throw Error(ErrorKind::kInvalidParams, "table column count mismatch");
      for (int c = 0; c < t.rows(); ++c)
        t.at(r, c) = parse_rational(rows.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c)).get<std::string>());
    }
    return t;
  });
}

RealTable real_table_from_json(const Json& j) {
  if (is_exact_table(j)) return to_real(exact_table_from_json(j));
  return guarded("table", [&] {
    RealTable t(j.at("n").get<int>(), j.at("omega").get<int>());
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != t.rows()) throw Error(ErrorKind::kInvalidParams, "table row count mismatch");
    for (int r = 0; r < t.rows(); ++r) {
      if (static_cast<int>(rows.at(static_cast<std::size_t>(r)).size()) != t.rows())
        throw Error(ErrorKind::kInvalidParams, "table column count mismatch");
      for (int c = 0; c < t.rows(); ++c)
        t.at(r, c) = rows.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c)).get<double>();
    }
    return t;
  });
}

Strategy strategy_from_json(const Json& j) {
  return guarded("strategy", [&] {
    Strategy s;
    s.n = j.at("n").get<int>();
    s.omega = j.at("omega").get<int>();
    s.messages = j.at("m").get<int>();
    s.encoder.assign(static_cast<std::size_t>(s.n * s.omega), -1);
    s.decoder.assign(static_cast<std::size_t>(s.messages * s.n), std::vector<Rational>(static_cast<std::size_t>(s.omega)));
    for (const auto& e : j.at("encoder"))
      s.encoder.at(static_cast<std::size_t>((e.at(0).get<int>() - 1) * s.omega + e.at(1).get<int>())) = e.at(2).get<int>();
    for (const auto& d : j.at("decoder")) {
      auto& dist = s.decoder.at(static_cast<std::size_t>(d.at(0).get<int>() * s.n + d.at(1).get<int>() - 1));
      if (d.at(2).is_number_integer()) {
        dist.at(static_cast<std::size_t>(d.at(2).get<int>())) = 1;
      } else {
        for (int b = 0; b < s.omega; ++b)
          dist.at(static_cast<std::size_t>(b)) = parse_rational(d.at(2).at(static_cast<std::size_t>(b)).get<std::string>());
      }
    }
    return s;
  });
}

OrthogonalRepresentation representation_from_json(const Json& j) {
  return guarded("representation", [&] {
    OrthogonalRepresentation rep;
    rep.d = j.at("d").get<int>();
    const auto& vectors = j.at("vectors");
    for (std::size_t v = 1; v <= vectors.size(); ++v) {
      const auto& amps = vectors.at(std::to_string(v));
      Eigen::VectorXcd x(rep.d);
      for (int k = 0; k < rep.d; ++k)
        x[k] = {amps.at(static_cast<std::size_t>(k)).at(0).get<double>(), amps.at(static_cast<std::size_t>(k)).at(1).get<double>()};
      rep.vectors.push_back(x);
    }
    return rep;
  });
}

namespace {

template <class T, class Fmt>
std::string csv(const ProbTable<T>& t, const char* kind, Fmt&& fmt) {
  std::ostringstream os;
  os << std::setprecision(17) << "# n=" << t.n() << ",omega=" << t.omega() << ",kind=" << kind << '\n';
  for (int r = 0; r < t.rows(); ++r) {
    for (int c = 0; c < t.rows(); ++c) os << (c ? "," : "") << fmt(t.at(r, c));
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string table_csv(const ExactTable& t) {
  return csv(t, "exact", [](const Rational& v) { return to_string(v); });
}

std::string table_csv(const RealTable& t) {
  return csv(t, "quantum", [](double v) { return v; });
}

}  // namespace cliquecomm
