// Command-line front end. Every artifact goes through a file (or stdout) so workflows can be
// scripted; JSON outputs carry schema_version and a provenance block.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cliquecomm/classical.hpp"
#include "cliquecomm/error.hpp"
#include "cliquecomm/graph.hpp"
#include "cliquecomm/io.hpp"
#include "cliquecomm/paley.hpp"
#include "cliquecomm/quantum.hpp"
#include "cliquecomm/recon.hpp"
#include "cliquecomm/relation.hpp"
#include "cliquecomm/rng.hpp"
#include "cliquecomm/version.hpp"

using namespace cliquecomm;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  double tol = 1e-9;
  // 0 keeps each operation's own default.
  int cap = 0;
  std::string out;
};

Globals globals;

int cap_or(int fallback) { return globals.cap > 0 ? globals.cap : fallback; }

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidParams, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kInvalidParams, path + ": " + e.what());
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidParams, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& text) {
  if (globals.out.empty() || globals.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(globals.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::kInvalidParams, "cannot write " + globals.out);
  f << text;
}

Json provenance(const std::string& command, Json params) {
  return Json{{"tool", "cliquecomm"}, {"version", kVersion}, {"command", command},
              {"seed", globals.seed},  {"tol", globals.tol},   {"params", std::move(params)}};
}

void emit(Json doc, const std::string& command, Json params) {
  doc["schema_version"] = kSchemaVersion;
  doc["provenance"] = provenance(command, std::move(params));
  write_text(doc.dump(2) + "\n");
}

std::string csv_header(const std::string& command, const Json& params) {
  return "# cliquecomm " + std::string(kVersion) + " " + command + " seed=" + std::to_string(globals.seed) +
         " params=" + params.dump() + "\n";
}

// A graph document may carry its own clique list; otherwise the maximum cliques are enumerated.
struct Instance {
  Graph g;
  CliqueSet cliques;
};

Instance load_instance(const std::string& path) {
  const Json j = read_json(path);
  Graph g = graph_from_json(j);
  CliqueSet c = j.contains("cliques") ? cliques_from_json(g, j) : enumerate_maximum_cliques(g);
  return {std::move(g), std::move(c)};
}

Json graph_doc(const Graph& g) {
  const CliqueSet c = enumerate_maximum_cliques(g);
  Json j = to_json(g);
  j["cliques"] = c.all();
  j["omega"] = c.omega();
  return j;
}

RealTable load_real_table(const std::string& path) { return real_table_from_json(read_json(path)); }

RunLog parse_runlog(const std::string& text) {
  RunLog log;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != "round,x,a,y,b") throw Error(ErrorKind::kInvalidParams, "run log needs header round,x,a,y,b");
      header = true;
      continue;
    }
    std::istringstream fields(line);
    std::string cell;
    std::vector<int> v;
    while (std::getline(fields, cell, ',')) {
      try {
        v.push_back(std::stoi(cell));
      } catch (const std::exception&) {
        throw Error(ErrorKind::kInvalidParams, "bad run log line: " + line);
      }
    }
    if (v.size() != 5) throw Error(ErrorKind::kInvalidParams, "bad run log line: " + line);
    log.rounds.push_back({v[1], v[2], v[3], v[4]});
  }
  if (!header) throw Error(ErrorKind::kInvalidParams, "empty run log");
  return log;
}

Json strategy_report(const Strategy& s, const Relation& rel) {
  const ExactTable t = s.table();
  const auto pay = payoff(t, rel, globals.tol);
  return Json{{"messages", s.messages},
              {"T0", check_T0(t, rel, globals.tol).ok},
              {"T1", check_T1(t, rel, globals.tol).ok},
              {"payoff", to_string(pay.value)},
              {"strategy", to_json(s)}};
}

Json real_table_report(const RealTable& t, const Relation& rel) {
  const auto pay = payoff(t, rel, globals.tol);
  return Json{{"T0", check_T0(t, rel, globals.tol).ok}, {"T1", check_T1(t, rel, globals.tol).ok},
              {"T2", check_T2(t, rel, globals.tol)},      {"payoff", pay.value},
              {"eta", pay.eta},                           {"table", to_json(t)}};
}

void write_aux(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::kInvalidParams, "cannot write " + path);
  f << j.dump(2) << "\n";
}

std::vector<double> parse_doubles(const std::string& list) {
  std::vector<double> out;
  std::istringstream in(list);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    try {
      out.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw Error(ErrorKind::kInvalidParams, "bad number: " + cell);
    }
  }
  return out;
}

CLI::App* sub(CLI::App& parent, const char* name, const char* help) {
  CLI::App* s = parent.add_subcommand(name, help);
  s->fallthrough();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique-relation communication: graphs, relations, classical and quantum strategies"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", globals.seed, "Random seed")->capture_default_str();
  app.add_option("--tol", globals.tol, "Numerical tolerance")->capture_default_str();
  app.add_option("--cap", globals.cap, "Override the search cap of the command (0 keeps its default)")
      ->capture_default_str();
  app.add_option("-o,--out", globals.out, "Output path (stdout when omitted)");

  // graph
  CLI::App* graph = sub(app, "graph", "Generate graphs and check conditions");
  graph->require_subcommand(1);
  std::string family;
  int gen_n = 2, gen_omega = 2, gen_r = 1, gen_q = 5;
  CLI::App* graph_gen = sub(*graph, "gen", "Generate a family member");
  graph_gen->add_option("--family", family, "disconnected | nncc | paley")
      ->required()
      ->check(CLI::IsMember({"disconnected", "nncc", "paley"}));
  graph_gen->add_option("--n", gen_n, "Number of cliques")->capture_default_str();
  graph_gen->add_option("--omega", gen_omega, "Clique size")->capture_default_str();
  graph_gen->add_option("--r", gen_r, "Overlap between consecutive cliques")->capture_default_str();
  graph_gen->add_option("--q", gen_q, "Prime q = 1 mod 4")->capture_default_str();
  std::string in_path;
  CLI::App* graph_check = sub(*graph, "check", "Report G0, G1 and G2");
  graph_check->add_option("--in", in_path, "Graph JSON")->required();

  // relation
  CLI::App* relation = sub(app, "relation", "Build or invert the clique relation");
  relation->require_subcommand(1);
  CLI::App* rel_build = sub(*relation, "build", "Relation of a graph");
  rel_build->add_option("--graph,--in", in_path, "Graph JSON")->required();
  CLI::App* rel_infer = sub(*relation, "infer", "Graph from a relation");
  rel_infer->add_option("--in", in_path, "Relation JSON")->required();

  // complexity
  CLI::App* complexity = sub(app, "complexity", "Classical message counts and public-coin mixtures");
  complexity->require_subcommand(1);
  std::string table_out;
  int lb_m = 0, oa_k = 2;
  CLI::App* cx_ccr = sub(*complexity, "ccr", "Deterministic omega-message strategy");
  CLI::App* cx_sccr = sub(*complexity, "sccr", "Vertex-message strategy with uniform decoder");
  CLI::App* cx_summary = sub(*complexity, "summary", "Both message counts");
  CLI::App* cx_lb = sub(*complexity, "lowerbound", "Exhaustive check that m messages cannot meet T0 and T1");
  CLI::App* cx_enum = sub(*complexity, "enumerate", "All deterministic omega-message T0 strategies");
  CLI::App* cx_t1 = sub(*complexity, "mixture-t1", "Uniform public-coin mixture meeting T1");
  CLI::App* cx_t2 = sub(*complexity, "mixture-t2", "Smallest public-coin mixture attaining 1/eta");
  CLI::App* cx_oa = sub(*complexity, "oa", "Smallest orthogonal array with k binary columns");
  for (CLI::App* s : {cx_ccr, cx_sccr, cx_summary, cx_lb, cx_enum, cx_t1, cx_t2})
    s->add_option("--graph,--in", in_path, "Graph JSON")->required();
  for (CLI::App* s : {cx_ccr, cx_sccr, cx_t1, cx_t2}) s->add_option("--table-out", table_out, "Write the table JSON here");
  cx_lb->add_option("--m", lb_m, "Message count")->required();
  cx_oa->add_option("--k", oa_k, "Number of columns")->required();

  // quantum
  CLI::App* quantum = sub(app, "quantum", "Quantum strategies");
  quantum->require_subcommand(1);
  std::string rep_path, policy = "uniform";
  int dim = 0, restarts = 32, q = 13, rsp_n = 4;
  bool symmetric = false;
  std::string angles;
  CLI::App* q_construct = sub(*quantum, "construct", "Faithful orthogonal representation");
  q_construct->add_option("--graph,--in", in_path, "Graph JSON")->required();
  q_construct->add_option("--d", dim, "Dimension (0 means omega)")->capture_default_str();
  CLI::App* q_table = sub(*quantum, "table", "Born-rule table of a representation");
  q_table->add_option("--graph,--in", in_path, "Graph JSON")->required();
  q_table->add_option("--rep", rep_path, "Representation JSON (constructed when omitted)");
  q_table->add_option("--d", dim, "Dimension when constructing")->capture_default_str();
  q_table->add_option("--policy", policy, "uniform | unassigned")
      ->check(CLI::IsMember({"uniform", "unassigned"}))
      ->capture_default_str();
  q_table->add_option("--table-out", table_out, "Write the table JSON here");
  CLI::App* q_opt = sub(*quantum, "optimize", "Maximise the payoff over representations");
  q_opt->add_option("--graph,--in", in_path, "Graph JSON")->required();
  q_opt->add_option("--d", dim, "Dimension")->required();
  q_opt->add_option("--restarts", restarts, "Random restarts")->capture_default_str();
  CLI::App* q_paley = sub(*quantum, "paley", "Optimal Paley representation");
  q_paley->add_option("--q", q, "Prime q = 1 mod 4")->capture_default_str();
  q_paley->add_option("--table-out", table_out, "Write the table JSON here");
  CLI::App* q_mub = sub(*quantum, "mub", "Mutual unbiasedness of bases");
  q_mub->add_option("--in", in_path, "Bases JSON {d, bases: [[[re, im] per entry] per column]} (qubit Z/X/Y when omitted)");
  CLI::App* q_rsp = sub(*quantum, "rsp", "Entanglement-assisted equatorial strategy");
  q_rsp->add_option("--n", rsp_n, "Number of bases")->capture_default_str();
  q_rsp->add_flag("--symmetric", symmetric, "Azimuths spaced by pi/n");
  q_rsp->add_option("--angles", angles, "Comma-separated Bloch azimuths");
  q_rsp->add_option("--table-out", table_out, "Write the table JSON here");

  // simulate
  CLI::App* simulate = sub(app, "simulate", "Rounds, reconstruction and success probability");
  simulate->require_subcommand(1);
  std::string table_path, log_path, rel_path, k_list = "50,200,1000";
  int rounds = 100, trials = 10000;
  CLI::App* sim_run = sub(*simulate, "run", "Simulate rounds and write the run log CSV");
  sim_run->add_option("--table", table_path, "Table JSON")->required();
  sim_run->add_option("--k", rounds, "Rounds")->capture_default_str();
  CLI::App* sim_success = sub(*simulate, "success", "Exact and Monte-Carlo success probability CSV");
  sim_success->add_option("--table", table_path, "Table JSON")->required();
  sim_success->add_option("--graph", in_path, "Graph JSON")->required();
  sim_success->add_option("--k", k_list, "Comma-separated round counts")->capture_default_str();
  sim_success->add_option("--trials", trials, "Monte-Carlo trials")->capture_default_str();
  CLI::App* sim_recon = sub(*simulate, "reconstruct", "Rebuild the relation and graph from a run log");
  sim_recon->add_option("--log", log_path, "Run log CSV")->required();
  sim_recon->add_option("--n", gen_n, "Number of cliques")->required();
  sim_recon->add_option("--omega", gen_omega, "Clique size")->required();
  sim_recon->add_option("--truth", rel_path, "Relation JSON to compare against");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*graph_gen) {
      Graph g = family == "disconnected" ? gen_disconnected(gen_n, gen_omega)
                : family == "nncc"       ? gen_nncc(gen_n, gen_omega, gen_r)
                                         : gen_paley(gen_q);
      Json params{{"family", family}};
      if (family == "paley") {
        params["q"] = gen_q;
      } else {
        params["n"] = gen_n;
        params["omega"] = gen_omega;
        if (family == "nncc") params["r"] = gen_r;
      }
      emit(graph_doc(g), "graph gen", params);
    } else if (*graph_check) {
      const Instance in = load_instance(in_path);
      const ConditionReport rep = check_conditions(in.g, in.cliques, cap_or(16));
      Json j{{"G0", rep.g0},
             {"G1", rep.g1},
             {"G2_k", rep.g2_k ? Json(*rep.g2_k) : Json(nullptr)},
             {"G2", rep.g2 ? Json(*rep.g2) : Json(nullptr)},
             {"order", in.g.order()},
             {"omega", in.cliques.omega()},
             {"cliques", in.cliques.count()}};
      emit(j, "graph check", {{"in", in_path}});
    } else if (*rel_build) {
      const Instance in = load_instance(in_path);
      const Relation rel = build_relation(in.g, in.cliques);
      Json j = to_json(rel);
      j["eta"] = rel.eta();
      emit(j, "relation build", {{"graph", in_path}});
    } else if (*rel_infer) {
      const Relation rel = relation_from_json(read_json(in_path));
      const InferredGraph inf = infer_graph(rel, rel.n(), rel.omega());
      Json j = to_json(inf.graph);
      j["vertex_of_row"] = inf.vertex_of_row;
      emit(j, "relation infer", {{"in", in_path}});
    } else if (*cx_ccr || *cx_sccr || *cx_summary) {
      const Instance in = load_instance(in_path);
      const Relation rel = build_relation(in.g, in.cliques);
      if (*cx_summary) {
        const Strategy c = ccr_protocol(in.g, in.cliques, rel);
        const Strategy s = sccr_protocol(in.g, in.cliques, rel);
        emit(Json{{"ccr_messages", c.messages}, {"sccr_messages", s.messages}}, "complexity summary",
             {{"graph", in_path}});
      } else {
        const bool ccr = static_cast<bool>(*cx_ccr);
        const Strategy s = ccr ? ccr_protocol(in.g, in.cliques, rel) : sccr_protocol(in.g, in.cliques, rel);
        Json j = strategy_report(s, rel);
        j[ccr ? "ccr_messages" : "sccr_messages"] = s.messages;
        if (ccr) j["permutations"] = permutations_of(s);
        write_aux(table_out, to_json(s.table()));
        emit(j, ccr ? "complexity ccr" : "complexity sccr", {{"graph", in_path}});
      }
    } else if (*cx_lb) {
      const Instance in = load_instance(in_path);
      const Relation rel = build_relation(in.g, in.cliques);
      const bool infeasible = verify_classical_lower_bound(in.g, rel, lb_m, cap_or(12));
      emit(Json{{"m", lb_m}, {"infeasible", infeasible}}, "complexity lowerbound",
           {{"graph", in_path}, {"m", lb_m}, {"cap", cap_or(12)}});
    } else if (*cx_enum) {
      const Instance in = load_instance(in_path);
      const Relation rel = build_relation(in.g, in.cliques);
      const auto all = enumerate_T0_strategies(in.g, rel, in.cliques.omega(), cap_or(1 << 16));
      Json list = Json::array();
      for (const Strategy& s : all) list.push_back(Json{{"permutations", permutations_of(s)}, {"table", to_json(s.table())}});
      emit(Json{{"count", all.size()}, {"strategies", list}}, "complexity enumerate",
           {{"graph", in_path}, {"cap", cap_or(1 << 16)}});
    } else if (*cx_t1 || *cx_t2) {
      const Instance in = load_instance(in_path);
      const Relation rel = build_relation(in.g, in.cliques);
      Json j;
      PublicCoinMixture mix;
      if (*cx_t1) {
        mix = mixture_for_T1(in.g, rel);
      } else {
        const T2Mixture t2 = mixture_for_T2(in.g, rel, cap_or(16));
        mix = t2.mixture;
        j["bit_rows"] = t2.bit_rows;
      }
      const ExactTable t = mix.table();
      j["mixture"] = to_json(mix);
      j["strategies"] = mix.members.size();
      j["T0"] = check_T0(t, rel, globals.tol).ok;
      j["T1"] = check_T1(t, rel, globals.tol).ok;
      j["T2"] = check_T2(t, rel, globals.tol);
      j["payoff"] = to_string(payoff(t, rel, globals.tol).value);
      write_aux(table_out, to_json(t));
      emit(j, *cx_t1 ? "complexity mixture-t1" : "complexity mixture-t2", {{"graph", in_path}});
    } else if (*cx_oa) {
      const int rows = min_oa_rows(oa_k, cap_or(8));
      emit(Json{{"k", oa_k}, {"rows", rows}, {"array", rows >= 4 ? find_orthogonal_array(rows, oa_k) : BinaryArray{}}},
           "complexity oa", {{"k", oa_k}});
    } else if (*q_construct) {
      const Instance in = load_instance(in_path);
      const auto rep = construct_for(in.g, in.cliques, dim, globals.seed);
      const ForReport check = verify_for(rep, in.g, globals.tol);
      Json j = to_json(rep);
      j["faithful"] = check.ok;
      j["min_nonadjacent_overlap"] = check.min_nonadjacent_overlap;
      emit(j, "quantum construct", {{"graph", in_path}, {"d", dim}});
    } else if (*q_table) {
      const Instance in = load_instance(in_path);
      const Relation rel = build_relation(in.g, in.cliques);
      const auto rep = rep_path.empty() ? construct_for(in.g, in.cliques, dim, globals.seed)
                                        : representation_from_json(read_json(rep_path));
      const ResidualPolicy pol = policy == "uniform" ? ResidualPolicy::kUniformValid : ResidualPolicy::kUnassigned;
      const RealTable t = quantum_table(rep, in.g, in.cliques, rel, pol, globals.tol);
      Json j = real_table_report(t, rel);
      j["d"] = rep.d;
      write_aux(table_out, to_json(t));
      emit(j, "quantum table", {{"graph", in_path}, {"rep", rep_path}, {"policy", policy}});
    } else if (*q_opt) {
      const Instance in = load_instance(in_path);
      OptimizeOptions opts;
      opts.restarts = restarts;
      opts.seed = globals.seed;
      const OptimizeResult res = optimize_payoff(in.g, in.cliques, dim, opts);
      emit(Json{{"payoff", res.payoff},
                {"restart", res.restart},
                {"lower_bound", res.lower_bound},
                {"restart_payoffs", res.restart_payoffs},
                {"representation", to_json(res.rep)}},
           "quantum optimize", {{"graph", in_path}, {"d", dim}, {"restarts", restarts}});
    } else if (*q_paley) {
      const OptimalGram gram = gram_opt(q, globals.tol);
      const OrthogonalRepresentation rep = extract_vectors(gram);
      const Graph g = gen_paley(q);
      const CliqueSet c = enumerate_maximum_cliques(g);
      const Relation rel = build_relation(g, c);
      const RealTable t = quantum_table(rep, g, c, rel, ResidualPolicy::kUnassigned, 1e-8);
      const ForReport check = verify_for(rep, g, 1e-8);
      Json j{{"q", q},
             {"rank", gram.rank},
             {"theta", theta_paley(q)},
             {"entry_sum", gram.entry_sum},
             {"sum_ok", gram.sum_ok},
             {"spectrum_ok", gram.spectrum.ok},
             {"spectrum_max_deviation", gram.spectrum.max_deviation},
             {"k_squared", verify_k_squared(q)},
             {"adjacency_from_k", verify_adjacency_from_k(q)},
             {"adjacency_square", verify_adjacency_square(q)},
             {"fourier_eigenvectors", fourier_eigenvectors(q, 1e-8).eigenvectors},
             {"faithful", check.ok},
             {"payoff", payoff(t, rel, 1e-8).value},
             {"payoff_closed_form", paley_payoff(q)}};
      write_aux(table_out, to_json(t));
      emit(j, "quantum paley", {{"q", q}});
    } else if (*q_mub) {
      std::vector<Eigen::MatrixXcd> bases;
      int d = 2;
      if (in_path.empty()) {
        bases = qubit_mubs();
      } else {
        const Json j = read_json(in_path);
        try {
          d = j.at("d").get<int>();
          for (const auto& b : j.at("bases")) {
            Eigen::MatrixXcd m(d, d);
            for (int col = 0; col < d; ++col)
              for (int row = 0; row < d; ++row) {
                const auto& z = b.at(static_cast<std::size_t>(col)).at(static_cast<std::size_t>(row));
                m(row, col) = {z.at(0).get<double>(), z.at(1).get<double>()};
              }
            bases.push_back(m);
          }
        } catch (const Json::exception& e) {
          throw Error(ErrorKind::kInvalidParams, std::string("malformed bases JSON: ") + e.what());
        }
      }
      emit(Json{{"d", d}, {"bases", bases.size()}, {"mub", check_mub(bases, d, globals.tol)}}, "quantum mub",
           {{"in", in_path}});
    } else if (*q_rsp) {
      std::vector<double> phi;
      if (!angles.empty()) {
        phi = parse_doubles(angles);
      } else if (symmetric) {
        phi = symmetric_rsp_angles(rsp_n);
      } else {
        throw Error(ErrorKind::kInvalidParams, "rsp needs --symmetric or --angles");
      }
      const RspResult res = rsp_payoff(phi);
      write_aux(table_out, to_json(rsp_table(phi)));
      emit(Json{{"n", phi.size()}, {"angles", phi}, {"payoff", res.payoff}, {"duplicate", res.duplicate}},
           "quantum rsp", {{"n", rsp_n}, {"symmetric", symmetric}, {"angles", angles}});
    } else if (*sim_run) {
      const RealTable t = load_real_table(table_path);
      const RunLog log = simulate_rounds(t, rounds, globals.seed, globals.tol);
      const Json params{{"table", table_path}, {"k", rounds}, {"generator", log.generator}};
      write_text(csv_header("simulate run", params) + runlog_csv(log));
    } else if (*sim_success) {
      const RealTable t = load_real_table(table_path);
      const Instance in = load_instance(in_path);
      const Relation rel = build_relation(in.g, in.cliques);
      std::vector<int> ks;
      for (double k : parse_doubles(k_list)) ks.push_back(static_cast<int>(k));
      const auto rows = payoff_vs_rounds_report(t, rel, ks, trials, globals.seed);
      const Json params{{"table", table_path}, {"graph", in_path}, {"k", k_list}, {"trials", trials}};
      write_text(csv_header("simulate success", params) + report_csv(rows));
    } else if (*sim_recon) {
      const RunLog log = parse_runlog(read_text(log_path));
      std::optional<Relation> truth;
      if (!rel_path.empty()) truth = relation_from_json(read_json(rel_path));
      const ReconstructionResult res = reconstruct(log, gen_n, gen_omega, truth ? &*truth : nullptr);
      Json j{{"rounds", log.rounds.size()}, {"inputs_covered", res.inputs_covered}, {"estimate", to_json(res.estimate)}};
      j["success"] = res.success ? Json(*res.success) : Json(nullptr);
      if (res.graph) {
        j["graph"] = to_json(res.graph->graph);
        j["vertex_of_row"] = res.graph->vertex_of_row;
      } else {
        j["graph"] = nullptr;
      }
      emit(j, "simulate reconstruct", {{"log", log_path}, {"n", gen_n}, {"omega", gen_omega}, {"truth", rel_path}});
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
