#include <doctest.h>

#include <cmath>

#include "cliquecomm/classical.hpp"
#include "cliquecomm/error.hpp"
#include "cliquecomm/recon.hpp"
#include "oracles.hpp"

using namespace cliquecomm;

TEST_SUITE("recon") {

TEST_CASE("inclusion-exclusion matches sequence enumeration") {
  const std::vector<std::vector<double>> cases{{0.5}, {0.2, 0.3}, {0.1, 0.25, 0.4}, {0.3, 0.3, 0.2, 0.2}};
  for (const auto& p : cases)
    for (int k = 0; k <= 7; ++k) {
      CAPTURE(k);
      CHECK(coverage_probability(p, k) == doctest::Approx(oracle::coverage_by_sequences(p, k)).epsilon(1e-12));
    }
  // Two events in closed form.
  const double p1 = 0.2, p2 = 0.3;
  for (int k : {10, 50}) {
    const double closed = 1 - std::pow(1 - p1, k) - std::pow(1 - p2, k) + std::pow(1 - p1 - p2, k);
    CHECK(coverage_probability({p1, p2}, k) == doctest::Approx(closed).epsilon(1e-12));
  }
  CHECK(coverage_probability({}, 0) == 1.0);
  CHECK_THROWS_AS(coverage_probability(std::vector<double>(21, 0.01), 5), Error);
}

TEST_CASE("zero rounds") {
  const Graph g = oracle::example_graph();
  const CliqueSet c(g, oracle::example_cliques());
  const Relation rel = build_relation(g, c);
  const RealTable t = to_real(sccr_protocol(g, c, rel).table());
  const RunLog log = simulate_rounds(t, 0, 1);
  CHECK(log.rounds.empty());
  CHECK(runlog_csv(log) == "round,x,a,y,b\n");
  CHECK(success_prob_exact(t, rel, 0) == 0.0);
  const auto res = reconstruct(log, 2, 3, &rel);
  CHECK_FALSE(res.inputs_covered);
  CHECK_FALSE(res.success.value());
  CHECK_THROWS_AS(simulate_rounds(t, -1, 1), Error);
}

TEST_CASE("simulation is reproducible and respects the table") {
  const Graph g = oracle::example_graph();
  const CliqueSet c(g, oracle::example_cliques());
  const Relation rel = build_relation(g, c);
  const RealTable t = to_real(sccr_protocol(g, c, rel).table());
  const RunLog a = simulate_rounds(t, 500, 42);
  const RunLog b = simulate_rounds(t, 500, 42);
  CHECK(a.rounds == b.rounds);
  CHECK(a.generator == "mt19937_64");
  for (const auto& r : a.rounds) CHECK(rel.contains(r));
  CHECK(simulate_rounds(t, 500, 43).rounds != a.rounds);

  RealTable broken = t;
  broken.at(0, 0) = 0.5;
  CHECK_THROWS_AS(simulate_rounds(broken, 10, 1), Error);
}

TEST_CASE("deterministic strategies never reconstruct") {
  const Graph g = oracle::example_graph();
  const CliqueSet c(g, oracle::example_cliques());
  const Relation rel = build_relation(g, c);
  const RealTable t = to_real(ccr_protocol(g, c, rel).table());
  for (int k : {1, 50, 1000, 100000}) CHECK(success_prob_exact(t, rel, k) == 0.0);
  CHECK(success_prob_mc(t, rel, 1000, 200, 3).mean == 0.0);
  const auto res = reconstruct(simulate_rounds(t, 5000, 9), 2, 3, &rel);
  CHECK(res.inputs_covered);
  CHECK_FALSE(res.success.value());
  CHECK(res.estimate.size() == 12);
}

TEST_CASE("Monte Carlo agrees with the exact value") {
  const Graph g = oracle::example_graph();
  const CliqueSet c(g, oracle::example_cliques());
  const Relation rel = build_relation(g, c);
  const RealTable t = to_real(mixture_for_T1(g, rel).table());
  for (int k : {50, 100, 200}) {
    const double exact = success_prob_exact(t, rel, k);
    const auto mc = success_prob_mc(t, rel, k, 4000, 7);
    CAPTURE(k);
    CHECK(std::abs(mc.mean - exact) <= 3.0 * std::max(mc.std_error, 1.0 / 4000));
  }
  const auto rows = payoff_vs_rounds_report(t, rel, {10, 100}, 100, 1);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].k == 10);
  CHECK(rows[1].exact > rows[0].exact);
  const std::string csv = report_csv(rows);
  CHECK(csv.rfind("k,P_exact,P_mc,stderr\n", 0) == 0);
}

TEST_CASE("success probability grows with the number of rounds") {
  const Graph g = gen_disconnected(2, 2);
  const CliqueSet c = enumerate_maximum_cliques(g);
  const Relation rel = build_relation(g, c);
  const RealTable t = to_real(sccr_protocol(g, c, rel).table());
  double prev = -1.0;
  for (int k = 0; k <= 200; k += 20) {
    const double p = success_prob_exact(t, rel, k);
    CHECK(p >= prev);
    prev = p;
  }
  CHECK(prev > 0.99);
}

TEST_CASE("reconstruction round-trips the families") {
  std::vector<Graph> graphs;
  for (int n = 1; n <= 4; ++n)
    for (int omega = 2; omega <= 3; ++omega) graphs.push_back(gen_disconnected(n, omega));
  for (int n = 2; n <= 4; ++n) graphs.push_back(gen_nncc(n, 3, 1));
  graphs.push_back(gen_paley(5));
  std::uint64_t seed = 100;
  for (const Graph& g : graphs) {
    const CliqueSet c = enumerate_maximum_cliques(g);
    const Relation rel = build_relation(g, c);
    const RealTable t = to_real(sccr_protocol(g, c, rel).table());
    const auto res = reconstruct(simulate_rounds(t, 40000, ++seed), c.count(), c.omega(), &rel);
    CAPTURE(g.order());
    REQUIRE(res.success.value());
    REQUIRE(res.graph.has_value());
    CHECK(res.graph->graph.order() == g.order());
    CHECK(res.graph->graph.edge_count() == g.edge_count());
    for (int r1 = 0; r1 < rel.rows(); ++r1)
      for (int r2 = 0; r2 < rel.rows(); ++r2) {
        const int u = c.vertex(r1 / c.omega() + 1, r1 % c.omega());
        const int v = c.vertex(r2 / c.omega() + 1, r2 % c.omega());
        const int iu = res.graph->vertex_of_row[static_cast<std::size_t>(r1)];
        const int iv = res.graph->vertex_of_row[static_cast<std::size_t>(r2)];
        CHECK((u == v) == (iu == iv));
        if (u != v) CHECK(g.adjacent(u, v) == res.graph->graph.adjacent(iu, iv));
      }
  }
}

TEST_CASE("CSV layout") {
  RunLog log;
  log.rounds = {{1, 0, 2, 1}, {2, 2, 1, 0}};
  CHECK(runlog_csv(log) == "round,x,a,y,b\n1,1,0,2,1\n2,2,2,1,0\n");
}

}  // TEST_SUITE
