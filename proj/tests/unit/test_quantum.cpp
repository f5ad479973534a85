#include <doctest.h>

#include <cmath>

#include "cliquecomm/error.hpp"
#include "cliquecomm/quantum.hpp"
#include "oracles.hpp"

using namespace cliquecomm;

namespace {

Eigen::VectorXcd qubit(std::complex<double> a, std::complex<double> b) {
  Eigen::VectorXcd v(2);
  v << a, b;
  return v;
}

// Z basis on the first edge, X basis on the second.
OrthogonalRepresentation zx_rep() {
  const double s = 1.0 / std::sqrt(2.0);
  return {2, {qubit(1, 0), qubit(0, 1), qubit(s, s), qubit(s, -s)}};
}

}  // namespace

TEST_SUITE("quantum") {

TEST_CASE("verify_for on a hand-built qubit representation") {
  const Graph g = gen_disconnected(2, 2);
  const auto rep = verify_for(zx_rep(), g);
  CHECK(rep.ok);
  CHECK(rep.min_nonadjacent_overlap == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(min_nonadjacent_overlap(zx_rep(), g) == doctest::Approx(0.5));

  // Same basis twice: the rays repeat, and 1 is orthogonal to 4.
  OrthogonalRepresentation same{2, {qubit(1, 0), qubit(0, 1), qubit(1, 0), qubit(0, 1)}};
  const auto bad = verify_for(same, g);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.faithful);
  CHECK_FALSE(bad.distinct);
  CHECK_FALSE(bad.violations.empty());

  OrthogonalRepresentation skew = zx_rep();
  skew.vectors[1] = qubit(0.6, 0.8);
  CHECK_FALSE(verify_for(skew, g).orthogonal_on_edges);
  skew = zx_rep();
  skew.vectors[0] *= 2.0;
  CHECK_FALSE(verify_for(skew, g).unit_norm);
}

TEST_CASE("Z and X on two edges reach the bound") {
  const Graph g = gen_disconnected(2, 2);
  const CliqueSet c = enumerate_maximum_cliques(g);
  const Relation rel = build_relation(g, c);
  const RealTable t = quantum_table(zx_rep(), g, c, rel);
  CHECK(t.normalized());
  CHECK(check_T0(t, rel).ok);
  CHECK(check_T1(t, rel).ok);
  CHECK(check_T2(t, rel));
  CHECK(mub_certificate(t, rel, g, c));
}

TEST_CASE("T1 holds exactly when the representation is faithful") {
  const Graph g = gen_disconnected(2, 2);
  const CliqueSet c = enumerate_maximum_cliques(g);
  const Relation rel = build_relation(g, c);
  OrthogonalRepresentation same{2, {qubit(1, 0), qubit(0, 1), qubit(1, 0), qubit(0, 1)}};
  const RealTable t = quantum_table(same, g, c, rel);
  CHECK(check_T0(t, rel).ok);
  CHECK_FALSE(check_T1(t, rel).ok);

  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rep = construct_for(g, c, 2, rng.next());
    CHECK(verify_for(rep, g).ok == check_T1(quantum_table(rep, g, c, rel), rel).ok);
  }
}

TEST_CASE("quantum_table rejects non-measurements") {
  const Graph g = gen_disconnected(2, 2);
  const CliqueSet c = enumerate_maximum_cliques(g);
  const Relation rel = build_relation(g, c);
  OrthogonalRepresentation bad = zx_rep();
  bad.vectors[1] = bad.vectors[0];
  try {
    quantum_table(bad, g, c, rel);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInconsistent);
  }
}

TEST_CASE("construction on disjoint edges stays in dimension two") {
  for (int n = 2; n <= 6; ++n) {
    const Graph g = gen_disconnected(n, 2);
    const CliqueSet c = enumerate_maximum_cliques(g);
    const Relation rel = build_relation(g, c);
    const auto rep = construct_for(g, c);
    CHECK(rep.d == 2);
    CHECK(verify_for(rep, g).ok);
    const RealTable t = quantum_table(rep, g, c, rel);
    CHECK(check_T0(t, rel).ok);
    CHECK(check_T1(t, rel).ok);
  }
}

TEST_CASE("construction on overlapping cliques and Paley(5)") {
  const Graph fig = oracle::example_graph();
  const CliqueSet fc(fig, oracle::example_cliques());
  const auto rep = construct_for(fig, fc);
  CHECK(rep.d == 3);
  CHECK(verify_for(rep, fig).ok);

  // The five-cycle has no faithful representation in the plane but has one in C^3.
  const Graph c5 = gen_paley(5);
  const CliqueSet cc = enumerate_maximum_cliques(c5);
  CHECK(verify_for(construct_for(c5, cc, 3), c5).ok);
  CHECK_THROWS_AS(construct_for(c5, cc, 1), Error);
}

TEST_CASE("construction is reproducible") {
  const Graph g = gen_nncc(3, 3, 1);
  const CliqueSet c = enumerate_maximum_cliques(g);
  const auto a = construct_for(g, c, 0, 5);
  const auto b = construct_for(g, c, 0, 5);
  for (int v = 1; v <= g.order(); ++v) CHECK((a.vector(v) - b.vector(v)).norm() == 0.0);
}

TEST_CASE("optimiser reaches one half on three disjoint edges") {
  const Graph g = gen_disconnected(3, 2);
  const CliqueSet c = enumerate_maximum_cliques(g);
  OptimizeOptions opt;
  opt.restarts = 8;
  const auto res = optimize_payoff(g, c, 2, opt);
  CHECK(res.payoff == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(res.lower_bound);
  CHECK(verify_for(res.rep, g).ok);
  CHECK(std::abs(min_nonadjacent_overlap(res.rep, g) - res.payoff) < 1e-12);
  CHECK(res.restart_payoffs.size() == 8);

  const auto again = optimize_payoff(g, c, 2, opt);
  CHECK(again.payoff == res.payoff);
  CHECK(again.restart == res.restart);
}

TEST_CASE("MUB checks") {
  CHECK(check_mub(qubit_mubs(), 2));
  Eigen::MatrixXcd tilted(2, 2);
  const double th = 0.3;
  tilted << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
  CHECK_FALSE(check_mub({qubit_mubs()[0], tilted}, 2));
  Eigen::MatrixXcd notunitary = Eigen::MatrixXcd::Ones(2, 2);
  CHECK_THROWS_AS(check_mub({notunitary}, 2), Error);

  const Graph fig = oracle::example_graph();
  const CliqueSet fc(fig, oracle::example_cliques());
  CHECK_THROWS_AS(mub_certificate(RealTable(2, 3), build_relation(fig, fc), fig, fc), Error);
}

TEST_CASE("remote state preparation payoff") {
  const double expected = std::pow(std::sin(M_PI / 8.0), 2);
  CHECK(std::abs(rsp_payoff(symmetric_rsp_angles(4)).payoff - expected) < 1e-12);
  CHECK(rsp_payoff({0.0, M_PI / 2.0}).payoff == doctest::Approx(0.5));
  const auto dup = rsp_payoff({0.3, 0.3});
  CHECK(dup.duplicate);
  CHECK(dup.payoff == 0.0);
  // Antipodal azimuths describe the same basis.
  CHECK(rsp_payoff({0.0, M_PI}).duplicate);
}

TEST_CASE("simulated protocol matches the closed form") {
  for (int n = 2; n <= 5; ++n) {
    const auto angles = symmetric_rsp_angles(n);
    const RealTable t = rsp_table(angles);
    const Graph g = gen_disconnected(n, 2);
    const Relation rel = build_relation(g, enumerate_maximum_cliques(g));
    CHECK(t.normalized());
    CHECK(check_T0(t, rel).ok);
    CHECK(check_T1(t, rel).ok);
    CHECK(std::abs(payoff(t, rel).value - rsp_payoff(angles).payoff) < 1e-12);
    // Overlaps of explicit Bloch-equator states.
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y) {
        const double d = angles[static_cast<std::size_t>(x - 1)] - angles[static_cast<std::size_t>(y - 1)];
        const auto sx = qubit(1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), angles[static_cast<std::size_t>(x - 1)]));
        const auto sy = qubit(1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), angles[static_cast<std::size_t>(y - 1)]));
        CHECK(std::abs(t(x, 0, y, 0) - std::norm(sy.dot(sx))) < 1e-12);
        CHECK(std::abs(t(x, 0, y, 0) - std::pow(std::cos(d / 2.0), 2)) < 1e-12);
      }
  }
}

}  // TEST_SUITE
