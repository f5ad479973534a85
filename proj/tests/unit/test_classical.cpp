#include <doctest.h>

#include "cliquecomm/classical.hpp"
#include "cliquecomm/error.hpp"
#include "oracles.hpp"

using namespace cliquecomm;

namespace {

struct Instance {
  Graph g;
  CliqueSet c;
  Relation rel;
};

Instance make(Graph g) {
  CliqueSet c = enumerate_maximum_cliques(g);
  Relation rel = build_relation(g, c);
  return {std::move(g), std::move(c), std::move(rel)};
}

}  // namespace

TEST_SUITE("classical") {

TEST_CASE("permutation strategies round-trip") {
  const Strategy s = strategy_from_permutations({{0, 1, 2}, {2, 1, 0}});
  CHECK(s.messages == 3);
  CHECK(s.deterministic());
  CHECK(permutations_of(s) == std::vector<std::vector<int>>{{0, 1, 2}, {2, 1, 0}});
  CHECK(s.table() == oracle::exact_from(oracle::reversed_table(), 2, 3));
  CHECK(strategy_from_permutations({{0, 1, 2}, {1, 2, 0}}).table() == oracle::exact_from(oracle::rotated_table(), 2, 3));
  CHECK_THROWS_AS(strategy_from_permutations({{0, 0, 2}}), Error);
}

TEST_CASE("CCR on the running example gives the reference partition") {
  const auto in = make(oracle::example_graph());
  const Strategy s = ccr_protocol(in.g, in.c, in.rel);
  CHECK(s.messages == 3);
  CHECK(check_T0(s.table(), in.rel).ok);
  CHECK(s.table() == oracle::exact_from(oracle::reversed_table(), 2, 3));
  const auto parts = s.partitions();
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == std::vector<CliqueLabel>{{1, 0}, {2, 2}});
  CHECK(parts[1] == std::vector<CliqueLabel>{{1, 1}, {2, 1}});
  CHECK(parts[2] == std::vector<CliqueLabel>{{1, 2}, {2, 0}});
}

TEST_CASE("CCR uses omega messages on every family member") {
  for (Graph g : {gen_disconnected(3, 2), gen_disconnected(2, 4), gen_nncc(3, 3, 1), gen_nncc(2, 5, 2)}) {
    const auto in = make(g);
    const Strategy s = ccr_protocol(in.g, in.c, in.rel);
    CHECK(s.messages == in.c.omega());
    CHECK(check_T0(s.table(), in.rel).ok);
  }
}

TEST_CASE("CCR fails on the five-cycle") {
  // Each of two messages would have to select an independent vertex cover, and odd cycles
  // have none.
  const auto in = make(gen_paley(5));
  try {
    ccr_protocol(in.g, in.c, in.rel);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSearchExhausted);
  }
  CHECK(oracle::count_t0_tables(in.rel) == 0);
}

TEST_CASE("T0 enumeration") {
  const auto in = make(oracle::example_graph());
  const auto all = enumerate_T0_strategies(in.g, in.rel, 3);
  REQUIRE(all.size() == 2);
  CHECK(all[0].table() == oracle::exact_from(oracle::rotated_table(), 2, 3));
  CHECK(all[1].table() == oracle::exact_from(oracle::reversed_table(), 2, 3));

  for (int n = 1; n <= 5; ++n) {
    const auto d = make(gen_disconnected(n, 2));
    CHECK(enumerate_T0_strategies(d.g, d.rel, 2).size() == static_cast<std::size_t>(1 << (n - 1)));
  }
  const auto tri = make(Graph(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(enumerate_T0_strategies(tri.g, tri.rel, 3).size() == 1);
  CHECK_THROWS_AS(enumerate_T0_strategies(in.g, in.rel, 4), Error);
  const auto big = make(gen_disconnected(5, 3));
  CHECK_THROWS_AS(enumerate_T0_strategies(big.g, big.rel, 3, 100), Error);
}

TEST_CASE("T0 enumeration agrees with brute force over permutation tuples") {
  for (Graph g : {gen_disconnected(3, 3), gen_nncc(3, 3, 1), gen_nncc(2, 4, 1), gen_paley(5), gen_disconnected(2, 4)}) {
    const auto in = make(g);
    CHECK(enumerate_T0_strategies(in.g, in.rel, in.c.omega()).size() ==
          static_cast<std::size_t>(oracle::count_t0_tables(in.rel)));
  }
}

TEST_CASE("S-CCR on the running example") {
  const auto in = make(oracle::example_graph());
  const Strategy s = sccr_protocol(in.g, in.c, in.rel);
  CHECK(s.messages == 5);
  const ExactTable t = s.table();
  CHECK(check_T0(t, in.rel).ok);
  CHECK(check_T1(t, in.rel).ok);
  CHECK(payoff(t, in.rel).value == Rational(1, 2));
  CHECK(check_T2(t, in.rel));
}

TEST_CASE("S-CCR needs G1") {
  const auto in = make(Graph(3, {{1, 2}, {2, 3}}));
  try {
    sccr_protocol(in.g, in.c, in.rel);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kConditionsFailed);
  }
}

TEST_CASE("S-CCR sends |V| messages on disjoint cliques") {
  for (int n = 2; n <= 6; ++n) {
    const auto in = make(gen_disconnected(n, 2));
    const Strategy s = sccr_protocol(in.g, in.c, in.rel);
    CHECK(s.messages == 2 * n);
    CHECK(check_T1(s.table(), in.rel).ok);
  }
}

TEST_CASE("lower bound on messages") {
  const auto fig = make(oracle::example_graph());
  CHECK(verify_classical_lower_bound(fig.g, fig.rel, 4));
  CHECK(verify_classical_lower_bound(fig.g, fig.rel, 3));
  const auto d22 = make(gen_disconnected(2, 2));
  CHECK(verify_classical_lower_bound(d22.g, d22.rel, 3));
  CHECK_THROWS_AS(verify_classical_lower_bound(d22.g, d22.rel, 4), Error);
  const auto big = make(gen_disconnected(7, 2));
  try {
    verify_classical_lower_bound(big.g, big.rel, 13);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCapExceeded);
  }
}

TEST_CASE("lower bound agrees with a search over unrestricted encoders") {
  for (Graph g : {gen_disconnected(2, 2), oracle::example_graph(), gen_paley(5)}) {
    const auto in = make(g);
    for (int m = 1; m < g.order(); ++m)
      CHECK(verify_classical_lower_bound(in.g, in.rel, m) != oracle::some_m_message_protocol(in.rel, m));
    // |V| messages always suffice once G0 and G1 hold.
    CHECK(oracle::some_m_message_protocol(in.rel, g.order()));
  }
}

TEST_CASE("|V| - 1 messages are never enough on G0 and G1 graphs up to seven vertices") {
  for (Graph g : {gen_disconnected(2, 2), gen_disconnected(3, 2), gen_disconnected(2, 3), gen_nncc(2, 3, 1),
                  gen_nncc(3, 3, 1), gen_paley(5)}) {
    const auto in = make(g);
    const auto cond = check_conditions(in.g, in.c);
    REQUIRE(cond.g0);
    REQUIRE(cond.g1);
    CHECK(verify_classical_lower_bound(in.g, in.rel, g.order() - 1));
  }
}

TEST_CASE("public-coin mixture for T1 on disjoint cliques") {
  for (int n = 2; n <= 6; ++n) {
    const auto in = make(gen_disconnected(n, 2));
    const auto mix = mixture_for_T1(in.g, in.rel);
    CHECK(mix.members.size() == static_cast<std::size_t>(n));
    const ExactTable t = mix.table();
    CHECK(t.normalized());
    CHECK(check_T0(t, in.rel).ok);
    CHECK(check_T1(t, in.rel).ok);
    CHECK(payoff(t, in.rel).value == Rational(1, n));
  }
  const auto fig = make(oracle::example_graph());
  CHECK(check_T2(mixture_for_T1(fig.g, fig.rel).table(), fig.rel));
}

TEST_CASE("public-coin mixture for T2") {
  const std::vector<std::size_t> expected{2, 4, 4};
  for (int n = 2; n <= 4; ++n) {
    const auto in = make(gen_disconnected(n, 2));
    const auto t2 = mixture_for_T2(in.g, in.rel);
    CHECK(t2.mixture.coin_inputs == static_cast<int>(expected[static_cast<std::size_t>(n - 2)]));
    CHECK(t2.bit_rows.size() == expected[static_cast<std::size_t>(n - 2)]);
    CHECK(check_T2(t2.mixture.table(), in.rel));
    CHECK(payoff(t2.mixture.table(), in.rel).value == Rational(1, 2));
    if (n >= 3) CHECK(is_orthogonal_array(t2.bit_rows));
    CHECK(static_cast<int>(t2.bit_rows.size()) == min_oa_rows(n - 1));
  }
  const auto fig = make(oracle::example_graph());
  CHECK(mixture_for_T2(fig.g, fig.rel).mixture.coin_inputs == 2);
}

TEST_CASE("orthogonal arrays") {
  CHECK(is_orthogonal_array({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  CHECK_FALSE(is_orthogonal_array({{0, 0}, {1, 1}}));
  CHECK(is_orthogonal_array({{0}, {1}}, 1));
  CHECK(is_orthogonal_array({{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  for (int k = 1; k <= 7; ++k) {
    CAPTURE(k);
    CHECK(min_oa_rows(k) == oracle::min_oa_rows(k));
  }
  CHECK(min_oa_rows(2) == 4);
  CHECK(min_oa_rows(3) == 4);
  const auto oa = find_orthogonal_array(8, 7);
  CHECK(oa.size() == 8);
  CHECK(is_orthogonal_array(oa));
  CHECK(find_orthogonal_array(4, 4).empty());
  CHECK_THROWS_AS(min_oa_rows(9), Error);
  CHECK_THROWS_AS(find_orthogonal_array(28, 2), Error);
}

}  // TEST_SUITE
