#pragma once

#include <vector>

#include "cliquecomm/graph.hpp"
#include "cliquecomm/prob_table.hpp"
#include "cliquecomm/relation.hpp"

namespace cliquecomm {

// One-way classical strategy. The encoder is deterministic; the decoder may randomise.
struct Strategy {
  int n = 1;
  int omega = 1;
  int messages = 1;
  // Message for row (x - 1) * omega + a.
  std::vector<int> encoder;
  // Distribution over b for (message, C_y), stored at message * n + (y - 1).
  std::vector<std::vector<Rational>> decoder;

  bool deterministic() const;
  // Deterministic decoder output; throws if the decoder randomises at (message, y).
  int decode(int message, int y) const;
  ExactTable table() const;
  // Inputs (C_x, a) sent as each message.
  std::vector<std::vector<CliqueLabel>> partitions() const;
};

// sigma[j][m] is the label clique j + 1 assigns to message m; the encoder inverts it.
Strategy strategy_from_permutations(const std::vector<std::vector<int>>& sigma);
// Recover the per-clique permutations of a deterministic omega-message strategy.
std::vector<std::vector<int>> permutations_of(const Strategy& s);

struct PublicCoinMixture {
  std::vector<Strategy> members;
  std::vector<Rational> weights;
  // Size of the shared coin alphabet (members drawn with multiplicity).
  int coin_inputs = 1;

  ExactTable table() const;
};

// Deterministic omega-message T0 strategy found by backtracking over per-clique permutations.
// Permutations are tried in descending lexicographic order; throws kSearchExhausted if none exists.
Strategy ccr_protocol(const Graph& g, const CliqueSet& cliques, const Relation& rel);

// Message = selected vertex; Bob answers uniformly over the valid labels.
// Throws kConditionsFailed unless G0 and G1 hold.
Strategy sccr_protocol(const Graph& g, const CliqueSet& cliques, const Relation& rel);

// True iff no m-message strategy (deterministic encoder, randomised decoder) meets T0 and T1.
// Exhaustive over encoders up to message relabelling; throws kCapExceeded when |V| > cap.
bool verify_classical_lower_bound(const Graph& g, const Relation& rel, int m, int cap = 12);

// All deterministic omega-message T0 strategies, one per distinct table, ordered by their
// permutation tuples ascending. Throws kCapExceeded past max_strategies.
std::vector<Strategy> enumerate_T0_strategies(const Graph& g, const Relation& rel, int m,
                                              int max_strategies = 1 << 16);

// Uniform n-member mixture: a base strategy plus, for each clique i >= 2, the nearest T0
// strategy that changes clique i's permutation.
PublicCoinMixture mixture_for_T1(const Graph& g, const Relation& rel);

// Bit j - 2 of a strategy's row: clique j's permutation differs from the base strategy's.
std::vector<int> strategy_bits(const Strategy& s, const Strategy& base);

struct T2Mixture {
  PublicCoinMixture mixture;
  // Rows of the selected strategies under strategy_bits against the first enumerated strategy.
  std::vector<std::vector<int>> bit_rows;
};

// Smallest uniform multiset of T0 strategies whose mixture attains payoff 1/eta.
// Throws kCapExceeded if no mixture of at most max_size strategies works.
T2Mixture mixture_for_T2(const Graph& g, const Relation& rel, int max_size = 16);

using BinaryArray = std::vector<std::vector<int>>;

// Every pair (t = 2) or single column (t = 1) sees each binary pattern equally often.
bool is_orthogonal_array(const BinaryArray& rows, int t = 2);

// Smallest N admitting an OA(N, k, 2, 2); T_1 = 2 by convention.
int min_oa_rows(int k, int cap = 8);
// The first OA(N, k, 2, 2) found by the canonical search, or empty if none. Throws
// kCapExceeded above 24 rows.
BinaryArray find_orthogonal_array(int rows, int k);

}  // namespace cliquecomm
