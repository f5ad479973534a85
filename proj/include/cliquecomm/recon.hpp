#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquecomm/prob_table.hpp"
#include "cliquecomm/relation.hpp"

namespace cliquecomm {

struct RunLog {
  int n = 1;
  int omega = 1;
  std::uint64_t seed = 0;
  std::string generator;
  std::vector<RelationTuple> rounds;
};

// k rounds with uniform (C_x, a, C_y) and b drawn from the table row.
// Throws kInvalidParams if the table is not normalised.
RunLog simulate_rounds(const RealTable& table, int k, std::uint64_t seed, double tol = 1e-9);

struct ReconstructionResult {
  // Support of the observed tuples.
  Relation estimate;
  // Every (C_x, a, C_y) appeared at least once.
  bool inputs_covered = false;
  // Set when a ground truth was supplied: estimate equals it and inputs are covered.
  std::optional<bool> success;
  // Present when the estimate is total and infer_graph accepts it.
  std::optional<InferredGraph> graph;
};

ReconstructionResult reconstruct(const RunLog& log, int n, int omega, const Relation* truth = nullptr);

// Probability that k independent rounds hit every event at least once, where event i has
// per-round probability p[i]; inclusion-exclusion over all subsets. Throws kCapExceeded
// above cap events.
double coverage_probability(const std::vector<double>& p, int k, int cap = 20);

// Probability that k rounds reveal the whole relation; 0 when some in-relation entry is not positive.
double success_prob_exact(const RealTable& table, const Relation& rel, int k, int cap = 20, double tol = 1e-9);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  int trials = 0;
};

// Fraction of trials whose k-round log reconstructs rel exactly; trial i uses derive_seed(seed, i).
MonteCarloEstimate success_prob_mc(const RealTable& table, const Relation& rel, int k, int trials, std::uint64_t seed);

struct ReportRow {
  int k = 0;
  double exact = 0.0;
  double mc = 0.0;
  double std_error = 0.0;
};

std::vector<ReportRow> payoff_vs_rounds_report(const RealTable& table, const Relation& rel, const std::vector<int>& k_grid,
                                               int trials, std::uint64_t seed);

// Columns k,P_exact,P_mc,stderr.
std::string report_csv(const std::vector<ReportRow>& rows);
// Columns round,x,a,y,b.
std::string runlog_csv(const RunLog& log);

}  // namespace cliquecomm
