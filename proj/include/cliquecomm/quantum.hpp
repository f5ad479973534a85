#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cliquecomm/graph.hpp"
#include "cliquecomm/prob_table.hpp"
#include "cliquecomm/relation.hpp"

namespace cliquecomm {

// Unit vector in C^d for every vertex; vertex v is stored at index v - 1.
struct OrthogonalRepresentation {
  int d = 0;
  std::vector<Eigen::VectorXcd> vectors;

  int order() const { return static_cast<int>(vectors.size()); }
  const Eigen::VectorXcd& vector(int v) const { return vectors.at(static_cast<std::size_t>(v - 1)); }
};

// |<u, v>|^2
inline double overlap(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) { return std::norm(u.dot(v)); }

struct ForReport {
  bool ok = false;
  bool unit_norm = true;
  bool orthogonal_on_edges = true;
  bool faithful = true;
  bool distinct = true;
  double min_nonadjacent_overlap = 1.0;
  double max_edge_overlap = 0.0;
  std::vector<std::string> violations;
};

// Unit norms, orthogonality on edges, nonzero overlap off edges, no repeated rays.
ForReport verify_for(const OrthogonalRepresentation& rep, const Graph& g, double tol = 1e-9);

// Smallest |<u, v>|^2 over non-adjacent distinct vertex pairs (1 if there are none).
double min_nonadjacent_overlap(const OrthogonalRepresentation& rep, const Graph& g);

// Faithful representation in dimension d (0 means omega). Disjoint cliques get powers of a
// fixed generic unitary; graphs whose edges all lie inside listed cliques get clique-by-clique
// completion; anything else falls back to numerical search. Throws kConstructionFailed.
OrthogonalRepresentation construct_for(const Graph& g, const CliqueSet& cliques, int d = 0,
                                       std::uint64_t seed = 1);

// Fixed generic unitary used for the disjoint-clique construction.
Eigen::MatrixXcd generic_unitary(int d);

enum class ResidualPolicy {
  // Probability of leaving the clique span goes uniformly to the valid labels.
  kUniformValid,
  // Raw Born probabilities; rows may sum to less than one when d > omega.
  kUnassigned,
};

// Born-rule table of the prepare-and-measure strategy. Needs unit vectors and mutually
// orthogonal vectors within every clique; throws kInconsistent otherwise.
RealTable quantum_table(const OrthogonalRepresentation& rep, const Graph& g, const CliqueSet& cliques,
                        const Relation& rel, ResidualPolicy policy = ResidualPolicy::kUniformValid,
                        double tol = 1e-9);

struct OptimizeOptions {
  int restarts = 32;
  std::uint64_t seed = 1;
  int max_iterations = 4000;
  double tolerance = 1e-8;
  double initial_temperature = 0.05;
  double final_temperature = 1e-8;
};

struct OptimizeResult {
  OrthogonalRepresentation rep;
  double payoff = 0.0;
  int restart = -1;
  // Local search only: the value is a lower bound on the true optimum.
  bool lower_bound = true;
  // Payoff per restart; negative when the restart did not end faithful.
  std::vector<double> restart_payoffs;
};

// Maximise the smallest non-adjacent overlap over orthogonal representations in C^d.
// Throws kConstructionFailed if no restart ends in a faithful representation.
OptimizeResult optimize_payoff(const Graph& g, const CliqueSet& cliques, int d,
                               const OptimizeOptions& options = {});

// Columns of each matrix form a basis of C^d.
bool check_mub(const std::vector<Eigen::MatrixXcd>& bases, int d, double tol = 1e-9);
// Z, X and Y eigenbases.
std::vector<Eigen::MatrixXcd> qubit_mubs();

// Disjoint-clique graphs only (kInvalidParams otherwise): payoff equals 1/eta.
bool mub_certificate(const RealTable& table, const Relation& rel, const Graph& g, const CliqueSet& cliques,
                     double tol = 1e-9);
bool is_disjoint_cliques(const Graph& g, const CliqueSet& cliques);

struct RspResult {
  double payoff = 0.0;
  bool duplicate = false;
};

// Equatorial qubit bases at Bloch azimuths phi_i (basis i = {phi_i, phi_i + pi}).
// Cross overlaps are cos^2(delta/2) and sin^2(delta/2) for delta = phi_i - phi_j.
RspResult rsp_payoff(const std::vector<double>& angles);
// n azimuths spaced by pi/n.
std::vector<double> symmetric_rsp_angles(int n);
// Table of the entanglement-assisted protocol simulated on two-qubit state vectors:
// Alice measures her half of a Bell pair, sends the outcome bit, Bob corrects and measures.
RealTable rsp_table(const std::vector<double>& angles);

}  // namespace cliquecomm
