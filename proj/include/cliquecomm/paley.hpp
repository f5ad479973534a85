#pragma once

#include <vector>

#include <Eigen/Dense>

#include "cliquecomm/quantum.hpp"

namespace cliquecomm {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// Sorted {x^2 mod q : 1 <= x < q}. Throws kInvalidParams unless q is prime.
std::vector<int> quadratic_residues(int q);

// Legendre symbol of x modulo prime q.
int legendre(long long x, int q);

// K[k][l] = chi(k - l) over Z_q.
IntMatrix character_matrix(int q);
// Adjacency matrix of Paley(q) as integers.
IntMatrix paley_adjacency(int q);

// K^2 = qI - J, checked in integer arithmetic.
bool verify_k_squared(int q);
// A = (K + J - I) / 2, checked in integer arithmetic.
bool verify_adjacency_from_k(int q);
// A^2 = ((q - 1)/4)(J + I) - A, checked in integer arithmetic.
bool verify_adjacency_square(int q);

struct SpectrumCheck {
  // Ascending.
  std::vector<double> eigenvalues;
  std::vector<double> expected;
  double max_deviation = 0.0;
  bool ok = false;
};

SpectrumCheck adjacency_spectrum(int q, double tol = 1e-9);

struct OptimalGram {
  int q = 0;
  // I + (2 / (sqrt(q) + 1)) * A(complement)
  Eigen::MatrixXd m;
  SpectrumCheck spectrum;
  int rank = 0;
  double entry_sum = 0.0;
  bool sum_ok = false;
};

OptimalGram gram_opt(int q, double tol = 1e-9, double rank_threshold = 1e-6, double sum_tol = 1e-6);

// Vectors from the nonzero eigenpairs: rows of V * diag(sqrt(lambda)) in dimension rank.
// Throws kInconsistent on an eigenvalue below -1e-9.
OrthogonalRepresentation extract_vectors(const OptimalGram& gram, double rank_threshold = 1e-6);

// sqrt(q), cross-checked against the entry sum of M_opt divided by q. Throws kInconsistent.
double theta_paley(int q, double tol = 1e-6);

// (2 / (sqrt(q) + 1))^2
double paley_payoff(int q);

struct FourierCheck {
  bool eigenvectors = false;
  double all_ones_eigenvalue = 0.0;
  // Eigenvalue of the Fourier vector for each frequency 1..q-1.
  std::vector<double> eigenvalues;
};

// Applies M_opt to f_l[k] = exp(2 pi i k l / q) for l = 0..q-1.
FourierCheck fourier_eigenvectors(int q, double tol = 1e-9);

}  // namespace cliquecomm
