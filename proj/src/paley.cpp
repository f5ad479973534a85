#include "cliquecomm/paley.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

#include "cliquecomm/error.hpp"
#include "cliquecomm/graph.hpp"

namespace cliquecomm {

namespace {

void require_paley_q(int q) {
  if (!is_prime(q) || q % 4 != 1)
    throw Error(ErrorKind::kInvalidParams, "q must be a prime with q = 1 mod 4");
}

IntMatrix ones(int q) { return IntMatrix::Ones(q, q); }
IntMatrix identity(int q) { return IntMatrix::Identity(q, q); }

}  // namespace

std::vector<int> quadratic_residues(int q) {
  if (!is_prime(q)) throw Error(ErrorKind::kInvalidParams, "q must be prime");
  std::set<int> out;
  for (long long x = 1; x < q; ++x) out.insert(static_cast<int>((x * x) % q));
  return {out.begin(), out.end()};
}

int legendre(long long x, int q) {
  const long long r = ((x % q) + q) % q;
  if (r == 0) return 0;
  for (long long y = 1; y < q; ++y)
    if ((y * y) % q == r) return 1;
  return -1;
}

IntMatrix character_matrix(int q) {
  require_paley_q(q);
  IntMatrix k(q, q);
  for (int r = 0; r < q; ++r)
    for (int c = 0; c < q; ++c) k(r, c) = legendre(r - c, q);
  return k;
}

IntMatrix paley_adjacency(int q) {
  const Graph g = gen_paley(q);
  IntMatrix a = IntMatrix::Zero(q, q);
  for (auto [u, v] : g.edges()) a(u - 1, v - 1) = a(v - 1, u - 1) = 1;
  return a;
}

bool verify_k_squared(int q) {
  const IntMatrix k = character_matrix(q);
  return k * k == q * identity(q) - ones(q);
}

bool verify_adjacency_from_k(int q) {
  const IntMatrix k = character_matrix(q);
  return 2 * paley_adjacency(q) == k + ones(q) - identity(q);
}

bool verify_adjacency_square(int q) {
  const IntMatrix a = paley_adjacency(q);
  return 4 * (a * a) == (q - 1) * (ones(q) + identity(q)) - 4 * a;
}

namespace {

SpectrumCheck compare_spectrum(const Eigen::VectorXd& computed, std::vector<double> expected, double tol) {
  SpectrumCheck s;
  s.eigenvalues.assign(computed.data(), computed.data() + computed.size());
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  std::sort(expected.begin(), expected.end());
  s.expected = std::move(expected);
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
    s.max_deviation = std::max(s.max_deviation, std::abs(s.eigenvalues[i] - s.expected[i]));
  s.ok = s.eigenvalues.size() == s.expected.size() && s.max_deviation <= tol;
  return s;
}

}  // namespace

SpectrumCheck adjacency_spectrum(int q, double tol) {
  require_paley_q(q);
  const Eigen::MatrixXd a = paley_adjacency(q).cast<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  const double r = std::sqrt(static_cast<double>(q));
  std::vector<double> expected{(q - 1) / 2.0};
  for (int i = 0; i < (q - 1) / 2; ++i) {
    expected.push_back((-1.0 + r) / 2.0);
    expected.push_back((-1.0 - r) / 2.0);
  }
  return compare_spectrum(es.eigenvalues(), std::move(expected), tol);
}

OptimalGram gram_opt(int q, double tol, double rank_threshold, double sum_tol) {
  require_paley_q(q);
  OptimalGram out;
  out.q = q;
  const double r = std::sqrt(static_cast<double>(q));
  const IntMatrix a = paley_adjacency(q);
  const Eigen::MatrixXd comp = (ones(q) - identity(q) - a).cast<double>();
  out.m = Eigen::MatrixXd::Identity(q, q) + (2.0 / (r + 1.0)) * comp;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(out.m, Eigen::EigenvaluesOnly);
  std::vector<double> expected{r};
  for (int i = 0; i < (q - 1) / 2; ++i) {
    expected.push_back(2.0 * r / (1.0 + r));
    expected.push_back(0.0);
  }
  out.spectrum = compare_spectrum(es.eigenvalues(), std::move(expected), tol);
  for (double lambda : out.spectrum.eigenvalues) out.rank += lambda > rank_threshold ? 1 : 0;
  out.entry_sum = out.m.sum();
  out.sum_ok = std::abs(out.entry_sum - std::pow(static_cast<double>(q), 1.5)) <= sum_tol;
  return out;
}

OrthogonalRepresentation extract_vectors(const OptimalGram& gram, double rank_threshold) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram.m);
  const Eigen::VectorXd& lambda = es.eigenvalues();
  if (lambda.minCoeff() < -1e-9) throw Error(ErrorKind::kInconsistent, "Gram matrix is not positive semidefinite");
  std::vector<int> keep;
  for (int i = 0; i < lambda.size(); ++i)
    if (lambda[i] > rank_threshold) keep.push_back(i);
  OrthogonalRepresentation rep;
  rep.d = static_cast<int>(keep.size());
  for (int v = 0; v < gram.m.rows(); ++v) {
    Eigen::VectorXcd x(rep.d);
    for (int c = 0; c < rep.d; ++c)
      x[c] = es.eigenvectors()(v, keep[static_cast<std::size_t>(c)]) * std::sqrt(lambda[keep[static_cast<std::size_t>(c)]]);
    rep.vectors.push_back(x);
  }
  return rep;
}

double theta_paley(int q, double tol) {
  const OptimalGram g = gram_opt(q);
  const double theta = std::sqrt(static_cast<double>(q));
  if (std::abs(g.entry_sum / q - theta) > tol)
    throw Error(ErrorKind::kInconsistent, "entry sum of the optimal Gram matrix disagrees with sqrt(q)");
  return theta;
}

double paley_payoff(int q) {
  const double c = 2.0 / (std::sqrt(static_cast<double>(q)) + 1.0);
  return c * c;
}

FourierCheck fourier_eigenvectors(int q, double tol) {
  const OptimalGram g = gram_opt(q);
  FourierCheck out;
  out.eigenvectors = true;
  for (int l = 0; l < q; ++l) {
    Eigen::VectorXcd f(q);
    for (int k = 0; k < q; ++k) f[k] = std::polar(1.0, 2.0 * M_PI * k * l / q);
    const Eigen::VectorXcd mf = g.m.cast<std::complex<double>>() * f;
    const std::complex<double> lambda = f.dot(mf) / static_cast<double>(q);
    if ((mf - lambda * f).norm() > tol * q || std::abs(lambda.imag()) > tol) out.eigenvectors = false;
    if (l == 0)
      out.all_ones_eigenvalue = lambda.real();
    else
      out.eigenvalues.push_back(lambda.real());
  }
  return out;
}

}  // namespace cliquecomm
