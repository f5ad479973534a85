#include "cliquecomm/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cliquecomm/error.hpp"
#include "cliquecomm/rng.hpp"
#include "parallel.hpp"

namespace cliquecomm {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using cd = std::complex<double>;

ForReport verify_for(const OrthogonalRepresentation& rep, const Graph& g, double tol) {
  ForReport r;
  if (rep.order() != g.order()) {
    r.violations.push_back("representation covers " + std::to_string(rep.order()) + " vertices, graph has " +
                           std::to_string(g.order()));
    r.unit_norm = r.orthogonal_on_edges = r.faithful = r.distinct = false;
    return r;
  }
  for (int v = 1; v <= g.order(); ++v) {
    if (rep.vector(v).size() != rep.d || std::abs(rep.vector(v).squaredNorm() - 1.0) > tol) {
      r.unit_norm = false;
      r.violations.push_back("vertex " + std::to_string(v) + " is not a unit vector in C^" + std::to_string(rep.d));
    }
  }
  if (!r.unit_norm) {
    r.orthogonal_on_edges = r.faithful = r.distinct = false;
    return r;
  }
  for (int u = 1; u <= g.order(); ++u) {
    for (int v = u + 1; v <= g.order(); ++v) {
      const double o = overlap(rep.vector(u), rep.vector(v));
      const std::string pair = std::to_string(u) + "," + std::to_string(v);
      if (g.adjacent(u, v)) {
        r.max_edge_overlap = std::max(r.max_edge_overlap, o);
        if (std::sqrt(o) > tol) {
          r.orthogonal_on_edges = false;
          r.violations.push_back("edge " + pair + " is not orthogonal");
        }
      } else {
        r.min_nonadjacent_overlap = std::min(r.min_nonadjacent_overlap, o);
        if (std::sqrt(o) <= tol) {
          r.faithful = false;
          r.violations.push_back("non-edge " + pair + " is orthogonal");
        }
        if (o >= 1.0 - tol) {
          r.distinct = false;
          r.violations.push_back("vertices " + pair + " share a ray");
        }
      }
    }
  }
  r.ok = r.unit_norm && r.orthogonal_on_edges && r.faithful && r.distinct;
  return r;
}

double min_nonadjacent_overlap(const OrthogonalRepresentation& rep, const Graph& g) {
  double best = 1.0;
  for (int u = 1; u <= g.order(); ++u)
    for (int v = u + 1; v <= g.order(); ++v)
      if (!g.adjacent(u, v)) best = std::min(best, overlap(rep.vector(u), rep.vector(v)));
  return best;
}

MatrixXcd generic_unitary(int d) {
  const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
  const double golden_ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  MatrixXd rot = MatrixXd::Identity(d, d);
  for (int p = 0; p < d; ++p) {
    for (int q = p + 1; q < d; ++q) {
      double frac = std::fmod((p * d + q + 1) * golden_ratio, 1.0);
      const double theta = M_PI * (0.15 + 0.35 * frac);
      MatrixXd giv = MatrixXd::Identity(d, d);
      giv(p, p) = std::cos(theta);
      giv(q, q) = std::cos(theta);
      giv(p, q) = -std::sin(theta);
      giv(q, p) = std::sin(theta);
      rot = giv * rot;
    }
  }
  MatrixXcd u(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) u(j, k) = std::polar(1.0, j * golden_angle) * rot(j, k);
  return u;
}

bool is_disjoint_cliques(const Graph& g, const CliqueSet& cliques) {
  std::vector<int> owner(static_cast<std::size_t>(g.order()) + 1, 0);
  for (int x = 1; x <= cliques.count(); ++x) {
    for (int v : cliques.clique(x)) {
      if (owner[static_cast<std::size_t>(v)] != 0) return false;
      owner[static_cast<std::size_t>(v)] = x;
    }
  }
  for (int v = 1; v <= g.order(); ++v)
    if (owner[static_cast<std::size_t>(v)] == 0) return false;
  for (auto [u, v] : g.edges())
    if (owner[static_cast<std::size_t>(u)] != owner[static_cast<std::size_t>(v)]) return false;
  return true;
}

namespace {

MatrixXcd random_gaussian(int rows, int cols, Rng& rng) {
  MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      m(i, j) = cd(re, im);
    }
  return m;
}

MatrixXcd random_unitary(int d, Rng& rng) {
  Eigen::HouseholderQR<MatrixXcd> qr(random_gaussian(d, d, rng));
  return qr.householderQ() * MatrixXcd::Identity(d, d);
}

bool edges_inside_cliques(const Graph& g, const CliqueSet& cliques) {
  for (auto [u, v] : g.edges()) {
    bool inside = false;
    for (int x = 1; x <= cliques.count() && !inside; ++x)
      inside = cliques.position(x, u) >= 0 && cliques.position(x, v) >= 0;
    if (!inside) return false;
  }
  for (int v = 1; v <= g.order(); ++v) {
    bool covered = false;
    for (int x = 1; x <= cliques.count() && !covered; ++x) covered = cliques.position(x, v) >= 0;
    if (!covered) return false;
  }
  return true;
}

// Fill each clique in order: vectors already fixed by earlier cliques are kept, the rest are
// a random unitary image of an orthonormal basis of their orthogonal complement.
bool complete_by_cliques(const Graph& g, const CliqueSet& cliques, int d, Rng& rng, OrthogonalRepresentation& rep) {
  rep.d = d;
  rep.vectors.assign(static_cast<std::size_t>(g.order()), VectorXcd());
  std::vector<char> fixed(static_cast<std::size_t>(g.order()) + 1, 0);
  for (int x = 1; x <= cliques.count(); ++x) {
    std::vector<int> known, fresh;
    for (int v : cliques.clique(x)) (fixed[static_cast<std::size_t>(v)] ? known : fresh).push_back(v);
    if (fresh.empty()) continue;
    const int s = static_cast<int>(known.size());
    MatrixXcd basis(d, d);
    for (int i = 0; i < s; ++i) basis.col(i) = rep.vector(known[static_cast<std::size_t>(i)]);
    if (s > 0) {
      const MatrixXcd gram = basis.leftCols(s).adjoint() * basis.leftCols(s);
      if ((gram - MatrixXcd::Identity(s, s)).cwiseAbs().maxCoeff() > 1e-10) return false;
    }
    basis.rightCols(d - s) = random_gaussian(d, d - s, rng);
    Eigen::HouseholderQR<MatrixXcd> qr(basis);
    const MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(d, d);
    const MatrixXcd fill = q.rightCols(d - s) * random_unitary(d - s, rng);
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      rep.vectors[static_cast<std::size_t>(fresh[i] - 1)] = fill.col(static_cast<Eigen::Index>(i));
      fixed[static_cast<std::size_t>(fresh[i])] = 1;
    }
  }
  return true;
}

// Representations as real vectors z: vertex i, coordinate k has real part z[2(i d + k)] and
// imaginary part z[2(i d + k) + 1]. Constraints: Re and Im of <x_i, x_j> on edges, |x_i|^2 - 1.
class Manifold {
 public:
  Manifold(const Graph& g, int d) : order_(g.order()), d_(d) {
    for (auto [u, v] : g.edges()) edges_.emplace_back(u - 1, v - 1);
    for (int u = 0; u < order_; ++u)
      for (int v = u + 1; v < order_; ++v)
        if (!g.adjacent(u + 1, v + 1)) pairs_.emplace_back(u, v);
  }

  int variables() const { return 2 * d_ * order_; }
  int constraints() const { return 2 * static_cast<int>(edges_.size()) + order_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  std::pair<double, double> inner(const VectorXd& z, int i, int j) const {
    double re = 0.0, im = 0.0;
    for (int k = 0; k < d_; ++k) {
      const double ai = z[re_idx(i, k)], bi = z[im_idx(i, k)], aj = z[re_idx(j, k)], bj = z[im_idx(j, k)];
      re += ai * aj + bi * bj;
      im += ai * bj - bi * aj;
    }
    return {re, im};
  }

  VectorXd residual(const VectorXd& z) const {
    VectorXd c(constraints());
    int row = 0;
    for (auto [i, j] : edges_) {
      auto [re, im] = inner(z, i, j);
      c[row++] = re;
      c[row++] = im;
    }
    for (int i = 0; i < order_; ++i) {
      double n2 = 0.0;
      for (int k = 0; k < d_; ++k) n2 += z[re_idx(i, k)] * z[re_idx(i, k)] + z[im_idx(i, k)] * z[im_idx(i, k)];
      c[row++] = n2 - 1.0;
    }
    return c;
  }

  MatrixXd jacobian(const VectorXd& z) const {
    MatrixXd jac = MatrixXd::Zero(constraints(), variables());
    int row = 0;
    for (auto [i, j] : edges_) {
      for (int k = 0; k < d_; ++k) {
        const double ai = z[re_idx(i, k)], bi = z[im_idx(i, k)], aj = z[re_idx(j, k)], bj = z[im_idx(j, k)];
        jac(row, re_idx(i, k)) = aj;
        jac(row, im_idx(i, k)) = bj;
        jac(row, re_idx(j, k)) = ai;
        jac(row, im_idx(j, k)) = bi;
        jac(row + 1, re_idx(i, k)) = bj;
        jac(row + 1, im_idx(i, k)) = -aj;
        jac(row + 1, re_idx(j, k)) = -bi;
        jac(row + 1, im_idx(j, k)) = ai;
      }
      row += 2;
    }
    for (int i = 0; i < order_; ++i, ++row)
      for (int k = 0; k < d_; ++k) {
        jac(row, re_idx(i, k)) = 2.0 * z[re_idx(i, k)];
        jac(row, im_idx(i, k)) = 2.0 * z[im_idx(i, k)];
      }
    return jac;
  }

  // Gauss-Newton projection onto the constraint set using minimum-norm corrections.
  bool retract(VectorXd& z) const {
    for (int it = 0; it < 80; ++it) {
      const VectorXd c = residual(z);
      if (c.lpNorm<Eigen::Infinity>() < 1e-14) return true;
      Eigen::CompleteOrthogonalDecomposition<MatrixXd> cod(jacobian(z));
      z -= cod.solve(c);
    }
    return residual(z).lpNorm<Eigen::Infinity>() < 1e-12;
  }

  // Smooth minimum -tau log sum exp(-f / tau) of the non-adjacent overlaps, and its gradient.
  double softmin(const VectorXd& z, double tau, VectorXd* grad) const {
    if (pairs_.empty()) {
      if (grad) *grad = VectorXd::Zero(variables());
      return 1.0;
    }
    std::vector<double> f(pairs_.size());
    double fmin = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      auto [re, im] = inner(z, pairs_[p].first, pairs_[p].second);
      f[p] = re * re + im * im;
      fmin = std::min(fmin, f[p]);
    }
    double sum = 0.0;
    std::vector<double> w(pairs_.size());
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      w[p] = std::exp(-(f[p] - fmin) / tau);
      sum += w[p];
    }
    const double value = fmin - tau * std::log(sum);
    if (grad) {
      grad->setZero(variables());
      for (std::size_t p = 0; p < pairs_.size(); ++p) {
        const double weight = w[p] / sum;
        if (weight < 1e-300) continue;
        const int i = pairs_[p].first, j = pairs_[p].second;
        auto [re, im] = inner(z, i, j);
        const double cr = 2.0 * re * weight, ci = 2.0 * im * weight;
        for (int k = 0; k < d_; ++k) {
          const double ai = z[re_idx(i, k)], bi = z[im_idx(i, k)], aj = z[re_idx(j, k)], bj = z[im_idx(j, k)];
          (*grad)[re_idx(i, k)] += cr * aj + ci * bj;
          (*grad)[im_idx(i, k)] += cr * bj - ci * aj;
          (*grad)[re_idx(j, k)] += cr * ai - ci * bi;
          (*grad)[im_idx(j, k)] += cr * bi + ci * ai;
        }
      }
    }
    return value;
  }

  double min_overlap(const VectorXd& z) const {
    double best = 1.0;
    for (auto [i, j] : pairs_) {
      auto [re, im] = inner(z, i, j);
      best = std::min(best, re * re + im * im);
    }
    return best;
  }

  OrthogonalRepresentation unpack(const VectorXd& z) const {
    OrthogonalRepresentation rep;
    rep.d = d_;
    for (int i = 0; i < order_; ++i) {
      VectorXcd v(d_);
      for (int k = 0; k < d_; ++k) v[k] = cd(z[re_idx(i, k)], z[im_idx(i, k)]);
      rep.vectors.push_back(v);
    }
    return rep;
  }

  VectorXd random_point(Rng& rng) const {
    VectorXd z(variables());
    for (int i = 0; i < variables(); ++i) z[i] = rng.normal();
    return z;
  }

 private:
  int re_idx(int i, int k) const { return 2 * (i * d_ + k); }
  int im_idx(int i, int k) const { return 2 * (i * d_ + k) + 1; }

  int order_;
  int d_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::pair<int, int>> pairs_;
};

struct RestartOutcome {
  bool faithful = false;
  double payoff = -1.0;
  VectorXd z;
};

// Projected gradient ascent on the softmin with geometric annealing of the temperature.
RestartOutcome run_restart(const Manifold& mf, const Graph& g, const OptimizeOptions& opt, std::uint64_t seed) {
  RestartOutcome out;
  Rng rng(seed);
  VectorXd z = mf.random_point(rng);
  if (!mf.retract(z)) return out;
  double tau = opt.initial_temperature;
  double step = 0.1;
  VectorXd grad;
  double value = mf.softmin(z, tau, &grad);
  int stalled = 0;
  for (int it = 0; it < opt.max_iterations; ++it) {
    Eigen::CompleteOrthogonalDecomposition<MatrixXd> cod(mf.jacobian(z));
    const VectorXd tangent = grad - cod.solve(mf.jacobian(z) * grad);
    bool accepted = false;
    double gain = 0.0;
    while (step > 1e-14) {
      VectorXd trial = z + step * tangent;
      if (mf.retract(trial)) {
        VectorXd trial_grad;
        const double trial_value = mf.softmin(trial, tau, &trial_grad);
        if (trial_value > value) {
          gain = trial_value - value;
          z = std::move(trial);
          grad = std::move(trial_grad);
          value = trial_value;
          accepted = true;
          step *= 1.5;
          break;
        }
      }
      step *= 0.5;
    }
    stalled = (!accepted || gain < opt.tolerance * tau) ? stalled + 1 : 0;
    if (stalled >= 3 || tangent.norm() < 1e-12) {
      if (tau <= opt.final_temperature) break;
      tau = std::max(tau * 0.25, opt.final_temperature);
      value = mf.softmin(z, tau, &grad);
      step = std::max(step, 1e-3);
      stalled = 0;
    }
  }
  out.z = z;
  const auto rep = mf.unpack(z);
  out.faithful = verify_for(rep, g).ok;
  out.payoff = out.faithful ? mf.min_overlap(z) : -1.0;
  return out;
}


}  // namespace

OrthogonalRepresentation construct_for(const Graph& g, const CliqueSet& cliques, int d, std::uint64_t seed) {
  if (d == 0) d = cliques.omega();
  if (d < cliques.omega()) throw Error(ErrorKind::kInvalidParams, "dimension below the clique number");

  if (d == cliques.omega() && is_disjoint_cliques(g, cliques)) {
    const MatrixXcd u = generic_unitary(d);
    OrthogonalRepresentation rep;
    rep.d = d;
    rep.vectors.assign(static_cast<std::size_t>(g.order()), VectorXcd());
    MatrixXcd power = MatrixXcd::Identity(d, d);
    for (int x = 1; x <= cliques.count(); ++x) {
      for (int a = 0; a < d; ++a) rep.vectors[static_cast<std::size_t>(cliques.vertex(x, a) - 1)] = power.col(a);
      power = u * power;
    }
    if (verify_for(rep, g).ok) return rep;
  }

  if (edges_inside_cliques(g, cliques)) {
    for (int attempt = 0; attempt < 16; ++attempt) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
      OrthogonalRepresentation rep;
      if (complete_by_cliques(g, cliques, d, rng, rep) && verify_for(rep, g).ok) return rep;
    }
  }

  const Manifold mf(g, d);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rng rng(derive_seed(seed ^ 0xF00DULL, static_cast<std::uint64_t>(attempt)));
    VectorXd z = mf.random_point(rng);
    if (!mf.retract(z)) continue;
    auto rep = mf.unpack(z);
    if (verify_for(rep, g).ok) return rep;
  }
  throw Error(ErrorKind::kConstructionFailed, "could not certify a faithful representation in dimension " +
                                                  std::to_string(d));
}

RealTable quantum_table(const OrthogonalRepresentation& rep, const Graph& g, const CliqueSet& cliques,
                        const Relation& rel, ResidualPolicy policy, double tol) {
  if (cliques.count() != rel.n() || cliques.omega() != rel.omega())
    throw Error(ErrorKind::kDimensionMismatch, "clique set and relation shapes differ");
  if (rep.order() != g.order()) throw Error(ErrorKind::kDimensionMismatch, "representation does not cover the graph");
  for (int v = 1; v <= g.order(); ++v)
    if (std::abs(rep.vector(v).squaredNorm() - 1.0) > tol)
      throw Error(ErrorKind::kInconsistent, "representation has a non-unit vector");
  for (int y = 1; y <= cliques.count(); ++y)
    for (int b1 = 0; b1 < cliques.omega(); ++b1)
      for (int b2 = b1 + 1; b2 < cliques.omega(); ++b2)
        if (std::sqrt(overlap(rep.vector(cliques.vertex(y, b1)), rep.vector(cliques.vertex(y, b2)))) > tol)
          throw Error(ErrorKind::kInconsistent, "clique vectors are not orthogonal; not a measurement");

  RealTable t(rel.n(), rel.omega());
  for (int x = 1; x <= rel.n(); ++x) {
    for (int a = 0; a < rel.omega(); ++a) {
      const VectorXcd& sent = rep.vector(cliques.vertex(x, a));
      for (int y = 1; y <= rel.n(); ++y) {
        double total = 0.0;
        for (int b = 0; b < rel.omega(); ++b) {
          const double p = overlap(rep.vector(cliques.vertex(y, b)), sent);
          t(x, a, y, b) = p;
          total += p;
        }
        if (policy == ResidualPolicy::kUniformValid) {
          const double residual = std::max(0.0, 1.0 - total);
          const auto valid = rel.valid_outputs(x, a, y);
          for (int b : valid) t(x, a, y, b) += residual / static_cast<double>(valid.size());
        }
      }
    }
  }
  return t;
}

OptimizeResult optimize_payoff(const Graph& g, const CliqueSet& cliques, int d, const OptimizeOptions& options) {
  if (d < cliques.omega()) throw Error(ErrorKind::kInvalidParams, "dimension below the clique number");
  if (options.restarts < 1) throw Error(ErrorKind::kInvalidParams, "need at least one restart");
  const Manifold mf(g, d);
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(options.restarts));
  detail::parallel_for(options.restarts, [&](int r) {
    outcomes[static_cast<std::size_t>(r)] = run_restart(mf, g, options, derive_seed(options.seed, static_cast<std::uint64_t>(r)));
  });
  OptimizeResult res;
  for (int r = 0; r < options.restarts; ++r) {
    const auto& o = outcomes[static_cast<std::size_t>(r)];
    res.restart_payoffs.push_back(o.payoff);
    if (o.faithful && (res.restart < 0 || o.payoff > res.payoff)) {
      res.restart = r;
      res.payoff = o.payoff;
      res.rep = mf.unpack(o.z);
    }
  }
  if (res.restart < 0) throw Error(ErrorKind::kConstructionFailed, "no restart ended in a faithful representation");
  return res;
}

bool check_mub(const std::vector<MatrixXcd>& bases, int d, double tol) {
  for (const auto& b : bases) {
    if (b.rows() != d || b.cols() != d) throw Error(ErrorKind::kDimensionMismatch, "basis is not d x d");
    if ((b.adjoint() * b - MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() > tol)
      throw Error(ErrorKind::kInvalidParams, "basis is not orthonormal");
  }
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      const MatrixXcd cross = bases[i].adjoint() * bases[j];
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          if (std::abs(std::norm(cross(r, c)) - 1.0 / d) > tol) return false;
    }
  return true;
}

std::vector<MatrixXcd> qubit_mubs() {
  const double s = 1.0 / std::sqrt(2.0);
  MatrixXcd z = MatrixXcd::Identity(2, 2);
  MatrixXcd x(2, 2), y(2, 2);
  x << s, s, s, -s;
  y << s, s, cd(0, s), cd(0, -s);
  return {z, x, y};
}

bool mub_certificate(const RealTable& table, const Relation& rel, const Graph& g, const CliqueSet& cliques, double tol) {
  if (!is_disjoint_cliques(g, cliques)) throw Error(ErrorKind::kInvalidParams, "MUB certificate needs disjoint cliques");
  const auto rep = payoff(table, rel, tol);
  return std::abs(rep.value - to_double(rep.upper_bound)) <= tol;
}

RspResult rsp_payoff(const std::vector<double>& angles) {
  if (angles.empty()) throw Error(ErrorKind::kInvalidParams, "need at least one basis");
  RspResult r;
  r.payoff = 1.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    for (std::size_t j = i + 1; j < angles.size(); ++j) {
      const double half = 0.5 * (angles[i] - angles[j]);
      const double c2 = std::cos(half) * std::cos(half);
      const double s2 = std::sin(half) * std::sin(half);
      const double o = std::min(c2, s2);
      if (o < 1e-12) {
        r.duplicate = true;
        r.payoff = 0.0;
        return r;
      }
      r.payoff = std::min(r.payoff, o);
    }
  }
  return r;
}

std::vector<double> symmetric_rsp_angles(int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidParams, "need at least one basis");
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(k * M_PI / n);
  return out;
}

RealTable rsp_table(const std::vector<double>& angles) {
  const int n = static_cast<int>(angles.size());
  if (n < 1) throw Error(ErrorKind::kInvalidParams, "need at least one basis");
  auto equatorial = [](double phi) {
    VectorXcd v(2);
    v << 1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), phi);
    return v;
  };
  // |Phi+> with Alice's qubit first: amplitude index 2 * alice + bob.
  VectorXcd bell = VectorXcd::Zero(4);
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  MatrixXcd zgate = MatrixXcd::Identity(2, 2);
  zgate(1, 1) = -1.0;

  RealTable t(n, 2);
  for (int x = 1; x <= n; ++x) {
    for (int a = 0; a < 2; ++a) {
      const VectorXcd target = equatorial(angles[static_cast<std::size_t>(x - 1)] + a * M_PI);
      // Alice measures in {conj(psi), conj(Z psi)}; outcome k leaves Bob with Z^k psi.
      std::vector<VectorXcd> alice_basis{target.conjugate(), (zgate * target).conjugate()};
      for (int y = 1; y <= n; ++y) {
        for (int b = 0; b < 2; ++b) {
          const VectorXcd meas = equatorial(angles[static_cast<std::size_t>(y - 1)] + b * M_PI);
          double p = 0.0;
          for (int k = 0; k < 2; ++k) {
            VectorXcd bob(2);
            for (int s = 0; s < 2; ++s)
              bob[s] = std::conj(alice_basis[static_cast<std::size_t>(k)][0]) * bell[s] +
                       std::conj(alice_basis[static_cast<std::size_t>(k)][1]) * bell[2 + s];
            if (k == 1) bob = zgate * bob;
            p += std::norm(meas.dot(bob));
          }
          t(x, a, y, b) = p;
        }
      }
    }
  }
  return t;
}

}  // namespace cliquecomm
