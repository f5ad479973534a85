#include "cliquecomm/recon.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "cliquecomm/error.hpp"
#include "cliquecomm/rng.hpp"
#include "parallel.hpp"

namespace cliquecomm {

namespace {

RelationTuple draw_round(const RealTable& t, Rng& rng) {
  const int x = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(t.n())));
  const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(t.omega())));
  const int y = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(t.n())));
  const double u = rng.uniform();
  double acc = 0.0;
  int b = -1;
  for (int c = 0; c < t.omega(); ++c) {
    const double p = t(x, a, y, c);
    if (p <= 0.0) continue;
    b = c;
    acc += p;
    if (u < acc) break;
  }
  return {x, a, y, b};
}

}  // namespace

RunLog simulate_rounds(const RealTable& table, int k, std::uint64_t seed, double tol) {
  if (k < 0) throw Error(ErrorKind::kInvalidParams, "round count must be non-negative");
  if (!table.normalized(tol)) throw Error(ErrorKind::kInvalidParams, "table is not normalised");
  RunLog log;
  log.n = table.n();
  log.omega = table.omega();
  log.seed = seed;
  log.generator = Rng::kName;
  Rng rng(seed);
  log.rounds.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) log.rounds.push_back(draw_round(table, rng));
  return log;
}

ReconstructionResult reconstruct(const RunLog& log, int n, int omega, const Relation* truth) {
  ReconstructionResult res{Relation(n, omega, log.rounds), false, std::nullopt, std::nullopt};
  std::vector<char> seen(static_cast<std::size_t>(n * omega * n), 0);
  for (const auto& t : log.rounds) seen[static_cast<std::size_t>(((t.x - 1) * omega + t.a) * n + (t.y - 1))] = 1;
  res.inputs_covered = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  if (truth) res.success = res.inputs_covered && res.estimate == *truth;
  if (res.inputs_covered) {
    try {
      res.graph = infer_graph(res.estimate, n, omega);
    } catch (const Error&) {
      res.graph.reset();
    }
  }
  return res;
}

double coverage_probability(const std::vector<double>& p, int k, int cap) {
  const int m = static_cast<int>(p.size());
  if (m > cap) throw Error(ErrorKind::kCapExceeded, "too many events for inclusion-exclusion");
  if (k < 0) throw Error(ErrorKind::kInvalidParams, "round count must be non-negative");
  const std::size_t subsets = std::size_t{1} << m;
  std::vector<long double> mass(subsets, 0.0L);
  long double total = 0.0L;
  for (std::size_t s = 0; s < subsets; ++s) {
    if (s != 0) {
      const int low = __builtin_ctzll(s);
      mass[s] = mass[s & (s - 1)] + static_cast<long double>(p[static_cast<std::size_t>(low)]);
    }
    const long double miss = std::max(0.0L, 1.0L - mass[s]);
    const long double term = std::pow(miss, static_cast<long double>(k));
    total += (__builtin_popcountll(s) % 2 == 0) ? term : -term;
  }
  return static_cast<double>(std::clamp(total, 0.0L, 1.0L));
}

double success_prob_exact(const RealTable& table, const Relation& rel, int k, int cap, double tol) {
  if (static_cast<int>(rel.size()) > cap) throw Error(ErrorKind::kCapExceeded, "relation too large for inclusion-exclusion");
  if (!check_T1(table, rel, tol).ok) return 0.0;
  const double inputs = static_cast<double>(rel.n()) * rel.n() * rel.omega();
  std::vector<double> p;
  for (const auto& t : rel.tuples()) p.push_back(table(t.x, t.a, t.y, t.b) / inputs);
  return coverage_probability(p, k, cap);
}

MonteCarloEstimate success_prob_mc(const RealTable& table, const Relation& rel, int k, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::kInvalidParams, "need at least one trial");
  if (!table.normalized()) throw Error(ErrorKind::kInvalidParams, "table is not normalised");
  const int rows = rel.rows();
  std::vector<char> wins(static_cast<std::size_t>(trials), 0);
  detail::parallel_for(trials, [&](int trial) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
    std::vector<char> seen(static_cast<std::size_t>(rows * rows), 0);
    std::size_t distinct = 0;
    bool extra = false;
    for (int i = 0; i < k; ++i) {
      const RelationTuple t = draw_round(table, rng);
      const auto cell = static_cast<std::size_t>(((t.x - 1) * rel.omega() + t.a) * rows + (t.y - 1) * rel.omega() + t.b);
      if (!seen[cell]) {
        seen[cell] = 1;
        ++distinct;
        if (!rel.contains(t)) extra = true;
      }
    }
    wins[static_cast<std::size_t>(trial)] = (!extra && distinct == rel.size()) ? 1 : 0;
  });
  MonteCarloEstimate est;
  est.trials = trials;
  const auto hits = static_cast<double>(std::count(wins.begin(), wins.end(), 1));
  est.mean = hits / trials;
  est.std_error = std::sqrt(est.mean * (1.0 - est.mean) / trials);
  return est;
}

std::vector<ReportRow> payoff_vs_rounds_report(const RealTable& table, const Relation& rel, const std::vector<int>& k_grid,
                                               int trials, std::uint64_t seed) {
  std::vector<ReportRow> rows;
  for (std::size_t i = 0; i < k_grid.size(); ++i) {
    const int k = k_grid[i];
    const auto mc = success_prob_mc(table, rel, k, trials, derive_seed(seed, i));
    rows.push_back({k, success_prob_exact(table, rel, k), mc.mean, mc.std_error});
  }
  return rows;
}

std::string report_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << std::setprecision(17) << "k,P_exact,P_mc,stderr\n";
  for (const auto& r : rows) os << r.k << ',' << r.exact << ',' << r.mc << ',' << r.std_error << '\n';
  return os.str();
}

std::string runlog_csv(const RunLog& log) {
  std::ostringstream os;
  os << "round,x,a,y,b\n";
  for (std::size_t i = 0; i < log.rounds.size(); ++i) {
    const auto& t = log.rounds[i];
    os << i + 1 << ',' << t.x << ',' << t.a << ',' << t.y << ',' << t.b << '\n';
  }
  return os.str();
}

}  // namespace cliquecomm
