#include "cliquecomm/classical.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "cliquecomm/error.hpp"

namespace cliquecomm {

bool Strategy::deterministic() const {
  for (const auto& dist : decoder)
    for (const auto& p : dist)
      if (p != Rational(0) && p != Rational(1)) return false;
  return true;
}

int Strategy::decode(int message, int y) const {
  const auto& dist = decoder.at(static_cast<std::size_t>(message * n + (y - 1)));
  for (int b = 0; b < omega; ++b)
    if (dist[static_cast<std::size_t>(b)] == Rational(1)) return b;
  throw Error(ErrorKind::kInvalidParams, "decoder randomises at this message");
}

ExactTable Strategy::table() const {
  ExactTable t(n, omega);
  for (int r = 0; r < n * omega; ++r) {
    const int msg = encoder[static_cast<std::size_t>(r)];
    for (int y = 1; y <= n; ++y) {
      const auto& dist = decoder[static_cast<std::size_t>(msg * n + (y - 1))];
      for (int b = 0; b < omega; ++b) t.at(r, t.row_index(y, b)) = dist[static_cast<std::size_t>(b)];
    }
  }
  return t;
}

std::vector<std::vector<CliqueLabel>> Strategy::partitions() const {
  std::vector<std::vector<CliqueLabel>> out(static_cast<std::size_t>(messages));
  for (int r = 0; r < n * omega; ++r)
    out[static_cast<std::size_t>(encoder[static_cast<std::size_t>(r)])].push_back({r / omega + 1, r % omega});
  return out;
}

ExactTable PublicCoinMixture::table() const {
  ExactTable t(members.front().n, members.front().omega);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const ExactTable mt = members[i].table();
    for (int r = 0; r < t.rows(); ++r)
      for (int c = 0; c < t.rows(); ++c) t.at(r, c) += weights[i] * mt.at(r, c);
  }
  return t;
}

Strategy strategy_from_permutations(const std::vector<std::vector<int>>& sigma) {
  if (sigma.empty() || sigma.front().empty()) throw Error(ErrorKind::kInvalidParams, "no permutations given");
  for (const auto& p : sigma) {
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted.size() != sigma.front().size() || sorted[i] != static_cast<int>(i))
        throw Error(ErrorKind::kInvalidParams, "sigma entry is not a permutation of 0..omega-1");
  }
  Strategy s;
  s.n = static_cast<int>(sigma.size());
  s.omega = static_cast<int>(sigma.front().size());
  s.messages = s.omega;
  s.encoder.assign(static_cast<std::size_t>(s.n * s.omega), -1);
  s.decoder.assign(static_cast<std::size_t>(s.messages * s.n), std::vector<Rational>(static_cast<std::size_t>(s.omega)));
  for (int j = 0; j < s.n; ++j) {
    for (int m = 0; m < s.omega; ++m) {
      const int label = sigma[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
      s.encoder[static_cast<std::size_t>(j * s.omega + label)] = m;
      s.decoder[static_cast<std::size_t>(m * s.n + j)][static_cast<std::size_t>(label)] = 1;
    }
  }
  return s;
}

std::vector<std::vector<int>> permutations_of(const Strategy& s) {
  if (s.messages != s.omega || !s.deterministic())
    throw Error(ErrorKind::kInvalidParams, "strategy is not a deterministic omega-message strategy");
  std::vector<std::vector<int>> sigma(static_cast<std::size_t>(s.n), std::vector<int>(static_cast<std::size_t>(s.omega)));
  for (int y = 1; y <= s.n; ++y)
    for (int m = 0; m < s.omega; ++m) sigma[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(m)] = s.decode(m, y);
  return sigma;
}

namespace {

using Sigmas = std::vector<std::vector<int>>;

// Depth-first search over sigma_2..sigma_n with sigma_1 = identity. Labels are tried in
// ascending or descending order, which makes the visiting order lexicographic on the
// flattened permutation tuple. visit returns false to stop.
void search_permutations(const Relation& rel, bool descending, const std::function<bool(const Sigmas&)>& visit) {
  const int n = rel.n();
  const int omega = rel.omega();
  Sigmas sigma(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(omega), -1));
  std::vector<std::vector<char>> used(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(omega), 0));
  for (int m = 0; m < omega; ++m) sigma[0][static_cast<std::size_t>(m)] = m;

  std::function<bool(int, int)> rec = [&](int j, int m) -> bool {
    if (j == n) return visit(sigma);
    if (m == omega) return rec(j + 1, 0);
    for (int step = 0; step < omega; ++step) {
      const int b = descending ? omega - 1 - step : step;
      auto& uj = used[static_cast<std::size_t>(j)];
      if (uj[static_cast<std::size_t>(b)]) continue;
      bool ok = true;
      for (int i = 0; i < j && ok; ++i) {
        const int a = sigma[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
        ok = rel.contains(i + 1, a, j + 1, b) && rel.contains(j + 1, b, i + 1, a);
      }
      if (!ok) continue;
      uj[static_cast<std::size_t>(b)] = 1;
      sigma[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] = b;
      const bool keep_going = rec(j, m + 1);
      sigma[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] = -1;
      uj[static_cast<std::size_t>(b)] = 0;
      if (!keep_going) return false;
    }
    return true;
  };
  rec(1, 0);
}

}  // namespace

Strategy ccr_protocol(const Graph&, const CliqueSet& cliques, const Relation& rel) {
  if (cliques.count() != rel.n() || cliques.omega() != rel.omega())
    throw Error(ErrorKind::kDimensionMismatch, "clique set and relation shapes differ");
  Sigmas found;
  search_permutations(rel, true, [&](const Sigmas& s) {
    found = s;
    return false;
  });
  if (found.empty()) throw Error(ErrorKind::kSearchExhausted, "no omega-message T0 strategy exists");
  return strategy_from_permutations(found);
}

Strategy sccr_protocol(const Graph& g, const CliqueSet& cliques, const Relation& rel) {
  const auto cond = check_conditions(g, cliques, 0);
  if (!cond.g0 || !cond.g1) throw Error(ErrorKind::kConditionsFailed, "strong protocol needs G0 and G1");
  Strategy s;
  s.n = rel.n();
  s.omega = rel.omega();
  s.messages = g.order();
  s.encoder.resize(static_cast<std::size_t>(s.n * s.omega));
  s.decoder.assign(static_cast<std::size_t>(s.messages * s.n), std::vector<Rational>(static_cast<std::size_t>(s.omega)));
  std::vector<char> filled(static_cast<std::size_t>(s.messages), 0);
  for (int x = 1; x <= s.n; ++x) {
    for (int a = 0; a < s.omega; ++a) {
      const int msg = cliques.vertex(x, a) - 1;
      s.encoder[static_cast<std::size_t>((x - 1) * s.omega + a)] = msg;
      if (filled[static_cast<std::size_t>(msg)]) continue;
      filled[static_cast<std::size_t>(msg)] = 1;
      for (int y = 1; y <= s.n; ++y) {
        const auto valid = rel.valid_outputs(x, a, y);
        auto& dist = s.decoder[static_cast<std::size_t>(msg * s.n + (y - 1))];
        for (int b : valid) dist[static_cast<std::size_t>(b)] = Rational(1, static_cast<std::int64_t>(valid.size()));
      }
    }
  }
  return s;
}

bool verify_classical_lower_bound(const Graph& g, const Relation& rel, int m, int cap) {
  if (g.order() > cap) throw Error(ErrorKind::kCapExceeded, "graph exceeds the exhaustive-search cap");
  if (m < 1 || m >= g.order()) throw Error(ErrorKind::kInvalidParams, "lower-bound check needs 1 <= m < |V|");
  if (rel.omega() > 63) throw Error(ErrorKind::kCapExceeded, "omega too large for label masks");
  const int n = rel.n();
  const int rows = rel.rows();
  std::vector<std::uint64_t> valid(static_cast<std::size_t>(rows * n), 0);
  for (int r = 0; r < rows; ++r)
    for (int y = 1; y <= n; ++y)
      for (int b : rel.valid_outputs(r / rel.omega() + 1, r % rel.omega(), y))
        valid[static_cast<std::size_t>(r * n + (y - 1))] |= std::uint64_t{1} << b;

  // Per (message, C_y): intersection and union of the valid sets of the rows sent as that
  // message. A decoder support D must satisfy union <= D <= intersection with D nonempty.
  constexpr std::uint64_t kAll = ~std::uint64_t{0};
  std::vector<std::uint64_t> inter(static_cast<std::size_t>(m * n), kAll);
  std::vector<std::uint64_t> uni(static_cast<std::size_t>(m * n), 0);

  std::function<bool(int, int)> feasible_from = [&](int r, int used) -> bool {
    if (r == rows) return true;
    const int limit = std::min(used + 1, m);
    for (int msg = 0; msg < limit; ++msg) {
      std::vector<std::uint64_t> saved_i(static_cast<std::size_t>(n)), saved_u(static_cast<std::size_t>(n));
      bool ok = true;
      for (int y = 0; y < n; ++y) {
        const auto k = static_cast<std::size_t>(msg * n + y);
        saved_i[static_cast<std::size_t>(y)] = inter[k];
        saved_u[static_cast<std::size_t>(y)] = uni[k];
        inter[k] &= valid[static_cast<std::size_t>(r * n + y)];
        uni[k] |= valid[static_cast<std::size_t>(r * n + y)];
        if (inter[k] == 0 || (uni[k] & ~inter[k]) != 0) ok = false;
      }
      if (ok && feasible_from(r + 1, std::max(used, msg + 1))) return true;
      for (int y = 0; y < n; ++y) {
        const auto k = static_cast<std::size_t>(msg * n + y);
        inter[k] = saved_i[static_cast<std::size_t>(y)];
        uni[k] = saved_u[static_cast<std::size_t>(y)];
      }
    }
    return false;
  };
  return !feasible_from(0, 0);
}

std::vector<Strategy> enumerate_T0_strategies(const Graph&, const Relation& rel, int m, int max_strategies) {
  if (m != rel.omega()) throw Error(ErrorKind::kInvalidParams, "enumeration is defined for m = omega");
  std::vector<Strategy> out;
  bool overflow = false;
  search_permutations(rel, false, [&](const Sigmas& s) {
    if (static_cast<int>(out.size()) >= max_strategies) {
      overflow = true;
      return false;
    }
    out.push_back(strategy_from_permutations(s));
    return true;
  });
  if (overflow) throw Error(ErrorKind::kCapExceeded, "more T0 strategies than the cap allows");
  return out;
}

std::vector<int> strategy_bits(const Strategy& s, const Strategy& base) {
  const auto sig = permutations_of(s);
  const auto ref = permutations_of(base);
  std::vector<int> bits;
  for (std::size_t j = 1; j < sig.size(); ++j) bits.push_back(sig[j] != ref[j] ? 1 : 0);
  return bits;
}

PublicCoinMixture mixture_for_T1(const Graph& g, const Relation& rel) {
  const auto all = enumerate_T0_strategies(g, rel, rel.omega());
  if (all.empty()) throw Error(ErrorKind::kSearchExhausted, "no omega-message T0 strategy exists");
  const auto base = permutations_of(all.front());
  PublicCoinMixture mix;
  mix.members.push_back(all.front());
  for (int i = 1; i < rel.n(); ++i) {
    int best = -1;
    int best_distance = 0;
    for (std::size_t s = 0; s < all.size(); ++s) {
      const auto sig = permutations_of(all[s]);
      if (sig[static_cast<std::size_t>(i)] == base[static_cast<std::size_t>(i)]) continue;
      int distance = 0;
      for (std::size_t j = 0; j < sig.size(); ++j) distance += sig[j] != base[j] ? 1 : 0;
      if (best < 0 || distance < best_distance) {
        best = static_cast<int>(s);
        best_distance = distance;
      }
    }
    if (best >= 0) mix.members.push_back(all[static_cast<std::size_t>(best)]);
  }
  mix.coin_inputs = static_cast<int>(mix.members.size());
  mix.weights.assign(mix.members.size(), Rational(1, mix.coin_inputs));
  return mix;
}

T2Mixture mixture_for_T2(const Graph& g, const Relation& rel, int max_size) {
  const auto all = enumerate_T0_strategies(g, rel, rel.omega());
  if (all.empty()) throw Error(ErrorKind::kSearchExhausted, "no omega-message T0 strategy exists");
  const auto& tuples = rel.tuples();
  const int eta = rel.eta();
  std::vector<std::vector<int>> hits(all.size());
  for (std::size_t s = 0; s < all.size(); ++s) {
    const ExactTable t = all[s].table();
    for (const auto& tu : tuples) hits[s].push_back(t(tu.x, tu.a, tu.y, tu.b) == Rational(1) ? 1 : 0);
  }

  for (int size = 1; size <= max_size; ++size) {
    // Each in-relation tuple must be hit by at least size / eta of the chosen strategies.
    const int need = (size + eta - 1) / eta;
    std::vector<int> counts(tuples.size(), 0);
    std::vector<int> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
      const int left = size - static_cast<int>(chosen.size());
      for (std::size_t t = 0; t < tuples.size(); ++t)
        if (counts[t] + left < need) return false;
      if (left == 0) return true;
      for (std::size_t s = start; s < all.size(); ++s) {
        chosen.push_back(static_cast<int>(s));
        for (std::size_t t = 0; t < tuples.size(); ++t) counts[t] += hits[s][t];
        if (rec(s)) return true;
        for (std::size_t t = 0; t < tuples.size(); ++t) counts[t] -= hits[s][t];
        chosen.pop_back();
      }
      return false;
    };
    if (!rec(0)) continue;

    T2Mixture out;
    std::map<int, int> multiplicity;
    for (int s : chosen) ++multiplicity[s];
    for (auto [s, k] : multiplicity) {
      out.mixture.members.push_back(all[static_cast<std::size_t>(s)]);
      out.mixture.weights.emplace_back(k, size);
    }
    out.mixture.coin_inputs = size;
    for (int s : chosen) out.bit_rows.push_back(strategy_bits(all[static_cast<std::size_t>(s)], all.front()));
    if (!check_T2(out.mixture.table(), rel))
      throw Error(ErrorKind::kInconsistent, "selected mixture does not reach the optimal payoff");
    return out;
  }
  throw Error(ErrorKind::kCapExceeded, "no optimal mixture within the size cap");
}

bool is_orthogonal_array(const BinaryArray& rows, int t) {
  if (rows.empty() || (t != 1 && t != 2)) return false;
  const std::size_t k = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != k) return false;
  const std::size_t n = rows.size();
  const std::size_t cells = t == 1 ? 2 : 4;
  if (n % cells != 0) return false;
  if (t == 1 || k < 2) {
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t ones = 0;
      for (const auto& r : rows) ones += r[c] != 0 ? 1 : 0;
      if (2 * ones != n) return false;
    }
    return true;
  }
  for (std::size_t c1 = 0; c1 < k; ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < k; ++c2) {
      std::size_t count[4] = {0, 0, 0, 0};
      for (const auto& r : rows) ++count[(r[c1] != 0 ? 2 : 0) + (r[c2] != 0 ? 1 : 0)];
      for (auto v : count)
        if (v * 4 != n) return false;
    }
  }
  return true;
}

BinaryArray find_orthogonal_array(int rows, int k) {
  if (rows > 24) throw Error(ErrorKind::kCapExceeded, "OA search limited to 24 rows");
  if (rows < 4 || rows % 4 != 0 || k < 2) return {};
  const int half = rows / 2;
  // Canonical form: row 0 all zeros, column 0 = 0^{N/2} 1^{N/2}, remaining columns start with 0
  // and increase strictly as integers (two equal columns can never pass strength 2).
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << rows); ++v) {
    if (v & 1) continue;
    if (__builtin_popcountll(v) != half) continue;
    candidates.push_back(v);
  }
  const std::uint64_t first = ((std::uint64_t{1} << rows) - 1) & ~((std::uint64_t{1} << half) - 1);
  auto balanced_pair = [&](std::uint64_t u, std::uint64_t v) {
    return __builtin_popcountll(u & v) * 4 == rows;
  };
  std::vector<std::uint64_t> cols{first};
  std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
    if (static_cast<int>(cols.size()) == k) return true;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      bool ok = true;
      for (auto c : cols) ok = ok && balanced_pair(c, candidates[i]);
      if (!ok) continue;
      cols.push_back(candidates[i]);
      if (rec(i + 1)) return true;
      cols.pop_back();
    }
    return false;
  };
  if (!rec(0)) return {};
  BinaryArray out(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(k)));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < k; ++c) out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<int>((cols[static_cast<std::size_t>(c)] >> r) & 1);
  return out;
}

int min_oa_rows(int k, int cap) {
  if (k < 1) throw Error(ErrorKind::kInvalidParams, "OA width must be positive");
  if (k > cap) throw Error(ErrorKind::kCapExceeded, "OA width exceeds the search cap");
  if (k == 1) return 2;
  for (int rows = 4; rows <= 4 * (k + 1); rows += 4)
    if (!find_orthogonal_array(rows, k).empty()) return rows;
  throw Error(ErrorKind::kSearchExhausted, "no OA found within 4(k+1) rows");
}

}  // namespace cliquecomm
