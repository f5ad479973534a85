#pragma once

// Independent reference implementations used to freeze expected values. Nothing here calls
// the library routine it is checking.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "cliquecomm/graph.hpp"
#include "cliquecomm/prob_table.hpp"
#include "cliquecomm/relation.hpp"
#include "cliquecomm/rng.hpp"

namespace oracle {

using cliquecomm::Graph;
using cliquecomm::RelationTuple;

// The running example: two triangles sharing vertex 3.
inline Graph example_graph() { return Graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}); }
inline std::vector<std::vector<int>> example_cliques() { return {{1, 2, 3}, {3, 4, 5}}; }

// The sixteen reference tuples of the running example.
inline std::vector<RelationTuple> example_tuples() {
  return {{1, 0, 2, 1}, {1, 0, 2, 2}, {1, 1, 2, 1}, {1, 1, 2, 2}, {1, 2, 2, 0}, {2, 1, 1, 0},
          {2, 1, 1, 1}, {2, 2, 1, 0}, {2, 2, 1, 1}, {2, 0, 1, 2}, {1, 0, 1, 0}, {1, 1, 1, 1},
          {1, 2, 1, 2}, {2, 0, 2, 0}, {2, 1, 2, 1}, {2, 2, 2, 2}};
}

// Deterministic tables transcribed row by row: rows (C1,0..2),(C2,0..2), same column order.
inline std::vector<std::vector<int>> reversed_table() {
  return {{1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 1, 0, 0},
          {0, 0, 1, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 1}};
}
inline std::vector<std::vector<int>> rotated_table() {
  return {{1, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 1}, {0, 0, 1, 1, 0, 0},
          {0, 0, 1, 1, 0, 0}, {1, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 1}};
}

inline cliquecomm::ExactTable exact_from(const std::vector<std::vector<int>>& m, int n, int omega) {
  cliquecomm::ExactTable t(n, omega);
  for (int r = 0; r < t.rows(); ++r)
    for (int c = 0; c < t.rows(); ++c) t.at(r, c) = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return t;
}

inline Graph random_graph(int order, double density, cliquecomm::Rng& rng) {
  std::vector<cliquecomm::Edge> edges;
  for (int u = 1; u <= order; ++u)
    for (int v = u + 1; v <= order; ++v)
      if (rng.uniform() < density) edges.emplace_back(u, v);
  return Graph(order, edges);
}

// Every subset, keep the largest complete ones.
inline std::vector<std::vector<int>> max_cliques(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> best;
  std::size_t size = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) s.push_back(v + 1);
    bool complete = true;
    for (std::size_t i = 0; i < s.size() && complete; ++i)
      for (std::size_t j = i + 1; j < s.size() && complete; ++j) complete = g.adjacent(s[i], s[j]);
    if (!complete || s.size() < size) continue;
    if (s.size() > size) {
      best.clear();
      size = s.size();
    }
    best.push_back(s);
  }
  std::sort(best.begin(), best.end());
  return best;
}

// Pairs of vertices from two different cliques must be told apart by some vertex.
inline bool g1(const Graph& g, const std::vector<std::vector<int>>& cliques) {
  for (std::size_t x = 0; x < cliques.size(); ++x)
    for (std::size_t y = 0; y < cliques.size(); ++y) {
      if (x == y) continue;
      for (int v : cliques[x])
        for (int w : cliques[y]) {
          if (v == w) continue;
          bool found = false;
          for (int u = 1; u <= g.order(); ++u) found = found || (g.adjacent(u, v) != g.adjacent(u, w));
          if (!found) return false;
        }
    }
  return true;
}

// (x, a, y, b) is admissible iff the chosen vertices coincide or are non-adjacent.
inline std::set<RelationTuple> relation(const Graph& g, const std::vector<std::vector<int>>& cliques) {
  std::set<RelationTuple> out;
  const int n = static_cast<int>(cliques.size());
  const int omega = static_cast<int>(cliques[0].size());
  for (int x = 1; x <= n; ++x)
    for (int a = 0; a < omega; ++a)
      for (int y = 1; y <= n; ++y)
        for (int b = 0; b < omega; ++b) {
          const int v = cliques[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(a)];
          const int u = cliques[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(b)];
          if (u == v || !g.adjacent(u, v)) out.insert({x, a, y, b});
        }
  return out;
}

// Number of distinct deterministic T0 tables using omega messages: try every tuple of
// per-clique permutations with clique 1 fixed to the identity.
inline int count_t0_tables(const cliquecomm::Relation& rel) {
  const int n = rel.n();
  const int omega = rel.omega();
  std::vector<int> id(static_cast<std::size_t>(omega));
  for (int i = 0; i < omega; ++i) id[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> perms;
  std::vector<int> p = id;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  int count = 0;
  std::vector<std::vector<int>> sigma(static_cast<std::size_t>(n), id);
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      // Input (x, a) sends m with sigma_x(m) = a; Bob answers sigma_y(m).
      for (int x = 1; x <= n; ++x)
        for (int m = 0; m < omega; ++m)
          for (int y = 1; y <= n; ++y)
            if (!rel.contains(x, sigma[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(m)], y,
                              sigma[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(m)]))
              return;
      ++count;
      return;
    }
    for (const auto& q : perms) {
      sigma[static_cast<std::size_t>(j)] = q;
      rec(j + 1);
    }
  };
  rec(1);
  return count;
}

// Any map from the n*omega inputs to m messages, with a randomised decoder: feasible iff every
// message class has, for each C_y, the same nonempty set of valid answers across its inputs.
// Rows are assigned in order and a row may only join a class whose members answer alike.
inline bool some_m_message_protocol(const cliquecomm::Relation& rel, int m) {
  const int rows = rel.rows();
  std::vector<std::vector<std::vector<int>>> valid(static_cast<std::size_t>(rows));
  for (int row = 0; row < rows; ++row) {
    for (int y = 1; y <= rel.n(); ++y) {
      std::vector<int> v;
      for (int b = 0; b < rel.omega(); ++b)
        if (rel.contains(row / rel.omega() + 1, row % rel.omega(), y, b)) v.push_back(b);
      if (v.empty()) return false;
      valid[static_cast<std::size_t>(row)].push_back(v);
    }
  }
  std::vector<int> first(static_cast<std::size_t>(m), -1);
  std::function<bool(int)> rec = [&](int r) -> bool {
    if (r == rows) return true;
    for (int msg = 0; msg < m; ++msg) {
      const int f = first[static_cast<std::size_t>(msg)];
      if (f >= 0 && valid[static_cast<std::size_t>(f)] != valid[static_cast<std::size_t>(r)]) continue;
      if (f < 0) first[static_cast<std::size_t>(msg)] = r;
      if (rec(r + 1)) return true;
      if (f < 0) first[static_cast<std::size_t>(msg)] = -1;
    }
    return false;
  };
  return rec(0);
}

// Probability that k draws from {events..., rest} hit every event, by summing over all
// outcome sequences.
inline double coverage_by_sequences(const std::vector<double>& p, int k) {
  const int m = static_cast<int>(p.size());
  double rest = 1.0;
  for (double v : p) rest -= v;
  const int outcomes = m + 1;
  double total = 0.0;
  std::vector<int> seq(static_cast<std::size_t>(k), 0);
  std::function<void(int, double)> rec = [&](int i, double prob) {
    if (i == k) {
      std::vector<char> hit(static_cast<std::size_t>(m), 0);
      for (int o : seq)
        if (o < m) hit[static_cast<std::size_t>(o)] = 1;
      if (std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; })) total += prob;
      return;
    }
    for (int o = 0; o < outcomes; ++o) {
      seq[static_cast<std::size_t>(i)] = o;
      rec(i + 1, prob * (o < m ? p[static_cast<std::size_t>(o)] : rest));
    }
  };
  rec(0, 1.0);
  return total;
}

// Smallest N for which some N x k binary array has every column balanced and every column
// pair showing each of 00, 01, 10, 11 exactly N/4 times; plain DFS over column bitmasks.
inline int min_oa_rows(int k) {
  for (int n = 2; n <= 16; n += 2) {
    if (k >= 2 && n % 4 != 0) continue;
    std::vector<std::uint32_t> cols;
    for (std::uint32_t c = 0; c < (1u << n); ++c)
      if (__builtin_popcount(c) * 2 == n) cols.push_back(c);
    std::vector<std::uint32_t> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
      if (static_cast<int>(chosen.size()) == k) return true;
      for (std::size_t i = from; i < cols.size(); ++i) {
        bool ok = true;
        for (auto c : chosen) ok = ok && __builtin_popcount(c & cols[i]) * 4 == n;
        if (!ok) continue;
        chosen.push_back(cols[i]);
        if (rec(i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (rec(0)) return n;
  }
  return -1;
}

}  // namespace oracle
