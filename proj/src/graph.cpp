#include "cliquecomm/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cliquecomm/error.hpp"

namespace cliquecomm {

Graph::Graph(int order, const std::vector<Edge>& edges) : order_(order) {
  if (order < 1) throw Error(ErrorKind::kEmptyGraph, "graph order must be positive");
  adj_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0);
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > order || v > order)
      throw Error(ErrorKind::kInvalidParams,
                  "edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v) throw Error(ErrorKind::kInvalidParams, "self-loop at vertex " + std::to_string(u));
    if (!adj_[index(u, v)]) ++edge_count_;
    adj_[index(u, v)] = 1;
    adj_[index(v, u)] = 1;
  }
}

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 1; u <= order_; ++u) d += adjacent(v, u) ? 1 : 0;
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int i = 1; i <= order_; ++i)
    for (int j = i + 1; j <= order_; ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<int> Graph::neighbours(int v) const {
  std::vector<int> out;
  for (int u = 1; u <= order_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

CliqueSet::CliqueSet(const Graph& g, std::vector<std::vector<int>> cliques) {
  if (cliques.empty()) throw Error(ErrorKind::kInvalidParams, "clique set is empty");
  const CliqueSet reference = enumerate_maximum_cliques(g);
  for (auto& c : cliques) {
    std::sort(c.begin(), c.end());
    if (c.size() != static_cast<std::size_t>(reference.omega()))
      throw Error(ErrorKind::kInvalidParams, "clique size differs from the clique number");
    if (!std::binary_search(reference.all().begin(), reference.all().end(), c))
      throw Error(ErrorKind::kInvalidParams, "listed vertex set is not a maximum clique");
  }
  std::vector<std::vector<int>> sorted = cliques;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::kInvalidParams, "duplicate clique");
  omega_ = reference.omega();
  cliques_ = std::move(cliques);
}

int CliqueSet::position(int x, int v) const {
  const auto& c = clique(x);
  auto it = std::lower_bound(c.begin(), c.end(), v);
  if (it == c.end() || *it != v) return -1;
  return static_cast<int>(it - c.begin());
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  int best = -1;
  for (const auto* set : {&p, &x}) {
    for (int u : *set) {
      int cnt = 0;
      for (int w : p) cnt += g.adjacent(u, w) ? 1 : 0;
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
  }
  std::vector<int> candidates;
  for (int v : p)
    if (!g.adjacent(pivot, v)) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> np, nx;
    for (int w : p)
      if (g.adjacent(v, w)) np.push_back(w);
    for (int w : x)
      if (g.adjacent(v, w)) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

CliqueSet enumerate_maximum_cliques(const Graph& g) {
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 1);
  std::vector<std::vector<int>> maximal;
  std::vector<int> r;
  bron_kerbosch(g, r, all, {}, maximal);
  std::size_t omega = 0;
  for (const auto& c : maximal) omega = std::max(omega, c.size());
  std::vector<std::vector<int>> maximum;
  for (auto& c : maximal) {
    if (c.size() != omega) continue;
    std::sort(c.begin(), c.end());
    maximum.push_back(std::move(c));
  }
  std::sort(maximum.begin(), maximum.end());
  CliqueSet out;
  out.omega_ = static_cast<int>(omega);
  out.cliques_ = std::move(maximum);
  return out;
}

Graph gen_disconnected(int n, int omega) {
  if (n < 1 || omega < 2) throw Error(ErrorKind::kInvalidParams, "disconnected family needs n >= 1, omega >= 2");
  std::vector<Edge> edges;
  for (int k = 0; k < n; ++k)
    for (int i = 1; i <= omega; ++i)
      for (int j = i + 1; j <= omega; ++j) edges.emplace_back(k * omega + i, k * omega + j);
  return Graph(n * omega, edges);
}

Graph gen_nncc(int n, int omega, int r) {
  if (n < 1 || omega < 2) throw Error(ErrorKind::kInvalidParams, "nncc family needs n >= 1, omega >= 2");
  if (r < 1 || 2 * r >= omega) throw Error(ErrorKind::kInvalidParams, "nncc family needs 1 <= r < omega/2");
  // Clique k occupies the consecutive block starting at k*(omega-r)+1.
  std::vector<Edge> edges;
  const int step = omega - r;
  for (int k = 0; k < n; ++k)
    for (int i = 1; i <= omega; ++i)
      for (int j = i + 1; j <= omega; ++j) edges.emplace_back(k * step + i, k * step + j);
  return Graph(n * step + r, edges);
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Graph gen_paley(int q) {
  if (!is_prime(q) || q % 4 != 1)
    throw Error(ErrorKind::kInvalidParams, "Paley graph needs a prime q with q = 1 mod 4");
  std::vector<char> residue(static_cast<std::size_t>(q), 0);
  for (int x = 1; x < q; ++x) residue[static_cast<std::size_t>((x * x) % q)] = 1;
  std::vector<Edge> edges;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      if (residue[static_cast<std::size_t>(((j - i) % q + q) % q)]) edges.emplace_back(i + 1, j + 1);
  return Graph(q, edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int i = 1; i <= g.order(); ++i)
    for (int j = i + 1; j <= g.order(); ++j)
      if (!g.adjacent(i, j)) edges.emplace_back(i, j);
  return Graph(g.order(), edges);
}

int common_neighbours(const Graph& g, int u, int v) {
  int c = 0;
  for (int w = 1; w <= g.order(); ++w) c += (g.adjacent(u, w) && g.adjacent(v, w)) ? 1 : 0;
  return c;
}

namespace {

// Connectivity of g after deleting the flagged vertices.
bool connected_without(const Graph& g, const std::vector<char>& removed) {
  int start = 0;
  int remaining = 0;
  for (int v = 1; v <= g.order(); ++v)
    if (!removed[static_cast<std::size_t>(v)]) {
      ++remaining;
      if (!start) start = v;
    }
  if (remaining <= 1) return true;
  std::vector<char> seen(removed.size(), 0);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 1; u <= g.order(); ++u) {
      auto ui = static_cast<std::size_t>(u);
      if (!removed[ui] && !seen[ui] && g.adjacent(v, u)) {
        seen[ui] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == remaining;
}

bool cut_of_size(const Graph& g, int size, int next, std::vector<char>& removed) {
  if (size == 0) return !connected_without(g, removed);
  for (int v = next; v <= g.order() - size + 1; ++v) {
    removed[static_cast<std::size_t>(v)] = 1;
    bool found = cut_of_size(g, size - 1, v + 1, removed);
    removed[static_cast<std::size_t>(v)] = 0;
    if (found) return true;
  }
  return false;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  std::vector<char> removed(static_cast<std::size_t>(g.order()) + 1, 0);
  for (int s = 0; s <= g.order() - 2; ++s)
    if (cut_of_size(g, s, 1, removed)) return s;
  return g.order() - 1;
}

ConditionReport check_conditions(const Graph& g, const CliqueSet& cliques, int g2_cap) {
  ConditionReport rep;
  const int nv = g.order();
  // Cliques containing each vertex.
  std::vector<std::vector<int>> membership(static_cast<std::size_t>(nv) + 1);
  for (int x = 1; x <= cliques.count(); ++x)
    for (int v : cliques.clique(x)) membership[static_cast<std::size_t>(v)].push_back(x);

  rep.g0 = true;
  for (int v = 1; v <= nv; ++v)
    if (membership[static_cast<std::size_t>(v)].empty()) rep.g0 = false;

  // Non-adjacent vertices from different cliques need a vertex adjacent to exactly one of
  // them. Adjacent pairs are always separated by either endpoint.
  rep.g1 = true;
  for (int v = 1; v <= nv && rep.g1; ++v) {
    const auto& mv = membership[static_cast<std::size_t>(v)];
    if (mv.empty()) continue;
    for (int w = v + 1; w <= nv && rep.g1; ++w) {
      const auto& mw = membership[static_cast<std::size_t>(w)];
      if (mw.empty() || g.adjacent(v, w)) continue;
      bool distinct_cliques = false;
      for (int a : mv)
        for (int b : mw) distinct_cliques = distinct_cliques || a != b;
      if (!distinct_cliques) continue;
      bool separated = false;
      for (int u = 1; u <= nv && !separated; ++u) separated = g.adjacent(u, v) != g.adjacent(u, w);
      if (!separated) rep.g1 = false;
    }
  }

  if (nv <= g2_cap) {
    const int k = nv - vertex_connectivity(complement(g));
    rep.g2_k = k;
    rep.g2 = k >= cliques.omega() && k < nv;
  }
  return rep;
}

}  // namespace cliquecomm
