#include "cliquecomm/relation.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cliquecomm/error.hpp"

namespace cliquecomm {

Relation::Relation(int n, int omega, std::vector<RelationTuple> tuples)
    : n_(n), omega_(omega), tuples_(std::move(tuples)) {
  if (n < 1 || omega < 1) throw Error(ErrorKind::kInvalidParams, "relation needs n >= 1 and omega >= 1");
  for (const auto& t : tuples_) {
    if (t.x < 1 || t.x > n || t.y < 1 || t.y > n || t.a < 0 || t.a >= omega || t.b < 0 || t.b >= omega)
      throw Error(ErrorKind::kInvalidParams, "relation tuple out of range");
  }
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
  member_.assign(static_cast<std::size_t>(rows()) * static_cast<std::size_t>(rows()), 0);
  for (const auto& t : tuples_) member_[cell(t.x, t.a, t.y, t.b)] = 1;
}

std::vector<int> Relation::valid_outputs(int x, int a, int y) const {
  std::vector<int> out;
  for (int b = 0; b < omega_; ++b)
    if (contains(x, a, y, b)) out.push_back(b);
  return out;
}

int Relation::eta() const {
  int best = 0;
  for (int x = 1; x <= n_; ++x)
    for (int a = 0; a < omega_; ++a)
      for (int y = 1; y <= n_; ++y) best = std::max(best, static_cast<int>(valid_outputs(x, a, y).size()));
  return best;
}

bool Relation::total() const {
  for (int x = 1; x <= n_; ++x)
    for (int a = 0; a < omega_; ++a)
      for (int y = 1; y <= n_; ++y)
        if (valid_outputs(x, a, y).empty()) return false;
  return true;
}

BinaryColouring label_to_colouring(const std::vector<int>& clique, int a) {
  if (a < 0 || a >= static_cast<int>(clique.size()))
    throw Error(ErrorKind::kInvalidParams, "label " + std::to_string(a) + " out of range");
  BinaryColouring c;
  c.vertices = clique;
  std::sort(c.vertices.begin(), c.vertices.end());
  c.bits.assign(c.vertices.size(), 0);
  c.bits[static_cast<std::size_t>(a)] = 1;
  return c;
}

int colouring_to_label(const BinaryColouring& colouring) {
  int label = -1;
  for (std::size_t i = 0; i < colouring.bits.size(); ++i) {
    if (colouring.bits[i] == 0) continue;
    if (label >= 0) throw Error(ErrorKind::kInvalidParams, "colouring has more than one 1");
    label = static_cast<int>(i);
  }
  if (label < 0) throw Error(ErrorKind::kInvalidParams, "colouring has no 1");
  return label;
}

bool consistent(const Graph& g, const CliqueSet& cliques, int x, int a, int y, int b) {
  const BinaryColouring f = label_to_colouring(cliques.clique(x), a);
  const BinaryColouring h = label_to_colouring(cliques.clique(y), b);
  for (std::size_t i = 0; i < f.vertices.size(); ++i) {
    for (std::size_t j = 0; j < h.vertices.size(); ++j) {
      const int p = f.vertices[i];
      const int q = h.vertices[j];
      if (p == q) {
        if (f.bits[i] != h.bits[j]) return false;
      } else if (g.adjacent(p, q) && f.bits[i] == 1 && h.bits[j] == 1) {
        return false;
      }
    }
  }
  return true;
}

Relation build_relation(const Graph& g, const CliqueSet& cliques) {
  const int n = cliques.count();
  const int omega = cliques.omega();
  std::vector<RelationTuple> tuples;
  for (int x = 1; x <= n; ++x)
    for (int a = 0; a < omega; ++a)
      for (int y = 1; y <= n; ++y)
        for (int b = 0; b < omega; ++b)
          if (consistent(g, cliques, x, a, y, b)) tuples.push_back({x, a, y, b});
  return Relation(n, omega, std::move(tuples));
}

InferredGraph infer_graph(const Relation& rel, int n, int omega) {
  if (rel.n() != n || rel.omega() != omega)
    throw Error(ErrorKind::kDimensionMismatch, "relation shape does not match (n, omega)");
  if (!rel.total()) throw Error(ErrorKind::kInconsistent, "relation is not total");
  for (int x = 1; x <= n; ++x)
    for (int a = 0; a < omega; ++a)
      if (rel.valid_outputs(x, a, x) != std::vector<int>{a})
        throw Error(ErrorKind::kInconsistent, "diagonal determinism fails at clique " + std::to_string(x));

  const int rows = n * omega;
  auto signature = [&](int r) {
    std::vector<char> sig(static_cast<std::size_t>(rows));
    for (int c = 0; c < rows; ++c)
      sig[static_cast<std::size_t>(c)] = rel.contains(r / omega + 1, r % omega, c / omega + 1, c % omega) ? 1 : 0;
    return sig;
  };

  std::map<std::vector<char>, int> class_of;
  std::vector<int> vertex_of_row(static_cast<std::size_t>(rows));
  std::vector<int> representative;
  for (int r = 0; r < rows; ++r) {
    auto [it, inserted] = class_of.emplace(signature(r), static_cast<int>(representative.size()) + 1);
    if (inserted) representative.push_back(r);
    vertex_of_row[static_cast<std::size_t>(r)] = it->second;
  }

  const int order = static_cast<int>(representative.size());
  std::vector<int> adj(static_cast<std::size_t>(order * order), -1);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < rows; ++c) {
      const int u = vertex_of_row[static_cast<std::size_t>(r)];
      const int v = vertex_of_row[static_cast<std::size_t>(c)];
      if (u == v) continue;
      const int excluded = rel.contains(r / omega + 1, r % omega, c / omega + 1, c % omega) ? 0 : 1;
      for (auto idx : {(u - 1) * order + (v - 1), (v - 1) * order + (u - 1)}) {
        int& slot = adj[static_cast<std::size_t>(idx)];
        if (slot >= 0 && slot != excluded)
          throw Error(ErrorKind::kInconsistent, "adjacency between inferred vertices is ambiguous");
        slot = excluded;
      }
    }
  }
  std::vector<Edge> edges;
  for (int u = 1; u <= order; ++u)
    for (int v = u + 1; v <= order; ++v)
      if (adj[static_cast<std::size_t>((u - 1) * order + (v - 1))] == 1) edges.emplace_back(u, v);
  return {Graph(order, edges), std::move(vertex_of_row)};
}

}  // namespace cliquecomm
