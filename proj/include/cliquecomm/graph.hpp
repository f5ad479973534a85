#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace cliquecomm {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 1..order.
class Graph {
 public:
  // Throws kEmptyGraph for order < 1, kInvalidParams for loops or out-of-range endpoints.
  explicit Graph(int order, const std::vector<Edge>& edges = {});

  int order() const { return order_; }
  bool adjacent(int u, int v) const { return adj_[index(u, v)] != 0; }
  int degree(int v) const;
  std::size_t edge_count() const { return edge_count_; }
  // Sorted list of (i, j) with i < j.
  std::vector<Edge> edges() const;
  std::vector<int> neighbours(int v) const;

  bool operator==(const Graph& other) const = default;

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(v - 1);
  }

  int order_;
  std::size_t edge_count_ = 0;
  std::vector<char> adj_;
};

// Maximum cliques of a host graph, each an ascending vertex list of size omega.
class CliqueSet {
 public:
  CliqueSet() = default;
  // Validates that every list is a maximum clique of g and that sizes agree.
  CliqueSet(const Graph& g, std::vector<std::vector<int>> cliques);

  int omega() const { return omega_; }
  int count() const { return static_cast<int>(cliques_.size()); }
  // 1-based clique index.
  const std::vector<int>& clique(int x) const { return cliques_.at(static_cast<std::size_t>(x - 1)); }
  const std::vector<std::vector<int>>& all() const { return cliques_; }
  // Vertex at label position a of clique x.
  int vertex(int x, int a) const { return clique(x).at(static_cast<std::size_t>(a)); }
  // Position of v in clique x, or -1.
  int position(int x, int v) const;

  bool operator==(const CliqueSet& other) const = default;

 private:
  friend CliqueSet enumerate_maximum_cliques(const Graph& g);

  int omega_ = 0;
  std::vector<std::vector<int>> cliques_;
};

// Bron-Kerbosch with pivoting, filtered to the largest size, sorted lexicographically.
CliqueSet enumerate_maximum_cliques(const Graph& g);

Graph gen_disconnected(int n, int omega);
Graph gen_nncc(int n, int omega, int r);
Graph gen_paley(int q);
Graph complement(const Graph& g);

bool is_prime(int q);

struct ConditionReport {
  bool g0 = false;
  bool g1 = false;
  // |V| minus the vertex connectivity of the complement; empty above the cap.
  std::optional<int> g2_k;
  // g2_k within [omega, |V|).
  std::optional<bool> g2;
};

ConditionReport check_conditions(const Graph& g, const CliqueSet& cliques, int g2_cap = 16);

// Vertex connectivity by exhaustive search; a complete graph on m vertices gives m - 1.
int vertex_connectivity(const Graph& g);

// Number of common neighbours of u and v.
int common_neighbours(const Graph& g, int u, int v);

}  // namespace cliquecomm
