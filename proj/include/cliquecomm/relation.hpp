#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "cliquecomm/graph.hpp"

namespace cliquecomm {

// Clique x is 1-based; label a is the 0-based position of the 1-coloured vertex.
struct CliqueLabel {
  int clique = 1;
  int label = 0;
  auto operator<=>(const CliqueLabel&) const = default;
};

struct BinaryColouring {
  std::vector<int> vertices;
  std::vector<int> bits;
};

struct RelationTuple {
  int x = 1;
  int a = 0;
  int y = 1;
  int b = 0;
  auto operator<=>(const RelationTuple&) const = default;
};

// Sorted, duplicate-free tuple set over n cliques of size omega.
class Relation {
 public:
  Relation(int n, int omega, std::vector<RelationTuple> tuples);

  int n() const { return n_; }
  int omega() const { return omega_; }
  // Number of table rows (and columns): n * omega.
  int rows() const { return n_ * omega_; }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<RelationTuple>& tuples() const { return tuples_; }

  bool contains(int x, int a, int y, int b) const { return member_[cell(x, a, y, b)] != 0; }
  bool contains(const RelationTuple& t) const { return contains(t.x, t.a, t.y, t.b); }
  std::vector<int> valid_outputs(int x, int a, int y) const;
  // Largest number of valid outputs over all (x, a, y).
  int eta() const;
  bool total() const;

  bool operator==(const Relation& other) const {
    return n_ == other.n_ && omega_ == other.omega_ && tuples_ == other.tuples_;
  }

 private:
  std::size_t cell(int x, int a, int y, int b) const {
    const auto r = static_cast<std::size_t>((x - 1) * omega_ + a);
    const auto c = static_cast<std::size_t>((y - 1) * omega_ + b);
    return r * static_cast<std::size_t>(rows()) + c;
  }

  int n_;
  int omega_;
  std::vector<RelationTuple> tuples_;
  std::vector<char> member_;
};

BinaryColouring label_to_colouring(const std::vector<int>& clique, int a);
int colouring_to_label(const BinaryColouring& colouring);

// Shared vertices must agree and no edge between the two cliques may have both ends coloured 1.
bool consistent(const Graph& g, const CliqueSet& cliques, int x, int a, int y, int b);

Relation build_relation(const Graph& g, const CliqueSet& cliques);

struct InferredGraph {
  Graph graph;
  // Inferred vertex for row (x, a), indexed by (x - 1) * omega + a.
  std::vector<int> vertex_of_row;
};

// Rows with identical membership patterns are one vertex; two vertices are adjacent when the
// tuple joining them is excluded. Vertices are numbered by first appearance over rows.
InferredGraph infer_graph(const Relation& rel, int n, int omega);

}  // namespace cliquecomm
