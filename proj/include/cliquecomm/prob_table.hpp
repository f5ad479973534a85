#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/rational.hpp>

#include "cliquecomm/error.hpp"
#include "cliquecomm/graph.hpp"
#include "cliquecomm/relation.hpp"

namespace cliquecomm {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}
inline double to_double(double v) { return v; }

inline bool is_zero(const Rational& v, double) { return v == Rational(0); }
inline bool is_zero(double v, double tol) { return std::abs(v) <= tol; }
inline bool is_positive(const Rational& v, double) { return v > Rational(0); }
inline bool is_positive(double v, double tol) { return v > tol; }
inline bool same_value(const Rational& u, const Rational& v, double) { return u == v; }
inline bool same_value(double u, double v, double tol) { return std::abs(u - v) <= tol; }

// Conditional probabilities P(b | C_x, a, C_y) laid out as an (n*omega) x (n*omega) matrix.
// Row (x, a) and column (y, b) are ordered lexicographically; x and y are 1-based.
template <class T>
class ProbTable {
 public:
  ProbTable(int n, int omega) : n_(n), omega_(omega) {
    if (n < 1 || omega < 1) throw Error(ErrorKind::kInvalidParams, "table needs n >= 1 and omega >= 1");
    entries_.assign(static_cast<std::size_t>(rows()) * static_cast<std::size_t>(rows()), T(0));
  }

  int n() const { return n_; }
  int omega() const { return omega_; }
  int rows() const { return n_ * omega_; }
  int row_index(int x, int a) const { return (x - 1) * omega_ + a; }

  const T& at(int row, int col) const { return entries_[flat(row, col)]; }
  T& at(int row, int col) { return entries_[flat(row, col)]; }
  const T& operator()(int x, int a, int y, int b) const { return at(row_index(x, a), row_index(y, b)); }
  T& operator()(int x, int a, int y, int b) { return at(row_index(x, a), row_index(y, b)); }

  // Every (row, C_y) block sums to 1 and entries lie in [0, 1].
  bool normalized(double tol = 1e-9) const {
    for (int r = 0; r < rows(); ++r) {
      for (int y = 1; y <= n_; ++y) {
        T sum(0);
        for (int b = 0; b < omega_; ++b) {
          const T& v = at(r, row_index(y, b));
          if (to_double(v) < -tol || to_double(v) > 1.0 + tol) return false;
          sum += v;
        }
        if (!same_value(sum, T(1), tol)) return false;
      }
    }
    return true;
  }

  bool operator==(const ProbTable& other) const = default;

 private:
  std::size_t flat(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(rows()) + static_cast<std::size_t>(col);
  }

  int n_;
  int omega_;
  std::vector<T> entries_;
};

using ExactTable = ProbTable<Rational>;
using RealTable = ProbTable<double>;

RealTable to_real(const ExactTable& t);

struct TupleCheck {
  bool ok = true;
  std::vector<RelationTuple> tuples;
};

template <class T>
void require_shape(const ProbTable<T>& t, const Relation& rel) {
  if (t.n() != rel.n() || t.omega() != rel.omega())
    throw Error(ErrorKind::kDimensionMismatch, "table and relation shapes differ");
}

// Out-of-relation entries that are nonzero.
template <class T>
TupleCheck check_T0(const ProbTable<T>& t, const Relation& rel, double tol = 1e-9) {
  require_shape(t, rel);
  TupleCheck out;
  for (int x = 1; x <= t.n(); ++x)
    for (int a = 0; a < t.omega(); ++a)
      for (int y = 1; y <= t.n(); ++y)
        for (int b = 0; b < t.omega(); ++b)
          if (!rel.contains(x, a, y, b) && !is_zero(t(x, a, y, b), tol)) out.tuples.push_back({x, a, y, b});
  out.ok = out.tuples.empty();
  return out;
}

// In-relation entries that are not positive.
template <class T>
TupleCheck check_T1(const ProbTable<T>& t, const Relation& rel, double tol = 1e-9) {
  require_shape(t, rel);
  TupleCheck out;
  for (const auto& tu : rel.tuples())
    if (!is_positive(t(tu.x, tu.a, tu.y, tu.b), tol)) out.tuples.push_back(tu);
  out.ok = out.tuples.empty();
  return out;
}

template <class T>
struct PayoffReport {
  T value{0};
  std::optional<RelationTuple> witness;
  int eta = 0;
  Rational upper_bound{0};
  bool t0 = false;
};

// Minimum entry over the relation; the first minimising tuple is the witness.
template <class T>
PayoffReport<T> payoff(const ProbTable<T>& t, const Relation& rel, double tol = 1e-9) {
  require_shape(t, rel);
  PayoffReport<T> rep;
  for (const auto& tu : rel.tuples()) {
    const T& v = t(tu.x, tu.a, tu.y, tu.b);
    if (!rep.witness || v < rep.value) {
      rep.value = v;
      rep.witness = tu;
    }
  }
  rep.eta = rel.eta();
  rep.upper_bound = rep.eta > 0 ? Rational(1, rep.eta) : Rational(0);
  rep.t0 = check_T0(t, rel, tol).ok;
  return rep;
}

template <class T>
bool check_T2(const ProbTable<T>& t, const Relation& rel, double tol = 1e-9) {
  const auto rep = payoff(t, rel, tol);
  if (rep.eta == 0) return false;
  if constexpr (std::is_same_v<T, Rational>) {
    return rep.value == rep.upper_bound;
  } else {
    return std::abs(rep.value - to_double(rep.upper_bound)) <= tol;
  }
}

template <class T>
struct CompressedTable {
  // Host-graph vertex behind each compressed row, ascending.
  std::vector<int> row_vertex;
  // Compressed row (message) for each original row (x - 1) * omega + a.
  std::vector<int> message_of_row;
  // row_vertex.size() x (n * omega), row-major.
  std::vector<T> entries;
  int columns = 0;
  // All merged rows were identical, so the compressed table reproduces the original exactly.
  bool lossless = true;

  const T& at(int message, int col) const {
    return entries[static_cast<std::size_t>(message) * static_cast<std::size_t>(columns) +
                   static_cast<std::size_t>(col)];
  }
};

// Rows whose colourings select the same vertex become one row. A merged row is the mean of
// its sources, which keeps the zero pattern since the relation depends only on the vertex.
template <class T>
CompressedTable<T> compress_rows(const ProbTable<T>& t, const Graph& g, const CliqueSet& cliques,
                                 const Relation& rel, double tol = 1e-9) {
  require_shape(t, rel);
  if (cliques.count() != t.n() || cliques.omega() != t.omega())
    throw Error(ErrorKind::kDimensionMismatch, "table and clique set shapes differ");
  if (!check_T0(t, rel, tol).ok) throw Error(ErrorKind::kInconsistent, "row compression needs a T0 table");

  std::vector<int> message_of_vertex(static_cast<std::size_t>(g.order()) + 1, -1);
  CompressedTable<T> out;
  for (int v = 1; v <= g.order(); ++v) {
    bool selected = false;
    for (int x = 1; x <= cliques.count() && !selected; ++x) selected = cliques.position(x, v) >= 0;
    if (!selected) continue;
    message_of_vertex[static_cast<std::size_t>(v)] = static_cast<int>(out.row_vertex.size());
    out.row_vertex.push_back(v);
  }
  const int m = static_cast<int>(out.row_vertex.size());
  out.columns = t.rows();
  out.message_of_row.resize(static_cast<std::size_t>(t.rows()));
  out.entries.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(out.columns), T(0));
  std::vector<int> multiplicity(static_cast<std::size_t>(m), 0);
  std::vector<int> first_row(static_cast<std::size_t>(m), -1);
  for (int x = 1; x <= t.n(); ++x) {
    for (int a = 0; a < t.omega(); ++a) {
      const int r = t.row_index(x, a);
      const int msg = message_of_vertex[static_cast<std::size_t>(cliques.vertex(x, a))];
      out.message_of_row[static_cast<std::size_t>(r)] = msg;
      const auto mi = static_cast<std::size_t>(msg);
      ++multiplicity[mi];
      if (first_row[mi] < 0) first_row[mi] = r;
      for (int c = 0; c < out.columns; ++c) {
        out.entries[mi * static_cast<std::size_t>(out.columns) + static_cast<std::size_t>(c)] += t.at(r, c);
        if (!same_value(t.at(r, c), t.at(first_row[mi], c), tol)) out.lossless = false;
      }
    }
  }
  for (int msg = 0; msg < m; ++msg)
    for (int c = 0; c < out.columns; ++c)
      out.entries[static_cast<std::size_t>(msg) * static_cast<std::size_t>(out.columns) +
                  static_cast<std::size_t>(c)] /= T(multiplicity[static_cast<std::size_t>(msg)]);
  return out;
}

// Dimension claim from a black-box table: T0 certifies an operational dimension of at least omega.
struct WitnessClaim {
  bool claim = false;
  int dimension_lower_bound = 0;
};

template <class T>
WitnessClaim dimension_witness(const ProbTable<T>& t, const Relation& rel, int omega, double tol = 1e-9) {
  WitnessClaim w;
  if (check_T0(t, rel, tol).ok) {
    w.claim = true;
    w.dimension_lower_bound = omega;
  }
  return w;
}

}  // namespace cliquecomm
