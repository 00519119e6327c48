#pragma once

// Dense exact linear algebra over Rational or ModP scalars.

#include <Eigen/Core>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "plb/errors.hpp"
#include "plb/scalar.hpp"

namespace plb {

template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!is_zero(m(i, j))) return false;
    }
  }
  return true;
}

template <class S>
Vector<S> unit_vector(int dim, int i) {
  Vector<S> v = Vector<S>::Zero(dim);
  v(i) = S(1);
  return v;
}

/// Reduced row-echelon form in place; returns the pivot columns.
template <class S>
std::vector<int> rref_in_place(Matrix<S>& m) {
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(row));
    const S inv = S(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

/// Solves m * X = rhs for a block of right-hand sides. Free variables are set
/// to zero. Returns nullopt when the system is inconsistent.
template <class S>
std::optional<Matrix<S>> solve_linear(const Matrix<S>& m, const Matrix<S>& rhs) {
  if (m.rows() != rhs.rows()) {
    throw DimensionMismatch("solve_linear: matrix has " + std::to_string(m.rows()) +
                            " rows, right-hand side has " + std::to_string(rhs.rows()));
  }
  Matrix<S> aug(m.rows(), m.cols() + rhs.cols());
  aug << m, rhs;
  const auto pivots = rref_in_place(aug);
  Matrix<S> x = Matrix<S>::Zero(m.cols(), rhs.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= m.cols()) return std::nullopt;
    x.row(pivots[r]) = aug.row(static_cast<Eigen::Index>(r)).tail(rhs.cols());
  }
  return x;
}

template <class S>
std::optional<Vector<S>> solve_linear(const Matrix<S>& m, const Vector<S>& rhs) {
  auto x = solve_linear(m, Matrix<S>(rhs));
  if (!x) return std::nullopt;
  return Vector<S>(x->col(0));
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  if (m.rows() == 0) return m;
  Matrix<S> aug(m.rows(), 2 * m.cols());
  aug << m, Matrix<S>::Identity(m.rows(), m.cols());
  const auto pivots = rref_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < m.rows() || pivots.back() >= m.cols()) {
    return std::nullopt;
  }
  return Matrix<S>(aug.rightCols(m.cols()));
}

/// Linear subspace of S^d held as a canonical reduced echelon basis, so equal
/// subspaces compare equal entry by entry.
template <class S>
class Subspace {
 public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Row span of `rows`.
  static Subspace from_rows(Matrix<S> rows) {
    Subspace out(static_cast<int>(rows.cols()));
    const auto pivots = rref_in_place(rows);
    out.basis_ = rows.topRows(static_cast<Eigen::Index>(pivots.size()));
    return out;
  }

  static Subspace full(int ambient_dim) {
    return from_rows(Matrix<S>::Identity(ambient_dim, ambient_dim));
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  bool is_zero() const { return basis_.rows() == 0; }
  /// Canonical basis, one vector per row.
  const Matrix<S>& basis() const { return basis_; }
  Vector<S> basis_vector(int i) const { return basis_.row(i).transpose(); }

  bool contains(const Vector<S>& v) const {
    Matrix<S> stacked(basis_.rows() + 1, ambient_);
    stacked << basis_, v.transpose();
    return from_rows(std::move(stacked)).dim() == dim();
  }

  bool contains(const Subspace& other) const {
    Matrix<S> stacked(basis_.rows() + other.basis_.rows(), ambient_);
    stacked << basis_, other.basis_;
    return from_rows(std::move(stacked)).dim() == dim();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() &&
           a.basis_ == b.basis_;
  }

 private:
  int ambient_;
  Matrix<S> basis_;
};

template <class S>
Subspace<S> span(const std::vector<Vector<S>>& vectors, int ambient_dim) {
  Matrix<S> rows(static_cast<Eigen::Index>(vectors.size()), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) {
      throw DimensionMismatch("span: vector of length " + std::to_string(vectors[i].size()) +
                              " in ambient dimension " + std::to_string(ambient_dim));
    }
    rows.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  }
  return Subspace<S>::from_rows(std::move(rows));
}

/// Interpolation nodes used wherever a polynomial in t is recovered from
/// samples: t = 2^0, 2^-1, ... over Q, and t = 1, 2, 3, ... over F_p.
template <class S>
std::vector<S> interpolation_nodes(const ScalarField& field, int count) {
  std::vector<S> nodes;
  nodes.reserve(static_cast<std::size_t>(count));
  if (field.is_rationals()) {
    S t = scalar<S>(field, 1);
    const S half = scalar<S>(field, 1, 2);
    for (int i = 0; i < count; ++i, t *= half) nodes.push_back(t);
  } else {
    field.require_characteristic_above(count, "interpolation nodes");
    for (int i = 1; i <= count; ++i) nodes.push_back(scalar<S>(field, i));
  }
  return nodes;
}

/// Inverse of the Vandermonde matrix V(i, k) = t_i^k.
template <class S>
Matrix<S> inverse_vandermonde(const std::vector<S>& nodes) {
  const auto n = static_cast<Eigen::Index>(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i] == nodes[j]) throw DuplicateNode("interpolation nodes coincide");
    }
  }
  Matrix<S> v(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    S power = S(1);
    for (Eigen::Index k = 0; k < n; ++k) {
      v(i, k) = power;
      power *= nodes[static_cast<std::size_t>(i)];
    }
  }
  auto inv = inverse(v);
  if (!inv) throw DuplicateNode("singular Vandermonde system");
  return *inv;
}

/// Coefficients c_0..c_degree_bound of the unique polynomial curve
/// f(t) = sum_k c_k t^k through the sampled points. Works for any sample
/// value type closed under scalar multiplication and addition (vectors,
/// matrices).
template <class S, class Value>
std::vector<Value> interpolate_coefficients(const std::vector<std::pair<S, Value>>& points,
                                            int degree_bound) {
  if (static_cast<int>(points.size()) != degree_bound + 1) {
    throw PreconditionViolated("interpolate_coefficients: need degree_bound + 1 points");
  }
  std::vector<S> nodes;
  for (const auto& [t, value] : points) {
    if (is_zero(t)) throw PreconditionViolated("interpolation node must be nonzero");
    nodes.push_back(t);
  }
  const Matrix<S> w = inverse_vandermonde(nodes);
  std::vector<Value> coeffs;
  coeffs.reserve(points.size());
  for (Eigen::Index k = 0; k <= degree_bound; ++k) {
    Value c = w(k, 0) * points[0].second;
    for (std::size_t j = 1; j < points.size(); ++j) {
      c += w(k, static_cast<Eigen::Index>(j)) * points[j].second;
    }
    coeffs.push_back(std::move(c));
  }
  return coeffs;
}

/// Polynomial coefficients of t -> f(t) for a curve known to have degree at
/// most `degree_bound`, sampled at the standard nodes.
template <class S, class F>
auto polynomial_coefficients(const ScalarField& field, int degree_bound, F&& f) {
  using Value = std::decay_t<decltype(f(std::declval<S>()))>;
  std::vector<std::pair<S, Value>> points;
  for (const S& t : interpolation_nodes<S>(field, degree_bound + 1)) {
    points.emplace_back(t, f(t));
  }
  return interpolate_coefficients<S, Value>(points, degree_bound);
}

}  // namespace plb
