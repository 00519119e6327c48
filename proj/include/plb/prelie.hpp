#pragma once

// Finite-dimensional pre-Lie algebras given by structure constants.

#include <optional>
#include <string>
#include <vector>

#include "plb/linalg.hpp"

namespace plb {

/// e_i . e_j has coordinate `value` along e_k.
template <class S>
struct ProductEntry {
  int i;
  int j;
  int k;
  S value;
};

template <class S>
class PreLieAlgebra {
 public:
  /// Stores the structure constants without any validation.
  static PreLieAlgebra unchecked(ScalarField field, int dim,
                                 const std::vector<ProductEntry<S>>& entries,
                                 std::vector<std::string> basis_names = {}) {
    PreLieAlgebra alg(field, dim, std::move(basis_names));
    for (const auto& e : entries) {
      alg.check_index(e.i);
      alg.check_index(e.j);
      alg.check_index(e.k);
      alg.left_[static_cast<std::size_t>(e.i)](e.k, e.j) += e.value;
    }
    return alg;
  }

  /// Stores the structure constants and validates them: pre-Lie identity,
  /// nilpotency, and characteristic larger than the nilpotency class.
  /// Throws InvalidAlgebra with a diagnostic otherwise.
  static PreLieAlgebra create(ScalarField field, int dim,
                              const std::vector<ProductEntry<S>>& entries,
                              std::vector<std::string> basis_names = {}) {
    return unchecked(field, dim, entries, std::move(basis_names)).validated();
  }

  static PreLieAlgebra zero(ScalarField field, int dim) { return create(field, dim, {}); }

  PreLieAlgebra validated() const;

  const ScalarField& field() const { return field_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  bool is_validated() const { return nilpotency_class_.has_value(); }

  /// Nilpotency class s (products of s elements vanish). Only available on
  /// validated algebras.
  int nilpotency_class() const {
    if (!nilpotency_class_) throw PreconditionViolated("pre-Lie algebra was not validated");
    return *nilpotency_class_;
  }

  /// Matrix of left multiplication by e_i; column j holds e_i . e_j.
  const Matrix<S>& left_basis_operator(int i) const {
    return left_[static_cast<std::size_t>(i)];
  }

  Vector<S> product(int i, int j) const {
    return left_[static_cast<std::size_t>(i)].col(j);
  }

  /// Copy with e_i . e_j replaced; the result is unchecked.
  PreLieAlgebra with_product(int i, int j, const Vector<S>& value) const {
    PreLieAlgebra out = *this;
    out.left_[static_cast<std::size_t>(i)].col(j) = value;
    out.nilpotency_class_.reset();
    return out;
  }

  std::vector<ProductEntry<S>> entries() const {
    std::vector<ProductEntry<S>> out;
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        for (int k = 0; k < dim_; ++k) {
          const S& v = left_[static_cast<std::size_t>(i)](k, j);
          if (!is_zero(v)) out.push_back({i, j, k, v});
        }
      }
    }
    return out;
  }

  friend bool operator==(const PreLieAlgebra& a, const PreLieAlgebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.left_ == b.left_;
  }

 private:
  PreLieAlgebra(ScalarField field, int dim, std::vector<std::string> names)
      : field_(field), dim_(dim), names_(std::move(names)) {
    if (dim <= 0) throw PreconditionViolated("pre-Lie algebra dimension must be positive");
    if (!names_.empty() && static_cast<int>(names_.size()) != dim) {
      throw DimensionMismatch("basis name count differs from dimension");
    }
    if (names_.empty()) {
      for (int i = 1; i <= dim; ++i) names_.push_back("e" + std::to_string(i));
    }
    left_.assign(static_cast<std::size_t>(dim), Matrix<S>::Zero(dim, dim));
  }

  void check_index(int i) const {
    if (i < 0 || i >= dim_) {
      throw DimensionMismatch("basis index " + std::to_string(i) + " out of range");
    }
  }

  ScalarField field_;
  int dim_;
  std::vector<std::string> names_;
  std::vector<Matrix<S>> left_;
  std::optional<int> nilpotency_class_;
};

template <class S>
void check_dim(const PreLieAlgebra<S>& alg, const Vector<S>& x) {
  if (x.size() != alg.dim()) {
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) +
                            " in a " + std::to_string(alg.dim()) + "-dimensional algebra");
  }
}

/// Matrix of L_x : y -> x . y.
template <class S>
Matrix<S> left_operator(const PreLieAlgebra<S>& alg, const Vector<S>& x) {
  check_dim(alg, x);
  Matrix<S> l = Matrix<S>::Zero(alg.dim(), alg.dim());
  for (int i = 0; i < alg.dim(); ++i) {
    if (!is_zero(x(i))) l += x(i) * alg.left_basis_operator(i);
  }
  return l;
}

template <class S>
Vector<S> multiply(const PreLieAlgebra<S>& alg, const Vector<S>& x, const Vector<S>& y) {
  check_dim(alg, y);
  return left_operator(alg, x) * y;
}

template <class S>
Vector<S> lie_bracket(const PreLieAlgebra<S>& alg, const Vector<S>& x, const Vector<S>& y) {
  return multiply(alg, x, y) - multiply(alg, y, x);
}

template <class S>
struct IdentityViolation {
  int i;
  int j;
  int k;
  Vector<S> residual;
};

/// Checks (e_i e_j) e_k - e_i (e_j e_k) = (e_j e_i) e_k - e_j (e_i e_k) on all
/// basis triples; by multilinearity this covers every triple of elements.
/// Returns the first violating triple, or nullopt.
template <class S>
std::optional<IdentityViolation<S>> check_prelie_identity(const PreLieAlgebra<S>& alg) {
  const int d = alg.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const Vector<S> ij = alg.product(i, j);
      const Vector<S> ji = alg.product(j, i);
      const Matrix<S>& li = alg.left_basis_operator(i);
      const Matrix<S>& lj = alg.left_basis_operator(j);
      const Matrix<S> lij = left_operator(alg, ij);
      const Matrix<S> lji = left_operator(alg, ji);
      // Column k of this matrix is the residual at (i, j, k).
      const Matrix<S> residual = lij - li * lj - lji + lj * li;
      for (int k = 0; k < d; ++k) {
        if (!is_zero(residual.col(k))) {
          return IdentityViolation<S>{i, j, k, residual.col(k)};
        }
      }
    }
  }
  return std::nullopt;
}

/// Span of all products u . v with u in `left`, v in `right`.
template <class S>
Subspace<S> product_span(const PreLieAlgebra<S>& alg, const Subspace<S>& left,
                         const Subspace<S>& right) {
  std::vector<Vector<S>> products;
  for (int a = 0; a < left.dim(); ++a) {
    const Matrix<S> l = left_operator(alg, left.basis_vector(a));
    for (int b = 0; b < right.dim(); ++b) products.push_back(l * right.basis_vector(b));
  }
  return span(products, alg.dim());
}

/// The chain D_1 = A, D_{i+1} = sum_{0<j<i+1} D_j . D_{i+1-j}, computed up to
/// d + 1 terms or the first zero term, whichever comes first.
template <class S>
std::vector<Subspace<S>> product_chain(const PreLieAlgebra<S>& alg) {
  std::vector<Subspace<S>> chain{Subspace<S>::full(alg.dim())};
  while (!chain.back().is_zero() && static_cast<int>(chain.size()) < alg.dim() + 1) {
    const std::size_t next = chain.size() + 1;  // index of the new term, 1-based
    std::vector<Vector<S>> gens;
    for (std::size_t j = 1; j < next; ++j) {
      const auto piece = product_span(alg, chain[j - 1], chain[next - j - 1]);
      for (int r = 0; r < piece.dim(); ++r) gens.push_back(piece.basis_vector(r));
    }
    chain.push_back(span(gens, alg.dim()));
  }
  return chain;
}

/// Smallest s with D_s = 0, or nullopt when the chain does not reach zero
/// within d + 1 steps.
template <class S>
std::optional<int> nilpotency_index(const PreLieAlgebra<S>& alg) {
  const auto chain = product_chain(alg);
  if (!chain.back().is_zero()) return std::nullopt;
  return static_cast<int>(chain.size());
}

template <class S>
PreLieAlgebra<S> PreLieAlgebra<S>::validated() const {
  if (auto v = check_prelie_identity(*this)) {
    std::string res;
    for (Eigen::Index r = 0; r < v->residual.size(); ++r) {
      res += (r ? ", " : "") + to_string(v->residual(r));
    }
    throw InvalidAlgebra("pre-Lie identity fails at basis triple (" + names_[v->i] + ", " +
                         names_[v->j] + ", " + names_[v->k] + "), residual (" + res + ")");
  }
  const auto s = nilpotency_index(*this);
  if (!s) throw InvalidAlgebra("algebra is not nilpotent");
  field_.require_characteristic_above(*s, "pre-Lie algebra of class " + std::to_string(*s));
  PreLieAlgebra out = *this;
  out.nilpotency_class_ = *s;
  return out;
}

}  // namespace plb
