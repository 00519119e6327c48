#pragma once

// Symbolic rewriting of (u + v) * w in an arbitrary brace, the doubling matrix
// M with M V_{x,y} = V_{2x,y}, and evaluation of formal expressions in a
// concrete brace.
//
// The rewriting rests on the expansion, valid in every left brace,
//   (a + b) * c = a * c + b * c
//                 + sum_{i>=0} (-1)^{i+1} ((d_i * d_i') * c - d_i * (d_i' * c)),
// with d_0 = a, d_0' = b, d_{i+1} = d_i + d_i', d_{i+1}' = d_i * d_i'.
// The right slot of * is linear, so only sums in a left slot need it.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plb/brace.hpp"
#include "plb/star_word.hpp"

namespace plb {

/// Rewrites formal star products of sums into sums of star-words, dropping
/// every word of degree above `degree_bound`. Such words vanish in any brace
/// whose products of degree_bound + 1 elements vanish.
///
/// Left-slot sums must have integer coefficients. Results are memoized, so an
/// Expander is not safe to share across threads.
class Expander {
 public:
  explicit Expander(int degree_bound);

  int degree_bound() const { return bound_; }

  /// The formal product left * right, fully expanded.
  StarExpr star(const StarExpr& left, const StarExpr& right) { return star(left, right, bound_); }

  /// The formal product left * w for a single word w.
  StarExpr left_star(const StarExpr& left, const StarWord& w) { return left_star(left, w, bound_); }

  /// Right-hand side of the expansion of (a + b) * c.
  StarExpr sum_star(const StarExpr& a, const StarExpr& b, const StarWord& c) {
    return sum_star(a, b, c, bound_);
  }

 private:
  // The same operations truncated at a smaller degree. Intermediate products
  // are only ever needed up to the degree that can still reach the final
  // bound, and computing them at that budget is what keeps the recursion
  // finite: (x + y) * (x * y) feeds back into itself, but at a lower budget.
  StarExpr star(const StarExpr& left, const StarExpr& right, int budget);
  StarExpr left_star(const StarExpr& left, const StarWord& w, int budget);
  StarExpr sum_star(const StarExpr& a, const StarExpr& b, const StarWord& c, int budget);
  StarExpr negated_star(const StarWord& u, const StarWord& c, int budget);
  static std::string key(const StarExpr& left, const StarWord& w, int budget);

  int bound_;
  std::map<std::string, StarExpr> memo_;
};

/// Expansion of (a + b) * c into star-words of degree <= degree_bound.
StarExpr lemma15_rhs(const StarExpr& a, const StarExpr& b, const StarExpr& c, int degree_bound);

/// The four displayed low-degree terms x*z + y*z + x*(y*z) - (x*y)*z of the
/// expansion of (x + y) * z for generators x, y, z.
StarExpr leading_sum_terms(char x, char y, char z);

/// d(x, y, z): expansion of (x + y) * z minus its four leading terms.
StarExpr sum_correction(char x, char y, char z, int degree_bound);

struct DoublingMatrix {
  std::vector<StarWord> basis;  // E_{x,y} in word order
  Matrix<Rational> m;           // row i: expansion of basis[i] with x -> x + x
};

/// Builds M with M V_{x,y} = V_{2x,y} over all words of E_{x,y} with degree at
/// most `degree_bound`.
DoublingMatrix doubling_matrix(int degree_bound);

template <class S>
using Bindings = std::map<char, Vector<S>>;

template <class S>
Vector<S> evaluate(const StarWord& w, const Bindings<S>& bindings, const GradedBrace<S>& br) {
  if (w.is_generator()) {
    auto it = bindings.find(w.symbol());
    if (it == bindings.end()) {
      throw UnboundSymbol(std::string("symbol '") + w.symbol() + "' is not bound");
    }
    return it->second;
  }
  return star(br, evaluate(w.left(), bindings, br), evaluate(w.right(), bindings, br));
}

template <class S>
Vector<S> evaluate(const StarExpr& e, const Bindings<S>& bindings, const GradedBrace<S>& br) {
  Vector<S> out = Vector<S>::Zero(br.dim());
  for (const auto& [w, c] : e.terms()) {
    out += from_rational<S>(br.field(), c) * evaluate(w, bindings, br);
  }
  return out;
}

/// V_{a,b}: the basis words evaluated at x = a, y = b.
template <class S>
std::vector<Vector<S>> word_vector(const std::vector<StarWord>& basis, const Vector<S>& a,
                                   const Vector<S>& b, const GradedBrace<S>& br) {
  const Bindings<S> bind{{'x', a}, {'y', b}};
  std::vector<Vector<S>> out;
  for (const auto& w : basis) out.push_back(evaluate(w, bind, br));
  return out;
}

template <class S>
std::vector<Vector<S>> apply_rows(const Matrix<S>& m, const std::vector<Vector<S>>& v) {
  std::vector<Vector<S>> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Vector<S> acc = Vector<S>::Zero(v.front().size());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!is_zero(m(i, j))) acc += m(i, j) * v[static_cast<std::size_t>(j)];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

template <class S>
Matrix<S> convert(const ScalarField& field, const Matrix<Rational>& m) {
  Matrix<S> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = from_rational<S>(field, m(i, j));
  }
  return out;
}

struct ScalingViolation {
  int n;
  std::string word;
};

/// Verifies 2^n V_{2^-n a, b} = (2 M^-1)^n V_{a,b} in the brace for
/// n = 1..n_max, and M V_{a,b} = V_{2a,b}. Returns the first failing step.
template <class S>
std::optional<ScalingViolation> scaling_matrix_check(const GradedBrace<S>& br,
                                                     const Vector<S>& a, const Vector<S>& b,
                                                     int n_max, const DoublingMatrix& dm) {
  const ScalarField& field = br.field();
  const Matrix<S> m = convert<S>(field, dm.m);
  const auto m_inv = inverse(m);
  if (!m_inv) throw InternalInconsistency("doubling matrix is singular");
  const Matrix<S> step = scalar<S>(field, 2) * *m_inv;

  const auto v = word_vector(dm.basis, a, b, br);
  const auto v2 = word_vector(dm.basis, Vector<S>(scalar<S>(field, 2) * a), b, br);
  const auto mv = apply_rows(m, v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (mv[i] != v2[i]) return ScalingViolation{0, dm.basis[i].str()};
  }

  auto rhs = v;
  S scale = scalar<S>(field, 1);
  const S half = scalar<S>(field, 1, 2);
  for (int n = 1; n <= n_max; ++n) {
    rhs = apply_rows(step, rhs);
    scale *= half;
    const auto lhs = word_vector(dm.basis, Vector<S>(scale * a), b, br);
    const S factor = scalar<S>(field, 1) / scale;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (Vector<S>(factor * lhs[i]) != rhs[i]) return ScalingViolation{n, dm.basis[i].str()};
    }
  }
  return std::nullopt;
}

}  // namespace plb
