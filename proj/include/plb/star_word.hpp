#pragma once

// Formal star-monomials (binary trees over generator symbols) and exact
// linear combinations of them.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "plb/scalar.hpp"

namespace plb {

class StarWord {
 public:
  static StarWord generator(char symbol);
  static StarWord product(const StarWord& left, const StarWord& right);
  /// Parses the serialization produced by str(), e.g. "(x*(x*y))".
  static StarWord parse(const std::string& text);

  bool is_generator() const { return node_->left == nullptr; }
  char symbol() const { return node_->symbol; }
  StarWord left() const { return StarWord(node_->left); }
  StarWord right() const { return StarWord(node_->right); }

  /// Number of leaves.
  int degree() const { return node_->degree; }
  int count(char symbol) const;
  /// Rightmost leaf.
  char tail() const;

  /// Parenthesized infix form: "x", "(x*y)", "((x*x)*y)".
  const std::string& str() const { return node_->text; }

  friend bool operator==(const StarWord& a, const StarWord& b) { return a.str() == b.str(); }

 private:
  struct Node {
    char symbol = 0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    int degree = 1;
    std::string text;
  };

  explicit StarWord(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Degree first, then the serialization; a total order in which shorter
/// products come before longer ones.
bool word_less(const StarWord& u, const StarWord& v);

struct WordLess {
  bool operator()(const StarWord& u, const StarWord& v) const { return word_less(u, v); }
};

/// Finite formal sum of star-words with exact rational coefficients. Zero
/// coefficients are never stored; terms iterate in word order.
class StarExpr {
 public:
  using Terms = std::map<StarWord, Rational, WordLess>;

  StarExpr() = default;
  StarExpr(const StarWord& w, Rational coeff = Rational(1));  // NOLINT: a word is an expression

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const StarWord& w) const;
  int min_degree() const;
  int max_degree() const;

  void add(const StarWord& w, const Rational& coeff);
  StarExpr& operator+=(const StarExpr& o);
  StarExpr& operator-=(const StarExpr& o);
  StarExpr& operator*=(const Rational& c);

  friend StarExpr operator+(StarExpr a, const StarExpr& b) { return a += b; }
  friend StarExpr operator-(StarExpr a, const StarExpr& b) { return a -= b; }
  friend StarExpr operator*(const Rational& c, StarExpr a) { return a *= c; }
  friend StarExpr operator-(StarExpr a) { return a *= Rational(-1); }
  friend bool operator==(const StarExpr& a, const StarExpr& b) { return a.terms_ == b.terms_; }

  /// Drops every word of degree above `bound`.
  StarExpr truncated(int bound) const;

  /// Human-readable form, e.g. "1/1 (x*z) + -1/1 ((x*y)*z)". "0" when empty.
  std::string str() const;

 private:
  Terms terms_;
};

/// All words of degree 2..degree_bound whose leaves are x except the tail y,
/// sorted by word order.
std::vector<StarWord> word_basis_xy(int degree_bound);

/// All words of degree 3..degree_bound with tail z, other leaves from {x, y},
/// at least two of them, and both x and y occurring; sorted by word order.
std::vector<StarWord> word_basis_xyz(int degree_bound);

}  // namespace plb
