#include "plb/star_word.hpp"

#include <algorithm>

namespace plb {

StarWord StarWord::generator(char symbol) {
  auto node = std::make_shared<Node>();
  node->symbol = symbol;
  node->text = std::string(1, symbol);
  return StarWord(std::move(node));
}

StarWord StarWord::product(const StarWord& left, const StarWord& right) {
  auto node = std::make_shared<Node>();
  node->left = left.node_;
  node->right = right.node_;
  node->degree = left.degree() + right.degree();
  node->text = "(" + left.str() + "*" + right.str() + ")";
  return StarWord(std::move(node));
}

namespace {

StarWord parse_at(const std::string& text, std::size_t& pos) {
  if (pos >= text.size()) throw ParseError("unexpected end of star word '" + text + "'");
  if (text[pos] != '(') {
    const char c = text[pos++];
    if (c < 'a' || c > 'z') throw ParseError("bad generator in star word '" + text + "'");
    return StarWord::generator(c);
  }
  ++pos;
  StarWord left = parse_at(text, pos);
  if (pos >= text.size() || text[pos] != '*') throw ParseError("expected '*' in '" + text + "'");
  ++pos;
  StarWord right = parse_at(text, pos);
  if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')' in '" + text + "'");
  ++pos;
  return StarWord::product(left, right);
}

}  // namespace

StarWord StarWord::parse(const std::string& text) {
  std::size_t pos = 0;
  StarWord w = parse_at(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters in star word '" + text + "'");
  return w;
}

int StarWord::count(char symbol) const {
  return static_cast<int>(std::count(str().begin(), str().end(), symbol));
}

char StarWord::tail() const {
  StarWord w = *this;
  while (!w.is_generator()) w = w.right();
  return w.symbol();
}

bool word_less(const StarWord& u, const StarWord& v) {
  if (u.degree() != v.degree()) return u.degree() < v.degree();
  return u.str() < v.str();
}

// StarExpr

StarExpr::StarExpr(const StarWord& w, Rational coeff) { add(w, coeff); }

Rational StarExpr::coefficient(const StarWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

int StarExpr::min_degree() const {
  int m = 0;
  for (const auto& [w, c] : terms_) m = (m == 0) ? w.degree() : std::min(m, w.degree());
  return m;
}

int StarExpr::max_degree() const {
  int m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.degree());
  return m;
}

void StarExpr::add(const StarWord& w, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

StarExpr& StarExpr::operator+=(const StarExpr& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

StarExpr& StarExpr::operator-=(const StarExpr& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

StarExpr& StarExpr::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

StarExpr StarExpr::truncated(int bound) const {
  StarExpr out;
  for (const auto& [w, c] : terms_) {
    if (w.degree() <= bound) out.terms_.emplace(w, c);
  }
  return out;
}

std::string StarExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str() + " " + w.str();
  }
  return out;
}

// Word sets

namespace {

/// All bracketings with n leaves whose non-tail leaves are drawn from
/// `alphabet` and whose tail is `tail`.
std::vector<StarWord> trees(int n, const std::string& alphabet, char tail) {
  if (n == 1) return {StarWord::generator(tail)};
  std::vector<StarWord> out;
  for (int l = 1; l < n; ++l) {
    std::vector<StarWord> lefts;
    for (char c : alphabet) {
      for (const auto& w : trees(l, alphabet, c)) lefts.push_back(w);
    }
    const auto rights = trees(n - l, alphabet, tail);
    for (const auto& a : lefts) {
      for (const auto& b : rights) out.push_back(StarWord::product(a, b));
    }
  }
  return out;
}

}  // namespace

std::vector<StarWord> word_basis_xy(int degree_bound) {
  std::vector<StarWord> out;
  for (int n = 2; n <= degree_bound; ++n) {
    for (const auto& w : trees(n, "x", 'y')) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

std::vector<StarWord> word_basis_xyz(int degree_bound) {
  std::vector<StarWord> out;
  for (int n = 3; n <= degree_bound; ++n) {
    for (const auto& w : trees(n, "xy", 'z')) {
      if (w.count('x') > 0 && w.count('y') > 0) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

}  // namespace plb
