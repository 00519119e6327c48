#pragma once

// Truncated free associative algebra on X, Y; the Baker-Campbell-Hausdorff
// series C = log(exp X exp Y); and its evaluation in the Lie algebra of a
// pre-Lie algebra, [a, b] = a.b - b.a.

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "plb/brace.hpp"
#include "plb/flows.hpp"
#include "plb/prelie.hpp"

namespace plb {

/// Element of the free associative algebra on {X, Y} modulo words longer
/// than the degree bound. The empty word is the unit.
template <class S>
class TruncatedSeries {
 public:
  using Terms = std::map<std::string, S>;

  TruncatedSeries(ScalarField field, int degree_bound)
      : field_(field), bound_(degree_bound) {
    if (degree_bound < 0) throw PreconditionViolated("negative degree bound");
  }

  static TruncatedSeries one(ScalarField field, int degree_bound) {
    TruncatedSeries s(field, degree_bound);
    s.add("", scalar<S>(field, 1));
    return s;
  }

  static TruncatedSeries word(ScalarField field, int degree_bound, const std::string& w,
                              S coeff) {
    TruncatedSeries s(field, degree_bound);
    s.add(w, std::move(coeff));
    return s;
  }

  static TruncatedSeries word(ScalarField field, int degree_bound, const std::string& w) {
    return word(field, degree_bound, w, scalar<S>(field, 1));
  }

  const ScalarField& field() const { return field_; }
  int degree_bound() const { return bound_; }
  const Terms& terms() const { return terms_; }

  S coefficient(const std::string& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? scalar<S>(field_, 0) : it->second;
  }

  void add(const std::string& w, const S& coeff) {
    if (static_cast<int>(w.size()) > bound_ || is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (inserted) return;
    it->second += coeff;
    if (is_zero(it->second)) terms_.erase(it);
  }

  /// Component of total degree k.
  TruncatedSeries homogeneous(int k) const {
    TruncatedSeries out(field_, bound_);
    for (const auto& [w, c] : terms_) {
      if (static_cast<int>(w.size()) == k) out.terms_.emplace(w, c);
    }
    return out;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  TruncatedSeries& operator*=(const S& c) {
    Terms scaled;
    for (const auto& [w, coeff] : terms_) {
      S v = coeff * c;
      if (!is_zero(v)) scaled.emplace(w, std::move(v));
    }
    terms_ = std::move(scaled);
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const S& c, TruncatedSeries a) { return a *= c; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.bound_ == b.bound_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += to_string(c) + " " + (w.empty() ? std::string("1") : w);
    }
    return out;
  }

 private:
  ScalarField field_;
  int bound_;
  Terms terms_;
};

/// Concatenation product, dropping words beyond the bound.
template <class S>
TruncatedSeries<S> ts_mul(const TruncatedSeries<S>& u, const TruncatedSeries<S>& v) {
  const int bound = std::min(u.degree_bound(), v.degree_bound());
  TruncatedSeries<S> out(u.field(), bound);
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      if (static_cast<int>(a.size() + b.size()) <= bound) out.add(a + b, ca * cb);
    }
  }
  return out;
}

/// sum_k u^k / k!, for u without constant term.
template <class S>
TruncatedSeries<S> ts_exp(const TruncatedSeries<S>& u) {
  if (!is_zero(u.coefficient(""))) {
    throw PreconditionViolated("ts_exp: argument has a nonzero constant term");
  }
  const ScalarField& field = u.field();
  field.require_characteristic_above(u.degree_bound(), "truncated exponential");
  auto sum = TruncatedSeries<S>::one(field, u.degree_bound());
  auto power = sum;
  for (int k = 1; k <= u.degree_bound(); ++k) {
    power = scalar<S>(field, 1, k) * ts_mul(power, u);
    sum += power;
  }
  return sum;
}

/// sum_k (-1)^{k+1} (v - 1)^k / k, for v with constant term 1.
template <class S>
TruncatedSeries<S> ts_log(const TruncatedSeries<S>& v) {
  const ScalarField& field = v.field();
  if (v.coefficient("") != scalar<S>(field, 1)) {
    throw PreconditionViolated("ts_log: argument must have constant term 1");
  }
  field.require_characteristic_above(v.degree_bound(), "truncated logarithm");
  const auto w = v - TruncatedSeries<S>::one(field, v.degree_bound());
  TruncatedSeries<S> sum(field, v.degree_bound());
  auto power = TruncatedSeries<S>::one(field, v.degree_bound());
  for (int k = 1; k <= v.degree_bound(); ++k) {
    power = ts_mul(power, w);
    sum += scalar<S>(field, k % 2 == 1 ? 1 : -1, k) * power;
  }
  return sum;
}

/// C(X, Y) = log(exp X exp Y) truncated at degree s.
template <class S>
TruncatedSeries<S> bch_series(const ScalarField& field, int s) {
  if (s < 1) throw PreconditionViolated("bch_series needs s >= 1");
  const auto x = TruncatedSeries<S>::word(field, s, "X");
  const auto y = TruncatedSeries<S>::word(field, s, "Y");
  return ts_log(ts_mul(ts_exp(x), ts_exp(y)));
}

/// coeff * [[...[w_1, w_2], ...], w_k].
template <class S>
struct LieTerm {
  S coeff;
  std::string word;
};

/// Expands a left-nested bracket into words.
template <class S>
TruncatedSeries<S> expand_bracket(const ScalarField& field, int bound, const std::string& w) {
  auto acc = TruncatedSeries<S>::word(field, bound, w.substr(0, 1));
  for (std::size_t i = 1; i < w.size(); ++i) {
    const auto letter = TruncatedSeries<S>::word(field, bound, w.substr(i, 1));
    acc = ts_mul(acc, letter) - ts_mul(letter, acc);
  }
  return acc;
}

template <class S>
TruncatedSeries<S> expand_brackets(const ScalarField& field, int bound,
                                   const std::vector<LieTerm<S>>& terms) {
  TruncatedSeries<S> out(field, bound);
  for (const auto& t : terms) out += t.coeff * expand_bracket<S>(field, bound, t.word);
  return out;
}

/// Dynkin-Specht-Wever: a homogeneous Lie element P of degree k equals
/// (1/k) sum_w coeff_P(w) [w]. Each degree is certified by re-expanding the
/// brackets; NotLieElement is thrown when a degree is not a Lie element.
template <class S>
std::vector<LieTerm<S>> dsw_project(const TruncatedSeries<S>& u) {
  const ScalarField& field = u.field();
  if (!is_zero(u.coefficient(""))) {
    throw PreconditionViolated("dsw_project: argument has a nonzero constant term");
  }
  std::vector<LieTerm<S>> out;
  for (int k = 1; k <= u.degree_bound(); ++k) {
    const auto part = u.homogeneous(k);
    if (part.terms().empty()) continue;
    field.require_characteristic_above(k, "Dynkin-Specht-Wever projection");
    std::vector<LieTerm<S>> terms;
    for (const auto& [w, c] : part.terms()) terms.push_back({c * scalar<S>(field, 1, k), w});
    if (expand_brackets(field, u.degree_bound(), terms) != part) {
      throw NotLieElement("degree " + std::to_string(k) + " component is not a Lie element");
    }
    out.insert(out.end(), terms.begin(), terms.end());
  }
  return out;
}

/// Substitutes X -> a, Y -> b and [.,.] -> lie_bracket.
template <class S>
Vector<S> evaluate_lie(const PreLieAlgebra<S>& alg, const std::vector<LieTerm<S>>& terms,
                       const Vector<S>& a, const Vector<S>& b) {
  Vector<S> out = Vector<S>::Zero(alg.dim());
  for (const auto& t : terms) {
    auto letter = [&](char c) -> const Vector<S>& { return c == 'X' ? a : b; };
    Vector<S> acc = letter(t.word[0]);
    for (std::size_t i = 1; i < t.word.size() && !is_zero(acc); ++i) {
      acc = lie_bracket(alg, acc, letter(t.word[i]));
    }
    out += t.coeff * acc;
  }
  return out;
}

/// Checks W(a) o W(b) = W(C(a, b)) on basis pairs and seeded random pairs,
/// with C evaluated through its bracket form at the algebra's class.
template <class S>
std::optional<BraceViolation> verify_flows_bch(const PreLieAlgebra<S>& alg, int trials,
                                               std::uint64_t seed = kDefaultSeed) {
  const int s = alg.nilpotency_class();
  const ScalarField& field = alg.field();
  const auto c = dsw_project(bch_series<S>(field, s));
  auto holds = [&](const Vector<S>& a, const Vector<S>& b) {
    return circ(alg, W(alg, a), W(alg, b)) == W(alg, evaluate_lie(alg, c, a, b));
  };
  const int d = alg.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (!holds(unit_vector<S>(d, i), unit_vector<S>(d, j))) {
        return BraceViolation{"W(a) o W(b) = W(C(a,b))",
                              "basis pair (" + std::to_string(i + 1) + ", " +
                                  std::to_string(j + 1) + ")"};
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto a = random_vector<S>(field, d, rng);
    const auto b = random_vector<S>(field, d, rng);
    if (!holds(a, b)) return BraceViolation{"W(a) o W(b) = W(C(a,b))", detail::trial_site(t)};
  }
  return std::nullopt;
}

}  // namespace plb
