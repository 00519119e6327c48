#pragma once

// Strongly nilpotent braces on a coordinate space, stored as graded
// multilinear data: a * b = sum_k Lambda_k(a, ..., a; b), where Lambda_k has k
// symmetric left slots and one linear right slot.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "plb/linalg.hpp"

namespace plb {

/// Seed used by every sampled check unless the caller supplies one.
inline constexpr std::uint64_t kDefaultSeed = 20190611;

template <class S, class Rng>
Vector<S> random_vector(const ScalarField& field, int dim, Rng& rng) {
  Vector<S> v(dim);
  for (int i = 0; i < dim; ++i) v(i) = random_scalar<S>(field, rng);
  return v;
}

/// Calls f on every nondecreasing sequence of length k over [0, n).
inline void for_each_multiset(int n, int k, const std::function<void(std::span<const int>)>& f) {
  if (k == 0) {
    f({});
    return;
  }
  if (n <= 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    f(idx);
    int p = k - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == n - 1) --p;
    if (p < 0) return;
    const int v = idx[static_cast<std::size_t>(p)] + 1;
    for (int q = p; q < k; ++q) idx[static_cast<std::size_t>(q)] = v;
  }
}

inline std::size_t flat_index(std::span<const int> idx, int dim) {
  std::size_t flat = 0;
  for (int i : idx) flat = flat * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i);
  return flat;
}

template <class S>
class GradedBrace {
 public:
  /// The trivial brace (a * b = 0) with room for Lambda_1..Lambda_{s-1}.
  GradedBrace(ScalarField field, int dim, int class_bound)
      : field_(field), dim_(dim), class_bound_(class_bound) {
    if (dim <= 0) throw PreconditionViolated("brace dimension must be positive");
    if (class_bound < 2) throw PreconditionViolated("brace class bound must be at least 2");
    std::size_t count = 1;
    for (int k = 1; k < class_bound; ++k) {
      count *= static_cast<std::size_t>(dim);
      lambdas_.emplace_back(count, Matrix<S>::Zero(dim, dim));
    }
  }

  const ScalarField& field() const { return field_; }
  int dim() const { return dim_; }
  int class_bound() const { return class_bound_; }
  int max_degree() const { return class_bound_ - 1; }

  /// Lambda_k flattened over its left multi-index (first slot most
  /// significant); each entry maps the right argument to the output.
  const std::vector<Matrix<S>>& lambda(int k) const {
    return lambdas_.at(static_cast<std::size_t>(k - 1));
  }

  const Matrix<S>& component(int k, std::span<const int> left) const {
    return lambda(k)[flat_index(left, dim_)];
  }

  Matrix<S>& component(int k, std::span<const int> left) {
    sparse_.reset();
    return lambdas_.at(static_cast<std::size_t>(k - 1))[flat_index(left, dim_)];
  }

  struct Entry {
    std::vector<int> left;
    int out;
    int right;
    S value;
  };

  /// The nonzero entries of Lambda_k. Built on first use and dropped by the
  /// mutable accessor, so evaluation costs scale with the support rather than d^k.
  /// Not safe to call concurrently on a shared brace.
  const std::vector<Entry>& support(int k) const {
    if (!sparse_) sparse_ = std::make_shared<std::vector<std::vector<Entry>>>(build_support());
    return sparse_->at(static_cast<std::size_t>(k - 1));
  }

  friend bool operator==(const GradedBrace& a, const GradedBrace& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.class_bound_ == b.class_bound_ &&
           a.lambdas_ == b.lambdas_;
  }

 private:
  ScalarField field_;
  int dim_;
  int class_bound_;
  std::vector<std::vector<Matrix<S>>> lambdas_;
  mutable std::shared_ptr<const std::vector<std::vector<Entry>>> sparse_;

  std::vector<std::vector<Entry>> build_support() const {
    std::vector<std::vector<Entry>> all;
    const auto d = static_cast<std::size_t>(dim_);
    for (std::size_t k = 1; k <= lambdas_.size(); ++k) {
      auto& entries = all.emplace_back();
      const auto& t = lambdas_[k - 1];
      for (std::size_t flat = 0; flat < t.size(); ++flat) {
        std::vector<int> left(k);
        std::size_t rest = flat;
        for (std::size_t p = k; p-- > 0; rest /= d) left[p] = static_cast<int>(rest % d);
        for (int r = 0; r < dim_; ++r) {
          for (int c = 0; c < dim_; ++c) {
            if (!is_zero(t[flat](r, c))) entries.push_back({left, r, c, t[flat](r, c)});
          }
        }
      }
    }
    return all;
  }
};

/// Lambda_k must be symmetric in its left slots; tensors read from files
/// are not symmetric by construction. Returns the first offending slot.
template <class S>
std::optional<std::string> first_asymmetry(const GradedBrace<S>& br) {
  const auto d = static_cast<std::size_t>(br.dim());
  for (int k = 2; k <= br.max_degree(); ++k) {
    const auto& t = br.lambda(k);
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
      std::size_t rest = flat;
      for (int p = k - 1; p >= 0; --p, rest /= d) idx[static_cast<std::size_t>(p)] = static_cast<int>(rest % d);
      std::vector<int> sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      if (t[flat] != br.component(k, sorted)) {
        std::string site = "Lambda_" + std::to_string(k) + "(";
        for (std::size_t i = 0; i < idx.size(); ++i) site += (i ? "," : "") + std::to_string(idx[i] + 1);
        return site + ")";
      }
    }
  }
  return std::nullopt;
}

template <class S>
void check_dim(const GradedBrace<S>& b, const Vector<S>& x) {
  if (x.size() != b.dim()) {
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " in a " +
                            std::to_string(b.dim()) + "-dimensional brace");
  }
}

/// Lambda_k(xs[0], ..., xs[k-1]; .) as a matrix acting on the right argument.
template <class S>
Matrix<S> multilinear(const GradedBrace<S>& br, int k, std::span<const Vector<S>> xs) {
  if (xs.size() != static_cast<std::size_t>(k)) throw PreconditionViolated("Lambda_k takes k left arguments");
  Matrix<S> op = Matrix<S>::Zero(br.dim(), br.dim());
  for (const auto& e : br.support(k)) {
    S coef = e.value;
    for (std::size_t p = 0; p < e.left.size() && !is_zero(coef); ++p) coef = coef * xs[p](e.left[p]);
    if (!is_zero(coef)) op(e.out, e.right) += coef;
  }
  return op;
}

/// The matrix of b -> a * b.
template <class S>
Matrix<S> star_operator(const GradedBrace<S>& br, const Vector<S>& a) {
  check_dim(br, a);
  Matrix<S> op = Matrix<S>::Zero(br.dim(), br.dim());
  for (int k = 1; k <= br.max_degree(); ++k) {
    for (const auto& e : br.support(k)) {
      S coef = e.value;
      for (std::size_t p = 0; p < e.left.size() && !is_zero(coef); ++p) coef = coef * a(e.left[p]);
      if (!is_zero(coef)) op(e.out, e.right) += coef;
    }
  }
  return op;
}

template <class S>
Vector<S> star(const GradedBrace<S>& br, const Vector<S>& a, const Vector<S>& b) {
  check_dim(br, b);
  return star_operator(br, a) * b;
}

template <class S>
Vector<S> circ(const GradedBrace<S>& br, const Vector<S>& a, const Vector<S>& b) {
  return a + b + star(br, a, b);
}

/// The x with a o x = 0, by the iteration x <- -a - a * x.
template <class S>
Vector<S> circ_inverse(const GradedBrace<S>& br, const Vector<S>& a) {
  const Matrix<S> op = star_operator(br, a);
  Vector<S> x = -a;
  for (int step = 0; step <= br.class_bound(); ++step) {
    Vector<S> next = -a - op * x;
    if (next == x) {
      if (!is_zero(circ(br, a, x)) || !is_zero(circ(br, x, a))) {
        throw ConvergenceFailure("circ_inverse: fixed point is not a two-sided inverse");
      }
      return x;
    }
    x = std::move(next);
  }
  throw ConvergenceFailure("circ_inverse did not stabilize within the class bound");
}

struct BraceViolation {
  std::string law;
  std::string site;
};

namespace detail {

inline std::string basis_site(int i, int j, int k) {
  return "basis triple (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ", " +
         std::to_string(k + 1) + ")";
}

inline std::string trial_site(int t) { return "random triple #" + std::to_string(t); }

/// Runs `check` on all basis triples, then on `trials` seeded random triples.
template <class S, class Check>
std::optional<BraceViolation> sweep_triples(const GradedBrace<S>& br, int trials,
                                            std::uint64_t seed, Check&& check) {
  const int d = br.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        if (auto law = check(unit_vector<S>(d, i), unit_vector<S>(d, j), unit_vector<S>(d, k))) {
          return BraceViolation{*law, basis_site(i, j, k)};
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto a = random_vector<S>(br.field(), d, rng);
    auto b = random_vector<S>(br.field(), d, rng);
    auto c = random_vector<S>(br.field(), d, rng);
    if (auto law = check(a, b, c)) return BraceViolation{*law, trial_site(t)};
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks the two star-form laws defining a left brace:
///   a * (b + c) = a * b + a * c   and
///   (a + b + a * b) * c = a * c + b * c + a * (b * c).
template <class S>
std::optional<BraceViolation> check_left_brace(const GradedBrace<S>& br, int trials,
                                               std::uint64_t seed = kDefaultSeed) {
  return detail::sweep_triples(
      br, trials, seed,
      [&](const Vector<S>& a, const Vector<S>& b,
          const Vector<S>& c) -> std::optional<std::string> {
        const Matrix<S> sa = star_operator(br, a);
        if (sa * (b + c) != sa * b + sa * c) return "a*(b+c) = a*b + a*c";
        const Matrix<S> sb = star_operator(br, b);
        const Vector<S> ab = a + b + sa * b;
        if (star(br, ab, c) != sa * c + sb * c + sa * (sb * c)) {
          return "(a+b+a*b)*c = a*c + b*c + a*(b*c)";
        }
        return std::nullopt;
      });
}

/// Associativity of o, 0 as two-sided identity, and two-sided inverses.
template <class S>
std::optional<BraceViolation> check_group(const GradedBrace<S>& br, int trials,
                                          std::uint64_t seed = kDefaultSeed) {
  const Vector<S> zero = Vector<S>::Zero(br.dim());
  return detail::sweep_triples(
      br, trials, seed,
      [&](const Vector<S>& a, const Vector<S>& b,
          const Vector<S>& c) -> std::optional<std::string> {
        if (circ(br, circ(br, a, b), c) != circ(br, a, circ(br, b, c))) {
          return "(a o b) o c = a o (b o c)";
        }
        if (circ(br, zero, a) != a || circ(br, a, zero) != a) return "0 o a = a o 0 = a";
        try {
          circ_inverse(br, a);
        } catch (const ConvergenceFailure&) {
          return "a o a^-1 = a^-1 o a = 0";
        }
        return std::nullopt;
      });
}

/// a * (e b) = e (a * b) for random scalars e, including e = 0 and e = -1.
template <class S>
std::optional<BraceViolation> check_fbrace(const GradedBrace<S>& br, int trials,
                                           std::uint64_t seed = kDefaultSeed) {
  std::mt19937_64 rng(seed);
  const int d = br.dim();
  for (int t = 0; t < trials; ++t) {
    const auto a = random_vector<S>(br.field(), d, rng);
    const auto b = random_vector<S>(br.field(), d, rng);
    S e = random_scalar<S>(br.field(), rng);
    if (t == 0) e = scalar<S>(br.field(), 0);
    if (t == 1) e = scalar<S>(br.field(), -1);
    if (star(br, a, Vector<S>(e * b)) != Vector<S>(e * star(br, a, b))) {
      return BraceViolation{"a*(e b) = e (a*b)", detail::trial_site(t)};
    }
  }
  return std::nullopt;
}

/// span{ x * y : x in X, y in Y }, computed from the multilinear components
/// on basis tuples of X.
template <class S>
Subspace<S> star_span(const GradedBrace<S>& br, const Subspace<S>& left,
                      const Subspace<S>& right) {
  std::vector<Vector<S>> gens;
  if (left.is_zero() || right.is_zero()) return Subspace<S>(br.dim());
  std::vector<Vector<S>> xs;
  for (int i = 0; i < left.dim(); ++i) xs.push_back(left.basis_vector(i));
  for (int k = 1; k <= br.max_degree(); ++k) {
    for_each_multiset(left.dim(), k, [&](std::span<const int> tuple) {
      std::vector<Vector<S>> args;
      for (int i : tuple) args.push_back(xs[static_cast<std::size_t>(i)]);
      const Matrix<S> m = multilinear<S>(br, k, args);
      for (int j = 0; j < right.dim(); ++j) gens.push_back(m * right.basis_vector(j));
    });
  }
  return span(gens, br.dim());
}

template <class S>
struct ChainReport {
  std::vector<Subspace<S>> left;    // A^1, A^2, ... with A^{i+1} = A * A^i
  std::vector<Subspace<S>> right;   // A^(1), A^(2), ... with A^(i+1) = A^(i) * A
  std::vector<Subspace<S>> strong;  // A^[1], A^[2], ...
  std::optional<int> left_index;    // first i with A^i = 0
  std::optional<int> right_index;
  std::optional<int> strong_index;

  bool left_nilpotent() const { return left_index.has_value(); }
  bool right_nilpotent() const { return right_index.has_value(); }
  bool strongly_nilpotent() const { return strong_index.has_value(); }
};

/// The three radical chains. Left and right chains stop once zero or
/// stationary (each term depends only on its predecessor). The strong chain
/// stops at zero or after 2(d + 1) terms.
template <class S>
ChainReport<S> radical_chains(const GradedBrace<S>& br) {
  ChainReport<S> report;
  const auto full = Subspace<S>::full(br.dim());

  auto follow = [&](std::vector<Subspace<S>>& chain, std::optional<int>& index, bool left) {
    chain.push_back(full);
    while (true) {
      const auto& last = chain.back();
      if (last.is_zero()) {
        index = static_cast<int>(chain.size());
        return;
      }
      auto next = left ? star_span(br, full, last) : star_span(br, last, full);
      if (next == last) return;
      chain.push_back(std::move(next));
    }
  };
  follow(report.left, report.left_index, true);
  follow(report.right, report.right_index, false);

  auto& strong = report.strong;
  strong.push_back(full);
  const std::size_t cap = 2 * (static_cast<std::size_t>(br.dim()) + 1);
  while (!strong.back().is_zero() && strong.size() < cap) {
    const std::size_t i = strong.size() + 1;
    std::vector<Vector<S>> gens;
    for (std::size_t j = 1; j < i; ++j) {
      const auto piece = star_span(br, strong[j - 1], strong[i - j - 1]);
      for (int r = 0; r < piece.dim(); ++r) gens.push_back(piece.basis_vector(r));
    }
    strong.push_back(span(gens, br.dim()));
  }
  if (strong.back().is_zero()) report.strong_index = static_cast<int>(strong.size());
  return report;
}

}  // namespace plb
