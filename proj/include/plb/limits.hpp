#pragma once

// From a strongly nilpotent brace back to its pre-Lie algebra:
//   a . b = lim_{n -> oo} 2^n ((2^-n a) * b).
// Since t -> (t a) * b is a polynomial without constant term, the limit is
// exactly its linear coefficient, which is recovered by interpolation.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "plb/brace.hpp"
#include "plb/flows.hpp"
#include "plb/free_expansion.hpp"
#include "plb/prelie.hpp"

namespace plb {

/// Matrix of b -> a . b. Computed twice, as the linear coefficient of the
/// interpolated curve t -> star(t a, .) and as Lambda_1(a; .); the two must
/// agree.
template <class S>
Matrix<S> dot_operator(const GradedBrace<S>& br, const Vector<S>& a) {
  check_dim(br, a);
  const auto coeffs = polynomial_coefficients<S>(
      br.field(), br.max_degree(),
      [&](const S& t) { return star_operator(br, Vector<S>(t * a)); });
  if (!is_zero(coeffs.front())) {
    throw InternalInconsistency("t -> (t a) * b has a nonzero constant term");
  }
  const std::vector<Vector<S>> args{a};
  if (coeffs[1] != multilinear<S>(br, 1, args)) {
    throw InternalInconsistency("interpolated limit differs from Lambda_1");
  }
  return coeffs[1];
}

template <class S>
Vector<S> dot(const GradedBrace<S>& br, const Vector<S>& a, const Vector<S>& b) {
  check_dim(br, b);
  return dot_operator(br, a) * b;
}

template <class S>
struct LimitWitness {
  std::vector<Vector<S>> sequence;    // 2^n ((2^-n a) * b), n = 0..n_max
  std::vector<Vector<S>> components;  // Lambda_k(a, ..., a; b), k = 1..s-1
  Vector<S> limit;                    // a . b
  std::vector<Vector<S>> deviations;  // sequence[n] - limit
  bool closed_form_holds = false;     // sequence[n] = sum_k 2^{n(1-k)} components[k]
  bool halving_holds = false;         // each degree-k part scales by 2^{1-k} per step
};

template <class S>
LimitWitness<S> limit_witness(const GradedBrace<S>& br, const Vector<S>& a, const Vector<S>& b,
                              int n_max) {
  const ScalarField& field = br.field();
  const S two = scalar<S>(field, 2);
  const S half = scalar<S>(field, 1, 2);
  LimitWitness<S> w;
  for (int k = 1; k <= br.max_degree(); ++k) {
    const std::vector<Vector<S>> args(static_cast<std::size_t>(k), a);
    w.components.push_back(multilinear<S>(br, k, args) * b);
  }
  w.limit = dot(br, a, b);

  // parts[k-1] tracks 2^{n(1-k)} Lambda_k(a..a; b) at the current step.
  std::vector<Vector<S>> parts = w.components;
  std::vector<Vector<S>> previous;
  std::vector<S> factor;  // 2^{1-k}
  S f = scalar<S>(field, 1);
  for (int k = 1; k <= br.max_degree(); ++k, f *= half) factor.push_back(f);

  w.closed_form_holds = true;
  w.halving_holds = true;
  S scale = scalar<S>(field, 1);   // 2^n
  S shrink = scalar<S>(field, 1);  // 2^-n
  for (int n = 0; n <= n_max; ++n) {
    const Vector<S> value = scale * star(br, Vector<S>(shrink * a), b);
    w.sequence.push_back(value);
    Vector<S> higher = Vector<S>::Zero(br.dim());
    for (std::size_t k = 1; k < parts.size(); ++k) higher += parts[k];
    if (Vector<S>(parts.front() + higher) != value) w.closed_form_holds = false;
    Vector<S> deviation = value - w.limit;
    if (deviation != higher) w.halving_holds = false;
    if (n > 0) {
      // The previous deviation with its degree-k part scaled by 2^{1-k}.
      Vector<S> expected = Vector<S>::Zero(br.dim());
      for (std::size_t k = 1; k < parts.size(); ++k) expected += factor[k] * previous[k];
      if (expected != deviation) w.halving_holds = false;
    }
    w.deviations.push_back(std::move(deviation));
    previous = parts;
    for (std::size_t k = 0; k < parts.size(); ++k) parts[k] = factor[k] * parts[k];
    scale *= two;
    shrink *= half;
  }
  return w;
}

/// (alpha a + gamma b) . c = alpha (a . c) + gamma (b . c) and
/// a . (alpha b + gamma c) = alpha (a . b) + gamma (a . c), on seeded samples.
template <class S>
std::optional<BraceViolation> check_bilinearity(const GradedBrace<S>& br, int trials,
                                                std::uint64_t seed = kDefaultSeed) {
  std::mt19937_64 rng(seed);
  const ScalarField& field = br.field();
  for (int t = 0; t < trials; ++t) {
    const auto a = random_vector<S>(field, br.dim(), rng);
    const auto b = random_vector<S>(field, br.dim(), rng);
    const auto c = random_vector<S>(field, br.dim(), rng);
    const S alpha = random_scalar<S>(field, rng);
    const S gamma = random_scalar<S>(field, rng);
    const Vector<S> left_comb = alpha * a + gamma * b;
    if (dot(br, left_comb, c) != Vector<S>(alpha * dot(br, a, c) + gamma * dot(br, b, c))) {
      return BraceViolation{"(alpha a + gamma b).c = alpha a.c + gamma b.c",
                            detail::trial_site(t)};
    }
    const Vector<S> right_comb = alpha * b + gamma * c;
    if (dot(br, a, right_comb) != Vector<S>(alpha * dot(br, a, b) + gamma * dot(br, a, c))) {
      return BraceViolation{"a.(alpha b + gamma c) = alpha a.b + gamma a.c",
                            detail::trial_site(t)};
    }
  }
  return std::nullopt;
}

/// The pre-Lie algebra of a strongly nilpotent brace. Throws NotPreLie when
/// the limit product fails the pre-Lie identity or nilpotency, which means
/// the input was not a genuine strongly nilpotent brace.
template <class S>
PreLieAlgebra<S> to_prelie(const GradedBrace<S>& br) {
  const int d = br.dim();
  std::vector<ProductEntry<S>> entries;
  for (int i = 0; i < d; ++i) {
    const Matrix<S> op = dot_operator(br, unit_vector<S>(d, i));
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        if (!is_zero(op(k, j))) entries.push_back({i, j, k, op(k, j)});
      }
    }
  }
  auto alg = PreLieAlgebra<S>::unchecked(br.field(), d, entries);
  if (auto v = check_prelie_identity(alg)) {
    throw NotPreLie("limit product violates the pre-Lie identity at basis triple (" +
                    std::to_string(v->i + 1) + ", " + std::to_string(v->j + 1) + ", " +
                    std::to_string(v->k + 1) + ")");
  }
  if (!nilpotency_index(alg)) throw NotPreLie("limit product is not nilpotent");
  return alg.validated();
}

struct Mismatch {
  std::string what;
};

template <class S>
std::optional<Mismatch> compare_braces(const GradedBrace<S>& x, const GradedBrace<S>& y) {
  if (x.dim() != y.dim()) return Mismatch{"dimensions differ"};
  const int top = std::max(x.max_degree(), y.max_degree());
  for (int k = 1; k <= top; ++k) {
    const std::size_t count = k <= x.max_degree() ? x.lambda(k).size() : y.lambda(k).size();
    for (std::size_t idx = 0; idx < count; ++idx) {
      const Matrix<S> zero = Matrix<S>::Zero(x.dim(), x.dim());
      const Matrix<S>& u = k <= x.max_degree() ? x.lambda(k)[idx] : zero;
      const Matrix<S>& v = k <= y.max_degree() ? y.lambda(k)[idx] : zero;
      if (u != v) return Mismatch{"Lambda_" + std::to_string(k) + " differs"};
    }
  }
  return std::nullopt;
}

/// to_prelie(to_brace(alg)) reproduces the structure constants of alg.
template <class S>
std::optional<Mismatch> roundtrip_prelie(const PreLieAlgebra<S>& alg) {
  const auto back = to_prelie(to_brace(alg));
  for (int i = 0; i < alg.dim(); ++i) {
    for (int j = 0; j < alg.dim(); ++j) {
      if (back.product(i, j) != alg.product(i, j)) {
        return Mismatch{"product e" + std::to_string(i + 1) + ".e" + std::to_string(j + 1) +
                        " differs"};
      }
    }
  }
  return std::nullopt;
}

/// to_brace(to_prelie(br)) reproduces every Lambda_k of br. Any failure of the
/// inverse construction on an invalid brace is reported as a mismatch.
template <class S>
std::optional<Mismatch> roundtrip_brace(const GradedBrace<S>& br) {
  try {
    return compare_braces(to_brace(to_prelie(br)), br);
  } catch (const NotPreLie& e) {
    return Mismatch{e.what()};
  } catch (const InternalInconsistency& e) {
    return Mismatch{e.what()};
  }
}

/// Checks a*(b*c) - (a*b)*c - b*(a*c) + (b*a)*c = d(b, a, c) - d(a, b, c),
/// where d is the correction part of the expansion of (x + y) * z, on all
/// basis triples and seeded random triples.
template <class S>
std::optional<BraceViolation> prelie_identity_from_lemma15(const GradedBrace<S>& br, int trials,
                                                           std::uint64_t seed = kDefaultSeed) {
  const int bound = br.class_bound();
  const StarExpr dxy = sum_correction('x', 'y', 'z', bound);
  const StarExpr dyx = sum_correction('y', 'x', 'z', bound);
  return detail::sweep_triples(
      br, trials, seed,
      [&](const Vector<S>& a, const Vector<S>& b,
          const Vector<S>& c) -> std::optional<std::string> {
        const Vector<S> lhs = star(br, a, star(br, b, c)) - star(br, star(br, a, b), c) -
                              star(br, b, star(br, a, c)) + star(br, star(br, b, a), c);
        const Bindings<S> bind{{'x', a}, {'y', b}, {'z', c}};
        const Vector<S> rhs = evaluate(dyx, bind, br) - evaluate(dxy, bind, br);
        if (lhs != rhs) return "x*(y*z)-(x*y)*z-y*(x*z)+(y*x)*z = d(y,x,z)-d(x,y,z)";
        return std::nullopt;
      });
}

}  // namespace plb
