#pragma once

// From a nilpotent pre-Lie algebra to its group of flows:
//   a o b = a + exp(L_{Omega(a)})(b),
// where Omega inverts W(a) = sum_{k>=1} L_a^{k-1}(a) / k!.

#include <map>
#include <random>
#include <vector>

#include "plb/brace.hpp"
#include "plb/prelie.hpp"

namespace plb {

namespace detail {

template <class S>
int flows_class(const PreLieAlgebra<S>& alg) {
  const int s = alg.nilpotency_class();
  alg.field().require_characteristic_above(s, "group of flows");
  return s;
}

/// 1/k! for k = 0..n-1.
template <class S>
std::vector<S> inverse_factorials(const ScalarField& field, int n) {
  std::vector<S> out;
  S f = scalar<S>(field, 1);
  for (int k = 0; k < n; ++k) {
    if (k > 0) f /= scalar<S>(field, k);
    out.push_back(f);
  }
  return out;
}

}  // namespace detail

/// exp(L) = sum_{k < s} L^k / k! for a left multiplication operator L of an
/// algebra of class s.
template <class S>
Matrix<S> exp_left_operator(const PreLieAlgebra<S>& alg, const Matrix<S>& l) {
  const int s = detail::flows_class(alg);
  const auto inv_fact = detail::inverse_factorials<S>(alg.field(), s);
  Matrix<S> power = Matrix<S>::Identity(alg.dim(), alg.dim());
  Matrix<S> sum = power;
  for (int k = 1; k < s; ++k) {
    power = power * l;
    sum += inv_fact[static_cast<std::size_t>(k)] * power;
  }
  return sum;
}

/// e^{L_a}(b) = b + a.b + (1/2!) a.(a.b) + ...
template <class S>
Vector<S> exp_L(const PreLieAlgebra<S>& alg, const Vector<S>& a, const Vector<S>& b) {
  check_dim(alg, b);
  const int s = detail::flows_class(alg);
  const auto inv_fact = detail::inverse_factorials<S>(alg.field(), s);
  const Matrix<S> l = left_operator(alg, a);
  Vector<S> power = b;
  Vector<S> sum = b;
  for (int k = 1; k < s; ++k) {
    power = l * power;
    if (is_zero(power)) break;
    sum += inv_fact[static_cast<std::size_t>(k)] * power;
  }
  return sum;
}

/// W(a) = a + (1/2!) a.a + (1/3!) a.(a.a) + ...
template <class S>
Vector<S> W(const PreLieAlgebra<S>& alg, const Vector<S>& a) {
  check_dim(alg, a);
  const int s = detail::flows_class(alg);
  const auto inv_fact = detail::inverse_factorials<S>(alg.field(), s);
  const Matrix<S> l = left_operator(alg, a);
  Vector<S> power = a;
  Vector<S> sum = a;
  for (int k = 2; k < s; ++k) {
    power = l * power;
    if (is_zero(power)) break;
    sum += inv_fact[static_cast<std::size_t>(k)] * power;
  }
  return sum;
}

/// The unique x with W(x) = a, by x <- a - (W(x) - x). Each step fixes one
/// more degree, so the iteration is exact after at most s steps.
template <class S>
Vector<S> Omega(const PreLieAlgebra<S>& alg, const Vector<S>& a) {
  const int s = detail::flows_class(alg);
  Vector<S> x = a;
  for (int step = 0; step <= s; ++step) {
    const Vector<S> wx = W(alg, x);
    if (wx == a) return x;
    x = a - (wx - x);
  }
  throw ConvergenceFailure("Omega did not stabilize within the nilpotency class");
}

/// a o b = a + e^{L_{Omega(a)}}(b).
template <class S>
Vector<S> circ(const PreLieAlgebra<S>& alg, const Vector<S>& a, const Vector<S>& b) {
  return a + exp_L(alg, Omega(alg, a), b);
}

/// Matrix of b -> (a o b) - a - b.
template <class S>
Matrix<S> flows_star_operator(const PreLieAlgebra<S>& alg, const Vector<S>& a) {
  Matrix<S> e = exp_left_operator(alg, left_operator(alg, Omega(alg, a)));
  e -= Matrix<S>::Identity(alg.dim(), alg.dim());
  return e;
}

/// The group-of-flows brace in graded multilinear form.
///
/// For each vector v, t -> star(t v, .) is a matrix polynomial without
/// constant term; its degree-k coefficient is the diagonal Lambda_k(v, ..., v).
/// The symmetric tensors are recovered from diagonals by polarization over
/// basis multisets. The result is checked against circ on every basis pair
/// and on 20 seeded random pairs.
template <class S>
GradedBrace<S> to_brace(const PreLieAlgebra<S>& alg, std::uint64_t seed = kDefaultSeed) {
  const int s = detail::flows_class(alg);
  const int d = alg.dim();
  const ScalarField& field = alg.field();
  GradedBrace<S> br(field, d, s);
  const int max_k = br.max_degree();

  // Coefficients of t -> star(t v, .), keyed by the multiplicities of v in
  // the standard basis (all vectors involved are sums of basis vectors).
  std::map<std::vector<int>, std::vector<Matrix<S>>> memo;
  auto diagonal = [&](const std::vector<int>& counts) -> const std::vector<Matrix<S>>& {
    auto it = memo.find(counts);
    if (it != memo.end()) return it->second;
    Vector<S> v(d);
    for (int i = 0; i < d; ++i) v(i) = scalar<S>(field, counts[static_cast<std::size_t>(i)]);
    auto coeffs = polynomial_coefficients<S>(field, max_k, [&](const S& t) {
      return Matrix<S>(flows_star_operator(alg, Vector<S>(t * v)));
    });
    if (!is_zero(coeffs.front())) {
      throw InternalInconsistency("to_brace: star(t a, b) has a constant term");
    }
    return memo.emplace(counts, std::move(coeffs)).first->second;
  };

  const auto inv_fact = detail::inverse_factorials<S>(field, max_k + 1);
  for (int k = 1; k <= max_k; ++k) {
    for_each_multiset(d, k, [&](std::span<const int> tuple) {
      Matrix<S> value = Matrix<S>::Zero(d, d);
      for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> counts(static_cast<std::size_t>(d), 0);
        int size = 0;
        for (int p = 0; p < k; ++p) {
          if (mask & (1u << p)) {
            ++counts[static_cast<std::size_t>(tuple[static_cast<std::size_t>(p)])];
            ++size;
          }
        }
        const Matrix<S>& diag = diagonal(counts)[static_cast<std::size_t>(k)];
        if ((k - size) % 2 == 0) {
          value += diag;
        } else {
          value -= diag;
        }
      }
      value *= inv_fact[static_cast<std::size_t>(k)];
      std::vector<int> perm(tuple.begin(), tuple.end());
      do {
        br.component(k, perm) = value;
      } while (std::next_permutation(perm.begin(), perm.end()));
    });
  }

  auto agrees = [&](const Vector<S>& a, const Vector<S>& b) {
    return star(br, a, b) == Vector<S>(circ(alg, a, b) - a - b);
  };
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (!agrees(unit_vector<S>(d, i), unit_vector<S>(d, j))) {
        throw InternalInconsistency("to_brace: tensors disagree with circ on a basis pair");
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_vector<S>(field, d, rng);
    const auto b = random_vector<S>(field, d, rng);
    if (!agrees(a, b)) {
      throw InternalInconsistency("to_brace: tensors disagree with circ on a random pair");
    }
  }
  return br;
}

}  // namespace plb
