#include "plb/free_expansion.hpp"

#include <functional>

namespace plb {

Expander::Expander(int degree_bound) : bound_(degree_bound) {
  if (degree_bound < 1) throw PreconditionViolated("degree bound must be positive");
}

std::string Expander::key(const StarExpr& left, const StarWord& w, int budget) {
  return std::to_string(budget) + "|" + left.str() + "|" + w.str();
}

StarExpr Expander::star(const StarExpr& left, const StarExpr& right, int budget) {
  StarExpr out;
  for (const auto& [w, c] : right.terms()) out += c * left_star(left, w, budget);
  return out;
}

StarExpr Expander::left_star(const StarExpr& left_in, const StarWord& w, int budget) {
  if (left_in.empty() || left_in.min_degree() + w.degree() > budget) return {};
  const StarExpr left = left_in.truncated(budget - w.degree());
  const std::string k = key(left, w, budget);
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;

  StarExpr result;
  if (left.size() == 1) {
    const auto& [u, n] = *left.terms().begin();
    if (!n.is_integer()) {
      throw PreconditionViolated("left slot coefficient " + n.str() + " is not an integer");
    }
    if (n == Rational(1)) {
      result = StarExpr(StarWord::product(u, w));
    } else if (n == Rational(-1)) {
      result = negated_star(u, w, budget);
    } else if (n > Rational(0)) {
      result = sum_star(StarExpr(u), StarExpr(u, n - Rational(1)), w, budget);
    } else {
      result = sum_star(StarExpr(u, Rational(-1)), StarExpr(u, n + Rational(1)), w, budget);
    }
  } else {
    const auto& [u, n] = *left.terms().begin();
    StarExpr first(u, n);
    StarExpr rest = left - first;
    result = sum_star(first, rest, w, budget);
  }
  result = result.truncated(budget);
  memo_.emplace(k, result);
  return result;
}

StarExpr Expander::sum_star(const StarExpr& a, const StarExpr& b, const StarWord& c,
                            int budget) {
  StarExpr out = left_star(a, c, budget) + left_star(b, c, budget);
  StarExpr d = a;
  StarExpr dp = b;
  const StarExpr cexpr(c);
  // d_i * d_i' only matters through (d_i * d_i') * c and later products with
  // c on the right, so it is needed up to degree budget - deg(c).
  const int inner = budget - c.degree();
  // The series has at most 2 * budget + 1 nonzero terms; in practice d_i'
  // leaves the degree window much earlier.
  for (int i = 0; i <= 2 * budget; ++i) {
    if (dp.empty() || dp.min_degree() + c.degree() + 1 > budget) break;
    const StarExpr ddp = star(d, dp, inner);                  // d_i * d_i'
    const StarExpr t1 = star(ddp, cexpr, budget);             // (d_i * d_i') * c
    const StarExpr t2 = star(d, star(dp, cexpr, budget), budget);  // d_i * (d_i' * c)
    const Rational sign = (i % 2 == 0) ? Rational(-1) : Rational(1);
    out += sign * (t1 - t2);
    d += dp;
    dp = ddp;
  }
  return out.truncated(budget);
}

// (-u) * c = -(u * c) + (-(u * u)) * c - u * ((-u) * c), obtained from the
// sum expansion with a = u, b = -u; solved by iteration since the unknown
// reappears only in degree at least deg(u) higher.
StarExpr Expander::negated_star(const StarWord& u, const StarWord& c, int budget) {
  StarExpr base = -StarExpr(StarWord::product(u, c));
  base += left_star(StarExpr(StarWord::product(u, u), Rational(-1)), c, budget);
  base = base.truncated(budget);
  const StarExpr uexpr(u);
  StarExpr x = base;
  for (int step = 0; step <= budget + 1; ++step) {
    StarExpr next = base - star(uexpr, x, budget);
    if (next == x) return x;
    x = std::move(next);
  }
  throw ConvergenceFailure("negated star expansion did not stabilize");
}

StarExpr lemma15_rhs(const StarExpr& a, const StarExpr& b, const StarExpr& c,
                     int degree_bound) {
  if (degree_bound < 2) throw PreconditionViolated("lemma15_rhs needs degree_bound >= 2");
  Expander e(degree_bound);
  StarExpr out;
  for (const auto& [w, coeff] : c.terms()) out += coeff * e.sum_star(a, b, w);
  return out;
}

StarExpr leading_sum_terms(char x, char y, char z) {
  const auto gx = StarWord::generator(x);
  const auto gy = StarWord::generator(y);
  const auto gz = StarWord::generator(z);
  StarExpr out;
  out.add(StarWord::product(gx, gz), Rational(1));
  out.add(StarWord::product(gy, gz), Rational(1));
  out.add(StarWord::product(gx, StarWord::product(gy, gz)), Rational(1));
  out.add(StarWord::product(StarWord::product(gx, gy), gz), Rational(-1));
  return out;
}

StarExpr sum_correction(char x, char y, char z, int degree_bound) {
  const auto rhs = lemma15_rhs(StarWord::generator(x), StarWord::generator(y),
                               StarWord::generator(z), degree_bound);
  return rhs - leading_sum_terms(x, y, z).truncated(degree_bound);
}

DoublingMatrix doubling_matrix(int degree_bound) {
  if (degree_bound < 2) throw PreconditionViolated("doubling_matrix needs degree_bound >= 2");
  DoublingMatrix out;
  out.basis = word_basis_xy(degree_bound);
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < out.basis.size(); ++i) position[out.basis[i].str()] = i;

  Expander e(degree_bound);
  std::map<std::string, StarExpr> memo;
  std::function<StarExpr(const StarWord&)> doubled = [&](const StarWord& w) -> StarExpr {
    if (w.is_generator()) {
      return w.symbol() == 'x' ? StarExpr(w, Rational(2)) : StarExpr(w);
    }
    if (auto it = memo.find(w.str()); it != memo.end()) return it->second;
    StarExpr r = e.star(doubled(w.left()), doubled(w.right()));
    memo.emplace(w.str(), r);
    return r;
  };

  const auto n = static_cast<Eigen::Index>(out.basis.size());
  out.m = Matrix<Rational>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const StarExpr image = doubled(out.basis[static_cast<std::size_t>(i)]);
    for (const auto& [w, c] : image.terms()) {
      auto it = position.find(w.str());
      if (it == position.end()) {
        throw InternalInconsistency("doubling produced word " + w.str() + " outside E_{x,y}");
      }
      out.m(i, static_cast<Eigen::Index>(it->second)) = c;
    }
  }
  return out;
}

}  // namespace plb
