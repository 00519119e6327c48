#pragma once

// JSON interchange format for pre-Lie algebras and graded braces.
//
//   {
//     "format_version": 1,
//     "kind": "prelie" | "brace",
//     "field": "Q" | {"p": 7},
//     "dim": 4,
//     "basis": ["e1", ...],
//     "class_bound": 4,                      (brace only)
//     "entries": [[i, j, k, "num/den"], ...]            (prelie)
//                [[k, [i1..ik], j, out, "num/den"], ...] (brace)
//   }
//
// Indices are 1-based. Values are exact "num/den" strings. Only nonzero
// entries are written, in sorted order.

#include <optional>
#include <string>
#include <vector>

#include "plb/brace.hpp"
#include "plb/prelie.hpp"

namespace plb {

struct AlgebraFile {
  enum class Kind { PreLie, Brace };

  struct PreLieEntry {
    int i, j, k;  // 0-based in memory
    Rational value;
  };
  struct BraceEntry {
    int degree;
    std::vector<int> left;  // 0-based in memory
    int right, out;
    Rational value;
  };

  Kind kind = Kind::PreLie;
  ScalarField field = ScalarField::rationals();
  int dim = 0;
  std::vector<std::string> basis;
  int class_bound = 0;
  std::vector<PreLieEntry> prelie_entries;
  std::vector<BraceEntry> brace_entries;
};

/// Throws ParseError on malformed input, unknown keys, or out-of-range indices.
AlgebraFile parse_algebra_file(const std::string& text);
AlgebraFile load_algebra_file(const std::string& path);
std::string dump_algebra_file(const AlgebraFile& file);
void save_algebra_file(const AlgebraFile& file, const std::string& path);

/// Converts file values into scalars of `field` (the file's own field unless
/// overridden).
template <class S>
PreLieAlgebra<S> algebra_from_file(const AlgebraFile& f) {
  std::vector<ProductEntry<S>> entries;
  for (const auto& e : f.prelie_entries) {
    entries.push_back({e.i, e.j, e.k, from_rational<S>(f.field, e.value)});
  }
  return PreLieAlgebra<S>::unchecked(f.field, f.dim, entries, f.basis);
}

template <class S>
GradedBrace<S> brace_from_file(const AlgebraFile& f) {
  GradedBrace<S> br(f.field, f.dim, f.class_bound);
  for (const auto& e : f.brace_entries) {
    br.component(e.degree, e.left)(e.out, e.right) += from_rational<S>(f.field, e.value);
  }
  return br;
}

namespace detail {

inline Rational file_value(const Rational& q) { return q; }
inline Rational file_value(const ModP& x) { return Rational(x.residue()); }

}  // namespace detail

template <class S>
AlgebraFile file_from_algebra(const PreLieAlgebra<S>& alg) {
  AlgebraFile f;
  f.kind = AlgebraFile::Kind::PreLie;
  f.field = alg.field();
  f.dim = alg.dim();
  f.basis = alg.basis_names();
  for (const auto& e : alg.entries()) {
    f.prelie_entries.push_back({e.i, e.j, e.k, detail::file_value(e.value)});
  }
  return f;
}

template <class S>
AlgebraFile file_from_brace(const GradedBrace<S>& br, std::vector<std::string> basis = {}) {
  AlgebraFile f;
  f.kind = AlgebraFile::Kind::Brace;
  f.field = br.field();
  f.dim = br.dim();
  f.class_bound = br.class_bound();
  f.basis = std::move(basis);
  if (f.basis.empty()) {
    for (int i = 1; i <= br.dim(); ++i) f.basis.push_back("e" + std::to_string(i));
  }
  for (int k = 1; k <= br.max_degree(); ++k) {
    const auto& tensor = br.lambda(k);
    for (std::size_t flat = 0; flat < tensor.size(); ++flat) {
      std::vector<int> left(static_cast<std::size_t>(k));
      std::size_t rest = flat;
      for (int p = k - 1; p >= 0; --p) {
        left[static_cast<std::size_t>(p)] = static_cast<int>(rest % static_cast<std::size_t>(br.dim()));
        rest /= static_cast<std::size_t>(br.dim());
      }
      const Matrix<S>& m = tensor[flat];
      for (int j = 0; j < br.dim(); ++j) {
        for (int out = 0; out < br.dim(); ++out) {
          if (!is_zero(m(out, j))) {
            f.brace_entries.push_back({k, left, j, out, detail::file_value(m(out, j))});
          }
        }
      }
    }
  }
  return f;
}

}  // namespace plb
