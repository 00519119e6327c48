#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "plb/algebra_file.hpp"
#include "plb/flows.hpp"

namespace plb::test {

inline std::string corpus_path(const std::string& rel) {
  return std::string(PLB_CORPUS_DIR) + "/" + rel;
}

// Rational corpus members; prime twins carry a "_p<p>" suffix.
inline const std::vector<std::string>& members() {
  static const std::vector<std::string> names{"zero1", "zero2", "zero3", "N2",
                                              "H3",    "F4",    "F5"};
  return names;
}

inline std::string twin(const std::string& name, unsigned p) {
  return p == 0 ? name : name + "_p" + std::to_string(p);
}

inline AlgebraFile prelie_file(const std::string& name) {
  return load_algebra_file(corpus_path("prelie/" + name + ".json"));
}

inline AlgebraFile brace_file(const std::string& name) {
  return load_algebra_file(corpus_path("brace/" + name + ".json"));
}

template <class S>
PreLieAlgebra<S> algebra(const std::string& name) {
  return algebra_from_file<S>(prelie_file(name)).validated();
}

template <class S>
GradedBrace<S> brace(const std::string& name) {
  return brace_from_file<S>(brace_file(name));
}

inline ScalarField field_for(unsigned p) {
  return p == 0 ? ScalarField::rationals() : ScalarField::prime(p);
}

template <class S>
Vector<S> vec(const ScalarField& f, std::initializer_list<Rational> xs) {
  Vector<S> v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = from_rational<S>(f, x);
  return v;
}

inline Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace plb::test
