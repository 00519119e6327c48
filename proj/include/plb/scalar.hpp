#pragma once

// Exact scalar types usable as Eigen scalars.
//
// Two scalar types are provided: Rational (GMP-backed, always in lowest terms
// with positive denominator) and ModP (residues modulo a runtime prime).
// A ScalarField value names the field at runtime; FieldTraits<S> maps field
// constants into a concrete scalar type.

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>

#include "plb/errors.hpp"

namespace plb {

bool is_prime(std::uint64_t n);

/// Descriptor of the coefficient field: Q, or F_p for a prime p.
class ScalarField {
 public:
  enum class Kind { Rationals, PrimeField };

  static ScalarField rationals() { return ScalarField(Kind::Rationals, 0); }
  static ScalarField prime(std::uint32_t p);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }

  /// Throws CharacteristicTooSmall unless char = 0 or char > bound.
  void require_characteristic_above(int bound, std::string_view what) const;

  std::string str() const;

  friend bool operator==(const ScalarField&, const ScalarField&) = default;

 private:
  ScalarField(Kind kind, std::uint32_t characteristic)
      : kind_(kind), characteristic_(characteristic) {}

  Kind kind_;
  std::uint32_t characteristic_;
};

class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT: integer literals are scalars
  Rational(long num, long den);
  explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

  /// Parses "num/den" or "num" (optional sign on the numerator only).
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Canonical "num/den" text, always with an explicit denominator.
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// Residue modulo a prime p < 2^31.
///
/// A value constructed from a bare integer (as Eigen does for Scalar(0) and
/// Scalar(1)) is not yet tied to a modulus; it adopts the modulus of the first
/// bound operand it meets. Mixing two different moduli throws FieldMismatch.
class ModP {
 public:
  ModP() = default;
  ModP(long n) : value_(n) {}  // NOLINT: integer literals are scalars
  ModP(long n, std::uint32_t p);

  std::uint32_t modulus() const { return modulus_; }
  bool is_bound() const { return modulus_ != 0; }
  /// Representative in [0, p) (or the raw integer when unbound).
  std::int64_t residue() const { return value_; }

  bool is_zero() const { return value_ == 0; }
  ModP inverse() const;
  std::string str() const;

  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend ModP operator-(const ModP& a) { return ModP(0) - a; }

  friend bool operator==(const ModP& a, const ModP& b);

 private:
  static std::uint32_t common_modulus(const ModP& a, const ModP& b);
  ModP bound_to(std::uint32_t p) const;

  std::int64_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);
std::ostream& operator<<(std::ostream& os, const ModP& x);

inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline bool is_zero(const ModP& x) { return x.is_zero(); }
inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const ModP& x) { return x.str(); }

/// Maps field constants into a concrete scalar type.
template <class S>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static bool supports(const ScalarField& f) { return f.is_rationals(); }
  static Rational from_rational(const ScalarField&, const Rational& q) { return q; }
};

template <>
struct FieldTraits<ModP> {
  static bool supports(const ScalarField& f) { return !f.is_rationals(); }
  static ModP from_rational(const ScalarField& f, const Rational& q);
};

template <class S>
S from_rational(const ScalarField& field, const Rational& q) {
  if (!FieldTraits<S>::supports(field)) {
    throw FieldMismatch("scalar type does not match field " + field.str());
  }
  return FieldTraits<S>::from_rational(field, q);
}

template <class S>
S scalar(const ScalarField& field, long num, long den = 1) {
  return from_rational<S>(field, Rational(num, den));
}

/// Small random exact scalar: numerator in [-6, 6], denominator in [1, 5].
template <class S, class Rng>
S random_scalar(const ScalarField& field, Rng& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  long d = den(rng);
  if (!field.is_rationals()) {
    while (d % static_cast<long>(field.characteristic()) == 0) d = den(rng);
  }
  return scalar<S>(field, num(rng), d);
}

}  // namespace plb

namespace Eigen {

template <>
struct NumTraits<plb::Rational> : GenericNumTraits<plb::Rational> {
  using Real = plb::Rational;
  using NonInteger = plb::Rational;
  using Literal = plb::Rational;
  using Nested = plb::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<plb::ModP> : GenericNumTraits<plb::ModP> {
  using Real = plb::ModP;
  using NonInteger = plb::ModP;
  using Literal = plb::ModP;
  using Nested = plb::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
