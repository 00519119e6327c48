#include "plb/scalar.hpp"

#include <charconv>
#include <ostream>

namespace plb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ScalarField ScalarField::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) {
    throw PreconditionViolated("characteristic " + std::to_string(p) +
                               " is not a prime below 2^31");
  }
  return ScalarField(Kind::PrimeField, p);
}

void ScalarField::require_characteristic_above(int bound, std::string_view what) const {
  if (is_rationals()) return;
  if (static_cast<long>(characteristic_) <= bound) {
    throw CharacteristicTooSmall(std::string(what) + ": characteristic " +
                                 std::to_string(characteristic_) + " must exceed " +
                                 std::to_string(bound));
  }
}

std::string ScalarField::str() const {
  return is_rationals() ? std::string("Q") : "F_" + std::to_string(characteristic_);
}

// Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_text(num_text, true)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_text(den_text, false)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    den = parse_integer(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(mpq_class(parse_integer(num_text), den));
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

// ModP

namespace {

std::int64_t reduce(std::int64_t v, std::uint32_t p) {
  const auto m = static_cast<std::int64_t>(p);
  v %= m;
  return v < 0 ? v + m : v;
}

}  // namespace

ModP::ModP(long n, std::uint32_t p) : value_(reduce(n, p)), modulus_(p) {}

std::uint32_t ModP::common_modulus(const ModP& a, const ModP& b) {
  if (a.modulus_ != 0 && b.modulus_ != 0 && a.modulus_ != b.modulus_) {
    throw FieldMismatch("residues modulo " + std::to_string(a.modulus_) + " and " +
                        std::to_string(b.modulus_) + " combined");
  }
  return a.modulus_ != 0 ? a.modulus_ : b.modulus_;
}

ModP ModP::bound_to(std::uint32_t p) const {
  if (p == 0 || modulus_ == p) return *this;
  return ModP(value_, p);
}

ModP& ModP::operator+=(const ModP& o) {
  const auto p = common_modulus(*this, o);
  if (p == 0) {
    value_ += o.value_;
    return *this;
  }
  *this = ModP(bound_to(p).value_ + o.bound_to(p).value_, p);
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  const auto p = common_modulus(*this, o);
  if (p == 0) {
    value_ -= o.value_;
    return *this;
  }
  *this = ModP(bound_to(p).value_ - o.bound_to(p).value_, p);
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  const auto p = common_modulus(*this, o);
  if (p == 0) {
    value_ *= o.value_;
    return *this;
  }
  const auto prod = static_cast<std::uint64_t>(bound_to(p).value_) *
                    static_cast<std::uint64_t>(o.bound_to(p).value_);
  value_ = static_cast<std::int64_t>(prod % p);
  modulus_ = p;
  return *this;
}

ModP ModP::inverse() const {
  if (modulus_ == 0) {
    if (value_ == 1 || value_ == -1) return *this;
    throw FieldMismatch("inverse of a residue with no modulus");
  }
  if (value_ == 0) throw std::domain_error("division by zero residue");
  // Fermat: x^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = static_cast<std::uint64_t>(value_);
  std::uint64_t e = modulus_ - 2;
  while (e > 0) {
    if (e & 1u) result = result * base % modulus_;
    base = base * base % modulus_;
    e >>= 1u;
  }
  return ModP(static_cast<long>(result), modulus_);
}

bool operator==(const ModP& a, const ModP& b) {
  const auto p = ModP::common_modulus(a, b);
  return a.bound_to(p).value_ == b.bound_to(p).value_;
}

std::string ModP::str() const { return std::to_string(value_) + "/1"; }

std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.str(); }

ModP FieldTraits<ModP>::from_rational(const ScalarField& f, const Rational& q) {
  const auto p = f.characteristic();
  const auto num = mpz_class(q.numerator() % p);
  const auto den = mpz_class(q.denominator() % p);
  if (den == 0) {
    throw CharacteristicTooSmall("denominator of " + q.str() + " vanishes modulo " +
                                 std::to_string(p));
  }
  return ModP(num.get_si(), p) / ModP(den.get_si(), p);
}

}  // namespace plb
