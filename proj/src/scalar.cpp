#include "kzaut/scalar.hpp"

#include <limits>

#include "kzaut/errors.hpp"

namespace kzaut {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

const Scalar::Residue& same_modulus(const Scalar::Residue& a, const Scalar::Residue* b) {
  if (b == nullptr || a.modulus != b->modulus) throw ContextError("scalars from different fields");
  return *b;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p > std::numeric_limits<std::uint32_t>::max()) throw DomainError("prime modulus must be below 2^32");
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
      throw DomainError("bad field modulus '" + digits + "'");
    return prime(std::stoull(digits));
  }
  throw DomainError("unknown field '" + text + "' (expected q or fp:<prime>)");
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar(mpq_class(mpz_class(static_cast<long>(v))));
  const auto p = static_cast<long long>(p_);
  return Scalar(static_cast<std::uint64_t>(((v % p) + p) % p), p_);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (is_rational()) return Scalar(q);
  mpq_class c(q);
  c.canonicalize();
  const std::uint64_t den = mpz_mod_u64(c.get_den(), p_);
  if (den == 0) throw DomainError("denominator divisible by the characteristic");
  const std::uint64_t num = mpz_mod_u64(c.get_num(), p_);
  return Scalar(mul_mod(num, pow_mod(den, p_ - 2, p_), p_), p_);
}

std::string Field::to_string() const { return is_rational() ? "q" : "fp:" + std::to_string(p_); }

Field Scalar::field() const {
  if (const auto* r = as_residue()) return Field::prime(r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* q = as_rational()) return sgn(*q) == 0;
  return as_residue()->value == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = as_rational()) return *q == 1;
  return as_residue()->value == 1;
}

bool Scalar::is_negative() const {
  if (const auto* q = as_rational()) return sgn(*q) < 0;
  return false;
}

Scalar Scalar::operator-() const {
  if (const auto* q = as_rational()) return Scalar(mpq_class(-*q));
  const auto& r = *as_residue();
  return Scalar((r.modulus - r.value) % r.modulus, r.modulus);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (const auto* q = as_rational()) return Scalar(mpq_class(1 / *q));
  const auto& r = *as_residue();
  return Scalar(pow_mod(r.value, r.modulus - 2, r.modulus), r.modulus);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    const auto* oq = o.as_rational();
    if (oq == nullptr) throw ContextError("scalars from different fields");
    *q += *oq;
    return *this;
  }
  auto& r = std::get<Residue>(v_);
  r.value = (r.value + same_modulus(r, o.as_residue()).value) % r.modulus;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    const auto* oq = o.as_rational();
    if (oq == nullptr) throw ContextError("scalars from different fields");
    *q *= *oq;
    return *this;
  }
  auto& r = std::get<Residue>(v_);
  r.value = mul_mod(r.value, same_modulus(r, o.as_residue()).value, r.modulus);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (const auto* q = a.as_rational()) return *q == *b.as_rational();
  return *a.as_residue() == *b.as_residue();
}

std::string Scalar::to_string() const {
  if (const auto* q = as_rational()) return q->get_str();
  return std::to_string(as_residue()->value);
}

}  // namespace kzaut
