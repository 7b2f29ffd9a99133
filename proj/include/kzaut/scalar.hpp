#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace kzaut {

class Scalar;

/// The coefficient field: the rationals, or F_p for a prime p < 2^32.
class Field {
 public:
  Field() = default;  // the rationals

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  /// Parses "q" or "fp:<p>".
  static Field parse(const std::string& text);

  bool is_rational() const noexcept { return p_ == 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& q) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; residues are kept in [0, p).
class Scalar {
 public:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  Scalar() : v_(mpq_class(0)) {}
  explicit Scalar(const mpq_class& q) : v_(q) { std::get<mpq_class>(v_).canonicalize(); }
  Scalar(std::uint64_t residue, std::uint64_t modulus) : v_(Residue{residue % modulus, modulus}) {}

  Field field() const;

  bool is_zero() const;
  bool is_one() const;
  /// True for rationals with negative numerator; residues are never negative.
  bool is_negative() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "3", "-1/2" for rationals; the residue in [0,p) for F_p.
  std::string to_string() const;

  const mpq_class* as_rational() const { return std::get_if<mpq_class>(&v_); }
  const Residue* as_residue() const { return std::get_if<Residue>(&v_); }

 private:
  std::variant<mpq_class, Residue> v_;
};

}  // namespace kzaut
