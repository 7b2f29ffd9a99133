#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kzaut/scalar.hpp"

namespace kzaut {

/// Variable list and coefficient field of a commutative polynomial ring.
/// Two rings are the same context when names and field agree.
struct Ring {
  std::vector<std::string> vars;
  Field field;

  std::size_t nvars() const { return vars.size(); }
  friend bool operator==(const Ring&, const Ring&) = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, Field field = Field::rationals());

/// Exponent vector, one slot per ring variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::span<const std::uint32_t> exponents() const { return e_; }
  std::uint64_t degree() const;
  bool is_one() const;

  /// Componentwise divisibility: *this | other.
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  // Storage order only (lexicographic on the exponent vector); the
  // mathematical orders live in MonomialOrder.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> e_;
};

/// deglex or lex with a configurable variable priority (most significant
/// variable first).
class MonomialOrder {
 public:
  enum class Kind { DegLex, Lex };

  MonomialOrder(Kind kind, std::vector<std::size_t> priority);

  static MonomialOrder deglex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }

  /// Strict "a < b" in this order.
  bool less(const Monomial& a, const Monomial& b) const;

  std::string to_string(const Ring& ring) const;

 private:
  Kind kind_;
  std::vector<std::size_t> priority_;
};

struct Term {
  Scalar coeff;
  Monomial mono;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse commutative polynomial over a Ring. Zero coefficients are never
/// stored, so structural equality is mathematical equality.
class CommPoly {
 public:
  explicit CommPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static CommPoly zero(RingPtr ring) { return CommPoly(std::move(ring)); }
  static CommPoly constant(RingPtr ring, const Scalar& c);
  static CommPoly constant(RingPtr ring, long long c);
  static CommPoly variable(RingPtr ring, std::size_t index);
  static CommPoly term(RingPtr ring, const Scalar& c, Monomial m);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The value when the polynomial is constant (0 included).
  std::optional<Scalar> as_constant() const;
  Scalar coeff(const Monomial& m) const;
  std::uint64_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;

  void add_term(const Scalar& c, const Monomial& m);

  CommPoly operator-() const;
  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  CommPoly& operator*=(const Scalar& c);

  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend CommPoly operator*(CommPoly a, const Scalar& c) { return a *= c; }
  friend CommPoly operator*(const Scalar& c, CommPoly a) { return a *= c; }

  CommPoly pow(unsigned e) const;

  friend bool operator==(const CommPoly& a, const CommPoly& b);

  /// Formal partial derivative in the given variable.
  CommPoly derivative(std::size_t var) const;

  /// Compact, space-free rendering such as "1+z1*z2" or "-1/2*z^2".
  std::string to_string() const;

 private:
  void require_same_ring(const CommPoly& o) const;

  RingPtr ring_;
  std::map<Monomial, Scalar> terms_;
};

/// Coefficient and monomial of the largest term under ord. Throws DomainError on 0.
Term leading_term(const CommPoly& a, const MonomialOrder& ord);

/// Quotient term when den's monomial divides num's, otherwise nullopt.
std::optional<Term> term_divide(const Term& num, const Term& den);

/// Ring homomorphism sending variable k of a's ring to images[k].
CommPoly subst_z(const CommPoly& a, std::span<const CommPoly> images);

/// Exact quotient a / b when b divides a, otherwise nullopt.
std::optional<CommPoly> divide_exact(const CommPoly& a, const CommPoly& b, const MonomialOrder& ord);

/// Quotient and remainder of univariate division (ring must have one variable).
std::pair<CommPoly, CommPoly> divmod_univariate(const CommPoly& a, const CommPoly& b);

/// g with g*g == a and leading coefficient 1, when a has leading coefficient
/// 1 and is such a square. Not available in characteristic 2.
std::optional<CommPoly> sqrt_monic(const CommPoly& a, const MonomialOrder& ord);

CommPoly term_poly(const RingPtr& ring, const Term& t);

}  // namespace kzaut
