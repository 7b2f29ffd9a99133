#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kzaut/poly.hpp"
#include "kzaut/scalar.hpp"

namespace kzaut {

/// Generator of K<X,z>: x_1..x_n are letters 0..n-1, z is kZ.
using Letter = std::uint16_t;
inline constexpr Letter kZ = 0xFFFF;

/// Alphabet {x_1..x_n, z} and coefficient field of a free algebra K<X,z>.
struct Algebra {
  std::vector<std::string> x_names;
  std::string z_name = "z";
  Field field;

  std::size_t n() const { return x_names.size(); }
  const std::string& name(Letter l) const { return l == kZ ? z_name : x_names.at(l); }
  /// Letter for a generator name, if any.
  std::optional<Letter> letter(const std::string& name) const;

  friend bool operator==(const Algebra&, const Algebra&) = default;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(std::vector<std::string> x_names, std::string z_name = "z",
                        Field field = Field::rationals());
/// Default names x, y for n = 2, x, y, t for n = 3, otherwise x1..xn.
AlgebraPtr make_algebra(std::size_t n, Field field = Field::rationals());

/// K[z] with the algebra's field and fixed-variable name.
RingPtr z_ring(const Algebra& alg);
/// K[z1, z2], the ring that receives left (z1) and right (z2) multipliers.
RingPtr z12_ring(const Algebra& alg);

/// Monomial of the free algebra. Ordered by length, then letter by letter
/// with x_1 < ... < x_n < z.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word z_power(std::size_t k) { return Word(std::vector<Letter>(k, kZ)); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Number of letters from X.
  std::size_t x_degree() const;
  bool only_z() const { return x_degree() == 0; }

  Word subword(std::size_t pos, std::size_t len) const;
  friend Word operator*(const Word& a, const Word& b);

  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Noncommutative polynomial: finite linear combination of words.
class NCPoly {
 public:
  explicit NCPoly(AlgebraPtr alg) : alg_(std::move(alg)) {}

  static NCPoly zero(AlgebraPtr alg) { return NCPoly(std::move(alg)); }
  static NCPoly constant(AlgebraPtr alg, const Scalar& c);
  static NCPoly constant(AlgebraPtr alg, long long c);
  static NCPoly generator(AlgebraPtr alg, Letter l);
  static NCPoly monomial(AlgebraPtr alg, const Scalar& c, Word w);

  const AlgebraPtr& algebra() const { return alg_; }
  const Field& field() const { return alg_->field; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Word& w) const;

  void add_term(const Scalar& c, const Word& w);

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Scalar& c);

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  /// Noncommutative product: words concatenate.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
  friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }

  NCPoly pow(unsigned e) const;

  friend bool operator==(const NCPoly& a, const NCPoly& b);

  /// "x + z x z - z^2 y"; words in Word order.
  std::string to_string() const;

  void require_same_algebra(const NCPoly& o) const;

 private:
  AlgebraPtr alg_;
  std::map<Word, Scalar> terms_;
};

NCPoly nc_mul(const NCPoly& a, const NCPoly& b);

/// "z^2 y", "x z x", "1" for the empty word.
std::string word_to_string(const Word& w, const Algebra& alg);

}  // namespace kzaut
