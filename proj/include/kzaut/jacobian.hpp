#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kzaut/endo.hpp"
#include "kzaut/matrix.hpp"
#include "kzaut/ncpoly.hpp"

namespace kzaut {

/// Element of F^op (x) F as a reduced list of (coefficient, left, right)
/// triples. The pair (u, v) stands for u (x) v.
class TensorElem {
 public:
  using Key = std::pair<Word, Word>;

  explicit TensorElem(AlgebraPtr alg) : alg_(std::move(alg)) {}

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Scalar& c, const Word& left, const Word& right);
  TensorElem& operator+=(const TensorElem& o);

  friend bool operator==(const TensorElem& a, const TensorElem& b);

  /// "(1|z y) + (x y|1)"; "0" when empty.
  std::string to_string() const;

 private:
  AlgebraPtr alg_;
  std::map<Key, Scalar> terms_;
};

/// Sum over the positions p of each word with letter v of
/// prefix (x) suffix, extended linearly.
TensorElem partial_derivative(const NCPoly& f, Letter v);

/// entry (i, j) = d f_j / d x_i. The row and column of z are omitted.
using TensorMatrix = std::vector<std::vector<TensorElem>>;
TensorMatrix jacobian_full(const KzEndo& phi);

/// Maps u (x) v with u = z^a, v = z^b to z1^a z2^b. Throws DomainError if a
/// word contains an x-letter.
CommPoly tensor_to_z12(const TensorElem& t, const RingPtr& z12);

/// J_{K[z]}(phi) over K[z1, z2] for an X-linear phi: entry (i, j) is the
/// sum of b(z1) c(z2) over the terms b(z) x_i c(z) of f_j.
PolyMatrix jacobian_linear(const KzEndo& phi);

/// The commutative linear endomorphism of K[X, z] induced by phi.
struct AbelianizedEndo {
  RingPtr ring;                 // K[x_1..x_n, z]
  std::vector<CommPoly> images; // image of x_j
  PolyMatrix jacobian;          // over K[z]
};

AbelianizedEndo abelianize_endo(const KzEndo& phi);

/// K[x_1..x_n, z] for the algebra's names.
RingPtr commutative_ring(const Algebra& alg);

/// Jacobian over K[z] of a commutative X-linear endomorphism given by its
/// images in commutative_ring(alg).
PolyMatrix commutative_jacobian(const std::vector<CommPoly>& images, const Algebra& alg);

}  // namespace kzaut
