#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "kzaut/poly.hpp"

namespace kzaut {

/// Square matrix over a commutative polynomial ring.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t n);
  PolyMatrix(RingPtr ring, std::vector<std::vector<CommPoly>> rows);

  static PolyMatrix identity(RingPtr ring, std::size_t n);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return n_; }

  CommPoly& operator()(std::size_t i, std::size_t j) { return a_.at(i * n_ + j); }
  const CommPoly& operator()(std::size_t i, std::size_t j) const { return a_.at(i * n_ + j); }

  bool is_identity() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  /// Entrywise ring homomorphism (see subst_z).
  PolyMatrix subst(std::span<const CommPoly> images) const;

  /// Upper-left embedding into diag(*this, I).
  PolyMatrix embed(std::size_t n) const;

  std::vector<std::string> row_strings(std::size_t i) const;

 private:
  RingPtr ring_;
  std::size_t n_;
  std::vector<CommPoly> a_;
};

/// Exact determinant (Laplace expansion over column subsets).
CommPoly det(const PolyMatrix& m);

/// Classical adjoint: adj(M) * M = M * adj(M) = det(M) I.
PolyMatrix adjugate(const PolyMatrix& m);

/// det(M) is a nonzero constant, i.e. a unit of the polynomial ring.
bool is_gl(const PolyMatrix& m);

/// M^-1 = adj(M) / det(M). Throws NotInvertible unless is_gl(M).
PolyMatrix inverse(const PolyMatrix& m);

}  // namespace kzaut
