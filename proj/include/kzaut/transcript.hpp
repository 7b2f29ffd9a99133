#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "kzaut/matrix.hpp"
#include "kzaut/poly.hpp"

namespace kzaut {

/// I + p e_ij, i != j (0-based indices).
struct Elem {
  std::size_t i;
  std::size_t j;
  CommPoly p;
  friend bool operator==(const Elem&, const Elem&) = default;
};

/// Diagonal matrix of units of K.
struct Diag {
  std::vector<Scalar> units;
  friend bool operator==(const Diag&, const Diag&) = default;
};

/// Row/column interchange; expands to three Elem factors and a Diag.
struct Swap {
  std::size_t i;
  std::size_t j;
  friend bool operator==(const Swap&, const Swap&) = default;
};

using Factor = std::variant<Elem, Diag, Swap>;

/// Certificate: the target equals the left-to-right product of the factor
/// matrices.
struct Transcript {
  RingPtr ring;
  std::size_t dim = 0;
  std::vector<Factor> factors;
};

PolyMatrix factor_matrix(const Factor& f, const RingPtr& ring, std::size_t dim);
PolyMatrix transcript_product(const Transcript& t);

/// Throws DimensionError if a factor does not fit t.dim or M.
bool verify_transcript(const Transcript& t, const PolyMatrix& m);

/// Replaces every Swap(i, j) by E_ij(1) E_ji(-1) E_ij(1) D(-1 at i).
Transcript expand_swaps(const Transcript& t);

/// Same factors acting on the upper-left block of a dim x dim matrix.
Transcript embed(const Transcript& t, std::size_t dim);

}  // namespace kzaut
