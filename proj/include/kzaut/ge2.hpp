#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "kzaut/matrix.hpp"
#include "kzaut/poly.hpp"
#include "kzaut/transcript.hpp"

namespace kzaut {

struct Ge2Tame {
  Transcript transcript;
};

/// The reduced matrix at which elimination stopped: both entries of the
/// first column are nonzero and neither leading monomial divides the other.
struct Ge2Wild {
  PolyMatrix witness;
};

using Ge2Result = std::variant<Ge2Tame, Ge2Wild>;

/// Decides membership of a 2x2 invertible matrix in GE_2 by leading-term
/// elimination on the first column. Throws NotInvertible.
Ge2Result ge2_decide(const PolyMatrix& m, const MonomialOrder& ord);

/// True when the first column of w has two nonzero entries whose leading
/// monomials under ord do not divide each other.
bool is_stuck_witness(const PolyMatrix& w, const MonomialOrder& ord);

/// Euclidean decomposition of a matrix in GL_2(K[z]); never fails on
/// invertible input. Throws NotInvertible.
Transcript gl2_univariate_decompose(const PolyMatrix& m);

/// Leading-term elimination with row and column operations on an n x n
/// matrix. nullopt when stuck or when max_steps is exceeded.
std::optional<Transcript> elementary_reduce(const PolyMatrix& m, const MonomialOrder& ord,
                                            std::size_t max_steps = 2000);

/// 3x3 certificate for diag(M, 1).
struct Stabilization {
  enum class Method { Identity, Ge2, CohnFamily, Transvection, Elimination };
  Transcript transcript;
  Method method;
};

std::string to_string(Stabilization::Method m);

/// Product of elementary 3x3 factors (and units) equal to diag(M, 1), or
/// nullopt when no strategy applies. Throws NotInvertible.
std::optional<Stabilization> stabilize3(const PolyMatrix& m, const MonomialOrder& ord);

/// The eight factors E13(-b) E23(a) E31(-a) E32(-b) E13(b) E23(-a) E31(a) E32(b)
/// whose product is diag([[1+ab, b^2], [-a^2, 1-ab]], 1).
Transcript cohn_commutator(const CommPoly& a, const CommPoly& b);

/// [[1+ab, b^2], [-a^2, 1-ab]].
PolyMatrix cohn_matrix(const CommPoly& a, const CommPoly& b);

}  // namespace kzaut
