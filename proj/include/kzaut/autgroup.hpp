#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kzaut/endo.hpp"
#include "kzaut/ge2.hpp"
#include "kzaut/jacobian.hpp"
#include "kzaut/matrix.hpp"
#include "kzaut/transcript.hpp"

namespace kzaut {

/// x_j -> x_j + a(z) x_i b(z), other generators fixed (0-based, i != j).
struct ElemAuto {
  std::size_t i;
  std::size_t j;
  CommPoly a;  // in K[z]
  CommPoly b;  // in K[z]
};

/// x_k -> units[k] x_k.
struct ScaleAuto {
  std::vector<Scalar> units;
};

/// x_i <-> x_j.
struct SwapAuto {
  std::size_t i;
  std::size_t j;
};

using AutoFactor = std::variant<ElemAuto, ScaleAuto, SwapAuto>;

KzEndo auto_factor_endo(const AutoFactor& f, const AlgebraPtr& alg);

/// compose(f_1, compose(f_2, ...)); the identity for an empty list.
KzEndo recompose(const std::vector<AutoFactor>& factors, const AlgebraPtr& alg);

/// One ElemAuto per monomial alpha z1^a z2^b of each Elem factor (as
/// alpha z^a, z^b); Diag and Swap map to ScaleAuto and SwapAuto.
std::vector<AutoFactor> auto_factors(const Transcript& t, const Algebra& alg);

/// Replaces SwapAuto by elementary and scaling factors.
std::vector<AutoFactor> expand_swaps(const std::vector<AutoFactor>& factors, const Algebra& alg);

/// The linear K[z]-endomorphism with Jacobian M: z1^a z2^b at (i, j)
/// contributes z^a x_i z^b to f_j.
KzEndo matrix_to_endo(const PolyMatrix& m, const AlgebraPtr& alg);

/// Jacobian over K[z1, z2] is invertible. Throws NotXLinear.
bool is_automorphism_linear(const KzEndo& phi);

struct Tame {
  Transcript transcript;  // certifies the Jacobian
  std::vector<AutoFactor> factors;
};

struct Wild {
  PolyMatrix witness;
};

/// n >= 3 and no transcript was found; tameness holds regardless.
struct TameByTheorem {};

using TameVerdict = std::variant<Tame, Wild, TameByTheorem>;

/// Throws NotXLinear or NotInvertible.
TameVerdict is_tame(const KzEndo& phi, const MonomialOrder& ord);

/// Throws NotXLinear or NotInvertible.
KzEndo invert_linear(const KzEndo& phi);

/// Algebra with one more x-variable (named t when free).
AlgebraPtr extend_algebra(const Algebra& alg);

/// (phi(x_1), ..., phi(x_n), x_{n+1}) on the extended algebra.
KzEndo extend_fixing_new_variable(const KzEndo& phi, const AlgebraPtr& ext);

struct StableTameness {
  AlgebraPtr extended;
  Stabilization stabilization;
  std::vector<AutoFactor> factors;
};

/// n = 2 only. nullopt when no stabilization was found.
std::optional<StableTameness> stable_tame(const KzEndo& phi, const MonomialOrder& ord);

/// Elementary factors of the induced automorphism of K[X, z]; Elem(i, j, p)
/// means x_j -> x_j + p(z) x_i.
struct CommutativeDecomposition {
  AbelianizedEndo abelian;
  Transcript transcript;  // over K[z]
};

/// n = 2 only; always succeeds on automorphisms.
CommutativeDecomposition abelianized_tame_decomposition(const KzEndo& phi);

/// Images in K[X, z] of the composition of commutative elementary factors.
std::vector<CommPoly> recompose_commutative(const Transcript& t, const Algebra& alg);

/// anick_variant, cohn_endo, identity, triangular_sample, elem(i,j,a,b),
/// scale(u1,...,un). Throws DomainError for unknown names.
KzEndo builtin(const std::string& name, Field field = Field::rationals());

std::vector<std::string> builtin_names();

}  // namespace kzaut
