#pragma once

// Hand-rolled random generators for the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "kzaut/autgroup.hpp"
#include "kzaut/endo.hpp"
#include "kzaut/ncpoly.hpp"
#include "kzaut/poly.hpp"
#include "kzaut/transcript.hpp"

namespace kzaut::testing {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Small nonzero field element; over Q sometimes a fraction.
inline Scalar rand_unit(Rng& rng, const Field& f) {
  for (;;) {
    int num = uniform(rng, -5, 5);
    if (num == 0) continue;
    Scalar s = f.from_int(num);
    if (f.is_rational() && uniform(rng, 0, 3) == 0) s /= f.from_int(uniform(rng, 2, 4));
    if (!s.is_zero()) return s;
  }
}

inline Scalar rand_scalar(Rng& rng, const Field& f) {
  return uniform(rng, 0, 4) == 0 ? f.zero() : rand_unit(rng, f);
}

/// Up to max_terms terms, each exponent in [0, max_exp].
inline CommPoly rand_comm(Rng& rng, const RingPtr& ring, int max_terms = 4, int max_exp = 3) {
  CommPoly p(ring);
  const int terms = uniform(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(ring->nvars());
    for (auto& x : e) x = static_cast<std::uint32_t>(uniform(rng, 0, max_exp));
    p.add_term(rand_unit(rng, ring->field), Monomial(std::move(e)));
  }
  return p;
}

inline CommPoly rand_nonzero_comm(Rng& rng, const RingPtr& ring, int max_terms = 4, int max_exp = 3) {
  for (;;) {
    CommPoly p = rand_comm(rng, ring, max_terms, max_exp);
    if (!p.is_zero()) return p;
  }
}

inline Word rand_word(Rng& rng, const Algebra& alg, int max_len = 6) {
  std::vector<Letter> l(static_cast<std::size_t>(uniform(rng, 0, max_len)));
  for (auto& c : l) {
    const int k = uniform(rng, 0, static_cast<int>(alg.n()));
    c = k == static_cast<int>(alg.n()) ? kZ : static_cast<Letter>(k);
  }
  return Word(std::move(l));
}

inline NCPoly rand_nc(Rng& rng, const AlgebraPtr& alg, int max_terms = 5, int max_len = 5) {
  NCPoly p(alg);
  const int terms = uniform(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t) p.add_term(rand_unit(rng, alg->field), rand_word(rng, *alg, max_len));
  return p;
}

/// Sum of alpha z^a x_i z^b terms; not necessarily invertible.
inline KzEndo rand_linear_endo(Rng& rng, const AlgebraPtr& alg, int max_terms = 3, int max_exp = 3) {
  std::vector<NCPoly> imgs;
  for (std::size_t j = 0; j < alg->n(); ++j) {
    NCPoly f(alg);
    const int terms = uniform(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
      std::vector<Letter> w(static_cast<std::size_t>(uniform(rng, 0, max_exp)), kZ);
      w.push_back(static_cast<Letter>(uniform(rng, 0, static_cast<int>(alg->n()) - 1)));
      w.insert(w.end(), static_cast<std::size_t>(uniform(rng, 0, max_exp)), kZ);
      f.add_term(rand_unit(rng, alg->field), Word(std::move(w)));
    }
    imgs.push_back(std::move(f));
  }
  return KzEndo(alg, std::move(imgs));
}

/// Random factor of a transcript over ring; Elem polynomials have
/// exponents <= max_exp.
inline Factor rand_factor(Rng& rng, const RingPtr& ring, std::size_t dim, int max_exp = 3, bool swaps = true) {
  const int kind = uniform(rng, 0, 9);
  if (kind == 0) {
    std::vector<Scalar> units;
    for (std::size_t k = 0; k < dim; ++k) units.push_back(rand_unit(rng, ring->field));
    return Diag{std::move(units)};
  }
  const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(dim) - 1));
  auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(dim) - 2));
  if (j >= i) ++j;
  if (kind == 1 && swaps) return Swap{i, j};
  return Elem{i, j, rand_nonzero_comm(rng, ring, 3, max_exp)};
}

inline Transcript rand_transcript(Rng& rng, const RingPtr& ring, std::size_t dim, int max_factors = 10,
                                  int max_exp = 3) {
  Transcript t{ring, dim, {}};
  const int k = uniform(rng, 0, max_factors);
  for (int f = 0; f < k; ++f) t.factors.push_back(rand_factor(rng, ring, dim, max_exp));
  return t;
}

/// Random automorphism given by up to max_factors ElemAuto / ScaleAuto factors.
inline std::vector<AutoFactor> rand_auto_factors(Rng& rng, const AlgebraPtr& alg, int max_factors = 6,
                                                 int max_exp = 2) {
  const RingPtr zr = z_ring(*alg);
  std::vector<AutoFactor> out;
  const int k = uniform(rng, 1, max_factors);
  for (int f = 0; f < k; ++f) {
    if (uniform(rng, 0, 5) == 0) {
      std::vector<Scalar> units;
      for (std::size_t q = 0; q < alg->n(); ++q) units.push_back(rand_unit(rng, alg->field));
      out.push_back(ScaleAuto{std::move(units)});
      continue;
    }
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(alg->n()) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(alg->n()) - 2));
    if (j >= i) ++j;
    out.push_back(ElemAuto{i, j, rand_nonzero_comm(rng, zr, 2, max_exp), rand_nonzero_comm(rng, zr, 2, max_exp)});
  }
  return out;
}

/// The four order configurations on K[z1, z2].
inline std::vector<MonomialOrder> all_orders() {
  return {MonomialOrder(MonomialOrder::Kind::DegLex, {0, 1}), MonomialOrder(MonomialOrder::Kind::DegLex, {1, 0}),
          MonomialOrder(MonomialOrder::Kind::Lex, {0, 1}), MonomialOrder(MonomialOrder::Kind::Lex, {1, 0})};
}

}  // namespace kzaut::testing
