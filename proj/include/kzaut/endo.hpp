#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kzaut/ncpoly.hpp"
#include "kzaut/poly.hpp"

namespace kzaut {

/// K[z]-endomorphism of K<X,z>: x_j -> images[j], z -> z.
class KzEndo {
 public:
  KzEndo(AlgebraPtr alg, std::vector<NCPoly> images);

  static KzEndo identity(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t n() const { return images_.size(); }
  const NCPoly& image(std::size_t j) const { return images_.at(j); }
  const std::vector<NCPoly>& images() const { return images_; }

  /// Same algebra (by value) and identical images.
  friend bool operator==(const KzEndo& a, const KzEndo& b) { return a.images_ == b.images_ && *a.alg_ == *b.alg_; }

 private:
  AlgebraPtr alg_;
  std::vector<NCPoly> images_;
};

/// The algebra homomorphism determined by phi, applied to f.
NCPoly apply_endo(const KzEndo& phi, const NCPoly& f);

/// chi with chi(x_j) = phi(psi(x_j)). With this convention
/// J(compose(phi, psi)) = J(phi) * J(psi).
KzEndo compose(const KzEndo& phi, const KzEndo& psi);

/// f = f0 + f1 + f2 by x-degree 0, 1 and >= 2.
struct XDegreeSplit {
  NCPoly f0;
  NCPoly f1;
  NCPoly f2;
};

XDegreeSplit x_split(const NCPoly& f);

/// Projection of every image onto its x-degree-1 part.
KzEndo linear_part(const KzEndo& phi);

bool is_x_linear(const KzEndo& phi);

/// Pairs (b, c) in K[z] with f_j containing b(z) x_i c(z). The scalar
/// coefficient is carried by b.
struct LinearProfile {
  using Cell = std::vector<std::pair<CommPoly, CommPoly>>;

  std::size_t n = 0;
  RingPtr ring;               // K[z]
  std::vector<Cell> cells;    // row-major, cell(i, j)

  const Cell& cell(std::size_t i, std::size_t j) const { return cells.at(i * n + j); }
};

/// Throws NotXLinear if some image has a term of x-degree != 1.
LinearProfile linear_profile(const KzEndo& phi);

/// Rebuilds the endomorphism sum_p b_p(z) x_i c_p(z) from a profile.
KzEndo endo_from_profile(const LinearProfile& profile, const AlgebraPtr& alg);

/// Embeds a polynomial of K[z] into K<X,z>.
NCPoly z_poly_to_nc(const CommPoly& p, const AlgebraPtr& alg);

}  // namespace kzaut
