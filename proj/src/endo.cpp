#include "kzaut/endo.hpp"

#include "kzaut/errors.hpp"

namespace kzaut {

KzEndo::KzEndo(AlgebraPtr alg, std::vector<NCPoly> images) : alg_(std::move(alg)), images_(std::move(images)) {
  if (images_.size() != alg_->n()) throw ContextError("endomorphism needs one image per x-variable");
  for (const auto& f : images_)
    if (!(*f.algebra() == *alg_)) throw ContextError("image lies in a different algebra");
}

KzEndo KzEndo::identity(AlgebraPtr alg) {
  std::vector<NCPoly> imgs;
  for (std::size_t j = 0; j < alg->n(); ++j) imgs.push_back(NCPoly::generator(alg, static_cast<Letter>(j)));
  return KzEndo(std::move(alg), std::move(imgs));
}

NCPoly apply_endo(const KzEndo& phi, const NCPoly& f) {
  if (!(*f.algebra() == *phi.algebra())) throw ContextError("polynomial and endomorphism in different algebras");
  const AlgebraPtr& alg = phi.algebra();
  NCPoly result(alg);
  for (const auto& [w, c] : f.terms()) {
    // runs of z stay as words; x letters are replaced by their images
    NCPoly t = NCPoly::constant(alg, c);
    std::size_t zrun = 0;
    for (const Letter l : w.letters()) {
      if (l == kZ) {
        ++zrun;
        continue;
      }
      if (zrun) {
        t = t * NCPoly::monomial(alg, alg->field.one(), Word::z_power(zrun));
        zrun = 0;
      }
      t = t * phi.image(l);
    }
    if (zrun) t = t * NCPoly::monomial(alg, alg->field.one(), Word::z_power(zrun));
    result += t;
  }
  return result;
}

KzEndo compose(const KzEndo& phi, const KzEndo& psi) {
  if (!(*phi.algebra() == *psi.algebra())) throw ContextError("endomorphisms of different algebras");
  std::vector<NCPoly> imgs;
  imgs.reserve(psi.n());
  for (const auto& g : psi.images()) imgs.push_back(apply_endo(phi, g));
  return KzEndo(phi.algebra(), std::move(imgs));
}

XDegreeSplit x_split(const NCPoly& f) {
  XDegreeSplit s{NCPoly(f.algebra()), NCPoly(f.algebra()), NCPoly(f.algebra())};
  for (const auto& [w, c] : f.terms()) {
    const auto d = w.x_degree();
    (d == 0 ? s.f0 : d == 1 ? s.f1 : s.f2).add_term(c, w);
  }
  return s;
}

KzEndo linear_part(const KzEndo& phi) {
  std::vector<NCPoly> imgs;
  for (const auto& f : phi.images()) imgs.push_back(x_split(f).f1);
  return KzEndo(phi.algebra(), std::move(imgs));
}

bool is_x_linear(const KzEndo& phi) {
  for (const auto& f : phi.images())
    for (const auto& [w, c] : f.terms())
      if (w.x_degree() != 1) return false;
  return true;
}

LinearProfile linear_profile(const KzEndo& phi) {
  const Algebra& alg = *phi.algebra();
  LinearProfile prof;
  prof.n = phi.n();
  prof.ring = z_ring(alg);
  prof.cells.resize(prof.n * prof.n);
  const Scalar one = alg.field.one();
  for (std::size_t j = 0; j < phi.n(); ++j) {
    for (const auto& [w, c] : phi.image(j).terms()) {
      const auto d = w.x_degree();
      if (d != 1) {
        std::string term = NCPoly::monomial(phi.algebra(), c, w).to_string();
        throw NotXLinear(j, term,
                         "image of " + alg.x_names[j] + " is not linear in the x-variables: term '" + term +
                             "' has x-degree " + std::to_string(d));
      }
      std::size_t pos = 0;
      while (w[pos] == kZ) ++pos;
      const Letter i = w[pos];
      const auto left = static_cast<std::uint32_t>(pos);
      const auto right = static_cast<std::uint32_t>(w.size() - pos - 1);
      prof.cells[i * prof.n + j].emplace_back(CommPoly::term(prof.ring, c, Monomial(std::vector<std::uint32_t>{left})),
                                               CommPoly::term(prof.ring, one, Monomial(std::vector<std::uint32_t>{right})));
    }
  }
  return prof;
}

NCPoly z_poly_to_nc(const CommPoly& p, const AlgebraPtr& alg) {
  if (p.ring()->nvars() != 1) throw ContextError("expected a polynomial in K[z]");
  NCPoly r(alg);
  for (const auto& [m, c] : p.terms()) r.add_term(c, Word::z_power(m[0]));
  return r;
}

KzEndo endo_from_profile(const LinearProfile& profile, const AlgebraPtr& alg) {
  if (profile.n != alg->n()) throw ContextError("profile size does not match algebra");
  std::vector<NCPoly> imgs(alg->n(), NCPoly(alg));
  for (std::size_t i = 0; i < profile.n; ++i)
    for (std::size_t j = 0; j < profile.n; ++j)
      for (const auto& [b, c] : profile.cell(i, j))
        imgs[j] += z_poly_to_nc(b, alg) * NCPoly::generator(alg, static_cast<Letter>(i)) * z_poly_to_nc(c, alg);
  return KzEndo(alg, std::move(imgs));
}

}  // namespace kzaut
