#include "kzaut/jacobian.hpp"

#include "kzaut/errors.hpp"

namespace kzaut {

void TensorElem::add(const Scalar& c, const Word& left, const Word& right) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  if (!(*alg_ == *o.alg_)) throw ContextError("tensors over different algebras");
  for (const auto& [k, c] : o.terms_) add(c, k.first, k.second);
  return *this;
}

bool operator==(const TensorElem& a, const TensorElem& b) { return *a.alg_ == *b.alg_ && a.terms_ == b.terms_; }

std::string TensorElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, coeff] : terms_) {
    Scalar c = coeff;
    const bool neg = c.is_negative();
    if (neg) c = -c;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (!c.is_one()) s += c.to_string() + ' ';
    s += '(' + word_to_string(k.first, *alg_) + '|' + word_to_string(k.second, *alg_) + ')';
  }
  return s;
}

TensorElem partial_derivative(const NCPoly& f, Letter v) {
  const Algebra& alg = *f.algebra();
  if (v != kZ && v >= alg.n()) throw DomainError("unknown variable for partial derivative");
  TensorElem d(f.algebra());
  for (const auto& [w, c] : f.terms())
    for (std::size_t p = 0; p < w.size(); ++p)
      if (w[p] == v) d.add(c, w.subword(0, p), w.subword(p + 1, w.size() - p - 1));
  return d;
}

TensorMatrix jacobian_full(const KzEndo& phi) {
  TensorMatrix j(phi.n());
  for (std::size_t i = 0; i < phi.n(); ++i)
    for (std::size_t col = 0; col < phi.n(); ++col)
      j[i].push_back(partial_derivative(phi.image(col), static_cast<Letter>(i)));
  return j;
}

CommPoly tensor_to_z12(const TensorElem& t, const RingPtr& z12) {
  CommPoly r(z12);
  for (const auto& [k, c] : t.terms()) {
    if (!k.first.only_z() || !k.second.only_z())
      throw DomainError("tensor entry involves x-variables: " + t.to_string());
    r.add_term(c, Monomial(std::vector<std::uint32_t>{static_cast<std::uint32_t>(k.first.size()), static_cast<std::uint32_t>(k.second.size())}));
  }
  return r;
}

PolyMatrix jacobian_linear(const KzEndo& phi) {
  const LinearProfile prof = linear_profile(phi);
  const RingPtr ring = z12_ring(*phi.algebra());
  PolyMatrix m(ring, phi.n());
  for (std::size_t i = 0; i < prof.n; ++i)
    for (std::size_t j = 0; j < prof.n; ++j)
      for (const auto& [b, c] : prof.cell(i, j))
        for (const auto& [mb, cb] : b.terms())
          for (const auto& [mc, cc] : c.terms()) m(i, j).add_term(cb * cc, Monomial(std::vector<std::uint32_t>{mb[0], mc[0]}));
  return m;
}

RingPtr commutative_ring(const Algebra& alg) {
  std::vector<std::string> vars(alg.x_names);
  vars.push_back(alg.z_name);
  return make_ring(std::move(vars), alg.field);
}

PolyMatrix commutative_jacobian(const std::vector<CommPoly>& images, const Algebra& alg) {
  const std::size_t n = alg.n();
  if (images.size() != n) throw DimensionError("one image per x-variable expected");
  const RingPtr zr = z_ring(alg);
  // x_i -> 0, z -> z
  std::vector<CommPoly> to_z(n, CommPoly(zr));
  to_z.push_back(CommPoly::variable(zr, 0));
  PolyMatrix m(zr, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = subst_z(images[j].derivative(i), to_z);
  return m;
}

AbelianizedEndo abelianize_endo(const KzEndo& phi) {
  const Algebra& alg = *phi.algebra();
  const LinearProfile prof = linear_profile(phi);
  const RingPtr cr = commutative_ring(alg);
  const std::size_t n = phi.n();
  // z in K[z] goes to the last variable of K[X, z]
  const CommPoly z_in_cr = CommPoly::variable(cr, n);
  std::vector<CommPoly> images(n, CommPoly(cr));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [b, c] : prof.cell(i, j))
        images[j] += subst_z(b * c, std::span(&z_in_cr, 1)) * CommPoly::variable(cr, i);
  PolyMatrix jac = commutative_jacobian(images, alg);
  return AbelianizedEndo{cr, std::move(images), std::move(jac)};
}

}  // namespace kzaut
