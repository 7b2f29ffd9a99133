#include "kzaut/autgroup.hpp"

#include <algorithm>

#include "kzaut/errors.hpp"
#include "kzaut/parse.hpp"

namespace kzaut {

KzEndo auto_factor_endo(const AutoFactor& f, const AlgebraPtr& alg) {
  const std::size_t n = alg->n();
  std::vector<NCPoly> imgs;
  for (std::size_t k = 0; k < n; ++k) imgs.push_back(NCPoly::generator(alg, static_cast<Letter>(k)));
  if (const auto* e = std::get_if<ElemAuto>(&f)) {
    if (e->i >= n || e->j >= n || e->i == e->j) throw DomainError("bad elementary automorphism indices");
    imgs[e->j] += z_poly_to_nc(e->a, alg) * NCPoly::generator(alg, static_cast<Letter>(e->i)) * z_poly_to_nc(e->b, alg);
  } else if (const auto* s = std::get_if<ScaleAuto>(&f)) {
    if (s->units.size() != n) throw DimensionError("scaling factor has the wrong size");
    for (std::size_t k = 0; k < n; ++k) {
      if (s->units[k].is_zero()) throw DomainError("scaling by zero");
      imgs[k] *= s->units[k];
    }
  } else {
    const auto& w = std::get<SwapAuto>(f);
    if (w.i >= n || w.j >= n) throw DomainError("bad swap indices");
    std::swap(imgs[w.i], imgs[w.j]);
  }
  return KzEndo(alg, std::move(imgs));
}

KzEndo recompose(const std::vector<AutoFactor>& factors, const AlgebraPtr& alg) {
  KzEndo acc = KzEndo::identity(alg);
  for (const auto& f : factors) acc = compose(acc, auto_factor_endo(f, alg));
  return acc;
}

std::vector<AutoFactor> auto_factors(const Transcript& t, const Algebra& alg) {
  const RingPtr zr = z_ring(alg);
  std::vector<AutoFactor> out;
  for (const auto& f : t.factors) {
    if (const auto* e = std::get_if<Elem>(&f)) {
      if (e->p.ring()->nvars() != 2) throw ContextError("expected a transcript over K[z1, z2]");
      for (const auto& [m, c] : e->p.terms())
        out.push_back(ElemAuto{e->i, e->j, CommPoly::term(zr, c, Monomial(std::vector<std::uint32_t>{m[0]})),
                               CommPoly::term(zr, alg.field.one(), Monomial(std::vector<std::uint32_t>{m[1]}))});
    } else if (const auto* d = std::get_if<Diag>(&f)) {
      out.push_back(ScaleAuto{d->units});
    } else {
      const auto& s = std::get<Swap>(f);
      out.push_back(SwapAuto{s.i, s.j});
    }
  }
  return out;
}

std::vector<AutoFactor> expand_swaps(const std::vector<AutoFactor>& factors, const Algebra& alg) {
  const RingPtr zr = z_ring(alg);
  const CommPoly one = CommPoly::constant(zr, 1);
  std::vector<AutoFactor> out;
  for (const auto& f : factors) {
    const auto* s = std::get_if<SwapAuto>(&f);
    if (s == nullptr) {
      out.push_back(f);
      continue;
    }
    if (s->i == s->j) continue;
    out.push_back(ElemAuto{s->i, s->j, one, one});
    out.push_back(ElemAuto{s->j, s->i, -one, one});
    out.push_back(ElemAuto{s->i, s->j, one, one});
    std::vector<Scalar> units(alg.n(), alg.field.one());
    units[s->i] = -alg.field.one();
    out.push_back(ScaleAuto{std::move(units)});
  }
  return out;
}

KzEndo matrix_to_endo(const PolyMatrix& m, const AlgebraPtr& alg) {
  if (m.size() != alg->n()) throw DimensionError("matrix size does not match the number of x-variables");
  if (m.ring()->nvars() != 2) throw ContextError("expected a matrix over K[z1, z2]");
  if (!(m.ring()->field == alg->field)) throw ContextError("matrix and algebra over different fields");
  std::vector<NCPoly> imgs(alg->n(), NCPoly(alg));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      for (const auto& [mono, c] : m(i, j).terms()) {
        std::vector<Letter> letters(mono[0], kZ);
        letters.push_back(static_cast<Letter>(i));
        letters.insert(letters.end(), mono[1], kZ);
        imgs[j].add_term(c, Word(std::move(letters)));
      }
  return KzEndo(alg, std::move(imgs));
}

bool is_automorphism_linear(const KzEndo& phi) { return is_gl(jacobian_linear(phi)); }

TameVerdict is_tame(const KzEndo& phi, const MonomialOrder& ord) {
  const PolyMatrix jac = jacobian_linear(phi);
  if (!is_gl(jac)) throw NotInvertible("not an automorphism: det J = " + det(jac).to_string());
  const Algebra& alg = *phi.algebra();
  auto tame_from = [&](Transcript t) {
    std::vector<AutoFactor> f = auto_factors(t, alg);
    return Tame{std::move(t), std::move(f)};
  };
  if (phi.n() == 1) {
    Transcript t{jac.ring(), 1, {}};
    const Scalar u = *jac(0, 0).as_constant();
    if (!u.is_one()) t.factors.push_back(Diag{{u}});
    return tame_from(std::move(t));
  }
  if (phi.n() == 2) {
    Ge2Result r = ge2_decide(jac, ord);
    if (auto* w = std::get_if<Ge2Wild>(&r)) return Wild{std::move(w->witness)};
    return tame_from(std::move(std::get<Ge2Tame>(r).transcript));
  }
  if (auto t = elementary_reduce(jac, ord)) return tame_from(std::move(*t));
  return TameByTheorem{};
}

KzEndo invert_linear(const KzEndo& phi) { return matrix_to_endo(inverse(jacobian_linear(phi)), phi.algebra()); }

AlgebraPtr extend_algebra(const Algebra& alg) {
  std::string name = "t";
  for (int k = 1; alg.letter(name); ++k) name = "t" + std::to_string(k);
  std::vector<std::string> names(alg.x_names);
  names.push_back(name);
  return make_algebra(std::move(names), alg.z_name, alg.field);
}

KzEndo extend_fixing_new_variable(const KzEndo& phi, const AlgebraPtr& ext) {
  if (ext->n() != phi.n() + 1) throw DimensionError("extension must add exactly one variable");
  std::vector<NCPoly> imgs;
  for (const auto& f : phi.images()) {
    NCPoly g(ext);
    for (const auto& [w, c] : f.terms()) g.add_term(c, w);
    imgs.push_back(std::move(g));
  }
  imgs.push_back(NCPoly::generator(ext, static_cast<Letter>(phi.n())));
  return KzEndo(ext, std::move(imgs));
}

std::optional<StableTameness> stable_tame(const KzEndo& phi, const MonomialOrder& ord) {
  if (phi.n() != 2) throw DimensionError("stable tameness certificates are built for two x-variables");
  const PolyMatrix jac = jacobian_linear(phi);
  if (!is_gl(jac)) throw NotInvertible("not an automorphism: det J = " + det(jac).to_string());
  auto st = stabilize3(jac, ord);
  if (!st) return std::nullopt;
  AlgebraPtr ext = extend_algebra(*phi.algebra());
  std::vector<AutoFactor> factors = auto_factors(st->transcript, *ext);
  return StableTameness{std::move(ext), std::move(*st), std::move(factors)};
}

CommutativeDecomposition abelianized_tame_decomposition(const KzEndo& phi) {
  if (phi.n() != 2) throw DimensionError("abelianized decomposition is built for two x-variables");
  AbelianizedEndo ab = abelianize_endo(phi);
  if (!is_gl(ab.jacobian)) throw NotInvertible("not an automorphism: det = " + det(ab.jacobian).to_string());
  Transcript t = gl2_univariate_decompose(ab.jacobian);
  return CommutativeDecomposition{std::move(ab), std::move(t)};
}

std::vector<CommPoly> recompose_commutative(const Transcript& t, const Algebra& alg) {
  const RingPtr cr = commutative_ring(alg);
  const std::size_t n = alg.n();
  if (t.dim != n) throw DimensionError("transcript size does not match the number of x-variables");
  const CommPoly z = CommPoly::variable(cr, n);
  auto identity_images = [&] {
    std::vector<CommPoly> v;
    for (std::size_t k = 0; k < n; ++k) v.push_back(CommPoly::variable(cr, k));
    return v;
  };
  std::vector<CommPoly> acc = identity_images();
  for (const auto& f : t.factors) {
    std::vector<CommPoly> step = identity_images();
    if (const auto* e = std::get_if<Elem>(&f)) {
      step[e->j] += subst_z(e->p, std::span(&z, 1)) * CommPoly::variable(cr, e->i);
    } else if (const auto* d = std::get_if<Diag>(&f)) {
      for (std::size_t k = 0; k < n; ++k) step[k] *= d->units[k];
    } else {
      const auto& s = std::get<Swap>(f);
      std::swap(step[s.i], step[s.j]);
    }
    // acc <- acc o step: substitute acc into the images of step
    std::vector<CommPoly> vars(acc);
    vars.push_back(z);
    std::vector<CommPoly> next;
    for (const auto& g : step) next.push_back(subst_z(g, vars));
    acc = std::move(next);
  }
  return acc;
}

namespace {

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (const char ch : s) {
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    cur += ch;
  }
  out.push_back(cur);
  return out;
}

std::size_t parse_index(const std::string& s) {
  const auto first = s.find_first_not_of(' ');
  const auto last = s.find_last_not_of(' ');
  if (first == std::string::npos) throw DomainError("empty index");
  const std::string t = s.substr(first, last - first + 1);
  if (t.find_first_not_of("0123456789") != std::string::npos || t.size() > 4 || std::stoul(t) == 0)
    throw DomainError("bad index '" + t + "'");
  return std::stoul(t);
}

}  // namespace

KzEndo builtin(const std::string& name, Field field) {
  if (name == "anick_variant") {
    AlgebraPtr alg = make_algebra(2, field);
    return KzEndo(alg, {parse_ncpoly("x + z (x z - z y)", alg), parse_ncpoly("y + (x z - z y) z", alg)});
  }
  if (name == "cohn_endo") {
    AlgebraPtr alg = make_algebra(2, field);
    const RingPtr r = z12_ring(*alg);
    const CommPoly z1 = CommPoly::variable(r, 0), z2 = CommPoly::variable(r, 1);
    return matrix_to_endo(cohn_matrix(z1, z2), alg);
  }
  if (name == "identity") return KzEndo::identity(make_algebra(2, field));
  if (name == "triangular_sample") {
    AlgebraPtr alg = make_algebra(2, field);
    return KzEndo(alg, {parse_ncpoly("x + y^2 + z y z", alg), parse_ncpoly("y", alg)});
  }
  const auto open = name.find('(');
  if (open != std::string::npos && name.back() == ')') {
    const std::string head = name.substr(0, open);
    const std::vector<std::string> args = split_args(name.substr(open + 1, name.size() - open - 2));
    if (head == "elem" && args.size() == 4) {
      const std::size_t i = parse_index(args[0]), j = parse_index(args[1]);
      if (i == j) throw DomainError("elem needs i != j");
      AlgebraPtr alg = make_algebra(std::max<std::size_t>({2, i, j}), field);
      const RingPtr zr = z_ring(*alg);
      return auto_factor_endo(ElemAuto{i - 1, j - 1, parse_commpoly(args[2], zr), parse_commpoly(args[3], zr)}, alg);
    }
    if (head == "scale" && !args.empty()) {
      AlgebraPtr alg = make_algebra(args.size(), field);
      const RingPtr zr = z_ring(*alg);
      std::vector<Scalar> units;
      for (const auto& a : args) {
        const auto c = parse_commpoly(a, zr).as_constant();
        if (!c || c->is_zero()) throw DomainError("scale expects nonzero constants, got '" + a + "'");
        units.push_back(*c);
      }
      return auto_factor_endo(ScaleAuto{std::move(units)}, alg);
    }
  }
  throw DomainError("unknown builtin '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"anick_variant", "cohn_endo", "identity", "triangular_sample", "elem(i,j,a,b)", "scale(u1,...,un)"};
}

}  // namespace kzaut
