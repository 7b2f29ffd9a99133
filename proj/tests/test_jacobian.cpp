#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "kzaut/errors.hpp"
#include "kzaut/jacobian.hpp"
#include "kzaut/parse.hpp"
#include "support.hpp"

using namespace kzaut;
using namespace kzaut::testing;

namespace {

const AlgebraPtr& xy() {
  static const AlgebraPtr a = make_algebra(2);
  return a;
}

NCPoly F(const std::string& s) { return parse_ncpoly(s, xy()); }

KzEndo E(const std::string& f, const std::string& g) { return KzEndo(xy(), {F(f), F(g)}); }

Word W(const std::string& s) {
  if (s == "1") return Word();
  return F(s).terms().begin()->first;
}

TensorElem T(std::initializer_list<std::pair<std::string, std::string>> pairs) {
  TensorElem t(xy());
  for (const auto& [l, r] : pairs) t.add(xy()->field.one(), W(l), W(r));
  return t;
}

PolyMatrix Mx(const RingPtr& r, std::vector<std::vector<std::string>> rows) {
  std::vector<std::vector<CommPoly>> out;
  for (const auto& row : rows) {
    std::vector<CommPoly> pr;
    for (const auto& e : row) pr.push_back(parse_commpoly(e, r));
    out.push_back(std::move(pr));
  }
  return PolyMatrix(r, std::move(out));
}

const Letter X = 0, Y = 1;

}  // namespace

TEST_CASE("partial_derivative examples") {
  CHECK(partial_derivative(F("x z y"), X) == T({{"1", "z y"}}));
  CHECK(partial_derivative(F("x z y"), Y) == T({{"x z", "1"}}));
  CHECK(partial_derivative(F("x y x"), X) == T({{"1", "y x"}, {"x y", "1"}}));
  CHECK(partial_derivative(F("z x z"), X) == T({{"z", "z"}}));
  CHECK(partial_derivative(F("z x z"), kZ) == T({{"1", "x z"}, {"z x", "1"}}));
  CHECK(partial_derivative(F("x"), X) == T({{"1", "1"}}));
  CHECK(partial_derivative(F("x y x"), X).to_string() == "(1|y x) + (x y|1)");
  CHECK_THROWS_AS(partial_derivative(F("x"), 7), DomainError);
}

TEST_CASE("jacobian_full examples") {
  TensorMatrix j = jacobian_full(KzEndo::identity(xy()));
  CHECK(j[0][0] == T({{"1", "1"}}));
  CHECK(j[0][1].is_zero());
  j = jacobian_full(E("x + z y z", "y"));
  CHECK(j[0][0] == T({{"1", "1"}}));
  CHECK(j[0][1].is_zero());
  CHECK(j[1][0] == T({{"z", "z"}}));
  CHECK(j[1][1] == T({{"1", "1"}}));
  j = jacobian_full(E("x + y^2", "y"));
  CHECK(j[1][0] == T({{"1", "y"}, {"y", "1"}}));
}

TEST_CASE("jacobian_linear of the Anick variant") {
  const KzEndo phi = E("x + z (x z - z y)", "y + (x z - z y) z");
  const PolyMatrix j = jacobian_linear(phi);
  const RingPtr r = j.ring();
  CHECK(r->vars == std::vector<std::string>{"z1", "z2"});
  CHECK(j == Mx(r, {{"1+z1*z2", "z2^2"}, {"-z1^2", "1-z1*z2"}}));
  CHECK(det(j) == CommPoly::constant(r, 1));
  // the derivative oracle agrees entrywise
  const TensorMatrix full = jacobian_full(phi);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) CHECK(tensor_to_z12(full[a][b], r) == j(a, b));
}

TEST_CASE("jacobian_linear of elementary and scaling maps") {
  const KzEndo elem = E("x", "y + 3 z^2 x z");
  const PolyMatrix j = jacobian_linear(elem);
  CHECK(j == Mx(j.ring(), {{"1", "3*z1^2*z2"}, {"0", "1"}}));
  const KzEndo sc = E("2 x", "-1/3 y");
  CHECK(jacobian_linear(sc) == Mx(j.ring(), {{"2", "0"}, {"0", "-1/3"}}));
  CHECK_THROWS_AS(jacobian_linear(E("x + y^2", "y")), NotXLinear);
  CHECK_THROWS_AS(tensor_to_z12(T({{"x", "1"}}), j.ring()), DomainError);
}

TEST_CASE("abelianize examples") {
  const AbelianizedEndo a = abelianize_endo(E("x + z x z - z^2 y", "y + x z^2 - z y z"));
  const RingPtr zr = a.jacobian.ring();
  CHECK(a.jacobian == Mx(zr, {{"1+z^2", "z^2"}, {"-z^2", "1-z^2"}}));
  CHECK(det(a.jacobian) == CommPoly::constant(zr, 1));
  CHECK(a.images[0] == parse_commpoly("x+z^2*(x-y)", a.ring));
  CHECK(a.images[1] == parse_commpoly("y+z^2*(x-y)", a.ring));
  CHECK(abelianize_endo(KzEndo::identity(xy())).jacobian.is_identity());
  const AbelianizedEndo b = abelianize_endo(E("z x z", "y"));
  CHECK(b.jacobian == Mx(zr, {{"z^2", "0"}, {"0", "1"}}));
  CHECK(!is_gl(b.jacobian));
}

TEST_CASE("Leibniz rule at pair-list level on 500 random word pairs") {
  Rng rng(31);
  const AlgebraPtr a = make_algebra(3);
  for (int k = 0; k < 500; ++k) {
    const Word u = rand_word(rng, *a, 6), v = rand_word(rng, *a, 6);
    const Letter y = uniform(rng, 0, 3) == 3 ? kZ : static_cast<Letter>(uniform(rng, 0, 2));
    const TensorElem du = partial_derivative(NCPoly::monomial(a, a->field.one(), u), y);
    const TensorElem dv = partial_derivative(NCPoly::monomial(a, a->field.one(), v), y);
    TensorElem expect(a);
    for (const auto& [key, c] : du.terms()) expect.add(c, key.first, key.second * v);
    for (const auto& [key, c] : dv.terms()) expect.add(c, u * key.first, key.second);
    CHECK(partial_derivative(NCPoly::monomial(a, a->field.one(), u * v), y) == expect);
  }
}

TEST_CASE("derivative vanishes on absent variables") {
  Rng rng(32);
  const AlgebraPtr a = make_algebra(3);
  for (int k = 0; k < 200; ++k) {
    const NCPoly f = rand_nc(rng, a);
    for (Letter y : {Letter{0}, Letter{1}, Letter{2}, kZ}) {
      bool occurs = false;
      for (const auto& [w, c] : f.terms())
        for (Letter l : w.letters()) occurs = occurs || l == y;
      if (!occurs) CHECK(partial_derivative(f, y).is_zero());
    }
  }
}

TEST_CASE("chain rule on 200 random linear pairs") {
  Rng rng(33);
  {
    const KzEndo phi = E("x", "y + z x z"), psi = E("x + y", "y");
    const PolyMatrix jc = jacobian_linear(compose(phi, psi));
    CHECK(jc == jacobian_linear(phi) * jacobian_linear(psi));
    CHECK(jc == Mx(jc.ring(), {{"1+z1*z2", "z1*z2"}, {"1", "1"}}));
    CHECK(jc != jacobian_linear(psi) * jacobian_linear(phi));
  }
  for (int k = 0; k < 200; ++k) {
    const AlgebraPtr a = make_algebra(static_cast<std::size_t>(uniform(rng, 2, 3)),
                                      k % 2 ? Field::prime(7) : Field::rationals());
    const KzEndo phi = rand_linear_endo(rng, a), psi = rand_linear_endo(rng, a);
    CHECK(jacobian_linear(compose(phi, psi)) == jacobian_linear(phi) * jacobian_linear(psi));
  }
}

TEST_CASE("abelianization commutes with specialization") {
  Rng rng(34);
  for (int k = 0; k < 200; ++k) {
    const AlgebraPtr a = make_algebra(static_cast<std::size_t>(uniform(rng, 1, 3)));
    const KzEndo phi = rand_linear_endo(rng, a);
    const AbelianizedEndo ab = abelianize_endo(phi);
    const CommPoly z = CommPoly::variable(ab.jacobian.ring(), 0);
    const std::vector<CommPoly> zz{z, z};
    CHECK(jacobian_linear(phi).subst(zz) == ab.jacobian);
  }
}
