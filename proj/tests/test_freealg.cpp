#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kzaut/endo.hpp"
#include "kzaut/errors.hpp"
#include "kzaut/parse.hpp"
#include "support.hpp"

using namespace kzaut;
using namespace kzaut::testing;

namespace {

const AlgebraPtr& xy() {
  static const AlgebraPtr a = make_algebra(2);
  return a;
}

NCPoly F(const std::string& s, const AlgebraPtr& a = xy()) { return parse_ncpoly(s, a); }

KzEndo E(const std::string& f, const std::string& g) { return KzEndo(xy(), {F(f), F(g)}); }

}  // namespace

TEST_CASE("nc_mul examples") {
  CHECK(F("x") * F("z") == F("x z"));
  CHECK(F("z") * F("x") == F("z x"));
  CHECK(F("x z") != F("z x"));
  CHECK((F("x") + F("y")) * F("z") == F("x z + y z"));
  CHECK(nc_mul(F("z"), F("x z - z y")) == F("z x z - z z y"));
  CHECK((F("x + 1") * F("1")) == F("x + 1"));
  CHECK_THROWS_AS(F("x") * F("x", make_algebra(3)), ContextError);
}

TEST_CASE("word order: length first, then letters with z last") {
  CHECK(F("z y + x + z x z + y x").to_string() == "x + y x + z y + z x z");
  CHECK(F("x + z x z - z^2 y").to_string() == "x + z x z - z^2 y");
  CHECK(word_to_string(Word(), *xy()) == "1");
}

TEST_CASE("apply_endo examples") {
  const KzEndo phi = E("x + z y z", "y");
  CHECK(apply_endo(phi, F("z")) == F("z"));
  CHECK(apply_endo(phi, F("x")) == F("x + z y z"));
  CHECK(apply_endo(phi, F("x y")) == F("x y + z y z y"));
  CHECK(apply_endo(phi, F("3")) == F("3"));
}

TEST_CASE("compose examples") {
  const KzEndo phi = E("x", "y + z x z");
  const KzEndo psi = E("x + y", "y");
  CHECK(compose(phi, psi) == E("x + y + z x z", "y + z x z"));
  CHECK(compose(phi, KzEndo::identity(xy())) == phi);
  CHECK(compose(KzEndo::identity(xy()), phi) == phi);
  CHECK(compose(E("x + z y z", "y"), E("x - z y z", "y")) == KzEndo::identity(xy()));
  CHECK_THROWS_AS(compose(phi, KzEndo::identity(make_algebra(3))), ContextError);
}

TEST_CASE("x_split examples") {
  auto s = x_split(F("z^2 + x + z x z + x y x"));
  CHECK(s.f0 == F("z^2"));
  CHECK(s.f1 == F("x + z x z"));
  CHECK(s.f2 == F("x y x"));
  s = x_split(F("0"));
  CHECK((s.f0.is_zero() && s.f1.is_zero() && s.f2.is_zero()));
  s = x_split(F("x + z (x z - z y)"));
  CHECK(s.f0.is_zero());
  CHECK(s.f1 == F("x + z x z - z^2 y"));
  CHECK(s.f2.is_zero());
}

TEST_CASE("linear_profile of the Anick variant") {
  const KzEndo phi = E("x + z x z - z^2 y", "y + x z^2 - z y z");
  const LinearProfile p = linear_profile(phi);
  const RingPtr zr = z_ring(*xy());
  auto c = [&](const std::string& s) { return parse_commpoly(s, zr); };
  using Cell = LinearProfile::Cell;
  auto same = [](Cell a, Cell b) {
    auto key = [](const auto& pr) { return pr.first.to_string() + "|" + pr.second.to_string(); };
    std::sort(a.begin(), a.end(), [&](auto& u, auto& v) { return key(u) < key(v); });
    std::sort(b.begin(), b.end(), [&](auto& u, auto& v) { return key(u) < key(v); });
    return a == b;
  };
  CHECK(same(p.cell(0, 0), Cell{{c("1"), c("1")}, {c("z"), c("z")}}));
  CHECK(same(p.cell(1, 0), Cell{{c("-z^2"), c("1")}}));
  CHECK(same(p.cell(0, 1), Cell{{c("1"), c("z^2")}}));
  CHECK(same(p.cell(1, 1), Cell{{c("1"), c("1")}, {c("-z"), c("z")}}));
}

TEST_CASE("linear_profile of the identity and of nonlinear maps") {
  const LinearProfile p = linear_profile(KzEndo::identity(xy()));
  CHECK(p.cell(0, 0).size() == 1);
  CHECK(p.cell(0, 1).empty());
  CHECK(p.cell(1, 0).empty());
  try {
    linear_profile(E("x + y^2", "y"));
    FAIL("expected NotXLinear");
  } catch (const NotXLinear& e) {
    CHECK(e.slot == 0);
    CHECK(e.term == "y^2");
  }
  CHECK_THROWS_AS(linear_profile(E("x", "y + z")), NotXLinear);
  CHECK(!is_x_linear(E("x + 1", "y")));
  CHECK(linear_part(E("x + 1 + x y", "y + z x")) == E("x", "y + z x"));
}

TEST_CASE("n = 1 is supported") {
  const AlgebraPtr a = make_algebra(1);
  const KzEndo phi(a, {parse_ncpoly("2 x", a)});
  CHECK(compose(phi, phi) == KzEndo(a, {parse_ncpoly("4 x", a)}));
  CHECK(linear_profile(phi).cell(0, 0).size() == 1);
}

TEST_CASE("apply_endo is multiplicative on 500 random pairs") {
  Rng rng(21);
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    const AlgebraPtr a = make_algebra(2, f);
    for (int k = 0; k < 250; ++k) {
      const KzEndo phi(a, {rand_nc(rng, a, 3, 3), rand_nc(rng, a, 3, 3)});
      const NCPoly u = rand_nc(rng, a, 3, 3), v = rand_nc(rng, a, 3, 3);
      CHECK(apply_endo(phi, u * v) == apply_endo(phi, u) * apply_endo(phi, v));
      CHECK(apply_endo(phi, u + v) == apply_endo(phi, u) + apply_endo(phi, v));
      CHECK(apply_endo(phi, NCPoly::generator(a, kZ)) == NCPoly::generator(a, kZ));
    }
  }
}

TEST_CASE("nc_mul is associative with neutral 1") {
  Rng rng(22);
  const AlgebraPtr a = make_algebra(3);
  for (int k = 0; k < 300; ++k) {
    const NCPoly u = rand_nc(rng, a), v = rand_nc(rng, a), w = rand_nc(rng, a);
    CHECK((u * v) * w == u * (v * w));
    CHECK(u * (v + w) == u * v + u * w);
    CHECK(u * NCPoly::constant(a, 1) == u);
  }
}

TEST_CASE("compose is associative on random linear samples") {
  Rng rng(23);
  const AlgebraPtr a = make_algebra(2);
  for (int k = 0; k < 100; ++k) {
    const KzEndo p = rand_linear_endo(rng, a, 2, 2), q = rand_linear_endo(rng, a, 2, 2),
                 r = rand_linear_endo(rng, a, 2, 2);
    CHECK(compose(p, compose(q, r)) == compose(compose(p, q), r));
  }
}

TEST_CASE("x_split reconstructs and respects degrees") {
  Rng rng(24);
  const AlgebraPtr a = make_algebra(2);
  for (int k = 0; k < 300; ++k) {
    const NCPoly f = rand_nc(rng, a, 6, 4);
    const XDegreeSplit s = x_split(f);
    CHECK(s.f0 + s.f1 + s.f2 == f);
    for (const auto& [w, c] : s.f0.terms()) CHECK(w.x_degree() == 0);
    for (const auto& [w, c] : s.f1.terms()) CHECK(w.x_degree() == 1);
    for (const auto& [w, c] : s.f2.terms()) CHECK(w.x_degree() >= 2);
  }
}

TEST_CASE("linear_profile round trip") {
  Rng rng(25);
  for (std::size_t n : {1, 2, 3}) {
    const AlgebraPtr a = make_algebra(n);
    for (int k = 0; k < 100; ++k) {
      const KzEndo phi = rand_linear_endo(rng, a);
      CHECK(endo_from_profile(linear_profile(phi), a) == phi);
    }
  }
}
