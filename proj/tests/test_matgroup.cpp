#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kzaut/errors.hpp"
#include "kzaut/ge2.hpp"
#include "kzaut/matrix.hpp"
#include "kzaut/parse.hpp"
#include "kzaut/serialize.hpp"
#include "kzaut/transcript.hpp"
#include "support.hpp"

using namespace kzaut;
using namespace kzaut::testing;

namespace {

RingPtr z12(Field f = Field::rationals()) { return make_ring({"z1", "z2"}, f); }

CommPoly P(const std::string& s, const RingPtr& r) { return parse_commpoly(s, r); }

PolyMatrix Mx(const RingPtr& r, std::vector<std::vector<std::string>> rows) {
  std::vector<std::vector<CommPoly>> out;
  for (const auto& row : rows) {
    std::vector<CommPoly> pr;
    for (const auto& e : row) pr.push_back(P(e, r));
    out.push_back(std::move(pr));
  }
  return PolyMatrix(r, std::move(out));
}

PolyMatrix cohn(const RingPtr& r) { return Mx(r, {{"1+z1*z2", "z2^2"}, {"-z1^2", "1-z1*z2"}}); }

bool is_tame(const Ge2Result& r) { return std::holds_alternative<Ge2Tame>(r); }

}  // namespace

TEST_CASE("det examples") {
  const RingPtr r = z12();
  for (std::size_t n = 1; n <= 5; ++n) CHECK(det(PolyMatrix::identity(r, n)) == P("1", r));
  CHECK(det(cohn(r)) == P("1", r));
  CHECK(det(Mx(r, {{"1+z1*z2", "z2^2"}, {"z1^2", "1-z1*z2"}})) == P("1-2*z1^2*z2^2", r));
  CHECK(det(Mx(r, {{"1", "2", "3"}, {"4", "5", "6"}, {"7", "8", "10"}})) == P("-3", r));
}

TEST_CASE("is_gl examples") {
  const RingPtr r = z12();
  CHECK(is_gl(Mx(r, {{"2", "0"}, {"0", "3"}})));
  CHECK(!is_gl(Mx(r, {{"z1", "0"}, {"0", "1"}})));
  CHECK(is_gl(cohn(r)));
  CHECK(!is_gl(Mx(r, {{"0", "0"}, {"0", "1"}})));
}

TEST_CASE("adjugate and inverse") {
  Rng rng(41);
  const RingPtr r = z12();
  for (int k = 0; k < 50; ++k) {
    PolyMatrix m(r, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = rand_comm(rng, r, 2, 2);
    const PolyMatrix d = PolyMatrix::identity(r, 3);
    PolyMatrix dd(r, 3);
    for (std::size_t i = 0; i < 3; ++i) dd(i, i) = det(m);
    CHECK(adjugate(m) * m == dd);
    CHECK(m * adjugate(m) == dd);
  }
  const PolyMatrix c = cohn(r);
  CHECK(inverse(c) == Mx(r, {{"1-z1*z2", "-z2^2"}, {"z1^2", "1+z1*z2"}}));
  CHECK(c * inverse(c) == PolyMatrix::identity(r, 2));
  CHECK_THROWS_AS(inverse(Mx(r, {{"z1", "0"}, {"0", "1"}})), NotInvertible);
}

TEST_CASE("det is multiplicative") {
  Rng rng(42);
  const RingPtr r = z12(Field::prime(7));
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    PolyMatrix a(r, n), b(r, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = rand_comm(rng, r, 2, 2);
        b(i, j) = rand_comm(rng, r, 2, 2);
      }
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("ge2_decide: the Cohn matrix is stuck immediately under every order") {
  const RingPtr r = z12();
  for (const auto& ord : all_orders()) {
    const Ge2Result res = ge2_decide(cohn(r), ord);
    REQUIRE(std::holds_alternative<Ge2Wild>(res));
    const PolyMatrix& w = std::get<Ge2Wild>(res).witness;
    CHECK(is_stuck_witness(w, ord));
    CHECK(w == cohn(r));
  }
}

TEST_CASE("ge2_decide: a built product is tame") {
  const RingPtr r = z12();
  const Transcript t{r, 2, {Elem{1, 0, P("z1^2*z2", r)}, Diag{{Scalar(mpq_class(1)), Scalar(mpq_class(-1))}},
                            Elem{0, 1, P("3*z2^3", r)}}};
  const PolyMatrix m = transcript_product(t);
  const Ge2Result res = ge2_decide(m, MonomialOrder::deglex(2));
  REQUIRE(is_tame(res));
  CHECK(verify_transcript(std::get<Ge2Tame>(res).transcript, m));
}

TEST_CASE("ge2_decide: identity gives an empty transcript") {
  const RingPtr r = z12();
  const Ge2Result res = ge2_decide(PolyMatrix::identity(r, 2), MonomialOrder::deglex(2));
  REQUIRE(is_tame(res));
  CHECK(std::get<Ge2Tame>(res).transcript.factors.empty());
  CHECK_THROWS_AS(ge2_decide(Mx(r, {{"z1", "0"}, {"0", "1"}}), MonomialOrder::deglex(2)), NotInvertible);
}

TEST_CASE("ge2_decide round trip on 200 random transcripts, all orders agree") {
  Rng rng(43);
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    const RingPtr r = z12(f);
    for (int k = 0; k < 100; ++k) {
      const Transcript t = rand_transcript(rng, r, 2);
      const PolyMatrix m = transcript_product(t);
      for (const auto& ord : all_orders()) {
        const Ge2Result res = ge2_decide(m, ord);
        REQUIRE(is_tame(res));
        CHECK(verify_transcript(std::get<Ge2Tame>(res).transcript, m));
      }
    }
  }
}

TEST_CASE("gl2_univariate_decompose examples and totality") {
  const RingPtr zr = make_ring({"z"});
  const PolyMatrix ab = Mx(zr, {{"1+z^2", "z^2"}, {"-z^2", "1-z^2"}});
  CHECK(verify_transcript(gl2_univariate_decompose(ab), ab));
  const PolyMatrix d = Mx(zr, {{"2", "0"}, {"0", "-5"}});
  const Transcript td = gl2_univariate_decompose(d);
  REQUIRE(td.factors.size() == 1);
  CHECK(std::holds_alternative<Diag>(td.factors[0]));
  CHECK(verify_transcript(td, d));
  Rng rng(44);
  for (Field f : {Field::rationals(), Field::prime(3)}) {
    const RingPtr r = make_ring({"z"}, f);
    for (int k = 0; k < 100; ++k) {
      const PolyMatrix m = transcript_product(rand_transcript(rng, r, 2, 10, 3));
      CHECK(verify_transcript(gl2_univariate_decompose(m), m));
    }
  }
  CHECK_THROWS_AS(gl2_univariate_decompose(Mx(zr, {{"z", "0"}, {"0", "1"}})), NotInvertible);
}

TEST_CASE("verify_transcript soundness") {
  const RingPtr r = z12();
  CHECK(verify_transcript(Transcript{r, 2, {}}, PolyMatrix::identity(r, 2)));
  Rng rng(45);
  for (int k = 0; k < 100; ++k) {
    Transcript t = rand_transcript(rng, r, 3, 6);
    const PolyMatrix m = transcript_product(t);
    CHECK(verify_transcript(t, m));
    if (t.factors.empty()) continue;
    const std::size_t at = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(t.factors.size()) - 1));
    // perturb one factor by an extra elementary step
    t.factors.insert(t.factors.begin() + static_cast<long>(at), Elem{0, 1, P("z1+1", r)});
    CHECK(!verify_transcript(t, m));
  }
  CHECK_THROWS_AS(verify_transcript(Transcript{r, 3, {}}, PolyMatrix::identity(r, 2)), DimensionError);
  CHECK_THROWS_AS(verify_transcript(Transcript{r, 2, {Elem{0, 2, P("1", r)}}}, PolyMatrix::identity(r, 2)),
                  DimensionError);
}

TEST_CASE("swap expansion preserves the product") {
  const RingPtr r = z12();
  const Transcript t{r, 3, {Swap{0, 2}, Elem{0, 1, P("z1", r)}, Swap{1, 2}}};
  const Transcript e = expand_swaps(t);
  for (const auto& f : e.factors) CHECK(!std::holds_alternative<Swap>(f));
  CHECK(transcript_product(e) == transcript_product(t));
}

TEST_CASE("cohn_commutator is the eight-factor template") {
  Rng rng(46);
  const RingPtr r = z12();
  const PolyMatrix c = cohn_matrix(P("z1", r), P("z2", r));
  CHECK(c == cohn(r));
  const Transcript t = cohn_commutator(P("z1", r), P("z2", r));
  CHECK(t.factors.size() == 8);
  CHECK(verify_transcript(t, c.embed(3)));
  for (int k = 0; k < 50; ++k) {
    const CommPoly a = rand_comm(rng, r, 2, 2), b = rand_comm(rng, r, 2, 2);
    CHECK(verify_transcript(cohn_commutator(a, b), cohn_matrix(a, b).embed(3)));
  }
}

TEST_CASE("stabilize3") {
  const RingPtr r = z12();
  const MonomialOrder ord = MonomialOrder::deglex(2);
  auto st = stabilize3(cohn(r), ord);
  REQUIRE(st);
  CHECK(st->method == Stabilization::Method::CohnFamily);
  CHECK(st->transcript.factors.size() == 8);
  CHECK(verify_transcript(st->transcript, cohn(r).embed(3)));

  st = stabilize3(PolyMatrix::identity(r, 2), ord);
  REQUIRE(st);
  CHECK(st->transcript.factors.empty());

  const Transcript t{r, 2, {Elem{1, 0, P("z1^2*z2", r)}, Elem{0, 1, P("3*z2^3", r)}}};
  st = stabilize3(transcript_product(t), ord);
  REQUIRE(st);
  CHECK(st->method == Stabilization::Method::Ge2);
  CHECK(verify_transcript(st->transcript, transcript_product(t).embed(3)));

  Rng rng(47);
  for (int k = 0; k < 40; ++k) {
    // Cohn family members with a unit twist, and products with GE_2 matrices
    const CommPoly a = rand_nonzero_comm(rng, r, 2, 2), b = rand_nonzero_comm(rng, r, 2, 2);
    PolyMatrix m = cohn_matrix(a, b);
    if (k % 2) m = m * PolyMatrix(r, {{CommPoly::constant(r, 1), CommPoly(r)}, {CommPoly(r), CommPoly::constant(r, 3)}});
    const auto s = stabilize3(m, ord);
    REQUIRE(s);
    CHECK(verify_transcript(s->transcript, m.embed(3)));
  }
  CHECK_THROWS_AS(stabilize3(Mx(r, {{"z1", "0"}, {"0", "1"}}), ord), NotInvertible);
}

TEST_CASE("transcript text and json round trip") {
  Rng rng(48);
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    const RingPtr r = z12(f);
    for (int k = 0; k < 100; ++k) {
      const Transcript t = rand_transcript(rng, r, 3);
      const PolyMatrix m = transcript_product(t);
      const Transcript back = transcript_from_text(transcript_to_text(t), r, 3);
      CHECK(verify_transcript(back, m));
      const Transcript j = transcript_from_json(transcript_to_json(t));
      CHECK(*j.ring == *r);
      CHECK(verify_transcript(j, m));
      CHECK(matrix_from_json(matrix_to_json(m), r) == m);
    }
  }
  const RingPtr r = z12();
  CHECK(transcript_to_text(Transcript{r, 2, {Elem{0, 1, P("1+z1*z2", r)}, Diag{{Scalar(mpq_class(2)), Scalar(mpq_class(1, 2))}}}}) ==
        "E 1 2 1+z1*z2\nD 2 1/2\n");
  const Transcript s = transcript_from_text("S 1 2\n# note\nE 2 1 z1 z2\n", r, 2);
  CHECK(s.factors.size() == 2);
  CHECK(std::get<Elem>(s.factors[1]).p == P("z1*z2", r));
  CHECK_THROWS_AS(transcript_from_text("E 1 1 z1\n", r, 2), ParseError);
  CHECK_THROWS_AS(transcript_from_text("E 1 3 z1\n", r, 2), ParseError);
  CHECK_THROWS_AS(transcript_from_text("D 0 1\n", r, 2), ParseError);
  CHECK_THROWS_AS(transcript_from_text("Q 1 2\n", r, 2), ParseError);
}
