#include "kzaut/ge2.hpp"

#include <algorithm>
#include <deque>

#include "kzaut/errors.hpp"

namespace kzaut {

namespace {

// row i += t * row l
void add_row(PolyMatrix& a, std::size_t i, std::size_t l, const CommPoly& t) {
  for (std::size_t c = 0; c < a.size(); ++c)
    if (!a(l, c).is_zero()) a(i, c) += t * a(l, c);
}

// col j += t * col l
void add_col(PolyMatrix& a, std::size_t j, std::size_t l, const CommPoly& t) {
  for (std::size_t r = 0; r < a.size(); ++r)
    if (!a(r, l).is_zero()) a(r, j) += a(r, l) * t;
}

void swap_rows(PolyMatrix& a, std::size_t i, std::size_t l) {
  for (std::size_t c = 0; c < a.size(); ++c) std::swap(a(i, c), a(l, c));
}

void swap_cols(PolyMatrix& a, std::size_t j, std::size_t l) {
  for (std::size_t r = 0; r < a.size(); ++r) std::swap(a(r, j), a(r, l));
}

Scalar unit_of(const CommPoly& p) {
  const auto c = p.as_constant();
  if (!c || c->is_zero()) throw NotInvertible("expected a unit on the diagonal, got " + p.to_string());
  return *c;
}

void require_invertible(const PolyMatrix& m) {
  if (!is_gl(m)) throw NotInvertible("determinant " + det(m).to_string() + " is not a unit");
}

// Finishes [[u1, b], [0, u2]] = E12(b / u2) diag(u1, u2).
void finish_triangular(const PolyMatrix& a, Transcript& t) {
  const Scalar u1 = unit_of(a(0, 0));
  const Scalar u2 = unit_of(a(1, 1));
  if (!a(0, 1).is_zero()) t.factors.push_back(Elem{0, 1, a(0, 1) * u2.inverse()});
  if (!u1.is_one() || !u2.is_one()) t.factors.push_back(Diag{{u1, u2}});
}

}  // namespace

Ge2Result ge2_decide(const PolyMatrix& m, const MonomialOrder& ord) {
  if (m.size() != 2) throw DimensionError("ge2_decide expects a 2x2 matrix");
  require_invertible(m);
  PolyMatrix a = m;
  Transcript t{m.ring(), 2, {}};
  // invariant: m == product(t.factors) * a
  while (true) {
    if (a(1, 0).is_zero()) {
      finish_triangular(a, t);
      return Ge2Tame{std::move(t)};
    }
    if (a(0, 0).is_zero()) {
      swap_rows(a, 0, 1);
      t.factors.push_back(Swap{0, 1});
      continue;
    }
    const Term top = leading_term(a(0, 0), ord);
    const Term bottom = leading_term(a(1, 0), ord);
    if (const auto q = term_divide(top, bottom)) {
      const CommPoly qp = term_poly(m.ring(), *q);
      add_row(a, 0, 1, -qp);
      t.factors.push_back(Elem{0, 1, qp});
    } else if (const auto q2 = term_divide(bottom, top)) {
      const CommPoly qp = term_poly(m.ring(), *q2);
      add_row(a, 1, 0, -qp);
      t.factors.push_back(Elem{1, 0, qp});
    } else {
      return Ge2Wild{std::move(a)};
    }
  }
}

bool is_stuck_witness(const PolyMatrix& w, const MonomialOrder& ord) {
  if (w.size() != 2 || w(0, 0).is_zero() || w(1, 0).is_zero()) return false;
  const Monomial top = leading_term(w(0, 0), ord).mono;
  const Monomial bottom = leading_term(w(1, 0), ord).mono;
  return !top.divides(bottom) && !bottom.divides(top);
}

Transcript gl2_univariate_decompose(const PolyMatrix& m) {
  if (m.size() != 2) throw DimensionError("expected a 2x2 matrix");
  if (m.ring()->nvars() != 1) throw ContextError("expected a matrix over a univariate ring");
  require_invertible(m);
  PolyMatrix a = m;
  Transcript t{m.ring(), 2, {}};
  while (true) {
    if (a(1, 0).is_zero()) {
      finish_triangular(a, t);
      return t;
    }
    if (a(0, 0).is_zero()) {
      swap_rows(a, 0, 1);
      t.factors.push_back(Swap{0, 1});
      continue;
    }
    if (a(0, 0).degree_in(0) >= a(1, 0).degree_in(0)) {
      const CommPoly q = divmod_univariate(a(0, 0), a(1, 0)).first;
      add_row(a, 0, 1, -q);
      t.factors.push_back(Elem{0, 1, q});
    } else {
      const CommPoly q = divmod_univariate(a(1, 0), a(0, 0)).first;
      add_row(a, 1, 0, -q);
      t.factors.push_back(Elem{1, 0, q});
    }
  }
}

std::optional<Transcript> elementary_reduce(const PolyMatrix& m, const MonomialOrder& ord, std::size_t max_steps) {
  const std::size_t n = m.size();
  if (!is_gl(m)) return std::nullopt;
  PolyMatrix a = m;
  // invariant: m == left * a * right
  std::vector<Factor> left;
  std::deque<Factor> right;
  std::size_t steps = 0;

  // Tries one leading-term reduction among the entries a(idx, k) (rows) or
  // a(k, idx) (columns) for idx >= k, largest leading monomial first.
  auto reduce_line = [&](std::size_t k, bool by_rows) -> bool {
    auto entry = [&](std::size_t idx) -> const CommPoly& { return by_rows ? a(idx, k) : a(k, idx); };
    std::vector<std::size_t> live;
    for (std::size_t idx = k; idx < n; ++idx)
      if (!entry(idx).is_zero()) live.push_back(idx);
    std::vector<Term> lts;
    for (const auto idx : live) lts.push_back(leading_term(entry(idx), ord));
    std::vector<std::size_t> order(live.size());
    for (std::size_t q = 0; q < order.size(); ++q) order[q] = q;
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return ord.less(lts[y].mono, lts[x].mono); });
    for (const auto x : order)
      for (const auto y : order) {
        if (x == y) continue;
        const auto q = term_divide(lts[x], lts[y]);
        if (!q) continue;
        const CommPoly qp = term_poly(m.ring(), *q);
        const std::size_t target = live[x], source = live[y];
        if (by_rows) {
          add_row(a, target, source, -qp);
          left.push_back(Elem{target, source, qp});
        } else {
          add_col(a, target, source, -qp);
          right.push_front(Elem{source, target, qp});
        }
        return true;
      }
    return false;
  };

  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      if (++steps > max_steps) return std::nullopt;
      std::optional<std::size_t> pivot_row;
      for (std::size_t r = k; r < n && !pivot_row; ++r)
        if (!a(r, k).is_zero() && a(r, k).is_constant()) pivot_row = r;
      if (pivot_row) {
        if (*pivot_row != k) {
          swap_rows(a, k, *pivot_row);
          left.push_back(Swap{k, *pivot_row});
        }
        const Scalar inv = unit_of(a(k, k)).inverse();
        for (std::size_t r = k + 1; r < n; ++r) {
          if (a(r, k).is_zero()) continue;
          const CommPoly t = a(r, k) * inv;
          add_row(a, r, k, -t);
          left.push_back(Elem{r, k, t});
        }
        for (std::size_t c = k + 1; c < n; ++c) {
          if (a(k, c).is_zero()) continue;
          const CommPoly s = a(k, c) * inv;
          add_col(a, c, k, -s);
          right.push_front(Elem{k, c, s});
        }
        break;
      }
      std::optional<std::size_t> pivot_col;
      for (std::size_t c = k + 1; c < n && !pivot_col; ++c)
        if (!a(k, c).is_zero() && a(k, c).is_constant()) pivot_col = c;
      if (pivot_col) {
        swap_cols(a, k, *pivot_col);
        right.push_front(Swap{k, *pivot_col});
        continue;
      }
      if (reduce_line(k, true) || reduce_line(k, false)) continue;
      return std::nullopt;
    }
  }

  Transcript t{m.ring(), n, std::move(left)};
  std::vector<Scalar> units;
  bool all_one = true;
  for (std::size_t k = 0; k < n; ++k) {
    units.push_back(unit_of(a(k, k)));
    all_one = all_one && units.back().is_one();
  }
  if (!all_one) t.factors.push_back(Diag{std::move(units)});
  t.factors.insert(t.factors.end(), right.begin(), right.end());
  return t;
}

std::string to_string(Stabilization::Method m) {
  switch (m) {
    case Stabilization::Method::Identity: return "identity";
    case Stabilization::Method::Ge2: return "ge2";
    case Stabilization::Method::CohnFamily: return "cohn-family";
    case Stabilization::Method::Transvection: return "transvection";
    case Stabilization::Method::Elimination: return "elimination";
  }
  return "unknown";
}

PolyMatrix cohn_matrix(const CommPoly& a, const CommPoly& b) {
  const RingPtr& ring = a.ring();
  const CommPoly one = CommPoly::constant(ring, 1);
  return PolyMatrix(ring, {{one + a * b, b * b}, {-(a * a), one - a * b}});
}

namespace {

// [I + u e3^T, I + e3 v^T] = I + u v^T whenever v.u = 0.
Transcript commutator(const RingPtr& ring, const CommPoly& u1, const CommPoly& u2, const CommPoly& v1,
                      const CommPoly& v2) {
  Transcript t{ring, 3, {}};
  auto push = [&](std::size_t i, std::size_t j, const CommPoly& p) {
    if (!p.is_zero()) t.factors.push_back(Elem{i, j, p});
  };
  push(0, 2, u1);
  push(1, 2, u2);
  push(2, 0, v1);
  push(2, 1, v2);
  push(0, 2, -u1);
  push(1, 2, -u2);
  push(2, 0, -v1);
  push(2, 1, -v2);
  return t;
}

struct Split {
  CommPoly u1, u2, v1, v2;
  Stabilization::Method method;
};

// N = lambda * [[ab, b^2], [-a^2, -ab]] with lambda in K*.
std::optional<Split> split_cohn(const PolyMatrix& nil, const MonomialOrder& ord) {
  if (nil(0, 1).is_zero()) return std::nullopt;
  const Scalar lambda = leading_term(nil(0, 1), ord).coeff;
  const auto b = sqrt_monic(nil(0, 1) * lambda.inverse(), ord);
  if (!b || b->is_zero()) return std::nullopt;
  const auto a = divide_exact(nil(0, 0), *b * lambda, ord);
  if (!a) return std::nullopt;
  const PolyMatrix expect = cohn_matrix(*a, *b);
  const CommPoly one = CommPoly::constant(nil.ring(), 1);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const CommPoly e = expect(i, j) - (i == j ? one : CommPoly(nil.ring()));
      if (!(e * lambda == nil(i, j))) return std::nullopt;
    }
  return Split{-(*b) * lambda, *a * lambda, -(*a), -(*b), Stabilization::Method::CohnFamily};
}

// N = u v^T read off from one column and a row quotient (or vice versa).
std::optional<Split> split_rank_one(const PolyMatrix& nil, const MonomialOrder& ord) {
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      const CommPoly& pivot = nil(r, c);
      if (pivot.is_zero()) continue;
      // u = column c, v = row r / pivot
      const auto v1 = divide_exact(nil(r, 0), pivot, ord);
      const auto v2 = divide_exact(nil(r, 1), pivot, ord);
      if (v1 && v2) {
        Split s{nil(0, c), nil(1, c), *v1, *v2, Stabilization::Method::Transvection};
        if (s.u1 * s.v1 == nil(0, 0) && s.u1 * s.v2 == nil(0, 1) && s.u2 * s.v1 == nil(1, 0) &&
            s.u2 * s.v2 == nil(1, 1))
          return s;
      }
      // u = column c / pivot, v = row r
      const auto u1 = divide_exact(nil(0, c), pivot, ord);
      const auto u2 = divide_exact(nil(1, c), pivot, ord);
      if (u1 && u2) {
        Split s{*u1, *u2, nil(r, 0), nil(r, 1), Stabilization::Method::Transvection};
        if (s.u1 * s.v1 == nil(0, 0) && s.u1 * s.v2 == nil(0, 1) && s.u2 * s.v1 == nil(1, 0) &&
            s.u2 * s.v2 == nil(1, 1))
          return s;
      }
    }
  return std::nullopt;
}

}  // namespace

Transcript cohn_commutator(const CommPoly& a, const CommPoly& b) { return commutator(a.ring(), -b, a, -a, -b); }

std::optional<Stabilization> stabilize3(const PolyMatrix& m, const MonomialOrder& ord) {
  if (m.size() != 2) throw DimensionError("stabilize3 expects a 2x2 matrix");
  require_invertible(m);
  const RingPtr& ring = m.ring();
  const PolyMatrix target = m.embed(3);
  if (m.is_identity()) return Stabilization{Transcript{ring, 3, {}}, Stabilization::Method::Identity};

  const Ge2Result decided = ge2_decide(m, ord);
  if (const auto* tame = std::get_if<Ge2Tame>(&decided))
    return Stabilization{embed(tame->transcript, 3), Stabilization::Method::Ge2};

  // M = M' diag(1, delta) with det M' = 1
  const Scalar delta = *det(m).as_constant();
  PolyMatrix normalized = m;
  normalized(0, 1) *= delta.inverse();
  normalized(1, 1) *= delta.inverse();
  const CommPoly one = CommPoly::constant(ring, 1);
  PolyMatrix nil = normalized;
  nil(0, 0) -= one;
  nil(1, 1) -= one;
  if ((nil(0, 0) + nil(1, 1)).is_zero()) {
    auto split = split_cohn(nil, ord);
    if (!split) split = split_rank_one(nil, ord);
    if (split) {
      Transcript t = commutator(ring, split->u1, split->u2, split->v1, split->v2);
      if (!delta.is_one()) t.factors.push_back(Diag{{ring->field.one(), delta, ring->field.one()}});
      if (verify_transcript(t, target)) return Stabilization{std::move(t), split->method};
    }
  }

  if (auto t = elementary_reduce(target, ord)) return Stabilization{std::move(*t), Stabilization::Method::Elimination};
  return std::nullopt;
}

}  // namespace kzaut
