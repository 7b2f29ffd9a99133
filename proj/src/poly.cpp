#include "kzaut/poly.hpp"

#include <algorithm>
#include <numeric>

#include "kzaut/errors.hpp"

namespace kzaut {

RingPtr make_ring(std::vector<std::string> vars, Field field) {
  return std::make_shared<const Ring>(Ring{std::move(vars), field});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.e_.at(index) = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted(priority_);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw DomainError("variable priority must be a permutation");
}

MonomialOrder MonomialOrder::deglex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(Kind::DegLex, std::move(p));
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(Kind::Lex, std::move(p));
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::DegLex) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
  }
  for (const std::size_t v : priority_)
    if (a[v] != b[v]) return a[v] < b[v];
  return false;
}

std::string MonomialOrder::to_string(const Ring& ring) const {
  std::string s = kind_ == Kind::DegLex ? "deglex" : "lex";
  s += ' ';
  for (std::size_t k = 0; k < priority_.size(); ++k) {
    if (k) s += '>';
    s += ring.vars.at(priority_[k]);
  }
  return s;
}

CommPoly CommPoly::constant(RingPtr ring, const Scalar& c) {
  CommPoly p(ring);
  p.add_term(c, Monomial(ring->nvars()));
  return p;
}

CommPoly CommPoly::constant(RingPtr ring, long long c) {
  const Scalar s = ring->field.from_int(c);
  return constant(std::move(ring), s);
}

CommPoly CommPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw DomainError("variable index out of range");
  const Scalar one = ring->field.one();
  const Monomial m = Monomial::variable(ring->nvars(), index);
  return term(std::move(ring), one, m);
}

CommPoly CommPoly::term(RingPtr ring, const Scalar& c, Monomial m) {
  CommPoly p(std::move(ring));
  p.add_term(c, m);
  return p;
}

CommPoly term_poly(const RingPtr& ring, const Term& t) { return CommPoly::term(ring, t.coeff, t.mono); }

bool CommPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Scalar> CommPoly::as_constant() const {
  if (terms_.empty()) return field().zero();
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

Scalar CommPoly::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? field().zero() : it->second;
}

std::uint64_t CommPoly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::uint32_t CommPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

void CommPoly::add_term(const Scalar& c, const Monomial& m) {
  if (m.size() != ring_->nvars()) throw ContextError("monomial arity does not match ring");
  if (!(c.field() == ring_->field)) throw ContextError("coefficient from a different field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CommPoly::require_same_ring(const CommPoly& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw ContextError("polynomials from different rings");
}

CommPoly CommPoly::operator-() const {
  CommPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(c, m);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(-c, m);
  return *this;
}

CommPoly& CommPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  a.require_same_ring(b);
  CommPoly r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, ma * mb);
  return r;
}

CommPoly CommPoly::pow(unsigned e) const {
  CommPoly r = constant(ring_, 1);
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

bool operator==(const CommPoly& a, const CommPoly& b) {
  return (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) && a.terms_ == b.terms_;
}

CommPoly CommPoly::derivative(std::size_t var) const {
  if (var >= ring_->nvars()) throw DomainError("variable index out of range");
  CommPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
    const auto k = e[var]--;
    r.add_term(c * field().from_int(k), Monomial(std::move(e)));
  }
  return r;
}

std::string CommPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Scalar>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  // ascending total degree; within a degree, larger exponent of the first
  // variable first (z1^2, z1*z2, z2^2)
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) {
    const auto dx = x->first.degree(), dy = y->first.degree();
    if (dx != dy) return dx < dy;
    return y->first < x->first;
  });
  std::string s;
  bool first = true;
  for (const auto* t : order) {
    const Monomial& m = t->first;
    Scalar c = t->second;
    if (c.is_negative()) {
      s += '-';
      c = -c;
    } else if (!first) {
      s += '+';
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring_->vars[v];
      if (m[v] > 1) mono += '^' + std::to_string(m[v]);
    }
    if (mono.empty()) {
      s += c.to_string();
    } else if (c.is_one()) {
      s += mono;
    } else {
      s += c.to_string() + '*' + mono;
    }
  }
  return s;
}

Term leading_term(const CommPoly& a, const MonomialOrder& ord) {
  if (a.is_zero()) throw DomainError("leading term of the zero polynomial");
  if (ord.priority().size() != a.ring()->nvars()) throw ContextError("monomial order arity does not match ring");
  auto best = a.terms().begin();
  for (auto it = std::next(best); it != a.terms().end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return Term{best->second, best->first};
}

std::optional<Term> term_divide(const Term& num, const Term& den) {
  if (den.coeff.is_zero()) throw DomainError("division by a zero term");
  if (num.mono.size() != den.mono.size()) throw ContextError("monomials of different arity");
  if (!den.mono.divides(num.mono)) return std::nullopt;
  return Term{num.coeff / den.coeff, num.mono / den.mono};
}

CommPoly subst_z(const CommPoly& a, std::span<const CommPoly> images) {
  if (images.size() != a.ring()->nvars()) throw ContextError("substitution arity does not match ring");
  if (images.empty()) throw ContextError("substitution needs a target ring");
  const RingPtr& target = images.front().ring();
  for (const auto& img : images)
    if (!(*img.ring() == *target)) throw ContextError("substitution images in different rings");
  if (!(target->field == a.field())) throw ContextError("substitution changes the coefficient field");
  CommPoly r(target);
  for (const auto& [m, c] : a.terms()) {
    CommPoly t = CommPoly::constant(target, c);
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v]) t = t * images[v].pow(m[v]);
    r += t;
  }
  return r;
}

std::optional<CommPoly> divide_exact(const CommPoly& a, const CommPoly& b, const MonomialOrder& ord) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  CommPoly q(a.ring()), r(a);
  const Term lb = leading_term(b, ord);
  while (!r.is_zero()) {
    const auto t = term_divide(leading_term(r, ord), lb);
    if (!t) return std::nullopt;
    const CommPoly tp = term_poly(a.ring(), *t);
    q += tp;
    r -= tp * b;
  }
  return q;
}

std::pair<CommPoly, CommPoly> divmod_univariate(const CommPoly& a, const CommPoly& b) {
  if (a.ring()->nvars() != 1) throw ContextError("univariate division needs a one-variable ring");
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const auto ord = MonomialOrder::deglex(1);
  CommPoly q(a.ring()), r(a);
  const Term lb = leading_term(b, ord);
  while (!r.is_zero()) {
    const Term lr = leading_term(r, ord);
    if (lr.mono[0] < lb.mono[0]) break;
    const CommPoly tp = term_poly(a.ring(), *term_divide(lr, lb));
    q += tp;
    r -= tp * b;
  }
  return {q, r};
}

std::optional<CommPoly> sqrt_monic(const CommPoly& a, const MonomialOrder& ord) {
  if (a.field().characteristic() == 2) return std::nullopt;
  if (a.is_zero()) return a;
  const Term la = leading_term(a, ord);
  if (!la.coeff.is_one()) return std::nullopt;
  std::vector<std::uint32_t> half(la.mono.size());
  for (std::size_t i = 0; i < half.size(); ++i) {
    if (la.mono[i] % 2) return std::nullopt;
    half[i] = la.mono[i] / 2;
  }
  const Term lead{la.coeff, Monomial(std::move(half))};
  const Term twice_lead{lead.coeff + lead.coeff, lead.mono};
  CommPoly g = term_poly(a.ring(), lead);
  CommPoly r = a - g * g;
  while (!r.is_zero()) {
    const auto t = term_divide(leading_term(r, ord), twice_lead);
    if (!t || !ord.less(t->mono, lead.mono)) return std::nullopt;
    const CommPoly tp = term_poly(a.ring(), *t);
    r -= (g + g + tp) * tp;
    g += tp;
  }
  return g;
}

}  // namespace kzaut
