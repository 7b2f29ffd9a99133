#include "kzaut/ncpoly.hpp"

#include <algorithm>

#include "kzaut/errors.hpp"

namespace kzaut {

std::optional<Letter> Algebra::letter(const std::string& name) const {
  if (name == z_name) return kZ;
  for (std::size_t i = 0; i < x_names.size(); ++i)
    if (x_names[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

AlgebraPtr make_algebra(std::vector<std::string> x_names, std::string z_name, Field field) {
  if (x_names.empty()) throw DomainError("a free algebra needs at least one x-variable");
  if (x_names.size() >= kZ) throw DomainError("too many variables");
  std::vector<std::string> all(x_names);
  all.push_back(z_name);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw DomainError("duplicate variable name");
  return std::make_shared<const Algebra>(Algebra{std::move(x_names), std::move(z_name), field});
}

AlgebraPtr make_algebra(std::size_t n, Field field) {
  std::vector<std::string> names;
  if (n == 1) {
    names = {"x"};
  } else if (n == 2) {
    names = {"x", "y"};
  } else if (n == 3) {
    names = {"x", "y", "t"};
  } else {
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  }
  return make_algebra(std::move(names), "z", field);
}

RingPtr z_ring(const Algebra& alg) { return make_ring({alg.z_name}, alg.field); }

RingPtr z12_ring(const Algebra& alg) { return make_ring({alg.z_name + "1", alg.z_name + "2"}, alg.field); }

std::size_t Word::x_degree() const {
  return static_cast<std::size_t>(std::count_if(letters_.begin(), letters_.end(), [](Letter l) { return l != kZ; }));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> l;
  l.reserve(a.size() + b.size());
  l.insert(l.end(), a.letters_.begin(), a.letters_.end());
  l.insert(l.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(l));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a.letters_ <=> b.letters_;
}

NCPoly NCPoly::constant(AlgebraPtr alg, const Scalar& c) { return monomial(std::move(alg), c, Word()); }

NCPoly NCPoly::constant(AlgebraPtr alg, long long c) {
  const Scalar s = alg->field.from_int(c);
  return constant(std::move(alg), s);
}

NCPoly NCPoly::generator(AlgebraPtr alg, Letter l) {
  if (l != kZ && l >= alg->n()) throw DomainError("unknown generator");
  const Scalar one = alg->field.one();
  return monomial(std::move(alg), one, Word({l}));
}

NCPoly NCPoly::monomial(AlgebraPtr alg, const Scalar& c, Word w) {
  NCPoly p(std::move(alg));
  p.add_term(c, w);
  return p;
}

Scalar NCPoly::coeff(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? field().zero() : it->second;
}

void NCPoly::add_term(const Scalar& c, const Word& w) {
  if (!(c.field() == alg_->field)) throw ContextError("coefficient from a different field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NCPoly::require_same_algebra(const NCPoly& o) const {
  if (alg_ != o.alg_ && !(*alg_ == *o.alg_)) throw ContextError("polynomials from different algebras");
}

NCPoly NCPoly::operator-() const {
  NCPoly r(*this);
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  require_same_algebra(o);
  for (const auto& [w, c] : o.terms_) add_term(c, w);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  require_same_algebra(o);
  for (const auto& [w, c] : o.terms_) add_term(-c, w);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  a.require_same_algebra(b);
  NCPoly r(a.alg_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(ca * cb, wa * wb);
  return r;
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b) { return a * b; }

NCPoly NCPoly::pow(unsigned e) const {
  NCPoly r = constant(alg_, 1);
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
  return (a.alg_ == b.alg_ || *a.alg_ == *b.alg_) && a.terms_ == b.terms_;
}

std::string word_to_string(const Word& w, const Algebra& alg) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += ' ';
    s += alg.name(w[i]);
    if (j - i > 1) s += '^' + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, coeff] : terms_) {
    Scalar c = coeff;
    const bool neg = c.is_negative();
    if (neg) c = -c;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      s += c.to_string();
    } else {
      if (!c.is_one()) s += c.to_string() + ' ';
      s += word_to_string(w, *alg_);
    }
  }
  return s;
}

}  // namespace kzaut
