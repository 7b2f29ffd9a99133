#include "kzaut/transcript.hpp"

#include "kzaut/errors.hpp"

namespace kzaut {

namespace {

void check_fits(const Factor& f, std::size_t dim) {
  if (const auto* e = std::get_if<Elem>(&f)) {
    if (e->i >= dim || e->j >= dim) throw DimensionError("elementary factor index out of range");
    if (e->i == e->j) throw DomainError("elementary factor needs i != j");
  } else if (const auto* d = std::get_if<Diag>(&f)) {
    if (d->units.size() != dim) throw DimensionError("diagonal factor has the wrong size");
  } else {
    const auto& s = std::get<Swap>(f);
    if (s.i >= dim || s.j >= dim) throw DimensionError("swap factor index out of range");
  }
}

}  // namespace

PolyMatrix factor_matrix(const Factor& f, const RingPtr& ring, std::size_t dim) {
  check_fits(f, dim);
  PolyMatrix m = PolyMatrix::identity(ring, dim);
  if (const auto* e = std::get_if<Elem>(&f)) {
    m(e->i, e->j) = e->p;
  } else if (const auto* d = std::get_if<Diag>(&f)) {
    for (std::size_t k = 0; k < dim; ++k) {
      if (d->units[k].is_zero()) throw DomainError("diagonal factor with a zero entry");
      m(k, k) = CommPoly::constant(ring, d->units[k]);
    }
  } else {
    const auto& s = std::get<Swap>(f);
    if (s.i != s.j) {
      m(s.i, s.i) = m(s.j, s.j) = CommPoly(ring);
      m(s.i, s.j) = m(s.j, s.i) = CommPoly::constant(ring, 1);
    }
  }
  return m;
}

PolyMatrix transcript_product(const Transcript& t) {
  PolyMatrix m = PolyMatrix::identity(t.ring, t.dim);
  for (const auto& f : t.factors) m = m * factor_matrix(f, t.ring, t.dim);
  return m;
}

bool verify_transcript(const Transcript& t, const PolyMatrix& m) {
  if (t.dim != m.size()) throw DimensionError("transcript and matrix sizes differ");
  for (const auto& f : t.factors) check_fits(f, t.dim);
  return transcript_product(t) == m;
}

Transcript expand_swaps(const Transcript& t) {
  Transcript r{t.ring, t.dim, {}};
  const Field& k = t.ring->field;
  for (const auto& f : t.factors) {
    const auto* s = std::get_if<Swap>(&f);
    if (s == nullptr) {
      r.factors.push_back(f);
      continue;
    }
    if (s->i == s->j) continue;
    const CommPoly one = CommPoly::constant(t.ring, 1);
    r.factors.push_back(Elem{s->i, s->j, one});
    r.factors.push_back(Elem{s->j, s->i, -one});
    r.factors.push_back(Elem{s->i, s->j, one});
    std::vector<Scalar> units(t.dim, k.one());
    units[s->i] = -k.one();
    r.factors.push_back(Diag{std::move(units)});
  }
  return r;
}

Transcript embed(const Transcript& t, std::size_t dim) {
  if (dim < t.dim) throw DimensionError("cannot embed into a smaller size");
  Transcript r{t.ring, dim, {}};
  for (const auto& f : t.factors) {
    if (const auto* d = std::get_if<Diag>(&f)) {
      Diag big{d->units};
      big.units.resize(dim, t.ring->field.one());
      r.factors.push_back(std::move(big));
    } else {
      r.factors.push_back(f);
    }
  }
  return r;
}

}  // namespace kzaut
