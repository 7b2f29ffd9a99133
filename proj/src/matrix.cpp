#include "kzaut/matrix.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>

#include "kzaut/errors.hpp"

namespace kzaut {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t n) : ring_(std::move(ring)), n_(n), a_(n * n, CommPoly(ring_)) {}

PolyMatrix::PolyMatrix(RingPtr ring, std::vector<std::vector<CommPoly>> rows)
    : ring_(std::move(ring)), n_(rows.size()) {
  a_.reserve(n_ * n_);
  for (auto& row : rows) {
    if (row.size() != n_) throw DimensionError("matrix must be square");
    for (auto& e : row) {
      if (!(*e.ring() == *ring_)) throw ContextError("matrix entry from a different ring");
      a_.push_back(std::move(e));
    }
  }
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CommPoly::constant(ring, 1);
  return m;
}

bool PolyMatrix::is_identity() const { return *this == identity(ring_, n_); }

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_) throw DimensionError("matrix sizes differ");
  if (!(*a.ring_ == *b.ring_)) throw ContextError("matrices over different rings");
  PolyMatrix r(a.ring_, a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const CommPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
    }
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.n_ == b.n_ && *a.ring_ == *b.ring_ && a.a_ == b.a_;
}

PolyMatrix PolyMatrix::subst(std::span<const CommPoly> images) const {
  if (images.empty()) throw ContextError("substitution needs a target ring");
  PolyMatrix r(images.front().ring(), n_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = subst_z(a_[k], images);
  return r;
}

PolyMatrix PolyMatrix::embed(std::size_t n) const {
  if (n < n_) throw DimensionError("cannot embed into a smaller matrix");
  PolyMatrix r = identity(ring_, n);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(i, j) = (*this)(i, j);
  return r;
}

std::vector<std::string> PolyMatrix::row_strings(std::size_t i) const {
  std::vector<std::string> r;
  for (std::size_t j = 0; j < n_; ++j) r.push_back((*this)(i, j).to_string());
  return r;
}

namespace {

// Determinant of the submatrix on rows first_row.. and the given column set,
// memoised by column mask.
class MinorExpander {
 public:
  explicit MinorExpander(const PolyMatrix& m) : m_(m) {
    if (m.size() > 24) throw DimensionError("determinant only supported up to 24x24");
  }

  CommPoly det_of_columns(std::uint32_t mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (k == 0) return CommPoly::constant(m_.ring(), 1);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const std::size_t row = m_.size() - k;
    CommPoly acc(m_.ring());
    int sign = 1;
    for (std::size_t c = 0; c < m_.size(); ++c) {
      if (!(mask >> c & 1u)) continue;
      if (!m_(row, c).is_zero()) {
        CommPoly t = m_(row, c) * det_of_columns(mask & ~(1u << c));
        if (sign > 0)
          acc += t;
        else
          acc -= t;
      }
      sign = -sign;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

 private:
  const PolyMatrix& m_;
  std::unordered_map<std::uint32_t, CommPoly> memo_;
};

PolyMatrix minor_matrix(const PolyMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  PolyMatrix r(m.ring(), m.size() - 1);
  for (std::size_t i = 0, ri = 0; i < m.size(); ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, rj = 0; j < m.size(); ++j) {
      if (j == skip_col) continue;
      r(ri, rj++) = m(i, j);
    }
    ++ri;
  }
  return r;
}

}  // namespace

CommPoly det(const PolyMatrix& m) {
  if (m.size() == 0) return CommPoly::constant(m.ring(), 1);
  MinorExpander e(m);
  return e.det_of_columns((std::uint32_t{1} << m.size()) - 1);
}

PolyMatrix adjugate(const PolyMatrix& m) {
  const std::size_t n = m.size();
  PolyMatrix r(m.ring(), n);
  if (n == 1) {
    r(0, 0) = CommPoly::constant(m.ring(), 1);
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CommPoly d = det(minor_matrix(m, j, i));
      r(i, j) = (i + j) % 2 ? -d : d;
    }
  return r;
}

bool is_gl(const PolyMatrix& m) {
  const auto c = det(m).as_constant();
  return c && !c->is_zero();
}

PolyMatrix inverse(const PolyMatrix& m) {
  const auto c = det(m).as_constant();
  if (!c || c->is_zero()) throw NotInvertible("determinant " + det(m).to_string() + " is not a unit");
  PolyMatrix adj = adjugate(m);
  const Scalar inv = c->inverse();
  PolyMatrix r(m.ring(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = adj(i, j) * inv;
  return r;
}

}  // namespace kzaut
