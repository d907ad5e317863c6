#include "quivhom/matrix.hpp"

#include <string>

namespace quivhom {

FieldPrime::FieldPrime(uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31)) throw_input("prime out of range [2, 2^31): " + std::to_string(p));
  for (uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw_input("not a prime: " + std::to_string(p));
  }
}

uint32_t FieldPrime::inv(uint32_t a) const {
  if (a == 0) throw_contract("inverse of zero mod " + std::to_string(p_));
  // extended Euclid
  int64_t t = 0, new_t = 1;
  int64_t r = p_, new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<uint32_t>(t);
}

uint32_t FieldPrime::pow(uint32_t base, uint64_t e) const {
  uint64_t acc = 1, b = base % p_;
  while (e) {
    if (e & 1) acc = acc * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

MatrixModP::MatrixModP(size_t rows, size_t cols, FieldPrime p)
    : rows_(rows), cols_(cols), p_(p), e_(rows * cols, 0) {}

MatrixModP MatrixModP::identity(size_t n, FieldPrime p) {
  MatrixModP m(n, n, p);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixModP MatrixModP::from_rows(const std::vector<std::vector<int64_t>>& rows, FieldPrime p) {
  size_t nr = rows.size();
  size_t nc = nr == 0 ? 0 : rows[0].size();
  MatrixModP m(nr, nc, p);
  for (size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw_input("ragged matrix rows");
    for (size_t c = 0; c < nc; ++c) m.set(r, c, p.reduce(rows[r][c]));
  }
  return m;
}

MatrixModP MatrixModP::operator*(const MatrixModP& rhs) const {
  if (p_ != rhs.p_) throw_contract("matrix product: modulus mismatch");
  if (cols_ != rhs.rows_) throw_contract("matrix product: inner dimension mismatch");
  MatrixModP out(rows_, rhs.cols_, p_);
  const uint64_t p = p_.modulus();
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      uint64_t a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < rhs.cols_; ++j) {
        uint64_t v = out.at(i, j) + a * rhs.at(k, j) % p;
        out.set(i, j, static_cast<uint32_t>(v >= p ? v - p : v));
      }
    }
  }
  return out;
}

MatrixModP MatrixModP::operator+(const MatrixModP& rhs) const {
  if (p_ != rhs.p_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) throw_contract("matrix sum: shape mismatch");
  MatrixModP out(rows_, cols_, p_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = p_.add(e_[i], rhs.e_[i]);
  return out;
}

MatrixModP MatrixModP::operator-(const MatrixModP& rhs) const {
  if (p_ != rhs.p_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) throw_contract("matrix difference: shape mismatch");
  MatrixModP out(rows_, cols_, p_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = p_.sub(e_[i], rhs.e_[i]);
  return out;
}

MatrixModP MatrixModP::scaled(uint32_t s) const {
  MatrixModP out(rows_, cols_, p_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = p_.mul(e_[i], s);
  return out;
}

MatrixModP MatrixModP::transposed() const {
  MatrixModP out(cols_, rows_, p_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
  return out;
}

MatrixModP MatrixModP::pow(uint64_t e) const {
  if (rows_ != cols_) throw_contract("matrix power: not square");
  MatrixModP acc = identity(rows_, p_);
  MatrixModP b = *this;
  while (e) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

MatrixModP MatrixModP::hstack(const MatrixModP& a, const MatrixModP& b) {
  if (a.p_ != b.p_ || a.rows_ != b.rows_) throw_contract("hstack: shape mismatch");
  MatrixModP out(a.rows_, a.cols_ + b.cols_, a.p_);
  for (size_t r = 0; r < a.rows_; ++r) {
    for (size_t c = 0; c < a.cols_; ++c) out.set(r, c, a.at(r, c));
    for (size_t c = 0; c < b.cols_; ++c) out.set(r, a.cols_ + c, b.at(r, c));
  }
  return out;
}

MatrixModP MatrixModP::vstack(const MatrixModP& a, const MatrixModP& b) {
  if (a.p_ != b.p_ || a.cols_ != b.cols_) throw_contract("vstack: shape mismatch");
  MatrixModP out(a.rows_ + b.rows_, a.cols_, a.p_);
  for (size_t r = 0; r < a.rows_; ++r)
    for (size_t c = 0; c < a.cols_; ++c) out.set(r, c, a.at(r, c));
  for (size_t r = 0; r < b.rows_; ++r)
    for (size_t c = 0; c < a.cols_; ++c) out.set(a.rows_ + r, c, b.at(r, c));
  return out;
}

MatrixModP MatrixModP::columns(const std::vector<size_t>& idx) const {
  MatrixModP out(rows_, idx.size(), p_);
  for (size_t j = 0; j < idx.size(); ++j)
    for (size_t r = 0; r < rows_; ++r) out.set(r, j, at(r, idx[j]));
  return out;
}

MatrixModP MatrixModP::block(size_t r0, size_t c0, size_t nrows, size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) throw_contract("block out of range");
  MatrixModP out(nrows, ncols, p_);
  for (size_t r = 0; r < nrows; ++r)
    for (size_t c = 0; c < ncols; ++c) out.set(r, c, at(r0 + r, c0 + c));
  return out;
}

bool MatrixModP::is_zero() const {
  for (uint32_t v : e_)
    if (v) return false;
  return true;
}

bool MatrixModP::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

MatrixModP MatrixModP::vectorized() const {
  MatrixModP out(rows_ * cols_, 1, p_);
  for (size_t c = 0; c < cols_; ++c)
    for (size_t r = 0; r < rows_; ++r) out.set(c * rows_ + r, 0, at(r, c));
  return out;
}

RrefResult rref(const MatrixModP& m) {
  MatrixModP a = m;
  const FieldPrime& f = a.field();
  std::vector<size_t> pivots;
  size_t lead = 0;
  for (size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    size_t sel = lead;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != lead) {
      for (size_t c = 0; c < a.cols(); ++c) {
        uint32_t tmp = a.at(lead, c);
        a.set(lead, c, a.at(sel, c));
        a.set(sel, c, tmp);
      }
    }
    uint32_t piv_inv = f.inv(a.at(lead, col));
    for (size_t c = col; c < a.cols(); ++c) a.set(lead, c, f.mul(a.at(lead, c), piv_inv));
    for (size_t r = 0; r < a.rows(); ++r) {
      if (r == lead) continue;
      uint32_t factor = a.at(r, col);
      if (factor == 0) continue;
      for (size_t c = col; c < a.cols(); ++c)
        a.set(r, c, f.sub(a.at(r, c), f.mul(factor, a.at(lead, c))));
    }
    pivots.push_back(col);
    ++lead;
  }
  size_t rk = pivots.size();
  return RrefResult{std::move(a), std::move(pivots), rk};
}

size_t rank(const MatrixModP& m) { return rref(m).rank; }

MatrixModP kernel_basis(const MatrixModP& m) {
  RrefResult r = rref(m);
  std::vector<size_t> free_cols;
  {
    size_t pi = 0;
    for (size_t c = 0; c < m.cols(); ++c) {
      if (pi < r.pivots.size() && r.pivots[pi] == c) {
        ++pi;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  MatrixModP k(m.cols(), free_cols.size(), m.field());
  for (size_t j = 0; j < free_cols.size(); ++j) {
    size_t fc = free_cols[j];
    k.set(fc, j, 1);
    for (size_t pr = 0; pr < r.pivots.size(); ++pr)
      k.set(r.pivots[pr], j, m.field().neg(r.reduced.at(pr, fc)));
  }
  return k;
}

std::optional<MatrixModP> solve(const MatrixModP& m, const MatrixModP& b) {
  if (m.rows() != b.rows()) throw_contract("solve: row count mismatch");
  if (m.field() != b.field()) throw_contract("solve: modulus mismatch");
  RrefResult r = rref(MatrixModP::hstack(m, b));
  // a pivot inside the augmented part means the system is inconsistent
  for (size_t p : r.pivots)
    if (p >= m.cols()) return std::nullopt;
  MatrixModP x(m.cols(), b.cols(), m.field());
  for (size_t pr = 0; pr < r.pivots.size(); ++pr)
    for (size_t c = 0; c < b.cols(); ++c) x.set(r.pivots[pr], c, r.reduced.at(pr, m.cols() + c));
  return x;
}

MatrixModP column_space_canonical(const MatrixModP& span_cols) {
  RrefResult r = rref(span_cols.transposed());
  MatrixModP out(span_cols.rows(), r.rank, span_cols.field());
  for (size_t i = 0; i < r.rank; ++i)
    for (size_t c = 0; c < span_cols.rows(); ++c) out.set(c, i, r.reduced.at(i, c));
  return out;
}

bool span_contains(const MatrixModP& span_cols, const MatrixModP& vecs) {
  return solve(span_cols, vecs).has_value();
}

QuotientSpace quotient_by_span(size_t ambient_dim, const MatrixModP& span_cols, FieldPrime p) {
  if (span_cols.rows() != ambient_dim) throw_contract("quotient_by_span: ambient mismatch");
  RrefResult r = rref(span_cols.transposed());
  std::vector<size_t> non_pivots;
  {
    size_t pi = 0;
    for (size_t c = 0; c < ambient_dim; ++c) {
      if (pi < r.pivots.size() && r.pivots[pi] == c) {
        ++pi;
      } else {
        non_pivots.push_back(c);
      }
    }
  }
  QuotientSpace q;
  q.ambient = ambient_dim;
  q.dim = non_pivots.size();
  q.pivots = r.pivots;
  q.projection = MatrixModP(q.dim, ambient_dim, p);
  q.section = MatrixModP(ambient_dim, q.dim, p);
  // projection column k = non-pivot coordinates of e_k reduced by the span;
  // reducing a unit vector subtracts (e_k)_pivot times the matching rref row.
  for (size_t k = 0; k < ambient_dim; ++k) {
    std::vector<uint32_t> v(ambient_dim, 0);
    v[k] = 1;
    for (size_t pr = 0; pr < r.pivots.size(); ++pr) {
      uint32_t f = v[r.pivots[pr]];
      if (f == 0) continue;
      for (size_t c = 0; c < ambient_dim; ++c) v[c] = p.sub(v[c], p.mul(f, r.reduced.at(pr, c)));
    }
    for (size_t j = 0; j < q.dim; ++j) q.projection.set(j, k, v[non_pivots[j]]);
  }
  for (size_t j = 0; j < q.dim; ++j) q.section.set(non_pivots[j], j, 1);
  return q;
}

}  // namespace quivhom
