#pragma once

// Exact dense linear algebra over F_p. Everything downstream reduces to rref,
// kernel bases and solving; the canonical conventions fixed here (free
// variables set to one one at a time, rref-canonical subspace bases) make all
// coordinates in the library deterministic.

#include <cstdint>
#include <optional>
#include <vector>

#include "quivhom/error.hpp"

namespace quivhom {

class FieldPrime {
 public:
  // Checked by trial division; admits 2 <= p < 2^31.
  explicit FieldPrime(uint32_t p);

  uint32_t modulus() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
  }
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t base, uint64_t e) const;

  // Reduces an arbitrary signed integer into [0, p).
  uint32_t reduce(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

  bool operator==(const FieldPrime&) const = default;

 private:
  uint32_t p_;
};

class MatrixModP {
 public:
  MatrixModP(size_t rows, size_t cols, FieldPrime p);
  static MatrixModP identity(size_t n, FieldPrime p);
  static MatrixModP from_rows(const std::vector<std::vector<int64_t>>& rows, FieldPrime p);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldPrime& field() const { return p_; }

  uint32_t at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
  void set(size_t r, size_t c, uint32_t v) { e_[r * cols_ + c] = v; }

  MatrixModP operator*(const MatrixModP& rhs) const;
  MatrixModP operator+(const MatrixModP& rhs) const;
  MatrixModP operator-(const MatrixModP& rhs) const;
  bool operator==(const MatrixModP&) const = default;

  MatrixModP scaled(uint32_t s) const;
  MatrixModP transposed() const;
  MatrixModP pow(uint64_t e) const;  // square matrices only

  static MatrixModP hstack(const MatrixModP& a, const MatrixModP& b);
  static MatrixModP vstack(const MatrixModP& a, const MatrixModP& b);
  MatrixModP columns(const std::vector<size_t>& idx) const;
  MatrixModP block(size_t r0, size_t c0, size_t nrows, size_t ncols) const;

  bool is_zero() const;
  bool is_identity() const;

  // Flattens column-major into a single column vector (used to pack morphism
  // blocks into coordinate vectors).
  MatrixModP vectorized() const;

 private:
  size_t rows_, cols_;
  FieldPrime p_;
  std::vector<uint32_t> e_;
};

struct RrefResult {
  MatrixModP reduced;
  std::vector<size_t> pivots;
  size_t rank;
};

RrefResult rref(const MatrixModP& m);
size_t rank(const MatrixModP& m);

// Columns form the canonical basis of the null space: for each free column,
// that variable is set to 1 and the pivot variables are back-solved.
MatrixModP kernel_basis(const MatrixModP& m);

// Solves m*x = b (b may have several columns). Returns the solution with
// zeros in all free-variable positions, or nullopt when inconsistent.
std::optional<MatrixModP> solve(const MatrixModP& m, const MatrixModP& b);

// Canonical basis of the column space: rref rows of the transpose, written
// back as columns. Two spans are equal as subspaces iff their canonical bases
// are equal matrices.
MatrixModP column_space_canonical(const MatrixModP& span_cols);

// True iff every column of vecs lies in the span of basis_cols.
bool span_contains(const MatrixModP& span_cols, const MatrixModP& vecs);

// Coordinates of the quotient (ambient space)/(span of the given columns):
// the non-pivot coordinates of the reduced span. projection * section = id.
struct QuotientSpace {
  size_t ambient = 0;
  size_t dim = 0;
  MatrixModP projection;  // dim x ambient
  MatrixModP section;     // ambient x dim, canonical coset representatives
  std::vector<size_t> pivots;

  QuotientSpace() : projection(0, 0, FieldPrime(2)), section(0, 0, FieldPrime(2)) {}
};

QuotientSpace quotient_by_span(size_t ambient_dim, const MatrixModP& span_cols, FieldPrime p);

}  // namespace quivhom
