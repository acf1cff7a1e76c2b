#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "hopf/field.hpp"

namespace hopf {

// Dense exact matrix over a fixed ground field.  Row-major storage.
// Linear maps f: V -> W are stored as (dim W) x (dim V) matrices whose
// column j is f(e_j); composition is matrix product.
class Matrix {
 public:
  Matrix() = default;  // 0 x 0 over Q
  Matrix(int rows, int cols, const FieldSpec& f);
  // Row-major integer literals, e.g. Matrix::from_ints(2,2,{1,0,0,1},F).
  static Matrix from_ints(int rows, int cols, std::initializer_list<long> vals,
                          const FieldSpec& f);
  static Matrix identity(int n, const FieldSpec& f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(int r, int c);
  const Scalar& at(int r, int c) const;
  Scalar& operator()(int r, int c) { return at(r, c); }
  const Scalar& operator()(int r, int c) const { return at(r, c); }

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;  // composition of linear maps
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  Matrix col(int j) const;                  // single-column slice
  Matrix hcat(const Matrix& o) const;       // [*this | o]
  Matrix vcat(const Matrix& o) const;       // [*this ; o]

 private:
  int rows_ = 0, cols_ = 0;
  FieldSpec field_ = FieldSpec::rationals();
  std::vector<Scalar> data_;
};

// Kronecker product: (A (x) B)((i,k),(j,l)) = A(i,j) * B(k,l) with row index
// i*B.rows()+k and column index j*B.cols()+l, matching the convention that
// e_i (x) e_j of V (x) W flattens to index i*dim(W)+j (leftmost factor
// varies slowest).
Matrix kronecker(const Matrix& a, const Matrix& b);

// Reduced row echelon form.  Deterministic: pivots are chosen scanning
// columns left to right and, within a column, the first row (top to bottom)
// with a nonzero entry.  RREF is unique, so the result is reproducible
// across platforms.
struct RrefResult {
  Matrix mat;
  std::vector<int> pivot_cols;  // increasing; size == rank
};
RrefResult rref(const Matrix& a);

int rank(const Matrix& a);

// One solution of A x = b (b may have several columns; solved jointly).
// Free variables are set to zero, making the output deterministic.
// Returns nullopt when the system is inconsistent.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

// Basis of the right nullspace {x : A x = 0} as the columns of the returned
// (A.cols() x k) matrix.  Canonical: read off the RREF, one vector per free
// column in increasing column order, with the free coordinate set to 1.
Matrix nullspace(const Matrix& a);

// Index helpers for flattened tensors: index of e_{i0} (x) ... (x) e_{ik}
// with dims[t] the dimension of factor t.
int flat_index(const std::vector<int>& idx, const std::vector<int>& dims);
std::vector<int> unflat_index(int flat, const std::vector<int>& dims);

}  // namespace hopf
