#include "hopf/matrix.hpp"

#include <stdexcept>
#include <string>

namespace hopf {

Matrix::Matrix(int rows, int cols, const FieldSpec& f)
    : rows_(rows), cols_(cols), field_(f) {
  if (rows < 0 || cols < 0) throw std::logic_error("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(f));
}

Matrix Matrix::from_ints(int rows, int cols, std::initializer_list<long> vals,
                         const FieldSpec& f) {
  if (static_cast<int>(vals.size()) != rows * cols)
    throw std::logic_error("from_ints: wrong number of entries");
  Matrix m(rows, cols, f);
  int k = 0;
  for (long v : vals) {
    m.data_[k] = Scalar::from_int(v, f);
    ++k;
  }
  return m;
}

Matrix Matrix::identity(int n, const FieldSpec& f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Scalar& Matrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::logic_error("matrix index (" + std::to_string(r) + "," +
                           std::to_string(c) + ") out of range for " +
                           std::to_string(rows_) + "x" + std::to_string(cols_));
  return data_[static_cast<std::size_t>(r) * cols_ + c];
}

const Scalar& Matrix::at(int r, int c) const {
  return const_cast<Matrix*>(this)->at(r, c);
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (data_[k] != o.data_[k]) return false;
  return true;
}

namespace {
void check_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.field() != b.field())
    throw std::logic_error(std::string("matrix ") + op + ": shape or field mismatch");
}
}  // namespace

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_shape(*this, o, "+");
  Matrix r(rows_, cols_, field_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_shape(*this, o, "-");
  Matrix r(rows_, cols_, field_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || field_ != o.field_)
    throw std::logic_error("matrix *: inner dimension or field mismatch (" +
                           std::to_string(rows_) + "x" + std::to_string(cols_) +
                           " times " + std::to_string(o.rows_) + "x" +
                           std::to_string(o.cols_) + ")");
  Matrix r(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + aik * bkj;
      }
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(rows_, cols_, field_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::col(int j) const {
  Matrix r(rows_, 1, field_);
  for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (rows_ != o.rows_ || field_ != o.field_)
    throw std::logic_error("hcat: row count or field mismatch");
  Matrix r(rows_, cols_ + o.cols_, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Matrix Matrix::vcat(const Matrix& o) const {
  if (cols_ != o.cols_ || field_ != o.field_)
    throw std::logic_error("vcat: column count or field mismatch");
  Matrix r(rows_ + o.rows_, cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw std::logic_error("kronecker: field mismatch");
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          const Scalar& bkl = b.at(k, l);
          if (bkl.is_zero()) continue;
          r.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return r;
}

RrefResult rref(const Matrix& a) {
  RrefResult res{a, {}};
  Matrix& m = res.mat;
  int pivot_row = 0;
  for (int c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    int sel = -1;
    for (int r = pivot_row; r < m.rows(); ++r)
      if (!m.at(r, c).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
    Scalar inv = m.at(pivot_row, c).inverse();
    for (int j = c; j < m.cols(); ++j) m.at(pivot_row, j) = m.at(pivot_row, j) * inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == pivot_row) continue;
      Scalar f = m.at(r, c);
      if (f.is_zero()) continue;
      for (int j = c; j < m.cols(); ++j)
        m.at(r, j) = m.at(r, j) - f * m.at(pivot_row, j);
    }
    res.pivot_cols.push_back(c);
    ++pivot_row;
  }
  return res;
}

int rank(const Matrix& a) { return static_cast<int>(rref(a).pivot_cols.size()); }

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.field() != b.field())
    throw std::logic_error("solve_linear: row count or field mismatch");
  RrefResult r = rref(a.hcat(b));
  // Inconsistent iff some pivot lands in the appended block.
  for (int pc : r.pivot_cols)
    if (pc >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols(), a.field());
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      x.at(r.pivot_cols[i], j) = r.mat.at(static_cast<int>(i), a.cols() + j);
  return x;
}

Matrix nullspace(const Matrix& a) {
  RrefResult r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int pc : r.pivot_cols) is_pivot[pc] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(a.cols(), static_cast<int>(free_cols.size()), a.field());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(fc, static_cast<int>(k)) = Scalar::one(a.field());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      basis.at(r.pivot_cols[i], static_cast<int>(k)) = -r.mat.at(static_cast<int>(i), fc);
  }
  return basis;
}

int flat_index(const std::vector<int>& idx, const std::vector<int>& dims) {
  if (idx.size() != dims.size()) throw std::logic_error("flat_index: arity mismatch");
  int f = 0;
  for (std::size_t t = 0; t < dims.size(); ++t) {
    if (idx[t] < 0 || idx[t] >= dims[t]) throw std::logic_error("flat_index: out of range");
    f = f * dims[t] + idx[t];
  }
  return f;
}

std::vector<int> unflat_index(int flat, const std::vector<int>& dims) {
  std::vector<int> idx(dims.size(), 0);
  for (std::size_t t = dims.size(); t-- > 0;) {
    idx[t] = flat % dims[t];
    flat /= dims[t];
  }
  if (flat != 0) throw std::logic_error("unflat_index: out of range");
  return idx;
}

}  // namespace hopf
