#include "prodbasis/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "prodbasis/errors.hpp"

namespace prodbasis {

Vec zero_vec(const FieldSpec& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t index) {
  if (index >= n) throw std::out_of_range("unit vector index out of range");
  Vec v = zero_vec(f, n);
  v[index] = Scalar::one(f);
  return v;
}

Vec vec_from_ints(const FieldSpec& f, std::initializer_list<std::int64_t> values) {
  Vec v;
  v.reserve(values.size());
  for (std::int64_t x : values) v.emplace_back(f, x);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const Scalar& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Scalar dot(std::span<const Scalar> v, std::span<const Scalar> u) {
  if (v.size() != u.size()) throw std::invalid_argument("dot: length mismatch");
  if (v.empty()) throw std::invalid_argument("dot: empty vectors");
  Scalar acc = Scalar::zero(v.front().field());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero() || u[i].is_zero()) {
      if (v[i].field() != u[i].field()) throw FieldMismatch("dot: field mismatch");
      continue;
    }
    acc += v[i] * u[i];
  }
  return acc;
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& f,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  Matrix m(f, rows.size(), cols);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix literal");
    std::size_t j = 0;
    for (std::int64_t x : row) m(i, j++) = Scalar(f, x);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, std::size_t cols, std::span<const Vec> rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j].field() != f) throw FieldMismatch("matrix entry field mismatch");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& f, std::size_t rows, std::span<const Vec> cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
      if (cols[j][i].field() != f) throw FieldMismatch("matrix entry field mismatch");
      m(i, j) = cols[j][i];
    }
  }
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Vec Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec out = zero_vec(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

bool Matrix::is_zero() const { return prodbasis::is_zero(entries_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw FieldMismatch("matrix product field mismatch");
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void scale_row(Matrix& m, std::size_t r, const Scalar& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!m(r, j).is_zero()) m(r, j) *= factor;
  }
}

// row(target) -= factor * row(source)
void add_row_multiple(Matrix& m, std::size_t target, std::size_t source, const Scalar& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!m(source, j).is_zero()) m(target, j) -= factor * m(source, j);
  }
}

}  // namespace

RrefResult rref(const Matrix& m) {
  const FieldSpec& f = m.field();
  Matrix r = m;
  Matrix t = Matrix::identity(f, m.rows());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && r(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    swap_rows(r, row, p);
    swap_rows(t, row, p);
    const Scalar inv = r(row, col).inv();
    scale_row(r, row, inv);
    scale_row(t, row, inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const Scalar factor = r(i, col);
      add_row_multiple(r, i, row, factor);
      add_row_multiple(t, i, row, factor);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots), std::move(t)};
}

std::size_t rank(const Matrix& m) {
  EchelonBasis basis(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) basis.insert(m.row(i));
  return basis.rank();
}

Scalar det(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det of a non-square matrix");
  const FieldSpec& f = m.field();
  Matrix a = m;
  Scalar result = Scalar::one(f);
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) return Scalar::zero(f);
    if (p != col) {
      swap_rows(a, col, p);
      result = -result;
    }
    const Scalar pivot = a(col, col);
    result *= pivot;
    const Scalar inv = pivot.inv();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      add_row_multiple(a, i, col, a(i, col) * inv);
    }
  }
  return result;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  RrefResult r = rref(m);
  if (r.pivots.size() != m.rows()) throw SingularMatrix();
  return std::move(r.transform);
}

std::vector<Vec> kernel(const Matrix& m) {
  const FieldSpec& f = m.field();
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x = zero_vec(f, m.cols());
    x[free] = Scalar::one(f);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      x[r.pivots[i]] = -r.reduced(i, free);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Matrix rank_normal_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols, std::size_t r) {
  if (r > rows || r > cols) throw std::out_of_range("rank normal form rank exceeds dimensions");
  Matrix b(f, rows, cols);
  for (std::size_t i = 0; i < r; ++i) b(i, i) = Scalar::one(f);
  return b;
}

RankNormalForm rank_normal_form(const Matrix& a) {
  // Row reduction gives T*a = R. The nonzero rows of R are independent, so reducing R^T
  // yields T2*R^T = B_r^T, i.e. T*a*T2^T = B_r.
  const RrefResult rows = rref(a);
  const RrefResult cols = rref(rows.reduced.transpose());
  const std::size_t r = rows.pivots.size();
  return {inverse(rows.transform).transpose(), inverse(cols.transform.transpose()), r};
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("kronecker field mismatch");
  Matrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
      }
    }
  }
  return k;
}

EchelonBasis::EchelonBasis(FieldSpec field, std::size_t dim) : field_(field), dim_(dim) {}

Vec EchelonBasis::reduce(std::span<const Scalar> v) const {
  if (v.size() != dim_) throw std::invalid_argument("echelon basis: length mismatch");
  Vec x(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = x[pivots_[i]];
    if (c.field() != field_) throw FieldMismatch("echelon basis: field mismatch");
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!rows_[i][j].is_zero()) x[j] -= c * rows_[i][j];
    }
  }
  return x;
}

bool EchelonBasis::contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(std::span<const Scalar> v) {
  Vec x = reduce(v);
  std::size_t lead = 0;
  while (lead < dim_ && x[lead].is_zero()) ++lead;
  if (lead == dim_) return false;
  if (x[lead].field() != field_) throw FieldMismatch("echelon basis: field mismatch");
  const Scalar inv = x[lead].inv();
  for (Scalar& s : x) {
    if (!s.is_zero()) s *= inv;
  }
  // Keep stored rows reduced at the new pivot so reduce() stays a single pass.
  for (Vec& row : rows_) {
    const Scalar c = row[lead];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!x[j].is_zero()) row[j] -= c * x[j];
    }
  }
  rows_.push_back(std::move(x));
  pivots_.push_back(lead);
  return true;
}

}  // namespace prodbasis
