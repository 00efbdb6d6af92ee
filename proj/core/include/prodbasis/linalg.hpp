#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "prodbasis/fields.hpp"

namespace prodbasis {

/// Coordinate vector over a single field.
using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldSpec& f, std::size_t n);
/// Unit vector e_index of length n (0-based index).
Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t index);
Vec vec_from_ints(const FieldSpec& f, std::initializer_list<std::int64_t> values);
bool is_zero(std::span<const Scalar> v);
/// Sum of v[i] * u[i].
Scalar dot(std::span<const Scalar> v, std::span<const Scalar> u);

/// Dense row-major matrix with exact entries.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_ints(const FieldSpec& f, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_rows(const FieldSpec& f, std::size_t cols, std::span<const Vec> rows);
  static Matrix from_columns(const FieldSpec& f, std::size_t rows, std::span<const Vec> cols);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::span<const Scalar> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  Vec column(std::size_t j) const;
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  Matrix transpose() const;
  Vec apply(std::span<const Scalar> v) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  /// Invertible transform with reduced == transform * input.
  Matrix transform;
};

/// Gauss-Jordan elimination; pivots are the first nonzero entry in column order.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Scalar det(const Matrix& m);
/// Throws SingularMatrix when det(m) == 0.
Matrix inverse(const Matrix& m);
/// Basis of the right null space; one vector per free column, cols - rank in total.
std::vector<Vec> kernel(const Matrix& m);

/// The rows x cols matrix with ones at (0,0), ..., (r-1,r-1).
Matrix rank_normal_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols, std::size_t r);

struct RankNormalForm {
  Matrix p;  ///< rows x rows, invertible
  Matrix q;  ///< cols x cols, invertible
  std::size_t rank;
};

/// Factor a = p^T * B_r * q with p, q invertible and r = rank(a).
RankNormalForm rank_normal_form(const Matrix& a);

Matrix kronecker(const Matrix& a, const Matrix& b);

/// Incrementally maintained row-echelon basis of a span; cheap membership tests.
class EchelonBasis {
 public:
  EchelonBasis(FieldSpec field, std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool contains(std::span<const Scalar> v) const;
  /// Adds v to the span. Returns false (and leaves the span unchanged) if v was already in it.
  bool insert(std::span<const Scalar> v);

 private:
  Vec reduce(std::span<const Scalar> v) const;

  FieldSpec field_;
  std::size_t dim_;
  // Each stored row has a leading 1 at pivots_[i] and zeros at every other stored pivot.
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace prodbasis
