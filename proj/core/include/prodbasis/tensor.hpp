#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prodbasis/fields.hpp"
#include "prodbasis/linalg.hpp"

namespace prodbasis {

/// Local dimensions (d_1, ..., d_n) of a tensor product space, each d_j >= 2.
class TensorShape {
 public:
  explicit TensorShape(std::vector<std::size_t> dims);
  /// Parses "d1xd2x...xdn".
  static TensorShape parse(std::string_view text);

  std::size_t parties() const noexcept { return dims_.size(); }
  std::size_t dim(std::size_t party) const { return dims_.at(party); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t total() const noexcept { return total_; }

  /// Row-major flat index of a 0-based multi-index.
  std::size_t flat_index(std::span<const std::size_t> multi) const;
  std::vector<std::size_t> multi_index(std::size_t flat) const;
  /// Parties [first, last) as their own shape.
  TensorShape slice(std::size_t first, std::size_t last) const;
  /// Product of the dimensions of parties [first, last).
  std::size_t span_size(std::size_t first, std::size_t last) const;

  std::string to_string() const;
  friend bool operator==(const TensorShape&, const TensorShape&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_;
};

/// Dense coordinates of a tensor, multi-index (i_1, ..., i_n) stored row-major.
class TensorVector {
 public:
  TensorVector(TensorShape shape, FieldSpec field, Vec coords);
  static TensorVector zero(const TensorShape& shape, const FieldSpec& f);
  /// e_{i_1} (x) ... (x) e_{i_n} with 0-based indices.
  static TensorVector basis(const TensorShape& shape, const FieldSpec& f,
                            std::span<const std::size_t> multi);

  const TensorShape& shape() const noexcept { return shape_; }
  const FieldSpec& field() const noexcept { return field_; }
  const Vec& coords() const noexcept { return coords_; }
  const Scalar& operator[](std::size_t flat) const { return coords_[flat]; }
  bool is_zero() const { return prodbasis::is_zero(coords_); }

  TensorVector& operator+=(const TensorVector& other);
  TensorVector& operator-=(const TensorVector& other);
  TensorVector scaled(const Scalar& s) const;
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
  friend bool operator==(const TensorVector&, const TensorVector&) = default;

 private:
  void require_compatible(const TensorVector& other) const;

  TensorShape shape_;
  FieldSpec field_;
  Vec coords_;
};

/// A vector u_1 (x) ... (x) u_n together with its Kronecker embedding.
struct ProductVector {
  std::vector<Vec> factors;
  TensorVector embedded;
};

/// Unit vector e_index in F^{d_party} (0-based index).
Vec standard_basis_vector(const TensorShape& shape, const FieldSpec& f, std::size_t party,
                          std::size_t index);

/// Kronecker product of per-party factors; the shape is read off the factor lengths.
ProductVector kron(std::vector<Vec> factors);

/// Reshape across the split after party k (1 <= k < n):
/// rows index parties [0, k), columns index parties [k, n).
Matrix matricize(const TensorVector& v, std::size_t k);
/// Inverse of matricize for the given shape.
TensorVector vectorize(const Matrix& m, const TensorShape& shape);

/// <v, u> = sum_i v(i) u(i). Symmetric, bilinear, possibly isotropic over GF(p).
Scalar bilinear_form(const TensorVector& v, const TensorVector& u);

/// Rank of the k-split matricization.
std::size_t schmidt_rank(const TensorVector& v, std::size_t k);

/// Reorder parties: party j of the result is party perm[j] of v.
TensorVector permute_parties(const TensorVector& v, std::span<const std::size_t> perm);

/// A subspace of the tensor space, held both as a span of generators and as the
/// common zero set of cogenerators under the bilinear form.
class Subspace {
 public:
  /// Generators must be linearly independent.
  static Subspace from_generators(TensorShape shape, FieldSpec field,
                                  std::vector<TensorVector> generators);
  /// L = { u : <w_i, u> = 0 for every cogenerator w_i }. Cogenerators must be independent.
  static Subspace from_cogenerators(TensorShape shape, FieldSpec field,
                                    std::vector<TensorVector> cogenerators);
  /// Both representations supplied; throws std::invalid_argument if they disagree.
  static Subspace from_both(TensorShape shape, FieldSpec field, std::vector<TensorVector> generators,
                            std::vector<TensorVector> cogenerators);
  static Subspace full(const TensorShape& shape, const FieldSpec& f);

  const TensorShape& shape() const noexcept { return shape_; }
  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return generators_.size(); }
  std::size_t codim() const noexcept { return cogenerators_.size(); }
  const std::vector<TensorVector>& generators() const noexcept { return generators_; }
  const std::vector<TensorVector>& cogenerators() const noexcept { return cogenerators_; }

  bool contains(const TensorVector& v) const;
  /// Complement under the bilinear form: generators and cogenerators swap roles.
  Subspace orthogonal_complement() const;
  /// Same set of vectors.
  bool equals(const Subspace& other) const;

 private:
  Subspace(TensorShape shape, FieldSpec field, std::vector<TensorVector> gens,
           std::vector<TensorVector> cogens);

  TensorShape shape_;
  FieldSpec field_;
  std::vector<TensorVector> generators_;
  std::vector<TensorVector> cogenerators_;
};

/// Subspace membership (same as s.contains(v)).
bool membership(const Subspace& s, const TensorVector& v);
Subspace orthogonal_complement(const Subspace& s);

/// Kernel of the pairing matrix whose rows are the given vectors.
std::vector<TensorVector> annihilator(const TensorShape& shape, const FieldSpec& f,
                                      std::span<const TensorVector> vectors);

}  // namespace prodbasis
