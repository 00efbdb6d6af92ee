#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "prodbasis/fields.hpp"
#include "prodbasis/tensor.hpp"

namespace prodbasis {

/// Linearly independent product vectors, in construction order.
struct ProductTuple {
  std::vector<ProductVector> vectors;
  std::size_t claimed_rank = 0;

  std::vector<TensorVector> embedded() const;
};

/// m tuples of (total - r) independent vectors, each to be completed to a basis by the
/// same r product vectors.
class CompletionRequest {
 public:
  /// Validates tuple sizes and independence; throws std::invalid_argument otherwise.
  CompletionRequest(TensorShape shape, FieldSpec field, std::vector<std::vector<TensorVector>> tuples,
                    std::size_t r, std::uint64_t seed = 0, std::uint64_t max_trials = 0);

  const TensorShape& shape() const noexcept { return shape_; }
  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<std::vector<TensorVector>>& tuples() const noexcept { return tuples_; }
  std::size_t r() const noexcept { return r_; }
  std::size_t m() const noexcept { return tuples_.size(); }
  std::uint64_t seed() const noexcept { return seed_; }
  /// Explicit budget, or 64*m*r*n when constructed with 0.
  std::uint64_t max_trials() const noexcept { return max_trials_; }
  /// True when m <= q - 1 (always for Q): a product completion is then guaranteed to exist.
  bool guaranteed() const noexcept;

 private:
  TensorShape shape_;
  FieldSpec field_;
  std::vector<std::vector<TensorVector>> tuples_;
  std::size_t r_;
  std::uint64_t seed_;
  std::uint64_t max_trials_;
};

struct ConstructOptions {
  std::uint64_t seed = 0;
  /// Run outside the guaranteed field-size regime (best effort).
  bool force = false;
  /// Per completion step; 0 selects 64*m*r*n.
  std::uint64_t max_trials = 0;
  /// Cap on the exhaustive fallback over a finite field.
  std::uint64_t enumeration_budget = 10'000'000;
};

std::uint64_t default_max_trials(std::size_t m, std::size_t r, std::size_t parties);
/// Sampling range [0, bound] for rational candidate entries: 2*m*r*n*total.
std::uint64_t default_rational_bound(std::size_t m, std::size_t r, std::size_t parties,
                                     std::size_t total);

/// w_r = sum_{i<r} e_i (x) e_i in a bipartite shape; its matricization is B_r.
TensorVector canonical_covector(const TensorShape& shape, const FieldSpec& f, std::size_t r);

/// Product basis of { u : <w, u> = 0 } for nonzero w in a bipartite space, valid over any field.
ProductTuple bipartite_codim1_basis(const TensorVector& w);

/// r product vectors v_1..v_r such that every tuple extended by them is a basis.
/// Randomized with the request's seed; over a finite field an exhaustive scan follows an
/// exhausted trial budget. Throws CompletionNotFound when no completion is found.
std::vector<ProductVector> complete_to_bases(const CompletionRequest& req,
                                             std::uint64_t enumeration_budget = 10'000'000);

/// Whether the field is large enough for product_tuple's existence argument:
/// always over Q; over GF(q) with parties sorted ascending, q > d_{n-2} for r = 1 and
/// q > d_{n-1} for r >= 2.
bool product_tuple_guaranteed(const TensorShape& shape, const FieldSpec& f, std::size_t r);

/// (total - r^n) independent product vectors inside the codimension-r subspace L.
/// Throws std::out_of_range for r outside [1, min d_j], FieldTooSmall outside the
/// guaranteed regime unless opts.force, and CompletionNotFound if a completion fails.
ProductTuple product_tuple(const Subspace& L, const ConstructOptions& opts = {});

/// Product basis of a codimension-1 subspace.
ProductTuple product_basis_codim1(const Subspace& L, const ConstructOptions& opts = {});

/// A (total - 2)-dimensional subspace without a product basis (n >= 2).
Subspace witness_no_product_basis(const TensorShape& shape, const FieldSpec& f);

}  // namespace prodbasis
