#include "prodbasis/construct.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>

#include "prodbasis/errors.hpp"
#include "prodbasis/linalg.hpp"
#include "prodbasis/verify.hpp"

namespace prodbasis {

std::vector<TensorVector> ProductTuple::embedded() const {
  std::vector<TensorVector> out;
  out.reserve(vectors.size());
  for (const ProductVector& v : vectors) out.push_back(v.embedded);
  return out;
}

std::uint64_t default_max_trials(std::size_t m, std::size_t r, std::size_t parties) {
  return 64ULL * std::max<std::size_t>(m, 1) * std::max<std::size_t>(r, 1) * parties;
}

std::uint64_t default_rational_bound(std::size_t m, std::size_t r, std::size_t parties,
                                     std::size_t total) {
  return 2ULL * std::max<std::size_t>(m, 1) * std::max<std::size_t>(r, 1) * parties * total;
}

CompletionRequest::CompletionRequest(TensorShape shape, FieldSpec field,
                                     std::vector<std::vector<TensorVector>> tuples, std::size_t r,
                                     std::uint64_t seed, std::uint64_t max_trials)
    : shape_(std::move(shape)),
      field_(field),
      tuples_(std::move(tuples)),
      r_(r),
      seed_(seed),
      max_trials_(max_trials) {
  if (r_ < 1 || r_ > shape_.total()) throw std::invalid_argument("completion: r out of range");
  if (tuples_.empty()) throw std::invalid_argument("completion: no tuples");
  for (const auto& tuple : tuples_) {
    if (tuple.size() != shape_.total() - r_) {
      throw std::invalid_argument("completion: every tuple needs exactly total - r vectors");
    }
    EchelonBasis basis(field_, shape_.total());
    for (const TensorVector& v : tuple) {
      if (!(v.shape() == shape_)) throw std::invalid_argument("completion: tuple vector shape mismatch");
      if (v.field() != field_) throw FieldMismatch("completion: tuple vector field mismatch");
      if (!basis.insert(v.coords())) throw std::invalid_argument("completion: tuple is linearly dependent");
    }
  }
  if (max_trials_ == 0) max_trials_ = default_max_trials(m(), r_, shape_.parties());
}

bool CompletionRequest::guaranteed() const noexcept {
  return field_.is_rational() || m() + 1 <= field_.characteristic();
}

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

ProductVector random_product(const TensorShape& shape, const FieldSpec& f, Rng& rng,
                             std::uint64_t bound) {
  std::vector<Vec> factors;
  factors.reserve(shape.parties());
  for (std::size_t d : shape.dims()) {
    Vec u;
    u.reserve(d);
    for (std::size_t i = 0; i < d; ++i) u.push_back(sample(f, rng, bound));
    factors.push_back(std::move(u));
  }
  return kron(std::move(factors));
}

struct CompletionParams {
  std::uint64_t max_trials;
  std::uint64_t rational_bound;
  std::uint64_t enumeration_budget;
};

// Greedy: the i-th vector avoids span(tuple_k, v_1..v_{i-1}) for every k. Each such span
// lies in a hyperplane, so a product vector off all m hyperplanes exists once q > m.
std::vector<ProductVector> complete_impl(const TensorShape& shape, const FieldSpec& f,
                                         std::span<const std::vector<Vec>> tuples, std::size_t r,
                                         Rng& rng, const CompletionParams& params) {
  std::vector<EchelonBasis> spans;
  spans.reserve(tuples.size());
  for (const auto& tuple : tuples) {
    EchelonBasis& b = spans.emplace_back(f, shape.total());
    for (const Vec& v : tuple) b.insert(v);
  }
  auto avoids_all = [&](const Vec& v) {
    return std::none_of(spans.begin(), spans.end(),
                        [&](const EchelonBasis& b) { return b.contains(v); });
  };

  std::vector<ProductVector> out;
  std::uint64_t trials = 0;
  for (std::size_t step = 0; step < r; ++step) {
    std::optional<ProductVector> found;
    for (std::uint64_t t = 0; t < params.max_trials && !found; ++t) {
      ++trials;
      ProductVector candidate = random_product(shape, f, rng, params.rational_bound);
      if (avoids_all(candidate.embedded.coords())) found = std::move(candidate);
    }
    if (!found && f.is_prime()) {
      for_each_projective_product(shape, f, params.enumeration_budget, [&](const ProductVector& pv) {
        ++trials;
        if (!avoids_all(pv.embedded.coords())) return false;
        found = pv;
        return true;
      });
    }
    if (!found) throw CompletionNotFound(trials);
    for (EchelonBasis& b : spans) b.insert(found->embedded.coords());
    out.push_back(std::move(*found));
  }
  return out;
}

struct TupleContext {
  const FieldSpec& field;
  std::size_t r;
  Rng& rng;
  const ConstructOptions& opts;
};

ProductVector prepend_factor(Vec head, const ProductVector& tail) {
  std::vector<Vec> factors;
  factors.reserve(tail.factors.size() + 1);
  factors.push_back(std::move(head));
  factors.insert(factors.end(), tail.factors.begin(), tail.factors.end());
  return kron(std::move(factors));
}

std::vector<ProductVector> standard_products(const TensorShape& shape, const FieldSpec& f,
                                             std::size_t count) {
  std::vector<ProductVector> out;
  for (std::size_t flat = 0; flat < count; ++flat) {
    const auto multi = shape.multi_index(flat);
    std::vector<Vec> factors;
    for (std::size_t j = 0; j < shape.parties(); ++j) {
      factors.push_back(unit_vec(f, shape.dim(j), multi[j]));
    }
    out.push_back(kron(std::move(factors)));
  }
  return out;
}

// Returns exactly total - r^n independent product vectors of
// { u : <w, u> = 0 for all w in covectors }, a subspace of dimension >= total - r.
std::vector<ProductVector> tuple_rec(const TensorShape& shape, const std::vector<Vec>& covectors,
                                     TupleContext& ctx) {
  const FieldSpec& f = ctx.field;
  const std::size_t n = shape.parties();
  const std::size_t target = shape.total() - ipow(ctx.r, n);

  if (n == 1) {
    auto basis = kernel(Matrix::from_rows(f, shape.total(), covectors));
    std::vector<ProductVector> out;
    for (std::size_t i = 0; i < target; ++i) out.push_back(kron({std::move(basis[i])}));
    return out;
  }

  EchelonBasis cov_span(f, shape.total());
  const Vec* nonzero = nullptr;
  for (const Vec& w : covectors) {
    if (cov_span.insert(w) && nonzero == nullptr) nonzero = &w;
  }
  if (cov_span.rank() == 0) return standard_products(shape, f, target);
  if (n == 2 && cov_span.rank() == 1) {
    ProductTuple t = bipartite_codim1_basis(TensorVector(shape, f, *nonzero));
    t.vectors.erase(t.vectors.begin() + static_cast<std::ptrdiff_t>(target), t.vectors.end());
    return std::move(t.vectors);
  }

  const std::size_t d1 = shape.dim(0);
  const TensorShape sub = shape.slice(1, n);
  const std::size_t sub_total = sub.total();
  const std::size_t r_sub = ipow(ctx.r, n - 1);

  // Tuples inside the slices L_k = { x : <w, e_k (x) x> = 0 }.
  std::vector<std::vector<ProductVector>> slices;
  std::vector<std::vector<Vec>> slice_coords;
  for (std::size_t k = 0; k < d1; ++k) {
    std::vector<Vec> sub_cov;
    for (const Vec& w : covectors) {
      sub_cov.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(k * sub_total),
                           w.begin() + static_cast<std::ptrdiff_t>((k + 1) * sub_total));
    }
    auto tuple = tuple_rec(sub, sub_cov, ctx);
    std::vector<Vec> coords;
    for (const ProductVector& pv : tuple) coords.push_back(pv.embedded.coords());
    slices.push_back(std::move(tuple));
    slice_coords.push_back(std::move(coords));
  }

  const CompletionParams params{
      ctx.opts.max_trials != 0 ? ctx.opts.max_trials : default_max_trials(d1, r_sub, sub.parties()),
      default_rational_bound(d1, r_sub, sub.parties(), sub_total),
      ctx.opts.enumeration_budget,
  };
  const auto completion = complete_impl(sub, f, slice_coords, r_sub, ctx.rng, params);

  std::vector<ProductVector> out;
  out.reserve(target);
  for (std::size_t k = 0; k < d1; ++k) {
    for (const ProductVector& tail : slices[k]) out.push_back(prepend_factor(unit_vec(f, d1, k), tail));
  }
  for (const ProductVector& v : completion) {
    // L_s = { a : <w, a (x) v> = 0 } has dimension >= d1 - r.
    Matrix pairing(f, covectors.size(), d1);
    for (std::size_t i = 0; i < covectors.size(); ++i) {
      for (std::size_t a = 0; a < d1; ++a) {
        pairing(i, a) = dot(std::span<const Scalar>(covectors[i]).subspan(a * sub_total, sub_total),
                            v.embedded.coords());
      }
    }
    auto heads = kernel(pairing);
    for (std::size_t t = 0; t < d1 - ctx.r; ++t) out.push_back(prepend_factor(std::move(heads[t]), v));
  }
  return out;
}

std::vector<std::size_t> ascending_party_order(const TensorShape& shape) {
  std::vector<std::size_t> perm(shape.parties());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return shape.dim(a) < shape.dim(b); });
  return perm;
}

std::size_t min_dim(const TensorShape& shape) {
  return *std::min_element(shape.dims().begin(), shape.dims().end());
}

}  // namespace

TensorVector canonical_covector(const TensorShape& shape, const FieldSpec& f, std::size_t r) {
  if (shape.parties() != 2) throw std::invalid_argument("canonical covector needs a bipartite shape");
  if (r < 1 || r > min_dim(shape)) throw std::out_of_range("canonical covector: r out of range");
  return vectorize(rank_normal_matrix(f, shape.dim(0), shape.dim(1), r), shape);
}

ProductTuple bipartite_codim1_basis(const TensorVector& w) {
  const TensorShape& shape = w.shape();
  const FieldSpec& f = w.field();
  if (shape.parties() != 2) throw std::invalid_argument("bipartite construction needs two parties");
  if (w.is_zero()) throw std::invalid_argument("not codimension 1: covector is zero");
  const std::size_t d1 = shape.dim(0);
  const std::size_t d2 = shape.dim(1);

  // w = (P^T (x) Q^T) w_r, so (P^-1 (x) Q^-1) maps the w_r family into w's complement.
  const RankNormalForm nf = rank_normal_form(matricize(w, 1));
  const std::size_t r = nf.rank;
  const Matrix p_inv = inverse(nf.p);
  const Matrix q_inv = inverse(nf.q);

  auto emit = [&](ProductTuple& out, const Vec& a, const Vec& b) {
    out.vectors.push_back(kron({p_inv.apply(a), q_inv.apply(b)}));
  };

  ProductTuple out;
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      if (i == j && i < r) continue;
      emit(out, unit_vec(f, d1, i), unit_vec(f, d2, j));
    }
  }
  Vec u0 = zero_vec(f, d2);
  for (std::size_t i = 0; i < r; ++i) u0[i] = Scalar::one(f);
  for (std::size_t k = 0; k + 1 < r; ++k) {
    Vec diff = zero_vec(f, d1);
    diff[k] = Scalar::one(f);
    diff[k + 1] = -Scalar::one(f);
    emit(out, diff, u0);
  }
  out.claimed_rank = out.vectors.size();
  return out;
}

std::vector<ProductVector> complete_to_bases(const CompletionRequest& req,
                                             std::uint64_t enumeration_budget) {
  std::vector<std::vector<Vec>> coords;
  for (const auto& tuple : req.tuples()) {
    auto& c = coords.emplace_back();
    for (const TensorVector& v : tuple) c.push_back(v.coords());
  }
  Rng rng(req.seed());
  const CompletionParams params{
      req.max_trials(),
      default_rational_bound(req.m(), req.r(), req.shape().parties(), req.shape().total()),
      enumeration_budget,
  };
  return complete_impl(req.shape(), req.field(), coords, req.r(), rng, params);
}

bool product_tuple_guaranteed(const TensorShape& shape, const FieldSpec& f, std::size_t r) {
  if (f.is_rational()) return true;
  const std::size_t n = shape.parties();
  std::vector<std::size_t> sorted = shape.dims();
  std::sort(sorted.begin(), sorted.end());
  const std::uint64_t q = f.characteristic();
  if (r <= 1) return n <= 2 || q > sorted[n - 3];
  return n <= 1 || q > sorted[n - 2];
}

ProductTuple product_tuple(const Subspace& L, const ConstructOptions& opts) {
  const TensorShape& shape = L.shape();
  const FieldSpec& f = L.field();
  const std::size_t r = L.codim();
  if (r < 1 || r > min_dim(shape)) {
    throw std::out_of_range("product tuple: codimension " + std::to_string(r) +
                            " outside [1, " + std::to_string(min_dim(shape)) + "]");
  }
  if (!opts.force && !product_tuple_guaranteed(shape, f, r)) {
    throw FieldTooSmall(f.to_string() + " for shape " + shape.to_string() + " and codimension " +
                        std::to_string(r));
  }

  const auto perm = ascending_party_order(shape);
  std::vector<Vec> covectors;
  for (const TensorVector& w : L.cogenerators()) covectors.push_back(permute_parties(w, perm).coords());
  std::vector<std::size_t> sorted_dims;
  for (std::size_t p : perm) sorted_dims.push_back(shape.dim(p));

  Rng rng(opts.seed);
  TupleContext ctx{f, r, rng, opts};
  auto sorted_out = tuple_rec(TensorShape(sorted_dims), covectors, ctx);

  ProductTuple out;
  out.vectors.reserve(sorted_out.size());
  for (ProductVector& pv : sorted_out) {
    std::vector<Vec> factors(shape.parties());
    for (std::size_t j = 0; j < perm.size(); ++j) factors[perm[j]] = std::move(pv.factors[j]);
    out.vectors.push_back(kron(std::move(factors)));
  }
  out.claimed_rank = out.vectors.size();
  return out;
}

ProductTuple product_basis_codim1(const Subspace& L, const ConstructOptions& opts) {
  if (L.codim() != 1) throw std::invalid_argument("product_basis_codim1 needs exactly one cogenerator");
  const TensorShape& shape = L.shape();
  if (shape.parties() == 2) return bipartite_codim1_basis(L.cogenerators().front());
  if (shape.parties() == 1) {
    ProductTuple out;
    for (const TensorVector& g : L.generators()) out.vectors.push_back(kron({g.coords()}));
    out.claimed_rank = out.vectors.size();
    return out;
  }
  return product_tuple(L, opts);
}

Subspace witness_no_product_basis(const TensorShape& shape, const FieldSpec& f) {
  if (shape.parties() < 2) throw std::invalid_argument("witness subspace needs at least two parties");
  const std::size_t d1 = shape.dim(0);
  const std::size_t d2 = shape.dim(1);
  const std::size_t tail = shape.total() / (d1 * d2);
  const std::size_t total = shape.total();

  auto flat = [&](std::size_t i, std::size_t j, std::size_t t) { return (i * d2 + j) * tail + t; };
  std::vector<TensorVector> gens;
  // Bipartite part tensored with u0 = e_1 (x) ... (x) e_1 (tail index 0).
  {
    Vec v = zero_vec(f, total);
    v[flat(0, 0, 0)] = Scalar::one(f);
    v[flat(1, 1, 0)] = Scalar::one(f);
    gens.emplace_back(shape, f, std::move(v));
  }
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      if ((i == 0 && j == 0) || (i == 1 && j == 0) || (i == 1 && j == 1)) continue;
      gens.emplace_back(shape, f, unit_vec(f, total, flat(i, j, 0)));
    }
  }
  // Everything orthogonal to u0 on the remaining parties.
  for (std::size_t b = 0; b < d1 * d2; ++b) {
    for (std::size_t t = 1; t < tail; ++t) gens.emplace_back(shape, f, unit_vec(f, total, b * tail + t));
  }
  return Subspace::from_generators(shape, f, std::move(gens));
}

}  // namespace prodbasis
