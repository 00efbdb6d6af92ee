#include "prodbasis/tensor.hpp"

#include <charconv>
#include <stdexcept>

#include "prodbasis/errors.hpp"

namespace prodbasis {

TensorShape::TensorShape(std::vector<std::size_t> dims) : dims_(std::move(dims)), total_(1) {
  if (dims_.empty()) throw std::invalid_argument("tensor shape needs at least one party");
  for (std::size_t d : dims_) {
    if (d < 2) throw std::invalid_argument("every local dimension must be at least 2");
    total_ *= d;
  }
}

TensorShape TensorShape::parse(std::string_view text) {
  std::vector<std::size_t> dims;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('x', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    std::size_t d = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), d);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw ParseError("invalid shape '" + std::string(text) + "' (expected d1xd2x...)");
    }
    dims.push_back(d);
    start = end + 1;
  }
  try {
    return TensorShape(std::move(dims));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid shape '") + std::string(text) + "': " + e.what());
  }
}

std::size_t TensorShape::flat_index(std::span<const std::size_t> multi) const {
  if (multi.size() != dims_.size()) throw std::invalid_argument("multi-index arity mismatch");
  std::size_t flat = 0;
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    if (multi[j] >= dims_[j]) throw std::out_of_range("multi-index out of range");
    flat = flat * dims_[j] + multi[j];
  }
  return flat;
}

std::vector<std::size_t> TensorShape::multi_index(std::size_t flat) const {
  if (flat >= total_) throw std::out_of_range("flat index out of range");
  std::vector<std::size_t> multi(dims_.size());
  for (std::size_t j = dims_.size(); j-- > 0;) {
    multi[j] = flat % dims_[j];
    flat /= dims_[j];
  }
  return multi;
}

TensorShape TensorShape::slice(std::size_t first, std::size_t last) const {
  if (first >= last || last > dims_.size()) throw std::out_of_range("invalid party slice");
  return TensorShape(std::vector<std::size_t>(dims_.begin() + first, dims_.begin() + last));
}

std::size_t TensorShape::span_size(std::size_t first, std::size_t last) const {
  std::size_t s = 1;
  for (std::size_t j = first; j < last; ++j) s *= dims_.at(j);
  return s;
}

std::string TensorShape::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    if (j) out += 'x';
    out += std::to_string(dims_[j]);
  }
  return out;
}

TensorVector::TensorVector(TensorShape shape, FieldSpec field, Vec coords)
    : shape_(std::move(shape)), field_(field), coords_(std::move(coords)) {
  if (coords_.size() != shape_.total()) {
    throw std::invalid_argument("tensor vector has " + std::to_string(coords_.size()) +
                                " coordinates, shape needs " + std::to_string(shape_.total()));
  }
  for (const Scalar& s : coords_) {
    if (s.field() != field_) throw FieldMismatch("tensor vector coordinate field mismatch");
  }
}

TensorVector TensorVector::zero(const TensorShape& shape, const FieldSpec& f) {
  return TensorVector(shape, f, zero_vec(f, shape.total()));
}

TensorVector TensorVector::basis(const TensorShape& shape, const FieldSpec& f,
                                 std::span<const std::size_t> multi) {
  return TensorVector(shape, f, unit_vec(f, shape.total(), shape.flat_index(multi)));
}

void TensorVector::require_compatible(const TensorVector& other) const {
  if (field_ != other.field_) throw FieldMismatch("tensor vectors over different fields");
  if (!(shape_ == other.shape_)) throw std::invalid_argument("tensor vectors of different shapes");
}

TensorVector& TensorVector::operator+=(const TensorVector& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

TensorVector TensorVector::scaled(const Scalar& s) const {
  TensorVector out = *this;
  for (Scalar& c : out.coords_) c *= s;
  return out;
}

Vec standard_basis_vector(const TensorShape& shape, const FieldSpec& f, std::size_t party,
                          std::size_t index) {
  const std::size_t d = shape.dim(party);
  if (index >= d) throw std::out_of_range("standard basis index out of range");
  return unit_vec(f, d, index);
}

ProductVector kron(std::vector<Vec> factors) {
  if (factors.empty()) throw std::invalid_argument("kron needs at least one factor");
  std::vector<std::size_t> dims;
  for (const Vec& u : factors) dims.push_back(u.size());
  TensorShape shape(std::move(dims));
  const FieldSpec f = factors.front().front().field();
  Vec coords{Scalar::one(f)};
  for (const Vec& u : factors) {
    Vec next;
    next.reserve(coords.size() * u.size());
    for (const Scalar& a : coords) {
      for (const Scalar& b : u) {
        if (b.field() != f) throw FieldMismatch("kron factors over different fields");
        next.push_back(a * b);
      }
    }
    coords = std::move(next);
  }
  TensorVector embedded(std::move(shape), f, std::move(coords));
  return {std::move(factors), std::move(embedded)};
}

Matrix matricize(const TensorVector& v, std::size_t k) {
  const TensorShape& shape = v.shape();
  if (k < 1 || k >= shape.parties()) throw std::out_of_range("matricize: split point out of range");
  const std::size_t rows = shape.span_size(0, k);
  const std::size_t cols = shape.span_size(k, shape.parties());
  Matrix m(v.field(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  }
  return m;
}

TensorVector vectorize(const Matrix& m, const TensorShape& shape) {
  if (m.rows() * m.cols() != shape.total()) throw std::invalid_argument("vectorize: size mismatch");
  return TensorVector(shape, m.field(), m.entries());
}

Scalar bilinear_form(const TensorVector& v, const TensorVector& u) {
  if (v.field() != u.field()) throw FieldMismatch("bilinear form over different fields");
  if (!(v.shape() == u.shape())) throw std::invalid_argument("bilinear form of different shapes");
  return dot(v.coords(), u.coords());
}

std::size_t schmidt_rank(const TensorVector& v, std::size_t k) { return rank(matricize(v, k)); }

TensorVector permute_parties(const TensorVector& v, std::span<const std::size_t> perm) {
  const TensorShape& src = v.shape();
  if (perm.size() != src.parties()) throw std::invalid_argument("permutation arity mismatch");
  std::vector<std::size_t> dims;
  for (std::size_t p : perm) dims.push_back(src.dim(p));
  TensorShape dst(std::move(dims));
  Vec coords = zero_vec(v.field(), src.total());
  std::vector<std::size_t> dst_multi(perm.size());
  for (std::size_t flat = 0; flat < src.total(); ++flat) {
    const auto multi = src.multi_index(flat);
    for (std::size_t j = 0; j < perm.size(); ++j) dst_multi[j] = multi[perm[j]];
    coords[dst.flat_index(dst_multi)] = v[flat];
  }
  return TensorVector(std::move(dst), v.field(), std::move(coords));
}

namespace {

void require_members(const TensorShape& shape, const FieldSpec& f,
                     std::span<const TensorVector> vs) {
  for (const TensorVector& v : vs) {
    if (!(v.shape() == shape)) throw std::invalid_argument("subspace vector has the wrong shape");
    if (v.field() != f) throw FieldMismatch("subspace vector over the wrong field");
  }
}

bool independent(const FieldSpec& f, std::size_t dim, std::span<const TensorVector> vs) {
  EchelonBasis basis(f, dim);
  for (const TensorVector& v : vs) {
    if (!basis.insert(v.coords())) return false;
  }
  return true;
}

}  // namespace

std::vector<TensorVector> annihilator(const TensorShape& shape, const FieldSpec& f,
                                      std::span<const TensorVector> vectors) {
  std::vector<Vec> rows;
  rows.reserve(vectors.size());
  for (const TensorVector& v : vectors) rows.push_back(v.coords());
  std::vector<TensorVector> out;
  for (Vec& k : kernel(Matrix::from_rows(f, shape.total(), rows))) {
    out.emplace_back(shape, f, std::move(k));
  }
  return out;
}

Subspace::Subspace(TensorShape shape, FieldSpec field, std::vector<TensorVector> gens,
                   std::vector<TensorVector> cogens)
    : shape_(std::move(shape)),
      field_(field),
      generators_(std::move(gens)),
      cogenerators_(std::move(cogens)) {}

Subspace Subspace::from_generators(TensorShape shape, FieldSpec field,
                                  std::vector<TensorVector> generators) {
  require_members(shape, field, generators);
  if (!independent(field, shape.total(), generators)) {
    throw std::invalid_argument("subspace generators are linearly dependent");
  }
  auto cogens = annihilator(shape, field, generators);
  return Subspace(std::move(shape), field, std::move(generators), std::move(cogens));
}

Subspace Subspace::from_cogenerators(TensorShape shape, FieldSpec field,
                                    std::vector<TensorVector> cogenerators) {
  require_members(shape, field, cogenerators);
  if (!independent(field, shape.total(), cogenerators)) {
    throw std::invalid_argument("subspace cogenerators are linearly dependent");
  }
  auto gens = annihilator(shape, field, cogenerators);
  return Subspace(std::move(shape), field, std::move(gens), std::move(cogenerators));
}

Subspace Subspace::from_both(TensorShape shape, FieldSpec field,
                             std::vector<TensorVector> generators,
                             std::vector<TensorVector> cogenerators) {
  require_members(shape, field, generators);
  require_members(shape, field, cogenerators);
  if (!independent(field, shape.total(), generators) ||
      !independent(field, shape.total(), cogenerators)) {
    throw std::invalid_argument("subspace representation is linearly dependent");
  }
  if (generators.size() + cogenerators.size() != shape.total()) {
    throw std::invalid_argument("inconsistent subspace representations: dimensions do not add up");
  }
  for (const TensorVector& g : generators) {
    for (const TensorVector& w : cogenerators) {
      if (!bilinear_form(w, g).is_zero()) {
        throw std::invalid_argument("inconsistent subspace representations: generator not annihilated");
      }
    }
  }
  return Subspace(std::move(shape), field, std::move(generators), std::move(cogenerators));
}

Subspace Subspace::full(const TensorShape& shape, const FieldSpec& f) {
  std::vector<TensorVector> gens;
  for (std::size_t i = 0; i < shape.total(); ++i) {
    gens.emplace_back(shape, f, unit_vec(f, shape.total(), i));
  }
  return Subspace(shape, f, std::move(gens), {});
}

bool Subspace::contains(const TensorVector& v) const {
  if (!(v.shape() == shape_)) throw std::invalid_argument("membership: shape mismatch");
  if (v.field() != field_) throw FieldMismatch("membership: field mismatch");
  for (const TensorVector& w : cogenerators_) {
    if (!bilinear_form(w, v).is_zero()) return false;
  }
  return true;
}

Subspace Subspace::orthogonal_complement() const {
  return Subspace(shape_, field_, cogenerators_, generators_);
}

bool Subspace::equals(const Subspace& other) const {
  if (!(shape_ == other.shape_) || field_ != other.field_ || dim() != other.dim()) return false;
  for (const TensorVector& g : generators_) {
    if (!other.contains(g)) return false;
  }
  return true;
}

bool membership(const Subspace& s, const TensorVector& v) { return s.contains(v); }

Subspace orthogonal_complement(const Subspace& s) { return s.orthogonal_complement(); }

}  // namespace prodbasis
