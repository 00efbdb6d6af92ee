#include "prodbasis/gpt.hpp"

#include <sstream>
#include <stdexcept>

#include "prodbasis/errors.hpp"

namespace prodbasis {

namespace {

const FieldSpec kRational = FieldSpec::rational();

}  // namespace

SymMatrix::SymMatrix(TensorShape shape, Matrix m) : shape_(std::move(shape)), m_(std::move(m)) {
  if (!m_.field().is_rational()) throw std::invalid_argument("symmetric matrices are rational only");
  if (!m_.is_square() || m_.rows() != shape_.total()) {
    throw std::invalid_argument("symmetric matrix size does not match its shape");
  }
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = i + 1; j < m_.cols(); ++j) {
      if (!(m_(i, j) == m_(j, i))) throw std::invalid_argument("matrix is not symmetric");
    }
  }
}

SymMatrix SymMatrix::identity(const TensorShape& shape) {
  return SymMatrix(shape, Matrix::identity(kRational, shape.total()));
}

SymMatrix SymMatrix::outer(const TensorVector& v) {
  if (!v.field().is_rational()) throw std::invalid_argument("outer product needs a rational vector");
  const std::size_t n = v.shape().total();
  Matrix m(kRational, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i] * v[j];
  }
  return SymMatrix(v.shape(), std::move(m));
}

Scalar SymMatrix::trace() const {
  Scalar t = Scalar::zero(kRational);
  for (std::size_t i = 0; i < size(); ++i) t += m_(i, i);
  return t;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
  if (!(shape_ == other.shape_)) throw std::invalid_argument("adding matrices of different shapes");
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) m_(i, j) += other.m_(i, j);
  }
  return *this;
}

SymMatrix partial_transpose(const SymMatrix& m, std::size_t party) {
  const TensorShape& shape = m.shape();
  if (party >= shape.parties()) throw std::out_of_range("partial transpose: party out of range");
  const std::size_t n = shape.total();
  Matrix out(kRational, n, n);
  for (std::size_t row = 0; row < n; ++row) {
    auto ri = shape.multi_index(row);
    for (std::size_t col = 0; col < n; ++col) {
      auto ci = shape.multi_index(col);
      std::swap(ri[party], ci[party]);
      out(row, col) = m(shape.flat_index(ri), shape.flat_index(ci));
      std::swap(ri[party], ci[party]);
    }
  }
  return SymMatrix(shape, std::move(out));
}

Inertia inertia(const Matrix& input) {
  if (!input.field().is_rational() || !input.is_square()) {
    throw std::invalid_argument("inertia needs a square rational matrix");
  }
  Matrix a = input;
  const std::size_t n = a.rows();
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  Inertia result;

  while (remaining > 0) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n && pivot == n; ++i) {
      if (!done[i] && !a(i, i).is_zero()) pivot = i;
    }
    if (pivot != n) {
      const Scalar d = a(pivot, pivot);
      (d.sign() > 0 ? result.positive : result.negative) += 1;
      done[pivot] = true;
      --remaining;
      const Scalar inv = d.inv();
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j] || a(j, pivot).is_zero()) continue;
        const Scalar cj = a(j, pivot) * inv;
        for (std::size_t k = 0; k < n; ++k) {
          if (!done[k] && !a(pivot, k).is_zero()) a(j, k) -= cj * a(pivot, k);
        }
      }
      continue;
    }

    // Zero diagonal: any nonzero off-diagonal entry gives a [[0,a],[a,0]] block, which
    // contributes one positive and one negative eigenvalue.
    std::size_t p = n, q = n;
    for (std::size_t i = 0; i < n && p == n; ++i) {
      if (done[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!done[j] && !a(i, j).is_zero()) {
          p = i;
          q = j;
          break;
        }
      }
    }
    if (p == n) {
      result.zero += remaining;
      break;
    }
    result.positive += 1;
    result.negative += 1;
    done[p] = done[q] = true;
    remaining -= 2;
    const Scalar inv = a(p, q).inv();
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < n; ++j) {
      if (!done[j]) rest.push_back(j);
    }
    // A_rest -= (c_p c_q^T + c_q c_p^T) / a
    std::vector<Scalar> cp, cq;
    for (std::size_t j : rest) {
      cp.push_back(a(j, p));
      cq.push_back(a(j, q));
    }
    for (std::size_t x = 0; x < rest.size(); ++x) {
      for (std::size_t y = 0; y < rest.size(); ++y) {
        const Scalar delta = (cp[x] * cq[y] + cq[x] * cp[y]) * inv;
        if (!delta.is_zero()) a(rest[x], rest[y]) -= delta;
      }
    }
  }
  return result;
}

Inertia inertia(const SymMatrix& m) { return inertia(m.matrix()); }

Scalar trace_pairing(const SymMatrix& x, const SymMatrix& y) {
  if (!(x.shape() == y.shape())) throw std::invalid_argument("trace pairing of different shapes");
  Scalar acc = Scalar::zero(kRational);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!x(i, j).is_zero() && !y(j, i).is_zero()) acc += x(i, j) * y(j, i);
    }
  }
  return acc;
}

std::string format_certificate(const SeparabilityCertificate& c) {
  std::ostringstream os;
  os << "det=" << c.det << ", inertia=(" << c.inertia.positive << "," << c.inertia.negative << ","
     << c.inertia.zero << "), verdict="
     << (c.verdict == SeparabilityVerdict::not_separable ? "NOT_SEPARABLE" : "INCONCLUSIVE");
  return os.str();
}

SeparabilityCertificate ppt_certificate(const SymMatrix& m, std::size_t party) {
  const SymMatrix pt = partial_transpose(m, party);
  const Inertia in = inertia(pt);
  return {det(pt.matrix()), in,
          in.negative > 0 ? SeparabilityVerdict::not_separable : SeparabilityVerdict::inconclusive};
}

ProjectionCounterexample build_projection_counterexample(const TensorShape& shape) {
  if (shape.parties() < 2) throw std::invalid_argument("counterexample needs at least two parties");
  const FieldSpec& f = kRational;
  const std::size_t n = shape.parties();

  auto tail_e1 = [&](std::vector<Vec> head) {
    for (std::size_t j = 2; j < n; ++j) head.push_back(unit_vec(f, shape.dim(j), 0));
    return kron(std::move(head));
  };
  Vec e1_plus_e2 = zero_vec(f, shape.dim(0));
  e1_plus_e2[0] = e1_plus_e2[1] = Scalar::one(f);
  Vec f1_plus_f2 = zero_vec(f, shape.dim(1));
  f1_plus_f2[0] = f1_plus_f2[1] = Scalar::one(f);

  std::vector<ProductVector> basis{
      tail_e1({unit_vec(f, shape.dim(0), 0), unit_vec(f, shape.dim(1), 0)}),
      tail_e1({e1_plus_e2, f1_plus_f2}),
  };
  Subspace subspace = Subspace::from_generators(shape, f, {basis[0].embedded, basis[1].embedded});

  const Scalar third(f, mpq_class(1, 3));
  auto scaled_outer = [&](const TensorVector& v) {
    Matrix m = SymMatrix::outer(v).matrix();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= third;
    }
    return SymMatrix(v.shape(), std::move(m));
  };

  const TensorShape two_by_two({2, 2});
  const SymMatrix block = SymMatrix::outer(TensorVector(two_by_two, f, vec_from_ints(f, {1, 0, 0, 0}))) +
                          scaled_outer(TensorVector(two_by_two, f, vec_from_ints(f, {0, 1, 1, 1})));

  // (e1+e2)(x)(e1+e2)(x)u minus its e11 component is orthogonal to the first basis vector.
  const TensorVector orth = basis[1].embedded - basis[0].embedded;
  const SymMatrix projection = SymMatrix::outer(basis[0].embedded) + scaled_outer(orth);

  SeparabilityCertificate certificate = ppt_certificate(block, 1);
  const Inertia full = inertia(partial_transpose(projection, 1));
  return {std::move(subspace), std::move(basis), block, projection, std::move(certificate), full};
}

bool verify_distinguishable(const Ensemble& e, bool certify_psd) {
  if (e.states.size() != e.measurement.size()) {
    throw std::invalid_argument("ensemble: state and measurement counts differ");
  }
  const Scalar one = Scalar::one(kRational);
  if (e.measurement.empty()) return false;
  SymMatrix sum = e.measurement.front();
  for (std::size_t j = 1; j < e.measurement.size(); ++j) sum += e.measurement[j];
  if (!(sum == e.unit)) return false;
  for (const SymMatrix& x : e.states) {
    if (!(trace_pairing(x, e.unit) == one)) return false;
  }
  for (std::size_t i = 0; i < e.states.size(); ++i) {
    for (std::size_t j = 0; j < e.measurement.size(); ++j) {
      const Scalar p = trace_pairing(e.states[i], e.measurement[j]);
      if (i == j ? !p.is_one() : !p.is_zero()) return false;
    }
  }
  if (certify_psd) {
    for (const SymMatrix& y : e.measurement) {
      if (inertia(y).negative != 0) return false;
    }
  }
  return true;
}

Ensemble standard_ensemble(std::size_t d1, std::size_t d2) {
  const TensorShape shape({d1, d2});
  std::vector<SymMatrix> projectors;
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      const std::size_t idx[] = {i, j};
      projectors.push_back(SymMatrix::outer(TensorVector::basis(shape, kRational, idx)));
    }
  }
  return {projectors, projectors, SymMatrix::identity(shape)};
}

}  // namespace prodbasis
