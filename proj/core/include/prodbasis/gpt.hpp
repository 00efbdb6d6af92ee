#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "prodbasis/construct.hpp"
#include "prodbasis/linalg.hpp"
#include "prodbasis/tensor.hpp"

namespace prodbasis {

/// Rational symmetric matrix on a tensor product space (size total x total).
class SymMatrix {
 public:
  /// Throws std::invalid_argument unless m is rational, symmetric and sized to the shape.
  SymMatrix(TensorShape shape, Matrix m);
  static SymMatrix identity(const TensorShape& shape);
  /// |v><v| for a rational vector.
  static SymMatrix outer(const TensorVector& v);

  const TensorShape& shape() const noexcept { return shape_; }
  const Matrix& matrix() const noexcept { return m_; }
  std::size_t size() const noexcept { return m_.rows(); }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  Scalar trace() const;
  SymMatrix& operator+=(const SymMatrix& other);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  TensorShape shape_;
  Matrix m_;
};

/// Transpose the indices of a single party.
SymMatrix partial_transpose(const SymMatrix& m, std::size_t party);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Eigenvalue sign counts via exact symmetric congruence with 1x1 and 2x2 pivots.
Inertia inertia(const SymMatrix& m);
/// Same for a plain rational symmetric matrix.
Inertia inertia(const Matrix& m);

/// Trace pairing <X, Y> = Tr(XY).
Scalar trace_pairing(const SymMatrix& x, const SymMatrix& y);

enum class SeparabilityVerdict { not_separable, inconclusive };

struct SeparabilityCertificate {
  Scalar det;
  Inertia inertia;
  SeparabilityVerdict verdict;
};

/// "det=<rational>, inertia=(n+,n-,n0), verdict=NOT_SEPARABLE|INCONCLUSIVE"
std::string format_certificate(const SeparabilityCertificate& c);

/// Partial-transpose certificate: a negative eigenvalue of the partial transpose rules out
/// separability.
SeparabilityCertificate ppt_certificate(const SymMatrix& m, std::size_t party);

struct ProjectionCounterexample {
  /// span{ e1 (x) e1 (x) u, (e1+e2) (x) (e1+e2) (x) u } with u = e1 (x) ... (x) e1.
  Subspace subspace;
  std::vector<ProductVector> basis;
  /// The 2x2-party block |e11><e11| + |v><v|, v = (e12 + e21 + e22)/sqrt(3).
  SymMatrix block;
  /// Full orthogonal projection onto the subspace.
  SymMatrix projection;
  SeparabilityCertificate certificate;
  /// Inertia of the partial transpose of the full projection.
  Inertia projection_pt_inertia;
};

/// A subspace with a product basis whose orthogonal projection fails the PPT test.
ProjectionCounterexample build_projection_counterexample(const TensorShape& shape);

struct Ensemble {
  std::vector<SymMatrix> states;
  std::vector<SymMatrix> measurement;
  SymMatrix unit;
};

/// Tr(x_i y_j) == delta_ij for all i, j, the measurement sums to the unit and every state
/// has trace 1. With certify_psd, each measurement element must also have no negative
/// eigenvalue. Throws std::invalid_argument if the counts differ.
bool verify_distinguishable(const Ensemble& e, bool certify_psd = false);

/// The d1*d2 product projectors |e_i><e_i| (x) |e_j><e_j| as both states and measurement.
Ensemble standard_ensemble(std::size_t d1, std::size_t d2);

}  // namespace prodbasis
