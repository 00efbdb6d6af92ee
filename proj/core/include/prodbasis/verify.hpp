#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prodbasis/fields.hpp"
#include "prodbasis/tensor.hpp"

namespace prodbasis {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

enum class FailureReason { not_product, not_member, dependent };
std::string_view to_string(FailureReason reason);

struct VerificationFailure {
  std::size_t index;
  FailureReason reason;
  friend bool operator==(const VerificationFailure&, const VerificationFailure&) = default;
};

struct VerificationReport {
  bool ok = false;
  std::vector<VerificationFailure> failures;
  std::size_t rank_found = 0;
  std::size_t expected = 0;
};

/// Splits v into per-party factors with kron(factors) == v, or nullopt if v is entangled
/// across some party split. The zero vector factors as all-zero factors. Every factor but
/// the last has its leading nonzero entry equal to 1.
std::optional<std::vector<Vec>> factor_product(const TensorVector& v);

/// ok iff every candidate is a product vector inside L and the candidates are a basis of L.
VerificationReport verify_product_basis(std::span<const TensorVector> candidate, const Subspace& L);
/// As verify_product_basis, but for an independent family of the given size inside L.
VerificationReport verify_product_family(std::span<const TensorVector> candidate, const Subspace& L,
                                         std::size_t expected);

/// Nonzero vectors of F^d whose leading nonzero entry is 1, lexicographic order.
std::vector<Vec> normalized_vectors(const FieldSpec& f, std::size_t d);
/// (q^d - 1)/(q - 1), saturating at UINT64_MAX.
std::uint64_t projective_point_count(std::uint64_t q, std::size_t d);
/// Product over parties of projective_point_count(q, d_j), saturating.
std::uint64_t projective_product_count(const TensorShape& shape, const FieldSpec& f);

/// Visits one representative of every scalar class of nonzero product vectors in the full
/// space, lexicographic over normalized factor tuples, until visit returns true.
/// Returns whether the visit was stopped early. Throws BudgetExceeded or NotEnumerable.
bool for_each_projective_product(const TensorShape& shape, const FieldSpec& f, std::uint64_t budget,
                                 const std::function<bool(const ProductVector&)>& visit);

/// Projective representatives of the nonzero product vectors lying in L.
std::vector<ProductVector> enumerate_product_vectors(const Subspace& L,
                                                     std::uint64_t budget = kDefaultEnumerationBudget);

struct BruteForceResult {
  bool has_product_basis = false;
  /// Lexicographic-first greedy independent family drawn from the enumeration.
  std::vector<ProductVector> basis;
  std::size_t product_span_rank = 0;
  std::size_t dim = 0;
  std::size_t product_count = 0;
};

/// Decides whether L (over a finite field) is spanned by its product vectors.
BruteForceResult has_product_basis_bruteforce(const Subspace& L,
                                              std::uint64_t budget = kDefaultEnumerationBudget);

struct SweepEntry {
  std::uint64_t class_id;
  TensorVector covector;
  bool constructed_ok;
  std::string construct_note;
  bool oracle;
};

struct SweepOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

struct SweepReport {
  TensorShape shape;
  FieldSpec field;
  std::vector<SweepEntry> entries;
  std::size_t with_product_basis = 0;
  std::size_t constructed_ok = 0;
  /// Classes where construction and oracle disagree.
  std::size_t discrepancies = 0;
};

/// Runs the codimension-1 construction (always in best-effort mode) and the brute-force
/// oracle on every nonzero covector up to scalar.
SweepReport sweep_codim1(const TensorShape& shape, const FieldSpec& f, const SweepOptions& opts = {});

/// "class-id; covector; constructed:ok|fail; oracle:true|false" lines plus a summary footer.
std::string format_sweep_report(const SweepReport& report);

}  // namespace prodbasis
