#include "prodbasis/verify.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "prodbasis/construct.hpp"
#include "prodbasis/errors.hpp"
#include "prodbasis/linalg.hpp"

namespace prodbasis {

std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::not_product:
      return "not_product";
    case FailureReason::not_member:
      return "not_member";
    case FailureReason::dependent:
      return "dependent";
  }
  return "unknown";
}

std::optional<std::vector<Vec>> factor_product(const TensorVector& v) {
  const TensorShape& shape = v.shape();
  const FieldSpec& f = v.field();
  if (v.is_zero()) {
    std::vector<Vec> zeros;
    for (std::size_t d : shape.dims()) zeros.push_back(zero_vec(f, d));
    return zeros;
  }
  if (shape.parties() == 1) return std::vector<Vec>{v.coords()};

  const Matrix m = matricize(v, 1);
  // The first column with a nonzero entry, scaled to a leading 1, is the head factor; the
  // row through that leading entry is then the tail.
  std::size_t col = 0;
  std::size_t lead = 0;
  bool found = false;
  for (col = 0; col < m.cols() && !found; ++col) {
    for (lead = 0; lead < m.rows(); ++lead) {
      if (!m(lead, col).is_zero()) {
        found = true;
        break;
      }
    }
  }
  --col;
  const Scalar inv = m(lead, col).inv();
  Vec head;
  for (std::size_t i = 0; i < m.rows(); ++i) head.push_back(m(i, col) * inv);
  Vec tail(m.row(lead).begin(), m.row(lead).end());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!(m(i, j) == head[i] * tail[j])) return std::nullopt;
    }
  }
  auto rest = factor_product(TensorVector(shape.slice(1, shape.parties()), f, std::move(tail)));
  if (!rest) return std::nullopt;
  std::vector<Vec> factors{std::move(head)};
  factors.insert(factors.end(), std::make_move_iterator(rest->begin()),
                 std::make_move_iterator(rest->end()));
  return factors;
}

VerificationReport verify_product_family(std::span<const TensorVector> candidate, const Subspace& L,
                                         std::size_t expected) {
  VerificationReport report;
  report.expected = expected;
  EchelonBasis span(L.field(), L.shape().total());
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    const TensorVector& v = candidate[i];
    if (!(v.shape() == L.shape()) || v.field() != L.field()) {
      report.failures.push_back({i, FailureReason::not_member});
      continue;
    }
    if (!factor_product(v)) report.failures.push_back({i, FailureReason::not_product});
    if (!L.contains(v)) report.failures.push_back({i, FailureReason::not_member});
    if (!span.insert(v.coords())) report.failures.push_back({i, FailureReason::dependent});
  }
  report.rank_found = span.rank();
  report.ok = report.failures.empty() && report.rank_found == expected;
  return report;
}

VerificationReport verify_product_basis(std::span<const TensorVector> candidate, const Subspace& L) {
  return verify_product_family(candidate, L, L.dim());
}

std::vector<Vec> normalized_vectors(const FieldSpec& f, std::size_t d) {
  if (!f.is_prime()) throw NotEnumerable(f.to_string());
  const std::uint64_t q = f.characteristic();
  std::vector<Vec> out;
  // Leading position first; positions before it are zero, after it are free.
  // Iterating lead from last to first keeps the list in lexicographic order.
  for (std::size_t lead = d; lead-- > 0;) {
    const std::size_t free = d - lead - 1;
    std::vector<std::uint64_t> digits(free, 0);
    while (true) {
      Vec v = zero_vec(f, d);
      v[lead] = Scalar::one(f);
      for (std::size_t i = 0; i < free; ++i) v[lead + 1 + i] = Scalar::from_residue(f, digits[i]);
      out.push_back(std::move(v));
      std::size_t pos = free;
      while (pos > 0 && ++digits[pos - 1] == q) digits[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return out;
}

std::uint64_t projective_point_count(std::uint64_t q, std::size_t d) {
  // 1 + q + ... + q^{d-1}
  __extension__ using u128 = unsigned __int128;
  constexpr u128 cap = std::numeric_limits<std::uint64_t>::max();
  u128 sum = 0;
  u128 power = 1;
  for (std::size_t i = 0; i < d; ++i) {
    sum += power;
    if (sum >= cap) return std::numeric_limits<std::uint64_t>::max();
    power *= q;
    if (power >= cap) power = cap;
  }
  return static_cast<std::uint64_t>(sum);
}

std::uint64_t projective_product_count(const TensorShape& shape, const FieldSpec& f) {
  if (!f.is_prime()) throw NotEnumerable(f.to_string());
  __extension__ using u128 = unsigned __int128;
  constexpr u128 cap = std::numeric_limits<std::uint64_t>::max();
  u128 total = 1;
  for (std::size_t d : shape.dims()) {
    total *= projective_point_count(f.characteristic(), d);
    if (total >= cap) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(total);
}

bool for_each_projective_product(const TensorShape& shape, const FieldSpec& f, std::uint64_t budget,
                                 const std::function<bool(const ProductVector&)>& visit) {
  const std::uint64_t required = projective_product_count(shape, f);
  if (required > budget) throw BudgetExceeded(required, budget);
  std::vector<std::vector<Vec>> per_party;
  for (std::size_t d : shape.dims()) per_party.push_back(normalized_vectors(f, d));
  std::vector<std::size_t> idx(shape.parties(), 0);
  while (true) {
    std::vector<Vec> factors;
    for (std::size_t j = 0; j < idx.size(); ++j) factors.push_back(per_party[j][idx[j]]);
    if (visit(kron(std::move(factors)))) return true;
    std::size_t pos = idx.size();
    while (pos > 0 && ++idx[pos - 1] == per_party[pos - 1].size()) idx[--pos] = 0;
    if (pos == 0) return false;
  }
}

std::vector<ProductVector> enumerate_product_vectors(const Subspace& L, std::uint64_t budget) {
  std::vector<ProductVector> out;
  if (L.dim() == 0) {
    // Still validate the field and budget so errors are uniform.
    projective_product_count(L.shape(), L.field());
    return out;
  }
  for_each_projective_product(L.shape(), L.field(), budget, [&](const ProductVector& pv) {
    if (L.contains(pv.embedded)) out.push_back(pv);
    return false;
  });
  return out;
}

BruteForceResult has_product_basis_bruteforce(const Subspace& L, std::uint64_t budget) {
  BruteForceResult result;
  result.dim = L.dim();
  const auto products = enumerate_product_vectors(L, budget);
  result.product_count = products.size();
  EchelonBasis span(L.field(), L.shape().total());
  for (const ProductVector& pv : products) {
    if (span.rank() == L.dim()) break;
    if (span.insert(pv.embedded.coords())) result.basis.push_back(pv);
  }
  result.product_span_rank = span.rank();
  result.has_product_basis = result.product_span_rank == L.dim();
  return result;
}

SweepReport sweep_codim1(const TensorShape& shape, const FieldSpec& f, const SweepOptions& opts) {
  if (!f.is_prime()) throw NotEnumerable(f.to_string());
  const std::uint64_t classes = projective_point_count(f.characteristic(), shape.total());
  if (classes > opts.budget) throw BudgetExceeded(classes, opts.budget);
  const std::uint64_t per_class = projective_product_count(shape, f);
  if (per_class > opts.budget) throw BudgetExceeded(per_class, opts.budget);

  SweepReport report{shape, f, {}, 0, 0, 0};
  std::uint64_t class_id = 0;
  for (Vec& w : normalized_vectors(f, shape.total())) {
    TensorVector covector(shape, f, std::move(w));
    const Subspace L = Subspace::from_cogenerators(shape, f, {covector});

    bool constructed_ok = false;
    std::string note;
    try {
      ConstructOptions copts;
      copts.seed = opts.seed + class_id;
      copts.force = true;
      copts.enumeration_budget = opts.budget;
      const ProductTuple tuple = product_basis_codim1(L, copts);
      const auto embedded = tuple.embedded();
      constructed_ok = verify_product_basis(embedded, L).ok;
      if (!constructed_ok) note = "verification failed";
    } catch (const CompletionNotFound& e) {
      note = e.what();
    }
    const bool oracle = has_product_basis_bruteforce(L, opts.budget).has_product_basis;

    report.with_product_basis += oracle ? 1 : 0;
    report.constructed_ok += constructed_ok ? 1 : 0;
    report.discrepancies += constructed_ok != oracle ? 1 : 0;
    report.entries.push_back({class_id, std::move(covector), constructed_ok, std::move(note), oracle});
    ++class_id;
  }
  return report;
}

std::string format_sweep_report(const SweepReport& report) {
  std::ostringstream os;
  os << "# sweep shape " << report.shape.to_string() << "; field " << report.field.to_string() << '\n';
  for (const SweepEntry& e : report.entries) {
    os << e.class_id << ";";
    for (const Scalar& s : e.covector.coords()) os << ' ' << s;
    os << "; constructed:" << (e.constructed_ok ? "ok" : "fail") << "; oracle:" << (e.oracle ? "true" : "false");
    if (e.constructed_ok != e.oracle) os << "; COUNTEREXAMPLE_CANDIDATE";
    os << '\n';
  }
  os << "summary: " << report.entries.size() << " classes, " << report.with_product_basis
     << " with product basis, " << report.constructed_ok << " constructed ok, "
     << report.discrepancies << " discrepancies\n";
  return os.str();
}

}  // namespace prodbasis
