#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

Scalar leibniz_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = Scalar::zero(m.field());
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Scalar term = Scalar::one(m.field());
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::size_t naive_rank(const Matrix& input) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < input.rows(); ++i) rows.emplace_back(input.row(i).begin(), input.row(i).end());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < input.cols() && rank < rows.size(); ++col) {
    std::size_t pick = rank;
    while (pick < rows.size() && rows[pick][col].is_zero()) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[rank], rows[pick]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      const Scalar c = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < input.cols(); ++j) rows[i][j] -= c * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t naive_rank(std::span<const TensorVector> vs) {
  if (vs.empty()) return 0;
  Matrix m(vs.front().field(), vs.size(), vs.front().shape().total());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = vs[i][j];
  }
  return naive_rank(m);
}

std::vector<Scalar> charpoly(const Matrix& a) {
  const FieldSpec& f = a.field();
  const std::size_t n = a.rows();
  std::vector<Scalar> c(n + 1, Scalar::zero(f));
  c[n] = Scalar::one(f);
  Matrix mk(f, n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
    Matrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    const Matrix am = a * mk;
    Scalar tr = Scalar::zero(f);
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Scalar(f, static_cast<std::int64_t>(k));
  }
  return c;
}

namespace {

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

prodbasis::Inertia descartes_inertia(const Matrix& a) {
  const auto c = charpoly(a);
  std::size_t zero = 0;
  while (zero < c.size() && c[zero].is_zero()) ++zero;
  std::vector<int> pos, neg;
  for (std::size_t i = zero; i < c.size(); ++i) {
    pos.push_back(c[i].sign());
    // p(-x): odd powers flip sign
    neg.push_back((i % 2 ? -1 : 1) * c[i].sign());
  }
  return {sign_changes(pos), sign_changes(neg), zero};
}

Vec naive_kron(const std::vector<Vec>& factors) {
  std::size_t total = 1;
  for (const Vec& v : factors) total *= v.size();
  const FieldSpec f = factors.front().front().field();
  Vec out;
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    Scalar prod = Scalar::one(f);
    for (std::size_t j = factors.size(); j-- > 0;) {
      prod *= factors[j][rest % factors[j].size()];
      rest /= factors[j].size();
    }
    out.push_back(prod);
  }
  return out;
}

namespace {

// All of F^d, including zero, in counter order.
std::vector<Vec> all_vectors(const FieldSpec& f, std::size_t d) {
  const std::uint64_t q = f.characteristic();
  std::vector<Vec> out;
  std::vector<std::uint64_t> digits(d, 0);
  while (true) {
    Vec v;
    for (std::uint64_t x : digits) v.push_back(Scalar::from_residue(f, x));
    out.push_back(v);
    std::size_t pos = 0;
    while (pos < d && ++digits[pos] == q) digits[pos++] = 0;
    if (pos == d) return out;
  }
}

}  // namespace

std::vector<TensorVector> all_products_in_span(const TensorShape& shape, const FieldSpec& f,
                                               std::span<const TensorVector> gens) {
  if (!f.is_prime()) throw std::invalid_argument("oracle enumeration needs a finite field");
  std::vector<std::vector<Vec>> per_party;
  for (std::size_t d : shape.dims()) {
    auto all = all_vectors(f, d);
    all.erase(all.begin());  // drop zero
    per_party.push_back(std::move(all));
  }
  const std::size_t base = naive_rank(gens);
  std::vector<TensorVector> found;
  std::vector<std::size_t> idx(shape.parties(), 0);
  while (true) {
    std::vector<Vec> factors;
    for (std::size_t j = 0; j < idx.size(); ++j) factors.push_back(per_party[j][idx[j]]);
    TensorVector v(shape, f, naive_kron(factors));
    std::vector<TensorVector> stacked(gens.begin(), gens.end());
    stacked.push_back(v);
    if (naive_rank(stacked) == base && std::find(found.begin(), found.end(), v) == found.end()) {
      found.push_back(v);
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == per_party[pos].size()) idx[pos++] = 0;
    if (pos == idx.size()) return found;
  }
}

bool pairs_to_zero(const TensorVector& v, std::span<const TensorVector> cogens) {
  for (const TensorVector& w : cogens) {
    Scalar acc = Scalar::zero(v.field());
    for (std::size_t i = 0; i < v.shape().total(); ++i) acc += v[i] * w[i];
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace oracle
