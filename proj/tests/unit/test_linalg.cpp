#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "prodbasis/errors.hpp"
#include "prodbasis/linalg.hpp"

namespace prodbasis {
namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec GF2 = FieldSpec::prime(2);
const FieldSpec GF3 = FieldSpec::prime(3);

bool is_rref(const RrefResult& r) {
  const Matrix& m = r.reduced;
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (i > 0 && r.pivots[i] <= r.pivots[i - 1]) return false;
    if (!m(i, r.pivots[i]).is_one()) return false;
    for (std::size_t j = 0; j < r.pivots[i]; ++j) {
      if (!m(i, j).is_zero()) return false;
    }
    for (std::size_t k = 0; k < m.rows(); ++k) {
      if (k != i && !m(k, r.pivots[i]).is_zero()) return false;
    }
  }
  for (std::size_t i = r.pivots.size(); i < m.rows(); ++i) {
    if (!is_zero(m.row(i))) return false;
  }
  return true;
}

TEST(Rref, Identity) {
  const Matrix id = Matrix::identity(Q, 3);
  const RrefResult r = rref(id);
  EXPECT_EQ(r.reduced, id);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(r.transform, id);
}

TEST(Rref, RowSwapOverGF2) {
  const Matrix a = Matrix::from_ints(GF2, {{0, 1}, {1, 0}});
  const RrefResult r = rref(a);
  EXPECT_EQ(r.reduced, Matrix::identity(GF2, 2));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.transform * a, r.reduced);
}

TEST(Rref, ProportionalRows) {
  const RrefResult r = rref(Matrix::from_ints(Q, {{1, 2}, {2, 4}}));
  EXPECT_EQ(r.reduced, Matrix::from_ints(Q, {{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Kernel, SumOverGF2) {
  const auto k = kernel(Matrix::from_ints(GF2, {{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], vec_from_ints(GF2, {1, 1}));
}

TEST(Det, Examples) {
  EXPECT_EQ(det(Matrix::from_ints(Q, {{0, 1}, {1, 0}})), Scalar(Q, -1));
  EXPECT_EQ(det(Matrix::from_ints(Q, {{2, 0}, {0, 3}})), Scalar(Q, 6));
  EXPECT_TRUE(det(Matrix::from_ints(GF3, {{1, 2}, {2, 1}})).is_zero());  // 1 - 4 = -3
  EXPECT_THROW(det(Matrix(Q, 2, 3)), std::invalid_argument);
}

TEST(Inverse, SelfInverseInCharTwo) {
  const Matrix a = Matrix::from_ints(GF2, {{1, 1}, {0, 1}});
  EXPECT_EQ(inverse(a), a);
  EXPECT_THROW(inverse(Matrix::from_ints(Q, {{1, 2}, {2, 4}})), SingularMatrix);
}

TEST(Matrix, ShapeAndFieldChecks) {
  EXPECT_THROW(Matrix::identity(Q, 2) * Matrix(Q, 3, 3), std::invalid_argument);
  EXPECT_THROW(Matrix::identity(Q, 2) * Matrix::identity(GF2, 2), FieldMismatch);
  const Matrix a = Matrix::from_ints(Q, {{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ(a.column(1), vec_from_ints(Q, {2, 5}));
  EXPECT_EQ(a.apply(vec_from_ints(Q, {1, 0, -1})), vec_from_ints(Q, {-2, -2}));
}

TEST(RankNormalForm, SwapOverGF2) {
  const Matrix a = Matrix::from_ints(GF2, {{0, 1}, {1, 0}});
  const RankNormalForm f = rank_normal_form(a);
  EXPECT_EQ(f.rank, 2u);
  EXPECT_EQ(f.p.transpose() * rank_normal_matrix(GF2, 2, 2, 2) * f.q, a);
}

TEST(RankNormalForm, FixedPoint) {
  for (std::size_t r = 0; r <= 3; ++r) {
    const Matrix b = rank_normal_matrix(Q, 3, 4, r);
    const RankNormalForm f = rank_normal_form(b);
    EXPECT_EQ(f.rank, r);
    EXPECT_EQ(f.p.transpose() * b * f.q, b);
  }
}

TEST(RankNormalForm, RankOneOverGF2) {
  const Matrix a = Matrix::from_ints(GF2, {{1, 1}, {0, 0}});
  const RankNormalForm f = rank_normal_form(a);
  EXPECT_EQ(f.rank, 1u);
  EXPECT_EQ(f.p, Matrix::identity(GF2, 2));
  EXPECT_EQ(f.q, Matrix::from_ints(GF2, {{1, 1}, {0, 1}}));
  EXPECT_EQ(f.p.transpose() * rank_normal_matrix(GF2, 2, 2, 1) * f.q, a);
}

TEST(RankNormalForm, ZeroMatrix) {
  const RankNormalForm f = rank_normal_form(Matrix(GF3, 2, 3));
  EXPECT_EQ(f.rank, 0u);
  EXPECT_EQ(f.p, Matrix::identity(GF3, 2));
  EXPECT_EQ(f.q, Matrix::identity(GF3, 3));
}

TEST(Kronecker, BlockStructure) {
  const Matrix a = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_ints(Q, {{0, 1}, {1, 0}});
  const Matrix k = kronecker(a, b);
  EXPECT_EQ(k, Matrix::from_ints(Q, {{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}}));
}

TEST(EchelonBasis, InsertAndContains) {
  EchelonBasis span(Q, 3);
  EXPECT_TRUE(span.contains(vec_from_ints(Q, {0, 0, 0})));
  EXPECT_TRUE(span.insert(vec_from_ints(Q, {1, 2, 3})));
  EXPECT_FALSE(span.insert(vec_from_ints(Q, {2, 4, 6})));
  EXPECT_TRUE(span.insert(vec_from_ints(Q, {0, 1, 1})));
  EXPECT_TRUE(span.contains(vec_from_ints(Q, {1, 3, 4})));
  EXPECT_FALSE(span.contains(vec_from_ints(Q, {0, 0, 1})));
  EXPECT_EQ(span.rank(), 2u);
}

// Property: rref, rank, kernel, det, inverse agree with each other and with the oracles.
TEST(LinalgProperties, RandomMatrices) {
  for (const FieldSpec& f : gen::property_fields()) {
    Rng rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t rows = gen::uniform(rng, 1, 6), cols = gen::uniform(rng, 1, 6);
      const Matrix a = gen::sparse_matrix(f, rows, cols, rng);
      const RrefResult r = rref(a);
      ASSERT_TRUE(is_rref(r));
      ASSERT_EQ(r.transform * a, r.reduced);
      ASSERT_FALSE(det(r.transform).is_zero());
      ASSERT_EQ(rank(a), r.pivots.size());
      ASSERT_EQ(rank(a), oracle::naive_rank(a));
      ASSERT_EQ(rank(r.reduced), rank(a));
      const auto k = kernel(a);
      ASSERT_EQ(k.size(), cols - rank(a));
      for (const Vec& v : k) ASSERT_TRUE(is_zero(a.apply(v)));
      if (!k.empty()) ASSERT_EQ(oracle::naive_rank(Matrix::from_rows(f, cols, k)), k.size());
    }
  }
}

TEST(LinalgProperties, DeterminantMatchesLeibniz) {
  for (const FieldSpec& f : gen::property_fields()) {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = gen::uniform(rng, 1, 5);
      const Matrix a = gen::sparse_matrix(f, n, n, rng);
      const Scalar d = det(a);
      ASSERT_EQ(d, oracle::leibniz_det(a));
      if (!d.is_zero()) {
        const Matrix inv = inverse(a);
        ASSERT_EQ(a * inv, Matrix::identity(f, n));
        ASSERT_TRUE((d * det(inv)).is_one());
      } else {
        ASSERT_THROW(inverse(a), SingularMatrix);
      }
    }
  }
}

TEST(LinalgProperties, IntegerDeterminantIsInteger) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 6);
    Matrix a(Q, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar(Q, static_cast<std::int64_t>(gen::uniform(rng, 0, 18)) - 9);
    }
    ASSERT_EQ(det(a).rational().get_den(), 1);
  }
}

TEST(LinalgProperties, RankNormalFormReconstructs) {
  for (const FieldSpec& f : {GF2, GF3, FieldSpec::prime(5), Q}) {
    Rng rng(31337);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t rows = gen::uniform(rng, 1, 6), cols = gen::uniform(rng, 1, 6);
      const Matrix a = gen::sparse_matrix(f, rows, cols, rng);
      const RankNormalForm nf = rank_normal_form(a);
      ASSERT_EQ(nf.rank, oracle::naive_rank(a));
      ASSERT_EQ(nf.p.transpose() * rank_normal_matrix(f, rows, cols, nf.rank) * nf.q, a);
      ASSERT_FALSE(det(nf.p).is_zero());
      ASSERT_FALSE(det(nf.q).is_zero());
    }
  }
}

TEST(LinalgProperties, EchelonBasisTracksRank) {
  for (const FieldSpec& f : gen::property_fields()) {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = gen::uniform(rng, 1, 6);
      EchelonBasis span(f, n);
      std::vector<Vec> rows;
      for (int k = 0; k < 8; ++k) {
        Vec v = gen::vec(f, n, rng);
        if (gen::uniform(rng, 0, 3) == 0 && !rows.empty()) {
          v = rows.front();
          for (Scalar& s : v) s *= gen::scalar(f, rng);
        }
        const std::size_t before = span.rank();
        const bool grew = span.insert(v);
        rows.push_back(v);
        const std::size_t expected = oracle::naive_rank(Matrix::from_rows(f, n, rows));
        ASSERT_EQ(span.rank(), expected);
        ASSERT_EQ(grew, expected > before);
      }
    }
  }
}

}  // namespace
}  // namespace prodbasis
