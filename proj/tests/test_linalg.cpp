#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spanbound/linalg.hpp"

using namespace spanbound;

namespace {

using Gf = PrimeField;
using QF = RationalField;
using QT = RationalFunctionField<RationalField>;

template <class F>
Matrix<F> random_matrix(const F& f, Rng& rng, std::size_t rows, std::size_t cols) {
  auto m = Matrix<F>::zeros(f, rows, cols);
  // sparse-ish entries so that rank deficiency actually happens
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng.below(3) != 0) m(i, j) = f.sample(rng, SizeBudget{1, 1, 2});
  return m;
}

Matrix<Gf> gf_matrix(std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& rows) {
  Gf f(p);
  return Matrix<Gf>::from_rows(f, rows.empty() ? 0 : rows[0].size(), rows);
}

std::size_t oracle_rank_gf(std::uint32_t p, const Matrix<Gf>& m) {
  std::vector<oracle::Vec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
  return oracle::span_dim(p, m.cols(), rows);
}

// Laplace expansion; fine for the 4x4 matrices used here.
mpq_class det(const std::vector<std::vector<mpq_class>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpq_class d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(a[0][c]) == 0) continue;
    std::vector<std::vector<mpq_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpq_class> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(row);
    }
    d += (c % 2 ? -1 : 1) * a[0][c] * det(minor);
  }
  return d;
}

// Largest k with a nonzero k x k minor.
std::size_t oracle_rank_q(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t r = m.size(), c = r ? m[0].size() : 0;
  std::size_t best = 0;
  for (std::uint32_t rm = 1; rm < (1U << r); ++rm)
    for (std::uint32_t cm = 1; cm < (1U << c); ++cm) {
      const auto k = static_cast<std::size_t>(__builtin_popcount(rm));
      if (k != static_cast<std::size_t>(__builtin_popcount(cm)) || k <= best) continue;
      std::vector<std::vector<mpq_class>> sub;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(rm >> i & 1)) continue;
        std::vector<mpq_class> row;
        for (std::size_t j = 0; j < c; ++j)
          if (cm >> j & 1) row.push_back(m[i][j]);
        sub.push_back(row);
      }
      if (sgn(det(sub)) != 0) best = k;
    }
  return best;
}

std::vector<std::vector<mpq_class>> as_rows(const Matrix<QF>& m) {
  std::vector<std::vector<mpq_class>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i].assign(m.row(i).begin(), m.row(i).end());
  return out;
}

mpq_class eval_poly(const poly::Poly<QF>& p, const mpq_class& t) {
  mpq_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
  return acc;
}

}  // namespace

TEST(Rref, Identity) {
  Gf f(2);
  auto r = rref(f, Matrix<Gf>::identity(f, 3));
  EXPECT_EQ(r.rank, 3U);
  EXPECT_EQ(r.matrix, Matrix<Gf>::identity(f, 3));
}

TEST(Rref, Zero) {
  Gf f(2);
  auto r = rref(f, Matrix<Gf>::zeros(f, 2, 4));
  EXPECT_EQ(r.rank, 0U);
  EXPECT_EQ(r.matrix, Matrix<Gf>::zeros(f, 2, 4));
}

TEST(Rref, RepeatedRow) {
  Gf f(2);
  auto r = rref(f, gf_matrix(2, {{1, 1}, {1, 1}}));
  EXPECT_EQ(r.rank, 1U);
  EXPECT_EQ(r.matrix, gf_matrix(2, {{1, 1}, {0, 0}}));
}

TEST(Solve, Identity) {
  Gf f(5);
  auto x = solve(f, Matrix<Gf>::identity(f, 2), gf_matrix(5, {{1}, {0}}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, gf_matrix(5, {{1}, {0}}));
}

TEST(Solve, Inconsistent) {
  Gf f(5);
  EXPECT_FALSE(solve(f, gf_matrix(5, {{0}}), gf_matrix(5, {{1}})));
}

TEST(Solve, ShapeMismatch) {
  Gf f(5);
  try {
    solve(f, Matrix<Gf>::identity(f, 2), gf_matrix(5, {{1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
  }
}

// All four vectors of GF(2)^2 tried against [[1,1]].
TEST(Kernel, AgainstEnumeration) {
  Gf f(2);
  const auto m = gf_matrix(2, {{1, 1}});
  auto k = kernel(f, m);
  ASSERT_EQ(k.cols(), 1U);
  EXPECT_EQ(k(0, 0), 1U);
  EXPECT_EQ(k(1, 0), 1U);
  int nonzero_solutions = 0;
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b)
      if ((a || b) && (a + b) % 2 == 0) ++nonzero_solutions;
  EXPECT_EQ(nonzero_solutions, 1);
}

TEST(Subspaces, ComplementaryLines) {
  Gf f(3);
  const auto u = gf_matrix(3, {{1, 0}}), v = gf_matrix(3, {{0, 1}});
  EXPECT_EQ(subspace_sum(f, u, v).rows(), 2U);
  EXPECT_EQ(subspace_intersect(f, u, v).rows(), 0U);
  EXPECT_EQ(subspace_sum(f, u, u), u);
  EXPECT_EQ(subspace_intersect(f, u, u), u);
}

TEST(Subspaces, PlaneMeetsDiagonal) {
  Gf f(2);
  const auto u = gf_matrix(2, {{1, 0}, {0, 1}}), v = gf_matrix(2, {{1, 1}});
  EXPECT_EQ(subspace_intersect(f, u, v), gf_matrix(2, {{1, 1}}));
}

TEST(Subspaces, DifferentAmbientDimension) {
  Gf f(2);
  try {
    subspace_sum(f, gf_matrix(2, {{1, 0}}), gf_matrix(2, {{1, 0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
  }
}

TEST(Moments, Examples) {
  Gf f3(3), f5(5);
  EXPECT_TRUE(moment_family_independence(f3, 2, {0, 1}));
  EXPECT_TRUE(moment_family_independence(f5, 3, {0, 1, 2}));
  try {
    moment_family_independence(f5, 3, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ArityMismatch);
  }
  try {
    moment_family_independence(f5, 3, {0, 1, 6});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateAlpha);
  }
}

TEST(Moments, AllDistinctFamiliesOverGF7) {
  Gf f(7);
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::uint32_t mask = 0; mask < 128; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
      std::vector<std::uint32_t> alphas;
      for (std::uint32_t a = 0; a < 7; ++a)
        if (mask >> a & 1) alphas.push_back(a);
      ASSERT_TRUE(moment_family_independence(f, n, alphas));
    }
}

TEST(FractionFree, KnownRanks) {
  QT f(QF{}, "t");
  const auto t = f.generator(), one = f.one();
  auto m = Matrix<QT>::from_rows(f, 2, {{one, t}, {t, f.mul(t, t)}});
  EXPECT_EQ(rank(f, m), 1U);
  auto n = Matrix<QT>::from_rows(f, 2, {{one, t}, {t, one}});
  EXPECT_EQ(rank(f, n), 2U);
  EXPECT_EQ(rref(f, n).matrix, Matrix<QT>::identity(f, 2));
}

TEST(Property, RankMatchesEnumerationGF) {
  Rng rng(1);
  for (std::uint32_t p : {2U, 3U, 5U}) {
    Gf f(p);
    for (int i = 0; i < 200; ++i) {
      const auto m = random_matrix(f, rng, 1 + rng.below(4), 1 + rng.below(4));
      ASSERT_EQ(rank(f, m), oracle_rank_gf(p, m));
    }
  }
}

TEST(Property, RankMatchesMinorsQ) {
  Rng rng(2);
  QF f;
  for (int i = 0; i < 200; ++i) {
    const auto m = random_matrix(f, rng, 1 + rng.below(4), 1 + rng.below(4));
    ASSERT_EQ(rank(f, m), oracle_rank_q(as_rows(m)));
  }
}

// Over Q(t) the rank equals the largest rank among specializations at
// enough points away from the poles.
TEST(Property, FractionFreeRankMatchesSpecializations) {
  Rng rng(3);
  QT f(QF{}, "t");
  for (int i = 0; i < 100; ++i) {
    const auto m = random_matrix(f, rng, 1 + rng.below(3), 1 + rng.below(3));
    std::size_t best = 0;
    for (int pt = -6; pt <= 6; ++pt) {
      std::vector<std::vector<mpq_class>> s(m.rows(), std::vector<mpq_class>(m.cols()));
      bool pole = false;
      for (std::size_t a = 0; a < m.rows() && !pole; ++a)
        for (std::size_t b = 0; b < m.cols(); ++b) {
          const auto den = eval_poly(m(a, b).den, pt);
          if (sgn(den) == 0) {
            pole = true;
            break;
          }
          s[a][b] = eval_poly(m(a, b).num, pt) / den;
        }
      if (!pole) best = std::max(best, oracle_rank_q(s));
    }
    ASSERT_EQ(rank(f, m), best);
  }
}

template <class F>
void rank_properties(const F& f, std::uint64_t seed, int count) {
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const auto m = random_matrix(f, rng, 1 + rng.below(5), 1 + rng.below(5));
    const auto r = rref(f, m);
    ASSERT_EQ(rref(f, r.matrix).matrix, r.matrix) << "rref not idempotent";
    ASSERT_EQ(r.rank, rank(f, transpose(f, m)));
    // dim(U + V) + dim(U cap V) = dim U + dim V
    const auto cols = m.cols();
    const auto u = row_basis(f, m), v = row_basis(f, random_matrix(f, rng, 1 + rng.below(4), cols));
    ASSERT_EQ(subspace_sum(f, u, v).rows() + subspace_intersect(f, u, v).rows(), u.rows() + v.rows());
    // kernel vectors are solutions, and rank + nullity = columns
    const auto k = kernel(f, m);
    ASSERT_EQ(k.cols() + r.rank, cols);
    const auto zero = multiply(f, m, k);
    for (std::size_t a = 0; a < zero.rows(); ++a)
      for (std::size_t b = 0; b < zero.cols(); ++b) ASSERT_TRUE(f.is_zero(zero(a, b)));
    // solve returns a genuine solution for a consistent right-hand side
    auto x0 = random_matrix(f, rng, cols, 1);
    const auto rhs = multiply(f, m, x0);
    const auto x = solve(f, m, rhs);
    ASSERT_TRUE(x);
    ASSERT_EQ(multiply(f, m, *x), rhs);
  }
}

TEST(Property, RankAndDimensionFormulaGF2) { rank_properties(Gf(2), 10, 500); }
TEST(Property, RankAndDimensionFormulaGF7) { rank_properties(Gf(7), 11, 500); }
TEST(Property, RankAndDimensionFormulaQ) { rank_properties(QF{}, 12, 500); }
TEST(Property, RankAndDimensionFormulaQt) { rank_properties(QT(QF{}, "t"), 13, 100); }
