#pragma once

// Exact dense linear algebra over a coefficient field.

#include <algorithm>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "spanbound/error.hpp"
#include "spanbound/fields.hpp"
#include "spanbound/rational_function_field.hpp"

namespace spanbound {

template <CoefficientField F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const value_type& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix zeros(const F& f, std::size_t rows, std::size_t cols) { return Matrix(rows, cols, f.zero()); }
  static Matrix identity(const F& f, std::size_t n) {
    Matrix m = zeros(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }
  static Matrix from_rows(const F& f, std::size_t cols, const std::vector<std::vector<value_type>>& rows) {
    Matrix m = zeros(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) fail(ErrorKind::ShapeMismatch, "ragged row in matrix literal");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<value_type> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void append_row(std::span<const value_type> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) fail(ErrorKind::ShapeMismatch, "row length differs from column count");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
  }

  // Keeps the first n rows.
  void truncate_rows(std::size_t n) {
    rows_ = std::min(rows_, n);
    data_.resize(rows_ * cols_);
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

template <CoefficientField F>
struct RrefResult {
  Matrix<F> matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

template <class F>
struct is_rational_function_field : std::false_type {};
template <class B>
struct is_rational_function_field<RationalFunctionField<B>> : std::true_type {};

namespace detail {

template <CoefficientField F>
RrefResult<F> rref_gauss_jordan(const F& f, Matrix<F> m) {
  RrefResult<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.matrix = std::move(m);
  return out;
}

// Division-deferred elimination over Base(s): rows are cleared to primitive polynomial
// rows, eliminated with cross-multiplication, and divided by their pivots once at the end.
template <CoefficientField Base>
RrefResult<RationalFunctionField<Base>> rref_fraction_free(const RationalFunctionField<Base>& f,
                                                           const Matrix<RationalFunctionField<Base>>& m) {
  using P = poly::Poly<Base>;
  const Base& b = f.base();
  const std::size_t rows = m.rows(), cols = m.cols();

  auto make_primitive = [&](std::vector<P>& row) {
    P g;
    for (const auto& e : row)
      if (!e.empty()) g = g.empty() ? poly::monic(b, e) : poly::gcd(b, g, e);
    if (g.size() > 1)
      for (auto& e : row) e = poly::divmod(b, e, g).first;
  };

  std::vector<std::vector<P>> a(rows, std::vector<P>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    P l{b.one()};
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& d = m(i, j).den;
      auto g = poly::gcd(b, l, d);
      l = poly::divmod(b, poly::mul(b, l, d), g).first;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& e = m(i, j);
      a[i][j] = poly::mul(b, e.num, poly::divmod(b, l, e.den).first);
    }
    make_primitive(a[i]);
  }

  RrefResult<RationalFunctionField<Base>> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].empty()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].empty()) continue;
      P piv = a[r][c], factor = a[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] = poly::sub(b, poly::mul(b, piv, a[i][j]), poly::mul(b, factor, a[r][j]));
      make_primitive(a[i]);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.matrix = Matrix<RationalFunctionField<Base>>::zeros(f, rows, cols);
  for (std::size_t i = 0; i < r; ++i) {
    const P& piv = a[i][out.pivots[i]];
    for (std::size_t j = 0; j < cols; ++j)
      if (!a[i][j].empty()) out.matrix(i, j) = f.make(a[i][j], piv);
  }
  return out;
}

}  // namespace detail

// Reduced row echelon form with leftmost-column, lowest-row pivoting.
template <CoefficientField F>
RrefResult<F> rref(const F& f, Matrix<F> m) {
  if constexpr (is_rational_function_field<F>::value)
    return detail::rref_fraction_free(f, m);
  else
    return detail::rref_gauss_jordan(f, std::move(m));
}

template <CoefficientField F>
std::size_t rank(const F& f, Matrix<F> m) {
  return rref(f, std::move(m)).rank;
}

template <CoefficientField F>
Matrix<F> transpose(const F& f, const Matrix<F>& m) {
  auto t = Matrix<F>::zeros(f, m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

template <CoefficientField F>
Matrix<F> multiply(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::ShapeMismatch, "matrix product with incompatible shapes");
  auto c = Matrix<F>::zeros(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
    }
  return c;
}

// Nonzero rows of the rref: the canonical basis of the row space.
template <CoefficientField F>
Matrix<F> row_basis(const F& f, Matrix<F> m) {
  auto r = rref(f, std::move(m));
  r.matrix.truncate_rows(r.rank);
  return std::move(r.matrix);
}

// Columns of the result form a basis of {x : m x = 0}.
template <CoefficientField F>
Matrix<F> kernel(const F& f, const Matrix<F>& m) {
  auto r = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  auto k = Matrix<F>::zeros(f, m.cols(), free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    k(free_cols[t], t) = f.one();
    for (std::size_t i = 0; i < r.rank; ++i) k(r.pivots[i], t) = f.neg(r.matrix(i, free_cols[t]));
  }
  return k;
}

// One particular solution x of m x = rhs, or nullopt when inconsistent.
template <CoefficientField F>
std::optional<Matrix<F>> solve(const F& f, const Matrix<F>& m, const Matrix<F>& rhs) {
  if (m.rows() != rhs.rows()) fail(ErrorKind::ShapeMismatch, "solve: rhs row count differs from matrix");
  auto aug = Matrix<F>::zeros(f, m.rows(), m.cols() + rhs.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    for (std::size_t j = 0; j < rhs.cols(); ++j) aug(i, m.cols() + j) = rhs(i, j);
  }
  auto r = rref(f, std::move(aug));
  for (auto c : r.pivots)
    if (c >= m.cols()) return std::nullopt;
  auto x = Matrix<F>::zeros(f, m.cols(), rhs.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(r.pivots[i], j) = r.matrix(i, m.cols() + j);
  return x;
}

template <CoefficientField F>
Matrix<F> stack(const F& f, const Matrix<F>& u, const Matrix<F>& v) {
  if (u.cols() != v.cols()) fail(ErrorKind::ShapeMismatch, "subspaces live in ambient spaces of different dimension");
  auto s = Matrix<F>::zeros(f, 0, u.cols());
  for (std::size_t i = 0; i < u.rows(); ++i) s.append_row(u.row(i));
  for (std::size_t i = 0; i < v.rows(); ++i) s.append_row(v.row(i));
  return s;
}

// Bases are given as rows; results are canonical row bases.
template <CoefficientField F>
Matrix<F> subspace_sum(const F& f, const Matrix<F>& u, const Matrix<F>& v) {
  return row_basis(f, stack(f, u, v));
}

template <CoefficientField F>
Matrix<F> subspace_intersect(const F& f, const Matrix<F>& u, const Matrix<F>& v) {
  auto ub = row_basis(f, u);
  auto vb = row_basis(f, v);
  auto s = stack(f, ub, vb);
  // (a, b) with a*U + b*V = 0 gives a*U in the intersection.
  auto left_null = kernel(f, transpose(f, s));
  auto meet = Matrix<F>::zeros(f, left_null.cols(), s.cols());
  for (std::size_t t = 0; t < left_null.cols(); ++t)
    for (std::size_t i = 0; i < ub.rows(); ++i) {
      const auto& coef = left_null(i, t);
      if (f.is_zero(coef)) continue;
      for (std::size_t j = 0; j < s.cols(); ++j) meet(t, j) = f.add(meet(t, j), f.mul(coef, ub(i, j)));
    }
  auto result = row_basis(f, std::move(meet));
  const auto sum_dim = rank(f, s);
  if (sum_dim + result.rows() != ub.rows() + vb.rows())
    fail(ErrorKind::WitnessCheckFailed, "dimension formula violated by subspace intersection");
  return result;
}

// Whether the n moment vectors (1, a, a^2, ..., a^(n-1)) are linearly independent.
template <CoefficientField F>
bool moment_family_independence(const F& f, std::size_t n, const std::vector<typename F::value_type>& alphas) {
  if (alphas.size() != n)
    fail(ErrorKind::ArityMismatch, "expected " + std::to_string(n) + " alphas, got " + std::to_string(alphas.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (f.is_zero(f.sub(alphas[i], alphas[j]))) fail(ErrorKind::DuplicateAlpha, "alpha values must be distinct");
  auto m = Matrix<F>::zeros(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto pw = f.one();
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = pw;
      pw = f.mul(pw, alphas[i]);
    }
  }
  return rank(f, std::move(m)) == n;
}

}  // namespace spanbound
