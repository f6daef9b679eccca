#pragma once

// K = k[v]/(g) for a monic irreducible g over k. With k = GF(p) this is the FF
// backend GF(p^n); otherwise it is EXT over GF(p), Q, or a rational function
// field in s.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spanbound/backend/common.hpp"
#include "spanbound/irreducibility.hpp"
#include "spanbound/linalg.hpp"
#include "spanbound/polynomial.hpp"

namespace spanbound {

template <CoefficientField F>
class SimpleExtension {
 public:
  using field_type = F;
  using scalar = typename F::value_type;
  using element_type = std::vector<scalar>;  // exactly n coefficients, low degree first
  using coordinatization = FixedCoordinatization;

  SimpleExtension(F field, poly::Poly<F> modulus, std::string var, BackendKind kind)
      : f_(std::move(field)), var_(std::move(var)), kind_(kind) {
    poly::trim(f_, modulus);
    if (poly::degree(modulus) < 1) fail(ErrorKind::InvalidArgument, "extension modulus must be non-constant");
    g_ = poly::monic(f_, modulus);
    n_ = static_cast<std::size_t>(poly::degree(g_));
    if (n_ > 16) fail(ErrorKind::InvalidArgument, "modulus degree is limited to 16");
    check_irreducible(f_, g_);
    if (f_.characteristic() == 0 || f_.is_finite()) {
      separable_ = true;
    } else {
      auto d = poly::derivative(f_, g_);
      separable_ = !d.empty() && poly::gcd(f_, g_, d).size() == 1;
    }
  }

  const F& field() const { return f_; }
  const poly::Poly<F>& modulus() const { return g_; }
  const std::string& var() const { return var_; }
  BackendKind kind() const { return kind_; }
  bool is_division_ring() const { return true; }
  bool is_commutative() const { return true; }
  bool is_separable() const { return separable_; }
  std::optional<std::size_t> dimension() const { return n_; }

  std::string describe() const {
    if (kind_ == BackendKind::FF)
      return "FF(" + std::to_string(f_.characteristic()) + "," + poly::format(f_, g_, var_) + ")";
    return "EXT(" + f_.describe() + "," + poly::format(f_, g_, var_) + ")";
  }

  element_type zero() const { return element_type(n_, f_.zero()); }
  element_type one() const { return from_scalar(f_.one()); }
  element_type from_scalar(const scalar& c) const {
    auto e = zero();
    e[0] = c;
    return e;
  }
  element_type generator() const { return reduce(poly::monomial(f_, f_.one(), 1)); }

  element_type add(const element_type& a, const element_type& b) const {
    element_type r(n_);
    for (std::size_t i = 0; i < n_; ++i) r[i] = f_.add(a[i], b[i]);
    return r;
  }
  element_type sub(const element_type& a, const element_type& b) const {
    element_type r(n_);
    for (std::size_t i = 0; i < n_; ++i) r[i] = f_.sub(a[i], b[i]);
    return r;
  }
  element_type neg(const element_type& a) const {
    element_type r(n_);
    for (std::size_t i = 0; i < n_; ++i) r[i] = f_.neg(a[i]);
    return r;
  }
  element_type scale(const scalar& c, const element_type& a) const {
    element_type r(n_);
    for (std::size_t i = 0; i < n_; ++i) r[i] = f_.mul(c, a[i]);
    return r;
  }
  element_type mul(const element_type& a, const element_type& b) const { return reduce(poly::mul(f_, as_poly(a), as_poly(b))); }

  bool is_zero(const element_type& a) const {
    for (const auto& c : a)
      if (!f_.is_zero(c)) return false;
    return true;
  }
  bool is_unit(const element_type& a) const { return !is_zero(a); }

  element_type inverse(const element_type& a) const {
    if (is_zero(a)) fail(ErrorKind::ZeroInverse, "inverse of 0 in " + describe());
    auto [gcd, s] = poly::gcd_with_cofactor(f_, as_poly(a), g_);
    if (gcd.size() != 1) fail(ErrorKind::WitnessCheckFailed, "nonzero element without inverse; modulus is reducible");
    return reduce(std::move(s));
  }

  std::optional<element_type> symbol(std::string_view name) const {
    if (name == var_) return generator();
    if (auto c = f_.variable(name)) return from_scalar(*c);
    return std::nullopt;
  }
  element_type basis_symbol(std::string_view text) const { no_basis_symbols(text); }

  element_type parse(std::string_view text) const { return parse_expression(ElementBuilder<SimpleExtension>{*this}, text); }
  std::string format(const element_type& a) const { return poly::format(f_, as_poly(a), var_); }

  element_type sample(Rng& rng, const SizeBudget& budget) const {
    for (;;) {
      element_type e(n_);
      for (auto& c : e) c = f_.sample(rng, budget);
      if (!is_zero(e)) return e;
    }
  }

  coordinatization coordinatize(std::span<const element_type>) const { return {n_}; }
  std::size_t ambient_dim(const coordinatization&) const { return n_; }
  std::vector<scalar> coordinates(const coordinatization&, const element_type& a) const { return a; }
  element_type from_coordinates(const coordinatization&, std::span<const scalar> v) const {
    return element_type(v.begin(), v.end());
  }

  // Finite K only: |K| and the i-th element in base-p digit order (i = 0 is zero).
  std::optional<std::uint64_t> order() const
    requires std::same_as<F, PrimeField>
  {
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      if (q > (std::uint64_t{1} << 40) / f_.order()) return std::nullopt;
      q *= f_.order();
    }
    return q;
  }
  element_type element_at(std::uint64_t i) const
    requires std::same_as<F, PrimeField>
  {
    element_type e(n_);
    for (auto& c : e) {
      c = static_cast<scalar>(i % f_.order());
      i /= f_.order();
    }
    return e;
  }

  // Basis of the subfield GF(p^d) = {v : v^(p^d) = v}; d must divide n.
  std::vector<element_type> subfield_basis(std::size_t d) const
    requires std::same_as<F, PrimeField>
  {
    if (d == 0 || n_ % d != 0) fail(ErrorKind::InvalidArgument, "subfield degree must divide the extension degree");
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), f_.modulus(), d);
    auto t = Matrix<F>::zeros(f_, n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      auto image = pad(poly::powmod(f_, poly::monomial(f_, f_.one(), i), q, g_));
      image[i] = f_.sub(image[i], f_.one());
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = image[j];
    }
    auto k = kernel(f_, t);
    std::vector<element_type> out;
    for (std::size_t c = 0; c < k.cols(); ++c) {
      element_type e(n_);
      for (std::size_t j = 0; j < n_; ++j) e[j] = k(j, c);
      out.push_back(std::move(e));
    }
    return out;
  }

  bool operator==(const SimpleExtension& o) const { return describe() == o.describe(); }

 private:
  poly::Poly<F> as_poly(const element_type& a) const {
    poly::Poly<F> p(a.begin(), a.end());
    poly::trim(f_, p);
    return p;
  }
  element_type pad(poly::Poly<F> p) const {
    p.resize(n_, f_.zero());
    return p;
  }
  element_type reduce(const poly::Poly<F>& p) const { return pad(poly::mod(f_, p, g_)); }

  F f_;
  poly::Poly<F> g_;
  std::string var_;
  BackendKind kind_;
  std::size_t n_ = 0;
  bool separable_ = true;
};

}  // namespace spanbound
