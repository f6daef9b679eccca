#pragma once

// K = k0(t), k = k0. Elements are reduced fractions; spans are coordinatized by
// the numerators of v*D over a common monic denominator D.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spanbound/backend/common.hpp"
#include "spanbound/rational_function_field.hpp"

namespace spanbound {

template <CoefficientField F>
class FunctionField {
 public:
  using field_type = F;
  using scalar = typename F::value_type;
  using element_type = RatFn<F>;
  struct coordinatization {
    poly::Poly<F> denominator;
    std::size_t length = 0;
  };

  explicit FunctionField(F base) : f_(base), rf_(std::move(base), "t") {}

  const F& field() const { return f_; }
  const RationalFunctionField<F>& functions() const { return rf_; }
  BackendKind kind() const { return BackendKind::RF; }
  bool is_division_ring() const { return true; }
  bool is_commutative() const { return true; }
  // k0 is algebraically closed in k0(t), so every algebraic element lies in k0.
  bool is_separable() const { return true; }
  std::optional<std::size_t> dimension() const { return std::nullopt; }
  std::string describe() const { return "RF(" + f_.describe() + ")"; }

  element_type zero() const { return rf_.zero(); }
  element_type one() const { return rf_.one(); }
  element_type from_scalar(const scalar& c) const { return rf_.from_base(c); }
  element_type generator() const { return rf_.generator(); }
  element_type add(const element_type& a, const element_type& b) const { return rf_.add(a, b); }
  element_type sub(const element_type& a, const element_type& b) const { return rf_.sub(a, b); }
  element_type neg(const element_type& a) const { return rf_.neg(a); }
  element_type mul(const element_type& a, const element_type& b) const { return rf_.mul(a, b); }
  element_type scale(const scalar& c, const element_type& a) const { return rf_.mul(rf_.from_base(c), a); }
  bool is_zero(const element_type& a) const { return rf_.is_zero(a); }
  bool is_unit(const element_type& a) const { return !rf_.is_zero(a); }
  element_type inverse(const element_type& a) const { return rf_.inv(a); }

  std::optional<element_type> symbol(std::string_view name) const { return rf_.variable(name); }
  element_type basis_symbol(std::string_view text) const { no_basis_symbols(text); }
  element_type parse(std::string_view text) const { return parse_expression(ElementBuilder<FunctionField>{*this}, text); }
  std::string format(const element_type& a) const { return rf_.format(a); }

  element_type sample(Rng& rng, const SizeBudget& budget) const {
    for (;;) {
      auto e = rf_.sample(rng, budget);
      if (!rf_.is_zero(e)) return e;
    }
  }

  coordinatization coordinatize(std::span<const element_type> elems) const {
    coordinatization c{{f_.one()}, 1};
    for (const auto& e : elems) {
      auto g = poly::gcd(f_, c.denominator, e.den);
      c.denominator = poly::divmod(f_, poly::mul(f_, c.denominator, e.den), g).first;
    }
    for (const auto& e : elems) {
      auto n = scaled_numerator(c.denominator, e);
      c.length = std::max(c.length, n.size());
    }
    return c;
  }
  std::size_t ambient_dim(const coordinatization& c) const { return c.length; }
  std::vector<scalar> coordinates(const coordinatization& c, const element_type& a) const {
    auto n = scaled_numerator(c.denominator, a);
    if (n.size() > c.length) fail(ErrorKind::ShapeMismatch, "element lies outside the coordinatized space");
    n.resize(c.length, f_.zero());
    return n;
  }
  element_type from_coordinates(const coordinatization& c, std::span<const scalar> v) const {
    return rf_.make(poly::Poly<F>(v.begin(), v.end()), c.denominator);
  }

  bool operator==(const FunctionField& o) const { return describe() == o.describe(); }

 private:
  // a * D as a polynomial; requires a.den | D.
  poly::Poly<F> scaled_numerator(const poly::Poly<F>& d, const element_type& a) const {
    auto [q, r] = poly::divmod(f_, d, a.den);
    if (!r.empty()) fail(ErrorKind::ShapeMismatch, "denominator does not divide the common denominator");
    return poly::mul(f_, a.num, q);
  }

  F f_;
  RationalFunctionField<F> rf_;
};

}  // namespace spanbound
