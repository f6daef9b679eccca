#pragma once

#include <string>
#include <utility>

#include "spanbound/fields.hpp"
#include "spanbound/polynomial.hpp"

namespace spanbound {

// num/den over a base field. Canonical: den monic, gcd(num, den) = 1, zero is 0/1.
template <CoefficientField Base>
struct RatFn {
  poly::Poly<Base> num;
  poly::Poly<Base> den;

  bool operator==(const RatFn&) const = default;
};

// The rational function field Base(var) in one indeterminate.
template <CoefficientField Base>
class RationalFunctionField {
 public:
  using value_type = RatFn<Base>;
  using base_field = Base;
  using poly_type = poly::Poly<Base>;

  RationalFunctionField(Base base, std::string var) : base_(std::move(base)), var_(std::move(var)) {}

  const Base& base() const { return base_; }
  const std::string& var() const { return var_; }
  std::uint64_t characteristic() const { return base_.characteristic(); }
  bool is_finite() const { return false; }

  value_type make(poly_type num, poly_type den) const {
    poly::trim(base_, num);
    poly::trim(base_, den);
    if (den.empty()) fail(ErrorKind::ZeroDenominator, "rational function with zero denominator");
    if (num.empty()) return zero();
    auto g = poly::gcd(base_, num, den);
    if (g.size() > 1) {
      num = poly::divmod(base_, num, g).first;
      den = poly::divmod(base_, den, g).first;
    }
    auto lc_inv = base_.inv(den.back());
    return {poly::scale(base_, num, lc_inv), poly::scale(base_, den, lc_inv)};
  }

  value_type zero() const { return {{}, {base_.one()}}; }
  value_type one() const { return {{base_.one()}, {base_.one()}}; }
  value_type from_int(std::int64_t v) const { return {poly::constant(base_, base_.from_int(v)), {base_.one()}}; }
  value_type from_mpz(const mpz_class& v) const { return {poly::constant(base_, base_.from_mpz(v)), {base_.one()}}; }
  value_type from_base(const typename Base::value_type& c) const { return {poly::constant(base_, c), {base_.one()}}; }
  value_type from_poly(poly_type p) const { return make(std::move(p), {base_.one()}); }
  value_type generator() const { return {poly::monomial(base_, base_.one(), 1), {base_.one()}}; }

  value_type add(const value_type& a, const value_type& b) const {
    if (a.den == b.den) return make(poly::add(base_, a.num, b.num), a.den);
    return make(poly::add(base_, poly::mul(base_, a.num, b.den), poly::mul(base_, b.num, a.den)),
                poly::mul(base_, a.den, b.den));
  }
  value_type neg(const value_type& a) const { return {poly::neg(base_, a.num), a.den}; }
  value_type sub(const value_type& a, const value_type& b) const { return add(a, neg(b)); }
  value_type mul(const value_type& a, const value_type& b) const {
    if (a.num.empty() || b.num.empty()) return zero();
    return make(poly::mul(base_, a.num, b.num), poly::mul(base_, a.den, b.den));
  }
  value_type inv(const value_type& a) const {
    if (a.num.empty()) fail(ErrorKind::ZeroInverse, "inverse of 0 in " + describe());
    return make(a.den, a.num);
  }
  bool is_zero(const value_type& a) const { return a.num.empty(); }
  bool is_one(const value_type& a) const { return a == one(); }

  std::string format(const value_type& a) const {
    auto n = poly::format(base_, a.num, var_);
    if (a.den.size() == 1) return n;
    auto d = poly::format(base_, a.den, var_);
    return "(" + n + ")/(" + d + ")";
  }
  std::string describe() const { return base_.describe() + "(" + var_ + ")"; }
  std::optional<value_type> variable(std::string_view name) const {
    if (name == var_) return generator();
    return std::nullopt;
  }

  poly_type random_poly(Rng& rng, const SizeBudget& budget, bool nonzero) const {
    const int deg = budget.degree < 0 ? 0 : budget.degree;
    for (;;) {
      poly_type p;
      int d = static_cast<int>(rng.between(0, deg));
      for (int i = 0; i <= d; ++i) p.push_back(base_.sample(rng, budget));
      poly::trim(base_, p);
      if (!nonzero || !p.empty()) return p;
    }
  }

  value_type sample(Rng& rng, const SizeBudget& budget) const {
    auto num = random_poly(rng, budget, false);
    auto den = random_poly(rng, budget, true);
    return make(std::move(num), std::move(den));
  }

  bool operator==(const RationalFunctionField&) const = default;

 private:
  Base base_;
  std::string var_;
};

}  // namespace spanbound
