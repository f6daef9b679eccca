#pragma once

// Exact coefficient fields: GF(p) and the rationals. Rational function fields
// over either live in rational_function_field.hpp.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "spanbound/error.hpp"
#include "spanbound/rng.hpp"

namespace spanbound {

template <class F>
concept CoefficientField = requires(const F& f, const typename F::value_type& a, Rng& rng) {
  typename F::value_type;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(std::int64_t{1}) } -> std::same_as<typename F::value_type>;
  { f.add(a, a) } -> std::same_as<typename F::value_type>;
  { f.sub(a, a) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  { f.mul(a, a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.format(a) } -> std::convertible_to<std::string>;
  { f.describe() } -> std::convertible_to<std::string>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.is_finite() } -> std::convertible_to<bool>;
  { f.sample(rng, SizeBudget{}) } -> std::same_as<typename F::value_type>;
};

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p > (1U << 31) || !is_prime(p)) fail(ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint64_t characteristic() const { return p_; }
  std::uint32_t modulus() const { return p_; }
  bool is_finite() const { return true; }
  std::uint64_t order() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type from_mpz(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<value_type>(r.get_ui());
  }
  // i-th element in the canonical enumeration 0, 1, ..., p-1
  value_type element(std::uint64_t i) const { return static_cast<value_type>(i); }

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const { return static_cast<value_type>((std::uint64_t{a} * b) % p_); }
  value_type inv(value_type a) const;
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }

  std::string format(value_type a) const { return std::to_string(a); }
  std::string describe() const { return "GF(" + std::to_string(p_) + ")"; }
  std::optional<value_type> variable(std::string_view) const { return std::nullopt; }

  value_type sample(Rng& rng, const SizeBudget&) const { return static_cast<value_type>(rng.below(p_)); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using value_type = mpq_class;

  std::uint64_t characteristic() const { return 0; }
  bool is_finite() const { return false; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return mpq_class(mpz_class(static_cast<long>(v))); }
  value_type from_mpz(const mpz_class& v) const { return mpq_class(v); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) fail(ErrorKind::ZeroInverse, "inverse of 0 in Q");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  std::string format(const value_type& a) const { return a.get_str(); }
  std::string describe() const { return "Q"; }
  std::optional<value_type> variable(std::string_view) const { return std::nullopt; }

  value_type sample(Rng& rng, const SizeBudget& budget) const {
    const int c = budget.coeff < 1 ? 1 : budget.coeff;
    mpq_class q(mpz_class(static_cast<long>(rng.between(-c, c))), mpz_class(static_cast<long>(rng.between(1, c))));
    q.canonicalize();
    return q;
  }

  bool operator==(const RationalField&) const = default;
};

// Parses "a" or "a/b" with integers a, b; used for exact parameters (epsilon, lambda).
mpq_class parse_rational(std::string_view text);

}  // namespace spanbound
