#pragma once

// Dense univariate polynomials over a coefficient field, lowest degree first.
// The zero polynomial is the empty vector; all results are trimmed.

#include <string>
#include <utility>
#include <vector>

#include "spanbound/error.hpp"
#include "spanbound/fields.hpp"
#include "spanbound/format.hpp"

namespace spanbound::poly {

template <CoefficientField F>
using Poly = std::vector<typename F::value_type>;

template <CoefficientField F>
void trim(const F& f, Poly<F>& p) {
  while (!p.empty() && f.is_zero(p.back())) p.pop_back();
}

template <class P>
int degree(const P& p) {
  return static_cast<int>(p.size()) - 1;
}

template <CoefficientField F>
Poly<F> constant(const F& f, const typename F::value_type& c) {
  if (f.is_zero(c)) return {};
  return {c};
}

template <CoefficientField F>
Poly<F> monomial(const F& f, const typename F::value_type& c, std::size_t deg) {
  if (f.is_zero(c)) return {};
  Poly<F> p(deg + 1, f.zero());
  p[deg] = c;
  return p;
}

template <CoefficientField F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(f, r);
  return r;
}

template <CoefficientField F>
Poly<F> neg(const F& f, const Poly<F>& a) {
  Poly<F> r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(f.neg(c));
  return r;
}

template <CoefficientField F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  return add(f, a, neg(f, b));
}

template <CoefficientField F>
Poly<F> scale(const F& f, const Poly<F>& a, const typename F::value_type& c) {
  if (f.is_zero(c)) return {};
  Poly<F> r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(f.mul(x, c));
  trim(f, r);
  return r;
}

template <CoefficientField F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

// Returns (quotient, remainder); b must be nonzero.
template <CoefficientField F>
std::pair<Poly<F>, Poly<F>> divmod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (b.empty()) fail(ErrorKind::ZeroDenominator, "polynomial division by zero");
  Poly<F> rem = a;
  if (rem.size() < b.size()) return {Poly<F>{}, rem};
  Poly<F> quot(rem.size() - b.size() + 1, f.zero());
  const auto lead_inv = f.inv(b.back());
  for (std::size_t k = rem.size(); k-- >= b.size();) {
    if (f.is_zero(rem[k])) continue;
    auto q = f.mul(rem[k], lead_inv);
    std::size_t shift = k + 1 - b.size();
    quot[shift] = q;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = f.sub(rem[shift + j], f.mul(q, b[j]));
  }
  trim(f, quot);
  trim(f, rem);
  return {std::move(quot), std::move(rem)};
}

template <CoefficientField F>
Poly<F> mod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  return divmod(f, a, b).second;
}

template <CoefficientField F>
Poly<F> monic(const F& f, const Poly<F>& a) {
  if (a.empty()) return a;
  return scale(f, a, f.inv(a.back()));
}

// Monic gcd (zero when both inputs are zero).
template <CoefficientField F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!b.empty()) {
    auto r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

// Returns (g, s) with g = gcd(a, m) monic and s*a == g (mod m).
template <CoefficientField F>
std::pair<Poly<F>, Poly<F>> gcd_with_cofactor(const F& f, const Poly<F>& a, const Poly<F>& m) {
  Poly<F> r0 = m, r1 = mod(f, a, m);
  Poly<F> s0{}, s1 = constant(f, f.one());
  while (!r1.empty()) {
    auto [q, r2] = divmod(f, r0, r1);
    auto s2 = sub(f, s0, mul(f, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.empty()) return {r0, s0};
  auto lead_inv = f.inv(r0.back());
  return {scale(f, r0, lead_inv), scale(f, s0, lead_inv)};
}

template <CoefficientField F>
Poly<F> derivative(const F& f, const Poly<F>& a) {
  Poly<F> r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(f.mul(a[i], f.from_int(static_cast<std::int64_t>(i))));
  trim(f, r);
  return r;
}

template <CoefficientField F>
typename F::value_type eval(const F& f, const Poly<F>& a, const typename F::value_type& x) {
  auto acc = f.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

template <CoefficientField F>
Poly<F> mulmod(const F& f, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return mod(f, mul(f, a, b), m);
}

template <CoefficientField F>
Poly<F> powmod(const F& f, Poly<F> base, mpz_class e, const Poly<F>& m) {
  Poly<F> result = mod(f, constant(f, f.one()), m);
  base = mod(f, base, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mulmod(f, result, base, m);
    base = mulmod(f, base, base, m);
    e >>= 1;
  }
  return result;
}

template <CoefficientField F>
Poly<F> pow(const F& f, const Poly<F>& base, unsigned e) {
  Poly<F> result = constant(f, f.one());
  for (unsigned i = 0; i < e; ++i) result = mul(f, result, base);
  return result;
}

template <CoefficientField F>
std::string format(const F& f, const Poly<F>& a, const std::string& var) {
  TermWriter w;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (f.is_zero(a[i])) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    w.add(f.format(a[i]), mono);
  }
  return w.str();
}

}  // namespace spanbound::poly
