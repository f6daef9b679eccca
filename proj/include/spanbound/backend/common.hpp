#pragma once

// Pieces shared by every backend. A backend R exposes:
//
//   field_type, scalar, element_type, coordinatization
//   field(), zero(), one(), from_scalar(c), add, sub, neg, mul, scale(c, a)
//   is_zero, inverse (throws), is_unit, parse, format, sample(rng, budget)
//   describe(), kind(), is_division_ring(), is_commutative(), is_separable()
//   dimension() -> optional dim_k K
//   coordinatize(elements), ambient_dim(coord), coordinates(coord, a),
//   from_coordinates(coord, values)
//
// A coordinatization is an injective k-linear map from a finite-dimensional
// subspace of K (containing the given elements) into k^d.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "spanbound/error.hpp"
#include "spanbound/expr_parser.hpp"

namespace spanbound {

enum class BackendKind { FF, EXT, RF, QUAT, GA };

inline std::string_view to_string(BackendKind k) {
  switch (k) {
    case BackendKind::FF: return "FF";
    case BackendKind::EXT: return "EXT";
    case BackendKind::RF: return "RF";
    case BackendKind::QUAT: return "QUAT";
    case BackendKind::GA: return "GA";
  }
  return "?";
}

// Coordinates in a fixed basis of a finite-dimensional K.
struct FixedCoordinatization {
  std::size_t dim = 0;
};

template <class R>
struct ElementBuilder {
  using value = typename R::element_type;
  const R& r;

  value number(const mpz_class& n) const { return r.from_scalar(r.field().from_mpz(n)); }
  std::optional<value> variable(std::string_view name) const { return r.symbol(name); }
  value basis(std::string_view text) const { return r.basis_symbol(text); }
  value add(const value& a, const value& b) const { return r.add(a, b); }
  value sub(const value& a, const value& b) const { return r.sub(a, b); }
  value mul(const value& a, const value& b) const { return r.mul(a, b); }
  value neg(const value& a) const { return r.neg(a); }
  value div(const value& a, const value& b) const { return r.mul(a, r.inverse(b)); }
  value pow(value a, unsigned e) const {
    value acc = r.one();
    while (e > 0) {
      if (e & 1U) acc = r.mul(acc, a);
      e >>= 1;
      if (e) a = r.mul(a, a);
    }
    return acc;
  }
};

[[noreturn]] inline void no_basis_symbols(std::string_view text) {
  fail(ErrorKind::SyntaxError, "basis symbol 'e[" + std::string(text) + "]' is only valid in group algebras");
}

}  // namespace spanbound
