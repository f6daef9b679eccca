#pragma once

// Rational Hamilton quaternions (-1,-1)_Q with basis 1, i, j, k.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spanbound/backend/common.hpp"
#include "spanbound/fields.hpp"
#include "spanbound/format.hpp"

namespace spanbound {

class Quaternions {
 public:
  using field_type = RationalField;
  using scalar = mpq_class;
  using element_type = std::array<mpq_class, 4>;
  using coordinatization = FixedCoordinatization;

  const RationalField& field() const { return q_; }
  BackendKind kind() const { return BackendKind::QUAT; }
  bool is_division_ring() const { return true; }
  bool is_commutative() const { return false; }
  bool is_separable() const { return true; }
  std::optional<std::size_t> dimension() const { return 4; }
  std::string describe() const { return "QUAT"; }

  element_type zero() const { return {0, 0, 0, 0}; }
  element_type one() const { return {1, 0, 0, 0}; }
  element_type from_scalar(const scalar& c) const { return {c, 0, 0, 0}; }
  element_type unit(int which) const {
    element_type e = zero();
    e[static_cast<std::size_t>(which)] = 1;
    return e;
  }

  element_type add(const element_type& a, const element_type& b) const {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
  }
  element_type sub(const element_type& a, const element_type& b) const {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
  }
  element_type neg(const element_type& a) const { return {-a[0], -a[1], -a[2], -a[3]}; }
  element_type scale(const scalar& c, const element_type& a) const { return {c * a[0], c * a[1], c * a[2], c * a[3]}; }
  element_type mul(const element_type& a, const element_type& b) const {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
  }
  mpq_class norm(const element_type& a) const { return a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]; }
  element_type conjugate(const element_type& a) const { return {a[0], -a[1], -a[2], -a[3]}; }

  bool is_zero(const element_type& a) const { return sgn(a[0]) == 0 && sgn(a[1]) == 0 && sgn(a[2]) == 0 && sgn(a[3]) == 0; }
  bool is_unit(const element_type& a) const { return !is_zero(a); }
  element_type inverse(const element_type& a) const {
    if (is_zero(a)) fail(ErrorKind::ZeroInverse, "inverse of 0 in QUAT");
    mpq_class n = 1 / norm(a);
    return scale(n, conjugate(a));
  }

  std::optional<element_type> symbol(std::string_view name) const {
    if (name == "i") return unit(1);
    if (name == "j") return unit(2);
    if (name == "k") return unit(3);
    return std::nullopt;
  }
  element_type basis_symbol(std::string_view text) const { no_basis_symbols(text); }
  element_type parse(std::string_view text) const { return parse_expression(ElementBuilder<Quaternions>{*this}, text); }
  std::string format(const element_type& a) const {
    static const char* names[4] = {"", "i", "j", "k"};
    TermWriter w;
    for (int i = 0; i < 4; ++i)
      if (sgn(a[static_cast<std::size_t>(i)]) != 0) w.add(a[static_cast<std::size_t>(i)].get_str(), names[i]);
    return w.str();
  }

  element_type sample(Rng& rng, const SizeBudget& budget) const {
    for (;;) {
      element_type e;
      for (auto& c : e) c = rng.coin() ? q_.sample(rng, budget) : mpq_class(0);
      if (!is_zero(e)) return e;
    }
  }

  coordinatization coordinatize(std::span<const element_type>) const { return {4}; }
  std::size_t ambient_dim(const coordinatization&) const { return 4; }
  std::vector<scalar> coordinates(const coordinatization&, const element_type& a) const { return {a.begin(), a.end()}; }
  element_type from_coordinates(const coordinatization&, std::span<const scalar> v) const { return {v[0], v[1], v[2], v[3]}; }

  bool operator==(const Quaternions&) const { return true; }

 private:
  RationalField q_;
};

}  // namespace spanbound
