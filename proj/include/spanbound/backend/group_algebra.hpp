#pragma once

// The group algebra k0[G] with basis e_g and e_g e_h = e_{gh}. Elements are
// finitely supported maps stored as sorted (g, c) pairs with c != 0.

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spanbound/backend/common.hpp"
#include "spanbound/format.hpp"
#include "spanbound/group.hpp"
#include "spanbound/linalg.hpp"

namespace spanbound {

template <CoefficientField F>
class GroupAlgebra {
 public:
  using field_type = F;
  using scalar = typename F::value_type;
  using element_type = std::vector<std::pair<GroupElement, scalar>>;
  struct coordinatization {
    std::vector<GroupElement> basis;  // sorted
  };

  GroupAlgebra(F field, GroupPtr group) : f_(std::move(field)), g_(std::move(group)) {
    const auto p = f_.characteristic();
    const auto t = g_->torsion_order();
    if (p != 0 && t % p == 0)
      fail(ErrorKind::UnsupportedGroupCharacteristic,
           "characteristic " + std::to_string(p) + " divides the torsion order " + std::to_string(t) + " of " + g_->describe());
    if (g_->is_finite() && *g_->order() > 256) fail(ErrorKind::InvalidGroup, "group algebras are limited to order 256");
    if (g_->is_finite()) all_ = g_->elements();
  }

  const F& field() const { return f_; }
  const Group& group() const { return *g_; }
  const GroupPtr& group_ptr() const { return g_; }
  BackendKind kind() const { return BackendKind::GA; }
  bool is_division_ring() const { return g_->is_finite() && *g_->order() == 1; }
  bool is_commutative() const { return g_->is_abelian(); }
  bool is_separable() const { return true; }
  std::optional<std::size_t> dimension() const {
    if (g_->is_finite()) return static_cast<std::size_t>(*g_->order());
    return std::nullopt;
  }
  std::string describe() const { return "GA(" + f_.describe() + "," + g_->describe() + ")"; }

  element_type zero() const { return {}; }
  element_type one() const { return basis_element(g_->identity()); }
  element_type from_scalar(const scalar& c) const { return monomial(g_->identity(), c); }
  element_type basis_element(const GroupElement& g) const { return monomial(g, f_.one()); }
  element_type monomial(const GroupElement& g, const scalar& c) const {
    if (f_.is_zero(c)) return {};
    return {{g, c}};
  }

  element_type add(const element_type& a, const element_type& b) const {
    element_type r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        r.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        r.push_back(b[j++]);
      } else {
        auto c = f_.add(a[i].second, b[j].second);
        if (!f_.is_zero(c)) r.emplace_back(a[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }
  element_type neg(const element_type& a) const {
    element_type r = a;
    for (auto& t : r) t.second = f_.neg(t.second);
    return r;
  }
  element_type sub(const element_type& a, const element_type& b) const { return add(a, neg(b)); }
  element_type scale(const scalar& c, const element_type& a) const {
    if (f_.is_zero(c)) return {};
    element_type r = a;
    for (auto& t : r) t.second = f_.mul(c, t.second);
    return r;
  }
  element_type mul(const element_type& a, const element_type& b) const {
    std::map<GroupElement, scalar> acc;
    for (const auto& [g, c] : a)
      for (const auto& [h, d] : b) {
        auto gh = g_->mul(g, h);
        auto it = acc.find(gh);
        if (it == acc.end())
          acc.emplace(std::move(gh), f_.mul(c, d));
        else
          it->second = f_.add(it->second, f_.mul(c, d));
      }
    element_type r;
    for (auto& [g, c] : acc)
      if (!f_.is_zero(c)) r.emplace_back(g, std::move(c));
    return r;
  }

  bool is_zero(const element_type& a) const { return a.empty(); }
  bool is_monomial(const element_type& a) const { return a.size() == 1; }

  // Units over infinite G are recognized only as monomials c*e_g.
  bool is_unit(const element_type& a) const {
    if (a.empty()) return false;
    if (a.size() == 1) return true;
    if (!g_->is_finite()) return false;
    return rank(f_, left_multiplication(a)) == all_.size();
  }

  element_type inverse(const element_type& a) const {
    if (a.empty()) fail(ErrorKind::ZeroInverse, "inverse of 0 in " + describe());
    if (a.size() == 1) return monomial(g_->inverse(a[0].first), f_.inv(a[0].second));
    if (!g_->is_finite())
      fail(ErrorKind::UnsupportedInverse, "inverse of a non-monomial element over the infinite group " + g_->describe());
    auto l = left_multiplication(a);
    auto rhs = Matrix<F>::zeros(f_, all_.size(), 1);
    rhs(0, 0) = f_.one();  // identity has index 0
    auto x = solve(f_, l, rhs);
    if (!x) fail(ErrorKind::NotAUnit, format(a) + " is not a unit in " + describe());
    element_type r;
    for (std::size_t i = 0; i < all_.size(); ++i)
      if (!f_.is_zero((*x)(i, 0))) r.emplace_back(all_[i], (*x)(i, 0));
    return r;
  }

  std::optional<element_type> symbol(std::string_view) const { return std::nullopt; }
  element_type basis_symbol(std::string_view text) const { return basis_element(g_->parse_element(text)); }
  element_type parse(std::string_view text) const { return parse_expression(ElementBuilder<GroupAlgebra>{*this}, text); }
  std::string format(const element_type& a) const {
    TermWriter w;
    for (const auto& [g, c] : a) w.add(f_.format(c), "e[" + g_->format(g) + "]");
    return w.str();
  }

  element_type sample(Rng& rng, const SizeBudget& budget) const {
    const int support = std::max(1, budget.support);
    const int radius = std::max(1, budget.degree);
    for (;;) {
      auto s = static_cast<int>(rng.between(1, support));
      element_type e;
      for (int i = 0; i < s; ++i) {
        scalar c = f_.sample(rng, budget);
        if (f_.is_zero(c)) c = f_.one();
        e = add(e, monomial(g_->sample(rng, radius), c));
      }
      if (!e.empty()) return e;
    }
  }

  coordinatization coordinatize(std::span<const element_type> elems) const {
    if (g_->is_finite()) return {all_};
    std::vector<GroupElement> basis;
    for (const auto& e : elems)
      for (const auto& t : e) basis.push_back(t.first);
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    return {std::move(basis)};
  }
  std::size_t ambient_dim(const coordinatization& c) const { return c.basis.size(); }
  std::vector<scalar> coordinates(const coordinatization& c, const element_type& a) const {
    std::vector<scalar> v(c.basis.size(), f_.zero());
    for (const auto& [g, coef] : a) {
      auto it = std::lower_bound(c.basis.begin(), c.basis.end(), g);
      if (it == c.basis.end() || *it != g) fail(ErrorKind::ShapeMismatch, "support outside the coordinatized group elements");
      v[static_cast<std::size_t>(it - c.basis.begin())] = coef;
    }
    return v;
  }
  element_type from_coordinates(const coordinatization& c, std::span<const scalar> v) const {
    element_type r;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!f_.is_zero(v[i])) r.emplace_back(c.basis[i], v[i]);
    return r;
  }

  bool operator==(const GroupAlgebra& o) const { return describe() == o.describe(); }

 private:
  // Column h holds the coordinates of a * e_h over the enumeration of G.
  Matrix<F> left_multiplication(const element_type& a) const {
    const std::size_t m = all_.size();
    auto l = Matrix<F>::zeros(f_, m, m);
    for (std::size_t h = 0; h < m; ++h)
      for (const auto& [g, c] : a) {
        auto idx = g_->index_of(g_->mul(g, all_[h]));
        l(idx, h) = f_.add(l(idx, h), c);
      }
    return l;
  }

  F f_;
  GroupPtr g_;
  std::vector<GroupElement> all_;
};

}  // namespace spanbound
