#pragma once

// Stabilizers, periodicity, coset decompositions and division closures.

#include <optional>
#include <vector>

#include "spanbound/backend/group_algebra.hpp"
#include "spanbound/spans.hpp"

namespace spanbound {

template <class R>
struct StabilizerReport {
  Side side = Side::Left;
  Subspace<R> h;
  bool contains_one = false;
  bool is_division_closed = false;
  bool equals_base_field = false;

  std::size_t dim() const { return h.dim(); }
};

template <class R>
struct is_group_algebra : std::false_type {};
template <class F>
struct is_group_algebra<GroupAlgebra<F>> : std::true_type {};

template <class R>
bool is_multiplicatively_closed(const Subspace<R>& h) {
  return is_subspace_of(product(h, h), h);
}

// Whether H contains 1 and H*H is inside H.
template <class R>
bool is_division_closed(const Subspace<R>& h) {
  return !h.is_zero() && contains(h, h.backend().one()) && is_multiplicatively_closed(h);
}

namespace detail {

// A candidate list whose span contains every h with hV in V (left) or Vh in V (right).
template <class R>
std::vector<Elem<R>> stabilizer_candidates(const Subspace<R>& v, Side side) {
  const R& r = v.backend();
  std::optional<Elem<R>> anchor;
  if (r.is_division_ring()) {
    anchor = v.basis().front();
  } else {
    for (const auto& b : v.basis())
      if (r.is_unit(b)) {
        anchor = b;
        break;
      }
    if constexpr (is_group_algebra<R>::value) {
      if (!anchor) {
        // a basis element e_g lying in V
        for (const auto& b : v.basis()) {
          for (const auto& term : b) {
            auto e = r.basis_element(term.first);
            if (contains(v, e)) {
              anchor = e;
              break;
            }
          }
          if (anchor) break;
        }
      }
      if (!anchor) {
        if (!r.group().is_finite())
          fail(ErrorKind::UnsupportedBackend, "stabilizer over an infinite group needs a basis element e_g inside V");
        std::vector<Elem<R>> all;
        for (const auto& g : r.group().elements()) all.push_back(r.basis_element(g));
        return all;
      }
    }
    if (!anchor) fail(ErrorKind::UnsupportedBackend, "stabilizer needs an invertible element of V in " + r.describe());
  }
  // h u in V for the unit u in V forces h in V u^-1 (left), symmetrically on the right.
  const auto inv = r.inverse(*anchor);
  std::vector<Elem<R>> out;
  for (const auto& b : v.basis()) out.push_back(side == Side::Left ? r.mul(b, inv) : r.mul(inv, b));
  return out;
}

}  // namespace detail

// {h : hV in V} (left) or {h : Vh in V} (right).
template <class R>
Subspace<R> stabilizer_space(const Subspace<R>& v, Side side) {
  if (v.is_zero()) fail(ErrorKind::ZeroSubspace, "stabilizer of the zero subspace");
  const R& r = v.backend();
  const auto cands = detail::stabilizer_candidates(v, side);
  const std::size_t nc = cands.size(), nv = v.dim();

  std::vector<Elem<R>> all = v.basis();
  for (const auto& c : cands)
    for (const auto& b : v.basis()) all.push_back(side == Side::Left ? r.mul(c, b) : r.mul(b, c));
  auto coord = r.coordinatize(all);
  const std::size_t d = r.ambient_dim(coord);
  const auto& f = r.field();

  // functionals vanishing on V: columns y with M_V y = 0
  auto annihilator = kernel(f, coordinate_matrix(r, coord, std::span<const Elem<R>>(v.basis())));
  const std::size_t q = annihilator.cols();
  if (q == 0) {
    // V is the whole coordinate space, so every candidate stabilizes it
    return span_elements(v.backend_ptr(), cands);
  }
  // sum_j x_j <y, c_j b_i> = 0 for all i and all y
  auto sys = Matrix<typename R::field_type>::zeros(f, nv * q, nc);
  for (std::size_t j = 0; j < nc; ++j)
    for (std::size_t i = 0; i < nv; ++i) {
      auto p = r.coordinates(coord, all[nv + j * nv + i]);
      for (std::size_t t = 0; t < q; ++t) {
        auto acc = f.zero();
        for (std::size_t s = 0; s < d; ++s)
          if (!f.is_zero(p[s]) && !f.is_zero(annihilator(s, t))) acc = f.add(acc, f.mul(p[s], annihilator(s, t)));
        sys(i * q + t, j) = acc;
      }
    }
  auto sol = kernel(f, sys);
  std::vector<Elem<R>> hs;
  for (std::size_t t = 0; t < sol.cols(); ++t) {
    auto h = r.zero();
    for (std::size_t j = 0; j < nc; ++j)
      if (!f.is_zero(sol(j, t))) h = r.add(h, r.scale(sol(j, t), cands[j]));
    hs.push_back(std::move(h));
  }
  return span_elements(v.backend_ptr(), hs);
}

template <class R>
StabilizerReport<R> stabilizer(const Subspace<R>& v, Side side) {
  auto h = stabilizer_space(v, side);
  StabilizerReport<R> rep{side, h};
  rep.contains_one = contains(h, v.backend().one());
  rep.is_division_closed = rep.contains_one && is_multiplicatively_closed(h);
  rep.equals_base_field = rep.contains_one && h.dim() == 1;
  const auto hv = side == Side::Left ? product(h, v) : product(v, h);
  if (!is_subspace_of(hv, v)) fail(ErrorKind::WitnessCheckFailed, "stabilizer does not stabilize");
  if (v.backend().is_division_ring() && !rep.is_division_closed)
    fail(ErrorKind::WitnessCheckFailed, "stabilizer in a division ring is not a division ring");
  return rep;
}

template <class R>
bool is_periodic(const Subspace<R>& v, Side side) {
  return stabilizer_space(v, side).dim() > 1;
}

// H v (left) or v H (right)
template <class R>
Subspace<R> coset(const Subspace<R>& h, const Elem<R>& x, Side side) {
  std::vector<Elem<R>> out;
  for (const auto& b : h.basis()) out.push_back(side == Side::Left ? h.backend().mul(b, x) : h.backend().mul(x, b));
  return span_elements(h.backend_ptr(), out);
}

// S with V = (+)_{s in S} Hs (left) or sH (right); greedy over the basis of V.
template <class R>
std::vector<Elem<R>> coset_decompose(const Subspace<R>& v, const Subspace<R>& h, Side side) {
  require_same_backend(v.backend_ptr(), h.backend_ptr());
  if (!is_division_closed(h)) fail(ErrorKind::NotDivisionClosed, "H must contain 1 and be closed under multiplication");
  const auto hv = side == Side::Left ? product(h, v) : product(v, h);
  if (!is_subspace_of(hv, v)) fail(ErrorKind::NotStabilized, "H does not stabilize V");
  if (v.dim() % h.dim() != 0)
    fail(ErrorKind::NotStabilized, "dim H = " + std::to_string(h.dim()) + " does not divide dim V = " + std::to_string(v.dim()));
  std::vector<Elem<R>> reps;
  Subspace<R> acc(v.backend_ptr(), {});
  for (const auto& b : v.basis()) {
    if (contains(acc, b)) continue;
    reps.push_back(b);
    acc = sum(acc, coset(h, b, side));
  }
  if (acc.dim() != v.dim() || reps.size() * h.dim() != v.dim())
    fail(ErrorKind::WitnessCheckFailed, "coset decomposition is not direct");
  return reps;
}

// Smallest subspace containing 1 and the given elements that is closed under
// multiplication; BudgetExceeded once the dimension would pass the budget.
template <class R>
Subspace<R> division_closure(const BackendPtr<R>& backend, const std::vector<Elem<R>>& gens, std::size_t budget) {
  std::vector<Elem<R>> start = gens;
  start.push_back(backend->one());
  auto w = span_elements(backend, start);
  for (;;) {
    if (w.dim() > budget)
      fail(ErrorKind::BudgetExceeded, "division closure passed dimension " + std::to_string(budget));
    auto next = sum(w, product(w, w));
    if (next.dim() == w.dim()) return w;
    w = std::move(next);
  }
}

template <class R>
Subspace<R> division_closure(const SetInstance<R>& a, std::size_t budget) {
  if (a.elements.empty()) fail(ErrorKind::EmptySet, "division closure of an empty set");
  return division_closure(a.backend, a.elements, budget);
}

}  // namespace spanbound
