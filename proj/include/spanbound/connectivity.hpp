#pragma once

// Linear connectivity: c(W) = dim(WV) - lambda dim W over nonzero subspaces W,
// its minimum kappa, fragments (minimizers) and atoms (fragments of least
// dimension), and the small-doubling classifier built on the atom through 1.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "spanbound/backend/any.hpp"
#include "spanbound/theorems.hpp"

namespace spanbound {

template <class R>
mpq_class connectivity_cost(const Subspace<R>& w, const Subspace<R>& v, const mpq_class& lambda) {
  if (w.is_zero()) fail(ErrorKind::ZeroSubspace, "connectivity of the zero subspace");
  return mpq_class(static_cast<unsigned long>(product(w, v).dim())) - lambda * static_cast<unsigned long>(w.dim());
}

struct SubmodularityReport {
  bool applicable = false;
  mpq_class lhs;  // c(W1 + W2) + c(W1 ∩ W2)
  mpq_class rhs;  // c(W1) + c(W2)
  bool holds = true;
};

template <class R>
SubmodularityReport submodularity_check(const Subspace<R>& w1, const Subspace<R>& w2, const Subspace<R>& v, const mpq_class& lambda) {
  SubmodularityReport rep;
  const auto meet = intersect(w1, w2);
  if (w1.is_zero() || w2.is_zero() || meet.is_zero()) return rep;
  rep.applicable = true;
  rep.lhs = connectivity_cost(sum(w1, w2), v, lambda) + connectivity_cost(meet, v, lambda);
  rep.rhs = connectivity_cost(w1, v, lambda) + connectivity_cost(w2, v, lambda);
  rep.holds = rep.lhs <= rep.rhs;
  return rep;
}

template <class R>
struct AtomReport {
  mpq_class lambda;
  mpq_class kappa;
  Subspace<R> atom;                   // the atom containing 1
  std::vector<Subspace<R>> fragments;  // fragments containing 1
  std::uint64_t enumerated = 0;
  bool exact = false;  // complete enumeration; otherwise a heuristic candidate search
  bool atom_is_division_ring = false;
  bool atom_unique = false;
  bool lattice_closed = true;  // sums and intersections of fragments are fragments
  bool lower_bound = true;     // c(W) >= (1 - lambda) dim W for every enumerated W
  // from the sweep over all subspaces of dimension dim H (exact mode, within budget)
  std::optional<std::size_t> atoms_found;
  std::optional<bool> left_translates;   // every atom is xH
  std::optional<bool> right_translates;  // every atom is Hx
  std::optional<bool> atoms_disjoint;

  bool holds() const {
    return atom_is_division_ring && atom_unique && lattice_closed && lower_bound && left_translates.value_or(true) &&
           atoms_disjoint.value_or(true);
  }
};

namespace detail {

// The basis of K when dim_k K is finite.
template <class R>
std::optional<std::vector<Elem<R>>> ambient_basis(const R& r) {
  const auto n = r.dimension();
  if (!n) return std::nullopt;
  std::vector<Elem<R>> one{r.one()};
  auto c = r.coordinatize(one);
  if (r.ambient_dim(c) != *n) return std::nullopt;
  std::vector<Elem<R>> out;
  for (std::size_t i = 0; i < *n; ++i) {
    std::vector<typename R::scalar> e(*n, r.field().zero());
    e[i] = r.field().one();
    out.push_back(r.from_coordinates(c, e));
  }
  return out;
}

// Exhaustive search in GF(p^n); subspaces through 1 are span{1} + (0, U).
inline AtomReport<FiniteField> exact_atoms(const Subspace<FiniteField>& v, const mpq_class& lambda, std::uint64_t budget) {
  const auto& r = v.backend();
  const auto p = r.field().modulus();
  const std::size_t n = *r.dimension();
  auto total = count_subspaces_between(p, n - 1, 0, n - 1);
  if (!total || *total > budget)
    fail(ErrorKind::BudgetExceeded, "enumerating subspaces through 1 needs " + (total ? std::to_string(*total) : std::string("> 2^62")) +
                                        " steps, budget " + std::to_string(budget));
  const auto whole = span_elements(v.backend_ptr(), *ambient_basis(r));
  GrowthEvaluator<FiniteField> eval(whole, v);

  struct Entry {
    EchelonRows rows;
    std::size_t dim;
    mpq_class cost;
  };
  std::vector<Entry> entries;
  AtomReport<FiniteField> rep;
  rep.lambda = lambda;
  rep.exact = true;
  for (std::size_t du = 0; du < n; ++du) {
    for_each_subspace(p, n - 1, du, [&](const EchelonRows& u) {
      EchelonRows rows;
      rows.emplace_back(n, 0U);
      rows[0][0] = 1;
      for (const auto& row : u) {
        std::vector<std::uint32_t> w(n, 0U);
        std::copy(row.begin(), row.end(), w.begin() + 1);
        rows.push_back(std::move(w));
      }
      const auto dim = rows.size();
      mpq_class cost = mpq_class(static_cast<unsigned long>(eval.growth_dim(rows))) - lambda * static_cast<unsigned long>(dim);
      if (cost < (1 - lambda) * static_cast<unsigned long>(dim)) rep.lower_bound = false;
      entries.push_back({std::move(rows), dim, std::move(cost)});
      return true;
    });
  }
  rep.enumerated = entries.size();
  rep.kappa = entries.front().cost;
  for (const auto& e : entries)
    if (e.cost < rep.kappa) rep.kappa = e.cost;
  std::size_t min_dim = n + 1, at_min = 0;
  for (const auto& e : entries)
    if (e.cost == rep.kappa) {
      rep.fragments.push_back(eval.subspace(e.rows));
      if (e.dim < min_dim) {
        min_dim = e.dim;
        at_min = 0;
        rep.atom = rep.fragments.back();
      }
      if (e.dim == min_dim) ++at_min;
    }
  rep.atom_unique = at_min == 1;
  rep.atom_is_division_ring = is_division_closed(rep.atom);

  const std::size_t cap = std::min<std::size_t>(rep.fragments.size(), 48);
  for (std::size_t i = 0; i < cap && rep.lattice_closed; ++i)
    for (std::size_t j = i + 1; j < cap; ++j) {
      const auto& f1 = rep.fragments[i];
      const auto& f2 = rep.fragments[j];
      if (connectivity_cost(sum(f1, f2), v, lambda) != rep.kappa || connectivity_cost(intersect(f1, f2), v, lambda) != rep.kappa) {
        rep.lattice_closed = false;
        break;
      }
    }

  // every subspace of dimension dim H: the atoms among them are its translates
  const auto h = rep.atom;
  auto sweep = count_subspaces(p, n, h.dim());
  if (sweep && *sweep <= budget) {
    std::vector<Subspace<FiniteField>> atoms;
    bool left = true, right = true;
    for_each_subspace(p, n, h.dim(), [&](const EchelonRows& rows) {
      const mpq_class cost = mpq_class(static_cast<unsigned long>(eval.growth_dim(rows))) - lambda * static_cast<unsigned long>(h.dim());
      if (cost != rep.kappa) return true;
      auto w = eval.subspace(rows);
      const auto inv = r.inverse(w.basis().front());
      left = left && same_subspace(translate(inv, w, Side::Left), h);
      right = right && same_subspace(translate(inv, w, Side::Right), h);
      atoms.push_back(std::move(w));
      return true;
    });
    bool disjoint = true;
    const std::size_t acap = std::min<std::size_t>(atoms.size(), 96);
    for (std::size_t i = 0; i < acap && disjoint; ++i)
      for (std::size_t j = i + 1; j < acap; ++j)
        if (!intersect(atoms[i], atoms[j]).is_zero()) {
          disjoint = false;
          break;
        }
    rep.atoms_found = atoms.size();
    rep.left_translates = left;
    rep.right_translates = right;
    rep.atoms_disjoint = disjoint;
  }
  return rep;
}

// Candidate division rings: k, the stabilizers of V, the closure of V v^-1, and K itself.
template <class R>
AtomReport<R> heuristic_atoms(const Subspace<R>& v, const mpq_class& lambda) {
  const R& r = v.backend();
  std::vector<Subspace<R>> cands{base_field_line(v.backend_ptr())};
  auto attempt = [&](auto&& make) {
    try {
      cands.push_back(make());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded && e.kind() != ErrorKind::UnsupportedBackend) throw;
    }
  };
  attempt([&] { return stabilizer_space(v, Side::Left); });
  attempt([&] { return stabilizer_space(v, Side::Right); });
  if (r.is_unit(v.basis().front()))
    attempt([&] { return division_closure(v.backend_ptr(), translate(r.inverse(v.basis().front()), v, Side::Right).basis(), 32); });
  if (auto all = ambient_basis(r)) cands.push_back(span_elements(v.backend_ptr(), *all));

  AtomReport<R> rep;
  rep.lambda = lambda;
  bool first = true;
  for (const auto& c : cands) {
    if (!is_division_closed(c)) continue;
    ++rep.enumerated;
    const auto cost = connectivity_cost(c, v, lambda);
    if (cost < (1 - lambda) * static_cast<unsigned long>(c.dim())) rep.lower_bound = false;
    if (first || cost < rep.kappa || (cost == rep.kappa && c.dim() < rep.atom.dim())) {
      rep.kappa = cost;
      rep.atom = c;
      first = false;
    }
  }
  rep.fragments.push_back(rep.atom);
  rep.atom_is_division_ring = true;
  rep.atom_unique = true;
  return rep;
}

}  // namespace detail

// Exact over FF backends; elsewhere a labelled heuristic search.
template <class R>
AtomReport<R> kappa_and_atoms(const Subspace<R>& v, const mpq_class& lambda, std::uint64_t budget = kDefaultEnumerationBudget) {
  if (v.is_zero()) fail(ErrorKind::ZeroSubspace, "connectivity needs V nonzero");
  if (lambda >= 1) fail(ErrorKind::LambdaTooLarge, "lambda must be below 1");
  detail::require_division(v.backend(), "connectivity");
  if constexpr (std::same_as<R, FiniteField>)
    return detail::exact_atoms(v, lambda, budget);
  else
    return detail::heuristic_atoms(v, lambda);
}

template <class R>
struct TaoWitness {
  mpq_class epsilon;
  mpq_class kappa;
  mpq_class cost_w;
  int case_number = 0;  // 1: V inside Hx; 2: V inside (+) Hx
  Subspace<R> h;
  std::vector<Elem<R>> x;
  bool bound = false;    // case 1: dim H <= (2/eps - 1) dim V; case 2: dim H <= (2-eps)/(2+eps) dim V
  bool count_bound = true;  // case 2: |X| <= 2/eps - 1
  bool covered = false;     // V inside Hx or the direct sum
  bool exact = false;

  bool holds() const { return bound && count_bound && covered && kappa <= cost_w; }
};

template <class R>
TaoWitness<R> tao_classify(const Subspace<R>& v, const Subspace<R>& w, const mpq_class& eps,
                           std::uint64_t budget = kDefaultEnumerationBudget) {
  if (eps <= 0 || eps >= 2) fail(ErrorKind::InvalidArgument, "epsilon must lie in (0, 2)");
  if (v.is_zero() || w.is_zero()) fail(ErrorKind::ZeroSubspace, "V and W must be nonzero");
  const R& r = v.backend();
  const auto dv = static_cast<unsigned long>(v.dim());
  const auto wv = product(w, v).dim();
  if (w.dim() < v.dim()) fail(ErrorKind::HypothesisFailed, "dim W < dim V");
  if (mpq_class(static_cast<unsigned long>(wv)) > (2 - eps) * dv) fail(ErrorKind::HypothesisFailed, "dim WV exceeds (2 - eps) dim V");
  const mpq_class lambda = 1 - eps / 2;
  auto atoms = kappa_and_atoms(v, lambda, budget);

  TaoWitness<R> t;
  t.epsilon = eps;
  t.kappa = atoms.kappa;
  t.cost_w = connectivity_cost(w, v, lambda);
  t.exact = atoms.exact;
  t.h = atoms.atom;
  const auto dh = static_cast<unsigned long>(t.h.dim());
  const auto v0 = v.basis().front();
  if (is_subspace_of(translate(r.inverse(v0), v, Side::Right), t.h)) {
    t.case_number = 1;
    t.x = {v0};
    t.covered = is_subspace_of(v, coset(t.h, v0, Side::Left));
    t.bound = mpq_class(dh) * eps <= (2 - eps) * dv;
  } else {
    t.case_number = 2;
    const auto hv = product(t.h, v);
    t.x = coset_decompose(hv, t.h, Side::Left);
    Subspace<R> cover(v.backend_ptr(), {});
    for (const auto& x : t.x) cover = sum(cover, coset(t.h, x, Side::Left));
    t.covered = cover.dim() == t.x.size() * t.h.dim() && is_subspace_of(v, cover);
    t.count_bound = mpq_class(static_cast<unsigned long>(t.x.size())) * eps <= 2 - eps;
    t.bound = mpq_class(dh) * (2 + eps) <= (2 - eps) * dv;
  }
  return t;
}

}  // namespace spanbound
