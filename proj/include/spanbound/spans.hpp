#pragma once

// Finite sets of ring elements and the k-subspaces they span. A Subspace keeps
// its basis as ring elements in canonical form (rref rows of its coordinates);
// every binary operation coordinatizes its inputs afresh.

#include <algorithm>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "spanbound/backend/common.hpp"
#include "spanbound/linalg.hpp"

namespace spanbound {

enum class Side { Left, Right };

inline std::string_view to_string(Side s) { return s == Side::Left ? "left" : "right"; }

template <class R>
using Elem = typename R::element_type;

template <class R>
using BackendPtr = std::shared_ptr<const R>;

template <class R>
class Subspace {
 public:
  using element_type = Elem<R>;

  Subspace() = default;
  Subspace(BackendPtr<R> backend, std::vector<element_type> basis) : backend_(std::move(backend)), basis_(std::move(basis)) {}

  const R& backend() const { return *backend_; }
  const BackendPtr<R>& backend_ptr() const { return backend_; }
  const std::vector<element_type>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }

 private:
  BackendPtr<R> backend_;
  std::vector<element_type> basis_;
};

template <class R>
struct SetInstance {
  BackendPtr<R> backend;
  std::vector<Elem<R>> elements;
  std::string name;

  std::size_t size() const { return elements.size(); }
};

template <class R>
void require_same_backend(const BackendPtr<R>& a, const BackendPtr<R>& b) {
  if (a != b && a->describe() != b->describe())
    fail(ErrorKind::BackendMismatch, "operands live in " + a->describe() + " and " + b->describe());
}

template <class R>
SetInstance<R> make_set(BackendPtr<R> backend, std::vector<Elem<R>> elements, std::string name = "") {
  for (const auto& e : elements)
    if (backend->is_zero(e)) fail(ErrorKind::InvalidArgument, "set " + (name.empty() ? std::string("?") : name) + " contains 0");
  return {std::move(backend), std::move(elements), std::move(name)};
}

template <class R>
SetInstance<R> parse_set(BackendPtr<R> backend, const std::vector<std::string>& texts, std::string name = "") {
  std::vector<Elem<R>> elems;
  for (const auto& t : texts) elems.push_back(backend->parse(t));
  return make_set(std::move(backend), std::move(elems), std::move(name));
}

template <class R>
Matrix<typename R::field_type> coordinate_matrix(const R& r, const typename R::coordinatization& c, std::span<const Elem<R>> elems) {
  auto m = Matrix<typename R::field_type>::zeros(r.field(), elems.size(), r.ambient_dim(c));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto v = r.coordinates(c, elems[i]);
    std::copy(v.begin(), v.end(), m.row(i).begin());
  }
  return m;
}

// Canonical basis of the span; empty input gives the zero subspace.
template <class R>
Subspace<R> span_elements(const BackendPtr<R>& backend, std::span<const Elem<R>> elems) {
  if (elems.empty()) return {backend, {}};
  const R& r = *backend;
  auto c = r.coordinatize(elems);
  auto basis = row_basis(r.field(), coordinate_matrix(r, c, elems));
  std::vector<Elem<R>> out;
  out.reserve(basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i) out.push_back(r.from_coordinates(c, basis.row(i)));
  return {backend, std::move(out)};
}

template <class R>
Subspace<R> span_elements(const BackendPtr<R>& backend, const std::vector<Elem<R>>& elems) {
  return span_elements(backend, std::span<const Elem<R>>(elems));
}

template <class R>
std::size_t rank_of(const R& r, std::span<const Elem<R>> elems) {
  if (elems.empty()) return 0;
  auto c = r.coordinatize(elems);
  return rank(r.field(), coordinate_matrix(r, c, elems));
}

template <class R>
std::size_t rank_of(const R& r, const std::vector<Elem<R>>& elems) {
  return rank_of(r, std::span<const Elem<R>>(elems));
}

// k<A>
template <class R>
Subspace<R> span_of(const SetInstance<R>& a) {
  if (a.elements.empty()) fail(ErrorKind::EmptySet, "span of an empty set");
  auto v = span_elements(a.backend, a.elements);
  if (v.dim() > a.size()) fail(ErrorKind::WitnessCheckFailed, "span dimension exceeds set size");
  return v;
}

template <class R>
std::vector<Elem<R>> products(const R& r, std::span<const Elem<R>> xs, std::span<const Elem<R>> ys) {
  std::vector<Elem<R>> out;
  out.reserve(xs.size() * ys.size());
  for (const auto& x : xs)
    for (const auto& y : ys) out.push_back(r.mul(x, y));
  return out;
}

template <class R>
std::vector<Elem<R>> products(const R& r, const std::vector<Elem<R>>& xs, const std::vector<Elem<R>>& ys) {
  return products(r, std::span<const Elem<R>>(xs), std::span<const Elem<R>>(ys));
}

template <class R>
Subspace<R> product(const Subspace<R>& u, const Subspace<R>& v) {
  require_same_backend(u.backend_ptr(), v.backend_ptr());
  return span_elements(u.backend_ptr(), products(u.backend(), u.basis(), v.basis()));
}

// k<AB>; in division rings also checks max(dim A, dim B) <= dim AB <= dim A dim B.
template <class R>
Subspace<R> product_span(const SetInstance<R>& a, const SetInstance<R>& b) {
  require_same_backend(a.backend, b.backend);
  if (a.elements.empty() || b.elements.empty()) fail(ErrorKind::EmptySet, "product span of an empty set");
  auto ab = span_elements(a.backend, products(*a.backend, a.elements, b.elements));
  const auto da = span_of(a).dim(), db = span_of(b).dim();
  if (ab.dim() > da * db) fail(ErrorKind::WitnessCheckFailed, "dim(AB) exceeds dim(A) dim(B)");
  if (a.backend->is_division_ring() && ab.dim() < std::max(da, db))
    fail(ErrorKind::WitnessCheckFailed, "dim(AB) below max(dim A, dim B) in a division ring");
  return ab;
}

// k<A1 A2 ... An>, multiplied left to right.
template <class R>
Subspace<R> product_span(const std::vector<SetInstance<R>>& sets) {
  if (sets.empty()) fail(ErrorKind::EmptySet, "product of no sets");
  for (const auto& s : sets) {
    require_same_backend(sets[0].backend, s.backend);
    if (s.elements.empty()) fail(ErrorKind::EmptySet, "product span of an empty set");
  }
  auto acc = span_of(sets[0]);
  for (std::size_t i = 1; i < sets.size(); ++i) acc = product(acc, span_of(sets[i]));
  return acc;
}

// U^n for n >= 1
template <class R>
Subspace<R> power(const Subspace<R>& u, unsigned n) {
  auto acc = u;
  for (unsigned i = 1; i < n; ++i) acc = product(acc, u);
  return acc;
}

template <class R>
SetInstance<R> inverse_set(const SetInstance<R>& a) {
  SetInstance<R> out{a.backend, {}, a.name.empty() ? "" : a.name + "^-1"};
  for (const auto& e : a.elements) {
    if (!a.backend->is_unit(e)) fail(ErrorKind::NotAUnit, a.backend->format(e) + " is not invertible");
    out.elements.push_back(a.backend->inverse(e));
  }
  return out;
}

// x V (left) or V x (right)
template <class R>
Subspace<R> translate(const Elem<R>& x, const Subspace<R>& v, Side side) {
  const R& r = v.backend();
  if (!r.is_unit(x)) fail(ErrorKind::NotAUnit, r.format(x) + " is not invertible");
  std::vector<Elem<R>> out;
  for (const auto& b : v.basis()) out.push_back(side == Side::Left ? r.mul(x, b) : r.mul(b, x));
  return span_elements(v.backend_ptr(), out);
}

template <class R>
Subspace<R> sum(const Subspace<R>& u, const Subspace<R>& v) {
  require_same_backend(u.backend_ptr(), v.backend_ptr());
  std::vector<Elem<R>> all = u.basis();
  all.insert(all.end(), v.basis().begin(), v.basis().end());
  return span_elements(u.backend_ptr(), all);
}

template <class R>
Subspace<R> intersect(const Subspace<R>& u, const Subspace<R>& v) {
  require_same_backend(u.backend_ptr(), v.backend_ptr());
  if (u.is_zero() || v.is_zero()) return {u.backend_ptr(), {}};
  const R& r = u.backend();
  std::vector<Elem<R>> all = u.basis();
  all.insert(all.end(), v.basis().begin(), v.basis().end());
  auto c = r.coordinatize(all);
  auto mu = coordinate_matrix(r, c, std::span<const Elem<R>>(u.basis()));
  auto mv = coordinate_matrix(r, c, std::span<const Elem<R>>(v.basis()));
  auto meet = subspace_intersect(r.field(), mu, mv);
  std::vector<Elem<R>> out;
  for (std::size_t i = 0; i < meet.rows(); ++i) out.push_back(r.from_coordinates(c, meet.row(i)));
  return {u.backend_ptr(), std::move(out)};
}

template <class R>
bool contains(const Subspace<R>& v, const Elem<R>& x) {
  const R& r = v.backend();
  if (r.is_zero(x)) return true;
  std::vector<Elem<R>> all = v.basis();
  all.push_back(x);
  return rank_of(r, all) == v.dim();
}

template <class R>
bool is_subspace_of(const Subspace<R>& u, const Subspace<R>& v) {
  require_same_backend(u.backend_ptr(), v.backend_ptr());
  if (u.dim() > v.dim()) return false;
  std::vector<Elem<R>> all = v.basis();
  all.insert(all.end(), u.basis().begin(), u.basis().end());
  return rank_of(v.backend(), all) == v.dim();
}

template <class R>
bool same_subspace(const Subspace<R>& u, const Subspace<R>& v) {
  return u.dim() == v.dim() && is_subspace_of(u, v);
}

template <class R>
Subspace<R> base_field_line(const BackendPtr<R>& backend) {
  std::vector<Elem<R>> one{backend->one()};
  return span_elements(backend, one);
}

// U_1 = U, and U_j spanned by the u in U whose c_j u is new; then
// c_1 U + ... + c_j U = c_1 U_1 (+) ... (+) c_j U_j for every prefix j.
template <class R>
std::vector<Subspace<R>> progressive_sum_decomposition(std::span<const Elem<R>> c, const Subspace<R>& u) {
  const R& r = u.backend();
  for (const auto& ci : c)
    if (!r.is_unit(ci)) fail(ErrorKind::NotAUnit, r.format(ci) + " is not invertible");
  std::vector<Subspace<R>> parts;
  std::vector<Elem<R>> running;  // basis of the current direct sum
  for (std::size_t j = 0; j < c.size(); ++j) {
    std::vector<Elem<R>> chosen;
    for (const auto& b : u.basis()) {
      auto cb = r.mul(c[j], b);
      running.push_back(cb);
      if (rank_of(r, running) == running.size())
        chosen.push_back(b);
      else
        running.pop_back();
    }
    parts.push_back(span_elements(u.backend_ptr(), chosen));
  }
  return parts;
}

}  // namespace spanbound
