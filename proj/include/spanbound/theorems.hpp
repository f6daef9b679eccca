#pragma once

// Exact checkers for the dimension estimates of linear additive combinatorics:
// Kneser-type lower bounds, growth ratios and Plunnecke-type upper bounds, the
// triple inequality, the Dyson recursion and the subring constructions. Each
// checker enforces its hypotheses and reports whether its verdict is asserted
// (a failure is a bug) or report-only.

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spanbound/structure.hpp"
#include "spanbound/subspace_enum.hpp"

namespace spanbound {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000;
inline constexpr std::size_t kDefaultClosureBudget = 64;

enum class RhoMode { Exhaustive, Heuristic };

inline std::string_view to_string(RhoMode m) { return m == RhoMode::Exhaustive ? "exhaustive" : "heuristic"; }

namespace detail {

template <class R>
void require_division(const R& r, std::string_view what) {
  if (!r.is_division_ring())
    fail(ErrorKind::UnsupportedBackend, std::string(what) + " needs a division ring; " + r.describe() + " is not one");
}

template <class R>
void require_commutative_division(const R& r, std::string_view what) {
  if (!r.is_commutative()) fail(ErrorKind::NonCommutativeBackend, std::string(what) + " needs a commutative backend, got " + r.describe());
  require_division(r, what);
}

template <class R>
bool commutes(const R& r, const Elem<R>& a, const Elem<R>& b) {
  return r.mul(a, b) == r.mul(b, a);
}

template <class R>
bool is_commutative_set(const R& r, const std::vector<Elem<R>>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!commutes(r, xs[i], xs[j])) return false;
  return true;
}

template <class R>
bool sets_commute(const R& r, const std::vector<Elem<R>>& xs, const std::vector<Elem<R>>& ys) {
  for (const auto& x : xs)
    for (const auto& y : ys)
      if (!commutes(r, x, y)) return false;
  return true;
}

template <class R>
void require_nonempty(const SetInstance<R>& a) {
  if (a.elements.empty()) fail(ErrorKind::EmptySet, "set " + (a.name.empty() ? std::string("?") : a.name) + " is empty");
}

template <class R>
bool all_units(const SetInstance<R>& a) {
  return std::all_of(a.elements.begin(), a.elements.end(), [&](const auto& e) { return a.backend->is_unit(e); });
}

template <class R>
bool any_unit(const SetInstance<R>& a) {
  return std::any_of(a.elements.begin(), a.elements.end(), [&](const auto& e) { return a.backend->is_unit(e); });
}

inline mpz_class ipow(std::size_t base, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------- Kneser

template <class R>
struct KneserVerdict {
  std::vector<std::size_t> dims;         // dim A_i
  std::vector<std::size_t> dims_with_h;  // dim A_i H
  std::size_t product_dim = 0;
  std::size_t stabilizer_dim = 0;
  bool statement1 = false;
  bool statement2 = false;
  bool statement3 = false;
  bool periodic = false;
  // first j >= 2 (1-based) with dim(A_1..A_j) < dim(A_1..A_{j-1}) + dim A_j - 1
  std::optional<std::size_t> chain_violation;
  bool chain_bound = false;  // conclusion of the chain lemma when no violation
  bool holds = false;
  bool asserted = false;
  Subspace<R> product;
  Subspace<R> stabilizer;

  bool implications_consistent() const { return statement1 == statement2 && statement2 == statement3; }
  // dim(prod) - (sum dim A_i - (n-1) dim H); nonnegative iff statement 2 holds
  long slack() const {
    long s = static_cast<long>(product_dim) + static_cast<long>((dims.size() - 1) * stabilizer_dim);
    for (auto d : dims) s -= static_cast<long>(d);
    return s;
  }
};

template <class R>
KneserVerdict<R> kneser_nfold(const std::vector<SetInstance<R>>& sets) {
  if (sets.size() < 2) fail(ErrorKind::ArityMismatch, "n-fold Kneser needs at least two sets");
  for (const auto& s : sets) detail::require_nonempty(s);
  const R& r = *sets[0].backend;
  detail::require_commutative_division(r, "Kneser");
  KneserVerdict<R> v;
  const std::size_t n = sets.size();
  std::vector<Subspace<R>> spans;
  for (const auto& s : sets) {
    require_same_backend(sets[0].backend, s.backend);
    spans.push_back(span_of(s));
    v.dims.push_back(spans.back().dim());
  }
  auto prefix = spans[0];
  std::size_t running_bound = v.dims[0];
  for (std::size_t j = 1; j < n; ++j) {
    auto next = product(prefix, spans[j]);
    if (!v.chain_violation && next.dim() + 1 < prefix.dim() + spans[j].dim()) v.chain_violation = j + 1;
    running_bound += v.dims[j] - 1;
    prefix = std::move(next);
  }
  v.product = prefix;
  v.product_dim = prefix.dim();
  v.chain_bound = v.product_dim >= running_bound;
  auto st = stabilizer(v.product, Side::Left);
  v.stabilizer = st.h;
  v.stabilizer_dim = st.dim();
  v.periodic = st.dim() > 1;

  const long pd = static_cast<long>(v.product_dim), hd = static_cast<long>(v.stabilizer_dim), nn = static_cast<long>(n);
  long sum_h = 0, sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    v.dims_with_h.push_back(product(spans[i], v.stabilizer).dim());
    sum_h += static_cast<long>(v.dims_with_h.back());
    sum += static_cast<long>(v.dims[i]);
  }
  v.statement1 = pd >= sum_h - (nn - 1) * hd;
  v.statement2 = pd >= sum - (nn - 1) * hd;
  v.statement3 = pd >= sum - (nn - 1) || v.periodic;
  v.holds = v.statement2;
  v.asserted = r.is_separable();
  return v;
}

template <class R>
KneserVerdict<R> kneser_check(const SetInstance<R>& a, const SetInstance<R>& b) {
  return kneser_nfold(std::vector<SetInstance<R>>{a, b});
}

// ---------------------------------------------------------------- growth ratio

template <class R>
struct RhoResult {
  mpq_class rho;
  Subspace<R> x;
  RhoMode mode = RhoMode::Exhaustive;
  std::uint64_t consumed = 0;
  std::size_t x_dim = 0;
  std::size_t xb_dim = 0;
};

namespace detail {

// dim(Z B) for Z spanned by combinations of the basis a_i, given the products a_i b_j.
template <class R>
class GrowthEvaluator {
 public:
  using F = typename R::field_type;
  using S = typename F::value_type;

  GrowthEvaluator(const Subspace<R>& a, const Subspace<R>& b) : r_(a.backend()), a_(a), nb_(b.dim()) {
    auto prods = products(r_, a.basis(), b.basis());
    auto c = r_.coordinatize(prods);
    d_ = r_.ambient_dim(c);
    for (const auto& p : prods) coords_.push_back(r_.coordinates(c, p));
  }

  std::size_t growth_dim(const std::vector<std::vector<S>>& z) const {
    const F& f = r_.field();
    auto m = Matrix<F>::zeros(f, z.size() * nb_, d_);
    for (std::size_t t = 0; t < z.size(); ++t)
      for (std::size_t i = 0; i < z[t].size(); ++i) {
        if (f.is_zero(z[t][i])) continue;
        for (std::size_t j = 0; j < nb_; ++j) {
          const auto& p = coords_[i * nb_ + j];
          auto row = m.row(t * nb_ + j);
          for (std::size_t s = 0; s < d_; ++s)
            if (!f.is_zero(p[s])) row[s] = f.add(row[s], f.mul(z[t][i], p[s]));
        }
      }
    return rank(f, std::move(m));
  }

  Subspace<R> subspace(const std::vector<std::vector<S>>& z) const {
    std::vector<Elem<R>> out;
    for (const auto& row : z) {
      auto e = r_.zero();
      for (std::size_t i = 0; i < row.size(); ++i)
        if (!r_.field().is_zero(row[i])) e = r_.add(e, r_.scale(row[i], a_.basis()[i]));
      out.push_back(std::move(e));
    }
    return span_elements(a_.backend_ptr(), out);
  }

 private:
  const R& r_;
  const Subspace<R>& a_;
  std::size_t nb_;
  std::size_t d_ = 0;
  std::vector<std::vector<S>> coords_;
};

}  // namespace detail

// min over nonzero V inside k<A> of dim(VB)/dim(V). Exhaustive mode enumerates
// every subspace (finite k); ties go to the first in enumeration order.
template <class R>
RhoResult<R> rho_minimize(const SetInstance<R>& a, const SetInstance<R>& b, RhoMode mode,
                          std::uint64_t budget = kDefaultEnumerationBudget, std::uint64_t seed = 0) {
  detail::require_nonempty(a);
  detail::require_nonempty(b);
  require_same_backend(a.backend, b.backend);
  const R& r = *a.backend;
  using F = typename R::field_type;
  using S = typename F::value_type;
  const auto sa = span_of(a), sb = span_of(b);
  const std::size_t m = sa.dim();
  detail::GrowthEvaluator<R> eval(sa, sb);

  RhoResult<R> best;
  best.mode = mode;
  std::optional<std::vector<std::vector<S>>> arg;
  auto consider = [&](const std::vector<std::vector<S>>& z, std::size_t zdim) {
    const auto g = eval.growth_dim(z);
    mpq_class q(static_cast<unsigned long>(g), static_cast<unsigned long>(zdim));
    q.canonicalize();
    ++best.consumed;
    if (!arg || q < best.rho) {
      best.rho = q;
      best.x_dim = zdim;
      best.xb_dim = g;
      arg = z;
    }
  };

  if (mode == RhoMode::Exhaustive) {
    if (!r.field().is_finite()) fail(ErrorKind::InfiniteFieldExhaustive, "exhaustive search needs a finite base field, got " + r.field().describe());
    if constexpr (std::same_as<F, PrimeField>) {
      const auto p = r.field().modulus();
      auto total = count_subspaces_between(p, m, 1, m);
      if (!total || *total > budget)
        fail(ErrorKind::BudgetExceeded, "k<A> has " + (total ? std::to_string(*total) : std::string("more than 2^62")) +
                                             " nonzero subspaces, budget " + std::to_string(budget));
      for (std::size_t dim = 1; dim <= m; ++dim)
        for_each_subspace(p, m, dim, [&](const EchelonRows& rows) {
          consider(rows, dim);
          return true;
        });
    } else {
      fail(ErrorKind::InfiniteFieldExhaustive, "exhaustive search needs a prime base field");
    }
  } else {
    // spans of subsets of A, then seeded random subspaces of k<A>
    const F& f = r.field();
    auto c = r.coordinatize(std::span<const Elem<R>>(sa.basis()));
    auto basis_coords = [&](const std::vector<Elem<R>>& elems) {
      // coordinates in the basis of k<A>: solve against the basis matrix
      auto bm = transpose(f, coordinate_matrix(r, c, std::span<const Elem<R>>(sa.basis())));
      auto rhs = transpose(f, coordinate_matrix(r, c, std::span<const Elem<R>>(elems)));
      auto sol = solve(f, bm, rhs);
      if (!sol) fail(ErrorKind::WitnessCheckFailed, "element of A outside k<A>");
      auto rows = row_basis(f, transpose(f, *sol));
      std::vector<std::vector<S>> z;
      for (std::size_t i = 0; i < rows.rows(); ++i) z.emplace_back(rows.row(i).begin(), rows.row(i).end());
      return z;
    };
    const std::size_t na = a.elements.size();
    std::vector<std::vector<Elem<R>>> subsets;
    if (na <= 10) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << na); ++mask) {
        std::vector<Elem<R>> s;
        for (std::size_t i = 0; i < na; ++i)
          if (mask >> i & 1U) s.push_back(a.elements[i]);
        subsets.push_back(std::move(s));
      }
    } else {
      for (std::size_t i = 0; i < na; ++i) subsets.push_back({a.elements[i]});
      for (std::size_t i = 2; i <= na; ++i) subsets.emplace_back(a.elements.begin(), a.elements.begin() + static_cast<long>(i));
    }
    for (const auto& s : subsets) {
      if (best.consumed >= budget) break;
      auto z = basis_coords(s);
      consider(z, z.size());
    }
    Rng rng(mix_seed(seed, 0x7268));
    const SizeBudget sizes{};
    for (int t = 0; t < 32 && best.consumed < budget; ++t) {
      const auto dim = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(m)));
      auto z = Matrix<F>::zeros(f, dim, m);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < m; ++j) z(i, j) = f.sample(rng, sizes);
      auto rows = row_basis(f, std::move(z));
      if (rows.rows() == 0) continue;
      std::vector<std::vector<S>> zz;
      for (std::size_t i = 0; i < rows.rows(); ++i) zz.emplace_back(rows.row(i).begin(), rows.row(i).end());
      consider(zz, zz.size());
    }
  }
  best.x = eval.subspace(*arg);
  if (best.x.dim() != best.x_dim) fail(ErrorKind::WitnessCheckFailed, "minimizer dimension changed on reconstruction");
  return best;
}

// ---------------------------------------------------------------- Petridis

template <class R>
struct PetridisReport {
  mpq_class rho;
  std::size_t cx_dim = 0;
  std::size_t cxb_dim = 0;
  bool holds = false;
};

namespace detail {

template <class R>
PetridisReport<R> petridis_core(const SetInstance<R>& b, const SetInstance<R>& c, const RhoResult<R>& rho) {
  if (rho.mode != RhoMode::Exhaustive) fail(ErrorKind::HeuristicRho, "the minimizer must come from an exhaustive search");
  require_nonempty(c);
  const auto cx = span_elements(c.backend, products(*c.backend, c.elements, rho.x.basis()));
  const auto cxb = product(cx, span_of(b));
  PetridisReport<R> rep{rho.rho, cx.dim(), cxb.dim(), false};
  // dim CXB <= rho dim CX, cross-multiplied
  rep.holds = mpz_class(static_cast<unsigned long>(cxb.dim())) * rho.rho.get_den() <=
              rho.rho.get_num() * static_cast<unsigned long>(cx.dim());
  return rep;
}

}  // namespace detail

template <class R>
PetridisReport<R> petridis_check(const SetInstance<R>& a, const SetInstance<R>& b, const SetInstance<R>& c,
                                 const RhoResult<R>& rho) {
  detail::require_nonempty(a);
  detail::require_division(*a.backend, "Petridis");
  for (const auto& e : c.elements)
    if (!c.backend->is_unit(e)) fail(ErrorKind::NotAUnit, c.backend->format(e) + " is not invertible");
  return detail::petridis_core(b, c, rho);
}

// ---------------------------------------------------------------- Plunnecke

template <class R>
struct PlunneckeReport {
  mpq_class alpha;
  RhoResult<R> rho;
  std::vector<std::size_t> xbn_dims;                // dim X B^n for n = 1..n_max
  std::vector<bool> holds_n;                        // dim X B^n <= alpha^n dim X
  std::optional<std::vector<std::size_t>> an_dims;  // dim A^n when A = B
  std::optional<bool> an_holds;                     // dim A^n <= alpha^n dim A
  bool holds = false;
  bool asserted = false;
};

namespace detail {

template <class R>
PlunneckeReport<R> plunnecke_core(const SetInstance<R>& a, const SetInstance<R>& b, unsigned n_max, std::uint64_t budget,
                                  std::uint64_t seed) {
  if (n_max < 1) fail(ErrorKind::InvalidArgument, "n_max must be at least 1");
  const R& r = *a.backend;
  PlunneckeReport<R> rep;
  const auto sa = span_of(a), sb = span_of(b);
  const auto ab = product(sa, sb);
  rep.alpha = mpq_class(static_cast<unsigned long>(ab.dim()), static_cast<unsigned long>(sa.dim()));
  rep.alpha.canonicalize();
  const auto mode = r.field().is_finite() ? RhoMode::Exhaustive : RhoMode::Heuristic;
  rep.rho = rho_minimize(a, b, mode, budget, seed);
  rep.asserted = mode == RhoMode::Exhaustive;
  rep.holds = true;
  auto xb = rep.rho.x;
  const auto x_dim = rep.rho.x.dim();
  for (unsigned n = 1; n <= n_max; ++n) {
    xb = product(xb, sb);
    rep.xbn_dims.push_back(xb.dim());
    // dim XB^n * dimA^n <= dimAB^n * dim X, and the sharper rho^n form
    const bool by_alpha = mpz_class(static_cast<unsigned long>(xb.dim())) * ipow(sa.dim(), n) <= ipow(ab.dim(), n) * static_cast<unsigned long>(x_dim);
    mpz_class rn, rd;
    mpz_pow_ui(rn.get_mpz_t(), rep.rho.rho.get_num_mpz_t(), n);
    mpz_pow_ui(rd.get_mpz_t(), rep.rho.rho.get_den_mpz_t(), n);
    const bool by_rho = mpz_class(static_cast<unsigned long>(xb.dim())) * rd <= rn * static_cast<unsigned long>(x_dim);
    rep.holds_n.push_back(by_alpha && by_rho);
    rep.holds = rep.holds && by_alpha && by_rho;
  }
  if (a.elements == b.elements) {
    std::vector<std::size_t> an;
    bool ok = true;
    auto pw = sa;
    for (unsigned n = 1; n <= n_max; ++n) {
      if (n > 1) pw = product(pw, sa);
      an.push_back(pw.dim());
      ok = ok && mpz_class(static_cast<unsigned long>(pw.dim())) * ipow(sa.dim(), n) <= ipow(ab.dim(), n) * static_cast<unsigned long>(sa.dim());
    }
    rep.an_holds = ok;
    // X B^n contains x A^n for a unit x of X, which needs a division ring
    if (r.is_division_ring()) rep.holds = rep.holds && ok;
    rep.an_dims = std::move(an);
  }
  return rep;
}

}  // namespace detail

template <class R>
PlunneckeReport<R> plunnecke_powers(const SetInstance<R>& a, const SetInstance<R>& b, unsigned n_max,
                                    std::uint64_t budget = kDefaultEnumerationBudget, std::uint64_t seed = 0) {
  detail::require_nonempty(a);
  detail::require_nonempty(b);
  require_same_backend(a.backend, b.backend);
  const R& r = *a.backend;
  detail::require_division(r, "Plunnecke");
  if (!r.is_commutative() && !detail::sets_commute(r, a.elements, b.elements))
    fail(ErrorKind::CommutationFailure, "some a in A and b in B do not commute");
  return detail::plunnecke_core(a, b, n_max, budget, seed);
}

// ---------------------------------------------------------------- triple inequality

struct TripleReport {
  std::size_t abc = 0;
  std::size_t ab = 0;
  std::size_t bc = 0;
  std::size_t max_abc = 0;   // max over b of dim AbC
  std::size_t argmax = 0;    // index of the maximizing b
  std::optional<std::size_t> ac;
  bool holds = false;
  std::optional<bool> commutative_holds;
};

namespace detail {

template <class R>
TripleReport triple_core(const SetInstance<R>& a, const SetInstance<R>& b, const SetInstance<R>& c) {
  const R& r = *a.backend;
  const auto sa = span_of(a), sb = span_of(b), sc = span_of(c);
  TripleReport rep;
  rep.abc = product(product(sa, sb), sc).dim();
  rep.ab = product(sa, sb).dim();
  rep.bc = product(sb, sc).dim();
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    std::vector<Elem<R>> ab_i;
    for (const auto& x : a.elements) ab_i.push_back(r.mul(x, b.elements[i]));
    const auto d = span_elements(a.backend, products(r, ab_i, c.elements)).dim();
    if (d > rep.max_abc) {
      rep.max_abc = d;
      rep.argmax = i;
    }
  }
  const mpz_class lhs = mpz_class(static_cast<unsigned long>(rep.abc)) * static_cast<unsigned long>(rep.abc);
  rep.holds = lhs <= mpz_class(static_cast<unsigned long>(rep.ab)) * static_cast<unsigned long>(rep.bc) * static_cast<unsigned long>(rep.max_abc);
  if (r.is_commutative()) {
    rep.ac = product(sa, sc).dim();
    rep.commutative_holds =
        lhs <= mpz_class(static_cast<unsigned long>(rep.ab)) * static_cast<unsigned long>(rep.bc) * static_cast<unsigned long>(*rep.ac);
  }
  return rep;
}

}  // namespace detail

template <class R>
TripleReport ruzsa_triple_check(const SetInstance<R>& a, const SetInstance<R>& b, const SetInstance<R>& c) {
  detail::require_nonempty(a);
  detail::require_nonempty(b);
  detail::require_nonempty(c);
  require_same_backend(a.backend, b.backend);
  require_same_backend(a.backend, c.backend);
  detail::require_division(*a.backend, "triple inequality");
  return detail::triple_core(a, b, c);
}

// ---------------------------------------------------------------- cube bound

struct CubeReport {
  std::size_t m = 0;     // dim A
  std::size_t n = 0;     // dim A^2
  std::size_t cube = 0;  // dim A^3
  bool sqrt_form = false;   // cube^2 <= n^3
  bool ratio_form = false;  // m^2 cube <= n^3
  bool holds = false;
};

template <class R>
CubeReport cube_bound_check(const SetInstance<R>& a) {
  detail::require_nonempty(a);
  detail::require_commutative_division(*a.backend, "cube bound");
  const auto sa = span_of(a);
  const auto a2 = product(sa, sa);
  const auto a3 = product(a2, sa);
  CubeReport rep{sa.dim(), a2.dim(), a3.dim()};
  const mpz_class n3 = detail::ipow(rep.n, 3);
  rep.sqrt_form = detail::ipow(rep.cube, 2) <= n3;
  rep.ratio_form = detail::ipow(rep.m, 2) * static_cast<unsigned long>(rep.cube) <= n3;
  rep.holds = rep.sqrt_form && rep.ratio_form;
  return rep;
}

// ---------------------------------------------------------------- Dyson transform

template <class R>
struct DysonWitness {
  Subspace<R> h;
  Subspace<R> v;
  Elem<R> a{};
  std::size_t depth = 0;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  bool stabilized = false;        // H V = V
  bool contains_ab = false;       // k<aB> inside V
  bool inside_product = false;    // V inside k<AB>
  bool dimension_bound = false;   // dim V + dim H >= dim A + dim B

  bool holds() const { return stabilized && contains_ab && inside_product && dimension_bound; }
};

// Runs the Dyson recursion on subspaces SA, SB that both contain 1, SA commutative.
// Terminal when SA e lies in SB for every basis vector e of SB, i.e. k<SA SB> = SB;
// otherwise the first such e that fails gives SA(e) = SA ∩ SB e^-1 and
// SB(e) = SB + SA e, with dim SA(e) < dim SA and the dimension sum preserved.
template <class R>
DysonWitness<R> dyson_transform(const SetInstance<R>& a, const SetInstance<R>& b, const Elem<R>& anchor,
                                std::size_t closure_budget = kDefaultClosureBudget) {
  detail::require_nonempty(a);
  detail::require_nonempty(b);
  require_same_backend(a.backend, b.backend);
  const R& r = *a.backend;
  detail::require_division(r, "Dyson transform");
  if (!detail::is_commutative_set(r, a.elements)) fail(ErrorKind::NonCommutativeA, "A is not commutative");
  const auto span_a = span_of(a), span_b = span_of(b);
  if (r.is_zero(anchor) || !contains(span_a, anchor)) fail(ErrorKind::InvalidArgument, "a must be a nonzero element of k<A>");

  const auto a_inv = r.inverse(anchor);
  const auto b0 = b.elements.front();
  const auto b_inv = r.inverse(b0);
  auto sa = translate(a_inv, span_a, Side::Left);
  auto sb = translate(b_inv, span_b, Side::Right);

  DysonWitness<R> w;
  w.a = anchor;
  w.dim_a = span_a.dim();
  w.dim_b = span_b.dim();
  Subspace<R> h, v;
  for (;;) {
    if (sa.dim() == 1) {
      h = base_field_line(a.backend);
      v = sb;
      break;
    }
    std::optional<Elem<R>> e;
    for (const auto& cand : sb.basis())
      if (!is_subspace_of(coset(sa, cand, Side::Left), sb)) {
        e = cand;
        break;
      }
    if (!e) {
      h = division_closure(a.backend, sa.basis(), closure_budget);
      v = sb;
      break;
    }
    auto next_a = intersect(sa, translate(r.inverse(*e), sb, Side::Right));
    auto next_b = sum(sb, coset(sa, *e, Side::Left));
    if (next_a.dim() >= sa.dim() || next_a.dim() + next_b.dim() != sa.dim() + sb.dim())
      fail(ErrorKind::WitnessCheckFailed, "Dyson step did not preserve the dimension sum");
    sa = std::move(next_a);
    sb = std::move(next_b);
    ++w.depth;
  }
  // back to the original sets: V_a = a V b
  w.v = translate(b0, translate(anchor, v, Side::Left), Side::Right);
  w.h = h;
  const auto ab = product(span_a, span_b);
  w.stabilized = same_subspace(product(w.h, w.v), w.v);
  w.contains_ab = is_subspace_of(translate(anchor, span_b, Side::Left), w.v);
  w.inside_product = is_subspace_of(w.v, ab);
  w.dimension_bound = w.v.dim() + w.h.dim() >= w.dim_a + w.dim_b;
  if (!w.holds()) fail(ErrorKind::WitnessCheckFailed, "Dyson witness failed its invariants");
  return w;
}

// ---------------------------------------------------------------- commutative-prefix Kneser

struct DiderrichReport {
  std::vector<std::size_t> dims;
  std::size_t product_dim = 0;
  std::size_t left_stabilizer_dim = 0;
  std::size_t right_stabilizer_dim = 0;
  bool first_branch = false;  // dim >= sum dim A_i - (n-1)
  bool left_periodic = false;
  bool right_periodic = false;
  bool holds = false;
  bool asserted = false;

  std::string branch() const {
    if (first_branch) return "dimension";
    if (left_periodic && right_periodic) return "periodic-both";
    if (left_periodic) return "periodic-left";
    if (right_periodic) return "periodic-right";
    return "none";
  }
};

template <class R>
DiderrichReport diderrich_check(const std::vector<SetInstance<R>>& sets) {
  if (sets.size() < 2) fail(ErrorKind::ArityMismatch, "need at least two sets");
  for (const auto& s : sets) {
    detail::require_nonempty(s);
    require_same_backend(sets[0].backend, s.backend);
  }
  const R& r = *sets[0].backend;
  detail::require_division(r, "commutative-prefix Kneser");
  for (std::size_t i = 0; i + 1 < sets.size(); ++i)
    if (!detail::is_commutative_set(r, sets[i].elements))
      fail(ErrorKind::NonCommutativePrefix, "set " + std::to_string(i + 1) + " is not commutative");
  DiderrichReport rep;
  long sum = 0;
  for (const auto& s : sets) {
    rep.dims.push_back(span_of(s).dim());
    sum += static_cast<long>(rep.dims.back());
  }
  const auto prod = product_span(sets);
  rep.product_dim = prod.dim();
  rep.left_stabilizer_dim = stabilizer(prod, Side::Left).dim();
  rep.right_stabilizer_dim = stabilizer(prod, Side::Right).dim();
  rep.left_periodic = rep.left_stabilizer_dim > 1;
  rep.right_periodic = rep.right_stabilizer_dim > 1;
  rep.first_branch = static_cast<long>(rep.product_dim) >= sum - static_cast<long>(sets.size() - 1);
  // two sets: left periodic; n sets: periodic on either side
  rep.holds = rep.first_branch || rep.left_periodic || (sets.size() > 2 && rep.right_periodic);
  rep.asserted = !r.field().is_finite() && r.is_separable();
  return rep;
}

// ---------------------------------------------------------------- subset products

template <class R>
struct SubringWitness {
  Subspace<R> v;
  std::optional<Subspace<R>> h;
  std::string route;  // left-stabilizer, right-stabilizer, subfield
  bool one_in_v = false;
  bool asserted = false;
};

// V = k<a_S : S nonempty>, a_S multiplied in ascending index order; looks for a
// division ring H strictly containing k inside V.
template <class R>
SubringWitness<R> aS_subring_search(const BackendPtr<R>& backend, const std::vector<Elem<R>>& as) {
  const R& r = *backend;
  detail::require_division(r, "subset-product search");
  const auto n = r.dimension();
  if (!n) fail(ErrorKind::UnsupportedBackend, "subset-product search needs dim K finite");
  if (as.size() != *n) fail(ErrorKind::WrongArity, "expected " + std::to_string(*n) + " elements, got " + std::to_string(as.size()));
  for (const auto& x : as) {
    if (r.is_zero(x)) fail(ErrorKind::InvalidArgument, "a_i must be nonzero");
    if (x == r.one()) fail(ErrorKind::OneElement, "a_i must differ from 1");
  }
  std::vector<Elem<R>> prods;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << as.size()); ++mask) {
    auto p = r.one();
    for (std::size_t i = 0; i < as.size(); ++i)
      if (mask >> i & 1U) p = r.mul(p, as[i]);
    prods.push_back(std::move(p));
  }
  SubringWitness<R> w;
  w.v = span_elements(backend, prods);
  w.one_in_v = contains(w.v, r.one());
  w.asserted = !r.field().is_finite() && r.is_separable() && *n > 1;
  auto accept = [&](const Subspace<R>& h, const char* route) {
    if (h.dim() > 1 && is_division_closed(h) && is_subspace_of(h, w.v)) {
      w.h = h;
      w.route = route;
      return true;
    }
    return false;
  };
  if (w.one_in_v) {
    if (accept(stabilizer_space(w.v, Side::Left), "left-stabilizer")) return w;
    if (accept(stabilizer_space(w.v, Side::Right), "right-stabilizer")) return w;
  }
  if constexpr (requires { r.subfield_basis(std::size_t{1}); }) {
    for (std::size_t d = 2; d <= *n; ++d) {
      if (*n % d != 0) continue;
      if (accept(span_elements(backend, r.subfield_basis(d)), "subfield")) return w;
    }
  }
  return w;
}

// ---------------------------------------------------------------- small doubling

template <class R>
struct DoublingCover {
  mpq_class epsilon;
  std::size_t dim_a = 0;
  std::size_t dim_a2 = 0;
  Subspace<R> h;
  std::vector<Elem<R>> x;
  bool count_bound = false;  // |X| <= 2/eps - 1
  bool dim_bound = false;    // dim H >= eps dim A
  bool holds = false;
  bool asserted = false;
};

template <class R>
DoublingCover<R> small_doubling_cover(const SetInstance<R>& a, const mpq_class& eps) {
  detail::require_nonempty(a);
  const R& r = *a.backend;
  detail::require_commutative_division(r, "small doubling cover");
  if (eps <= 0 || eps > 1) fail(ErrorKind::InvalidArgument, "epsilon must lie in (0, 1]");
  const auto sa = span_of(a);
  const auto a2 = product(sa, sa);
  DoublingCover<R> c;
  c.epsilon = eps;
  c.dim_a = sa.dim();
  c.dim_a2 = a2.dim();
  if (mpq_class(static_cast<unsigned long>(a2.dim())) > (2 - eps) * static_cast<unsigned long>(sa.dim()))
    fail(ErrorKind::HypothesisFailed, "dim A^2 = " + std::to_string(a2.dim()) + " exceeds (2 - eps) dim A");
  c.h = stabilizer(a2, Side::Left).h;
  c.x = coset_decompose(a2, c.h, Side::Right);
  c.count_bound = mpq_class(static_cast<unsigned long>(c.x.size())) * eps <= 2 - eps;
  c.dim_bound = mpq_class(static_cast<unsigned long>(c.h.dim())) >= eps * static_cast<unsigned long>(sa.dim());
  c.holds = c.count_bound && c.dim_bound;
  c.asserted = r.is_separable();
  return c;
}

// ---------------------------------------------------------------- unital algebras

namespace detail {

template <class R>
void require_group_algebra(const R& r) {
  if (r.kind() != BackendKind::GA) fail(ErrorKind::UnsupportedBackend, "algebra variants run on group algebras, got " + r.describe());
}

}  // namespace detail

// B meets the units and C consists of units; then dim CXB <= rho dim CX <= alpha dim CX.
template <class R>
PetridisReport<R> algebra_petridis(const SetInstance<R>& a, const SetInstance<R>& b, const SetInstance<R>& c,
                                   std::uint64_t budget = kDefaultEnumerationBudget) {
  detail::require_nonempty(a);
  detail::require_nonempty(b);
  detail::require_nonempty(c);
  detail::require_group_algebra(*a.backend);
  if (!detail::any_unit(b)) fail(ErrorKind::UnitPreconditionFailed, "B contains no unit");
  if (!detail::all_units(c)) fail(ErrorKind::UnitPreconditionFailed, "C must consist of units");
  const auto rho = rho_minimize(a, b, RhoMode::Exhaustive, budget);
  auto rep = detail::petridis_core(b, c, rho);
  const auto sa = span_of(a);
  const auto ab = product(sa, span_of(b));
  const auto cx = span_elements(c.backend, products(*c.backend, c.elements, rho.x.basis()));
  rep.holds = rep.holds && rep.cxb_dim * sa.dim() <= ab.dim() * cx.dim();
  return rep;
}

template <class R>
PlunneckeReport<R> algebra_plunnecke(const SetInstance<R>& a, const SetInstance<R>& b, unsigned n_max,
                                     std::uint64_t budget = kDefaultEnumerationBudget) {
  detail::require_nonempty(a);
  detail::require_nonempty(b);
  const R& r = *a.backend;
  detail::require_group_algebra(r);
  if (!detail::all_units(b)) fail(ErrorKind::UnitPreconditionFailed, "B must consist of units");
  if (!r.is_commutative() && !detail::sets_commute(r, a.elements, b.elements))
    fail(ErrorKind::NonAbelianForThAlg1, "the group is not abelian and some a, b do not commute");
  return detail::plunnecke_core(a, b, n_max, budget, 0);
}

template <class R>
TripleReport algebra_triple(const SetInstance<R>& a, const SetInstance<R>& b, const SetInstance<R>& c) {
  detail::require_nonempty(a);
  detail::require_nonempty(b);
  detail::require_nonempty(c);
  detail::require_group_algebra(*a.backend);
  if (!detail::all_units(b)) fail(ErrorKind::UnitPreconditionFailed, "B must consist of units");
  return detail::triple_core(a, b, c);
}

}  // namespace spanbound
