#pragma once

// Finite subsets of groups, product sets and stabilizers, and the dictionary
// X -> A_X = {e_g : g in X} into group algebras. The group-level Kneser,
// Plunnecke and triple inequalities are computed twice: by enumeration in G and
// through dimensions in k0[G].

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spanbound/backend/any.hpp"
#include "spanbound/structure.hpp"
#include "spanbound/theorems.hpp"

namespace spanbound {

struct GroupSet {
  GroupPtr group;
  std::vector<GroupElement> elements;  // sorted, distinct

  std::size_t size() const { return elements.size(); }
  bool operator==(const GroupSet& o) const { return elements == o.elements; }
};

GroupSet make_group_set(GroupPtr group, std::vector<GroupElement> elements);
GroupSet parse_group_set(GroupPtr group, const std::vector<std::string>& texts);
std::vector<std::string> format_group_set(const GroupSet& x);

// {xy : x in X, y in Y}
GroupSet product_set(const GroupSet& x, const GroupSet& y);
// X_1 X_2 ... X_n
GroupSet product_set(const std::vector<GroupSet>& sets);
// X x^-1 for one x, i.e. candidates for S(X); then {g : gX = X}
GroupSet set_stabilizer(const GroupSet& x);
GroupSet subset(const GroupSet& x, std::uint64_t mask);

// Smallest prime not dividing the torsion order, so that GF(p)[G] is semisimple.
std::uint32_t default_group_prime(const Group& g);

std::shared_ptr<const ModularGroupAlgebra> modular_group_algebra(const GroupPtr& g, std::optional<std::uint32_t> p = std::nullopt);
std::shared_ptr<const RationalGroupAlgebra> rational_group_algebra(const GroupPtr& g);

// A_X in k0[G]; asserts |X| = dim k0<A_X>.
template <class F>
SetInstance<GroupAlgebra<F>> to_group_algebra(const GroupSet& x, const std::shared_ptr<const GroupAlgebra<F>>& ga,
                                              std::string name = "") {
  if (ga->group_ptr() != x.group && !(ga->group() == *x.group))
    fail(ErrorKind::GroupMismatch, "set lives in " + x.group->describe() + ", algebra over " + ga->group().describe());
  std::vector<typename GroupAlgebra<F>::element_type> es;
  for (const auto& g : x.elements) es.push_back(ga->basis_element(g));
  auto inst = make_set(ga, std::move(es), std::move(name));
  if (!inst.elements.empty() && span_of(inst).dim() != x.size())
    fail(ErrorKind::WitnessCheckFailed, "dim A_X differs from |X|");
  return inst;
}

template <class F>
Subspace<GroupAlgebra<F>> group_span(const GroupSet& x, const std::shared_ptr<const GroupAlgebra<F>>& ga) {
  return span_of(to_group_algebra(x, ga));
}

// |X| = dim A_X, |XY| = dim A_X A_Y, span e_{S(X)} = left stabilizer of span A_X.
struct CorrespondenceReport {
  std::size_t x_size = 0, x_dim = 0;
  std::size_t xy_size = 0, xy_dim = 0;
  std::size_t stabilizer_size = 0, stabilizer_dim = 0;
  bool stabilizer_match = false;

  bool holds() const { return x_size == x_dim && xy_size == xy_dim && stabilizer_size == stabilizer_dim && stabilizer_match; }
};

template <class F>
CorrespondenceReport correspondence_check(const GroupSet& x, const GroupSet& y, const std::shared_ptr<const GroupAlgebra<F>>& ga) {
  CorrespondenceReport rep;
  const auto ax = group_span(x, ga), ay = group_span(y, ga);
  rep.x_size = x.size();
  rep.x_dim = ax.dim();
  rep.xy_size = product_set(x, y).size();
  rep.xy_dim = product(ax, ay).dim();
  const auto s = set_stabilizer(x);
  const auto es = group_span(s, ga);
  const auto h = stabilizer_space(ax, Side::Left);
  rep.stabilizer_size = s.size();
  rep.stabilizer_dim = h.dim();
  rep.stabilizer_match = same_subspace(es, h);
  return rep;
}

// |XY| >= |X| + |Y| - |H| with H = S(XY), abelian G.
struct GroupKneserReport {
  std::size_t x = 0, y = 0, xy = 0, h = 0;              // enumeration
  std::size_t dim_x = 0, dim_y = 0, dim_xy = 0, dim_h = 0;  // group algebra
  bool agree = false;
  bool holds = false;
  bool ga_holds = false;
};

template <class F>
GroupKneserReport group_kneser_check(const GroupSet& x, const GroupSet& y, const std::shared_ptr<const GroupAlgebra<F>>& ga) {
  if (x.group != y.group && !(*x.group == *y.group)) fail(ErrorKind::GroupMismatch, "X and Y live in different groups");
  if (!x.group->is_abelian()) fail(ErrorKind::NonAbelianGroup, "Kneser needs an abelian group, got " + x.group->describe());
  if (x.elements.empty() || y.elements.empty()) fail(ErrorKind::EmptySet, "Kneser needs nonempty sets");
  GroupKneserReport rep;
  const auto xy = product_set(x, y);
  rep.x = x.size();
  rep.y = y.size();
  rep.xy = xy.size();
  rep.h = set_stabilizer(xy).size();
  rep.holds = rep.xy + rep.h >= rep.x + rep.y;
  const auto ax = group_span(x, ga), ay = group_span(y, ga);
  const auto axy = product(ax, ay);
  rep.dim_x = ax.dim();
  rep.dim_y = ay.dim();
  rep.dim_xy = axy.dim();
  rep.dim_h = stabilizer_space(axy, Side::Left).dim();
  rep.ga_holds = rep.dim_xy + rep.dim_h >= rep.dim_x + rep.dim_y;
  rep.agree = rep.x == rep.dim_x && rep.y == rep.dim_y && rep.xy == rep.dim_xy && rep.h == rep.dim_h && rep.holds == rep.ga_holds;
  return rep;
}

// Z in X minimizing |ZY|/|Z| (first strict minimum over nonempty subsets in mask
// order); |ZY^n| <= alpha^n |Z| with alpha = |XY|/|X|, each size also as a dimension.
struct GroupPlunneckeReport {
  mpq_class alpha;
  mpq_class ratio;  // |ZY| / |Z|
  std::vector<GroupElement> z;
  std::vector<std::size_t> zyn;      // |Z Y^n|, n = 1..n_max
  std::vector<std::size_t> zyn_dim;  // dim A_Z A_Y^n
  std::optional<bool> ga_holds;      // the algebra variant on A_X, A_Y when within budget
  bool agree = false;
  bool holds = false;
};

inline constexpr std::size_t kMaxPlunneckeSubsetSize = 16;

template <class F>
GroupPlunneckeReport group_plunnecke_check(const GroupSet& x, const GroupSet& y, unsigned n_max,
                                           const std::shared_ptr<const GroupAlgebra<F>>& ga,
                                           std::uint64_t budget = kDefaultEnumerationBudget) {
  if (x.group != y.group && !(*x.group == *y.group)) fail(ErrorKind::GroupMismatch, "X and Y live in different groups");
  if (!x.group->is_abelian()) fail(ErrorKind::NonAbelianGroup, "Plunnecke needs an abelian group, got " + x.group->describe());
  if (x.elements.empty() || y.elements.empty()) fail(ErrorKind::EmptySet, "Plunnecke needs nonempty sets");
  if (n_max < 1) fail(ErrorKind::InvalidArgument, "n_max must be at least 1");
  if (x.size() > kMaxPlunneckeSubsetSize) fail(ErrorKind::BudgetExceeded, "|X| too large for subset enumeration");
  GroupPlunneckeReport rep;
  rep.alpha = mpq_class(static_cast<unsigned long>(product_set(x, y).size()), static_cast<unsigned long>(x.size()));
  rep.alpha.canonicalize();
  std::optional<GroupSet> best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << x.size()); ++mask) {
    auto z = subset(x, mask);
    mpq_class q(static_cast<unsigned long>(product_set(z, y).size()), static_cast<unsigned long>(z.size()));
    q.canonicalize();
    if (!best || q < rep.ratio) {
      rep.ratio = q;
      best = std::move(z);
    }
  }
  rep.z = best->elements;
  rep.holds = true;
  rep.agree = true;
  auto zy = *best;
  auto az = group_span(*best, ga);
  const auto ay = group_span(y, ga);
  mpq_class bound = best->size();
  for (unsigned n = 1; n <= n_max; ++n) {
    zy = product_set(zy, y);
    az = product(az, ay);
    bound *= rep.alpha;
    rep.zyn.push_back(zy.size());
    rep.zyn_dim.push_back(az.dim());
    rep.holds = rep.holds && mpq_class(static_cast<unsigned long>(zy.size())) <= bound;
    rep.agree = rep.agree && zy.size() == az.dim();
  }
  try {
    rep.ga_holds = algebra_plunnecke(to_group_algebra(x, ga), to_group_algebra(y, ga), n_max, budget).holds;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded && e.kind() != ErrorKind::InfiniteFieldExhaustive) throw;
  }
  return rep;
}

// |XYZ|^2 <= |XY| |YZ| max_y |XyZ| for any G.
struct GroupRuzsaReport {
  std::size_t xyz = 0, xy = 0, yz = 0, max_xyz = 0;
  TripleReport ga;
  bool agree = false;
  bool holds = false;
};

template <class F>
GroupRuzsaReport group_ruzsa_check(const GroupSet& x, const GroupSet& y, const GroupSet& z,
                                   const std::shared_ptr<const GroupAlgebra<F>>& ga) {
  if ((x.group != y.group && !(*x.group == *y.group)) || (y.group != z.group && !(*y.group == *z.group)))
    fail(ErrorKind::GroupMismatch, "X, Y, Z live in different groups");
  if (x.elements.empty() || y.elements.empty() || z.elements.empty()) fail(ErrorKind::EmptySet, "triple inequality needs nonempty sets");
  GroupRuzsaReport rep;
  rep.xyz = product_set({x, y, z}).size();
  rep.xy = product_set(x, y).size();
  rep.yz = product_set(y, z).size();
  for (const auto& g : y.elements) {
    GroupSet single = make_group_set(y.group, {g});
    rep.max_xyz = std::max(rep.max_xyz, product_set({x, single, z}).size());
  }
  rep.holds = mpz_class(rep.xyz) * rep.xyz <= mpz_class(rep.xy) * rep.yz * rep.max_xyz;
  rep.ga = algebra_triple(to_group_algebra(x, ga), to_group_algebra(y, ga), to_group_algebra(z, ga));
  rep.agree = rep.ga.abc == rep.xyz && rep.ga.ab == rep.xy && rep.ga.bc == rep.yz && rep.ga.max_abc == rep.max_xyz &&
              rep.ga.holds == rep.holds;
  return rep;
}

// eta(g) = T^g as the monomial e_g in Q[Z^l]; torsion-free groups only.
struct EmbeddingReport {
  SetInstance<RationalGroupAlgebra> image;
  std::size_t size = 0, dim = 0;
  std::optional<std::size_t> xy_size, xy_dim;
  bool homomorphism = false;  // eta(g) eta(h) = eta(gh) on X x X (and X x Y)
  bool stabilizer_trivial = false;  // S(X) = {1} and the left stabilizer of span eta(X) is k

  bool holds() const { return size == dim && xy_size == xy_dim && homomorphism && stabilizer_trivial; }
};

EmbeddingReport embed_torsion_free(const GroupSet& x, const std::optional<GroupSet>& y = std::nullopt);

}  // namespace spanbound
