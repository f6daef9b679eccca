#include "spanbound/groups.hpp"

#include <algorithm>
#include <set>

namespace spanbound {

GroupSet make_group_set(GroupPtr group, std::vector<GroupElement> elements) {
  for (const auto& g : elements)
    if (!group->is_valid(g)) fail(ErrorKind::UnknownGroupElement, "element is not in " + group->describe());
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return {std::move(group), std::move(elements)};
}

GroupSet parse_group_set(GroupPtr group, const std::vector<std::string>& texts) {
  std::vector<GroupElement> es;
  for (const auto& t : texts) es.push_back(group->parse_element(t));
  return make_group_set(std::move(group), std::move(es));
}

std::vector<std::string> format_group_set(const GroupSet& x) {
  std::vector<std::string> out;
  for (const auto& g : x.elements) out.push_back(x.group->format(g));
  return out;
}

namespace {

void require_same_group(const GroupSet& x, const GroupSet& y) {
  if (x.group != y.group && !(*x.group == *y.group))
    fail(ErrorKind::GroupMismatch, "sets live in " + x.group->describe() + " and " + y.group->describe());
}

}  // namespace

GroupSet product_set(const GroupSet& x, const GroupSet& y) {
  require_same_group(x, y);
  std::set<GroupElement> out;
  for (const auto& a : x.elements)
    for (const auto& b : y.elements) out.insert(x.group->mul(a, b));
  return {x.group, {out.begin(), out.end()}};
}

GroupSet product_set(const std::vector<GroupSet>& sets) {
  if (sets.empty()) fail(ErrorKind::EmptySet, "product of no sets");
  GroupSet acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) acc = product_set(acc, sets[i]);
  return acc;
}

GroupSet set_stabilizer(const GroupSet& x) {
  const Group& g = *x.group;
  if (x.elements.empty()) fail(ErrorKind::EmptySet, "stabilizer of an empty set");
  // gX = X forces g x0 in X
  const auto inv = g.inverse(x.elements.front());
  std::vector<GroupElement> out;
  for (const auto& a : x.elements) {
    auto cand = g.mul(a, inv);
    std::vector<GroupElement> moved;
    for (const auto& b : x.elements) moved.push_back(g.mul(cand, b));
    std::sort(moved.begin(), moved.end());
    if (moved == x.elements) out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end());
  return {x.group, std::move(out)};
}

GroupSet subset(const GroupSet& x, std::uint64_t mask) {
  GroupSet out{x.group, {}};
  for (std::size_t i = 0; i < x.size(); ++i)
    if (mask >> i & 1U) out.elements.push_back(x.elements[i]);
  return out;
}

std::uint32_t default_group_prime(const Group& g) {
  const auto t = g.torsion_order();
  for (std::uint32_t p = 2;; ++p) {
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime && t % p != 0) return p;
  }
}

std::shared_ptr<const ModularGroupAlgebra> modular_group_algebra(const GroupPtr& g, std::optional<std::uint32_t> p) {
  return std::make_shared<const ModularGroupAlgebra>(PrimeField(p.value_or(default_group_prime(*g))), g);
}

std::shared_ptr<const RationalGroupAlgebra> rational_group_algebra(const GroupPtr& g) {
  return std::make_shared<const RationalGroupAlgebra>(RationalField(), g);
}

EmbeddingReport embed_torsion_free(const GroupSet& x, const std::optional<GroupSet>& y) {
  const Group& g = *x.group;
  if (g.is_cayley() || !g.invariant_factors().empty())
    fail(ErrorKind::TorsionPresent, g.describe() + " has torsion; use the group algebra route");
  if (g.free_rank() < 1) fail(ErrorKind::TorsionPresent, "the trivial group has nothing to embed");
  if (x.elements.empty()) fail(ErrorKind::EmptySet, "embedding an empty set");
  const auto ga = rational_group_algebra(x.group);
  EmbeddingReport rep;
  rep.image = to_group_algebra(x, ga, "eta(X)");
  rep.size = x.size();
  const auto vx = span_of(rep.image);
  rep.dim = vx.dim();

  rep.homomorphism = true;
  auto check_pairs = [&](const GroupSet& u, const GroupSet& w) {
    for (const auto& a : u.elements)
      for (const auto& b : w.elements)
        if (ga->mul(ga->basis_element(a), ga->basis_element(b)) != ga->basis_element(g.mul(a, b))) rep.homomorphism = false;
  };
  check_pairs(x, x);
  if (y) {
    require_same_group(x, *y);
    check_pairs(x, *y);
    rep.xy_size = product_set(x, *y).size();
    rep.xy_dim = product(vx, group_span(*y, ga)).dim();
  }
  const auto s = set_stabilizer(x);
  const auto h = stabilizer_space(vx, Side::Left);
  rep.stabilizer_trivial = s.size() == 1 && h.dim() == 1 && same_subspace(h, base_field_line(std::shared_ptr<const RationalGroupAlgebra>(ga)));
  return rep;
}

}  // namespace spanbound
