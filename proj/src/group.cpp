#include "spanbound/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "spanbound/error.hpp"

namespace spanbound {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::int64_t parse_int(std::string_view s, ErrorKind kind, const std::string& context) {
  std::string t = trim(s);
  if (t.empty()) fail(kind, "expected an integer in '" + context + "'");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) fail(kind, "expected an integer in '" + context + "'");
  for (std::size_t j = i; j < t.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(t[j]))) fail(kind, "expected an integer in '" + context + "'");
  if (t.size() > 18) fail(kind, "integer out of range in '" + context + "'");
  return std::stoll(t);
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

using Perm = std::vector<std::uint32_t>;

Perm compose(const Perm& a, const Perm& b) {  // (a b)(x) = a(b(x))
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}

Group permutation_group(std::vector<Perm> gens, std::size_t degree, std::string name) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0U);
  std::vector<Perm> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Perm p = compose(elems[i], g);
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p);
    }
  std::sort(elems.begin(), elems.end());
  std::map<Perm, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  std::vector<std::vector<std::uint32_t>> table(elems.size(), std::vector<std::uint32_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  return Group::cayley(std::move(table), std::move(name));
}

}  // namespace

Group Group::cayley(std::vector<std::vector<std::uint32_t>> table, std::string name) {
  const std::size_t m = table.size();
  if (m == 0) fail(ErrorKind::InvalidGroup, "empty Cayley table");
  if (m > 256) fail(ErrorKind::InvalidGroup, "Cayley tables are limited to order 256");
  for (const auto& row : table) {
    if (row.size() != m) fail(ErrorKind::InvalidGroup, "Cayley table is not square");
    std::vector<bool> seen(m, false);
    for (auto v : row) {
      if (v >= m) fail(ErrorKind::InvalidGroup, "Cayley table entry out of range");
      if (seen[v]) fail(ErrorKind::InvalidGroup, "Cayley table row is not a permutation");
      seen[v] = true;
    }
  }
  for (std::uint32_t a = 0; a < m; ++a)
    if (table[0][a] != a || table[a][0] != a) fail(ErrorKind::InvalidGroup, "index 0 is not the identity");
  if (m <= 64) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]]) fail(ErrorKind::InvalidGroup, "Cayley table is not associative");
  }
  Group g;
  g.inverse_.assign(m, 0);
  for (std::uint32_t a = 0; a < m; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < m; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) {
        g.inverse_[a] = b;
        found = true;
        break;
      }
    if (!found) fail(ErrorKind::InvalidGroup, "element without a two-sided inverse");
  }
  g.abelian_ = true;
  for (std::size_t a = 0; a < m && g.abelian_; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (table[a][b] != table[b][a]) {
        g.abelian_ = false;
        break;
      }
  g.table_ = std::move(table);
  g.name_ = name.empty() ? "cayley" + std::to_string(m) : std::move(name);
  return g;
}

Group Group::abelian(int free_rank, std::vector<std::int64_t> invariant_factors) {
  if (free_rank < 0) fail(ErrorKind::InvalidGroup, "negative free rank");
  std::uint64_t torsion = 1;
  for (auto t : invariant_factors) {
    if (t < 2) fail(ErrorKind::InvalidGroup, "invariant factors must be at least 2");
    torsion *= static_cast<std::uint64_t>(t);
    if (torsion > (1U << 20)) fail(ErrorKind::InvalidGroup, "torsion part too large");
  }
  Group g;
  g.free_rank_ = free_rank;
  g.factors_ = std::move(invariant_factors);
  g.abelian_ = true;
  std::string name;
  if (free_rank == 1) name = "Z";
  if (free_rank > 1) name = "Z^" + std::to_string(free_rank);
  for (auto t : g.factors_) name += (name.empty() ? "" : "x") + std::string("Z/") + std::to_string(t);
  g.name_ = name.empty() ? "1" : name;
  return g;
}

Group Group::symmetric3() { return permutation_group({{1, 0, 2}, {1, 2, 0}}, 3, "S3"); }

Group Group::dihedral4() { return permutation_group({{1, 2, 3, 0}, {0, 3, 2, 1}}, 4, "D4"); }

Group Group::parse(std::string_view spec) {
  std::string s = trim(spec);
  if (s == "S3") return symmetric3();
  if (s == "D4") return dihedral4();
  if (s == "1") return abelian(0, {});
  int free_rank = 0;
  std::vector<std::int64_t> factors;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    part = trim(part);
    if (part == "Z") {
      free_rank += 1;
    } else if (part.rfind("Z^", 0) == 0) {
      free_rank += static_cast<int>(parse_int(part.substr(2), ErrorKind::InvalidGroup, s));
    } else if (part.rfind("Z/", 0) == 0) {
      factors.push_back(parse_int(part.substr(2), ErrorKind::InvalidGroup, s));
    } else {
      fail(ErrorKind::InvalidGroup, "unrecognized group spec '" + s + "'");
    }
  }
  return abelian(free_rank, std::move(factors));
}

Group Group::from_cayley_text(std::string_view text, std::string name) {
  std::stringstream ss{std::string(text)};
  long long m = 0;
  if (!(ss >> m) || m <= 0 || m > 256) fail(ErrorKind::InvalidGroup, "Cayley text must start with an order in [1, 256]");
  std::vector<std::vector<std::uint32_t>> table(static_cast<std::size_t>(m), std::vector<std::uint32_t>(static_cast<std::size_t>(m)));
  for (auto& row : table)
    for (auto& v : row) {
      long long x;
      if (!(ss >> x) || x < 0) fail(ErrorKind::InvalidGroup, "Cayley text has too few or negative entries");
      v = static_cast<std::uint32_t>(x);
    }
  std::string rest;
  if (ss >> rest) fail(ErrorKind::InvalidGroup, "trailing data after Cayley table");
  return cayley(std::move(table), std::move(name));
}

std::optional<std::uint64_t> Group::order() const {
  if (is_cayley()) return table_.size();
  if (free_rank_ > 0) return std::nullopt;
  return torsion_order();
}

std::uint64_t Group::torsion_order() const {
  if (is_cayley()) return table_.size();
  std::uint64_t n = 1;
  for (auto t : factors_) n *= static_cast<std::uint64_t>(t);
  return n;
}

GroupElement Group::identity() const {
  if (is_cayley()) return {0};
  return GroupElement(components(), 0);
}

bool Group::is_valid(const GroupElement& a) const {
  if (is_cayley()) return a.size() == 1 && a[0] >= 0 && static_cast<std::size_t>(a[0]) < table_.size();
  if (a.size() != components()) return false;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    auto v = a[static_cast<std::size_t>(free_rank_) + j];
    if (v < 0 || v >= factors_[j]) return false;
  }
  return true;
}

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
  if (is_cayley()) return {static_cast<std::int64_t>(table_[static_cast<std::size_t>(a[0])][static_cast<std::size_t>(b[0])])};
  GroupElement r(components());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    auto& v = r[static_cast<std::size_t>(free_rank_) + j];
    v = floor_mod(v, factors_[j]);
  }
  return r;
}

GroupElement Group::inverse(const GroupElement& a) const {
  if (is_cayley()) return {static_cast<std::int64_t>(inverse_[static_cast<std::size_t>(a[0])])};
  GroupElement r(components());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -a[i];
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    auto& v = r[static_cast<std::size_t>(free_rank_) + j];
    v = floor_mod(v, factors_[j]);
  }
  return r;
}

std::vector<GroupElement> Group::elements() const {
  auto n = order();
  if (!n) fail(ErrorKind::UnsupportedBackend, "cannot enumerate the infinite group " + name_);
  std::vector<GroupElement> out;
  out.reserve(*n);
  for (std::size_t i = 0; i < *n; ++i) out.push_back(element_at(i));
  return out;
}

// Abelian elements are indexed in mixed radix with the last factor varying fastest.
std::size_t Group::index_of(const GroupElement& a) const {
  if (is_cayley()) return static_cast<std::size_t>(a[0]);
  if (free_rank_ > 0) fail(ErrorKind::UnsupportedBackend, "no finite indexing for " + name_);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) idx = idx * static_cast<std::size_t>(factors_[j]) + static_cast<std::size_t>(a[j]);
  return idx;
}

GroupElement Group::element_at(std::size_t i) const {
  if (is_cayley()) return {static_cast<std::int64_t>(i)};
  GroupElement r(factors_.size());
  for (std::size_t j = factors_.size(); j-- > 0;) {
    r[j] = static_cast<std::int64_t>(i % static_cast<std::size_t>(factors_[j]));
    i /= static_cast<std::size_t>(factors_[j]);
  }
  return r;
}

std::string Group::format(const GroupElement& a) const {
  if (a.size() == 1) return std::to_string(a[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

GroupElement Group::parse_element(std::string_view text) const {
  std::string s = trim(text);
  const std::string ctx = "group element '" + s + "' of " + name_;
  GroupElement r;
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') fail(ErrorKind::UnknownGroupElement, ctx);
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string part;
    while (std::getline(ss, part, ',')) r.push_back(parse_int(part, ErrorKind::UnknownGroupElement, ctx));
  } else {
    r.push_back(parse_int(s, ErrorKind::UnknownGroupElement, ctx));
  }
  if (is_cayley()) {
    if (!is_valid(r)) fail(ErrorKind::UnknownGroupElement, ctx);
    return r;
  }
  if (r.size() != components()) fail(ErrorKind::UnknownGroupElement, ctx);
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    auto& v = r[static_cast<std::size_t>(free_rank_) + j];
    v = floor_mod(v, factors_[j]);
  }
  return r;
}

GroupElement Group::sample(Rng& rng, int radius) const {
  if (is_finite()) return element_at(static_cast<std::size_t>(rng.below(*order())));
  GroupElement r(components());
  for (int i = 0; i < free_rank_; ++i) r[static_cast<std::size_t>(i)] = rng.between(-radius, radius);
  for (std::size_t j = 0; j < factors_.size(); ++j)
    r[static_cast<std::size_t>(free_rank_) + j] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(factors_[j])));
  return r;
}

}  // namespace spanbound
