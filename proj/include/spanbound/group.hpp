#pragma once

// Finite Cayley-table groups and finitely generated abelian groups
// Z^l x Z/t1 x ... x Z/tr in invariant-factor form.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spanbound/rng.hpp"

namespace spanbound {

// Cayley groups: a single table index. Abelian groups: l free exponents followed by
// r torsion exponents reduced into [0, t_j).
using GroupElement = std::vector<std::int64_t>;

class Group {
 public:
  // table[a][b] = index of a*b; index 0 must be the identity.
  static Group cayley(std::vector<std::vector<std::uint32_t>> table, std::string name = "");
  static Group abelian(int free_rank, std::vector<std::int64_t> invariant_factors);
  // "Z/5", "Z/2xZ/4", "Z", "Z^2", "Z^2xZ/3", "S3", "D4"
  static Group parse(std::string_view spec);
  // First line: order m; then m lines of m indices.
  static Group from_cayley_text(std::string_view text, std::string name = "");
  static Group symmetric3();
  static Group dihedral4();

  bool is_cayley() const { return !table_.empty(); }
  bool is_finite() const { return is_cayley() || free_rank_ == 0; }
  bool is_abelian() const { return abelian_; }
  // Order of a finite group; nullopt when the free rank is positive.
  std::optional<std::uint64_t> order() const;
  int free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  // Order of the torsion part for abelian groups, the group order for Cayley groups.
  std::uint64_t torsion_order() const;

  GroupElement identity() const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  bool is_valid(const GroupElement& a) const;

  // Enumeration of finite groups in canonical order; index 0 is the identity.
  std::vector<GroupElement> elements() const;
  std::size_t index_of(const GroupElement& a) const;
  GroupElement element_at(std::size_t i) const;

  std::string format(const GroupElement& a) const;
  // Throws UnknownGroupElement for malformed or out-of-range input.
  GroupElement parse_element(std::string_view text) const;

  // Uniform for finite groups; free exponents drawn from [-radius, radius].
  GroupElement sample(Rng& rng, int radius) const;

  const std::string& describe() const { return name_; }
  bool operator==(const Group& other) const { return name_ == other.name_ && table_ == other.table_; }

 private:
  Group() = default;
  std::size_t components() const { return static_cast<std::size_t>(free_rank_) + factors_.size(); }

  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> inverse_;
  int free_rank_ = 0;
  std::vector<std::int64_t> factors_;
  bool abelian_ = true;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const Group>;

}  // namespace spanbound
