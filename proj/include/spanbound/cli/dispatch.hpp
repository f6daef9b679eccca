#pragma once

// Checker names to library calls. Every record carries the sets it ran on,
// exact quantities, serialized witnesses, and the holds/asserted verdict.

#include <filesystem>
#include <string>
#include <vector>

#include "spanbound/backend/any.hpp"
#include "spanbound/cli/instance.hpp"
#include "spanbound/group.hpp"

namespace spanbound::cli {

struct CheckOutcome {
  Json record;
  bool holds = true;
  bool asserted = false;
};

const std::vector<std::string>& backend_checkers();
const std::vector<std::string>& group_checkers();
bool is_backend_checker(std::string_view name);
bool is_group_checker(std::string_view name);

// IncompatibleChecker when the backend cannot host the checker's hypotheses.
void require_compatible(const AnyBackend& backend, const std::string& checker);

CheckOutcome run_checker(const AnyBackend& backend, const std::string& checker, const NamedSets& sets, const CheckParams& params);

GroupPtr load_group(const std::string& spec, const std::filesystem::path& base_dir = ".");
CheckOutcome run_group_checker(const GroupPtr& group, const std::string& checker, const NamedSets& sets, const CheckParams& params);

// Seeded random sets for one fuzz case, as element strings.
NamedSets sample_sets(const AnyBackend& backend, const std::string& checker, Rng& rng, const SizeBudget& size, std::size_t max_set);

}  // namespace spanbound::cli
