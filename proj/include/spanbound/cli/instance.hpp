#pragma once

// Instance files:
//
//   {
//     "backend": "FF(2,x^4+x+1)",            or "group": "Z/6" | "cayley:table.txt"
//     "sets": {"A": ["1", "x"], "B": ["1", "x"]},
//     "query": {"checker": "kneser", "args": ["A", "B"],
//               "epsilon": "1/2", "lambda": "1/2", "n_max": 3,
//               "budget": 2000000, "rho": "exhaustive", "mode": "assert",
//               "element": "x", "field": "GF(7)"},
//     "seed": 42
//   }

#include <gmpxx.h>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spanbound/cli/json_io.hpp"
#include "spanbound/theorems.hpp"

namespace spanbound::cli {

enum class RunMode { Assert, Report };

std::string_view to_string(RunMode m);
RunMode parse_run_mode(std::string_view s);
RhoMode parse_rho_mode(std::string_view s);

using NamedSets = std::vector<std::pair<std::string, std::vector<std::string>>>;

struct CheckParams {
  std::optional<mpq_class> epsilon;
  std::optional<mpq_class> lambda;
  unsigned n_max = 3;
  std::uint64_t budget = kDefaultEnumerationBudget;
  RhoMode rho = RhoMode::Exhaustive;
  std::optional<std::string> element;
  std::optional<std::string> field;  // base field for group algebras: "GF(p)" or "Q"
  std::uint64_t seed = 0;
};

struct Query {
  std::string checker;
  std::vector<std::string> args;  // set names, in order
  CheckParams params;
  std::optional<RunMode> mode;
};

struct Instance {
  std::optional<std::string> backend;
  std::optional<std::string> group;
  NamedSets sets;
  Query query;
  std::uint64_t seed = 0;
  std::filesystem::path base_dir = ".";

  // The sets named by query.args, or every set when args is empty.
  NamedSets arguments() const;
};

Instance parse_instance(const Json& j, const std::filesystem::path& base_dir = ".");
Instance load_instance(const std::filesystem::path& path);

}  // namespace spanbound::cli
