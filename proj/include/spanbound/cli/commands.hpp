#pragma once

// The spanbound command line. Exit codes: 0 all asserted checks hold, 1 an
// asserted check failed, 2 usage or backend error, 3 budget exceeded.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spanbound/cli/fuzz.hpp"

namespace spanbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

int exit_code_for(ErrorKind kind);

struct CommonOptions {
  std::optional<std::uint64_t> budget;
  std::optional<RunMode> mode;
  std::optional<std::filesystem::path> out;
};

int cmd_check(const std::filesystem::path& file, const CommonOptions& opts, std::ostream& out, std::ostream& err);
int cmd_atoms(const std::filesystem::path& file, const CommonOptions& opts, std::ostream& out, std::ostream& err);
int cmd_embed_group(const std::filesystem::path& file, const CommonOptions& opts, std::ostream& out, std::ostream& err);
int cmd_fuzz(const FuzzOptions& opts, std::ostream& out, std::ostream& err);
int cmd_report(const std::vector<std::filesystem::path>& logs, const CommonOptions& opts, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace spanbound::cli
