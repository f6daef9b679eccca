#pragma once

// Run logs to a Markdown summary (pass counts and extremal instances per
// theorem and backend) and a long-format CSV of every raw quantity.

#include <filesystem>
#include <string>
#include <vector>

#include "spanbound/cli/json_io.hpp"

namespace spanbound::cli {

struct ReportFiles {
  std::string markdown;
  std::string csv;
  std::size_t records = 0;
};

// A .json file holds one run report or one record; a .jsonl file one per line.
std::vector<Json> load_run_logs(const std::vector<std::filesystem::path>& paths);

// Flattens run reports into records; rows are ordered by theorem, then backend,
// then input order.
ReportFiles build_report(const std::vector<Json>& logs);

}  // namespace spanbound::cli
