#pragma once

// JSON plumbing shared by the commands. ordered_json keeps keys in insertion
// order so that reports are byte-stable.

#include <gmpxx.h>

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace spanbound::cli {

using Json = nlohmann::ordered_json;

std::string rational_text(const mpq_class& q);
// Accepts an integer, "p/q" string, or decimal-free integer string.
mpq_class parse_rational(const Json& j, const std::string& what);

Json read_json_file(const std::filesystem::path& path);
// One JSON value per nonempty line.
std::vector<Json> read_jsonl_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
void append_jsonl(const std::filesystem::path& path, const std::vector<Json>& lines);

// The report minus its "timing" member, serialized.
std::string stable_dump(const Json& report);

}  // namespace spanbound::cli
