#include "spanbound/cli/json_io.hpp"

#include <fstream>
#include <sstream>

#include "spanbound/error.hpp"

namespace spanbound::cli {

std::string rational_text(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return mpq_class(mpz_class(j.dump()));
  if (!j.is_string()) fail(ErrorKind::ParseError, what + " must be an integer or a \"p/q\" string");
  const auto s = j.get<std::string>();
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) fail(ErrorKind::ParseError, what + ": cannot read '" + s + "' as a rational");
  if (q.get_den() == 0) fail(ErrorKind::ZeroDenominator, what + ": zero denominator");
  q.canonicalize();
  return q;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::filesystem::path& path) {
  const auto text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

std::vector<Json> read_jsonl_file(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  std::vector<Json> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(Json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::ParseError, path.string() + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << text;
}

void append_jsonl(const std::filesystem::path& path, const std::vector<Json>& lines) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot append to " + path.string());
  for (const auto& l : lines) out << l.dump() << '\n';
}

std::string stable_dump(const Json& report) {
  Json copy = report;
  if (copy.is_object()) copy.erase("timing");
  return copy.dump(2) + "\n";
}

}  // namespace spanbound::cli
