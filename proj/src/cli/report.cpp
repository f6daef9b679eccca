#include "spanbound/cli/report.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "spanbound/error.hpp"

namespace spanbound::cli {

std::vector<Json> load_run_logs(const std::vector<std::filesystem::path>& paths) {
  std::vector<Json> out;
  for (const auto& p : paths) {
    if (p.extension() == ".jsonl") {
      auto lines = read_jsonl_file(p);
      out.insert(out.end(), lines.begin(), lines.end());
    } else {
      out.push_back(read_json_file(p));
    }
  }
  return out;
}

namespace {

struct Row {
  std::string theorem;
  std::string backend;
  std::size_t order = 0;
  Json record;
};

std::string status_of(const Json& r) {
  if (r.contains("status") && r["status"].is_string()) return r["status"].get<std::string>();
  const bool holds = r.value("holds", true);
  const bool asserted = r.value("asserted", false);
  if (holds) return "pass";
  return asserted ? "fail" : "finding";
}

void collect(const Json& log, std::vector<Row>& rows) {
  if (!log.is_object()) fail(ErrorKind::ParseError, "run log entries must be JSON objects");
  if (log.contains("records")) {
    if (!log["records"].is_array()) fail(ErrorKind::ParseError, "'records' must be an array");
    for (const auto& r : log["records"]) collect(r, rows);
    return;
  }
  if (!log.contains("checker") || !log["checker"].is_string()) fail(ErrorKind::ParseError, "record without a checker name");
  Row row;
  row.theorem = log["checker"].get<std::string>();
  row.backend = log.contains("backend") && log["backend"].is_string() ? log["backend"].get<std::string>() : "";
  row.order = rows.size();
  row.record = log;
  rows.push_back(std::move(row));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string value_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::optional<mpq_class> rational_of(const Json& v) {
  try {
    return parse_rational(v, "rho");
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string instance_label(const Json& r) {
  if (r.contains("index")) return "#" + r["index"].dump();
  return "";
}

}  // namespace

ReportFiles build_report(const std::vector<Json>& logs) {
  std::vector<Row> rows;
  for (const auto& l : logs) collect(l, rows);
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.theorem != b.theorem) return a.theorem < b.theorem;
    if (a.backend != b.backend) return a.backend < b.backend;
    return a.order < b.order;
  });

  struct Group {
    std::size_t total = 0, pass = 0, fail = 0, finding = 0, skipped = 0;
    std::optional<long> slack;
    std::string slack_at;
    std::optional<mpq_class> rho;
    std::string rho_at;
  };
  std::vector<std::pair<std::pair<std::string, std::string>, Group>> groups;
  std::ostringstream csv;
  csv << "theorem,backend,instance,seed,status,quantity,value\n";
  for (const auto& row : rows) {
    if (groups.empty() || groups.back().first != std::make_pair(row.theorem, row.backend)) groups.push_back({{row.theorem, row.backend}, {}});
    auto& g = groups.back().second;
    const auto& r = row.record;
    const auto st = status_of(r);
    ++g.total;
    if (st == "pass") ++g.pass;
    else if (st == "fail") ++g.fail;
    else if (st == "finding") ++g.finding;
    else ++g.skipped;
    const std::string inst = r.contains("index") ? r["index"].dump() : "";
    const std::string seed = r.contains("seed") ? r["seed"].dump() : "";
    if (r.contains("quantities") && r["quantities"].is_object()) {
      const auto& q = r["quantities"];
      for (const auto& [key, v] : q.items())
        csv << csv_field(row.theorem) << ',' << csv_field(row.backend) << ',' << inst << ',' << seed << ',' << st << ',' << csv_field(key)
            << ',' << csv_field(value_text(v)) << '\n';
      if (q.contains("slack") && q["slack"].is_number_integer()) {
        const long s = q["slack"].get<long>();
        if (!g.slack || s < *g.slack) {
          g.slack = s;
          g.slack_at = instance_label(r);
        }
      }
      if (q.contains("rho"))
        if (auto v = rational_of(q["rho"]); v && (!g.rho || *v > *g.rho)) {
          g.rho = *v;
          g.rho_at = instance_label(r);
        }
    }
  }

  std::ostringstream md;
  md << "| theorem | backend | records | pass | fail | findings | skipped | tightest slack | largest rho |\n";
  md << "|---|---|---|---|---|---|---|---|---|\n";
  auto with_at = [](const std::string& v, const std::string& at) { return at.empty() ? v : v + " (" + at + ")"; };
  for (const auto& [key, g] : groups) {
    md << "| " << key.first << " | " << key.second << " | " << g.total << " | " << g.pass << " | " << g.fail << " | " << g.finding << " | "
       << g.skipped << " | " << (g.slack ? with_at(std::to_string(*g.slack), g.slack_at) : "-") << " | "
       << (g.rho ? with_at(g.rho->get_str(), g.rho_at) : "-") << " |\n";
  }
  return {md.str(), csv.str(), rows.size()};
}

}  // namespace spanbound::cli
