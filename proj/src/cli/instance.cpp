#include "spanbound/cli/instance.hpp"

namespace spanbound::cli {

std::string_view to_string(RunMode m) { return m == RunMode::Assert ? "assert" : "report"; }

RunMode parse_run_mode(std::string_view s) {
  if (s == "assert") return RunMode::Assert;
  if (s == "report") return RunMode::Report;
  fail(ErrorKind::ParseError, "mode must be assert or report, got '" + std::string(s) + "'");
}

RhoMode parse_rho_mode(std::string_view s) {
  if (s == "exhaustive") return RhoMode::Exhaustive;
  if (s == "heuristic") return RhoMode::Heuristic;
  fail(ErrorKind::ParseError, "rho must be exhaustive or heuristic, got '" + std::string(s) + "'");
}

NamedSets Instance::arguments() const {
  if (query.args.empty()) return sets;
  NamedSets out;
  for (const auto& name : query.args) {
    auto it = std::find_if(sets.begin(), sets.end(), [&](const auto& s) { return s.first == name; });
    if (it == sets.end()) fail(ErrorKind::ParseError, "query refers to undefined set '" + name + "'");
    out.push_back(*it);
  }
  return out;
}

namespace {

std::string get_string(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) fail(ErrorKind::ParseError, std::string("'") + key + "' must be a string");
  return j[key].get<std::string>();
}

std::uint64_t get_count(const Json& j, const char* key) {
  if (!j[key].is_number_unsigned()) fail(ErrorKind::ParseError, std::string("'") + key + "' must be a nonnegative integer");
  return j[key].get<std::uint64_t>();
}

}  // namespace

Instance parse_instance(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "instance must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "backend" && key != "group" && key != "sets" && key != "query" && key != "seed")
      fail(ErrorKind::ParseError, "unknown instance key '" + key + "'");
  Instance inst;
  inst.base_dir = base_dir;
  if (j.contains("backend")) inst.backend = get_string(j, "backend");
  if (j.contains("group")) inst.group = get_string(j, "group");
  if (inst.backend.has_value() == inst.group.has_value()) fail(ErrorKind::ParseError, "instance needs exactly one of 'backend' or 'group'");
  if (j.contains("seed")) inst.seed = get_count(j, "seed");

  if (!j.contains("sets") || !j["sets"].is_object()) fail(ErrorKind::ParseError, "'sets' must be an object of string lists");
  for (const auto& [name, list] : j["sets"].items()) {
    if (!list.is_array()) fail(ErrorKind::ParseError, "set '" + name + "' must be a list");
    std::vector<std::string> elems;
    for (const auto& e : list) {
      if (!e.is_string()) fail(ErrorKind::ParseError, "set '" + name + "' must hold element strings");
      elems.push_back(e.get<std::string>());
    }
    inst.sets.emplace_back(name, std::move(elems));
  }

  if (!j.contains("query") || !j["query"].is_object()) fail(ErrorKind::ParseError, "'query' must be an object");
  const auto& q = j["query"];
  for (const auto& [key, _] : q.items())
    if (key != "checker" && key != "args" && key != "epsilon" && key != "lambda" && key != "n_max" && key != "budget" &&
        key != "rho" && key != "mode" && key != "element" && key != "field")
      fail(ErrorKind::ParseError, "unknown query key '" + key + "'");
  inst.query.checker = get_string(q, "checker");
  if (q.contains("args")) {
    if (!q["args"].is_array()) fail(ErrorKind::ParseError, "'args' must be a list of set names");
    for (const auto& a : q["args"]) {
      if (!a.is_string()) fail(ErrorKind::ParseError, "'args' must be a list of set names");
      inst.query.args.push_back(a.get<std::string>());
    }
  }
  auto& p = inst.query.params;
  if (q.contains("epsilon")) p.epsilon = parse_rational(q["epsilon"], "epsilon");
  if (q.contains("lambda")) p.lambda = parse_rational(q["lambda"], "lambda");
  if (q.contains("n_max")) {
    const auto n = get_count(q, "n_max");
    if (n < 1 || n > 16) fail(ErrorKind::ParseError, "n_max must lie in [1, 16]");
    p.n_max = static_cast<unsigned>(n);
  }
  if (q.contains("budget")) p.budget = get_count(q, "budget");
  if (q.contains("rho")) p.rho = parse_rho_mode(get_string(q, "rho"));
  if (q.contains("mode")) inst.query.mode = parse_run_mode(get_string(q, "mode"));
  if (q.contains("element")) p.element = get_string(q, "element");
  if (q.contains("field")) p.field = get_string(q, "field");
  p.seed = inst.seed;
  inst.arguments();  // validates references
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  return parse_instance(read_json_file(path), path.has_parent_path() ? path.parent_path() : std::filesystem::path("."));
}

}  // namespace spanbound::cli
