#include "spanbound/cli/commands.hpp"

#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "spanbound/cli/report.hpp"

namespace spanbound::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded: return kExitBudget;
    case ErrorKind::WitnessCheckFailed: return kExitCheckFailed;
    default: return kExitUsage;
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) { return std::chrono::duration<double, std::milli>(Clock::now() - start).count(); }

Json error_json(const Error& e) { return Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}; }

// Runs body(rep, outcomes) and turns the outcomes into an exit code, logs and output.
template <class Body>
int run_command(const std::string& name, const std::filesystem::path& file, const CommonOptions& opts, std::ostream& out, std::ostream& err,
                Body&& body) {
  const auto start = Clock::now();
  Json rep;
  rep["command"] = name;
  rep["instance"] = file.filename().string();
  int code = kExitOk;
  std::vector<Json> counterexamples, findings;
  try {
    const auto inst = load_instance(file);
    const auto mode = opts.mode.value_or(inst.query.mode.value_or(RunMode::Assert));
    auto params = inst.query.params;
    if (opts.budget) params.budget = *opts.budget;
    rep["seed"] = inst.seed;
    rep["mode"] = std::string(to_string(mode));
    std::vector<CheckOutcome> outcomes = body(inst, params);
    Json records = Json::array();
    for (auto& o : outcomes) {
      if (!o.holds) {
        if (o.asserted && mode == RunMode::Assert) {
          code = kExitCheckFailed;
          counterexamples.push_back(o.record);
        } else {
          findings.push_back(o.record);
        }
      }
      records.push_back(o.record);
    }
    rep["records"] = std::move(records);
  } catch (const Error& e) {
    code = exit_code_for(e.kind());
    rep["error"] = error_json(e);
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    code = kExitUsage;
    rep["error"] = Json{{"kind", "InvalidArgument"}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
  }
  rep["exit_status"] = code;
  rep["timing"] = Json{{"elapsed_ms", elapsed_ms(start)}};
  out << rep.dump(2) << "\n";
  if (opts.out) {
    write_text_file(*opts.out / "report.json", stable_dump(rep));
    append_jsonl(*opts.out / "counterexamples.jsonl", counterexamples);
    append_jsonl(*opts.out / "findings.jsonl", findings);
  } else if (!counterexamples.empty()) {
    err << "asserted check failed; rerun with --out to keep the counterexample log\n";
  }
  return code;
}

std::vector<CheckOutcome> dispatch(const Instance& inst, const std::string& checker, const NamedSets& sets, const CheckParams& params) {
  if (inst.group) return {run_group_checker(load_group(*inst.group, inst.base_dir), checker, sets, params)};
  return {run_checker(create_backend(*inst.backend, inst.base_dir.string()), checker, sets, params)};
}

}  // namespace

int cmd_check(const std::filesystem::path& file, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  return run_command("check", file, opts, out, err, [](const Instance& inst, const CheckParams& params) {
    return dispatch(inst, inst.query.checker, inst.arguments(), params);
  });
}

int cmd_atoms(const std::filesystem::path& file, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  return run_command("atoms", file, opts, out, err, [](const Instance& inst, const CheckParams& params) {
    if (!inst.backend) fail(ErrorKind::ParseError, "atoms needs a backend instance");
    auto sets = inst.arguments();
    if (sets.empty()) fail(ErrorKind::ParseError, "atoms needs a set V");
    sets.resize(1);
    return dispatch(inst, "atoms", sets, params);
  });
}

int cmd_embed_group(const std::filesystem::path& file, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  return run_command("embed-group", file, opts, out, err, [](const Instance& inst, const CheckParams& params) {
    if (!inst.group) fail(ErrorKind::ParseError, "embed-group needs a group instance");
    const auto g = load_group(*inst.group, inst.base_dir);
    const bool torsion_free = !g->is_cayley() && g->invariant_factors().empty() && g->free_rank() > 0;
    const std::string checker = torsion_free ? "embed" : "correspondence";
    const auto sets = inst.arguments();
    std::vector<CheckOutcome> outs;
    for (const auto& s : sets) outs.push_back(run_group_checker(g, checker, {s}, params));
    if (sets.size() >= 2) outs.push_back(run_group_checker(g, checker, {sets[0], sets[1]}, params));
    return outs;
  });
}

int cmd_fuzz(const FuzzOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    auto res = run_fuzz(opts);
    Json summary = res.report;
    summary.erase("records");
    out << summary.dump(2) << "\n";
    if (!res.counterexamples.empty())
      err << res.counterexamples.size() << " asserted failure(s)" << (opts.out ? ", see counterexamples.jsonl" : "") << "\n";
    return res.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    out << Json{{"command", "fuzz"}, {"error", error_json(e)}, {"exit_status", exit_code_for(e.kind())}}.dump(2) << "\n";
    return exit_code_for(e.kind());
  }
}

int cmd_report(const std::vector<std::filesystem::path>& logs, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const auto files = build_report(load_run_logs(logs));
    const auto dir = opts.out.value_or(".");
    write_text_file(dir / "summary.md", files.markdown);
    write_text_file(dir / "quantities.csv", files.csv);
    out << files.markdown;
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dimension estimates for spans of products in division rings and group algebras"};
  app.require_subcommand(1);

  CommonOptions common;
  std::uint64_t budget = 0;
  std::string mode, out_dir;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "enumeration budget");
    sub->add_option("--mode", mode, "assert | report")->check(CLI::IsMember({"assert", "report"}));
    sub->add_option("--out", out_dir, "output directory");
  };

  std::string file;
  auto* check = app.add_subcommand("check", "run the checker named in an instance file");
  check->add_option("file", file)->required();
  add_common(check);
  auto* atoms = app.add_subcommand("atoms", "connectivity atoms of the first set in an instance file");
  atoms->add_option("file", file)->required();
  add_common(atoms);
  auto* embed = app.add_subcommand("embed-group", "group-to-algebra correspondence for a group instance");
  embed->add_option("file", file)->required();
  add_common(embed);

  FuzzOptions fz;
  std::string epsilon, lambda, rho = "exhaustive";
  auto* fuzz = app.add_subcommand("fuzz", "seeded random instances for one checker");
  fuzz->add_option("--backend", fz.backend)->required();
  fuzz->add_option("--checker", fz.checker)->required();
  fuzz->add_option("--count", fz.count);
  fuzz->add_option("--seed", fz.seed);
  fuzz->add_option("--degree", fz.size.degree);
  fuzz->add_option("--support", fz.size.support);
  fuzz->add_option("--coeff", fz.size.coeff);
  fuzz->add_option("--max-set", fz.max_set);
  fuzz->add_option("--epsilon", epsilon);
  fuzz->add_option("--lambda", lambda);
  fuzz->add_option("--n-max", fz.params.n_max);
  fuzz->add_option("--rho", rho)->check(CLI::IsMember({"exhaustive", "heuristic"}));
  fuzz->add_option("--threads", fz.threads);
  add_common(fuzz);

  std::vector<std::string> logs;
  auto* report = app.add_subcommand("report", "summary.md and quantities.csv from run logs");
  report->add_option("logs", logs);
  add_common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!mode.empty()) common.mode = parse_run_mode(mode);
    if (budget) common.budget = budget;
    if (!out_dir.empty()) common.out = out_dir;

    if (check->parsed()) return cmd_check(file, common, out, err);
    if (atoms->parsed()) return cmd_atoms(file, common, out, err);
    if (embed->parsed()) return cmd_embed_group(file, common, out, err);
    if (report->parsed()) return cmd_report({logs.begin(), logs.end()}, common, out, err);
    fz.mode = common.mode.value_or(RunMode::Assert);
    if (common.budget) fz.params.budget = *common.budget;
    fz.out = common.out;
    if (!epsilon.empty()) fz.params.epsilon = parse_rational(Json(epsilon), "epsilon");
    if (!lambda.empty()) fz.params.lambda = parse_rational(Json(lambda), "lambda");
    fz.params.rho = parse_rho_mode(rho);
    return cmd_fuzz(fz, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace spanbound::cli
