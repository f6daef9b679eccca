#include "spanbound/cli/fuzz.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace spanbound::cli {

std::size_t worker_threads(std::size_t requested) {
  std::size_t n = requested ? requested : std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SPANBOUND_THREADS")) {
    char* end = nullptr;
    const auto cap = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min<std::size_t>(n, cap);
  }
  return std::max<std::size_t>(n, 1);
}

NamedSets shrink_sets(NamedSets sets, const std::function<bool(const NamedSets&)>& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t s = 0; s < sets.size() && !progress; ++s) {
      if (sets[s].second.size() <= 1) continue;
      for (std::size_t i = 0; i < sets[s].second.size(); ++i) {
        auto trial = sets;
        trial[s].second.erase(trial[s].second.begin() + static_cast<std::ptrdiff_t>(i));
        if (fails(trial)) {
          sets = std::move(trial);
          progress = true;
          break;
        }
      }
    }
  }
  return sets;
}

namespace {

enum class Status { Pass, Fail, Finding, Skipped };

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Finding: return "finding";
    case Status::Skipped: return "skipped";
  }
  return "";
}

struct CaseResult {
  Status status = Status::Skipped;
  Json record;
};

// A failing run: an asserted verdict that does not hold, or a witness that does not re-verify.
bool run_fails(const AnyBackend& backend, const FuzzOptions& opts, const NamedSets& sets, const CheckParams& params) {
  try {
    auto out = run_checker(backend, opts.checker, sets, params);
    return out.asserted && !out.holds;
  } catch (const Error& e) {
    return e.kind() == ErrorKind::WitnessCheckFailed;
  }
}

CaseResult run_case(const AnyBackend& backend, const FuzzOptions& opts, std::uint64_t index) {
  const auto seed = mix_seed(opts.seed, index);
  Rng rng(seed);
  CheckParams params = opts.params;
  params.seed = seed;
  CaseResult res;
  NamedSets sets;
  Json head;
  head["index"] = index;
  head["seed"] = seed;
  try {
    sets = sample_sets(backend, opts.checker, rng, opts.size, opts.max_set);
    auto out = run_checker(backend, opts.checker, sets, params);
    res.record = head;
    res.record.update(out.record);
    if (out.holds)
      res.status = Status::Pass;
    else if (out.asserted && opts.mode == RunMode::Assert)
      res.status = Status::Fail;
    else
      res.status = Status::Finding;
  } catch (const Error& e) {
    res.record = head;
    res.record["checker"] = opts.checker;
    res.record["backend"] = describe(backend);
    Json sj = Json::object();
    for (const auto& [name, texts] : sets) sj[name] = texts;
    res.record["sets"] = sj;
    res.record["reason"] = std::string(to_string(e.kind()));
    res.status = e.kind() == ErrorKind::WitnessCheckFailed ? (opts.mode == RunMode::Assert ? Status::Fail : Status::Finding) : Status::Skipped;
    if (e.kind() == ErrorKind::WitnessCheckFailed) res.record["message"] = e.what();
  }
  if (res.status == Status::Fail) {
    auto shrunk = shrink_sets(sets, [&](const NamedSets& s) { return run_fails(backend, opts, s, params); });
    Json sj = Json::object();
    for (const auto& [name, texts] : shrunk) sj[name] = texts;
    res.record["shrunk_sets"] = sj;
  }
  res.record["status"] = std::string(status_name(res.status));
  return res;
}

}  // namespace

FuzzResult run_fuzz(const FuzzOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const auto backend = create_backend(opts.backend);
  require_compatible(backend, opts.checker);

  std::vector<CaseResult> results(opts.count);
  std::atomic<std::uint64_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= opts.count) return;
      try {
        results[i] = run_case(backend, opts, i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = opts.count;
        return;
      }
    }
  };
  const auto n = std::min<std::size_t>(worker_threads(opts.threads), std::max<std::uint64_t>(opts.count, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  FuzzResult fr;
  std::uint64_t pass = 0, failed = 0, findings = 0, skipped = 0;
  Json records = Json::array();
  for (auto& r : results) {
    switch (r.status) {
      case Status::Pass: ++pass; break;
      case Status::Fail: ++failed; fr.counterexamples.push_back(r.record); break;
      case Status::Finding: ++findings; fr.findings.push_back(r.record); break;
      case Status::Skipped: ++skipped; break;
    }
    records.push_back(std::move(r.record));
  }
  fr.exit_code = failed ? 1 : 0;

  Json& rep = fr.report;
  rep["command"] = "fuzz";
  rep["backend"] = describe(backend);
  rep["checker"] = opts.checker;
  rep["count"] = opts.count;
  rep["seed"] = opts.seed;
  rep["mode"] = std::string(to_string(opts.mode));
  rep["size"] = Json{{"degree", opts.size.degree}, {"support", opts.size.support}, {"coeff", opts.size.coeff}, {"max_set", opts.max_set}};
  rep["summary"] = Json{{"pass", pass}, {"fail", failed}, {"findings", findings}, {"skipped", skipped}};
  rep["records"] = std::move(records);
  rep["exit_status"] = fr.exit_code;
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rep["timing"] = Json{{"elapsed_ms", ms}, {"threads", n}};

  if (opts.out) {
    write_text_file(*opts.out / "report.json", stable_dump(rep));
    append_jsonl(*opts.out / "counterexamples.jsonl", fr.counterexamples);
    append_jsonl(*opts.out / "findings.jsonl", fr.findings);
  }
  return fr;
}

}  // namespace spanbound::cli
