#pragma once

// Seeded fuzzing: case i draws its sets from Rng(mix_seed(seed, i)), cases run
// on a worker pool, and results are reduced in index order.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spanbound/cli/dispatch.hpp"

namespace spanbound::cli {

struct FuzzOptions {
  std::string backend;
  std::string checker;
  std::uint64_t count = 100;
  std::uint64_t seed = 0;
  SizeBudget size;
  std::size_t max_set = 4;
  RunMode mode = RunMode::Assert;
  CheckParams params;
  std::optional<std::filesystem::path> out;
  std::size_t threads = 0;  // 0: hardware concurrency
};

struct FuzzResult {
  Json report;  // includes "timing"
  std::vector<Json> counterexamples;
  std::vector<Json> findings;
  int exit_code = 0;
};

// min(requested or hardware threads, SPANBOUND_THREADS when set), at least 1.
std::size_t worker_threads(std::size_t requested = 0);

FuzzResult run_fuzz(const FuzzOptions& opts);

// Greedy deletion: drop single elements (sets stay nonempty) while the failure
// persists; on return no single deletion still fails.
NamedSets shrink_sets(NamedSets sets, const std::function<bool(const NamedSets&)>& fails);

}  // namespace spanbound::cli
