#include "spanbound/subspace_enum.hpp"

namespace spanbound {
namespace {

constexpr std::uint64_t kCap = std::uint64_t{1} << 62;

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kCap / a) return std::nullopt;
  return a * b;
}

}  // namespace

// Counts by summing p^(free entries) over pivot sets; exact and overflow-checked.
std::optional<std::uint64_t> count_subspaces(std::uint32_t p, std::size_t m, std::size_t r) {
  if (r > m) return 0;
  // dp[i][j]: pivot sets choosing j pivots among the first i columns, weighted by
  // p^(free entries) where a column contributes one free entry per pivot left of it.
  std::vector<std::vector<std::uint64_t>> dp(m + 1, std::vector<std::uint64_t>(r + 1, 0));
  dp[0][0] = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= r && j <= i; ++j) {
      if (dp[i][j] == 0) continue;
      if (j < r) {
        dp[i + 1][j + 1] += dp[i][j];
        if (dp[i + 1][j + 1] > kCap) return std::nullopt;
      }
      std::uint64_t w = 1;
      for (std::size_t t = 0; t < j; ++t) {
        auto next = checked_mul(w, p);
        if (!next) return std::nullopt;
        w = *next;
      }
      auto add = checked_mul(dp[i][j], w);
      if (!add) return std::nullopt;
      dp[i + 1][j] += *add;
      if (dp[i + 1][j] > kCap) return std::nullopt;
    }
  return dp[m][r];
}

std::optional<std::uint64_t> count_subspaces_between(std::uint32_t p, std::size_t m, std::size_t lo, std::size_t hi) {
  std::uint64_t total = 0;
  for (std::size_t r = lo; r <= hi && r <= m; ++r) {
    auto c = count_subspaces(p, m, r);
    if (!c) return std::nullopt;
    total += *c;
    if (total > kCap) return std::nullopt;
  }
  return total;
}

bool for_each_subspace(std::uint32_t p, std::size_t m, std::size_t r, const std::function<bool(const EchelonRows&)>& fn) {
  if (r > m) return true;
  std::vector<std::size_t> pivots(r);
  for (std::size_t i = 0; i < r; ++i) pivots[i] = i;
  EchelonRows rows(r, std::vector<std::uint32_t>(m, 0));
  for (;;) {
    // free positions: (row i, column c) with c > pivots[i] and c not a pivot
    std::vector<bool> is_pivot(m, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < r; ++i) {
      std::fill(rows[i].begin(), rows[i].end(), 0U);
      rows[i][pivots[i]] = 1;
      for (std::size_t c = pivots[i] + 1; c < m; ++c)
        if (!is_pivot[c]) free.emplace_back(i, c);
    }
    for (;;) {
      if (!fn(rows)) return false;
      std::size_t k = free.size();
      while (k > 0) {
        auto [i, c] = free[k - 1];
        if (++rows[i][c] < p) break;
        rows[i][c] = 0;
        --k;
      }
      if (k == 0) break;
    }
    // next combination of pivots
    std::size_t i = r;
    while (i > 0 && pivots[i - 1] == m - r + i - 1) --i;
    if (i == 0) return true;
    ++pivots[i - 1];
    for (std::size_t j = i; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

}  // namespace spanbound
