#pragma once

// Enumeration of the subspaces of GF(p)^m through their reduced row echelon
// bases: pivot sets in lexicographic order, then free entries as an odometer
// with the last free position varying fastest.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace spanbound {

using EchelonRows = std::vector<std::vector<std::uint32_t>>;

// Gaussian binomial [m choose r]_p; nullopt beyond 2^62.
std::optional<std::uint64_t> count_subspaces(std::uint32_t p, std::size_t m, std::size_t r);

// Number of subspaces with dimension in [lo, hi]; nullopt beyond 2^62.
std::optional<std::uint64_t> count_subspaces_between(std::uint32_t p, std::size_t m, std::size_t lo, std::size_t hi);

// Calls fn for every r-dimensional subspace; stops early when fn returns false.
// Returns false if stopped early.
bool for_each_subspace(std::uint32_t p, std::size_t m, std::size_t r, const std::function<bool(const EchelonRows&)>& fn);

}  // namespace spanbound
