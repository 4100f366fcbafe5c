#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sdf/bitset.hpp"

namespace sdf {

struct Budget {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 60.0;
};

struct CliqueOptions {
    Budget budget;
    /// Vertex forced into every clique (searched cliques then extend {root} upward).
    std::optional<std::size_t> root;
    /// Restricts the second vertex chosen after `root`; used for symmetry breaking.
    std::function<bool(std::size_t)> second_filter;
};

struct CliqueResult {
    std::vector<std::size_t> clique;  // ascending
    bool complete = false;            // false when the budget ran out
    std::uint64_t nodes = 0;
};

/// Branch-and-bound maximum clique over bitset adjacency rows.
///
/// Vertices are branched on in ascending order and the bound is a greedy
/// colouring of each candidate suffix, so the first clique of maximum size
/// reached is the lexicographically smallest one. The result is therefore
/// independent of anything but the graph and the options.
CliqueResult max_clique(std::span<const Bitset> rows, const CliqueOptions& options = {});

} // namespace sdf
