#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdf/clique.hpp"
#include "sdf/sdf_core.hpp"

namespace sdf::search {

using core::CandidateSet;
using modarith::Modulus;

/// Largest odd squarefree m accepted by brute_force_oracle.
inline constexpr std::uint64_t kOracleLimit = 40;

struct SearchResult {
    std::uint64_t m;
    CandidateSet best_set;
    std::size_t size;
    bool exact;
    std::uint64_t nodes_explored;
    std::chrono::duration<double> wall_time;
};

/// Exhaustive enumeration of all valid subsets of Z_m (m <= 40), independent of the graph code.
SearchResult brute_force_oracle(const Modulus& m);

/// Exact F(m) by branch and bound on the conflict graph.
///
/// 0 is fixed in the set (every valid set has a translate containing it), and
/// the second element is restricted to values minimal in their orbit under
/// multiplication by {+-s^2 : s a unit}, which preserves the forbidden
/// differences. The returned witness is the lexicographically smallest
/// maximum set. If the budget runs out the best set so far is returned with
/// exact = false.
SearchResult max_sdf_exact(const Modulus& m, const Budget& budget = {}, const core::GraphOptions& options = {});

/// Greedy maximal valid set: scans `order` and keeps every element compatible with those kept.
CandidateSet greedy_lower(const Modulus& m, std::span<const std::uint64_t> order,
                          core::SquareConvention convention = core::SquareConvention::AllSquares);
/// Greedy over the natural order 0, 1, ..., m-1.
CandidateSet greedy_lower(const Modulus& m, core::SquareConvention convention = core::SquareConvention::AllSquares);

/// The multiplier group {+-s^2 mod m : s a unit}, ascending.
std::vector<std::uint64_t> square_unit_multipliers(const Modulus& m);

/// One line of fcache.jsonl.
struct CacheRecord {
    std::uint64_t m;
    std::size_t F;
    bool exact;
    std::vector<std::uint64_t> witness;

    /// Canonical single-line JSON: {"m":..,"F":..,"exact":..,"witness":[..]}.
    std::string to_json_line() const;
    static CacheRecord from_json_line(const std::string& line);
    static CacheRecord from_result(const SearchResult& result);

    friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

/// Append-only JSON-lines store of search results.
class FCache {
public:
    explicit FCache(std::filesystem::path path) : path_(std::move(path)) {}

    /// SDFKIT_CACHE if set, otherwise fcache.jsonl in the working directory.
    static std::filesystem::path default_path();

    const std::filesystem::path& path() const noexcept { return path_; }

    /// Best record for m: the first exact one, else the largest inexact one.
    /// Returned together with the stored line, byte for byte.
    std::optional<std::pair<CacheRecord, std::string>> lookup(std::uint64_t m) const;
    void append(const CacheRecord& record) const;

private:
    std::filesystem::path path_;
};

} // namespace sdf::search
