#include "sdf/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>
#include <string>

#include "json.hpp"

#include "sdf/error.hpp"

namespace sdf::search {

namespace {

using Clock = std::chrono::steady_clock;

class SubsetEnumerator {
public:
    explicit SubsetEnumerator(std::uint64_t m) : m_(m), allowed_(m, true) {
        // Forbidden differences straight from the definition: d is forbidden iff d = y^2 or -d = y^2 for some y.
        allowed_[0] = false;
        for (std::uint64_t y = 0; y < m; ++y) {
            const std::uint64_t sq = y * y % m;
            if (sq != 0) {
                allowed_[sq] = false;
                allowed_[m - sq] = false;
            }
        }
    }

    std::vector<std::uint64_t> run() {
        extend(0);
        return best_;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void extend(std::uint64_t from) {
        ++nodes_;
        if (current_.size() > best_.size()) best_ = current_;
        for (std::uint64_t x = from; x < m_; ++x) {
            bool ok = true;
            for (std::uint64_t a : current_) {
                if (!allowed_[(x + m_ - a) % m_]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            current_.push_back(x);
            extend(x + 1);
            current_.pop_back();
        }
    }

    std::uint64_t m_;
    std::vector<bool> allowed_;
    std::vector<std::uint64_t> current_;
    std::vector<std::uint64_t> best_;
    std::uint64_t nodes_ = 0;
};

} // namespace

SearchResult brute_force_oracle(const Modulus& m) {
    if (m.value() > kOracleLimit) {
        throw Error(ErrorKind::TooLarge, "brute-force oracle is limited to m <= " + std::to_string(kOracleLimit));
    }
    const auto start = Clock::now();
    SubsetEnumerator enumerator(m.value());
    auto best = enumerator.run();
    const std::size_t size = best.size();
    return SearchResult{m.value(),
                        CandidateSet(m, std::move(best), core::Validity::Valid),
                        size,
                        true,
                        enumerator.nodes(),
                        Clock::now() - start};
}

std::vector<std::uint64_t> square_unit_multipliers(const Modulus& m) {
    const std::uint64_t mv = m.value();
    std::set<std::uint64_t> group;
    for (std::uint64_t s = 1; s < mv; ++s) {
        if (std::gcd(s, mv) != 1) continue;
        const std::uint64_t sq = modarith::mulmod(s, s, mv);
        group.insert(sq);
        group.insert(mv - sq);
    }
    return {group.begin(), group.end()};
}

SearchResult max_sdf_exact(const Modulus& m, const Budget& budget, const core::GraphOptions& options) {
    const auto start = Clock::now();
    const std::uint64_t mv = m.value();
    if (mv > options.materialize_cap) {
        throw Error(ErrorKind::TooLarge, "m = " + std::to_string(mv) + " exceeds the materialization cap of " +
                                             std::to_string(options.materialize_cap));
    }
    const core::SdfGraph graph = core::build_graph(m, options);

    // Independent sets of the conflict graph are cliques of its complement.
    std::vector<Bitset> compatible;
    compatible.reserve(mv);
    for (std::uint64_t v = 0; v < mv; ++v) {
        Bitset row = graph.materialized_row(v);
        row.flip();
        row.reset(v);
        compatible.push_back(std::move(row));
    }

    const auto multipliers = square_unit_multipliers(m);
    CliqueOptions clique_options;
    clique_options.budget = budget;
    clique_options.root = 0;
    clique_options.second_filter = [&](std::size_t v) {
        return std::all_of(multipliers.begin(), multipliers.end(),
                           [&](std::uint64_t u) { return modarith::mulmod(u, v, mv) >= v; });
    };
    const CliqueResult clique = max_clique(compatible, clique_options);

    std::vector<std::uint64_t> witness(clique.clique.begin(), clique.clique.end());
    CandidateSet best(m, std::move(witness));
    if (!core::is_valid_set(best, options.convention).valid) {
        throw std::logic_error("branch and bound produced an invalid set for m = " + std::to_string(mv));
    }
    const std::size_t size = best.size();
    return SearchResult{mv, core::checked(best, options.convention), size, clique.complete, clique.nodes,
                        Clock::now() - start};
}

CandidateSet greedy_lower(const Modulus& m, std::span<const std::uint64_t> order, core::SquareConvention convention) {
    std::vector<std::uint64_t> kept;
    const std::uint64_t mv = m.value();
    for (std::uint64_t x : order) {
        x %= mv;
        const bool ok = std::all_of(kept.begin(), kept.end(), [&](std::uint64_t a) {
            return a != x && !core::is_forbidden_difference((x + mv - a) % mv, m, convention);
        });
        if (ok) kept.push_back(x);
    }
    return CandidateSet(m, std::move(kept), core::Validity::Valid);
}

CandidateSet greedy_lower(const Modulus& m, core::SquareConvention convention) {
    std::vector<std::uint64_t> order(m.value());
    std::iota(order.begin(), order.end(), 0);
    return greedy_lower(m, order, convention);
}

std::string CacheRecord::to_json_line() const {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["F"] = F;
    j["exact"] = exact;
    j["witness"] = witness;
    return j.dump();
}

CacheRecord CacheRecord::from_json_line(const std::string& line) {
    try {
        const auto j = nlohmann::json::parse(line);
        CacheRecord r{j.at("m").get<std::uint64_t>(), j.at("F").get<std::size_t>(), j.at("exact").get<bool>(),
                      j.at("witness").get<std::vector<std::uint64_t>>()};
        if (r.witness.size() != r.F) throw Error(ErrorKind::Parse, "witness size disagrees with F");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("bad cache record: ") + e.what());
    }
}

CacheRecord CacheRecord::from_result(const SearchResult& result) {
    const auto elems = result.best_set.elements();
    return CacheRecord{result.m, result.size, result.exact, {elems.begin(), elems.end()}};
}

std::filesystem::path FCache::default_path() {
    if (const char* env = std::getenv("SDFKIT_CACHE"); env != nullptr && *env != '\0') return env;
    return "fcache.jsonl";
}

std::optional<std::pair<CacheRecord, std::string>> FCache::lookup(std::uint64_t m) const {
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    std::optional<std::pair<CacheRecord, std::string>> best;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        CacheRecord record;
        try {
            record = CacheRecord::from_json_line(line);
        } catch (const Error&) {
            continue;
        }
        if (record.m != m) continue;
        if (record.exact) return std::make_pair(record, line);
        if (!best || record.F > best->first.F) best = std::make_pair(record, line);
    }
    return best;
}

void FCache::append(const CacheRecord& record) const {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file " + path_.string());
    out << record.to_json_line() << '\n';
}

} // namespace sdf::search
