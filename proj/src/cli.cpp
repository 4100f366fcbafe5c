#include "sdf/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sdf/error.hpp"
#include "sdf/io.hpp"
#include "sdf/quadchar.hpp"

namespace sdf::cli {

namespace {

using io::Json;
using modarith::Modulus;

struct Globals {
    std::uint64_t budget_nodes = Budget{}.max_nodes;
    double budget_secs = Budget{}.max_seconds;
    std::string cache;
    bool no_cache = false;
    double c = bounds::kDefaultC;

    Budget budget() const { return Budget{budget_nodes, budget_secs}; }
    search::FCache fcache() const {
        return search::FCache(cache.empty() ? std::filesystem::path("fcache.jsonl") : std::filesystem::path(cache));
    }
};

struct SearchArgs {
    std::uint64_t m = 0;
    bool exact = false;
    bool greedy = false;
    bool drop_even = false;
};

struct BoundsArgs {
    std::uint64_t m = 0;
    std::string table;
    bool csv = false;
    bool json = false;
};

struct ConstructArgs {
    std::string parts;
    std::uint64_t p = 0;
    std::string set;
    std::uint64_t xi = 0;
};

struct CharsumArgs {
    std::uint64_t m = 0;
    std::string d;
    std::string set;
};

struct ProofArgs {
    std::string primes;
    std::string assumed_size;
};

struct TournamentArgs {
    std::uint64_t m = 0;
    std::vector<std::uint64_t> random;
    std::size_t exhaustive_limit = tournament::kDefaultExhaustiveLimit;
    double density = 0.5;
};

struct TableArgs {
    std::uint64_t min = 3;
    std::uint64_t max = 1000;
};

/// Odd squarefree m in [lo, hi].
std::vector<Modulus> moduli_between(std::uint64_t lo, std::uint64_t hi) {
    std::vector<Modulus> out;
    for (std::uint64_t m = std::max<std::uint64_t>(lo, 3); m <= hi; ++m) {
        if (m % 2 == 0) continue;
        try {
            out.push_back(modarith::factor_squarefree(m));
        } catch (const Error&) {
        }
    }
    return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw Error(ErrorKind::Parse, "range must look like A..B, got '" + text + "'");
    const auto lo = io::parse_list(text.substr(0, dots));
    const auto hi = io::parse_list(text.substr(dots + 2));
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) throw Error(ErrorKind::Parse, "bad range '" + text + "'");
    return {lo[0], hi[0]};
}

/// Cached or freshly computed record for m; fresh exact or improved results are appended.
search::CacheRecord lookup_or_search(const Modulus& m, const Globals& g, std::string& line, std::ostream& err) {
    const auto cache = g.fcache();
    std::optional<std::pair<search::CacheRecord, std::string>> hit;
    if (!g.no_cache) hit = cache.lookup(m.value());
    if (hit && hit->first.exact) {
        err << "m=" << m.value() << ": cache hit (" << cache.path().string() << ")\n";
        line = hit->second;
        return hit->first;
    }
    const auto result = search::max_sdf_exact(m, g.budget());
    err << "m=" << m.value() << ": " << result.nodes_explored << " nodes, " << result.wall_time.count() << " s"
        << (result.exact ? "" : ", budget exhausted") << '\n';
    auto record = search::CacheRecord::from_result(result);
    if (hit && !record.exact && hit->first.F >= record.F) {
        line = hit->second;
        return hit->first;
    }
    if (!g.no_cache) cache.append(record);
    line = record.to_json_line();
    return record;
}

int cmd_search(const SearchArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
    const std::uint64_t value = a.drop_even ? modarith::drop_even_part(a.m) : a.m;
    const Modulus m = modarith::factor_squarefree(value);
    if (a.greedy) {
        const auto set = search::greedy_lower(m);
        const search::CacheRecord record{m.value(), set.size(), false, {set.elements().begin(), set.elements().end()}};
        out << record.to_json_line() << '\n';
        return kOk;
    }
    std::string line;
    lookup_or_search(m, g, line, err);
    out << line << '\n';
    return kOk;
}

int cmd_bounds(const BoundsArgs& a, const Globals& g, std::ostream& out) {
    if ((a.m == 0) == a.table.empty()) throw CLI::ValidationError("bounds", "give exactly one of --m and --table");
    if (a.csv && a.json) throw CLI::ValidationError("bounds", "--csv and --json are exclusive");
    std::vector<Modulus> moduli;
    if (a.m != 0) {
        moduli.push_back(modarith::factor_squarefree(a.m));
    } else {
        const auto [lo, hi] = parse_range(a.table);
        moduli = moduli_between(lo, hi);
    }
    const bool csv = a.csv || (!a.json && a.m == 0);
    if (csv) {
        out << io::bound_csv_header() << '\n';
        const auto cache = g.fcache();
        for (const auto& m : moduli) {
            std::optional<std::size_t> f;
            if (!g.no_cache) {
                if (const auto hit = cache.lookup(m.value()); hit && hit->first.exact) f = hit->first.F;
            }
            out << io::bound_csv_row(bounds::bound_report(m, g.c), f) << '\n';
        }
        return kOk;
    }
    Json rows = Json::array();
    for (const auto& m : moduli) {
        rows.push_back(io::bound_report_json(bounds::bound_report(m, g.c), bounds::combined_bound(m, g.c)));
    }
    out << (a.m != 0 ? rows.front() : rows).dump(2) << '\n';
    return kOk;
}

int cmd_product(const ConstructArgs& a, std::ostream& out) {
    std::ifstream in(a.parts);
    if (!in) throw Error(ErrorKind::Parse, "cannot open parts file '" + a.parts + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("parts file: ") + e.what());
    }
    const auto parts = io::parts_from_json(j);
    out << io::witness_json(construct::product_construct(parts)).dump(2) << '\n';
    return kOk;
}

int cmd_ramsey(const ConstructArgs& a, std::ostream& out) {
    const auto set = construct::ramsey_construct(a.p);
    Json j = io::witness_json(set);
    j["guarantee"] = construct::ramsey_guarantee(a.p);
    out << j.dump(2) << '\n';
    return kOk;
}

int cmd_pigeonhole(const ConstructArgs& a, std::ostream& out) {
    const Modulus m = modarith::factor_squarefree(a.p);
    const core::CandidateSet set(m, io::parse_list(a.set));
    const std::uint64_t xi = a.xi != 0 ? a.xi : modarith::least_nonresidue(a.p);
    out << io::certificate_json(construct::pigeonhole_witness(set, xi)).dump(2) << '\n';
    return kOk;
}

int cmd_charsum(const CharsumArgs& a, std::ostream& out) {
    const Modulus m = modarith::factor_squarefree(a.m);
    std::vector<std::size_t> indices;
    for (std::uint64_t j : io::parse_list(a.d)) {
        if (j < 1 || j > m.n()) {
            throw Error(ErrorKind::DomainError, "D index " + std::to_string(j) + " outside 1.." + std::to_string(m.n()));
        }
        indices.push_back(static_cast<std::size_t>(j - 1));
    }
    const quadchar::CharProduct cp(m, indices);
    const core::CandidateSet set(m, a.set.empty() ? std::vector<std::uint64_t>{} : io::parse_list(a.set));
    const auto elements = set.elements();

    // sum over a in Z_{p_D} of |sum_b chi_D(a - b)|^2, expanded over pairs and factored per prime
    std::int64_t direct_total = 0, factored_total = 0;
    std::size_t agree = 0;
    for (std::uint64_t b1 : elements) {
        for (std::uint64_t b2 : elements) {
            const std::int64_t direct = quadchar::full_residue_pair_sum(b1, b2, cp);
            const std::int64_t factored = quadchar::factored_pair_sum(b1, b2, cp);
            direct_total += direct;
            factored_total += factored;
            agree += direct == factored ? 1 : 0;
        }
    }
    Json j;
    j["m"] = m.value();
    std::vector<std::size_t> one_based;
    for (std::size_t i : indices) one_based.push_back(i + 1);
    j["D"] = one_based;
    j["p_D"] = cp.p_D();
    j["set"] = std::vector<std::uint64_t>(elements.begin(), elements.end());
    j["s_D"] = quadchar::s_D(elements, cp);
    j["pairs"] = elements.size() * elements.size();
    j["pairs_factorization_agrees"] = agree;
    j["full_period_sum_direct"] = direct_total;
    j["full_period_sum_factored"] = factored_total;
    const bool ok = agree == elements.size() * elements.size() && direct_total == factored_total;
    j["factorization_holds"] = ok;
    out << j.dump(2) << '\n';
    return ok ? kOk : kFailed;
}

int cmd_verify_proof(const ProofArgs& a, std::ostream& out) {
    const auto primes = io::parse_list(a.primes);
    const auto report = bounds::proof_inequality_report(primes);
    Json j = io::proof_report_json(report);
    bool ok = report.all_pass;
    if (!a.assumed_size.empty()) {
        const Modulus m = Modulus::from_primes(primes);
        mpz_class size;
        if (size.set_str(a.assumed_size, 10) != 0 || size < 0) {
            throw Error(ErrorKind::Parse, "--assumed-size must be a non-negative integer");
        }
        const auto record = bounds::check_final_contradiction(m, size);
        j["contradiction"] = io::contradiction_json(record);
        ok = ok && record.contradiction;
    }
    out << j.dump(2) << '\n';
    return ok ? kOk : kFailed;
}

int cmd_tournament(const TournamentArgs& a, const Globals& g, std::ostream& out) {
    if ((a.m == 0) == a.random.empty()) throw CLI::ValidationError("verify", "give exactly one of --m and --random");
    std::optional<tournament::ProductGraph> graph;
    if (a.m != 0) {
        graph.emplace(tournament::paley_product(modarith::factor_squarefree(a.m)));
    } else {
        const std::uint64_t k = a.random[0], order = a.random[1], seed = a.random[2];
        if (k == 0 || order == 0) throw Error(ErrorKind::DomainError, "--random needs k >= 1 factors of order >= 1");
        std::vector<tournament::Digraph> factors;
        for (std::uint64_t i = 0; i < k; ++i) {
            factors.push_back(tournament::random_digraph(order, seed * 1'000'003 + i, a.density));
        }
        graph.emplace(std::move(factors));
    }
    const auto report = tournament::verify_lemma(*graph, a.exhaustive_limit, 1, g.budget());
    Json j = io::lemma_report_json(report, *graph);
    if (a.m != 0) j["m"] = a.m;
    out << j.dump(2) << '\n';
    return report.within_bound && report.rank_equals_size ? kOk : kFailed;
}

int cmd_table(const TableArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
    out << "m,n,F,exact,theorem,matolcsi_ruzsa,alon_tournament,combined,min_bound,slack\n";
    for (const auto& m : moduli_between(a.min, a.max)) {
        std::string line;
        const auto record = lookup_or_search(m, g, line, err);
        const auto report = bounds::bound_report(m, g.c);
        char slack[64];
        std::snprintf(slack, sizeof slack, "%.6f", report.min_applicable.lower_double() - static_cast<double>(record.F));
        out << m.value() << ',' << m.n() << ',' << record.F << ',' << (record.exact ? "true" : "false") << ','
            << io::bound_columns(report) << ',' << slack << '\n';
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Square-difference-free sets in Z_m: search, bounds, constructions, verification", "sdfkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file with defaults for the global options");

    Globals g;
    app.add_option("--budget-nodes", g.budget_nodes, "search node budget")->capture_default_str();
    app.add_option("--budget-secs", g.budget_secs, "search time budget in seconds")->capture_default_str();
    app.add_option("--cache", g.cache, "result cache path (default fcache.jsonl)")->envname("SDFKIT_CACHE");
    app.add_flag("--no-cache", g.no_cache, "neither read nor write the result cache");
    app.add_option("--c", g.c, "constant c in the combined bound")->capture_default_str();

    SearchArgs sa;
    auto* search_cmd = app.add_subcommand("search", "compute F(m) exactly or greedily");
    search_cmd->add_option("--m", sa.m, "odd squarefree modulus")->required();
    auto* exact_flag = search_cmd->add_flag("--exact", sa.exact, "branch and bound (default)");
    search_cmd->add_flag("--greedy", sa.greedy, "greedy lower bound only")->excludes(exact_flag);
    search_cmd->add_flag("--drop-even-part", sa.drop_even, "replace m by its odd part");

    BoundsArgs ba;
    auto* bounds_cmd = app.add_subcommand("bounds", "upper bounds on F(m)");
    bounds_cmd->add_option("--m", ba.m, "single modulus (JSON by default)");
    bounds_cmd->add_option("--table", ba.table, "range A..B of moduli (CSV by default)");
    bounds_cmd->add_flag("--csv", ba.csv, "CSV output");
    bounds_cmd->add_flag("--json", ba.json, "JSON output");

    ConstructArgs ca;
    auto* construct_cmd = app.add_subcommand("construct", "explicit valid sets and certificates");
    construct_cmd->require_subcommand(1);
    auto* product_cmd = construct_cmd->add_subcommand("product", "CRT product of valid sets");
    product_cmd->add_option("--parts", ca.parts, "JSON file of witnesses")->required();
    auto* ramsey_cmd = construct_cmd->add_subcommand("ramsey", "monochromatic clique construction, p = 1 mod 4");
    ramsey_cmd->add_option("--p", ca.p, "prime")->required();
    auto* pigeonhole_cmd = construct_cmd->add_subcommand("pigeonhole", "collision certificate for |A|^2 > p");
    pigeonhole_cmd->add_option("--p", ca.p, "prime, 1 mod 4")->required();
    pigeonhole_cmd->add_option("--set", ca.set, "comma-separated residues")->required();
    pigeonhole_cmd->add_option("--xi", ca.xi, "non-residue (default: least non-residue)");

    CharsumArgs cs;
    auto* charsum_cmd = app.add_subcommand("charsum", "S_D and the special-pair factorization check");
    charsum_cmd->add_option("--m", cs.m, "odd squarefree modulus")->required();
    charsum_cmd->add_option("--D", cs.d, "1-based prime indices, e.g. 1,2")->required();
    charsum_cmd->add_option("--set", cs.set, "comma-separated residues");

    ProofArgs pa;
    auto* proof_cmd = app.add_subcommand("verify-proof", "interval check of the inequalities behind the bound");
    proof_cmd->add_option("--primes", pa.primes, "increasing odd primes, e.g. 3,5,7")->required();
    proof_cmd->add_option("--assumed-size", pa.assumed_size, "also run the closing contradiction for this |A|");

    TournamentArgs ta;
    auto* tournament_cmd = app.add_subcommand("tournament", "covering families in digraph products");
    tournament_cmd->require_subcommand(1);
    auto* verify_cmd = tournament_cmd->add_subcommand("verify", "largest covering family vs prod (d_i + 1)");
    verify_cmd->add_option("--m", ta.m, "Paley product for m with every prime 3 mod 4");
    verify_cmd->add_option("--random", ta.random, "k factors of order n from seed")->expected(3);
    verify_cmd->add_option("--exhaustive-limit", ta.exhaustive_limit, "largest order searched exactly")
        ->capture_default_str();
    verify_cmd->add_option("--density", ta.density, "arc probability for --random")->capture_default_str();

    TableArgs tb;
    auto* table_cmd = app.add_subcommand("table", "per-m CSV of F(m) and every bound");
    table_cmd->add_option("--min", tb.min, "smallest m")->capture_default_str();
    table_cmd->add_option("--max", tb.max, "largest m")->capture_default_str();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream buffer;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        int code = kOk;
        if (*search_cmd) code = cmd_search(sa, g, buffer, err);
        else if (*bounds_cmd) code = cmd_bounds(ba, g, buffer);
        else if (*product_cmd) code = cmd_product(ca, buffer);
        else if (*ramsey_cmd) code = cmd_ramsey(ca, buffer);
        else if (*pigeonhole_cmd) code = cmd_pigeonhole(ca, buffer);
        else if (*charsum_cmd) code = cmd_charsum(cs, buffer);
        else if (*proof_cmd) code = cmd_verify_proof(pa, buffer);
        else if (*verify_cmd) code = cmd_tournament(ta, g, buffer);
        else if (*table_cmd) code = cmd_table(tb, g, buffer, err);
        out << buffer.str() << std::flush;
        return code;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kFailed;
    }
}

} // namespace sdf::cli
