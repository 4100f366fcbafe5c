#include "sdf/io.hpp"

#include <charconv>
#include <sstream>

#include "sdf/error.hpp"

namespace sdf::io {

namespace {

constexpr int kDigits = 20;

std::string csv_value(const bounds::BoundEntry* e) {
    if (e == nullptr || !e->applicable) return "";
    return e->value.upper_string(12);
}

Json tuple_json(const tournament::Tuple& t) { return Json(t); }

} // namespace

Json interval_json(const Interval& x) {
    Json j;
    j["value"] = x.upper_double();
    j["lo"] = x.lower_string(kDigits);
    j["hi"] = x.upper_string(kDigits);
    return j;
}

Json witness_json(const core::CandidateSet& set, core::SquareConvention convention) {
    Json j;
    j["m"] = set.modulus().value();
    j["squares"] = core::forbidden_set(set.modulus(), convention).squares;
    j["convention"] = convention == core::SquareConvention::AllSquares ? "all" : "units";
    j["set"] = std::vector<std::uint64_t>(set.elements().begin(), set.elements().end());
    j["size"] = set.size();
    j["valid"] = core::is_valid_set(set, convention).valid;
    return j;
}

core::CandidateSet witness_from_json(const Json& j) {
    try {
        const auto m = modarith::factor_squarefree(j.at("m").get<std::uint64_t>());
        return core::CandidateSet(m, j.at("set").get<std::vector<std::uint64_t>>());
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("witness: ") + e.what());
    }
}

Json digraph_json(const tournament::Digraph& g) {
    Json j;
    j["vertices"] = g.order();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

tournament::Digraph digraph_from_json(const Json& j) {
    try {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        return tournament::Digraph(j.at("vertices").get<std::size_t>(), edges);
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("digraph: ") + e.what());
    }
}

Json bound_report_json(const bounds::BoundReport& report, const bounds::CombinedBound& combined) {
    Json j;
    j["m"] = report.m;
    j["n"] = report.n;
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        Json row;
        row["name"] = e.name;
        row["applicable"] = e.applicable;
        row["strict"] = e.strict;
        row["exact"] = e.exact;
        row["interval"] = interval_json(e.value);
        row["source"] = e.source;
        entries.push_back(std::move(row));
    }
    j["bounds"] = std::move(entries);
    Json c;
    c["c"] = combined.c;
    c["tournament_branch"] = interval_json(combined.tournament_branch);
    c["theorem_branch"] = interval_json(combined.theorem_branch);
    c["tournament_branch_certified"] = combined.tournament_branch_certified;
    c["m_prime"] = combined.m_prime;
    c["reduction_applies"] = combined.reduction_applies;
    c["reduction_value"] = interval_json(combined.reduction_value);
    c["m_three_quarters"] = interval_json(combined.three_quarter_power);
    j["combined_detail"] = std::move(c);
    j["min_applicable"] = report.min_name;
    if (!report.min_name.empty()) j["min_value"] = interval_json(report.min_applicable);
    return j;
}

std::string bound_csv_header() {
    return "m,n,F_exact,theorem,matolcsi_ruzsa,alon_tournament,combined,min_bound,min_name";
}

std::string bound_columns(const bounds::BoundReport& report) {
    std::ostringstream out;
    for (const char* name : {"theorem", "matolcsi_ruzsa", "alon_tournament", "combined"}) {
        out << csv_value(report.find(name)) << ',';
    }
    out << (report.min_name.empty() ? "" : report.min_applicable.upper_string(12));
    return out.str();
}

std::string bound_csv_row(const bounds::BoundReport& report, std::optional<std::size_t> f_exact) {
    std::ostringstream out;
    out << report.m << ',' << report.n << ',' << (f_exact ? std::to_string(*f_exact) : "") << ','
        << bound_columns(report) << ',' << report.min_name;
    return out.str();
}

Json proof_report_json(const bounds::ProofReport& report) {
    Json j;
    j["primes"] = report.primes;
    j["n"] = report.n;
    j["t1"] = interval_json(report.t1);
    j["t2"] = interval_json(report.t2);
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json row;
        row["name"] = c.name;
        row["lhs"] = interval_json(c.lhs);
        row["rhs"] = interval_json(c.rhs);
        row["applicable"] = c.applicable;
        row["pass"] = c.pass;
        checks.push_back(std::move(row));
    }
    j["checks"] = std::move(checks);
    j["all_pass"] = report.all_pass;
    return j;
}

Json contradiction_json(const bounds::ContradictionRecord& r) {
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["assumed_size"] = r.assumed_size.get_str();
    j["sigma"] = interval_json(r.sigma);
    j["lhs"] = interval_json(r.lhs);
    j["rhs"] = interval_json(r.rhs);
    j["middle"] = interval_json(r.middle);
    j["sigma_at_least_0.99"] = r.sigma_at_least_099;
    j["lhs_above_middle"] = r.lhs_above_middle;
    j["middle_above_rhs"] = r.middle_above_rhs;
    j["contradiction"] = r.contradiction;
    return j;
}

Json certificate_json(const construct::CollisionCertificate& c) {
    Json j;
    j["p"] = c.p;
    j["xi"] = c.xi;
    j["pair1"] = {c.a1, c.b1};
    j["pair2"] = {c.a2, c.b2};
    j["value"] = c.value;
    j["diff_a"] = c.diff_a;
    j["diff_b"] = c.diff_b;
    j["chi_a"] = c.chi_a;
    j["chi_b"] = c.chi_b;
    j["square_difference"] = c.chi_a == 1 ? c.diff_a : c.diff_b;
    j["verified"] = construct::check_certificate(c);
    return j;
}

Json lemma_report_json(const tournament::LemmaReport& report, const tournament::ProductGraph& graph) {
    Json j;
    Json factors = Json::array();
    for (const auto& f : graph.factors()) {
        Json row;
        row["vertices"] = f.order();
        row["max_outdegree"] = f.max_outdegree();
        row["tournament"] = f.is_tournament();
        factors.push_back(std::move(row));
    }
    j["factors"] = std::move(factors);
    j["order"] = graph.order();
    Json family = Json::array();
    for (std::size_t v : report.family) family.push_back(tuple_json(graph.decode(v)));
    j["family"] = std::move(family);
    j["size"] = report.family.size();
    j["bound"] = report.bound.get_str();
    j["exhaustive"] = report.exhaustive;
    j["complete"] = report.complete;
    j["within_bound"] = report.within_bound;
    j["rank"] = report.rank;
    j["rank_equals_size"] = report.rank_equals_size;
    return j;
}

std::vector<core::CandidateSet> parts_from_json(const Json& j) {
    const Json& list = j.is_object() && j.contains("parts") ? j.at("parts") : j;
    if (!list.is_array()) throw Error(ErrorKind::Parse, "parts: expected an array of witnesses");
    std::vector<core::CandidateSet> parts;
    for (const auto& w : list) parts.push_back(witness_from_json(w));
    return parts;
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        const std::string_view token(text.data() + start, end - start);
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw Error(ErrorKind::Parse, "expected a comma-separated list of non-negative integers, got '" + text + "'");
        }
        out.push_back(value);
        start = end + 1;
    }
    return out;
}

} // namespace sdf::io
