#pragma once

// JSON and CSV encodings shared by the command-line tool.
//
//   witness      {"m": int, "squares": [int], "convention": "all"|"units", "set": [int], "size": int, "valid": bool}
//   digraph      {"vertices": int, "edges": [[u, v], ...]}
//   bound row    m,n,F_exact,theorem,matolcsi_ruzsa,alon_tournament,combined,min_bound,min_name
//                (bound columns are upper ends of the enclosures; empty when not applicable)
//
// Interval-valued quantities are written as {"lo": "...", "hi": "..."} with
// outward-rounded decimal strings, plus a "value" number (the upper end) for
// convenience.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdf/bounds.hpp"
#include "sdf/construct.hpp"
#include "sdf/search.hpp"
#include "sdf/tournament.hpp"

namespace sdf::io {

using Json = nlohmann::ordered_json;

Json interval_json(const Interval& x);

Json witness_json(const core::CandidateSet& set, core::SquareConvention convention = core::SquareConvention::AllSquares);
/// Parses a witness object; the set is not required to be valid.
core::CandidateSet witness_from_json(const Json& j);

Json digraph_json(const tournament::Digraph& g);
tournament::Digraph digraph_from_json(const Json& j);

Json bound_report_json(const bounds::BoundReport& report, const bounds::CombinedBound& combined);
std::string bound_csv_header();
/// theorem,matolcsi_ruzsa,alon_tournament,combined,min_bound
std::string bound_columns(const bounds::BoundReport& report);
std::string bound_csv_row(const bounds::BoundReport& report, std::optional<std::size_t> f_exact = std::nullopt);

Json proof_report_json(const bounds::ProofReport& report);
Json contradiction_json(const bounds::ContradictionRecord& record);
Json certificate_json(const construct::CollisionCertificate& cert);
Json lemma_report_json(const tournament::LemmaReport& report, const tournament::ProductGraph& graph);

/// {"parts": [witness, ...]} or a bare array of witnesses.
std::vector<core::CandidateSet> parts_from_json(const Json& j);

/// "3,5,7" -> {3, 5, 7}. Throws Error(Parse).
std::vector<std::uint64_t> parse_list(const std::string& text);

} // namespace sdf::io
