#pragma once

// Text, JSON and DOT renderings shared by the CLI and the golden tests.
// JSON field names are stable.

#include "syllo/catalog.hpp"
#include "syllo/inference.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace syllo {

enum class OutputFormat : std::uint8_t { Text, Json, Dot };

std::optional<OutputFormat> parse_format(std::string_view name);

std::string trace_to_text(const Trace& t);
/// {initial, steps: [{step, position, deleted, before, after}], normal_form}
nlohmann::json trace_to_json(const Trace& t);
/// Premiss chain above, normal form below; bullets are unlabeled points.
std::string trace_to_dot(const Trace& t);

nlohmann::json verdict_to_json(const VerdictSummary& v);

/// The trace behind a verdict, or the bare normalization when invalid.
Trace display_trace(const Syllogism& s, const Verdict& v);

/// {input, syllogism, verdict, assumption, trace}
nlohmann::json check_report_json(std::string_view input, const Syllogism& s, const Verdict& v);

/// Grids of valid and conditionally valid moods per figure, followed by the
/// calculus/oracle agreement for every row.
std::string tables_to_text(const std::vector<TableRow>& rows);
nlohmann::json tables_to_json(const std::vector<TableRow>& rows);

std::string laws_to_text(const std::vector<LawResult>& laws,
                         const std::vector<StuckConcatenation>& stuck);
nlohmann::json laws_to_json(const std::vector<LawResult>& laws,
                            const std::vector<StuckConcatenation>& stuck);

/// "24 (= 3n²−n ✓)" on a match.
std::string count_to_text(const NTermCount& c);
nlohmann::json count_to_json(const NTermCount& c);

} // namespace syllo
