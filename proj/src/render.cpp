#include "syllo/render.hpp"
#include "syllo/parser.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace syllo {

using nlohmann::json;

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "dot") return OutputFormat::Dot;
    return std::nullopt;
}

std::string trace_to_text(const Trace& t) {
    std::ostringstream out;
    out << "initial: " << t.initial << '\n';
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
        const auto& s = t.steps[k];
        out << "step " << k + 1 << ": delete " << s.deleted_term.name() << " at " << s.position << ": "
            << s.before << " => " << s.after << '\n';
    }
    out << "normal form: " << t.normal_form << '\n';
    return out.str();
}

json trace_to_json(const Trace& t) {
    json steps = json::array();
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
        const auto& s = t.steps[k];
        steps.push_back({{"step", k + 1},
                         {"position", s.position},
                         {"deleted", s.deleted_term.name()},
                         {"before", to_string(s.before)},
                         {"after", to_string(s.after)}});
    }
    return {{"initial", to_string(t.initial)}, {"steps", steps}, {"normal_form", to_string(t.normal_form)}};
}

namespace {

void chain_to_dot(std::ostream& out, const Chain& c, char prefix) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Node& n = c.nodes()[i];
        out << "    " << prefix << i;
        if (n.is_bullet()) {
            out << " [shape=point, label=\"\"];\n";
        } else {
            out << " [label=\"" << n.term().name() << "\"];\n";
        }
    }
    for (std::size_t i = 0; i < c.edges().size(); ++i) {
        if (c.edges()[i] == Orientation::Rightward) {
            out << "    " << prefix << i << " -> " << prefix << i + 1 << ";\n";
        } else {
            out << "    " << prefix << i + 1 << " -> " << prefix << i << ";\n";
        }
    }
}

} // namespace

std::string trace_to_dot(const Trace& t) {
    std::ostringstream out;
    out << "digraph trace {\n"
        << "  rankdir=LR;\n"
        << "  node [shape=plaintext];\n"
        << "  subgraph cluster_premisses {\n"
        << "    label=\"premisses\";\n";
    chain_to_dot(out, t.initial, 'p');
    out << "  }\n"
        << "  subgraph cluster_normal_form {\n"
        << "    label=\"normal form (" << t.steps.size() << " steps)\";\n";
    chain_to_dot(out, t.normal_form, 'c');
    out << "  }\n";
    out << "  p0 -> c0 [style=dashed, dir=none, constraint=false];\n";
    out << "  p" << t.initial.size() - 1 << " -> c" << t.normal_form.size() - 1
        << " [style=dashed, dir=none, constraint=false];\n";
    out << "}\n";
    return out.str();
}

json verdict_to_json(const VerdictSummary& v) {
    switch (v.kind) {
    case VerdictKind::Invalid: return "invalid";
    case VerdictKind::Valid: return "valid";
    case VerdictKind::ValidWithAssumption: return "valid_with_assumption";
    }
    return "invalid";
}

Trace display_trace(const Syllogism& s, const Verdict& v) {
    if (const Trace* t = trace_of(v)) return *t;
    return normalize(premiss_chain(s));
}

json check_report_json(std::string_view input, const Syllogism& s, const Verdict& v) {
    const VerdictSummary summary = summarize(v);
    json assumption = nullptr;
    if (summary.kind == VerdictKind::ValidWithAssumption) {
        assumption = std::string(assumed_term_name(summary.assumption));
    }
    return {{"input", std::string(input)},
            {"syllogism", render_compact(s)},
            {"verdict", verdict_to_json(summary)},
            {"assumption", assumption},
            {"trace", trace_to_json(display_trace(s, v))}};
}

namespace {

constexpr std::size_t kColumn = 8;

std::string pad(std::string s, std::size_t width = kColumn) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string rtrim(std::string s) {
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
}

// One column of moods per figure, rows padded to the longest column.
void write_grid(std::ostream& out, const std::array<std::vector<std::string>, 4>& columns,
                const std::string& suffix) {
    std::size_t height = 0;
    for (const auto& c : columns) height = std::max(height, c.size());
    for (std::size_t r = 0; r < height; ++r) {
        std::string line;
        for (const auto& c : columns) line += pad(r < c.size() ? c[r] : "");
        line += suffix;
        out << rtrim(line) << '\n';
    }
}

} // namespace

std::string tables_to_text(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    const std::string header = pad("fig. 1") + pad("fig. 2") + pad("fig. 3") + pad("fig. 4");

    std::array<std::vector<std::string>, 4> bare;
    for (const auto& r : rows) {
        if (r.syllogism.assumption == Assumption::None && r.verdict.kind == VerdictKind::Valid) {
            bare[static_cast<std::size_t>(to_int(r.syllogism.figure) - 1)].push_back(
                to_string(r.syllogism.mood));
        }
    }
    out << "valid syllogisms\n" << rtrim(header) << '\n';
    write_grid(out, bare, "");

    out << "\nvalid under an assumption of existence\n" << header << "assumption\n";
    for (Assumption a : {Assumption::ExistsS, Assumption::ExistsM, Assumption::ExistsP}) {
        std::array<std::vector<std::string>, 4> cond;
        for (const auto& r : rows) {
            if (r.syllogism.assumption == a && r.verdict.kind == VerdictKind::ValidWithAssumption) {
                cond[static_cast<std::size_t>(to_int(r.syllogism.figure) - 1)].push_back(
                    to_string(r.syllogism.mood));
            }
        }
        write_grid(out, cond, "there is some " + std::string(assumed_term_name(a)));
    }

    out << "\n" << pad("syllogism", 12) << pad("calculus", 32) << pad("oracle", 32) << "agree\n";
    std::size_t agree = 0;
    for (const auto& r : rows) {
        agree += r.agree ? 1 : 0;
        if (!r.verdict.is_valid() && !r.oracle_verdict.is_valid()) continue;
        out << pad(render_compact(r.syllogism), 12) << pad(describe(r.verdict), 32)
            << pad(describe(r.oracle_verdict), 32) << (r.agree ? "yes" : "NO") << '\n';
    }
    out << "(rows invalid under both methods omitted)\n";
    out << "\nagreement: " << agree << "/" << rows.size() << " rows\n";
    return out.str();
}

json tables_to_json(const std::vector<TableRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        const auto& s = r.syllogism;
        json assumption = nullptr;
        if (s.assumption != Assumption::None) assumption = std::string(assumed_term_name(s.assumption));
        out.push_back({{"syllogism", render_compact(s)},
                       {"mood", to_string(s.mood)},
                       {"figure", to_int(s.figure)},
                       {"assumption", assumption},
                       {"verdict", verdict_to_json(r.verdict)},
                       {"oracle_verdict", verdict_to_json(r.oracle_verdict)},
                       {"agree", r.agree}});
    }
    return out;
}

std::string laws_to_text(const std::vector<LawResult>& laws,
                         const std::vector<StuckConcatenation>& stuck) {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto& l : laws) {
        passed += l.holds ? 1 : 0;
        out << (l.holds ? "PASS " : "FAIL ") << pad(l.law.name, 20) << l.law.notation << "\n"
            << "     " << l.trace.initial << " => " << l.trace.normal_form << '\n';
    }
    out << passed << "/" << laws.size() << " pass\n";
    for (const auto& s : stuck) {
        out << (s.reducible.empty() ? "PASS " : "FAIL ") << "no reduction: " << s.notation << ": "
            << s.chain << '\n';
    }
    return out.str();
}

json laws_to_json(const std::vector<LawResult>& laws, const std::vector<StuckConcatenation>& stuck) {
    json items = json::array();
    for (const auto& l : laws) {
        items.push_back({{"name", l.law.name},
                         {"notation", l.law.notation},
                         {"expected", to_string(l.law.expected_conclusion)},
                         {"holds", l.holds},
                         {"trace", trace_to_json(l.trace)}});
    }
    json non_reducing = json::array();
    for (const auto& s : stuck) {
        non_reducing.push_back({{"notation", s.notation},
                                {"chain", to_string(s.chain)},
                                {"reducible_positions", s.reducible}});
    }
    return {{"laws", items}, {"non_reducing", non_reducing}};
}

std::string count_to_text(const NTermCount& c) {
    std::ostringstream out;
    if (c.matches_formula()) {
        out << c.total() << " (= 3n²−n ✓)\n";
    } else {
        out << c.total() << " (≠ 3n²−n = " << c.formula() << ")\n";
    }
    out << "n = " << c.n << ": " << c.candidates << " candidates, " << c.bare_valid << " valid, "
        << c.conditional_valid << " valid under one assumption of existence\n";
    return out.str();
}

json count_to_json(const NTermCount& c) {
    return {{"n", c.n},
            {"candidates", c.candidates},
            {"bare_valid", c.bare_valid},
            {"conditional_valid", c.conditional_valid},
            {"total", c.total()},
            {"formula", c.formula()},
            {"matches_formula", c.matches_formula()}};
}

} // namespace syllo
