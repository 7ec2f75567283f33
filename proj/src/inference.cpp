#include "syllo/inference.hpp"

#include <stdexcept>

namespace syllo {

std::string to_string(const Mood& m) {
    return {to_char(m.first), to_char(m.second), to_char(m.conclusion)};
}

std::string_view assumed_term_name(Assumption a) noexcept {
    switch (a) {
    case Assumption::None: return "";
    case Assumption::ExistsS: return "S";
    case Assumption::ExistsM: return "M";
    case Assumption::ExistsP: return "P";
    }
    return "";
}

const TermId& term_s() {
    static const TermId t("S");
    return t;
}
const TermId& term_m() {
    static const TermId t("M");
    return t;
}
const TermId& term_p() {
    static const TermId t("P");
    return t;
}

Proposition Syllogism::first_premise() const {
    const bool m_first = figure == Figure::One || figure == Figure::Three;
    return m_first ? Proposition{mood.first, term_m(), term_p()}
                   : Proposition{mood.first, term_p(), term_m()};
}

Proposition Syllogism::second_premise() const {
    const bool s_first = figure == Figure::One || figure == Figure::Two;
    return s_first ? Proposition{mood.second, term_s(), term_m()}
                   : Proposition{mood.second, term_m(), term_s()};
}

Proposition Syllogism::conclusion() const { return {mood.conclusion, term_s(), term_p()}; }

VerdictSummary summarize(const Verdict& v) {
    if (std::holds_alternative<Valid>(v)) return {VerdictKind::Valid, Assumption::None};
    if (const auto* c = std::get_if<ValidWithAssumption>(&v)) {
        return {VerdictKind::ValidWithAssumption, c->assumption};
    }
    return {};
}

const Trace* trace_of(const Verdict& v) noexcept {
    if (const auto* ok = std::get_if<Valid>(&v)) return &ok->trace;
    if (const auto* c = std::get_if<ValidWithAssumption>(&v)) return &c->trace;
    return nullptr;
}

std::string describe(const VerdictSummary& v) {
    switch (v.kind) {
    case VerdictKind::Invalid: return "invalid";
    case VerdictKind::Valid: return "valid";
    case VerdictKind::ValidWithAssumption:
        return "valid under: there is some " + std::string(assumed_term_name(v.assumption));
    }
    return "invalid";
}

std::vector<std::size_t> reducible_positions(const Chain& c) {
    std::vector<std::size_t> out;
    const auto nodes = c.nodes();
    const auto edges = c.edges();
    for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
        if (nodes[i].is_term() && edges[i - 1] == edges[i]) out.push_back(i);
    }
    return out;
}

namespace {

bool is_reducible(const Chain& c, std::size_t i) {
    return i > 0 && i + 1 < c.size() && c.nodes()[i].is_term() && c.edges()[i - 1] == c.edges()[i];
}

} // namespace

Chain reduce_at(const Chain& c, std::size_t i) {
    if (!is_reducible(c, i)) {
        throw NotReducible("position " + std::to_string(i) + " of " + to_string(c) +
                           " is not reducible");
    }
    std::vector<Node> nodes(c.nodes().begin(), c.nodes().end());
    std::vector<Orientation> edges(c.edges().begin(), c.edges().end());
    nodes.erase(nodes.begin() + static_cast<std::ptrdiff_t>(i));
    // Both incident edges share an orientation; dropping one leaves the merged edge.
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
    return Chain(std::move(nodes), std::move(edges));
}

Trace normalize(const Chain& c) {
    Trace trace{c, {}, c};
    for (;;) {
        const auto positions = reducible_positions(trace.normal_form);
        if (positions.empty()) break;
        const std::size_t at = positions.front();
        Chain next = reduce_at(trace.normal_form, at);
        trace.steps.push_back(
            {at, trace.normal_form.nodes()[at].term(), trace.normal_form, next});
        trace.normal_form = std::move(next);
    }
    return trace;
}

bool match_conclusion(const Chain& c, const Proposition& conclusion) {
    return c == diagram_of(conclusion);
}

Chain premiss_chain(const Syllogism& s) {
    Chain first = diagram_of(s.first_premise());
    Chain second = diagram_of(s.second_premise());
    // The spine runs S ... M ... P: the first premise must start at M, the second at S.
    if (s.figure == Figure::Two || s.figure == Figure::Four) first = dual(first);
    if (s.figure == Figure::Three || s.figure == Figure::Four) second = dual(second);
    return sharp(first, second);
}

Verdict decide(const Syllogism& s) {
    const Chain premisses = premiss_chain(s);
    const Proposition conclusion = s.conclusion();

    Trace bare = normalize(premisses);
    if (match_conclusion(bare.normal_form, conclusion)) return Valid{std::move(bare)};
    if (s.assumption == Assumption::None) return Invalid{};

    const TermId assumed{std::string(assumed_term_name(s.assumption))};
    for (std::size_t k = 0; k < premisses.occurrences(assumed); ++k) {
        Trace t = normalize(splice_assumption(premisses, assumed, k));
        if (match_conclusion(t.normal_form, conclusion)) {
            return ValidWithAssumption{s.assumption, std::move(t)};
        }
    }
    return Invalid{};
}

} // namespace syllo
