#include "syllo/catalog.hpp"
#include "syllo/oracle.hpp"

#include <algorithm>
#include <array>

namespace syllo {

std::vector<Syllogism> all_syllogisms(bool with_assumptions) {
    std::vector<Syllogism> out;
    out.reserve(with_assumptions ? 1024 : 256);
    for (Assumption a : kAllAssumptions) {
        if (!with_assumptions && a != Assumption::None) continue;
        for (Figure f : kAllFigures) {
            for (PropKind first : kAllKinds) {
                for (PropKind second : kAllKinds) {
                    for (PropKind concl : kAllKinds) out.push_back({{first, second, concl}, f, a});
                }
            }
        }
    }
    return out;
}

TableRow evaluate_row(const Syllogism& s) {
    const VerdictSummary calculus = summarize(decide(s));
    const VerdictSummary oracle = semantic_verdict(s);
    return {s, calculus, oracle, calculus == oracle};
}

std::vector<TableRow> enumerate_all(bool with_assumptions) {
    const auto cases = all_syllogisms(with_assumptions);
    std::vector<TableRow> rows(cases.size(),
                               TableRow{cases.front(), VerdictSummary{}, VerdictSummary{}, false});
    const auto n = static_cast<std::int64_t>(cases.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)] = evaluate_row(cases[static_cast<std::size_t>(i)]);
    }
    return rows;
}

std::vector<TableRow> enumerate_all_serial(bool with_assumptions) {
    std::vector<TableRow> rows;
    for (const auto& s : all_syllogisms(with_assumptions)) rows.push_back(evaluate_row(s));
    return rows;
}

std::string_view describe(Rule r) noexcept {
    switch (r) {
    case Rule::TwoNegatives: return "from two negative premisses nothing can be inferred";
    case Rule::TwoParticulars: return "from two particular premisses nothing can be inferred";
    case Rule::ParticularFirstNegativeSecond:
        return "particular first premise with negative second premise infers nothing";
    case Rule::ParticularPremiseUniversalConclusion:
        return "a particular premise requires a particular conclusion";
    case Rule::NegativeConclusionMismatch:
        return "the conclusion is negative iff some premise is negative";
    }
    return "";
}

RuleReport check_rules(const Syllogism& s, const VerdictSummary& v) {
    const Mood& m = s.mood;
    std::vector<Rule> violations;
    if (is_negative(m.first) && is_negative(m.second)) violations.push_back(Rule::TwoNegatives);
    if (is_particular(m.first) && is_particular(m.second)) violations.push_back(Rule::TwoParticulars);
    if (is_particular(m.first) && is_negative(m.second)) {
        violations.push_back(Rule::ParticularFirstNegativeSecond);
    }
    if ((is_particular(m.first) || is_particular(m.second)) && !is_particular(m.conclusion)) {
        violations.push_back(Rule::ParticularPremiseUniversalConclusion);
    }
    if (is_negative(m.conclusion) != (is_negative(m.first) || is_negative(m.second))) {
        violations.push_back(Rule::NegativeConclusionMismatch);
    }
    const bool consistent = !v.is_valid() || violations.empty();
    return {std::move(violations), consistent};
}

namespace {

const TermId& term_a() {
    static const TermId t("A");
    return t;
}
const TermId& term_b() {
    static const TermId t("B");
    return t;
}

Chain d(PropKind k, const TermId& s, const TermId& p) { return diagram_of({k, s, p}); }

} // namespace

std::vector<NamedLaw> named_laws() {
    using enum PropKind;
    const TermId& a = term_a();
    const TermId& b = term_b();
    return {
        {"emptiness (1)", "(A_AB)° # (E_AB) |= E_AA", sharp(dual(d(A, a, b)), d(E, a, b)), {E, a, a}},
        {"emptiness (2)", "(E_AB)° # (A_AB) |= E_AA", sharp(dual(d(E, a, b)), d(A, a, b)), {E, a, a}},
        {"subalternation (1)", "(A_AB) # (I_AA) |= I_AB", sharp(d(A, a, b), d(I, a, a)), {I, a, b}},
        {"subalternation (2)", "(I_BB) # (A_BA)° |= I_AB", sharp(d(I, b, b), dual(d(A, b, a))), {I, a, b}},
        {"subalternation (3)", "(E_AB) # (I_AA) |= O_AB", sharp(d(E, a, b), d(I, a, a)), {O, a, b}},
        {"subalternation (4)", "(E_BA)° # (I_AA) |= O_AB", sharp(dual(d(E, b, a)), d(I, a, a)), {O, a, b}},
        {"contrariety", "(E_BB) # (A_AB) |= E_AB", sharp(d(E, b, b), d(A, a, b)), {E, a, b}},
        {"subcontrariety", "(E_BB) # (I_AB) |= O_AB", sharp(d(E, b, b), d(I, a, b)), {O, a, b}},
        {"contradiction (1)", "(A_AB)° # (O_AB) |= O_AA", sharp(dual(d(A, a, b)), d(O, a, b)), {O, a, a}},
        {"contradiction (2)", "(E_AB)° # (I_AB) |= O_AA", sharp(dual(d(E, a, b)), d(I, a, b)), {O, a, a}},
    };
}

std::vector<LawResult> opposition_laws() {
    std::vector<LawResult> out;
    for (auto& law : named_laws()) {
        Trace t = normalize(law.premiss_chain);
        const bool holds = match_conclusion(t.normal_form, law.expected_conclusion);
        out.push_back({std::move(law), std::move(t), holds});
    }
    return out;
}

std::vector<StuckConcatenation> non_reducing_concatenations() {
    using enum PropKind;
    const TermId& a = term_a();
    const TermId& b = term_b();
    std::vector<StuckConcatenation> out;
    for (auto [notation, chain] : {
             std::pair{"(E_AB) # (A_AB)°", sharp(d(E, a, b), dual(d(A, a, b)))},
             std::pair{"(A_AB) # (E_AB)°", sharp(d(A, a, b), dual(d(E, a, b)))},
         }) {
        auto reducible = reducible_positions(chain);
        out.push_back({notation, std::move(chain), std::move(reducible)});
    }
    return out;
}

namespace {

// Segment [lo, hi] reads x <- ... <- u -> * <- v -> ... -> y with one bullet.
bool excluded_segment(const Chain& c, std::size_t lo, std::size_t hi) {
    const auto nodes = c.nodes();
    const auto edges = c.edges();
    std::size_t bullet = 0;
    std::size_t bullets = 0;
    for (std::size_t i = lo; i <= hi; ++i) {
        if (nodes[i].is_bullet()) {
            bullet = i;
            ++bullets;
        }
    }
    if (bullets != 1 || bullet == lo || bullet == hi) return false;
    if (edges[bullet - 1] != Orientation::Rightward || edges[bullet] != Orientation::Leftward) {
        return false;
    }
    for (std::size_t e = lo; e + 1 < bullet; ++e) {
        if (edges[e] != Orientation::Leftward) return false;
    }
    for (std::size_t e = bullet + 1; e < hi; ++e) {
        if (edges[e] != Orientation::Rightward) return false;
    }
    return true;
}

std::vector<std::size_t> positions_of(const Chain& c, const TermId& t) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c.nodes()[i].is(t)) out.push_back(i);
    }
    if (out.empty()) throw TermNotInChain("term " + t.name() + " does not occur in " + to_string(c));
    return out;
}

} // namespace

bool mutually_excluded(const Chain& c, const TermId& x, const TermId& y) {
    const auto xs = positions_of(c, x);
    const auto ys = positions_of(c, y);
    for (std::size_t i : xs) {
        for (std::size_t j : ys) {
            if (i != j && excluded_segment(c, std::min(i, j), std::max(i, j))) return true;
        }
    }
    return false;
}

std::vector<TermId> nterm_terms(int n) {
    std::vector<TermId> terms;
    for (int i = 1; i <= n; ++i) terms.emplace_back("T" + std::to_string(i));
    return terms;
}

std::uint64_t nterm_candidate_count(int n) {
    // 4 kinds per premiss and conclusion, 2 orders per premiss.
    return (std::uint64_t{1} << (2 * n)) << (n - 1);
}

NTermCandidate nterm_candidate(int n, std::uint64_t index) {
    const auto terms = nterm_terms(n);
    std::vector<Proposition> premisses;
    std::uint64_t rest = index;
    const PropKind conclusion_kind = kAllKinds[rest % 4];
    rest /= 4;
    for (int i = 0; i + 1 < n; ++i) {
        const PropKind kind = kAllKinds[rest % 4];
        const bool swapped = ((rest / 4) & 1U) != 0;
        rest /= 8;
        const TermId& lo = terms[static_cast<std::size_t>(i)];
        const TermId& hi = terms[static_cast<std::size_t>(i) + 1];
        premisses.push_back(swapped ? Proposition{kind, hi, lo} : Proposition{kind, lo, hi});
    }
    return {std::move(premisses), {conclusion_kind, terms.front(), terms.back()}};
}

namespace {

void check_n(int n) {
    if (n != 3 && n != 4) {
        throw UnsupportedN("n-term count supports n = 3 or 4, got " + std::to_string(n));
    }
}

enum class NTermClass : std::uint8_t { Invalid, Bare, Conditional };

template <typename Entails>
NTermClass classify(int n, std::uint64_t index, Entails&& entails) {
    const auto terms = nterm_terms(n);
    const NTermCandidate cand = nterm_candidate(n, index);
    if (entails(cand.premisses, std::span<const Proposition>{}, cand.conclusion, terms)) {
        return NTermClass::Bare;
    }
    for (const auto& t : terms) {
        const std::array<Proposition, 1> assumed{existence_of(t)};
        if (entails(cand.premisses, assumed, cand.conclusion, terms)) return NTermClass::Conditional;
    }
    return NTermClass::Invalid;
}

bool compiled_entails(std::span<const Proposition> premisses,
                      std::span<const Proposition> assumptions,
                      const Proposition& conclusion,
                      std::span<const TermId> terms) {
    return Entailment(premisses, assumptions, conclusion, terms).holds();
}

} // namespace

NTermCount count_valid_nterm(int n) {
    check_n(n);
    const auto total = static_cast<std::int64_t>(nterm_candidate_count(n));
    std::uint64_t bare = 0;
    std::uint64_t conditional = 0;
#pragma omp parallel for reduction(+ : bare, conditional) schedule(dynamic, 8)
    for (std::int64_t i = 0; i < total; ++i) {
        switch (classify(n, static_cast<std::uint64_t>(i), compiled_entails)) {
        case NTermClass::Bare: ++bare; break;
        case NTermClass::Conditional: ++conditional; break;
        case NTermClass::Invalid: break;
        }
    }
    return {n, static_cast<std::uint64_t>(total), bare, conditional};
}

NTermCount count_valid_nterm_serial(int n) {
    check_n(n);
    NTermCount out{n, nterm_candidate_count(n), 0, 0};
    for (std::uint64_t i = 0; i < out.candidates; ++i) {
        switch (classify(n, i, semantic_decide)) {
        case NTermClass::Bare: ++out.bare_valid; break;
        case NTermClass::Conditional: ++out.conditional_valid; break;
        case NTermClass::Invalid: break;
        }
    }
    return out;
}

} // namespace syllo
