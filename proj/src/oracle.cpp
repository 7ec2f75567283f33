#include "syllo/oracle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace syllo {

namespace {

void check_term_count(std::size_t k) {
    if (k > kMaxTerms) {
        throw TooManyTerms(std::to_string(k) + " terms exceeds the enumeration cap of " +
                           std::to_string(kMaxTerms));
    }
}

std::size_t find_term(std::span<const TermId> terms, const TermId& t) {
    auto it = std::find(terms.begin(), terms.end(), t);
    if (it == terms.end()) throw UnknownTerm("term " + t.name() + " is not in the model");
    return static_cast<std::size_t>(it - terms.begin());
}

} // namespace

RegionModel::RegionModel(std::vector<TermId> terms, AtomMask inhabited)
    : terms_(std::move(terms)), inhabited_(inhabited) {
    check_term_count(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        for (std::size_t j = i + 1; j < terms_.size(); ++j) {
            if (terms_[i] == terms_[j]) {
                throw std::invalid_argument("repeated term " + terms_[i].name());
            }
        }
    }
    const std::size_t atoms = atom_count();
    if (atoms < 32 && (inhabited_ >> atoms) != 0) {
        throw std::invalid_argument("inhabitation mask has bits beyond the atom count");
    }
}

std::size_t RegionModel::index_of(const TermId& t) const { return find_term(terms_, t); }

std::uint64_t model_count(std::size_t k) {
    check_term_count(k);
    return std::uint64_t{1} << (std::size_t{1} << k);
}

bool eval(const Proposition& p, const RegionModel& m) {
    const std::size_t x = m.index_of(p.subject);
    const std::size_t y = m.index_of(p.predicate);
    bool in_both = false;
    bool in_x_only = false;
    for (std::size_t r = 0; r < m.atom_count(); ++r) {
        if (!m.is_inhabited(r)) continue;
        const bool in_x = (r >> x) & 1U;
        const bool in_y = (r >> y) & 1U;
        in_both = in_both || (in_x && in_y);
        in_x_only = in_x_only || (in_x && !in_y);
    }
    switch (p.kind) {
    case PropKind::A: return !in_x_only;
    case PropKind::E: return !in_both;
    case PropKind::I: return in_both;
    case PropKind::O: return in_x_only;
    }
    return false;
}

Proposition existence_of(const TermId& t) { return {PropKind::I, t, t}; }

bool semantic_decide(std::span<const Proposition> premisses,
                     std::span<const Proposition> assumptions,
                     const Proposition& conclusion,
                     std::span<const TermId> terms) {
    const std::uint64_t n = model_count(terms.size());
    const std::vector<TermId> names(terms.begin(), terms.end());
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        const RegionModel model(names, static_cast<AtomMask>(mask));
        auto holds = [&](const Proposition& p) { return eval(p, model); };
        if (std::all_of(premisses.begin(), premisses.end(), holds) &&
            std::all_of(assumptions.begin(), assumptions.end(), holds) && !eval(conclusion, model)) {
            return false;
        }
    }
    return true;
}

std::uint64_t count_models(std::span<const Proposition> constraints, std::span<const TermId> terms) {
    const std::uint64_t n = model_count(terms.size());
    const std::vector<TermId> names(terms.begin(), terms.end());
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        const RegionModel model(names, static_cast<AtomMask>(mask));
        if (std::all_of(constraints.begin(), constraints.end(),
                        [&](const Proposition& p) { return eval(p, model); })) {
            ++count;
        }
    }
    return count;
}

Entailment::Compiled Entailment::compile(const Proposition& p, std::span<const TermId> terms) {
    const std::size_t x = find_term(terms, p.subject);
    const std::size_t y = find_term(terms, p.predicate);
    const bool negated_predicate = p.kind == PropKind::A || p.kind == PropKind::O;
    AtomMask region = 0;
    for (std::size_t r = 0; r < (std::size_t{1} << terms.size()); ++r) {
        const bool in_x = (r >> x) & 1U;
        const bool in_y = (r >> y) & 1U;
        if (in_x && (in_y != negated_predicate)) region |= AtomMask{1} << r;
    }
    return {region, p.kind == PropKind::A || p.kind == PropKind::E};
}

Entailment::Entailment(std::span<const Proposition> premisses,
                       std::span<const Proposition> assumptions,
                       const Proposition& conclusion,
                       std::span<const TermId> terms)
    : conclusion_(compile(conclusion, terms)), models_(model_count(terms.size())) {
    for (const auto& p : premisses) hypotheses_.push_back(compile(p, terms));
    for (const auto& p : assumptions) hypotheses_.push_back(compile(p, terms));
}

bool Entailment::hypotheses(AtomMask m) const noexcept {
    return std::all_of(hypotheses_.begin(), hypotheses_.end(),
                       [m](const Compiled& c) { return c.eval(m); });
}

bool Entailment::holds() const noexcept {
    for (std::uint64_t mask = 0; mask < models_; ++mask) {
        const auto m = static_cast<AtomMask>(mask);
        if (hypotheses(m) && !conclusion_.eval(m)) return false;
    }
    return true;
}

std::uint64_t Entailment::counterexamples_parallel() const noexcept {
    const auto n = static_cast<std::int64_t>(models_);
    std::uint64_t bad = 0;
#pragma omp parallel for reduction(+ : bad) schedule(static)
    for (std::int64_t mask = 0; mask < n; ++mask) {
        const auto m = static_cast<AtomMask>(mask);
        if (hypotheses(m) && !conclusion_.eval(m)) ++bad;
    }
    return bad;
}

bool Entailment::holds_parallel() const noexcept { return counterexamples_parallel() == 0; }

VerdictSummary semantic_verdict(const Syllogism& s) {
    const std::array<TermId, 3> terms{term_s(), term_m(), term_p()};
    const std::array<Proposition, 2> premisses{s.first_premise(), s.second_premise()};
    const Proposition conclusion = s.conclusion();
    if (semantic_decide(premisses, {}, conclusion, terms)) {
        return {VerdictKind::Valid, Assumption::None};
    }
    if (s.assumption != Assumption::None) {
        const std::array<Proposition, 1> assumed{
            existence_of(TermId(std::string(assumed_term_name(s.assumption))))};
        if (semantic_decide(premisses, assumed, conclusion, terms)) {
            return {VerdictKind::ValidWithAssumption, s.assumption};
        }
    }
    return {};
}

} // namespace syllo
