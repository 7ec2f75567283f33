#pragma once

// Syllogistic inference: delete a term node whose two incident arrows run
// the same way, until no such node remains, then compare the normal form
// with the conclusion diagram.

#include "syllo/core.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace syllo {

struct ReductionStep {
    std::size_t position;
    TermId deleted_term;
    Chain before;
    Chain after;

    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct Trace {
    Chain initial;
    std::vector<ReductionStep> steps;
    Chain normal_form;

    friend bool operator==(const Trace&, const Trace&) = default;
};

enum class Figure : std::uint8_t { One = 1, Two = 2, Three = 3, Four = 4 };

inline constexpr Figure kAllFigures[] = {Figure::One, Figure::Two, Figure::Three, Figure::Four};

constexpr int to_int(Figure f) noexcept { return static_cast<int>(f); }

struct Mood {
    PropKind first;
    PropKind second;
    PropKind conclusion;

    friend bool operator==(const Mood&, const Mood&) = default;
};

std::string to_string(const Mood& m);  // "AEE"

enum class Assumption : std::uint8_t { None, ExistsS, ExistsM, ExistsP };

inline constexpr Assumption kAllAssumptions[] = {Assumption::None, Assumption::ExistsS,
                                                 Assumption::ExistsM, Assumption::ExistsP};

/// "S", "M", "P" for the Exists* values, "" for None.
std::string_view assumed_term_name(Assumption a) noexcept;

/// The three term-variables every syllogism is built from.
const TermId& term_s();
const TermId& term_m();
const TermId& term_p();

struct Syllogism {
    Mood mood;
    Figure figure;
    Assumption assumption = Assumption::None;

    /// Term order follows the figure: fig1 (MP, SM), fig2 (PM, SM),
    /// fig3 (MP, MS), fig4 (PM, MS); the conclusion is always SP.
    Proposition first_premise() const;
    Proposition second_premise() const;
    Proposition conclusion() const;

    friend bool operator==(const Syllogism&, const Syllogism&) = default;
};

struct Invalid {
    friend bool operator==(const Invalid&, const Invalid&) = default;
};
struct Valid {
    Trace trace;
    friend bool operator==(const Valid&, const Valid&) = default;
};
struct ValidWithAssumption {
    Assumption assumption;
    Trace trace;
    friend bool operator==(const ValidWithAssumption&, const ValidWithAssumption&) = default;
};

using Verdict = std::variant<Invalid, Valid, ValidWithAssumption>;

enum class VerdictKind : std::uint8_t { Invalid, Valid, ValidWithAssumption };

/// Verdict without the trace; what the semantic oracle can produce.
struct VerdictSummary {
    VerdictKind kind = VerdictKind::Invalid;
    Assumption assumption = Assumption::None;

    bool is_valid() const noexcept { return kind != VerdictKind::Invalid; }
    friend bool operator==(const VerdictSummary&, const VerdictSummary&) = default;
};

VerdictSummary summarize(const Verdict& v);
/// The trace carried by a valid verdict, or nullptr for Invalid.
const Trace* trace_of(const Verdict& v) noexcept;

/// "valid", "invalid" or "valid under: there is some M".
std::string describe(const VerdictSummary& v);

/// Interior term nodes whose two incident edges are co-oriented.
std::vector<std::size_t> reducible_positions(const Chain& c);

/// Delete node i, merging its edges. Throws NotReducible unless i is a reducible position.
Chain reduce_at(const Chain& c, std::size_t i);

/// Leftmost-first reduction to normal form.
Trace normalize(const Chain& c);

/// Exact node-for-node and edge-for-edge equality with diagram_of(conclusion).
bool match_conclusion(const Chain& c, const Proposition& conclusion);

/// Both premiss diagrams, dualized where needed, joined so the chain runs
/// S ... M ... P.
Chain premiss_chain(const Syllogism& s);

Verdict decide(const Syllogism& s);

} // namespace syllo
