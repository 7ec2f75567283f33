#pragma once

#include "syllo/core.hpp"
#include "syllo/inference.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace syllo {

struct TableRow {
    Syllogism syllogism;
    VerdictSummary verdict;         // calculus
    VerdictSummary oracle_verdict;  // semantic enumeration
    bool agree;
};

/// Every mood x figure, assumption-major then figure then mood (A < E < I < O).
/// 256 entries bare, 1024 with all four assumption settings.
std::vector<Syllogism> all_syllogisms(bool with_assumptions);

TableRow evaluate_row(const Syllogism& s);

/// Rows are independent; evaluated in parallel with OpenMP.
std::vector<TableRow> enumerate_all(bool with_assumptions = true);
/// Serial reference for enumerate_all.
std::vector<TableRow> enumerate_all_serial(bool with_assumptions = true);

// Classical rules of syllogism, as necessary conditions on validity.
enum class Rule : std::uint8_t {
    TwoNegatives = 1,
    TwoParticulars = 2,
    ParticularFirstNegativeSecond = 3,
    ParticularPremiseUniversalConclusion = 4,
    NegativeConclusionMismatch = 5,
};

std::string_view describe(Rule r) noexcept;

struct RuleReport {
    std::vector<Rule> violations;
    /// False iff the verdict is valid although some rule is violated.
    bool consistent;
};

RuleReport check_rules(const Syllogism& s, const VerdictSummary& v);

struct NamedLaw {
    std::string name;
    std::string notation;  // e.g. "(A_AB) # (I_AA) |= I_AB"
    Chain premiss_chain;
    Proposition expected_conclusion;
};

struct LawResult {
    NamedLaw law;
    Trace trace;
    bool holds;
};

/// Emptiness, subalternation, contrariety, subcontrariety and contradiction
/// laws over terms A and B.
std::vector<NamedLaw> named_laws();
std::vector<LawResult> opposition_laws();

struct StuckConcatenation {
    std::string notation;
    Chain chain;
    std::vector<std::size_t> reducible;  // expected empty
};

/// (A_AB)° # ... concatenations of A_AB and E_AB that admit no reduction.
std::vector<StuckConcatenation> non_reducing_concatenations();

/// True iff some occurrence of x and some occurrence of y bound a segment of
/// the form x <- ... <- a -> * <- b -> ... -> y whose only bullet is the one shown.
/// Throws TermNotInChain.
bool mutually_excluded(const Chain& c, const TermId& x, const TermId& y);

// EXPERIMENTAL: n-term syllogisms. Premiss i relates T_i and T_{i+1} in either
// order; the conclusion relates T_1 (subject) and T_n (predicate). A candidate
// counts when it is entailed bare or under one existence assumption I_tt.
struct NTermCount {
    int n = 0;
    std::uint64_t candidates = 0;
    std::uint64_t bare_valid = 0;
    std::uint64_t conditional_valid = 0;

    std::uint64_t total() const noexcept { return bare_valid + conditional_valid; }
    std::uint64_t formula() const noexcept { return 3ULL * n * n - n; }
    bool matches_formula() const noexcept { return total() == formula(); }
};

/// Candidate number `index` in [0, 4^n * 2^(n-1)) as (premisses, conclusion).
struct NTermCandidate {
    std::vector<Proposition> premisses;
    Proposition conclusion;
};
NTermCandidate nterm_candidate(int n, std::uint64_t index);
std::uint64_t nterm_candidate_count(int n);
std::vector<TermId> nterm_terms(int n);

/// Throws UnsupportedN unless n is 3 or 4. OpenMP over candidates.
NTermCount count_valid_nterm(int n);
/// Reference path through semantic_decide.
NTermCount count_valid_nterm_serial(int n);

} // namespace syllo
