#pragma once

// Semantic ground truth by exhaustive enumeration of Venn-region models.
//
// For k terms there are 2^k atomic regions; atom r lies inside term j iff
// bit j of r is set. A model records which atoms are inhabited, so the
// 2^(2^k) masks are every possible universe up to the truth of categorical
// propositions. The empty universe (mask 0) is a model like any other.

#include "syllo/core.hpp"
#include "syllo/inference.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace syllo {

inline constexpr std::size_t kMaxTerms = 4;

using AtomMask = std::uint32_t;

class RegionModel {
public:
    /// Throws TooManyTerms for more than kMaxTerms terms and
    /// std::invalid_argument for repeated terms or bits outside the 2^k atoms.
    RegionModel(std::vector<TermId> terms, AtomMask inhabited);

    std::span<const TermId> terms() const noexcept { return terms_; }
    AtomMask inhabited() const noexcept { return inhabited_; }
    std::size_t atom_count() const noexcept { return std::size_t{1} << terms_.size(); }
    bool is_inhabited(std::size_t atom) const noexcept { return (inhabited_ >> atom) & 1U; }
    /// Throws UnknownTerm.
    std::size_t index_of(const TermId& t) const;

private:
    std::vector<TermId> terms_;
    AtomMask inhabited_;
};

/// 2^(2^k).
std::uint64_t model_count(std::size_t k);

/// Throws UnknownTerm when a term of p is not in the model.
bool eval(const Proposition& p, const RegionModel& m);

/// I_tt: "there is some t".
Proposition existence_of(const TermId& t);

/// Reference check: true iff every model satisfying all premisses and
/// assumptions also satisfies the conclusion. Evaluates each model with eval().
/// Throws TooManyTerms when terms.size() > kMaxTerms.
bool semantic_decide(std::span<const Proposition> premisses,
                     std::span<const Proposition> assumptions,
                     const Proposition& conclusion,
                     std::span<const TermId> terms);

/// Number of models over `terms` satisfying every constraint (reference path).
std::uint64_t count_models(std::span<const Proposition> constraints, std::span<const TermId> terms);

/// The same entailment compiled to atom bitmasks. A proposition is true in
/// model m iff (m & region) is zero (A, E) or non-zero (I, O).
class Entailment {
public:
    Entailment(std::span<const Proposition> premisses,
               std::span<const Proposition> assumptions,
               const Proposition& conclusion,
               std::span<const TermId> terms);

    /// Serial bitmask scan with early exit.
    bool holds() const noexcept;
    /// OpenMP scan over the model space.
    bool holds_parallel() const noexcept;
    /// Models that satisfy the hypotheses but not the conclusion.
    std::uint64_t counterexamples_parallel() const noexcept;

private:
    struct Compiled {
        AtomMask region;
        bool universal;  // A or E: true iff region is uninhabited
        bool eval(AtomMask m) const noexcept { return ((m & region) == 0) == universal; }
    };
    static Compiled compile(const Proposition& p, std::span<const TermId> terms);
    bool hypotheses(AtomMask m) const noexcept;

    std::vector<Compiled> hypotheses_;
    Compiled conclusion_;
    std::uint64_t models_;
};

/// Valid iff entailed bare; ValidWithAssumption iff not bare but entailed
/// once the syllogism's single assumption I_tt is added; else Invalid.
VerdictSummary semantic_verdict(const Syllogism& s);

} // namespace syllo
