#pragma once

// Aristotelian diagrams as oriented chains.
//
// A chain is a path of nodes (term-variables and bullets) joined by arrows.
// Edge i joins node i and node i+1; a Rightward edge points from node i to
// node i+1, a Leftward edge from node i+1 to node i. All values are
// immutable once built, so they can be shared freely across threads.

#include "syllo/errors.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace syllo {

class TermId {
public:
    /// Throws std::invalid_argument on an empty name or the reserved bullet spelling "*".
    explicit TermId(std::string name);

    const std::string& name() const noexcept { return name_; }

    friend bool operator==(const TermId&, const TermId&) = default;
    friend auto operator<=>(const TermId&, const TermId&) = default;

private:
    std::string name_;
};

struct Bullet {
    friend bool operator==(Bullet, Bullet) = default;
};

class Node {
public:
    Node(TermId term) : value_(std::move(term)) {}  // NOLINT(google-explicit-constructor)
    Node(Bullet b) : value_(b) {}                   // NOLINT(google-explicit-constructor)

    static Node bullet() { return Node(Bullet{}); }

    bool is_bullet() const noexcept { return std::holds_alternative<Bullet>(value_); }
    bool is_term() const noexcept { return !is_bullet(); }
    /// Precondition: is_term().
    const TermId& term() const { return std::get<TermId>(value_); }
    bool is(const TermId& t) const noexcept { return is_term() && term() == t; }

    friend bool operator==(const Node&, const Node&) = default;

private:
    std::variant<TermId, Bullet> value_;
};

enum class Orientation : std::uint8_t { Rightward, Leftward };

constexpr Orientation reversed(Orientation o) noexcept {
    return o == Orientation::Rightward ? Orientation::Leftward : Orientation::Rightward;
}

class Chain {
public:
    /// Throws std::invalid_argument unless nodes is non-empty and
    /// edges.size() == nodes.size() - 1.
    Chain(std::vector<Node> nodes, std::vector<Orientation> edges);

    /// A one-node chain with no edges.
    static Chain single(TermId t);

    std::span<const Node> nodes() const noexcept { return nodes_; }
    std::span<const Orientation> edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const Node& node(std::size_t i) const { return nodes_.at(i); }
    const Node& front() const noexcept { return nodes_.front(); }
    const Node& back() const noexcept { return nodes_.back(); }

    std::size_t bullet_count() const noexcept;
    /// Number of nodes equal to term t.
    std::size_t occurrences(const TermId& t) const noexcept;
    /// Node index of the k-th (0-based) occurrence of t; throws NoSuchOccurrence.
    std::size_t index_of_occurrence(const TermId& t, std::size_t k) const;

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    std::vector<Node> nodes_;
    std::vector<Orientation> edges_;
};

enum class PropKind : std::uint8_t { A, E, I, O };

inline constexpr PropKind kAllKinds[] = {PropKind::A, PropKind::E, PropKind::I, PropKind::O};

char to_char(PropKind k) noexcept;
constexpr bool is_negative(PropKind k) noexcept { return k == PropKind::E || k == PropKind::O; }
constexpr bool is_particular(PropKind k) noexcept { return k == PropKind::I || k == PropKind::O; }

/// Subject may equal predicate (A_AA, E_AA, I_AA, O_AA).
struct Proposition {
    PropKind kind;
    TermId subject;
    TermId predicate;

    friend bool operator==(const Proposition&, const Proposition&) = default;
};

/// Canonical chain for a proposition, subject leftmost and predicate rightmost:
/// A: S -> P, E: S -> * <- P, I: S <- * -> P, O: S <- * -> * <- P.
Chain diagram_of(const Proposition& p);

/// Reverse node order and flip every edge.
Chain dual(const Chain& c);

/// Join at the shared boundary term, which appears once in the result.
/// Throws JunctionMismatch when the boundary nodes differ or either is a bullet.
Chain concat(const Chain& left, const Chain& right);

/// In-line X # Y notation: the first premise sits on the right.
Chain sharp(const Chain& first_premise, const Chain& second_premise);

/// Replace the k-th occurrence of t by the segment t <- * -> t.
Chain splice_assumption(const Chain& c, const TermId& t, std::size_t occurrence);

/// `S -> * <- M <- P`; bullets render as `*`.
std::string to_string(const Chain& c);
std::string to_string(const Proposition& p);  // e.g. "E_SP"

/// Inverse of to_string(Chain). Throws std::invalid_argument on malformed text.
Chain chain_from_string(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Chain& c);
std::ostream& operator<<(std::ostream& os, const Proposition& p);

} // namespace syllo
