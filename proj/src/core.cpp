#include "syllo/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace syllo {

namespace {

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto head = static_cast<unsigned char>(s.front());
    if (!std::isalpha(head) && head != '_') return false;
    return std::all_of(s.begin() + 1, s.end(), [](char ch) {
        auto c = static_cast<unsigned char>(ch);
        return std::isalnum(c) || c == '_';
    });
}

} // namespace

TermId::TermId(std::string name) : name_(std::move(name)) {
    if (!is_identifier(name_)) {
        throw std::invalid_argument("term name must be an identifier: '" + name_ + "'");
    }
}

Chain::Chain(std::vector<Node> nodes, std::vector<Orientation> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
    if (nodes_.empty()) throw std::invalid_argument("chain needs at least one node");
    if (edges_.size() + 1 != nodes_.size()) {
        throw std::invalid_argument("chain needs exactly one edge between consecutive nodes");
    }
}

Chain Chain::single(TermId t) { return Chain({Node(std::move(t))}, {}); }

std::size_t Chain::bullet_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.is_bullet(); }));
}

std::size_t Chain::occurrences(const TermId& t) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [&](const Node& n) { return n.is(t); }));
}

std::size_t Chain::index_of_occurrence(const TermId& t, std::size_t k) const {
    std::size_t seen = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].is(t) && seen++ == k) return i;
    }
    throw NoSuchOccurrence("term " + t.name() + " has no occurrence #" + std::to_string(k) +
                           " in " + to_string(*this));
}

char to_char(PropKind k) noexcept {
    switch (k) {
    case PropKind::A: return 'A';
    case PropKind::E: return 'E';
    case PropKind::I: return 'I';
    case PropKind::O: return 'O';
    }
    return '?';
}

Chain diagram_of(const Proposition& p) {
    using enum Orientation;
    const Node s(p.subject);
    const Node q(p.predicate);
    const Node b = Node::bullet();
    switch (p.kind) {
    case PropKind::A: return Chain({s, q}, {Rightward});
    case PropKind::E: return Chain({s, b, q}, {Rightward, Leftward});
    case PropKind::I: return Chain({s, b, q}, {Leftward, Rightward});
    case PropKind::O: return Chain({s, b, b, q}, {Leftward, Rightward, Leftward});
    }
    throw std::logic_error("unreachable PropKind");
}

Chain dual(const Chain& c) {
    std::vector<Node> nodes(c.nodes().rbegin(), c.nodes().rend());
    std::vector<Orientation> edges;
    edges.reserve(c.edges().size());
    for (auto it = c.edges().rbegin(); it != c.edges().rend(); ++it) edges.push_back(reversed(*it));
    return Chain(std::move(nodes), std::move(edges));
}

Chain concat(const Chain& left, const Chain& right) {
    const Node& l = left.back();
    const Node& r = right.front();
    if (l.is_bullet() || r.is_bullet() || l != r) {
        throw JunctionMismatch("cannot join " + to_string(left) + " with " + to_string(right));
    }
    std::vector<Node> nodes(left.nodes().begin(), left.nodes().end());
    nodes.insert(nodes.end(), right.nodes().begin() + 1, right.nodes().end());
    std::vector<Orientation> edges(left.edges().begin(), left.edges().end());
    edges.insert(edges.end(), right.edges().begin(), right.edges().end());
    return Chain(std::move(nodes), std::move(edges));
}

Chain sharp(const Chain& first_premise, const Chain& second_premise) {
    return concat(second_premise, first_premise);
}

Chain splice_assumption(const Chain& c, const TermId& t, std::size_t occurrence) {
    const std::size_t at = c.index_of_occurrence(t, occurrence);
    std::vector<Node> nodes(c.nodes().begin(), c.nodes().end());
    std::vector<Orientation> edges(c.edges().begin(), c.edges().end());
    nodes.insert(nodes.begin() + static_cast<std::ptrdiff_t>(at) + 1, {Node::bullet(), Node(t)});
    edges.insert(edges.begin() + static_cast<std::ptrdiff_t>(at),
                 {Orientation::Leftward, Orientation::Rightward});
    return Chain(std::move(nodes), std::move(edges));
}

std::string to_string(const Chain& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Node& n = c.nodes()[i];
        out += n.is_bullet() ? std::string("*") : n.term().name();
        if (i + 1 < c.size()) out += c.edges()[i] == Orientation::Rightward ? " -> " : " <- ";
    }
    return out;
}

std::string to_string(const Proposition& p) {
    return std::string(1, to_char(p.kind)) + "_" + p.subject.name() + p.predicate.name();
}

Chain chain_from_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.size() % 2 == 0) {
        throw std::invalid_argument("malformed chain text: '" + std::string(text) + "'");
    }
    std::vector<Node> nodes;
    std::vector<Orientation> edges;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        if (i % 2 == 1) {
            if (tok == "->") {
                edges.push_back(Orientation::Rightward);
            } else if (tok == "<-") {
                edges.push_back(Orientation::Leftward);
            } else {
                throw std::invalid_argument("expected arrow, found '" + tok + "'");
            }
        } else if (tok == "*") {
            nodes.push_back(Node::bullet());
        } else {
            nodes.emplace_back(TermId(tok));
        }
    }
    return Chain(std::move(nodes), std::move(edges));
}

std::ostream& operator<<(std::ostream& os, const Chain& c) { return os << to_string(c); }
std::ostream& operator<<(std::ostream& os, const Proposition& p) { return os << to_string(p); }

} // namespace syllo
