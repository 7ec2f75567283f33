#pragma once

// Compact ("EAO-4 +M") and English-like ("No P is M; All M is S; ...")
// syllogism notation. Keywords are case-insensitive; term names are
// case-sensitive identifiers and may not be keywords.

#include "syllo/errors.hpp"
#include "syllo/inference.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace syllo {

/// Byte offsets [begin, end) into the parsed text.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ParseErrorKind : std::uint8_t {
    SyntaxError,
    BadFigure,
    BadMoodLetter,
    NotASyllogism,
    AmbiguousTerms,
};

std::string_view to_string(ParseErrorKind k) noexcept;

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, SourceSpan span, const std::string& message);

    ParseErrorKind kind() const noexcept { return kind_; }
    SourceSpan span() const noexcept { return span_; }

private:
    ParseErrorKind kind_;
    SourceSpan span_;
};

/// `MOOD '-' FIGURE ( '+' ('S'|'M'|'P') )?`, whitespace allowed between tokens.
Syllogism parse_compact(std::string_view text);

/// All X is Y | No X is Y | Some X is Y | Some X is not Y
Proposition parse_proposition(std::string_view text);

/// Three propositions separated by ';' or newlines, optionally followed by
/// `assuming some X`. S, P and M are identified from the conclusion and the
/// premisses; the figure follows from where M sits.
Syllogism parse_syllogism_block(std::string_view text);

/// Compact when the text is a single line without ';', block otherwise.
Syllogism parse_syllogism(std::string_view text);

/// Canonical compact form, e.g. "EAO-4 +M".
std::string render_compact(const Syllogism& s);
std::string render_proposition(const Proposition& p);
/// e.g. "No P is M; All M is S; Some S is not P; assuming some M"
std::string render_block(const Syllogism& s);

struct CorpusEntry {
    std::string text;
    SourceSpan span;  // within the corpus
};

/// Blocks separated by blank lines; lines starting with '#' are ignored.
std::vector<CorpusEntry> split_corpus(std::string_view corpus);

/// "line:col: kind: message" with a caret line under the offending span.
std::string format_error(std::string_view text, const ParseError& e);

} // namespace syllo
