#include "syllo/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>

namespace syllo {

std::string_view to_string(ParseErrorKind k) noexcept {
    switch (k) {
    case ParseErrorKind::SyntaxError: return "SyntaxError";
    case ParseErrorKind::BadFigure: return "BadFigure";
    case ParseErrorKind::BadMoodLetter: return "BadMoodLetter";
    case ParseErrorKind::NotASyllogism: return "NotASyllogism";
    case ParseErrorKind::AmbiguousTerms: return "AmbiguousTerms";
    }
    return "ParseError";
}

ParseError::ParseError(ParseErrorKind kind, SourceSpan span, const std::string& message)
    : Error(message), kind_(kind), span_(span) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

[[noreturn]] void fail(ParseErrorKind kind, std::size_t begin, std::size_t end, const std::string& msg) {
    throw ParseError(kind, {begin, end}, msg);
}

std::size_t skip_spaces(std::string_view text, std::size_t i) {
    while (i < text.size() && (is_space(text[i]) || text[i] == '\n')) ++i;
    return i;
}

std::optional<PropKind> kind_of_letter(char c) {
    switch (c) {
    case 'A': return PropKind::A;
    case 'E': return PropKind::E;
    case 'I': return PropKind::I;
    case 'O': return PropKind::O;
    default: return std::nullopt;
    }
}

// --- English-like notation -------------------------------------------------

struct Token {
    std::string_view text;
    SourceSpan span;
    bool separator = false;
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (is_space(c)) {
            ++i;
        } else if (c == ';' || c == '\n') {
            tokens.push_back({text.substr(i, 1), {i, i + 1}, true});
            ++i;
        } else if (is_ident_start(c)) {
            const std::size_t start = i;
            while (i < text.size() && is_ident_char(text[i])) ++i;
            tokens.push_back({text.substr(start, i - start), {start, i}, false});
        } else {
            fail(ParseErrorKind::SyntaxError, i, i + 1,
                 std::string("unexpected character '") + c + "'");
        }
    }
    return tokens;
}

bool keyword_is(const Token& t, std::string_view kw) {
    return t.text.size() == kw.size() &&
           std::equal(t.text.begin(), t.text.end(), kw.begin(), [](char a, char b) {
               return std::tolower(static_cast<unsigned char>(a)) == b;
           });
}

constexpr std::array<std::string_view, 6> kKeywords{"all", "no", "some", "is", "not", "assuming"};

bool is_keyword(const Token& t) {
    return std::any_of(kKeywords.begin(), kKeywords.end(),
                       [&](std::string_view kw) { return keyword_is(t, kw); });
}

struct Located {
    Proposition prop;
    SourceSpan subject;
    SourceSpan predicate;
    SourceSpan whole;
};

TermId term_at(const Token& t) {
    if (t.separator || is_keyword(t)) {
        fail(ParseErrorKind::SyntaxError, t.span.begin, t.span.end,
             "expected a term, found '" + std::string(t.text) + "'");
    }
    return TermId(std::string(t.text));
}

void expect_keyword(const Token& t, std::string_view kw) {
    if (!keyword_is(t, kw)) {
        fail(ParseErrorKind::SyntaxError, t.span.begin, t.span.end,
             "expected '" + std::string(kw) + "', found '" + std::string(t.text) + "'");
    }
}

// tokens holds one proposition; `at` locates an empty input.
Located parse_tokens(std::span<const Token> tokens, std::size_t at) {
    if (tokens.empty()) fail(ParseErrorKind::SyntaxError, at, at, "expected a proposition");
    const Token& q = tokens.front();
    PropKind kind;
    if (keyword_is(q, "all")) {
        kind = PropKind::A;
    } else if (keyword_is(q, "no")) {
        kind = PropKind::E;
    } else if (keyword_is(q, "some")) {
        kind = PropKind::I;
    } else {
        fail(ParseErrorKind::SyntaxError, q.span.begin, q.span.end,
             "expected 'All', 'No' or 'Some', found '" + std::string(q.text) + "'");
    }
    const SourceSpan whole{q.span.begin, tokens.back().span.end};
    auto missing = [&](const char* what) {
        fail(ParseErrorKind::SyntaxError, whole.end, whole.end, std::string("expected ") + what);
    };
    if (tokens.size() < 2) missing("a subject term");
    const TermId subject = term_at(tokens[1]);
    if (tokens.size() < 3) missing("'is'");
    expect_keyword(tokens[2], "is");
    std::size_t pred = 3;
    if (kind == PropKind::I && tokens.size() > 3 && keyword_is(tokens[3], "not")) {
        kind = PropKind::O;
        pred = 4;
    }
    if (tokens.size() <= pred) missing("a predicate term");
    const TermId predicate = term_at(tokens[pred]);
    if (tokens.size() > pred + 1) {
        const Token& extra = tokens[pred + 1];
        fail(ParseErrorKind::SyntaxError, extra.span.begin, tokens.back().span.end,
             "unexpected trailing input '" + std::string(extra.text) + "'");
    }
    return {{kind, subject, predicate}, tokens[1].span, tokens[pred].span, whole};
}

bool mentions(const Proposition& p, const TermId& t) { return p.subject == t || p.predicate == t; }

const TermId& other_term(const Proposition& p, const TermId& t) {
    return p.subject == t ? p.predicate : p.subject;
}

} // namespace

Syllogism parse_compact(std::string_view text) {
    using enum ParseErrorKind;
    std::size_t i = skip_spaces(text, 0);
    std::array<PropKind, 3> kinds{};
    for (auto& k : kinds) {
        if (i >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i]))) {
            fail(SyntaxError, i, std::min(i + 1, text.size()), "expected a mood letter (A, E, I, O)");
        }
        const auto kind = kind_of_letter(text[i]);
        if (!kind) {
            fail(BadMoodLetter, i, i + 1,
                 std::string("'") + text[i] + "' is not a mood letter (A, E, I, O)");
        }
        k = *kind;
        ++i;
    }
    if (i < text.size() && is_ident_char(text[i])) {
        fail(SyntaxError, i, i + 1, "a mood has exactly three letters");
    }
    i = skip_spaces(text, i);
    if (i >= text.size() || text[i] != '-') {
        fail(SyntaxError, i, std::min(i + 1, text.size()), "expected '-' after the mood");
    }
    i = skip_spaces(text, i + 1);
    const std::size_t fig_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == fig_start) {
        fail(SyntaxError, i, std::min(i + 1, text.size()), "expected a figure number");
    }
    const std::string_view digits = text.substr(fig_start, i - fig_start);
    if (digits.size() != 1 || digits[0] < '1' || digits[0] > '4') {
        fail(BadFigure, fig_start, i, "figure must be 1, 2, 3 or 4, got " + std::string(digits));
    }
    Syllogism s{{kinds[0], kinds[1], kinds[2]}, static_cast<Figure>(digits[0] - '0'),
                Assumption::None};
    i = skip_spaces(text, i);
    if (i == text.size()) return s;
    if (text[i] != '+') fail(SyntaxError, i, i + 1, "expected '+S', '+M', '+P' or end of input");
    i = skip_spaces(text, i + 1);
    if (i >= text.size()) fail(SyntaxError, i, i, "expected S, M or P after '+'");
    switch (text[i]) {
    case 'S': s.assumption = Assumption::ExistsS; break;
    case 'M': s.assumption = Assumption::ExistsM; break;
    case 'P': s.assumption = Assumption::ExistsP; break;
    default: fail(SyntaxError, i, i + 1, "expected S, M or P after '+'");
    }
    const std::size_t end = skip_spaces(text, i + 1);
    if (end != text.size()) fail(SyntaxError, end, text.size(), "unexpected trailing input");
    return s;
}

Proposition parse_proposition(std::string_view text) {
    const auto tokens = lex(text);
    for (const auto& t : tokens) {
        if (t.separator) {
            fail(ParseErrorKind::SyntaxError, t.span.begin, t.span.end,
                 "a proposition cannot contain separators");
        }
    }
    return parse_tokens(tokens, skip_spaces(text, 0)).prop;
}

Syllogism parse_syllogism_block(std::string_view text) {
    using enum ParseErrorKind;
    const auto tokens = lex(text);

    std::vector<std::span<const Token>> segments;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= tokens.size(); ++i) {
        if (i == tokens.size() || tokens[i].separator) {
            if (i > start) segments.emplace_back(tokens.data() + start, i - start);
            start = i + 1;
        }
    }

    // A trailing "assuming some X", as its own segment or at the end of the last one.
    std::optional<std::span<const Token>> assuming;
    if (!segments.empty()) {
        auto& last = segments.back();
        auto it = std::find_if(last.begin(), last.end(),
                               [](const Token& t) { return keyword_is(t, "assuming"); });
        if (it != last.end()) {
            const auto at = static_cast<std::size_t>(it - last.begin());
            assuming = last.subspan(at);
            if (at == 0) {
                segments.pop_back();
            } else {
                last = last.first(at);
            }
        }
    }

    const SourceSpan all{0, text.size()};
    if (segments.size() != 3) {
        fail(NotASyllogism, all.begin, all.end,
             "a syllogism has exactly three propositions, found " + std::to_string(segments.size()));
    }
    const Located first = parse_tokens(segments[0], 0);
    const Located second = parse_tokens(segments[1], 0);
    const Located concl = parse_tokens(segments[2], 0);

    for (const Located* l : {&first, &second, &concl}) {
        if (l->prop.subject == l->prop.predicate) {
            fail(AmbiguousTerms, l->whole.begin, l->whole.end,
                 "subject and predicate coincide in '" + to_string(l->prop) + "'");
        }
    }
    const TermId& s = concl.prop.subject;
    const TermId& p = concl.prop.predicate;
    if (!mentions(first.prop, p)) {
        fail(NotASyllogism, first.whole.begin, first.whole.end,
             "the first premise must contain the predicate term " + p.name());
    }
    const TermId& m = other_term(first.prop, p);
    if (m == s) {
        fail(NotASyllogism, first.whole.begin, first.whole.end,
             "the first premise relates the conclusion's terms; no middle term");
    }
    if (!mentions(second.prop, s)) {
        fail(NotASyllogism, second.whole.begin, second.whole.end,
             "the second premise must contain the subject term " + s.name());
    }
    if (other_term(second.prop, s) != m) {
        fail(NotASyllogism, second.whole.begin, second.whole.end,
             "the premisses share no middle term");
    }

    const bool m_first = first.prop.subject == m;
    const bool s_first = second.prop.subject == s;
    Figure figure;
    if (m_first) {
        figure = s_first ? Figure::One : Figure::Three;
    } else {
        figure = s_first ? Figure::Two : Figure::Four;
    }

    Syllogism out{{first.prop.kind, second.prop.kind, concl.prop.kind}, figure, Assumption::None};
    if (assuming) {
        const auto& a = *assuming;
        if (a.size() < 2) {
            fail(SyntaxError, a.back().span.end, a.back().span.end, "expected 'some' after 'assuming'");
        }
        expect_keyword(a[1], "some");
        if (a.size() < 3) fail(SyntaxError, a[1].span.end, a[1].span.end, "expected a term");
        const TermId t = term_at(a[2]);
        if (a.size() > 3) {
            fail(SyntaxError, a[3].span.begin, a.back().span.end, "unexpected trailing input");
        }
        if (t == s) {
            out.assumption = Assumption::ExistsS;
        } else if (t == m) {
            out.assumption = Assumption::ExistsM;
        } else if (t == p) {
            out.assumption = Assumption::ExistsP;
        } else {
            fail(NotASyllogism, a[2].span.begin, a[2].span.end,
                 "assumed term " + t.name() + " is not a term of the syllogism");
        }
    }
    return out;
}

Syllogism parse_syllogism(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    const auto last = text.find_last_not_of(" \t\r\n");
    if (first == std::string_view::npos) return parse_compact(text);
    const std::string_view body = text.substr(first, last - first + 1);
    std::size_t word_end = 0;
    while (word_end < body.size() && is_ident_char(body[word_end])) ++word_end;
    const Token lead{body.substr(0, word_end), {}, false};
    const bool block = body.find_first_of(";\n") != std::string_view::npos || keyword_is(lead, "all") ||
                       keyword_is(lead, "no") || keyword_is(lead, "some");
    return block ? parse_syllogism_block(text) : parse_compact(text);
}

std::string render_compact(const Syllogism& s) {
    std::string out = to_string(s.mood) + "-" + std::to_string(to_int(s.figure));
    if (s.assumption != Assumption::None) out += " +" + std::string(assumed_term_name(s.assumption));
    return out;
}

std::string render_proposition(const Proposition& p) {
    const std::string& x = p.subject.name();
    const std::string& y = p.predicate.name();
    switch (p.kind) {
    case PropKind::A: return "All " + x + " is " + y;
    case PropKind::E: return "No " + x + " is " + y;
    case PropKind::I: return "Some " + x + " is " + y;
    case PropKind::O: return "Some " + x + " is not " + y;
    }
    return {};
}

std::string render_block(const Syllogism& s) {
    std::string out = render_proposition(s.first_premise()) + "; " +
                      render_proposition(s.second_premise()) + "; " +
                      render_proposition(s.conclusion());
    if (s.assumption != Assumption::None) {
        out += "; assuming some " + std::string(assumed_term_name(s.assumption));
    }
    return out;
}

std::vector<CorpusEntry> split_corpus(std::string_view corpus) {
    std::vector<CorpusEntry> out;
    std::string text;
    SourceSpan span{};
    auto flush = [&] {
        if (!text.empty()) out.push_back({text, span});
        text.clear();
    };
    std::size_t pos = 0;
    while (pos <= corpus.size()) {
        const std::size_t nl = std::min(corpus.find('\n', pos), corpus.size());
        std::string_view line = corpus.substr(pos, nl - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
        const bool comment_only = blank && line.size() != nl - pos;
        if (blank && !comment_only) {
            flush();
        } else if (!blank) {
            if (text.empty()) {
                span.begin = pos;
            } else {
                text += '\n';
            }
            text += line;
            span.end = pos + line.size();
        }
        if (nl == corpus.size()) break;
        pos = nl + 1;
    }
    flush();
    return out;
}

std::string format_error(std::string_view text, const ParseError& e) {
    const std::size_t begin = std::min(e.span().begin, text.size());
    std::size_t line_start = 0;
    if (begin > 0) {
        if (auto nl = text.rfind('\n', begin - 1); nl != std::string_view::npos) line_start = nl + 1;
    }
    const auto line_no = std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(line_start), '\n') + 1;
    const std::size_t line_end = std::min(text.find('\n', line_start), text.size());
    const std::size_t col = begin - line_start;
    const std::size_t width =
        std::max<std::size_t>(1, std::min(e.span().end, line_end) - std::min(begin, line_end));

    std::string out = std::to_string(line_no) + ":" + std::to_string(col + 1) + ": " +
                      std::string(to_string(e.kind())) + ": " + e.what() + "\n";
    out += "  " + std::string(text.substr(line_start, line_end - line_start)) + "\n";
    out += "  " + std::string(col, ' ') + std::string(width, '^') + "\n";
    return out;
}

} // namespace syllo
