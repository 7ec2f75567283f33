#include "syllo/parser.hpp"
#include "syllo/catalog.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace syllo;
namespace st = syllo::testing;

namespace {

Syllogism syl(const char* mood, int figure, Assumption a = Assumption::None) {
    return {{st::kind_from(mood[0]), st::kind_from(mood[1]), st::kind_from(mood[2])},
            static_cast<Figure>(figure), a};
}

template <typename F>
ParseError error_of(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a ParseError");
    return ParseError(ParseErrorKind::SyntaxError, {}, "");
}

} // namespace

TEST_CASE("parse_compact accepts moods, figures and assumptions") {
    CHECK(parse_compact("AAA-1") == syl("AAA", 1));
    CHECK(parse_compact("EAO-4 +M") == syl("EAO", 4, Assumption::ExistsM));
    CHECK(parse_compact("  AAI - 3+S ") == syl("AAI", 3, Assumption::ExistsS));
}

TEST_CASE("parse_compact errors carry kind and span") {
    const ParseError bad_letter = error_of([] { parse_compact("AAB-1"); });
    CHECK(bad_letter.kind() == ParseErrorKind::BadMoodLetter);
    CHECK(bad_letter.span() == SourceSpan{2, 3});

    const ParseError bad_fig = error_of([] { parse_compact("AAA-5"); });
    CHECK(bad_fig.kind() == ParseErrorKind::BadFigure);
    CHECK(bad_fig.span() == SourceSpan{4, 5});
    CHECK(error_of([] { parse_compact("AAA-12"); }).kind() == ParseErrorKind::BadFigure);
    CHECK(error_of([] { parse_compact("AAA-0"); }).kind() == ParseErrorKind::BadFigure);

    CHECK(error_of([] { parse_compact("AA-1"); }).kind() == ParseErrorKind::SyntaxError);
    CHECK(error_of([] { parse_compact("AAAA-1"); }).kind() == ParseErrorKind::SyntaxError);
    CHECK(error_of([] { parse_compact("AAA1"); }).kind() == ParseErrorKind::SyntaxError);
    CHECK(error_of([] { parse_compact("AAA-1 +Q"); }).kind() == ParseErrorKind::SyntaxError);
    CHECK(error_of([] { parse_compact("AAA-1 +S x"); }).kind() == ParseErrorKind::SyntaxError);
    CHECK(error_of([] { parse_compact(""); }).kind() == ParseErrorKind::SyntaxError);
}

TEST_CASE("parse_proposition") {
    const Proposition a = parse_proposition("All M is P");
    CHECK(a.kind == PropKind::A);
    CHECK(a.subject == TermId("M"));
    CHECK(a.predicate == TermId("P"));
    CHECK(to_string(parse_proposition("Some S is not P")) == "O_SP");
    CHECK(to_string(parse_proposition("no dogs IS cats")) == "E_dogscats");
    CHECK(to_string(parse_proposition("SOME S is P")) == "I_SP");

    const ParseError most = error_of([] { parse_proposition("Most S are P"); });
    CHECK(most.kind() == ParseErrorKind::SyntaxError);
    CHECK(most.span() == SourceSpan{0, 4});

    CHECK(error_of([] { parse_proposition("All S are P"); }).span() == SourceSpan{6, 9});
    CHECK(error_of([] { parse_proposition("All S is"); }).kind() == ParseErrorKind::SyntaxError);
    CHECK(error_of([] { parse_proposition("All S is P Q"); }).kind() == ParseErrorKind::SyntaxError);
    CHECK(error_of([] { parse_proposition("All some is P"); }).span() == SourceSpan{4, 8});
    CHECK(error_of([] { parse_proposition("All S is P!"); }).span() == SourceSpan{10, 11});
    CHECK(error_of([] { parse_proposition("All _S is P"); }).span() == SourceSpan{4, 5});
}

TEST_CASE("parse_syllogism_block identifies the figure") {
    CHECK(parse_syllogism_block("All M is P; All S is M; All S is P") == syl("AAA", 1));
    CHECK(parse_syllogism_block("No P is M; Some S is M; Some S is not P") == syl("EIO", 2));
    CHECK(parse_syllogism_block("All M is P\nAll M is S\nSome S is P\nassuming some M") ==
          syl("AAI", 3, Assumption::ExistsM));
    CHECK(parse_syllogism_block("No P is M; All M is S; Some S is not P; assuming some M") ==
          syl("EAO", 4, Assumption::ExistsM));
    CHECK(parse_syllogism_block("All men is mortal; All greeks is men; All greeks is mortal") ==
          syl("AAA", 1));
}

TEST_CASE("parse_syllogism_block errors") {
    const ParseError no_middle = error_of([] { parse_syllogism_block("All A is B; All C is D; All A is D"); });
    CHECK(no_middle.kind() == ParseErrorKind::NotASyllogism);
    CHECK(no_middle.span() == SourceSpan{0, 10});
    CHECK(error_of([] { parse_syllogism_block("All M is P; All S is M"); }).kind() ==
          ParseErrorKind::NotASyllogism);
    CHECK(error_of([] { parse_syllogism_block("All S is P; All S is M; All S is P"); }).kind() ==
          ParseErrorKind::NotASyllogism);
    const ParseError amb = error_of([] { parse_syllogism_block("All M is M; All S is M; All S is P"); });
    CHECK(amb.kind() == ParseErrorKind::AmbiguousTerms);
    CHECK(amb.span() == SourceSpan{0, 10});
    CHECK(error_of([] {
              parse_syllogism_block("All M is P; All S is M; All S is P; assuming some Q");
          }).kind() == ParseErrorKind::NotASyllogism);
    CHECK(error_of([] {
              parse_syllogism_block("All M is P; All S is M; All S is P; assuming all S");
          }).kind() == ParseErrorKind::SyntaxError);
}

TEST_CASE("parse_syllogism dispatches on the notation") {
    CHECK(parse_syllogism("AEE-2") == syl("AEE", 2));
    CHECK(parse_syllogism("All P is M; No S is M; No S is P") == syl("AEE", 2));
    CHECK(parse_syllogism("All P is M\nNo S is M\nNo S is P\n") == syl("AEE", 2));
}

TEST_CASE("round trips over every syllogism") {
    for (const Syllogism& s : all_syllogisms(true)) {
        CHECK(parse_compact(render_compact(s)) == s);
        CHECK(parse_syllogism(render_compact(s)) == s);
        CHECK(parse_syllogism_block(render_block(s)) == s);
    }
    CHECK(render_compact(syl("EAO", 4, Assumption::ExistsM)) == "EAO-4 +M");
    CHECK(render_block(syl("EAO", 4, Assumption::ExistsM)) ==
          "No P is M; All M is S; Some S is not P; assuming some M");
}

TEST_CASE("split_corpus") {
    const std::string corpus = "# header\nAAA-1\n\nAll M is P\n# inside\nAll S is M\nAll S is P\n\n\nEAO-4 +M # tail\n";
    const auto entries = split_corpus(corpus);
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].text == "AAA-1");
    CHECK(entries[1].text == "All M is P\nAll S is M\nAll S is P");
    CHECK(entries[2].text == "EAO-4 +M ");
    CHECK(corpus.substr(entries[0].span.begin, 5) == "AAA-1");
    CHECK(parse_syllogism(entries[1].text) == syl("AAA", 1));
    CHECK(split_corpus("").empty());
    CHECK(split_corpus("\n# only\n\n").empty());
}

TEST_CASE("format_error points at the span") {
    const std::string text = "All M is P\nMost S is M\nAll S is P";
    const ParseError e = error_of([&] { parse_syllogism_block(text); });
    CHECK(e.span() == SourceSpan{11, 15});
    const std::string msg = format_error(text, e);
    CHECK(msg.rfind("2:1: SyntaxError: ", 0) == 0);
    CHECK(msg.find("\n  Most S is M\n  ^^^^\n") != std::string::npos);

    const ParseError c = error_of([] { parse_compact("AAB-1"); });
    CHECK(format_error("AAB-1", c) == "1:3: BadMoodLetter: 'B' is not a mood letter (A, E, I, O)\n  AAB-1\n    ^\n");
}
