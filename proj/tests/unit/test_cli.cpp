#include "syllo/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace syllo;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const char* name) {
    std::ifstream in(std::filesystem::path(SYLLO_GOLDEN_DIR) / name);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("check exit codes") {
    CHECK(run({"check", "AEE-2"}).code == kExitValid);
    CHECK(run({"check", "AEE-2"}).out == "valid\n");
    CHECK(run({"check", "OEI-4"}).code == kExitInvalid);
    CHECK(run({"check", "OEI-4"}).out == "invalid\n");
    const Run cond = run({"check", "AAI-3 +M"});
    CHECK(cond.code == kExitValid);
    CHECK(cond.out == "valid under: there is some M\n");
    CHECK(run({"check", "AAI-3"}).code == kExitInvalid);
    CHECK(run({"check", "All M is P; All S is M; All S is P"}).code == kExitValid);
}

TEST_CASE("usage errors exit 2") {
    const Run bad = run({"check", "AAB-1"});
    CHECK(bad.code == kExitUsage);
    CHECK(contains(bad.err, "BadMoodLetter"));
    CHECK(run({"check"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"--format", "xml", "check", "AAA-1"}).code == kExitUsage);
    CHECK(run({"--format", "dot", "tables"}).code == kExitUsage);
    CHECK(run({"count", "5"}).code == kExitUsage);
    CHECK(run({"check", "--corpus", "/nonexistent/corpus.txt"}).code == kExitUsage);
}

TEST_CASE("trace text output") {
    const Run aaa = run({"trace", "AAA-1"});
    CHECK(aaa.code == kExitValid);
    CHECK(aaa.out ==
          "AAA-1\n"
          "initial: S -> M -> P\n"
          "step 1: delete M at 1: S -> M -> P => S -> P\n"
          "normal form: S -> P\n"
          "verdict: valid\n");
    CHECK(contains(run({"trace", "EAE-1"}).out, "normal form: S -> * <- P\n"));
    const Run oei = run({"trace", "OEI-4"});
    CHECK(oei.code == kExitInvalid);
    CHECK(contains(oei.out, "initial: S -> * <- M -> * <- * -> P\n"));
    CHECK(contains(oei.out, "verdict: invalid\n"));
    CHECK_FALSE(contains(oei.out, "step 1"));
}

TEST_CASE("format flag may follow the subcommand") {
    const Run j = run({"check", "AEE-2", "--format", "json"});
    CHECK(j.code == kExitValid);
    CHECK(contains(j.out, "\"verdict\": \"valid\""));
}

TEST_CASE("golden JSON and DOT outputs") {
    CHECK(run({"--format", "json", "check", "EAO-4 +M"}).out == golden("check_EAO-4_M.json"));
    CHECK(run({"--format", "json", "trace", "OEI-4"}).out == golden("trace_OEI-4.json"));
    CHECK(run({"--format", "dot", "trace", "AAA-1"}).out == golden("trace_AAA-1.dot"));
    CHECK(run({"--format", "dot", "trace", "AAI-4 +P"}).out == golden("trace_AAI-4_P.dot"));
    CHECK(run({"--format", "json", "laws"}).out == golden("laws.json"));
}

TEST_CASE("parse prints canonical forms") {
    const Run p = run({"parse", "No P is M; All M is S; Some S is not P; assuming some M"});
    CHECK(p.code == kExitValid);
    CHECK(p.out == "EAO-4 +M: No P is M; All M is S; Some S is not P; assuming some M\n");
    CHECK(run({"--format", "dot", "parse", "AAA-1"}).code == kExitUsage);
}

TEST_CASE("corpus mode reports every entry and exits with the worst status") {
    const auto path = std::filesystem::temp_directory_path() / "syllo_test_corpus.txt";
    {
        std::ofstream f(path);
        f << "# two valid, one invalid\nAAA-1\n\nAll P is M\nNo S is M\nNo S is P\n\nOEI-4\n";
    }
    const Run r = run({"check", "--corpus", path.string()});
    CHECK(r.code == kExitInvalid);
    CHECK(r.out == "AAA-1: valid\nAEE-2: valid\nOEI-4: invalid\n");

    {
        std::ofstream f(path);
        f << "AAA-1\n\nAAA-9\n";
    }
    const Run bad = run({"check", "--corpus", path.string()});
    CHECK(bad.code == kExitUsage);
    CHECK(contains(bad.err, "BadFigure"));
    CHECK(bad.out == "AAA-1: valid\n");
    std::filesystem::remove(path);
}

TEST_CASE("tables, laws and count") {
    const Run t = run({"tables"});
    CHECK(t.code == kExitValid);
    CHECK(contains(t.out, "agreement: 1024/1024 rows"));
    const Run l = run({"laws"});
    CHECK(l.code == kExitValid);
    CHECK(contains(l.out, "10/10 pass"));
    const Run c = run({"count", "3"});
    CHECK(c.code == kExitValid);
    CHECK(contains(c.out, "24 (= 3n²−n ✓)"));
}
