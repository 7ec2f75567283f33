#include "syllo/cli.hpp"
#include "syllo/catalog.hpp"
#include "syllo/parser.hpp"
#include "syllo/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace syllo {

namespace {

struct Options {
    std::string format = "text";
    std::string input;
    std::string corpus;
    int n = 3;
};

struct Input {
    std::string text;
    std::string origin;  // "<arg>" or "FILE:offset"
};

// Returns false and reports on err when the corpus cannot be read.
bool collect_inputs(const Options& opt, std::vector<Input>& inputs, std::ostream& err) {
    if (!opt.input.empty()) inputs.push_back({opt.input, "<arg>"});
    if (!opt.corpus.empty()) {
        std::ifstream file(opt.corpus);
        if (!file) {
            err << "error: cannot read corpus " << opt.corpus << '\n';
            return false;
        }
        std::stringstream buf;
        buf << file.rdbuf();
        for (auto& e : split_corpus(buf.str())) {
            inputs.push_back({std::move(e.text), opt.corpus + ":" + std::to_string(e.span.begin)});
        }
    }
    if (inputs.empty()) {
        err << "error: give a syllogism or --corpus FILE\n";
        return false;
    }
    return true;
}

int worst(int a, int b) { return std::max(a, b); }

int exit_for(const VerdictSummary& v) { return v.is_valid() ? kExitValid : kExitInvalid; }

enum class Mode { Check, Trace, Parse };

int run_inputs(Mode mode, const Options& opt, OutputFormat fmt, std::ostream& out, std::ostream& err) {
    std::vector<Input> inputs;
    if (!collect_inputs(opt, inputs, err)) return kExitUsage;
    if (fmt == OutputFormat::Dot && mode == Mode::Parse) {
        err << "error: parse has no dot output\n";
        return kExitUsage;
    }
    const bool batch = inputs.size() > 1 || !opt.corpus.empty();
    int status = kExitValid;
    nlohmann::json reports = nlohmann::json::array();

    for (const auto& in : inputs) {
        Syllogism s{};
        try {
            s = parse_syllogism(in.text);
        } catch (const ParseError& e) {
            err << in.origin << ": " << format_error(in.text, e);
            status = worst(status, kExitUsage);
            continue;
        }

        if (mode == Mode::Parse) {
            if (fmt == OutputFormat::Json) {
                nlohmann::json assumption = nullptr;
                if (s.assumption != Assumption::None) {
                    assumption = std::string(assumed_term_name(s.assumption));
                }
                reports.push_back({{"input", in.text},
                                   {"compact", render_compact(s)},
                                   {"block", render_block(s)},
                                   {"mood", to_string(s.mood)},
                                   {"figure", to_int(s.figure)},
                                   {"assumption", assumption}});
            } else {
                out << render_compact(s) << ": " << render_block(s) << '\n';
            }
            continue;
        }

        const Verdict v = decide(s);
        const VerdictSummary summary = summarize(v);
        status = worst(status, exit_for(summary));

        switch (fmt) {
        case OutputFormat::Json: reports.push_back(check_report_json(in.text, s, v)); break;
        case OutputFormat::Dot: out << trace_to_dot(display_trace(s, v)); break;
        case OutputFormat::Text:
            if (mode == Mode::Trace) {
                out << render_compact(s) << '\n'
                    << trace_to_text(display_trace(s, v)) << "verdict: " << describe(summary) << '\n';
                if (batch) out << '\n';
            } else if (batch) {
                out << render_compact(s) << ": " << describe(summary) << '\n';
            } else {
                out << describe(summary) << '\n';
            }
            break;
        }
    }

    if (fmt == OutputFormat::Json && !reports.empty()) {
        out << (batch ? reports : reports.front()).dump(2) << '\n';
    }
    return status;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide categorical syllogisms by diagram reduction, checked against Venn-region models"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format: text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("syllogism", opt.input, "Compact (\"EAO-4 +M\") or block notation");
        cmd->add_option("--corpus", opt.corpus, "File of syllogisms separated by blank lines");
    };
    auto* check = app.add_subcommand("check", "Print the verdict; exit 0 valid, 1 invalid, 2 error");
    add_input(check);
    auto* trace = app.add_subcommand("trace", "Print the reduction trace");
    add_input(trace);
    auto* parse = app.add_subcommand("parse", "Parse and print canonical forms");
    add_input(parse);
    auto* tables = app.add_subcommand("tables", "Enumerate every mood and figure against the oracle");
    auto* laws = app.add_subcommand("laws", "Check the square-of-opposition laws");
    auto* count = app.add_subcommand("count", "Count valid n-term syllogisms (experimental)");
    count->add_option("n", opt.n, "Number of terms (3 or 4)")->required();

    // Let subcommand options follow the subcommand too: `check X --format json`.
    for (auto* sub : {check, trace, parse, tables, laws, count}) {
        sub->fallthrough();
    }

    std::vector<const char*> argv{"syllo"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitValid;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const OutputFormat fmt = *parse_format(opt.format);
    try {
        if (check->parsed()) return run_inputs(Mode::Check, opt, fmt, out, err);
        if (trace->parsed()) return run_inputs(Mode::Trace, opt, fmt, out, err);
        if (parse->parsed()) return run_inputs(Mode::Parse, opt, fmt, out, err);
        if (fmt == OutputFormat::Dot) {
            err << "error: dot output is only available for check and trace\n";
            return kExitUsage;
        }
        if (tables->parsed()) {
            const auto rows = enumerate_all(true);
            out << (fmt == OutputFormat::Json ? tables_to_json(rows).dump(2) + "\n" : tables_to_text(rows));
            const bool all_agree = std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.agree; });
            return all_agree ? kExitValid : kExitInvalid;
        }
        if (laws->parsed()) {
            const auto results = opposition_laws();
            const auto stuck = non_reducing_concatenations();
            out << (fmt == OutputFormat::Json ? laws_to_json(results, stuck).dump(2) + "\n"
                                              : laws_to_text(results, stuck));
            const bool ok =
                std::all_of(results.begin(), results.end(), [](const LawResult& l) { return l.holds; }) &&
                std::all_of(stuck.begin(), stuck.end(),
                            [](const StuckConcatenation& s) { return s.reducible.empty(); });
            return ok ? kExitValid : kExitInvalid;
        }
        if (count->parsed()) {
            const NTermCount c = count_valid_nterm(opt.n);
            out << (fmt == OutputFormat::Json ? count_to_json(c).dump(2) + "\n" : count_to_text(c));
            // n = 3 is a checked identity; larger n is reported only.
            return (c.n == 3 && !c.matches_formula()) ? kExitInvalid : kExitValid;
        }
    } catch (const UnsupportedN& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace syllo
