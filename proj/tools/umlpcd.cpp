#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "umlp/ast_dump.hpp"
#include "umlp/conformance.hpp"
#include "umlp/consistency.hpp"
#include "umlp/lowering.hpp"
#include "umlp/parser.hpp"
#include "umlp/system_model_io.hpp"
#include "umlp/wellformedness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Options {
    std::string format = "text";
    bool machine() const { return format == "machine"; }
};

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

void print_diag(const Options& opts, const std::string& file,
                const umlp::Diagnostic& d) {
    if (opts.machine()) {
        nlohmann::ordered_json rec;
        rec["kind"] = "diagnostic";
        rec["file"] = file;
        rec["line"] = d.span ? d.span->beginLine : 0;
        rec["col"] = d.span ? d.span->beginCol : 0;
        rec["severity"] = umlp::severity_name(d.severity);
        rec["code"] = d.code;
        rec["subject"] = d.subject;
        rec["message"] = d.message;
        std::cout << rec.dump() << "\n";
        return;
    }
    int line = d.span ? d.span->beginLine : 1;
    int col = d.span ? d.span->beginCol : 1;
    std::cerr << file << ":" << line << ":" << col << ": "
              << umlp::severity_name(d.severity) << " " << d.code << ": "
              << d.message << "\n";
}

bool keep(const std::vector<std::string>& select, const std::string& code) {
    if (select.empty()) return true;
    for (const auto& s : select)
        if (s == code) return true;
    return false;
}

// Shared front half of every subcommand: read, parse, lower, check.
struct LoadedDiagram {
    std::string file;
    umlp::ast::ClassDiagram cd;
    std::map<std::string, umlp::Span> spans;
};

int load_diagrams(const Options& opts, const std::vector<std::string>& files,
                  const std::vector<std::string>& select, bool runChecks,
                  std::vector<LoadedDiagram>& out, bool& violations) {
    for (const auto& file : files) {
        std::string text;
        if (!read_file(file, text)) {
            std::cerr << file << ": cannot read file\n";
            return kExitUsage;
        }
        auto parsed = umlp::parse_cd(text);
        for (const auto& d : parsed.diags)
            if (keep(select, d.code)) print_diag(opts, file, d);
        if (umlp::has_errors(parsed.diags)) {
            violations = true;
            continue;
        }
        auto lowered = umlp::to_abstract(*parsed.cd);
        for (const auto& d : lowered.diags)
            if (keep(select, d.code)) print_diag(opts, file, d);
        if (!lowered.ok()) {
            violations = true;
            continue;
        }
        if (runChecks) {
            auto diags = umlp::check_context_conditions(lowered->cd, {},
                                                        &lowered->spans);
            for (const auto& d : diags)
                if (keep(select, d.code)) print_diag(opts, file, d);
            if (umlp::has_errors(diags)) {
                violations = true;
                continue;
            }
        }
        out.push_back(LoadedDiagram{file, lowered->cd, lowered->spans});
    }
    return kExitOk;
}

int cmd_parse(const Options& opts, const std::vector<std::string>& files,
              bool dumpAst) {
    bool violations = false;
    std::vector<LoadedDiagram> cds;
    int rc = load_diagrams(opts, files, {}, false, cds, violations);
    if (rc != kExitOk) return rc;
    if (dumpAst) {
        for (const auto& d : cds) std::cout << umlp::ast_dump(d.cd);
    }
    return violations ? kExitViolations : kExitOk;
}

int cmd_check(const Options& opts, const std::vector<std::string>& files,
              const std::vector<std::string>& select) {
    bool violations = false;
    std::vector<LoadedDiagram> cds;
    int rc = load_diagrams(opts, files, select, true, cds, violations);
    if (rc != kExitOk) return rc;
    return violations ? kExitViolations : kExitOk;
}

void print_report(const Options& opts, const umlp::ConformanceReport& report) {
    for (const auto& section : report.sections) {
        for (const auto& r : section.results) {
            if (opts.machine()) {
                nlohmann::ordered_json rec;
                rec["kind"] = "verdict";
                rec["diagram"] = section.diagramName;
                rec["code"] = r.code;
                rec["verdict"] = umlp::verdict_name(r.verdict);
                auto witnesses = nlohmann::ordered_json::array();
                for (const auto& w : r.witnesses) {
                    witnesses.push_back({{"state", w.state}, {"detail", w.detail}});
                }
                rec["witnesses"] = witnesses;
                std::cout << rec.dump() << "\n";
            } else {
                std::cout << section.diagramName << " " << r.code << " "
                          << umlp::verdict_name(r.verdict) << "\n";
                for (const auto& w : r.witnesses) {
                    std::cout << "  witness";
                    if (!w.state.empty()) std::cout << " [" << w.state << "]";
                    std::cout << " " << w.detail << "\n";
                }
            }
        }
    }
    if (opts.machine()) {
        nlohmann::ordered_json rec;
        rec["kind"] = "aggregate";
        rec["pass"] = report.aggregatePass;
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "aggregate " << (report.aggregatePass ? "pass" : "fail")
                  << "\n";
    }
}

int cmd_conform(const Options& opts, const std::vector<std::string>& files,
                const std::string& systemFile, bool lenient) {
    bool violations = false;
    std::vector<LoadedDiagram> cds;
    int rc = load_diagrams(opts, files, {}, true, cds, violations);
    if (rc != kExitOk) return rc;
    if (violations) return kExitViolations;

    std::string doc;
    if (!read_file(systemFile, doc)) {
        std::cerr << systemFile << ": cannot read file\n";
        return kExitUsage;
    }
    auto sys = umlp::load_system_model(doc, !lenient);
    for (const auto& d : sys.diags) print_diag(opts, systemFile, d);
    if (!sys.ok()) return kExitUsage;

    std::vector<umlp::ast::ClassDiagram> diagrams;
    for (const auto& d : cds) diagrams.push_back(d.cd);
    auto report = umlp::check_conformance(diagrams, *sys);
    for (const auto& section : report.sections)
        for (const auto& d : section.diags) print_diag(opts, "<conform>", d);
    print_report(opts, report);
    return report.aggregatePass ? kExitOk : kExitViolations;
}

int cmd_consistency(const Options& opts, const std::vector<std::string>& files,
                    const umlp::Bounds& bounds, const std::string& outPath) {
    bool violations = false;
    std::vector<LoadedDiagram> cds;
    int rc = load_diagrams(opts, files, {}, true, cds, violations);
    if (rc != kExitOk) return rc;
    if (violations) return kExitViolations;

    std::vector<umlp::ast::ClassDiagram> diagrams;
    for (const auto& d : cds) diagrams.push_back(d.cd);
    auto result = umlp::bounded_consistency(diagrams, bounds);
    if (!result.ok()) {
        for (const auto& d : result.diags) print_diag(opts, "<bounds>", d);
        return kExitUsage;
    }
    if (opts.machine()) {
        nlohmann::ordered_json rec;
        rec["kind"] = "consistency";
        rec["consistent"] = result->consistent;
        rec["modelsExamined"] = result->stats.modelsExamined;
        std::cout << rec.dump() << "\n";
    } else {
        if (result->consistent)
            std::cout << "consistent: witness found after "
                      << result->stats.modelsExamined << " models\n";
        else
            std::cout << "inconsistent up to bounds (" << result->stats.modelsExamined
                      << " models examined)\n";
    }
    if (result->consistent && !outPath.empty()) {
        std::ofstream out(outPath, std::ios::binary);
        if (!out) {
            std::cerr << outPath << ": cannot write file\n";
            return kExitUsage;
        }
        out << umlp::save_system_model(*result->witness);
    }
    return result->consistent ? kExitOk : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"UML/P class diagram toolchain"};
    app.require_subcommand(1);

    Options opts;
    std::vector<std::string> files;
    std::vector<std::string> select;
    bool dumpAst = false;
    std::string systemFile;
    bool lenient = false;
    std::string outPath;
    umlp::Bounds bounds;
    std::vector<std::string> carrierSpecs;

    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("files", files, "diagram files")->required();
        cmd->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"text", "machine"}));
    };

    CLI::App* parse = app.add_subcommand("parse", "parse diagram files");
    addCommon(parse);
    parse->add_flag("--dump-ast", dumpAst, "print the abstract syntax dump");

    CLI::App* check = app.add_subcommand("check", "run the context conditions");
    addCommon(check);
    check->add_option("--select", select, "only report these diagnostic codes");

    CLI::App* conform = app.add_subcommand("conform", "check a system model");
    addCommon(conform);
    conform->add_option("--system", systemFile, "system model document")
        ->required();
    conform->add_flag("--lenient", lenient, "tolerate unknown document keys");

    CLI::App* consistency =
        app.add_subcommand("consistency", "bounded witness search");
    addCommon(consistency);
    consistency->add_option("--max-oids", bounds.maxOidsPerClass,
                            "max objects per class");
    consistency->add_option("--max-states", bounds.maxStates, "max states");
    consistency->add_option("--max-links", bounds.maxLinksPerAssoc,
                            "max links per association");
    consistency->add_option("--carrier", carrierSpecs,
                            "carrier size per type, e.g. int=3");
    consistency->add_flag("--allow-empty-trace", bounds.allowEmptyTrace,
                          "admit witnesses without reachable states");
    consistency->add_option("--out", outPath, "write the witness here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        for (const auto& spec : carrierSpecs) {
            auto eq = spec.find('=');
            if (eq == std::string::npos) {
                std::cerr << "--carrier expects type=n, got '" << spec << "'\n";
                return kExitUsage;
            }
            bounds.carrierSizes[spec.substr(0, eq)] =
                std::stoi(spec.substr(eq + 1));
        }
        if (parse->parsed()) return cmd_parse(opts, files, dumpAst);
        if (check->parsed()) return cmd_check(opts, files, select);
        if (conform->parsed())
            return cmd_conform(opts, files, systemFile, lenient);
        if (consistency->parsed())
            return cmd_consistency(opts, files, bounds, outPath);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
