#ifndef UMLP_TESTS_HELPERS_HPP
#define UMLP_TESTS_HELPERS_HPP

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "umlp/lowering.hpp"
#include "umlp/parser.hpp"
#include "umlp/wellformedness.hpp"

namespace umlp::test {

inline std::filesystem::path fixture_dir() {
    return std::filesystem::path(UMLP_FIXTURE_DIR);
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::filesystem::path> fixture_files(const std::string& sub,
                                                        const std::string& ext) {
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(fixture_dir() / sub))
        if (e.path().extension() == ext) out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

/// Parses and lowers one diagram source; aborts the test on failure.
inline ast::ClassDiagram lower_source(const std::string& text) {
    auto parsed = parse_cd(text);
    REQUIRE(parsed.ok());
    auto lowered = to_abstract(*parsed.cd);
    REQUIRE(lowered.ok());
    return lowered->cd;
}

inline std::set<std::string> error_codes(const std::vector<Diagnostic>& diags) {
    std::set<std::string> out;
    for (const auto& d : diags)
        if (d.severity == Severity::Error) out.insert(d.code);
    return out;
}

}  // namespace umlp::test

#endif
