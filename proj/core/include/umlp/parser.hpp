#ifndef UMLP_PARSER_HPP
#define UMLP_PARSER_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "umlp/cst.hpp"
#include "umlp/diag.hpp"

namespace umlp {

struct ParseOutcome {
    std::optional<ConcreteCD> cd;
    std::vector<Diagnostic> diags;
    std::set<std::string> coverage;  // production/alternative points exercised

    bool ok() const { return cd.has_value() && !has_errors(diags); }
};

/// Parses one UML/P class diagram document. The parser recovers at ";"
/// and "}" so several syntax errors can be reported in one run.
ParseOutcome parse_cd(std::string_view text);

/// Every production/alternative point the parser can report; the fixture
/// corpus is expected to cover all of them.
const std::vector<std::string>& all_coverage_points();

}  // namespace umlp

#endif
