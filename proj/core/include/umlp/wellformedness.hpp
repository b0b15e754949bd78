#ifndef UMLP_WELLFORMEDNESS_HPP
#define UMLP_WELLFORMEDNESS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "umlp/ast.hpp"
#include "umlp/diag.hpp"

namespace umlp {

struct WellformednessOptions {
    // Clause keys ("CC-2", "CC-3f.iv", ...) to skip; empty = run all.
    std::set<std::string> disabledClauses;
};

/// All clause keys the checker knows, in catalog order.
const std::vector<std::string>& wellformedness_clauses();

/// Runs every enabled context condition over one diagram. Violations come
/// back as diagnostics (sorted by code, then subject); the check itself
/// never fails. `spans` maps subject paths to source spans when available.
std::vector<Diagnostic> check_context_conditions(
    const ast::ClassDiagram& cd, const WellformednessOptions& opts = {},
    const std::map<std::string, Span>* spans = nullptr);

}  // namespace umlp

#endif
