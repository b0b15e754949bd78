#ifndef UMLP_AST_DUMP_HPP
#define UMLP_AST_DUMP_HPP

#include <string>

#include "umlp/ast.hpp"

namespace umlp {

/// Canonical structured text rendering of the abstract syntax: sorted
/// sets, stable key order. Meant for golden-file tests and --dump-ast.
std::string ast_dump(const ast::ClassDiagram& cd);

}  // namespace umlp

#endif
