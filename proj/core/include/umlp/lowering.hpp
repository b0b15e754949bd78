#ifndef UMLP_LOWERING_HPP
#define UMLP_LOWERING_HPP

#include <map>
#include <set>
#include <string>

#include "umlp/ast.hpp"
#include "umlp/cst.hpp"
#include "umlp/diag.hpp"

namespace umlp {

struct Lowered {
    ast::ClassDiagram cd;
    // Subject path ("D.A.x") -> source span, so later checks can point
    // back into the source without spans living in the abstract syntax.
    std::map<std::string, Span> spans;
};

struct LoweringOptions {
    // Stereotype names accepted without a warning. The end stereotypes
    // <<ordered>>, <<frozen>> and <<addonly>> are always understood and
    // become end modifiers instead.
    std::set<std::string> stereotypeVocabulary;
};

/// Concrete-to-abstract transformation. Either a diagram (possibly with
/// warnings) or error diagnostics, never both.
Result<Lowered> to_abstract(const ConcreteCD& cst, const LoweringOptions& opts = {});

}  // namespace umlp

#endif
