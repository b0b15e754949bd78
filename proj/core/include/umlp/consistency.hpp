#ifndef UMLP_CONSISTENCY_HPP
#define UMLP_CONSISTENCY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umlp/ast.hpp"
#include "umlp/diag.hpp"
#include "umlp/system_model.hpp"

namespace umlp {

struct Bounds {
    int maxOidsPerClass = 1;
    int maxStates = 1;
    std::map<TypeName, int> carrierSizes;  // per-type override
    int defaultCarrierSize = 2;
    int maxLinksPerAssoc = 2;
    bool allowEmptyTrace = false;
    // Guard against accidental blowup; estimated model count above this
    // aborts with BoundsTooLarge.
    double spaceCeiling = 2e6;
};

/// Visitor returns false to stop the enumeration early.
using ModelVisitor = std::function<bool(const SystemModel&)>;

/// Exhaustively yields candidate finite models for the diagram set, in a
/// deterministic canonical order with symmetry reduction (oids of one
/// class carry sorted attribute vectors). Returns the number of models
/// visited, or a BoundsTooLarge diagnostic.
Result<long long> enumerate_models(const std::vector<ast::ClassDiagram>& cds,
                                   const Bounds& b, const ModelVisitor& visit);

struct ConsistencyStats {
    long long modelsExamined = 0;
    double seconds = 0.0;
};

struct ConsistencyResult {
    bool consistent = false;
    std::optional<SystemModel> witness;  // set iff consistent
    Bounds bounds;
    ConsistencyStats stats;
};

/// Searches for a witness model that conforms to every diagram. Without
/// a witness the verdict is "inconsistent up to bounds".
Result<ConsistencyResult> bounded_consistency(
    const std::vector<ast::ClassDiagram>& cds, const Bounds& b);

}  // namespace umlp

#endif
