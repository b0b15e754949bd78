#ifndef UMLP_CONFORMANCE_HPP
#define UMLP_CONFORMANCE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umlp/ast.hpp"
#include "umlp/diag.hpp"
#include "umlp/system_model.hpp"

namespace umlp {

/// Identity-by-name translation from diagram names into system model
/// names. Missing entries are simply absent; the static conditions turn
/// them into failures.
struct TransMap {
    std::map<ast::Name, TypeName> transT;
    // Diagram association key (name, or "(Left--Right)" when unnamed) -> id.
    std::map<std::string, AssocId> transA;
    // "Class.name(T1,T2)" -> method id.
    std::map<std::string, MethodId> transM;
};

std::string assoc_key(const ast::AssocDef& a);
std::string method_key(const ast::Name& className, const ast::MethodDef& m);

/// Builds the identity translation. Ambiguous targets (two candidate
/// associations for one unnamed diagram association) are reported as
/// AmbiguousTarget error diagnostics.
Result<TransMap> build_translation(const ast::ClassDiagram& cd,
                                   const SystemModel& sys);

enum class Verdict { Pass, Fail, NotApplicable, OutOfScope };

const char* verdict_name(Verdict v);

struct Witness {
    std::string state;  // empty for static conditions
    std::string detail;

    auto operator<=>(const Witness&) const = default;
};

struct ConditionResult {
    std::string code;
    Verdict verdict = Verdict::Pass;
    std::vector<Witness> witnesses;
};

/// The full catalog of condition codes, in report order.
const std::vector<std::string>& conformance_codes();

/// Static conditions SM-1a..SM-3 (SM-1e is out of scope).
std::vector<ConditionResult> check_static(const ast::ClassDiagram& cd,
                                          const SystemModel& sys,
                                          const TransMap& tm);

/// Dynamic conditions SM-4a..SM-7g over the reachable states (SM-4c.iii
/// and SM-4c.iv are out of scope).
std::vector<ConditionResult> check_dynamic(const ast::ClassDiagram& cd,
                                           const SystemModel& sys,
                                           const TransMap& tm);

struct DiagramReport {
    std::string diagramName;
    std::vector<ConditionResult> results;
    std::vector<Diagnostic> diags;  // translation problems etc.
    bool pass = false;
};

struct ConformanceReport {
    std::vector<DiagramReport> sections;
    bool aggregatePass = false;
};

/// Intersection semantics over a set of diagrams: sys conforms iff it
/// conforms to every diagram individually.
ConformanceReport check_conformance(const std::vector<ast::ClassDiagram>& cds,
                                    const SystemModel& sys);

}  // namespace umlp

#endif
