#ifndef UMLP_MINICOND_HPP
#define UMLP_MINICOND_HPP

#include <memory>
#include <string>
#include <string_view>

#include "umlp/diag.hpp"
#include "umlp/value.hpp"

namespace umlp {

struct SystemModel;
struct SystemState;

namespace minicond {

// Small first-order condition language over object extents, attribute
// reads and link counts. Grammar:
//
//   expr   := ("forall" | "exists") IDENT "in" "extent" "(" NAME ")" ":" expr
//           | or
//   or     := and ("or" and)*
//   and    := unary ("and" unary)*
//   unary  := "not" unary | atom
//   atom   := "true" | "false" | "(" expr ")" | term cmp term
//   term   := literal | IDENT ".attr" "(" NAME ")"
//           | "count" "(" "links" "(" NAME "," IDENT "," ("left"|"right") ")" ")"
//   cmp    := "=" | "!=" | "<" | "<=" | ">" | ">="

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };
enum class Side { Left, Right };

struct Term {
    enum class Kind { Literal, AttrRead, LinkCount };
    Kind kind = Kind::Literal;
    Value literal{};
    std::string var;    // AttrRead, LinkCount
    std::string attr;   // AttrRead
    std::string assoc;  // LinkCount
    Side side = Side::Left;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { BoolLit, Not, And, Or, Forall, Exists, Compare };
    Kind kind = Kind::BoolLit;
    bool boolValue = false;       // BoolLit
    ExprPtr child;                // Not, quantifier body
    ExprPtr lhs, rhs;             // And, Or
    std::string var;              // quantifiers
    std::string className;        // quantifiers
    Term left, right;             // Compare
    CmpOp cmp = CmpOp::Eq;
};

Result<ExprPtr> parse_cond(std::string_view text);

struct EvalOutcome {
    enum class Kind { True, False, Error };
    Kind kind = Kind::False;
    std::string error;  // Error only, e.g. an undefined attribute read

    bool isTrue() const { return kind == Kind::True; }
    bool isError() const { return kind == Kind::Error; }
};

/// Finite-domain evaluation of a closed condition over one state.
/// extent(C) ranges over live oids whose class is C or a subclass of C.
EvalOutcome eval_cond(const Expr& cond, const SystemState& s, const SystemModel& sys);

}  // namespace minicond
}  // namespace umlp

#endif
