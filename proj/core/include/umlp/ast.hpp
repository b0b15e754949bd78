#ifndef UMLP_AST_HPP
#define UMLP_AST_HPP

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "umlp/diag.hpp"
#include "umlp/minicond.hpp"

namespace umlp {
namespace ast {

using Name = std::string;

/// Default basic-type vocabulary: the Java-like primitives plus String.
const std::set<Name>& basic_types();

enum class Modifier {
    Public, Private, Protected, Static, Abstract, Final,
    Composition, Derived, Ordered, Frozen, Addonly,
};

const char* modifier_name(Modifier m);

struct TypeRef {
    enum class Kind { Basic, Class, Interface, Unresolved, Void };
    Kind kind = Kind::Unresolved;
    Name name;  // empty for Void

    auto operator<=>(const TypeRef&) const = default;

    static TypeRef voidRef() { return TypeRef{Kind::Void, {}}; }
    bool isVoid() const { return kind == Kind::Void; }
};

struct FormalParam {
    Name name;
    TypeRef type;
    auto operator<=>(const FormalParam&) const = default;
};

struct AttrDef {
    std::set<Modifier> modifiers;
    Name name;
    TypeRef type;
    auto operator<=>(const AttrDef&) const = default;
};

struct OpaqueBody {
    std::string text;
    auto operator<=>(const OpaqueBody&) const = default;
};

struct ConstructorDef {
    std::set<Modifier> modifiers;
    Name name;
    std::vector<FormalParam> formalParams;  // ordered, indexed 1..n
    std::set<Name> exceptionNames;
    std::optional<OpaqueBody> body;
    auto operator<=>(const ConstructorDef&) const = default;
};

struct MethodDef {
    std::set<Modifier> modifiers;
    Name name;
    TypeRef returnType;
    std::vector<FormalParam> formalParams;
    std::set<Name> exceptionNames;
    std::optional<OpaqueBody> body;
    auto operator<=>(const MethodDef&) const = default;

    std::vector<TypeRef> paramTypes() const;
};

struct ClassDef {
    std::set<Modifier> modifiers;
    Name name;
    std::set<Name> superClassNames;
    std::set<Name> interfaceNames;
    std::set<ConstructorDef> constructors;
    std::set<MethodDef> meths;
    std::set<AttrDef> attrs;
    auto operator<=>(const ClassDef&) const = default;
};

struct InterfaceDef {
    Name name;
    std::set<Name> superInterfaceNames;
    std::set<MethodDef> meths;
    std::set<AttrDef> attrs;
    auto operator<=>(const InterfaceDef&) const = default;
};

struct Qualifier {
    enum class Kind { ByType, ByAttrName };
    Kind kind = Kind::ByType;
    TypeRef type;  // ByType
    Name attrName; // ByAttrName
    auto operator<=>(const Qualifier&) const = default;
};

/// {0..1, 1, *}; ε (absent) means no constraint.
enum class Card { ZeroOne, One, Many };

enum class Direction { Left, Right, Both, Plain };  // ←, →, ↔, −

struct AssocEnd {
    std::set<Modifier> modifiers;
    Name className;
    std::optional<Name> role;
    std::optional<Card> card;
    std::optional<Qualifier> qualifier;
    auto operator<=>(const AssocEnd&) const = default;
};

struct AssocDef {
    std::set<Modifier> modifiers;
    std::optional<Name> assocName;
    AssocEnd leftPart;
    Direction direction = Direction::Plain;
    AssocEnd rightPart;
    auto operator<=>(const AssocDef&) const = default;
};

/// An invariant keeps its source text (the identity used for set
/// membership) together with the parsed MiniCond expression.
struct Invariant {
    std::string text;
    minicond::ExprPtr cond;

    auto operator<=>(const Invariant& other) const { return text <=> other.text; }
    bool operator==(const Invariant& other) const { return text == other.text; }
};

struct ClassDiagram {
    Name diagramName;
    std::set<ClassDef> classes;
    std::set<InterfaceDef> interfaces;
    std::set<AssocDef> assocs;
    std::set<Invariant> invs;

    const ClassDef* findClass(const Name& n) const;
    const InterfaceDef* findInterface(const Name& n) const;
};

struct CardBounds {
    long min = 0;
    std::optional<long> max;  // nullopt = unbounded

    auto operator<=>(const CardBounds&) const = default;
};

/// 0..1 ↦ (0,1); 1 ↦ (1,1); * ↦ (0,∞); absent ↦ (0,∞) (no constraint).
CardBounds card_bounds(const std::optional<Card>& card);

}  // namespace ast
}  // namespace umlp

#endif
