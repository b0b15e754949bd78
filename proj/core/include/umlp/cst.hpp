#ifndef UMLP_CST_HPP
#define UMLP_CST_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "umlp/diag.hpp"

namespace umlp {
namespace cst {

// Lossless concrete syntax tree, one node kind per grammar production of
// CD.mc / Common.mc. Child fields keep the grammar's names; every node
// carries a source span.

struct OpaqueBlock {
    enum class Style { Brace, Bracket, Paren, Literal };
    std::string text;  // byte-exact raw text (braces/parens included, brackets not)
    Style style = Style::Literal;
    Span span;
};

struct QualifiedName {
    std::vector<std::string> names;
    Span span;

    std::string joined() const;
};

struct StereoValue {
    std::string name;
    std::optional<std::string> value;  // STRING literal body
    Span span;
};

struct Stereotype {
    std::vector<StereoValue> values;
    Span span;
};

// The Completeness rule body is elided in the grammar source; the two
// accepted surface forms are handled in one place (see parser).
enum class Completeness { C, Ellipsis };

struct Cardinality {
    enum class Kind { Many, Single, Range };
    Kind kind = Kind::Single;
    long lowerBound = 0;
    std::optional<long> upperBound;  // Range only
    bool noUpperLimit = false;       // Range with "*" upper bound
    Span span;
};

enum class ModifierKeyword {
    Public, Private, Protected, Final, Abstract, Local, Derived, Readonly, Static,
};

struct ModifierAtom {
    ModifierKeyword keyword;
    bool symbolForm = false;  // "+", "-", "#", "/", "?"
    Span span;
};

struct Modifier {
    std::optional<Stereotype> stereotype;
    std::vector<ModifierAtom> atoms;
    Span span;
};

struct TypeArgument;

struct TypeArguments {
    std::vector<TypeArgument> typeArguments;
    Span span;
};

struct ClassOrInterfaceType {
    QualifiedName name;
    std::optional<TypeArguments> typeArguments;
    Span span;
};

// VoidType | PrimitiveType | ReferenceType, with array suffixes.
struct Type {
    enum class Kind { Void, Primitive, Reference };
    Kind kind = Kind::Reference;
    std::string primitive;  // Primitive only
    std::optional<ClassOrInterfaceType> reference;
    int arrayDims = 0;
    Span span;
};

struct TypeArgument {
    std::optional<Type> type;
    bool wildcard = false;
    std::optional<Type> upperBound;  // "? extends T"
    std::optional<Type> lowerBound;  // "? super T"
    Span span;
};

struct TypeParameter {
    std::string name;
    std::vector<ClassOrInterfaceType> supTypes;
    Span span;
};

struct TypeParameters {
    std::vector<TypeParameter> typeParameters;
    Span span;
};

struct CDParameter {
    Type type;
    std::string name;
    Span span;
};

struct CDMethod {
    Modifier modifier;
    std::optional<TypeParameters> typeParameters;
    Type returnType;
    std::string name;
    std::vector<CDParameter> parameters;
    std::vector<QualifiedName> throws;
    std::optional<OpaqueBlock> body;  // absent = ";" form
    Span span;
};

struct CDConstructor {
    Modifier modifier;
    std::optional<TypeParameters> typeParameters;
    std::string name;
    std::vector<CDParameter> parameters;
    std::vector<QualifiedName> throws;
    std::optional<OpaqueBlock> body;
    Span span;
};

struct CDAttribute {
    Modifier modifier;
    Type type;
    std::string name;
    std::optional<OpaqueBlock> value;  // "= Value" initializer
    Span span;
};

using CDMember = std::variant<CDConstructor, CDMethod, CDAttribute>;

struct CDClass {
    std::optional<Completeness> completeness;
    Modifier modifier;
    std::string name;
    std::optional<TypeParameters> typeParameters;
    std::vector<ClassOrInterfaceType> superclasses;
    std::vector<ClassOrInterfaceType> interfaces;
    bool hasBody = false;  // false = ";" alternative
    std::vector<CDMember> members;
    Span span;
};

struct CDInterface {
    std::optional<Completeness> completeness;
    Modifier modifier;
    std::string name;
    std::optional<TypeParameters> typeParameters;
    std::vector<ClassOrInterfaceType> interfaces;  // "extends" list
    bool hasBody = false;
    std::vector<CDMember> members;  // methods and attributes only
    Span span;
};

struct CDEnumParameter {
    OpaqueBlock value;
    Span span;
};

struct CDEnumConstant {
    std::string name;
    std::vector<CDEnumParameter> parameters;
    Span span;
};

struct CDEnum {
    std::optional<Completeness> completeness;
    Modifier modifier;
    std::string name;
    std::vector<ClassOrInterfaceType> interfaces;
    bool hasBody = false;
    std::vector<CDEnumConstant> constants;
    std::vector<CDMember> members;
    Span span;
};

struct Qualifier {
    ClassOrInterfaceType type;
    Span span;
};

struct CDAssociation {
    enum class Kind { Association, Aggregation, Composition };
    enum class Arrow { LeftToRight, RightToLeft, Bidirectional, Simple };

    std::optional<Stereotype> stereotype;
    Kind type = Kind::Association;
    bool derived = false;
    std::optional<std::string> name;
    std::optional<Stereotype> leftStereotype;
    std::optional<Cardinality> leftCardinality;
    QualifiedName leftReference;
    std::optional<Qualifier> leftQualifier;
    std::optional<std::string> leftRole;
    Arrow arrow = Arrow::Simple;
    std::optional<std::string> rightRole;
    std::optional<Qualifier> rightQualifier;
    QualifiedName rightReference;
    std::optional<Cardinality> rightCardinality;
    std::optional<Stereotype> rightStereotype;
    Span span;
};

struct Invariant {
    std::optional<std::string> kind;
    OpaqueBlock expression;  // external InvariantExpression, bracket style
    Span span;
};

using CDElement = std::variant<CDClass, CDInterface, CDEnum, CDAssociation, Invariant>;

struct CDDefinition {
    std::optional<Completeness> completeness;
    std::optional<Stereotype> stereotype;
    std::string name;
    std::vector<CDElement> elements;  // source order preserved
    Span span;
};

}  // namespace cst

using ConcreteCD = cst::CDDefinition;

}  // namespace umlp

#endif
