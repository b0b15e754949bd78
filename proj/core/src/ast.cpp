#include "umlp/ast.hpp"

namespace umlp {
namespace ast {

const std::set<Name>& basic_types() {
    static const std::set<Name> kTypes = {
        "boolean", "byte", "char", "short", "int", "long",
        "float", "double", "String",
    };
    return kTypes;
}

const char* modifier_name(Modifier m) {
    switch (m) {
        case Modifier::Public: return "public";
        case Modifier::Private: return "private";
        case Modifier::Protected: return "protected";
        case Modifier::Static: return "static";
        case Modifier::Abstract: return "abstract";
        case Modifier::Final: return "final";
        case Modifier::Composition: return "composition";
        case Modifier::Derived: return "derived";
        case Modifier::Ordered: return "ordered";
        case Modifier::Frozen: return "frozen";
        case Modifier::Addonly: return "addonly";
    }
    return "?";
}

std::vector<TypeRef> MethodDef::paramTypes() const {
    std::vector<TypeRef> out;
    out.reserve(formalParams.size());
    for (const auto& p : formalParams) out.push_back(p.type);
    return out;
}

const ClassDef* ClassDiagram::findClass(const Name& n) const {
    for (const auto& c : classes)
        if (c.name == n) return &c;
    return nullptr;
}

const InterfaceDef* ClassDiagram::findInterface(const Name& n) const {
    for (const auto& i : interfaces)
        if (i.name == n) return &i;
    return nullptr;
}

CardBounds card_bounds(const std::optional<Card>& card) {
    if (!card) return CardBounds{0, std::nullopt};
    switch (*card) {
        case Card::ZeroOne: return CardBounds{0, 1};
        case Card::One: return CardBounds{1, 1};
        case Card::Many: return CardBounds{0, std::nullopt};
    }
    return CardBounds{0, std::nullopt};
}

}  // namespace ast
}  // namespace umlp
