#include "umlp/printer.hpp"

#include <sstream>

namespace umlp {

namespace {

using namespace cst;

class Printer {
public:
    std::string run(const CDDefinition& cd) {
        printCompleteness(cd.completeness);
        printStereotypeOpt(cd.stereotype);
        out_ << "classdiagram " << cd.name << " {\n";
        indent_ = 1;
        for (const auto& el : cd.elements) {
            std::visit([this](const auto& e) { printElement(e); }, el);
        }
        out_ << "}\n";
        return out_.str();
    }

private:
    void ind() {
        for (int i = 0; i < indent_; ++i) out_ << "  ";
    }

    void printCompleteness(const std::optional<Completeness>& c) {
        if (!c) return;
        out_ << (*c == Completeness::C ? "(c) " : "(...) ");
    }

    void printStereotype(const Stereotype& st) {
        out_ << "<<";
        for (std::size_t i = 0; i < st.values.size(); ++i) {
            if (i) out_ << ", ";
            out_ << st.values[i].name;
            if (st.values[i].value) out_ << " = \"" << *st.values[i].value << '"';
        }
        out_ << ">>";
    }

    void printStereotypeOpt(const std::optional<Stereotype>& st) {
        if (!st) return;
        printStereotype(*st);
        out_ << ' ';
    }

    void printModifier(const Modifier& m) {
        if (m.stereotype) {
            printStereotype(*m.stereotype);
            out_ << ' ';
        }
        for (const auto& a : m.atoms) {
            out_ << modifierText(a) << ' ';
        }
    }

    static std::string modifierText(const ModifierAtom& a) {
        switch (a.keyword) {
            case ModifierKeyword::Public: return a.symbolForm ? "+" : "public";
            case ModifierKeyword::Private: return a.symbolForm ? "-" : "private";
            case ModifierKeyword::Protected: return a.symbolForm ? "#" : "protected";
            case ModifierKeyword::Final: return "final";
            case ModifierKeyword::Abstract: return "abstract";
            case ModifierKeyword::Local: return "local";
            case ModifierKeyword::Derived: return a.symbolForm ? "/" : "derived";
            case ModifierKeyword::Readonly: return a.symbolForm ? "?" : "readonly";
            case ModifierKeyword::Static: return "static";
        }
        return "";
    }

    void printClassOrInterfaceType(const ClassOrInterfaceType& t) {
        out_ << t.name.joined();
        if (t.typeArguments) printTypeArguments(*t.typeArguments);
    }

    void printTypeArguments(const TypeArguments& ta) {
        out_ << '<';
        for (std::size_t i = 0; i < ta.typeArguments.size(); ++i) {
            if (i) out_ << ", ";
            const TypeArgument& a = ta.typeArguments[i];
            if (a.wildcard) {
                out_ << '?';
                if (a.upperBound) {
                    out_ << " extends ";
                    printType(*a.upperBound);
                } else if (a.lowerBound) {
                    out_ << " super ";
                    printType(*a.lowerBound);
                }
            } else {
                printType(*a.type);
            }
        }
        out_ << '>';
    }

    void printTypeParameters(const std::optional<TypeParameters>& tp) {
        if (!tp) return;
        out_ << '<';
        for (std::size_t i = 0; i < tp->typeParameters.size(); ++i) {
            if (i) out_ << ", ";
            const TypeParameter& p = tp->typeParameters[i];
            out_ << p.name;
            if (!p.supTypes.empty()) {
                out_ << " extends ";
                for (std::size_t j = 0; j < p.supTypes.size(); ++j) {
                    if (j) out_ << " & ";
                    printClassOrInterfaceType(p.supTypes[j]);
                }
            }
        }
        out_ << "> ";
    }

    void printType(const Type& t) {
        switch (t.kind) {
            case Type::Kind::Void:
                out_ << "void";
                break;
            case Type::Kind::Primitive:
                out_ << t.primitive;
                break;
            case Type::Kind::Reference:
                printClassOrInterfaceType(*t.reference);
                break;
        }
        for (int i = 0; i < t.arrayDims; ++i) out_ << "[]";
    }

    void printTypeList(const std::vector<ClassOrInterfaceType>& list) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i) out_ << ", ";
            printClassOrInterfaceType(list[i]);
        }
    }

    void printParams(const std::vector<CDParameter>& params) {
        out_ << '(';
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) out_ << ", ";
            printType(params[i].type);
            out_ << ' ' << params[i].name;
        }
        out_ << ')';
    }

    void printThrows(const std::vector<QualifiedName>& throws) {
        if (throws.empty()) return;
        out_ << " throws ";
        for (std::size_t i = 0; i < throws.size(); ++i) {
            if (i) out_ << ", ";
            out_ << throws[i].joined();
        }
    }

    void printBodyOrSemi(const std::optional<OpaqueBlock>& body) {
        if (body) {
            out_ << ' ' << body->text << '\n';
        } else {
            out_ << ";\n";
        }
    }

    void printMember(const CDMember& m) {
        ind();
        if (const auto* k = std::get_if<CDConstructor>(&m)) {
            printModifier(k->modifier);
            printTypeParameters(k->typeParameters);
            out_ << k->name;
            printParams(k->parameters);
            printThrows(k->throws);
            printBodyOrSemi(k->body);
        } else if (const auto* meth = std::get_if<CDMethod>(&m)) {
            printModifier(meth->modifier);
            printTypeParameters(meth->typeParameters);
            printType(meth->returnType);
            out_ << ' ' << meth->name;
            printParams(meth->parameters);
            printThrows(meth->throws);
            printBodyOrSemi(meth->body);
        } else {
            const auto& a = std::get<CDAttribute>(m);
            printModifier(a.modifier);
            printType(a.type);
            out_ << ' ' << a.name;
            if (a.value) out_ << " = " << a.value->text;
            out_ << ";\n";
        }
    }

    void printElement(const CDClass& c) {
        ind();
        printCompleteness(c.completeness);
        printModifier(c.modifier);
        out_ << "class " << c.name;
        printTypeParameters(c.typeParameters);
        if (!c.superclasses.empty()) {
            out_ << " extends ";
            printTypeList(c.superclasses);
        }
        if (!c.interfaces.empty()) {
            out_ << " implements ";
            printTypeList(c.interfaces);
        }
        if (!c.hasBody) {
            out_ << ";\n";
            return;
        }
        out_ << " {\n";
        ++indent_;
        for (const auto& m : c.members) printMember(m);
        --indent_;
        ind();
        out_ << "}\n";
    }

    void printElement(const CDInterface& i) {
        ind();
        printCompleteness(i.completeness);
        printModifier(i.modifier);
        out_ << "interface " << i.name;
        printTypeParameters(i.typeParameters);
        if (!i.interfaces.empty()) {
            out_ << " extends ";
            printTypeList(i.interfaces);
        }
        if (!i.hasBody) {
            out_ << ";\n";
            return;
        }
        out_ << " {\n";
        ++indent_;
        for (const auto& m : i.members) printMember(m);
        --indent_;
        ind();
        out_ << "}\n";
    }

    void printElement(const CDEnum& e) {
        ind();
        printCompleteness(e.completeness);
        printModifier(e.modifier);
        out_ << "enum " << e.name;
        if (!e.interfaces.empty()) {
            out_ << " implements ";
            printTypeList(e.interfaces);
        }
        if (!e.hasBody) {
            out_ << ";\n";
            return;
        }
        out_ << " {\n";
        ++indent_;
        ind();
        for (std::size_t i = 0; i < e.constants.size(); ++i) {
            if (i) out_ << ", ";
            out_ << e.constants[i].name;
            if (!e.constants[i].parameters.empty()) {
                out_ << '(';
                for (std::size_t j = 0; j < e.constants[i].parameters.size(); ++j) {
                    if (j) out_ << ", ";
                    out_ << e.constants[i].parameters[j].value.text;
                }
                out_ << ')';
            }
        }
        out_ << ";\n";
        for (const auto& m : e.members) printMember(m);
        --indent_;
        ind();
        out_ << "}\n";
    }

    void printElement(const CDAssociation& a) {
        ind();
        if (a.stereotype) {
            printStereotype(*a.stereotype);
            out_ << ' ';
        }
        switch (a.type) {
            case CDAssociation::Kind::Association: out_ << "association"; break;
            case CDAssociation::Kind::Aggregation: out_ << "aggregation"; break;
            case CDAssociation::Kind::Composition: out_ << "composition"; break;
        }
        if (a.derived) out_ << " /";
        if (a.name) out_ << ' ' << *a.name;
        if (a.leftStereotype) {
            out_ << ' ';
            printStereotype(*a.leftStereotype);
        }
        if (a.leftCardinality) {
            out_ << ' ';
            printCardinality(*a.leftCardinality);
        }
        out_ << ' ' << a.leftReference.joined();
        if (a.leftQualifier) {
            out_ << " [";
            printClassOrInterfaceType(a.leftQualifier->type);
            out_ << ']';
        }
        if (a.leftRole) out_ << " (" << *a.leftRole << ')';
        switch (a.arrow) {
            case CDAssociation::Arrow::LeftToRight: out_ << " ->"; break;
            case CDAssociation::Arrow::RightToLeft: out_ << " <-"; break;
            case CDAssociation::Arrow::Bidirectional: out_ << " <->"; break;
            case CDAssociation::Arrow::Simple: out_ << " --"; break;
        }
        if (a.rightRole) out_ << " (" << *a.rightRole << ')';
        if (a.rightQualifier) {
            out_ << " [";
            printClassOrInterfaceType(a.rightQualifier->type);
            out_ << ']';
        }
        out_ << ' ' << a.rightReference.joined();
        if (a.rightCardinality) {
            out_ << ' ';
            printCardinality(*a.rightCardinality);
        }
        if (a.rightStereotype) {
            out_ << ' ';
            printStereotype(*a.rightStereotype);
        }
        out_ << ";\n";
    }

    void printCardinality(const Cardinality& c) {
        out_ << '[';
        switch (c.kind) {
            case Cardinality::Kind::Many:
                out_ << '*';
                break;
            case Cardinality::Kind::Single:
                out_ << c.lowerBound;
                break;
            case Cardinality::Kind::Range:
                out_ << c.lowerBound << "..";
                if (c.noUpperLimit) {
                    out_ << '*';
                } else {
                    out_ << *c.upperBound;
                }
                break;
        }
        out_ << ']';
    }

    void printElement(const Invariant& inv) {
        ind();
        if (inv.kind) out_ << *inv.kind << ": ";
        out_ << '[' << inv.expression.text << "];\n";
    }

    std::ostringstream out_;
    int indent_ = 0;
};

}  // namespace

std::string pretty_print(const ConcreteCD& cd) { return Printer().run(cd); }

bool structurally_equal(const ConcreteCD& a, const ConcreteCD& b) {
    return pretty_print(a) == pretty_print(b);
}

}  // namespace umlp
