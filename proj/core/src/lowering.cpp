#include "umlp/lowering.hpp"

#include <algorithm>

namespace umlp {

namespace {

using namespace ast;

class Lowering {
public:
    Lowering(const ConcreteCD& cst, const LoweringOptions& opts)
        : cst_(cst), opts_(opts) {}

    Result<Lowered> run() {
        collectDeclaredNames();
        out_.cd.diagramName = cst_.name;
        span(cst_.name, cst_.span);
        checkStereotype(cst_.stereotype, cst_.name);

        for (const auto& el : cst_.elements) {
            std::visit([this](const auto& node) { lowerElement(node); }, el);
        }

        sort_diagnostics(diags_);
        if (has_errors(diags_)) {
            Result<Lowered> r;
            r.diags = std::move(diags_);
            return r;
        }
        Result<Lowered> r = Result<Lowered>::success(std::move(out_));
        r.diags = std::move(diags_);
        return r;
    }

private:
    void error(std::string message, std::string subject, const Span& sp) {
        diags_.push_back(Diagnostic{"UnsupportedConstruct", Severity::Error,
                                    std::move(message), std::move(subject), sp});
    }

    void warn(std::string message, std::string subject, const Span& sp) {
        diags_.push_back(Diagnostic{"UnsupportedConstruct", Severity::Warning,
                                    std::move(message), std::move(subject), sp});
    }

    void span(const std::string& path, const Span& sp) {
        out_.spans.emplace(path, sp);
    }

    void collectDeclaredNames() {
        for (const auto& el : cst_.elements) {
            if (const auto* c = std::get_if<cst::CDClass>(&el))
                classNames_.insert(c->name);
            else if (const auto* i = std::get_if<cst::CDInterface>(&el))
                interfaceNames_.insert(i->name);
        }
    }

    void checkStereotype(const std::optional<cst::Stereotype>& st,
                         const std::string& subject) {
        if (!st) return;
        for (const auto& v : st->values) {
            if (!opts_.stereotypeVocabulary.count(v.name))
                warn("stereotype '" + v.name + "' is not in the accepted vocabulary",
                     subject, v.span);
        }
    }

    std::set<Modifier> lowerModifier(const cst::Modifier& m,
                                     const std::string& subject) {
        checkStereotype(m.stereotype, subject);
        std::set<Modifier> out;
        for (const auto& atom : m.atoms) {
            switch (atom.keyword) {
                case cst::ModifierKeyword::Public: out.insert(Modifier::Public); break;
                case cst::ModifierKeyword::Private: out.insert(Modifier::Private); break;
                case cst::ModifierKeyword::Protected:
                    out.insert(Modifier::Protected);
                    break;
                case cst::ModifierKeyword::Final: out.insert(Modifier::Final); break;
                case cst::ModifierKeyword::Abstract:
                    out.insert(Modifier::Abstract);
                    break;
                case cst::ModifierKeyword::Static: out.insert(Modifier::Static); break;
                case cst::ModifierKeyword::Derived: out.insert(Modifier::Derived); break;
                case cst::ModifierKeyword::Readonly:
                    out.insert(Modifier::Frozen);
                    break;
                case cst::ModifierKeyword::Local:
                    error("modifier 'local' is not supported", subject, atom.span);
                    break;
            }
        }
        return out;
    }

    TypeRef classify(const std::string& name) const {
        if (basic_types().count(name)) return TypeRef{TypeRef::Kind::Basic, name};
        if (classNames_.count(name)) return TypeRef{TypeRef::Kind::Class, name};
        if (interfaceNames_.count(name)) return TypeRef{TypeRef::Kind::Interface, name};
        return TypeRef{TypeRef::Kind::Unresolved, name};
    }

    TypeRef lowerType(const cst::Type& t, const std::string& subject) {
        if (t.arrayDims > 0)
            error("array types are not supported", subject, t.span);
        switch (t.kind) {
            case cst::Type::Kind::Void:
                return TypeRef::voidRef();
            case cst::Type::Kind::Primitive:
                return TypeRef{TypeRef::Kind::Basic, t.primitive};
            case cst::Type::Kind::Reference: {
                if (t.reference->typeArguments)
                    error("generic type arguments are not supported", subject,
                          t.reference->typeArguments->span);
                return classify(t.reference->name.joined());
            }
        }
        return TypeRef{};
    }

    void rejectTypeParameters(const std::optional<cst::TypeParameters>& tp,
                              const std::string& subject) {
        if (tp) error("type parameters are not supported", subject, tp->span);
    }

    std::set<Name> lowerThrows(const std::vector<cst::QualifiedName>& throws) {
        std::set<Name> out;
        for (const auto& q : throws) out.insert(q.joined());
        return out;
    }

    std::vector<FormalParam> lowerParams(const std::vector<cst::CDParameter>& ps,
                                         const std::string& subject) {
        std::vector<FormalParam> out;
        for (const auto& p : ps)
            out.push_back(FormalParam{p.name, lowerType(p.type, subject)});
        return out;
    }

    MethodDef lowerMethod(const cst::CDMethod& m, const std::string& owner) {
        std::string path = owner + "." + m.name;
        span(path, m.span);
        MethodDef out;
        out.modifiers = lowerModifier(m.modifier, path);
        rejectTypeParameters(m.typeParameters, path);
        out.name = m.name;
        out.returnType = lowerType(m.returnType, path);
        out.formalParams = lowerParams(m.parameters, path);
        out.exceptionNames = lowerThrows(m.throws);
        if (m.body) out.body = OpaqueBody{m.body->text};
        return out;
    }

    ConstructorDef lowerConstructor(const cst::CDConstructor& c,
                                    const std::string& owner) {
        std::string path = owner + "." + c.name;
        span(path, c.span);
        ConstructorDef out;
        out.modifiers = lowerModifier(c.modifier, path);
        rejectTypeParameters(c.typeParameters, path);
        out.name = c.name;
        out.formalParams = lowerParams(c.parameters, path);
        out.exceptionNames = lowerThrows(c.throws);
        if (c.body) out.body = OpaqueBody{c.body->text};
        return out;
    }

    AttrDef lowerAttribute(const cst::CDAttribute& a, const std::string& owner) {
        std::string path = owner + "." + a.name;
        span(path, a.span);
        AttrDef out;
        out.modifiers = lowerModifier(a.modifier, path);
        out.name = a.name;
        out.type = lowerType(a.type, path);
        if (a.value)
            error("initial attribute values are not supported", path, a.value->span);
        return out;
    }

    void lowerElement(const cst::CDClass& c) {
        std::string path = cst_.name + "." + c.name;
        span(path, c.span);
        ClassDef out;
        out.modifiers = lowerModifier(c.modifier, path);
        rejectTypeParameters(c.typeParameters, path);
        out.name = c.name;
        for (const auto& s : c.superclasses) {
            if (s.typeArguments)
                error("generic type arguments are not supported", path,
                      s.typeArguments->span);
            out.superClassNames.insert(s.name.joined());
        }
        for (const auto& i : c.interfaces) {
            if (i.typeArguments)
                error("generic type arguments are not supported", path,
                      i.typeArguments->span);
            out.interfaceNames.insert(i.name.joined());
        }
        for (const auto& member : c.members) {
            if (const auto* m = std::get_if<cst::CDMethod>(&member))
                out.meths.insert(lowerMethod(*m, path));
            else if (const auto* k = std::get_if<cst::CDConstructor>(&member))
                out.constructors.insert(lowerConstructor(*k, path));
            else if (const auto* a = std::get_if<cst::CDAttribute>(&member))
                out.attrs.insert(lowerAttribute(*a, path));
        }
        out_.cd.classes.insert(std::move(out));
    }

    void lowerElement(const cst::CDInterface& i) {
        std::string path = cst_.name + "." + i.name;
        span(path, i.span);
        InterfaceDef out;
        // The grammar allows a modifier on interfaces; the abstract syntax
        // keeps only the name, so modifiers other than 'local' drop silently.
        lowerModifier(i.modifier, path);
        rejectTypeParameters(i.typeParameters, path);
        out.name = i.name;
        for (const auto& s : i.interfaces) {
            if (s.typeArguments)
                error("generic type arguments are not supported", path,
                      s.typeArguments->span);
            out.superInterfaceNames.insert(s.name.joined());
        }
        for (const auto& member : i.members) {
            if (const auto* m = std::get_if<cst::CDMethod>(&member))
                out.meths.insert(lowerMethod(*m, path));
            else if (const auto* a = std::get_if<cst::CDAttribute>(&member))
                out.attrs.insert(lowerAttribute(*a, path));
        }
        out_.cd.interfaces.insert(std::move(out));
    }

    void lowerElement(const cst::CDEnum& e) {
        error("enumeration types are not supported", cst_.name + "." + e.name, e.span);
    }

    std::optional<Card> lowerCardinality(const std::optional<cst::Cardinality>& c,
                                         const std::string& subject) {
        if (!c) return std::nullopt;
        switch (c->kind) {
            case cst::Cardinality::Kind::Many:
                return Card::Many;
            case cst::Cardinality::Kind::Single:
                if (c->lowerBound == 1) return Card::One;
                break;
            case cst::Cardinality::Kind::Range:
                if (c->lowerBound == 0 && c->upperBound && *c->upperBound == 1)
                    return Card::ZeroOne;
                break;
        }
        error("cardinality must be one of [0..1], [1] or [*]", subject, c->span);
        return std::nullopt;
    }

    std::optional<ast::Qualifier> lowerQualifier(
        const std::optional<cst::Qualifier>& q, const std::string& subject) {
        if (!q) return std::nullopt;
        if (q->type.typeArguments)
            error("generic type arguments are not supported", subject,
                  q->type.typeArguments->span);
        std::string name = q->type.name.joined();
        TypeRef ref = classify(name);
        ast::Qualifier out;
        if (ref.kind == TypeRef::Kind::Unresolved) {
            // Names that resolve to no declared or basic type read as
            // attribute-name qualifiers.
            out.kind = ast::Qualifier::Kind::ByAttrName;
            out.attrName = name;
        } else {
            out.kind = ast::Qualifier::Kind::ByType;
            out.type = ref;
        }
        return out;
    }

    std::set<Modifier> endStereotypeModifiers(
        const std::optional<cst::Stereotype>& st, const std::string& subject) {
        std::set<Modifier> out;
        if (!st) return out;
        for (const auto& v : st->values) {
            if (v.name == "ordered") out.insert(Modifier::Ordered);
            else if (v.name == "frozen") out.insert(Modifier::Frozen);
            else if (v.name == "addonly") out.insert(Modifier::Addonly);
            else if (!opts_.stereotypeVocabulary.count(v.name))
                warn("stereotype '" + v.name + "' is not in the accepted vocabulary",
                     subject, v.span);
        }
        return out;
    }

    void lowerElement(const cst::CDAssociation& a) {
        std::string left = a.leftReference.joined();
        std::string right = a.rightReference.joined();
        std::string path = cst_.name + "." +
                           (a.name ? *a.name : "(" + left + "--" + right + ")");
        while (out_.spans.count(path)) path += "'";
        span(path, a.span);

        AssocDef out;
        checkStereotype(a.stereotype, path);
        if (a.type == cst::CDAssociation::Kind::Composition)
            out.modifiers.insert(Modifier::Composition);
        if (a.derived) out.modifiers.insert(Modifier::Derived);
        out.assocName = a.name;

        out.leftPart.modifiers = endStereotypeModifiers(a.leftStereotype, path);
        out.leftPart.className = left;
        out.leftPart.role = a.leftRole;
        out.leftPart.card = lowerCardinality(a.leftCardinality, path);
        out.leftPart.qualifier = lowerQualifier(a.leftQualifier, path);

        switch (a.arrow) {
            case cst::CDAssociation::Arrow::LeftToRight:
                out.direction = Direction::Right;
                break;
            case cst::CDAssociation::Arrow::RightToLeft:
                out.direction = Direction::Left;
                break;
            case cst::CDAssociation::Arrow::Bidirectional:
                out.direction = Direction::Both;
                break;
            case cst::CDAssociation::Arrow::Simple:
                out.direction = Direction::Plain;
                break;
        }

        out.rightPart.modifiers = endStereotypeModifiers(a.rightStereotype, path);
        out.rightPart.className = right;
        out.rightPart.role = a.rightRole;
        out.rightPart.card = lowerCardinality(a.rightCardinality, path);
        out.rightPart.qualifier = lowerQualifier(a.rightQualifier, path);

        out_.cd.assocs.insert(std::move(out));
    }

    void lowerElement(const cst::Invariant& inv) {
        std::string path = cst_.name + ".invariant";
        while (out_.spans.count(path)) path += "'";
        span(path, inv.span);
        auto parsed = minicond::parse_cond(inv.expression.text);
        if (!parsed.ok()) {
            for (auto d : parsed.diags) {
                d.subject = path;
                d.span = inv.expression.span;
                diags_.push_back(std::move(d));
            }
            return;
        }
        out_.cd.invs.insert(ast::Invariant{inv.expression.text, *parsed});
    }

    const ConcreteCD& cst_;
    const LoweringOptions& opts_;
    Lowered out_;
    std::vector<Diagnostic> diags_;
    std::set<std::string> classNames_, interfaceNames_;
};

}  // namespace

Result<Lowered> to_abstract(const ConcreteCD& cst, const LoweringOptions& opts) {
    return Lowering(cst, opts).run();
}

}  // namespace umlp
