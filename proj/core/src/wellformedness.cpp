#include "umlp/wellformedness.hpp"

#include <algorithm>

#include "umlp/relation.hpp"

namespace umlp {

namespace {

using namespace ast;

std::string type_name(const TypeRef& t) {
    return t.isVoid() ? "void" : t.name;
}

std::string signature(const MethodDef& m) {
    std::string s = m.name + "(";
    bool first = true;
    for (const auto& p : m.formalParams) {
        if (!first) s += ",";
        s += type_name(p.type);
        first = false;
    }
    return s + ")";
}

int visibility_count(const std::set<Modifier>& mods) {
    int n = 0;
    for (Modifier m : {Modifier::Public, Modifier::Private, Modifier::Protected})
        n += mods.count(m) ? 1 : 0;
    return n;
}

class Checker {
public:
    Checker(const ClassDiagram& cd, const WellformednessOptions& opts,
            const std::map<std::string, Span>* spans)
        : cd_(cd), opts_(opts), spans_(spans) {
        for (const auto& c : cd_.classes) classNames_.insert(c.name);
        for (const auto& i : cd_.interfaces) interfaceNames_.insert(i.name);
    }

    std::vector<Diagnostic> run() {
        checkModifierApplicability();
        checkNameUniqueness();
        for (const auto& c : cd_.classes) checkClass(c);
        checkAcyclicity();
        for (const auto& a : cd_.assocs) checkAssoc(a);
        for (const auto& i : cd_.interfaces) checkInterface(i);
        sort_diagnostics(diags_);
        return std::move(diags_);
    }

private:
    bool enabled(const std::string& clause) const {
        return !opts_.disabledClauses.count(clause);
    }

    void emit(const std::string& clause, Severity sev, std::string message,
              std::string subject) {
        if (!enabled(clause)) return;
        Diagnostic d{clause, sev, std::move(message), std::move(subject)};
        if (spans_) {
            if (auto it = spans_->find(d.subject); it != spans_->end())
                d.span = it->second;
        }
        diags_.push_back(std::move(d));
    }

    std::string path(const Name& element) const {
        return cd_.diagramName + "." + element;
    }

    std::string path(const Name& element, const Name& member) const {
        return cd_.diagramName + "." + element + "." + member;
    }

    std::string assocSubject(const AssocDef& a) const {
        if (a.assocName) return path(*a.assocName);
        return path("(" + a.leftPart.className + "--" + a.rightPart.className + ")");
    }

    // 1a-1f
    void checkModifiers(const std::string& clause, const std::set<Modifier>& mods,
                        const std::set<Modifier>& allowed, const char* kind,
                        const std::string& subject) {
        for (Modifier m : mods) {
            if (!allowed.count(m))
                emit(clause, Severity::Error,
                     std::string("modifier '") + modifier_name(m) +
                         "' is not applicable to " + kind,
                     subject);
        }
    }

    void checkModifierApplicability() {
        static const std::set<Modifier> kClass{Modifier::Abstract, Modifier::Final};
        static const std::set<Modifier> kAssoc{Modifier::Composition,
                                               Modifier::Derived};
        static const std::set<Modifier> kEnd{Modifier::Addonly, Modifier::Frozen,
                                             Modifier::Ordered};
        static const std::set<Modifier> kCtor{Modifier::Public, Modifier::Private,
                                              Modifier::Protected};
        static const std::set<Modifier> kMeth{Modifier::Public, Modifier::Private,
                                              Modifier::Protected, Modifier::Abstract,
                                              Modifier::Static};
        static const std::set<Modifier> kAttr{Modifier::Public,  Modifier::Private,
                                              Modifier::Protected, Modifier::Static,
                                              Modifier::Final,   Modifier::Derived};
        for (const auto& c : cd_.classes) {
            checkModifiers("CC-1a", c.modifiers, kClass, "a class", path(c.name));
            for (const auto& k : c.constructors)
                checkModifiers("CC-1d", k.modifiers, kCtor, "a constructor",
                               path(c.name, k.name));
            for (const auto& m : c.meths)
                checkModifiers("CC-1e", m.modifiers, kMeth, "a method",
                               path(c.name, m.name));
            for (const auto& at : c.attrs)
                checkModifiers("CC-1f", at.modifiers, kAttr, "an attribute",
                               path(c.name, at.name));
        }
        for (const auto& i : cd_.interfaces) {
            for (const auto& m : i.meths)
                checkModifiers("CC-1e", m.modifiers, kMeth, "a method",
                               path(i.name, m.name));
            for (const auto& at : i.attrs)
                checkModifiers("CC-1f", at.modifiers, kAttr, "an attribute",
                               path(i.name, at.name));
        }
        for (const auto& a : cd_.assocs) {
            checkModifiers("CC-1b", a.modifiers, kAssoc, "an association",
                           assocSubject(a));
            checkModifiers("CC-1c", a.leftPart.modifiers, kEnd, "an association end",
                           assocSubject(a));
            checkModifiers("CC-1c", a.rightPart.modifiers, kEnd,
                           "an association end", assocSubject(a));
        }
    }

    // 2
    void checkNameUniqueness() {
        std::map<Name, int> seen;
        for (const auto& c : cd_.classes) seen[c.name]++;
        for (const auto& i : cd_.interfaces) seen[i.name]++;
        for (const auto& [name, n] : seen) {
            if (n > 1)
                emit("CC-2", Severity::Error,
                     "class or interface name '" + name + "' is declared " +
                         std::to_string(n) + " times",
                     path(name));
        }
    }

    // Methods visible in c including inherited ones, for 3g.i.
    std::vector<const MethodDef*> allMethods(const ClassDef& c) const {
        std::vector<const MethodDef*> out;
        std::set<Name> visited;
        std::vector<const ClassDef*> work{&c};
        while (!work.empty()) {
            const ClassDef* cur = work.back();
            work.pop_back();
            if (!visited.insert(cur->name).second) continue;
            for (const auto& m : cur->meths) out.push_back(&m);
            for (const auto& super : cur->superClassNames)
                if (const ClassDef* d = cd_.findClass(super)) work.push_back(d);
        }
        return out;
    }

    // Interface method set including superinterfaces, for 3g.i.
    void collectInterfaceMethods(const Name& iname, std::set<Name>& visited,
                                 std::vector<const MethodDef*>& out) const {
        if (!visited.insert(iname).second) return;
        const InterfaceDef* i = cd_.findInterface(iname);
        if (!i) return;
        for (const auto& m : i->meths) out.push_back(&m);
        for (const auto& super : i->superInterfaceNames)
            collectInterfaceMethods(super, visited, out);
    }

    void checkClass(const ClassDef& c) {
        // 3a
        for (const auto& n : c.superClassNames) {
            const ClassDef* d = cd_.findClass(n);
            if (!d)
                emit("CC-3a", Severity::Error,
                     "superclass '" + n + "' is not declared in the diagram",
                     path(c.name));
            else if (d->modifiers.count(Modifier::Final))
                emit("CC-3a", Severity::Error,
                     "superclass '" + n + "' is final", path(c.name));
        }
        // 3b
        for (const auto& n : c.interfaceNames) {
            if (!cd_.findInterface(n))
                emit("CC-3b", Severity::Error,
                     "interface '" + n + "' is not declared in the diagram",
                     path(c.name));
        }
        // 3c
        for (const auto& k : c.constructors) {
            if (k.name != c.name)
                emit("CC-3c", Severity::Error,
                     "constructor name '" + k.name + "' differs from class name '" +
                         c.name + "'",
                     path(c.name, k.name));
        }
        // 3d
        std::map<Name, int> attrNames;
        for (const auto& at : c.attrs) attrNames[at.name]++;
        for (const auto& [name, n] : attrNames) {
            if (n > 1)
                emit("CC-3d", Severity::Error,
                     "attribute '" + name + "' is declared " + std::to_string(n) +
                         " times",
                     path(c.name, name));
        }
        // 3e
        for (const auto& at : c.attrs) {
            if (visibility_count(at.modifiers) > 1)
                emit("CC-3e", Severity::Error,
                     "attribute '" + at.name + "' has more than one visibility modifier",
                     path(c.name, at.name));
        }
        for (const auto& m : c.meths) checkMethod(c, m);

        // 3f.vi: within one class
        std::map<std::string, int> sigs;
        for (const auto& m : c.meths) sigs[signature(m)]++;
        for (const auto& [sig, n] : sigs) {
            if (n > 1)
                emit("CC-3f.vi", Severity::Error,
                     "ambiguous method signature '" + sig + "'",
                     path(c.name, sig.substr(0, sig.find('('))));
        }
        // 3f.vii: deferred to the implementation language, note only
        if (!c.meths.empty())
            emit("CC-3f.vii", Severity::Note,
                 "visibility restrictions on method calls depend on the "
                 "implementation language and are not checked",
                 path(c.name));

        checkSubclassing(c);
    }

    void checkMethod(const ClassDef& c, const MethodDef& m) {
        const std::string subject = path(c.name, m.name);
        // 3f.i
        if (visibility_count(m.modifiers) > 1)
            emit("CC-3f.i", Severity::Error,
                 "method '" + m.name + "' has more than one visibility modifier",
                 subject);
        // 3f.ii
        for (const auto& ex : m.exceptionNames) {
            if (!classNames_.count(ex))
                emit("CC-3f.ii", Severity::Error,
                     "exception '" + ex + "' is not a declared class", subject);
        }
        // 3f.iii
        if (m.returnType.kind == TypeRef::Kind::Unresolved)
            emit("CC-3f.iii", Severity::Error,
                 "return type '" + m.returnType.name +
                     "' is neither declared nor a basic type",
                 subject);
        // 3f.iv
        if (m.modifiers.count(Modifier::Abstract)) {
            if (!c.modifiers.count(Modifier::Abstract))
                emit("CC-3f.iv", Severity::Error,
                     "abstract method '" + m.name + "' in non-abstract class '" +
                         c.name + "'",
                     subject);
            if (m.body)
                emit("CC-3f.iv", Severity::Error,
                     "abstract method '" + m.name + "' has a body", subject);
        }
        // 3f.v
        std::map<Name, int> paramNames;
        for (const auto& p : m.formalParams) {
            paramNames[p.name]++;
            if (p.type.kind == TypeRef::Kind::Unresolved)
                emit("CC-3f.v", Severity::Error,
                     "parameter '" + p.name + "' has undeclared type '" +
                         p.type.name + "'",
                     subject);
        }
        for (const auto& [name, n] : paramNames) {
            if (n > 1)
                emit("CC-3f.v", Severity::Error,
                     "parameter name '" + name + "' is used " + std::to_string(n) +
                         " times",
                     subject);
        }
    }

    void checkSubclassing(const ClassDef& c) {
        // 3g.i
        if (!c.modifiers.count(Modifier::Abstract)) {
            std::vector<const MethodDef*> own = allMethods(c);
            std::set<std::string> ownSigs;
            for (const auto* m : own) ownSigs.insert(signature(*m));
            std::set<Name> visited;
            std::vector<const MethodDef*> required;
            for (const auto& n : c.interfaceNames)
                collectInterfaceMethods(n, visited, required);
            for (const auto* m : required) {
                if (!ownSigs.count(signature(*m)))
                    emit("CC-3g.i", Severity::Error,
                         "class '" + c.name + "' does not implement interface method '" +
                             signature(*m) + "'",
                         path(c.name));
            }
        }
        // 3g.ii: overriding may not narrow visibility below the superclass
        for (const auto& superName : c.superClassNames) {
            const ClassDef* super = cd_.findClass(superName);
            if (!super) continue;
            for (const auto& m1 : super->meths) {
                if (!m1.modifiers.count(Modifier::Public)) continue;
                for (const auto& m2 : c.meths) {
                    if (m1.name != m2.name || signature(m1) != signature(m2)) continue;
                    if (m2.modifiers.count(Modifier::Private))
                        emit("CC-3g.ii", Severity::Error,
                             "override of public method '" + signature(m1) +
                                 "' may not be private",
                             path(c.name, m2.name));
                    else if (m2.modifiers.count(Modifier::Protected))
                        emit("CC-3g.ii", Severity::Warning,
                             "override of public method '" + signature(m1) +
                                 "' narrows visibility to protected",
                             path(c.name, m2.name));
                }
            }
        }
    }

    // 4
    void checkAcyclicity() {
        NameRelation r1, r2;
        for (const auto& c : cd_.classes)
            for (const auto& s : c.superClassNames)
                if (classNames_.count(s)) r1.pairs.insert({c.name, s});
        for (const auto& i : cd_.interfaces)
            for (const auto& s : i.superInterfaceNames)
                if (interfaceNames_.count(s)) r2.pairs.insert({i.name, s});
        for (const auto& [a, b] : transitive_closure(r1).pairs) {
            if (a == b)
                emit("CC-4", Severity::Error,
                     "superclass relationship is circular through '" + a + "'",
                     path(a));
        }
        for (const auto& [a, b] : transitive_closure(r2).pairs) {
            if (a == b)
                emit("CC-4", Severity::Error,
                     "superinterface relationship is circular through '" + a + "'",
                     path(a));
        }
    }

    void checkAssoc(const AssocDef& a) {
        const std::string subject = assocSubject(a);
        // 5a
        for (const auto* end : {&a.leftPart, &a.rightPart}) {
            if (!classNames_.count(end->className))
                emit("CC-5a", Severity::Error,
                     "association end references undeclared class '" +
                         end->className + "'",
                     subject);
        }
        // 5b / 5c: attribute-name qualifiers exist on the opposite class
        auto checkQualifier = [&](const std::optional<ast::Qualifier>& q,
                                  const Name& oppositeClass, const char* clause) {
            if (!q || q->kind != ast::Qualifier::Kind::ByAttrName) return;
            const ClassDef* c = cd_.findClass(oppositeClass);
            bool found = false;
            if (c) {
                for (const auto& at : c->attrs)
                    if (at.name == q->attrName) found = true;
            }
            if (!found)
                emit(clause, Severity::Error,
                     "qualifier '" + q->attrName + "' is not an attribute of class '" +
                         oppositeClass + "'",
                     subject);
        };
        checkQualifier(a.leftPart.qualifier, a.rightPart.className, "CC-5b");
        checkQualifier(a.rightPart.qualifier, a.leftPart.className, "CC-5c");
        // 6
        if (a.modifiers.count(Modifier::Composition) && a.leftPart.card &&
            *a.leftPart.card == Card::Many)
            emit("CC-6", Severity::Error,
                 "composite end may not exceed cardinality 1", subject);
    }

    void checkInterface(const InterfaceDef& i) {
        // 7a
        for (const auto& n : i.superInterfaceNames) {
            if (!interfaceNames_.count(n))
                emit("CC-7a", Severity::Error,
                     "superinterface '" + n + "' is not declared in the diagram",
                     path(i.name));
        }
        // 7b
        std::map<Name, int> attrNames;
        for (const auto& at : i.attrs) attrNames[at.name]++;
        for (const auto& [name, n] : attrNames) {
            if (n > 1)
                emit("CC-7b", Severity::Error,
                     "attribute '" + name + "' is declared " + std::to_string(n) +
                         " times",
                     path(i.name, name));
        }
        // 7c
        for (const auto& m : i.meths) {
            if (m.body)
                emit("CC-7c", Severity::Error,
                     "interface method '" + m.name + "' has a body",
                     path(i.name, m.name));
        }
        // 7d
        std::map<std::string, int> sigs;
        for (const auto& m : i.meths) sigs[signature(m)]++;
        for (const auto& [sig, n] : sigs) {
            if (n > 1)
                emit("CC-7d", Severity::Error,
                     "ambiguous method signature '" + sig + "'",
                     path(i.name, sig.substr(0, sig.find('('))));
        }
    }

    const ClassDiagram& cd_;
    const WellformednessOptions& opts_;
    const std::map<std::string, Span>* spans_;
    std::set<Name> classNames_, interfaceNames_;
    std::vector<Diagnostic> diags_;
};

}  // namespace

const std::vector<std::string>& wellformedness_clauses() {
    static const std::vector<std::string> kClauses = {
        "CC-1a", "CC-1b", "CC-1c", "CC-1d", "CC-1e", "CC-1f",
        "CC-2",
        "CC-3a", "CC-3b", "CC-3c", "CC-3d", "CC-3e",
        "CC-3f.i", "CC-3f.ii", "CC-3f.iii", "CC-3f.iv", "CC-3f.v", "CC-3f.vi",
        "CC-3f.vii",
        "CC-3g.i", "CC-3g.ii",
        "CC-4",
        "CC-5a", "CC-5b", "CC-5c",
        "CC-6",
        "CC-7a", "CC-7b", "CC-7c", "CC-7d",
    };
    return kClauses;
}

std::vector<Diagnostic> check_context_conditions(
    const ast::ClassDiagram& cd, const WellformednessOptions& opts,
    const std::map<std::string, Span>* spans) {
    return Checker(cd, opts, spans).run();
}

}  // namespace umlp
