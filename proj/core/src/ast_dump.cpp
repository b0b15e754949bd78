#include "umlp/ast_dump.hpp"

#include <sstream>

namespace umlp {

namespace {

using namespace ast;

std::string type_str(const TypeRef& t) {
    switch (t.kind) {
        case TypeRef::Kind::Void: return "void";
        case TypeRef::Kind::Basic: return "basic:" + t.name;
        case TypeRef::Kind::Class: return "class:" + t.name;
        case TypeRef::Kind::Interface: return "interface:" + t.name;
        case TypeRef::Kind::Unresolved: return "unresolved:" + t.name;
    }
    return "?";
}

std::string mods_str(const std::set<Modifier>& mods) {
    std::string out = "{";
    bool first = true;
    for (Modifier m : mods) {  // set order is declaration order of the enum
        if (!first) out += ",";
        out += modifier_name(m);
        first = false;
    }
    return out + "}";
}

std::string names_str(const std::set<Name>& names) {
    std::string out = "{";
    bool first = true;
    for (const auto& n : names) {
        if (!first) out += ",";
        out += n;
        first = false;
    }
    return out + "}";
}

class Dumper {
public:
    std::string run(const ClassDiagram& cd) {
        line(0, "classdiagram " + cd.diagramName);
        for (const auto& c : cd.classes) dumpClass(c);
        for (const auto& i : cd.interfaces) dumpInterface(i);
        for (const auto& a : cd.assocs) dumpAssoc(a);
        for (const auto& inv : cd.invs) line(1, "invariant [" + inv.text + "]");
        return os_.str();
    }

private:
    void line(int indent, const std::string& text) {
        for (int i = 0; i < indent; ++i) os_ << "  ";
        os_ << text << "\n";
    }

    void dumpParams(int indent, const std::vector<FormalParam>& ps) {
        for (const auto& p : ps)
            line(indent, "param " + p.name + " : " + type_str(p.type));
    }

    void dumpClass(const ClassDef& c) {
        line(1, "class " + c.name + " " + mods_str(c.modifiers) + " extends " +
                    names_str(c.superClassNames) + " implements " +
                    names_str(c.interfaceNames));
        for (const auto& k : c.constructors) {
            line(2, "constructor " + k.name + " " + mods_str(k.modifiers) +
                        " throws " + names_str(k.exceptionNames) +
                        (k.body ? " body" : ""));
            dumpParams(3, k.formalParams);
        }
        for (const auto& m : c.meths) dumpMethod(m);
        for (const auto& at : c.attrs)
            line(2, "attr " + at.name + " : " + type_str(at.type) + " " +
                        mods_str(at.modifiers));
    }

    void dumpMethod(const MethodDef& m) {
        line(2, "method " + m.name + " : " + type_str(m.returnType) + " " +
                    mods_str(m.modifiers) + " throws " +
                    names_str(m.exceptionNames) + (m.body ? " body" : ""));
        dumpParams(3, m.formalParams);
    }

    void dumpInterface(const InterfaceDef& i) {
        line(1, "interface " + i.name + " extends " +
                    names_str(i.superInterfaceNames));
        for (const auto& m : i.meths) dumpMethod(m);
        for (const auto& at : i.attrs)
            line(2, "attr " + at.name + " : " + type_str(at.type) + " " +
                        mods_str(at.modifiers));
    }

    static std::string card_str(const std::optional<Card>& c) {
        if (!c) return "-";
        switch (*c) {
            case Card::ZeroOne: return "0..1";
            case Card::One: return "1";
            case Card::Many: return "*";
        }
        return "?";
    }

    static std::string end_str(const AssocEnd& e) {
        std::string out = e.className + " " + mods_str(e.modifiers) + " role=" +
                          (e.role ? *e.role : "-") + " card=" + card_str(e.card);
        if (e.qualifier) {
            out += e.qualifier->kind == ast::Qualifier::Kind::ByType
                       ? " qual=type:" + e.qualifier->type.name
                       : " qual=attr:" + e.qualifier->attrName;
        }
        return out;
    }

    void dumpAssoc(const AssocDef& a) {
        const char* dir = "-";
        switch (a.direction) {
            case Direction::Left: dir = "<-"; break;
            case Direction::Right: dir = "->"; break;
            case Direction::Both: dir = "<->"; break;
            case Direction::Plain: dir = "--"; break;
        }
        line(1, "assoc " + (a.assocName ? *a.assocName : std::string("-")) + " " +
                    mods_str(a.modifiers));
        line(2, "left " + end_str(a.leftPart));
        line(2, std::string("dir ") + dir);
        line(2, "right " + end_str(a.rightPart));
    }

    std::ostringstream os_;
};

}  // namespace

std::string ast_dump(const ast::ClassDiagram& cd) {
    return Dumper().run(cd);
}

}  // namespace umlp
