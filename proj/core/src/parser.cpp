#include "umlp/parser.hpp"

#include <algorithm>

#include "umlp/lexer.hpp"

namespace umlp {

namespace {

using namespace cst;

struct ParseError {
    Diagnostic diag;
};

Span tokenSpan(const Token& t) {
    int len = static_cast<int>(t.text.size());
    if (t.kind == TokenKind::String) len += 2;
    if (len < 1) len = 1;
    return Span{t.line, t.column, t.line, t.column + len};
}

Span merge(const Span& a, const Span& b) {
    Span s = a;
    if (std::pair{b.endLine, b.endCol} > std::pair{s.endLine, s.endCol}) {
        s.endLine = b.endLine;
        s.endCol = b.endCol;
    }
    return s;
}

class Parser {
public:
    Parser(std::string_view text, std::set<std::string>& coverage,
           std::vector<Diagnostic>& diags)
        : lex_(text), coverage_(coverage), diags_(diags) {}

    std::optional<CDDefinition> parseDocument();

private:
    void cover(const char* point) { coverage_.insert(point); }

    [[noreturn]] void error(const std::string& expected, const char* production) {
        const Token& t = lex_.peek();
        std::string found = t.kind == TokenKind::EndOfFile
                                ? "end of input"
                                : "'" + t.text + "'";
        throw ParseError{Diagnostic{"SyntaxError", Severity::Error,
                                    "expected " + expected + " in " + production +
                                        ", found " + found,
                                    production, tokenSpan(t)}};
    }

    bool peekIs(TokenKind k, const char* text) {
        const Token& t = lex_.peek();
        return t.kind == k && t.text == text;
    }
    bool peekPunct(const char* text) { return peekIs(TokenKind::Punct, text); }
    bool peekKeyword(const char* text) { return peekIs(TokenKind::Keyword, text); }

    bool acceptPunct(const char* text) {
        if (peekPunct(text)) {
            lex_.next();
            return true;
        }
        return false;
    }
    bool acceptKeyword(const char* text) {
        if (peekKeyword(text)) {
            lex_.next();
            return true;
        }
        return false;
    }

    Token expectPunct(const char* text, const char* production) {
        if (!peekPunct(text)) error(std::string("'") + text + "'", production);
        return lex_.next();
    }
    Token expectKeyword(const char* text, const char* production) {
        if (!peekKeyword(text)) error(std::string("'") + text + "'", production);
        return lex_.next();
    }
    Token expectIdent(const char* production) {
        if (lex_.peek().kind != TokenKind::Ident) error("IDENT", production);
        return lex_.next();
    }
    Token expectNumber(const char* production) {
        if (lex_.peek().kind != TokenKind::Number) error("NUMBER", production);
        return lex_.next();
    }

    // Productions.
    std::optional<Completeness> parseCompletenessOpt();
    bool completenessAhead();
    std::optional<Stereotype> parseStereotypeOpt();
    Stereotype parseStereotype();
    Modifier parseModifier();
    QualifiedName parseQualifiedName(const char* production);
    Cardinality parseCardinality();
    Qualifier parseQualifier();
    ClassOrInterfaceType parseClassOrInterfaceType();
    Type parseType(const char* production);
    Type parseReturnType();
    TypeArguments parseTypeArguments();
    TypeParameters parseTypeParameters();
    std::optional<TypeParameters> parseTypeParametersOpt();
    CDParameter parseCDParameter();
    std::vector<CDParameter> parseParameterList(const char* production);
    std::vector<QualifiedName> parseThrowsOpt(const char* production, const char* coverPoint);
    std::optional<OpaqueBlock> parseBodyOrSemi(const char* production, const char* prefix);

    CDClass parseCDClass();
    CDInterface parseCDInterface();
    CDEnum parseCDEnum();
    CDMember parseMember(bool allowConstructor, const char* owner);
    CDAssociation parseCDAssociation();
    Invariant parseInvariant();
    CDElement parseElement();

    bool modifierAtomAhead();
    enum class ElementKind { Class, Interface, Enum, Association, Invariant };
    ElementKind classifyElement();

    void recoverInsideBraces();

    Lexer lex_;
    std::set<std::string>& coverage_;
    std::vector<Diagnostic>& diags_;
};

bool Parser::completenessAhead() {
    if (!peekPunct("(")) return false;
    auto st = lex_.save();
    lex_.next();
    bool yes = false;
    const Token& t = lex_.peek();
    if (t.is(TokenKind::Ident, "c") || t.is(TokenKind::Punct, "...")) {
        lex_.next();
        yes = peekPunct(")");
    }
    lex_.restore(st);
    return yes;
}

std::optional<Completeness> Parser::parseCompletenessOpt() {
    if (!completenessAhead()) return std::nullopt;
    lex_.next();  // "("
    Completeness c;
    if (lex_.peek().is(TokenKind::Ident, "c")) {
        lex_.next();
        c = Completeness::C;
        cover("Completeness.c");
    } else {
        expectPunct("...", "Completeness");
        c = Completeness::Ellipsis;
        cover("Completeness.ellipsis");
    }
    expectPunct(")", "Completeness");
    return c;
}

Stereotype Parser::parseStereotype() {
    Stereotype st;
    Token open = expectPunct("<<", "Stereotype");
    st.span = tokenSpan(open);
    cover("Stereotype");
    for (;;) {
        StereoValue v;
        Token name = expectIdent("StereoValue");
        v.name = name.text;
        v.span = tokenSpan(name);
        cover("StereoValue");
        if (acceptPunct("=")) {
            if (lex_.peek().kind != TokenKind::String) error("STRING", "StereoValue");
            Token s = lex_.next();
            v.value = s.text;
            v.span = merge(v.span, tokenSpan(s));
            cover("StereoValue.value");
        }
        st.values.push_back(std::move(v));
        if (!acceptPunct(",")) break;
    }
    Token close = expectPunct(">>", "Stereotype");
    st.span = merge(st.span, tokenSpan(close));
    return st;
}

std::optional<Stereotype> Parser::parseStereotypeOpt() {
    if (!peekPunct("<<")) return std::nullopt;
    return parseStereotype();
}

bool Parser::modifierAtomAhead() {
    const Token& t = lex_.peek();
    if (t.kind == TokenKind::Keyword) {
        static const char* kws[] = {"public", "private", "protected", "final",
                                    "abstract", "local", "derived", "readonly", "static"};
        for (const char* k : kws)
            if (t.text == k) return true;
        return false;
    }
    if (t.kind == TokenKind::Punct) {
        return t.text == "+" || t.text == "-" || t.text == "#" || t.text == "/" ||
               t.text == "?";
    }
    return false;
}

Modifier Parser::parseModifier() {
    Modifier m;
    m.span = Span{lex_.peek().line, lex_.peek().column, lex_.peek().line, lex_.peek().column};
    if (peekPunct("<<")) {
        m.stereotype = parseStereotype();
        m.span = m.stereotype->span;
        cover("Modifier.stereotype");
    }
    while (modifierAtomAhead()) {
        Token t = lex_.next();
        ModifierAtom atom;
        atom.span = tokenSpan(t);
        atom.symbolForm = t.kind == TokenKind::Punct;
        if (t.text == "public" || t.text == "+") {
            atom.keyword = ModifierKeyword::Public;
            cover(atom.symbolForm ? "Modifier.public.sym" : "Modifier.public.kw");
        } else if (t.text == "private" || t.text == "-") {
            atom.keyword = ModifierKeyword::Private;
            cover(atom.symbolForm ? "Modifier.private.sym" : "Modifier.private.kw");
        } else if (t.text == "protected" || t.text == "#") {
            atom.keyword = ModifierKeyword::Protected;
            cover(atom.symbolForm ? "Modifier.protected.sym" : "Modifier.protected.kw");
        } else if (t.text == "final") {
            atom.keyword = ModifierKeyword::Final;
            cover("Modifier.final");
        } else if (t.text == "abstract") {
            atom.keyword = ModifierKeyword::Abstract;
            cover("Modifier.abstract");
        } else if (t.text == "local") {
            atom.keyword = ModifierKeyword::Local;
            cover("Modifier.local");
        } else if (t.text == "derived" || t.text == "/") {
            atom.keyword = ModifierKeyword::Derived;
            cover(atom.symbolForm ? "Modifier.derived.sym" : "Modifier.derived.kw");
        } else if (t.text == "readonly" || t.text == "?") {
            atom.keyword = ModifierKeyword::Readonly;
            cover(atom.symbolForm ? "Modifier.readonly.sym" : "Modifier.readonly.kw");
        } else {
            atom.keyword = ModifierKeyword::Static;
            cover("Modifier.static");
        }
        m.span = merge(m.span, atom.span);
        m.atoms.push_back(atom);
    }
    return m;
}

QualifiedName Parser::parseQualifiedName(const char* production) {
    QualifiedName qn;
    Token first = expectIdent(production);
    qn.names.push_back(first.text);
    qn.span = tokenSpan(first);
    cover("QualifiedName");
    while (peekPunct(".")) {
        lex_.next();
        Token part = expectIdent("QualifiedName");
        qn.names.push_back(part.text);
        qn.span = merge(qn.span, tokenSpan(part));
        cover("QualifiedName.qualified");
    }
    return qn;
}

std::string QualifiedName_joined(const QualifiedName& qn);

Cardinality Parser::parseCardinality() {
    Cardinality c;
    Token open = expectPunct("[", "Cardinality");
    c.span = tokenSpan(open);
    if (acceptPunct("*")) {
        c.kind = Cardinality::Kind::Many;
        cover("Cardinality.many");
    } else {
        Token low = expectNumber("Cardinality");
        c.lowerBound = std::stol(low.text);
        if (acceptPunct("..")) {
            c.kind = Cardinality::Kind::Range;
            if (acceptPunct("*")) {
                c.noUpperLimit = true;
                cover("Cardinality.rangestar");
            } else {
                Token up = expectNumber("Cardinality");
                c.upperBound = std::stol(up.text);
                cover("Cardinality.range");
            }
        } else {
            c.kind = Cardinality::Kind::Single;
            cover("Cardinality.single");
        }
    }
    Token close = expectPunct("]", "Cardinality");
    c.span = merge(c.span, tokenSpan(close));
    return c;
}

Qualifier Parser::parseQualifier() {
    Qualifier q;
    Token open = expectPunct("[", "Qualifier");
    q.span = tokenSpan(open);
    q.type = parseClassOrInterfaceType();
    Token close = expectPunct("]", "Qualifier");
    q.span = merge(q.span, tokenSpan(close));
    cover("Qualifier");
    return q;
}

ClassOrInterfaceType Parser::parseClassOrInterfaceType() {
    ClassOrInterfaceType t;
    t.name = parseQualifiedName("ClassOrInterfaceType");
    t.span = t.name.span;
    cover("ClassOrInterfaceType");
    if (peekPunct("<")) {
        t.typeArguments = parseTypeArguments();
        t.span = merge(t.span, t.typeArguments->span);
        cover("ClassOrInterfaceType.typeargs");
    }
    return t;
}

Type Parser::parseType(const char* production) {
    Type t;
    const Token& p = lex_.peek();
    static const char* prims[] = {"boolean", "byte", "char", "short",
                                  "int", "float", "long", "double"};
    if (p.kind == TokenKind::Keyword) {
        for (const char* prim : prims) {
            if (p.text == prim) {
                Token tok = lex_.next();
                t.kind = Type::Kind::Primitive;
                t.primitive = tok.text;
                t.span = tokenSpan(tok);
                cover((std::string("PrimitiveType.") + prim).c_str());
                while (peekPunct("[")) {
                    auto st = lex_.save();
                    lex_.next();
                    if (!acceptPunct("]")) {
                        lex_.restore(st);
                        break;
                    }
                    ++t.arrayDims;
                    cover("PrimitiveType.array");
                }
                return t;
            }
        }
    }
    if (p.kind != TokenKind::Ident) error("a type", production);
    t.kind = Type::Kind::Reference;
    t.reference = parseClassOrInterfaceType();
    t.span = t.reference->span;
    cover("ReferenceType");
    while (peekPunct("[")) {
        auto st = lex_.save();
        lex_.next();
        if (!acceptPunct("]")) {
            lex_.restore(st);
            break;
        }
        ++t.arrayDims;
        cover("ReferenceType.array");
    }
    return t;
}

Type Parser::parseReturnType() {
    if (peekKeyword("void")) {
        Token tok = lex_.next();
        Type t;
        t.kind = Type::Kind::Void;
        t.span = tokenSpan(tok);
        cover("VoidType");
        return t;
    }
    return parseType("ReturnType");
}

TypeArguments Parser::parseTypeArguments() {
    TypeArguments ta;
    Token open = expectPunct("<", "TypeArguments");
    ta.span = tokenSpan(open);
    cover("TypeArguments");
    for (;;) {
        TypeArgument arg;
        if (peekPunct("?")) {
            Token q = lex_.next();
            arg.wildcard = true;
            arg.span = tokenSpan(q);
            cover("TypeArgument.wildcard");
            if (acceptKeyword("extends")) {
                arg.upperBound = parseType("TypeArgument");
                arg.span = merge(arg.span, arg.upperBound->span);
                cover("TypeArgument.wildcard.extends");
            } else if (acceptKeyword("super")) {
                arg.lowerBound = parseType("TypeArgument");
                arg.span = merge(arg.span, arg.lowerBound->span);
                cover("TypeArgument.wildcard.super");
            }
        } else {
            arg.type = parseType("TypeArgument");
            arg.span = arg.type->span;
            cover("TypeArgument.type");
        }
        ta.typeArguments.push_back(std::move(arg));
        if (!acceptPunct(",")) break;
    }
    Token close = expectPunct(">", "TypeArguments");
    ta.span = merge(ta.span, tokenSpan(close));
    return ta;
}

TypeParameters Parser::parseTypeParameters() {
    TypeParameters tp;
    Token open = expectPunct("<", "TypeParameters");
    tp.span = tokenSpan(open);
    cover("TypeParameters");
    for (;;) {
        TypeParameter p;
        Token name = expectIdent("TypeParameter");
        p.name = name.text;
        p.span = tokenSpan(name);
        cover("TypeParameter");
        if (acceptKeyword("extends")) {
            cover("TypeParameter.extends");
            for (;;) {
                p.supTypes.push_back(parseClassOrInterfaceType());
                p.span = merge(p.span, p.supTypes.back().span);
                if (!acceptPunct("&")) break;
            }
        }
        tp.typeParameters.push_back(std::move(p));
        if (!acceptPunct(",")) break;
    }
    Token close = expectPunct(">", "TypeParameters");
    tp.span = merge(tp.span, tokenSpan(close));
    return tp;
}

std::optional<TypeParameters> Parser::parseTypeParametersOpt() {
    if (!peekPunct("<")) return std::nullopt;
    return parseTypeParameters();
}

CDParameter Parser::parseCDParameter() {
    CDParameter p;
    p.type = parseType("CDParameter");
    Token name = expectIdent("CDParameter");
    p.name = name.text;
    p.span = merge(p.type.span, tokenSpan(name));
    cover("CDParameter");
    return p;
}

std::vector<CDParameter> Parser::parseParameterList(const char* production) {
    std::vector<CDParameter> params;
    expectPunct("(", production);
    if (!peekPunct(")")) {
        for (;;) {
            params.push_back(parseCDParameter());
            if (!acceptPunct(",")) break;
        }
    }
    expectPunct(")", production);
    return params;
}

std::vector<QualifiedName> Parser::parseThrowsOpt(const char* production,
                                                  const char* coverPoint) {
    std::vector<QualifiedName> names;
    if (acceptKeyword("throws")) {
        cover(coverPoint);
        for (;;) {
            names.push_back(parseQualifiedName(production));
            if (!acceptPunct(",")) break;
        }
    }
    return names;
}

std::optional<OpaqueBlock> Parser::parseBodyOrSemi(const char* production,
                                                   const char* prefix) {
    if (peekPunct("{")) {
        Token raw = lex_.captureBraceBlock();
        cover((std::string(prefix) + ".body").c_str());
        OpaqueBlock b;
        b.text = raw.text;
        b.style = OpaqueBlock::Style::Brace;
        b.span = tokenSpan(raw);
        return b;
    }
    if (acceptPunct(";")) {
        cover((std::string(prefix) + ".semi").c_str());
        return std::nullopt;
    }
    error("a body block or ';'", production);
}

CDMember Parser::parseMember(bool allowConstructor, const char* owner) {
    Modifier mod = parseModifier();
    std::optional<TypeParameters> typeParams = parseTypeParametersOpt();

    if (allowConstructor) {
        // Constructor: IDENT directly followed by "(".
        auto st = lex_.save();
        if (lex_.peek().kind == TokenKind::Ident) {
            Token name = lex_.next();
            if (peekPunct("(")) {
                CDConstructor k;
                k.modifier = std::move(mod);
                k.typeParameters = std::move(typeParams);
                k.name = name.text;
                k.span = tokenSpan(name);
                k.parameters = parseParameterList("CDConstructor");
                k.throws = parseThrowsOpt("CDConstructor", "CDConstructor.throws");
                k.body = parseBodyOrSemi("CDConstructor", "CDConstructor");
                cover("CDConstructor");
                if (!k.parameters.empty()) cover("CDConstructor.params");
                return k;
            }
            lex_.restore(st);
        }
    }

    Type type = peekKeyword("void") ? parseReturnType() : parseType(owner);
    Token name = expectIdent(owner);

    if (peekPunct("(")) {
        CDMethod m;
        m.modifier = std::move(mod);
        m.typeParameters = std::move(typeParams);
        m.returnType = std::move(type);
        m.name = name.text;
        m.span = merge(m.returnType.span, tokenSpan(name));
        m.parameters = parseParameterList("CDMethod");
        m.throws = parseThrowsOpt("CDMethod", "CDMethod.throws");
        m.body = parseBodyOrSemi("CDMethod", "CDMethod");
        cover("CDMethod");
        if (m.typeParameters) cover("CDMethod.typeparameters");
        if (!m.parameters.empty()) cover("CDMethod.params");
        return m;
    }

    if (typeParams) error("'(' after method name", owner);
    if (type.kind == Type::Kind::Void) error("'(' after method name", owner);
    CDAttribute a;
    a.modifier = std::move(mod);
    a.type = std::move(type);
    a.name = name.text;
    a.span = merge(a.type.span, tokenSpan(name));
    if (peekPunct("=")) {
        lex_.next();
        Token raw = lex_.captureValue();
        OpaqueBlock v;
        v.text = raw.text;
        v.style = raw.text.starts_with("(") ? OpaqueBlock::Style::Paren
                                            : OpaqueBlock::Style::Literal;
        v.span = tokenSpan(raw);
        a.value = std::move(v);
        cover("CDAttribute.value");
    }
    expectPunct(";", "CDAttribute");
    cover("CDAttribute");
    return a;
}

void Parser::recoverInsideBraces() {
    // Skip to the next ";" (consumed) or "}" (left in place).
    int depth = 0;
    for (;;) {
        const Token& t = lex_.peek();
        if (t.kind == TokenKind::EndOfFile) return;
        if (t.kind == TokenKind::Punct) {
            if (t.text == ";" && depth == 0) {
                lex_.next();
                return;
            }
            if (t.text == "{") ++depth;
            if (t.text == "}") {
                if (depth == 0) return;
                --depth;
            }
        }
        lex_.next();
    }
}

CDClass Parser::parseCDClass() {
    CDClass cls;
    cls.completeness = parseCompletenessOpt();
    if (cls.completeness) cover("CDClass.completeness");
    cls.modifier = parseModifier();
    Token kw = expectKeyword("class", "CDClass");
    cls.span = tokenSpan(kw);
    Token name = expectIdent("CDClass");
    cls.name = name.text;
    cls.typeParameters = parseTypeParametersOpt();
    if (cls.typeParameters) cover("CDClass.typeparameters");
    if (acceptKeyword("extends")) {
        cover("CDClass.extends");
        for (;;) {
            cls.superclasses.push_back(parseClassOrInterfaceType());
            if (!acceptPunct(",")) break;
        }
    }
    if (acceptKeyword("implements")) {
        cover("CDClass.implements");
        for (;;) {
            cls.interfaces.push_back(parseClassOrInterfaceType());
            if (!acceptPunct(",")) break;
        }
    }
    if (peekPunct("{")) {
        cls.hasBody = true;
        cover("CDClass.body");
        Token open = lex_.next();
        cls.span = merge(cls.span, tokenSpan(open));
        while (!peekPunct("}") && lex_.peek().kind != TokenKind::EndOfFile) {
            try {
                CDMember m = parseMember(true, "CDClass");
                if (std::holds_alternative<CDConstructor>(m)) cover("CDClass.member.constructor");
                if (std::holds_alternative<CDMethod>(m)) cover("CDClass.member.method");
                if (std::holds_alternative<CDAttribute>(m)) cover("CDClass.member.attribute");
                cls.members.push_back(std::move(m));
            } catch (const ParseError& e) {
                diags_.push_back(e.diag);
                recoverInsideBraces();
            }
        }
        Token close = expectPunct("}", "CDClass");
        cls.span = merge(cls.span, tokenSpan(close));
    } else {
        Token semi = expectPunct(";", "CDClass");
        cls.span = merge(cls.span, tokenSpan(semi));
        cover("CDClass.semi");
    }
    cover("CDClass");
    return cls;
}

CDInterface Parser::parseCDInterface() {
    CDInterface itf;
    itf.completeness = parseCompletenessOpt();
    if (itf.completeness) cover("CDInterface.completeness");
    itf.modifier = parseModifier();
    Token kw = expectKeyword("interface", "CDInterface");
    itf.span = tokenSpan(kw);
    Token name = expectIdent("CDInterface");
    itf.name = name.text;
    itf.typeParameters = parseTypeParametersOpt();
    if (itf.typeParameters) cover("CDInterface.typeparameters");
    if (acceptKeyword("extends")) {
        cover("CDInterface.extends");
        for (;;) {
            itf.interfaces.push_back(parseClassOrInterfaceType());
            if (!acceptPunct(",")) break;
        }
    }
    if (peekPunct("{")) {
        itf.hasBody = true;
        cover("CDInterface.body");
        lex_.next();
        while (!peekPunct("}") && lex_.peek().kind != TokenKind::EndOfFile) {
            try {
                CDMember m = parseMember(false, "CDInterface");
                if (std::holds_alternative<CDMethod>(m)) cover("CDInterface.member.method");
                if (std::holds_alternative<CDAttribute>(m)) cover("CDInterface.member.attribute");
                itf.members.push_back(std::move(m));
            } catch (const ParseError& e) {
                diags_.push_back(e.diag);
                recoverInsideBraces();
            }
        }
        Token close = expectPunct("}", "CDInterface");
        itf.span = merge(itf.span, tokenSpan(close));
    } else {
        Token semi = expectPunct(";", "CDInterface");
        itf.span = merge(itf.span, tokenSpan(semi));
        cover("CDInterface.semi");
    }
    cover("CDInterface");
    return itf;
}

CDEnum Parser::parseCDEnum() {
    CDEnum en;
    en.completeness = parseCompletenessOpt();
    if (en.completeness) cover("CDEnum.completeness");
    en.modifier = parseModifier();
    Token kw = expectKeyword("enum", "CDEnum");
    en.span = tokenSpan(kw);
    Token name = expectIdent("CDEnum");
    en.name = name.text;
    if (acceptKeyword("implements")) {
        cover("CDEnum.implements");
        for (;;) {
            en.interfaces.push_back(parseClassOrInterfaceType());
            if (!acceptPunct(",")) break;
        }
    }
    if (peekPunct("{")) {
        en.hasBody = true;
        cover("CDEnum.body");
        lex_.next();
        for (;;) {
            CDEnumConstant c;
            Token cname = expectIdent("CDEnumConstant");
            c.name = cname.text;
            c.span = tokenSpan(cname);
            cover("CDEnumConstant");
            if (peekPunct("(")) {
                lex_.next();
                cover("CDEnumConstant.params");
                for (;;) {
                    Token raw = lex_.captureValue();
                    CDEnumParameter p;
                    p.value = OpaqueBlock{raw.text,
                                          raw.text.starts_with("(")
                                              ? OpaqueBlock::Style::Paren
                                              : OpaqueBlock::Style::Literal,
                                          tokenSpan(raw)};
                    p.span = p.value.span;
                    cover("CDEnumParameter");
                    c.parameters.push_back(std::move(p));
                    if (!acceptPunct(",")) break;
                }
                expectPunct(")", "CDEnumConstant");
            }
            en.constants.push_back(std::move(c));
            if (!acceptPunct(",")) break;
        }
        expectPunct(";", "CDEnum");
        while (!peekPunct("}") && lex_.peek().kind != TokenKind::EndOfFile) {
            try {
                en.members.push_back(parseMember(true, "CDEnum"));
                cover("CDEnum.members");
            } catch (const ParseError& e) {
                diags_.push_back(e.diag);
                recoverInsideBraces();
            }
        }
        Token close = expectPunct("}", "CDEnum");
        en.span = merge(en.span, tokenSpan(close));
    } else {
        Token semi = expectPunct(";", "CDEnum");
        en.span = merge(en.span, tokenSpan(semi));
        cover("CDEnum.semi");
    }
    cover("CDEnum");
    return en;
}

CDAssociation Parser::parseCDAssociation() {
    CDAssociation a;
    a.stereotype = parseStereotypeOpt();
    if (a.stereotype) cover("CDAssociation.stereotype");
    const Token& kindTok = lex_.peek();
    if (acceptKeyword("association")) {
        a.type = CDAssociation::Kind::Association;
        cover("CDAssociation.kind.association");
    } else if (acceptKeyword("aggregation")) {
        a.type = CDAssociation::Kind::Aggregation;
        cover("CDAssociation.kind.aggregation");
    } else if (acceptKeyword("composition")) {
        a.type = CDAssociation::Kind::Composition;
        cover("CDAssociation.kind.composition");
    } else {
        error("'association', 'aggregation' or 'composition'", "CDAssociation");
    }
    a.span = Span{kindTok.line, kindTok.column, kindTok.line, kindTok.column};
    if (acceptPunct("/")) {
        a.derived = true;
        cover("CDAssociation.derived");
    }

    // Optional association name: an IDENT is the name only when the token
    // after it still leaves room for the left reference.
    if (lex_.peek().kind == TokenKind::Ident) {
        auto st = lex_.save();
        Token first = lex_.next();
        bool isName = false;
        const Token& t2 = lex_.peek();
        if (t2.kind == TokenKind::Ident) {
            isName = true;
        } else if (t2.is(TokenKind::Punct, "<<")) {
            isName = true;
        } else if (t2.is(TokenKind::Punct, "[")) {
            // Cardinality contents ("*" or NUMBER) mean the IDENT was a name;
            // a type name means it was the reference with a qualifier.
            auto st2 = lex_.save();
            lex_.next();
            const Token& t3 = lex_.peek();
            isName = t3.kind == TokenKind::Number || t3.is(TokenKind::Punct, "*");
            lex_.restore(st2);
        }
        if (isName) {
            a.name = first.text;
            cover("CDAssociation.named");
        } else {
            lex_.restore(st);
        }
    }

    a.leftStereotype = parseStereotypeOpt();
    if (a.leftStereotype) cover("CDAssociation.leftstereotype");
    if (peekPunct("[")) {
        // Disambiguate left cardinality (before the reference) from a left
        // qualifier (only legal after the reference, handled below).
        a.leftCardinality = parseCardinality();
        cover("CDAssociation.leftcardinality");
    }
    a.leftReference = parseQualifiedName("CDAssociation");
    if (peekPunct("[")) {
        a.leftQualifier = parseQualifier();
        cover("CDAssociation.leftqualifier");
    }
    if (peekPunct("(")) {
        lex_.next();
        Token role = expectIdent("CDAssociation");
        a.leftRole = role.text;
        expectPunct(")", "CDAssociation");
        cover("CDAssociation.leftrole");
    }

    if (acceptPunct("->")) {
        a.arrow = CDAssociation::Arrow::LeftToRight;
        cover("CDAssociation.arrow.lefttoright");
    } else if (acceptPunct("<-")) {
        a.arrow = CDAssociation::Arrow::RightToLeft;
        cover("CDAssociation.arrow.righttoleft");
    } else if (acceptPunct("<->")) {
        a.arrow = CDAssociation::Arrow::Bidirectional;
        cover("CDAssociation.arrow.bidirectional");
    } else if (acceptPunct("--")) {
        a.arrow = CDAssociation::Arrow::Simple;
        cover("CDAssociation.arrow.simple");
    } else {
        error("'->', '<-', '<->' or '--'", "CDAssociation");
    }

    if (peekPunct("(")) {
        lex_.next();
        Token role = expectIdent("CDAssociation");
        a.rightRole = role.text;
        expectPunct(")", "CDAssociation");
        cover("CDAssociation.rightrole");
    }
    if (peekPunct("[")) {
        // Before the right reference a bracket can only be a qualifier.
        auto st = lex_.save();
        lex_.next();
        const Token& inner = lex_.peek();
        bool isQualifier = inner.kind == TokenKind::Ident || inner.kind == TokenKind::Keyword;
        lex_.restore(st);
        if (isQualifier) {
            a.rightQualifier = parseQualifier();
            cover("CDAssociation.rightqualifier");
        }
    }
    a.rightReference = parseQualifiedName("CDAssociation");
    if (peekPunct("[")) {
        a.rightCardinality = parseCardinality();
        cover("CDAssociation.rightcardinality");
    }
    a.rightStereotype = parseStereotypeOpt();
    if (a.rightStereotype) cover("CDAssociation.rightstereotype");
    Token semi = expectPunct(";", "CDAssociation");
    a.span = merge(a.span, tokenSpan(semi));
    cover("CDAssociation");
    return a;
}

Invariant Parser::parseInvariant() {
    Invariant inv;
    if (lex_.peek().kind == TokenKind::Ident) {
        Token kind = lex_.next();
        inv.kind = kind.text;
        inv.span = tokenSpan(kind);
        expectPunct(":", "Invariant");
        cover("Invariant.kind");
    }
    Token open = expectPunct("[", "Invariant");
    if (!inv.kind) inv.span = tokenSpan(open);
    Token raw = lex_.captureBracketTail();
    inv.expression =
        OpaqueBlock{raw.text, OpaqueBlock::Style::Bracket, tokenSpan(raw)};
    Token semi = expectPunct(";", "Invariant");
    inv.span = merge(inv.span, tokenSpan(semi));
    cover("Invariant");
    return inv;
}

Parser::ElementKind Parser::classifyElement() {
    const Token& t = lex_.peek();
    if (t.is(TokenKind::Punct, "[")) return ElementKind::Invariant;
    if (t.kind == TokenKind::Ident) {
        auto st = lex_.save();
        lex_.next();
        bool colon = peekPunct(":");
        lex_.restore(st);
        if (colon) return ElementKind::Invariant;
        error("a diagram element", "CDDefinition");
    }
    auto st = lex_.save();
    parseCompletenessOpt();
    if (peekPunct("<<")) {
        try {
            parseStereotype();
        } catch (const ParseError&) {
            lex_.restore(st);
            error("a diagram element", "CDDefinition");
        }
    }
    while (modifierAtomAhead()) lex_.next();
    ElementKind kind;
    if (peekKeyword("class")) kind = ElementKind::Class;
    else if (peekKeyword("interface")) kind = ElementKind::Interface;
    else if (peekKeyword("enum")) kind = ElementKind::Enum;
    else if (peekKeyword("association") || peekKeyword("aggregation") ||
             peekKeyword("composition")) kind = ElementKind::Association;
    else {
        lex_.restore(st);
        error("'class', 'interface', 'enum' or an association keyword",
              "CDDefinition");
    }
    lex_.restore(st);
    return kind;
}

CDElement Parser::parseElement() {
    switch (classifyElement()) {
        case ElementKind::Class:
            cover("CDDefinition.element.class");
            return parseCDClass();
        case ElementKind::Interface:
            cover("CDDefinition.element.interface");
            return parseCDInterface();
        case ElementKind::Enum:
            cover("CDDefinition.element.enum");
            return parseCDEnum();
        case ElementKind::Association:
            cover("CDDefinition.element.association");
            return parseCDAssociation();
        case ElementKind::Invariant:
            cover("CDDefinition.element.invariant");
            return parseInvariant();
    }
    error("a diagram element", "CDDefinition");
}

std::optional<CDDefinition> Parser::parseDocument() {
    try {
        CDDefinition cd;
        cd.completeness = parseCompletenessOpt();
        if (cd.completeness) cover("CDDefinition.completeness");
        cd.stereotype = parseStereotypeOpt();
        if (cd.stereotype) cover("CDDefinition.stereotype");
        Token kw = expectKeyword("classdiagram", "CDDefinition");
        cd.span = tokenSpan(kw);
        Token name = expectIdent("CDDefinition");
        cd.name = name.text;
        expectPunct("{", "CDDefinition");
        while (!peekPunct("}") && lex_.peek().kind != TokenKind::EndOfFile) {
            try {
                cd.elements.push_back(parseElement());
            } catch (const ParseError& e) {
                diags_.push_back(e.diag);
                recoverInsideBraces();
            } catch (const LexError& e) {
                diags_.push_back(e.diag);
                recoverInsideBraces();
            }
        }
        Token close = expectPunct("}", "CDDefinition");
        cd.span = merge(cd.span, tokenSpan(close));
        if (lex_.peek().kind != TokenKind::EndOfFile)
            error("end of input", "CDDefinition");
        cover("CDDefinition");
        return cd;
    } catch (const ParseError& e) {
        diags_.push_back(e.diag);
        return std::nullopt;
    } catch (const LexError& e) {
        diags_.push_back(e.diag);
        return std::nullopt;
    }
}

}  // namespace

ParseOutcome parse_cd(std::string_view text) {
    ParseOutcome out;
    Parser parser(text, out.coverage, out.diags);
    out.cd = parser.parseDocument();
    if (has_errors(out.diags)) out.cd.reset();
    return out;
}

const std::vector<std::string>& all_coverage_points() {
    static const std::vector<std::string> points = {
        "CDDefinition", "CDDefinition.completeness", "CDDefinition.stereotype",
        "CDDefinition.element.class", "CDDefinition.element.interface",
        "CDDefinition.element.enum", "CDDefinition.element.association",
        "CDDefinition.element.invariant",
        "CDClass", "CDClass.completeness", "CDClass.typeparameters",
        "CDClass.extends", "CDClass.implements", "CDClass.body", "CDClass.semi",
        "CDClass.member.constructor", "CDClass.member.method", "CDClass.member.attribute",
        "CDInterface", "CDInterface.completeness", "CDInterface.typeparameters",
        "CDInterface.extends", "CDInterface.body", "CDInterface.semi",
        "CDInterface.member.method", "CDInterface.member.attribute",
        "CDEnum", "CDEnum.completeness", "CDEnum.implements", "CDEnum.body",
        "CDEnum.semi", "CDEnum.members",
        "CDEnumConstant", "CDEnumConstant.params", "CDEnumParameter",
        "CDConstructor", "CDConstructor.params", "CDConstructor.throws",
        "CDConstructor.body", "CDConstructor.semi",
        "CDMethod", "CDMethod.typeparameters", "CDMethod.params", "CDMethod.throws",
        "CDMethod.body", "CDMethod.semi",
        "CDParameter",
        "CDAttribute", "CDAttribute.value",
        "CDAssociation", "CDAssociation.stereotype",
        "CDAssociation.kind.association", "CDAssociation.kind.aggregation",
        "CDAssociation.kind.composition", "CDAssociation.derived",
        "CDAssociation.named",
        "CDAssociation.leftstereotype", "CDAssociation.leftcardinality",
        "CDAssociation.leftqualifier", "CDAssociation.leftrole",
        "CDAssociation.arrow.lefttoright", "CDAssociation.arrow.righttoleft",
        "CDAssociation.arrow.bidirectional", "CDAssociation.arrow.simple",
        "CDAssociation.rightrole", "CDAssociation.rightqualifier",
        "CDAssociation.rightcardinality", "CDAssociation.rightstereotype",
        "Stereotype", "StereoValue", "StereoValue.value",
        "QualifiedName", "QualifiedName.qualified",
        "Cardinality.many", "Cardinality.single", "Cardinality.range",
        "Cardinality.rangestar",
        "Qualifier",
        "Modifier.stereotype",
        "Modifier.public.kw", "Modifier.public.sym",
        "Modifier.private.kw", "Modifier.private.sym",
        "Modifier.protected.kw", "Modifier.protected.sym",
        "Modifier.final", "Modifier.abstract", "Modifier.local",
        "Modifier.derived.kw", "Modifier.derived.sym",
        "Modifier.readonly.kw", "Modifier.readonly.sym", "Modifier.static",
        "VoidType",
        "PrimitiveType.boolean", "PrimitiveType.byte", "PrimitiveType.char",
        "PrimitiveType.short", "PrimitiveType.int", "PrimitiveType.float",
        "PrimitiveType.long", "PrimitiveType.double", "PrimitiveType.array",
        "ReferenceType", "ReferenceType.array",
        "ClassOrInterfaceType", "ClassOrInterfaceType.typeargs",
        "TypeParameters", "TypeParameter", "TypeParameter.extends",
        "TypeArguments", "TypeArgument.type", "TypeArgument.wildcard",
        "TypeArgument.wildcard.extends", "TypeArgument.wildcard.super",
        "Invariant", "Invariant.kind",
        "Completeness.c", "Completeness.ellipsis",
    };
    return points;
}

namespace cst {
std::string QualifiedName::joined() const {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += '.';
        out += names[i];
    }
    return out;
}
}  // namespace cst

}  // namespace umlp
