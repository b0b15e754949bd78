#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umlp/lexer.hpp"

using namespace umlp;

namespace {

std::vector<Token> toks(std::string_view text) {
    auto r = tokenize(text);
    REQUIRE(r.ok());
    return *r;
}

}  // namespace

TEST_CASE("keywords and identifiers are distinguished") {
    auto ts = toks("classdiagram Shop class association x classx");
    REQUIRE(ts.size() == 6);
    CHECK(ts[0].is(TokenKind::Keyword, "classdiagram"));
    CHECK(ts[1].is(TokenKind::Ident, "Shop"));
    CHECK(ts[2].is(TokenKind::Keyword, "class"));
    CHECK(ts[3].is(TokenKind::Keyword, "association"));
    CHECK(ts[4].is(TokenKind::Ident, "x"));
    CHECK(ts[5].is(TokenKind::Ident, "classx"));
}

TEST_CASE("positions are 1-based line/column") {
    auto ts = toks("class A\n  { }");
    CHECK(ts[0].line == 1);
    CHECK(ts[0].column == 1);
    CHECK(ts[1].line == 1);
    CHECK(ts[1].column == 7);
    CHECK(ts[2].line == 2);
    CHECK(ts[2].column == 3);
}

TEST_CASE("comments and whitespace are layout") {
    auto ts = toks("class // rest of line\n /* multi \n line */ A;");
    CHECK(ts[0].is(TokenKind::Keyword, "class"));
    CHECK(ts[1].is(TokenKind::Ident, "A"));
    CHECK(ts[2].is(TokenKind::Punct, ";"));
}

TEST_CASE("string literals keep inner text") {
    auto ts = toks("\"hello world\"");
    CHECK(ts[0].is(TokenKind::String, "hello world"));
}

TEST_CASE("numbers lex as single tokens") {
    auto ts = toks("0 42 1234");
    CHECK(ts[0].is(TokenKind::Number, "0"));
    CHECK(ts[1].is(TokenKind::Number, "42"));
    CHECK(ts[2].is(TokenKind::Number, "1234"));
}

TEST_CASE("multi-char punctuation") {
    auto ts = toks("<< >> -> <- <-> -- ..");
    CHECK(ts[0].is(TokenKind::Punct, "<<"));
    CHECK(ts[1].is(TokenKind::Punct, ">>"));
    CHECK(ts[2].is(TokenKind::Punct, "->"));
    CHECK(ts[3].is(TokenKind::Punct, "<-"));
    CHECK(ts[4].is(TokenKind::Punct, "<->"));
    CHECK(ts[5].is(TokenKind::Punct, "--"));
    CHECK(ts[6].is(TokenKind::Punct, ".."));
}

TEST_CASE("keywords inside stereotype brackets lex as identifiers") {
    auto ts = toks("<< interface >> class");
    CHECK(ts[0].is(TokenKind::Punct, "<<"));
    CHECK(ts[1].is(TokenKind::Ident, "interface"));
    CHECK(ts[2].is(TokenKind::Punct, ">>"));
    CHECK(ts[3].is(TokenKind::Keyword, "class"));
}

TEST_CASE("unterminated string is a lex error") {
    auto r = tokenize("class \"oops");
    CHECK(!r.ok());
    REQUIRE(!r.diags.empty());
    CHECK(r.diags[0].code == "LexError");
}

TEST_CASE("stray character is a lex error with position") {
    auto r = tokenize("class A\n  @");
    CHECK(!r.ok());
    REQUIRE(!r.diags.empty());
    REQUIRE(r.diags[0].span.has_value());
    CHECK(r.diags[0].span->beginLine == 2);
    CHECK(r.diags[0].span->beginCol == 3);
}

TEST_CASE("brace block capture is balanced and raw") {
    Lexer lx("  { if (x) { y(); } } rest");
    Token t = lx.captureBraceBlock();
    CHECK(t.kind == TokenKind::OpaqueBlock);
    CHECK(t.text == "{ if (x) { y(); } }");
    CHECK(lx.next().is(TokenKind::Ident, "rest"));
}

TEST_CASE("save/restore rewinds the scanner") {
    Lexer lx("class A;");
    CHECK(lx.next().is(TokenKind::Keyword, "class"));
    auto st = lx.save();
    CHECK(lx.next().is(TokenKind::Ident, "A"));
    lx.restore(st);
    CHECK(lx.next().is(TokenKind::Ident, "A"));
    CHECK(lx.next().is(TokenKind::Punct, ";"));
}
