#ifndef UMLP_TOKEN_HPP
#define UMLP_TOKEN_HPP

#include <string>

#include "umlp/diag.hpp"

namespace umlp {

enum class TokenKind {
    Keyword,
    Ident,
    Number,
    String,      // double-quoted literal, text excludes the quotes
    Punct,
    OpaqueBlock, // raw balanced text captured for external grammar rules
    EndOfFile,
};

struct Token {
    TokenKind kind = TokenKind::EndOfFile;
    std::string text;
    int line = 1;
    int column = 1;

    bool is(TokenKind k) const { return kind == k; }
    bool is(TokenKind k, const std::string& t) const { return kind == k && text == t; }
    bool isWord() const { return kind == TokenKind::Keyword || kind == TokenKind::Ident; }
};

}  // namespace umlp

#endif
