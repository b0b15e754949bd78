#include "umlp/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace umlp {

const char* severity_name(Severity s) {
    switch (s) {
        case Severity::Error: return "error";
        case Severity::Warning: return "warning";
        case Severity::Note: return "note";
    }
    return "error";
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags)
        if (d.severity == Severity::Error) return true;
    return false;
}

void sort_diagnostics(std::vector<Diagnostic>& diags) {
    std::sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
        if (a.code != b.code) return a.code < b.code;
        if (a.subject != b.subject) return a.subject < b.subject;
        return a.span < b.span;
    });
}

namespace {

const std::unordered_set<std::string_view>& keyword_set() {
    static const std::unordered_set<std::string_view> kw = {
        "classdiagram", "class", "interface", "enum", "extends", "implements",
        "association", "aggregation", "composition", "throws", "super",
        "void", "boolean", "byte", "char", "short", "int", "float", "long", "double",
        "public", "private", "protected", "final", "abstract", "local",
        "derived", "readonly", "static",
    };
    return kw;
}

bool identStart(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$';
}
bool identCont(char c) { return identStart(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

// Longest match first.
constexpr std::array<std::string_view, 8> kMultiPunct = {
    "<->", "...", "<<", ">>", "<-", "->", "--", "..",
};
constexpr std::string_view kSinglePunct = "{}()[]<>.,;:=+-#/?*&";

}  // namespace

bool is_keyword(std::string_view word) { return keyword_set().count(word) > 0; }

Lexer::Lexer(std::string_view text) : text_(text) {}

void Lexer::advance() {
    if (pos_ >= text_.size()) return;
    if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
    } else {
        ++col_;
    }
    ++pos_;
}

void Lexer::fail(const std::string& message) const {
    throw LexError{Diagnostic{"LexError", Severity::Error, message, {},
                              Span{line_, col_, line_, col_ + 1}}};
}

void Lexer::skipLayout() {
    for (;;) {
        char c = cur();
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance();
        } else if (c == '/' && at(1) == '/') {
            while (cur() != '\0' && cur() != '\n') advance();
        } else if (c == '/' && at(1) == '*') {
            advance();
            advance();
            while (!(cur() == '*' && at(1) == '/')) {
                if (cur() == '\0') fail("unterminated block comment");
                advance();
            }
            advance();
            advance();
        } else {
            return;
        }
    }
}

Token Lexer::scanToken() {
    skipLayout();
    const int ln = line_, co = col_;
    char c = cur();
    if (c == '\0') return Token{TokenKind::EndOfFile, "", ln, co};

    if (identStart(c)) {
        std::size_t start = pos_;
        while (identCont(cur())) advance();
        std::string word(text_.substr(start, pos_ - start));
        // Keyword position: anywhere outside a stereotype.
        TokenKind kind = (stereoDepth_ == 0 && is_keyword(word)) ? TokenKind::Keyword
                                                                 : TokenKind::Ident;
        return Token{kind, std::move(word), ln, co};
    }
    if (digit(c)) {
        std::size_t start = pos_;
        while (digit(cur())) advance();
        return Token{TokenKind::Number, std::string(text_.substr(start, pos_ - start)), ln, co};
    }
    if (c == '"') {
        advance();
        std::size_t start = pos_;
        while (cur() != '"') {
            if (cur() == '\0' || cur() == '\n') fail("unterminated string literal");
            advance();
        }
        std::string body(text_.substr(start, pos_ - start));
        advance();
        return Token{TokenKind::String, std::move(body), ln, co};
    }
    for (std::string_view op : kMultiPunct) {
        if (text_.substr(pos_, op.size()) == op) {
            for (std::size_t i = 0; i < op.size(); ++i) advance();
            if (op == "<<") ++stereoDepth_;
            if (op == ">>" && stereoDepth_ > 0) --stereoDepth_;
            return Token{TokenKind::Punct, std::string(op), ln, co};
        }
    }
    if (kSinglePunct.find(c) != std::string_view::npos) {
        advance();
        return Token{TokenKind::Punct, std::string(1, c), ln, co};
    }
    fail(std::string("character '") + c + "' outside the lexical alphabet");
}

Token Lexer::next() {
    if (hasPeek_) {
        hasPeek_ = false;
        return peeked_;
    }
    return scanToken();
}

const Token& Lexer::peek() {
    if (!hasPeek_) {
        peekPos_ = pos_;
        peekLine_ = line_;
        peekCol_ = col_;
        peekDepth_ = stereoDepth_;
        peeked_ = scanToken();
        hasPeek_ = true;
    }
    return peeked_;
}

void Lexer::dropPeek() {
    if (!hasPeek_) return;
    pos_ = peekPos_;
    line_ = peekLine_;
    col_ = peekCol_;
    stereoDepth_ = peekDepth_;
    hasPeek_ = false;
}

bool Lexer::atEnd() { return peek().kind == TokenKind::EndOfFile; }

Lexer::State Lexer::save() const {
    return State{pos_,     line_,    col_,      stereoDepth_, hasPeek_,
                 peeked_,  peekPos_, peekLine_, peekCol_,     peekDepth_};
}

void Lexer::restore(const State& s) {
    pos_ = s.pos;
    line_ = s.line;
    col_ = s.col;
    stereoDepth_ = s.stereoDepth;
    hasPeek_ = s.hasPeek;
    peeked_ = s.peeked;
    peekPos_ = s.peekPos;
    peekLine_ = s.peekLine;
    peekCol_ = s.peekCol;
    peekDepth_ = s.peekDepth;
}

Token Lexer::captureBraceBlock() {
    dropPeek();
    skipLayout();
    const int ln = line_, co = col_;
    if (cur() != '{') fail("expected '{' opening a body block");
    std::size_t start = pos_;
    int depth = 0;
    for (;;) {
        char c = cur();
        if (c == '\0') fail("unterminated body block");
        if (c == '"') {
            advance();
            while (cur() != '"') {
                if (cur() == '\0' || cur() == '\n') fail("unterminated string literal");
                advance();
            }
            advance();
            continue;
        }
        if (c == '/' && at(1) == '/') {
            while (cur() != '\0' && cur() != '\n') advance();
            continue;
        }
        if (c == '/' && at(1) == '*') {
            advance();
            advance();
            while (!(cur() == '*' && at(1) == '/')) {
                if (cur() == '\0') fail("unterminated block comment");
                advance();
            }
            advance();
            advance();
            continue;
        }
        if (c == '{') ++depth;
        if (c == '}') {
            --depth;
            if (depth == 0) {
                advance();
                break;
            }
        }
        advance();
    }
    return Token{TokenKind::OpaqueBlock, std::string(text_.substr(start, pos_ - start)), ln, co};
}

Token Lexer::captureValue() {
    dropPeek();
    skipLayout();
    const int ln = line_, co = col_;
    if (cur() == '(') {
        std::size_t start = pos_;
        int depth = 0;
        for (;;) {
            char c = cur();
            if (c == '\0') fail("unterminated parenthesized value");
            if (c == '(') ++depth;
            if (c == ')') {
                --depth;
                if (depth == 0) {
                    advance();
                    break;
                }
            }
            advance();
        }
        return Token{TokenKind::OpaqueBlock, std::string(text_.substr(start, pos_ - start)), ln, co};
    }
    std::size_t start = pos_;
    Token t = scanToken();
    if (t.kind == TokenKind::EndOfFile) fail("expected a value");
    return Token{TokenKind::OpaqueBlock, std::string(text_.substr(start, pos_ - start)), ln, co};
}

Token Lexer::captureBracketTail() {
    dropPeek();
    const int ln = line_, co = col_;
    std::size_t start = pos_;
    int depth = 1;
    for (;;) {
        char c = cur();
        if (c == '\0') fail("unterminated invariant expression");
        if (c == '[') ++depth;
        if (c == ']') {
            --depth;
            if (depth == 0) break;
        }
        advance();
    }
    std::string body(text_.substr(start, pos_ - start));
    advance();  // the closing ']'
    return Token{TokenKind::OpaqueBlock, std::move(body), ln, co};
}

Result<std::vector<Token>> tokenize(std::string_view text) {
    Lexer lex(text);
    std::vector<Token> out;
    try {
        for (;;) {
            Token t = lex.next();
            if (t.kind == TokenKind::EndOfFile) break;
            out.push_back(std::move(t));
        }
    } catch (const LexError& e) {
        return Result<std::vector<Token>>::failure(e.diag);
    }
    return Result<std::vector<Token>>::success(std::move(out));
}

}  // namespace umlp
