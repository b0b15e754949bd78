#ifndef UMLP_LEXER_HPP
#define UMLP_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "umlp/diag.hpp"
#include "umlp/token.hpp"

namespace umlp {

/// Thrown on characters outside the lexical alphabet or unterminated
/// strings/blocks; carries a position-bearing diagnostic.
struct LexError {
    Diagnostic diag;
};

bool is_keyword(std::string_view word);

/// Incremental scanner over one document. The parser drives it token by
/// token and can switch to raw capture for the external grammar rules
/// (Body, Value, InvariantExpression).
class Lexer {
public:
    explicit Lexer(std::string_view text);

    Token next();        // consumes; throws LexError
    const Token& peek(); // does not consume
    bool atEnd();

    /// Raw captures for external rules. Each skips leading layout first.
    Token captureBraceBlock();   // "{...}" with balanced braces, text includes braces
    Token captureValue();        // one literal token, or "(...)" balanced
    Token captureBracketTail();  // text up to the matching "]", consumes the "]"

    struct State {
        std::size_t pos;
        int line, col;
        int stereoDepth;
        bool hasPeek;
        Token peeked;
        std::size_t peekPos;
        int peekLine, peekCol, peekDepth;
    };
    State save() const;
    void restore(const State& s);

    int line() const { return line_; }
    int column() const { return col_; }

private:
    void skipLayout();  // whitespace and comments
    Token scanToken();
    void dropPeek();    // rewinds the raw cursor to before the cached token
    char cur() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char at(std::size_t off) const {
        return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
    }
    void advance();
    [[noreturn]] void fail(const std::string& message) const;

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    int stereoDepth_ = 0;  // inside << >> keywords lex as IDENT
    bool hasPeek_ = false;
    Token peeked_;
    std::size_t peekPos_ = 0;
    int peekLine_ = 1, peekCol_ = 1, peekDepth_ = 0;
};

/// Whole-document tokenization per the Common.mc lexical rules.
Result<std::vector<Token>> tokenize(std::string_view text);

}  // namespace umlp

#endif
