#include "umlp/minicond.hpp"

#include <cctype>
#include <map>

#include "umlp/system_model.hpp"

namespace umlp {
namespace minicond {

namespace {

struct CondParseError {
    std::string message;
};

// Independent micro-lexer; the condition language is embedded as an
// external rule and has its own alphabet.
class CondLexer {
public:
    explicit CondLexer(std::string_view text) : text_(text) { advance(); }

    const std::string& cur() const { return cur_; }
    bool word() const { return isWord_; }
    bool number() const { return isNumber_; }
    bool stringLit() const { return isString_; }
    const std::string& stringValue() const { return strVal_; }

    void advance() {
        isWord_ = isNumber_ = isString_ = false;
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ >= text_.size()) {
            cur_.clear();
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_' || text_[pos_] == '$'))
                ++pos_;
            cur_ = std::string(text_.substr(start, pos_ - start));
            isWord_ = true;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            std::size_t start = pos_;
            ++pos_;
            bool isFloat = false;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '.')) {
                if (text_[pos_] == '.') {
                    if (pos_ + 1 >= text_.size() ||
                        !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))
                        break;
                    isFloat = true;
                }
                ++pos_;
            }
            cur_ = std::string(text_.substr(start, pos_ - start));
            isNumber_ = true;
            isFloat_ = isFloat;
            return;
        }
        if (c == '"') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
            if (pos_ >= text_.size()) throw CondParseError{"unterminated string literal"};
            strVal_ = std::string(text_.substr(start, pos_ - start));
            ++pos_;
            cur_ = "\"";
            isString_ = true;
            return;
        }
        static const char* ops[] = {"!=", "<=", ">=", "<", ">", "=",
                                    "(", ")", ",", ".", ":"};
        for (const char* op : ops) {
            std::string_view sv(op);
            if (text_.substr(pos_, sv.size()) == sv) {
                cur_ = std::string(sv);
                pos_ += sv.size();
                return;
            }
        }
        throw CondParseError{std::string("unexpected character '") + c + "'"};
    }

    bool accept(std::string_view tok) {
        if (cur_ == tok && !isString_) {
            advance();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok) {
        if (!accept(tok))
            throw CondParseError{"expected '" + std::string(tok) + "', found '" +
                                 (cur_.empty() ? "end of condition" : cur_) + "'"};
    }

    std::string expectWord(const char* what) {
        if (!isWord_) throw CondParseError{std::string("expected ") + what};
        std::string w = cur_;
        advance();
        return w;
    }

    bool atEnd() const { return cur_.empty(); }
    bool isFloat() const { return isFloat_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::string cur_;
    std::string strVal_;
    bool isWord_ = false, isNumber_ = false, isString_ = false, isFloat_ = false;
};

class CondParser {
public:
    explicit CondParser(std::string_view text) : lex_(text) {}

    ExprPtr parse() {
        ExprPtr e = parseExpr();
        if (!lex_.atEnd())
            throw CondParseError{"trailing input after condition: '" + lex_.cur() + "'"};
        return e;
    }

private:
    ExprPtr parseExpr() {
        if (lex_.word() && (lex_.cur() == "forall" || lex_.cur() == "exists")) {
            bool forall = lex_.cur() == "forall";
            lex_.advance();
            auto e = std::make_shared<Expr>();
            e->kind = forall ? Expr::Kind::Forall : Expr::Kind::Exists;
            e->var = lex_.expectWord("a variable name");
            lex_.expect("in");
            lex_.expect("extent");
            lex_.expect("(");
            e->className = lex_.expectWord("a class name");
            lex_.expect(")");
            lex_.expect(":");
            e->child = parseExpr();
            return e;
        }
        return parseOr();
    }

    ExprPtr parseOr() {
        ExprPtr lhs = parseAnd();
        while (lex_.word() && lex_.cur() == "or") {
            lex_.advance();
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Or;
            e->lhs = lhs;
            e->rhs = parseAnd();
            lhs = e;
        }
        return lhs;
    }

    ExprPtr parseAnd() {
        ExprPtr lhs = parseUnary();
        while (lex_.word() && lex_.cur() == "and") {
            lex_.advance();
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::And;
            e->lhs = lhs;
            e->rhs = parseUnary();
            lhs = e;
        }
        return lhs;
    }

    ExprPtr parseUnary() {
        if (lex_.word() && lex_.cur() == "not") {
            lex_.advance();
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Not;
            e->child = parseUnary();
            return e;
        }
        return parseAtom();
    }

    ExprPtr parseAtom() {
        if (lex_.word() && (lex_.cur() == "true" || lex_.cur() == "false")) {
            auto e = std::make_shared<Expr>();
            const bool v = lex_.cur() == "true";
            lex_.advance();
            // A comparison operator right after the literal means it was
            // the left term of a comparison, not a boolean expression.
            std::optional<CmpOp> cmp;
            if (lex_.accept("=")) cmp = CmpOp::Eq;
            else if (lex_.accept("!=")) cmp = CmpOp::Ne;
            else if (lex_.accept("<=")) cmp = CmpOp::Le;
            else if (lex_.accept("<")) cmp = CmpOp::Lt;
            else if (lex_.accept(">=")) cmp = CmpOp::Ge;
            else if (lex_.accept(">")) cmp = CmpOp::Gt;
            if (cmp) {
                e->kind = Expr::Kind::Compare;
                e->left.kind = Term::Kind::Literal;
                e->left.literal = v;
                e->cmp = *cmp;
                e->right = parseTerm();
                return e;
            }
            e->kind = Expr::Kind::BoolLit;
            e->boolValue = v;
            return e;
        }
        if (lex_.word() && (lex_.cur() == "forall" || lex_.cur() == "exists"))
            return parseExpr();
        if (lex_.accept("(")) {
            ExprPtr e = parseExpr();
            lex_.expect(")");
            return e;
        }
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Compare;
        e->left = parseTerm();
        if (lex_.accept("=")) e->cmp = CmpOp::Eq;
        else if (lex_.accept("!=")) e->cmp = CmpOp::Ne;
        else if (lex_.accept("<=")) e->cmp = CmpOp::Le;
        else if (lex_.accept("<")) e->cmp = CmpOp::Lt;
        else if (lex_.accept(">=")) e->cmp = CmpOp::Ge;
        else if (lex_.accept(">")) e->cmp = CmpOp::Gt;
        else throw CondParseError{"expected a comparison operator"};
        e->right = parseTerm();
        return e;
    }

    Term parseTerm() {
        Term t;
        if (lex_.stringLit()) {
            t.kind = Term::Kind::Literal;
            t.literal = lex_.stringValue();
            lex_.advance();
            return t;
        }
        if (lex_.number()) {
            t.kind = Term::Kind::Literal;
            if (lex_.isFloat()) t.literal = std::stod(lex_.cur());
            else t.literal = static_cast<std::int64_t>(std::stoll(lex_.cur()));
            lex_.advance();
            return t;
        }
        if (!lex_.word()) throw CondParseError{"expected a term"};
        std::string word = lex_.cur();
        lex_.advance();
        if (word == "true" || word == "false") {
            t.kind = Term::Kind::Literal;
            t.literal = word == "true";
            return t;
        }
        if (word == "count") {
            lex_.expect("(");
            lex_.expect("links");
            lex_.expect("(");
            t.kind = Term::Kind::LinkCount;
            t.assoc = lex_.expectWord("an association id");
            lex_.expect(",");
            t.var = lex_.expectWord("a variable name");
            lex_.expect(",");
            std::string side = lex_.expectWord("'left' or 'right'");
            if (side == "left") t.side = Side::Left;
            else if (side == "right") t.side = Side::Right;
            else throw CondParseError{"link side must be 'left' or 'right'"};
            lex_.expect(")");
            lex_.expect(")");
            return t;
        }
        // var.attr(name)
        t.kind = Term::Kind::AttrRead;
        t.var = word;
        lex_.expect(".");
        std::string sel = lex_.expectWord("'attr'");
        if (sel != "attr") throw CondParseError{"expected '.attr(...)' after variable"};
        lex_.expect("(");
        t.attr = lex_.expectWord("an attribute name");
        lex_.expect(")");
        return t;
    }

    CondLexer lex_;
};

struct EvalFail {
    std::string message;
};

class Evaluator {
public:
    Evaluator(const SystemState& s, const SystemModel& sys)
        : state_(s), sys_(sys) {
        auto closure = sub_star(sys);
        if (!closure.ok()) throw EvalFail{"subclass relation has a cycle"};
        subStar_ = *closure;
    }

    bool eval(const Expr& e) {
        switch (e.kind) {
            case Expr::Kind::BoolLit:
                return e.boolValue;
            case Expr::Kind::Not:
                return !eval(*e.child);
            case Expr::Kind::And:
                return eval(*e.lhs) && eval(*e.rhs);
            case Expr::Kind::Or:
                return eval(*e.lhs) || eval(*e.rhs);
            case Expr::Kind::Forall: {
                for (const Oid& oid : extent(e.className)) {
                    bindings_[e.var] = oid;
                    bool v = eval(*e.child);
                    bindings_.erase(e.var);
                    if (!v) return false;
                }
                return true;
            }
            case Expr::Kind::Exists: {
                for (const Oid& oid : extent(e.className)) {
                    bindings_[e.var] = oid;
                    bool v = eval(*e.child);
                    bindings_.erase(e.var);
                    if (v) return true;
                }
                return false;
            }
            case Expr::Kind::Compare: {
                Value l = evalTerm(e.left);
                Value r = evalTerm(e.right);
                auto cmp = compare_values(l, r);
                switch (e.cmp) {
                    case CmpOp::Eq: return cmp.has_value() && *cmp == 0;
                    case CmpOp::Ne: return !cmp.has_value() || *cmp != 0;
                    case CmpOp::Lt:
                    case CmpOp::Le:
                    case CmpOp::Gt:
                    case CmpOp::Ge:
                        if (!cmp)
                            throw EvalFail{"incomparable values " + value_to_string(l) +
                                           " and " + value_to_string(r)};
                        if (e.cmp == CmpOp::Lt) return *cmp < 0;
                        if (e.cmp == CmpOp::Le) return *cmp <= 0;
                        if (e.cmp == CmpOp::Gt) return *cmp > 0;
                        return *cmp >= 0;
                }
                return false;
            }
        }
        return false;
    }

private:
    std::vector<Oid> extent(const ClassName& c) const {
        std::vector<Oid> out;
        for (const Oid& oid : state_.ds.liveOids) {
            auto it = sys_.uoids.find(oid);
            if (it != sys_.uoids.end() && subStar_.count({it->second, c}))
                out.push_back(oid);
        }
        return out;
    }

    const Oid& lookup(const std::string& var) const {
        auto it = bindings_.find(var);
        if (it == bindings_.end())
            throw EvalFail{"unbound variable '" + var + "' (condition must be closed)"};
        return it->second;
    }

    Value evalTerm(const Term& t) const {
        switch (t.kind) {
            case Term::Kind::Literal:
                return t.literal;
            case Term::Kind::AttrRead: {
                const Oid& oid = lookup(t.var);
                auto it = state_.ds.attrVal.find({oid, t.attr});
                if (it == state_.ds.attrVal.end())
                    throw EvalFail{"attribute '" + t.attr + "' undefined for oid '" +
                                   oid + "' in state '" + state_.id + "'"};
                return it->second;
            }
            case Term::Kind::LinkCount: {
                const Oid& oid = lookup(t.var);
                if (!sys_.uassocs.count(t.assoc))
                    throw EvalFail{"unknown association '" + t.assoc + "'"};
                std::int64_t n = 0;
                for (const Link& l : rel_of(sys_, t.assoc, state_.ds)) {
                    for (const auto& [x, y] : link_pairs(l)) {
                        if (t.side == Side::Left ? x == oid : y == oid) ++n;
                    }
                }
                return n;
            }
        }
        return Value{std::int64_t{0}};
    }

    const SystemState& state_;
    const SystemModel& sys_;
    std::set<std::pair<ClassName, ClassName>> subStar_;
    std::map<std::string, Oid> bindings_;
};

}  // namespace

Result<ExprPtr> parse_cond(std::string_view text) {
    try {
        CondParser parser(text);
        return Result<ExprPtr>::success(parser.parse());
    } catch (const CondParseError& e) {
        return Result<ExprPtr>::failure(Diagnostic{
            "SyntaxError", Severity::Error, "invariant condition: " + e.message,
            "invariant"});
    }
}

EvalOutcome eval_cond(const Expr& cond, const SystemState& s, const SystemModel& sys) {
    try {
        Evaluator ev(s, sys);
        return EvalOutcome{ev.eval(cond) ? EvalOutcome::Kind::True
                                         : EvalOutcome::Kind::False,
                           {}};
    } catch (const EvalFail& f) {
        return EvalOutcome{EvalOutcome::Kind::Error, f.message};
    }
}

}  // namespace minicond
}  // namespace umlp
