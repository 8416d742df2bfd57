#include "htceq/syntax.hpp"

#include "htceq/error.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace htceq {

namespace {

enum class Tok {
    ident,
    integer,
    sum,       // &sum
    directive, // #name
    lbrace,
    rbrace,
    dot,
    dots,
    if_,
    comma,
    semicolon,
    star,
    minus,
    cmp,
    end,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text)
    : text_{text} {}

    Token next() {
        skip_blank();
        auto const line = line_;
        auto const column = column_;
        auto make = [&](Tok kind, std::size_t length) {
            Token tok{kind, std::string{text_.substr(pos_, length)}, line, column};
            advance(length);
            return tok;
        };
        if (pos_ >= text_.size()) {
            return Token{Tok::end, "", line, column};
        }
        char const c = text_[pos_];
        auto const at = [&](std::size_t k) { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; };
        if (is_ident_start(c)) {
            return make(Tok::ident, word_length(pos_));
        }
        if (is_digit(c)) {
            return make(Tok::integer, digits_length(pos_));
        }
        switch (c) {
        case '&': {
            auto const length = word_length(pos_ + 1);
            if (text_.substr(pos_ + 1, length) != "sum") {
                throw SyntaxError{"expected &sum", line, column};
            }
            return make(Tok::sum, 1 + length);
        }
        case '#': return make(Tok::directive, 1 + word_length(pos_ + 1));
        case '{': return make(Tok::lbrace, 1);
        case '}': return make(Tok::rbrace, 1);
        case '.': return at(1) == '.' ? make(Tok::dots, 2) : make(Tok::dot, 1);
        case ':':
            if (at(1) != '-') {
                throw SyntaxError{"expected ':-'", line, column};
            }
            return make(Tok::if_, 2);
        case ',': return make(Tok::comma, 1);
        case ';': return make(Tok::semicolon, 1);
        case '*': return make(Tok::star, 1);
        case '-': return make(Tok::minus, 1);
        case '=': return make(Tok::cmp, 1);
        case '<':
        case '>': return make(Tok::cmp, at(1) == '=' ? 2 : 1);
        case '!':
            if (at(1) != '=') {
                throw SyntaxError{"expected '!='", line, column};
            }
            return make(Tok::cmp, 2);
        default: break;
        }
        throw SyntaxError{"unexpected character " + describe(c), line, column};
    }

  private:
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
    static bool is_ident(char c) { return is_ident_start(c) || is_digit(c) || c == '\''; }

    static std::string describe(char c) {
        auto const u = static_cast<unsigned char>(c);
        if (std::isprint(u) != 0) {
            return std::string{"'"} + c + "'";
        }
        static constexpr char hex[] = "0123456789abcdef";
        return std::string{"byte 0x"} + hex[u >> 4U] + hex[u & 15U];
    }

    std::size_t word_length(std::size_t from) const {
        auto end = from;
        while (end < text_.size() && is_ident(text_[end])) {
            ++end;
        }
        return end - from;
    }

    std::size_t digits_length(std::size_t from) const {
        auto end = from;
        while (end < text_.size() && is_digit(text_[end])) {
            ++end;
        }
        return end - from;
    }

    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i, ++pos_) {
            if (text_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
        }
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            char const c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance(1);
                }
            } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                advance(1);
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

struct Position {
    std::size_t line;
    std::size_t column;
};

struct Located {
    TAtom atom;
    std::size_t line;
    std::size_t column;
};

class Parser {
  public:
    explicit Parser(std::string_view text)
    : lexer_{text}
    , tok_{lexer_.next()} {}

    SourceProgram parse() {
        while (tok_.kind != Tok::end) {
            if (tok_.kind == Tok::directive) {
                directive();
            } else {
                rule();
            }
        }
        return finish();
    }

  private:
    [[noreturn]] void fail(std::string const &msg) const { throw SyntaxError{msg, tok_.line, tok_.column}; }

    Token take() {
        auto tok = std::move(tok_);
        tok_ = lexer_.next();
        return tok;
    }

    Token expect(Tok kind, char const *what) {
        if (tok_.kind != kind) {
            fail(std::string{"expected "} + what + found());
        }
        return take();
    }

    std::string found() const { return tok_.kind == Tok::end ? ", found end of input" : ", found '" + tok_.text + "'"; }

    Integer integer() {
        bool const negative = tok_.kind == Tok::minus;
        if (negative) {
            take();
        }
        auto const tok = expect(Tok::integer, "integer");
        auto const digits = (negative ? "-" : "") + tok.text;
        Integer value = 0;
        auto const [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || end != digits.data() + digits.size()) {
            throw SyntaxError{"integer out of range", tok.line, tok.column};
        }
        return value;
    }

    std::string identifier() {
        auto tok = expect(Tok::ident, "identifier");
        if (tok.text == "not") {
            throw SyntaxError{"'not' is a keyword", tok.line, tok.column};
        }
        if (tok.text.rfind(reserved_prefix, 0) == 0) {
            throw SemanticError{"identifier '" + tok.text + "' uses the reserved prefix " + std::string{reserved_prefix},
                                tok.line, tok.column};
        }
        return tok.text;
    }

    void use(std::string const &name, VarKind kind, Token const &at) {
        auto [it, fresh] = kinds_.emplace(name, kind);
        if (!fresh && it->second != kind) {
            throw SemanticError{"'" + name + "' is used both as a regular atom and as a theory variable", at.line,
                                at.column};
        }
    }

    LinearAtom theory_atom() {
        expect(Tok::sum, "&sum");
        expect(Tok::lbrace, "'{'");
        std::vector<Term> terms;
        do {
            if (!terms.empty()) {
                take();
            }
            Term term;
            if (tok_.kind == Tok::integer || tok_.kind == Tok::minus) {
                term.coefficient = integer();
                expect(Tok::star, "'*'");
            }
            auto const at = tok_;
            term.variable = identifier();
            use(term.variable, VarKind::theory, at);
            terms.push_back(std::move(term));
        } while (tok_.kind == Tok::semicolon);
        expect(Tok::rbrace, "'}' or ';'");
        auto const op = expect(Tok::cmp, "comparison");
        static std::map<std::string, Comparator, std::less<>> const comparators{
            {"<=", Comparator::le}, {"=", Comparator::eq}, {"!=", Comparator::ne},
            {"<", Comparator::lt},  {">", Comparator::gt}, {">=", Comparator::ge},
        };
        auto const bound = integer();
        return LinearAtom{std::move(terms), comparators.at(op.text), bound};
    }

    Located atom() {
        auto const at = tok_;
        if (tok_.kind == Tok::sum) {
            return {TAtom::th(theory_atom()), at.line, at.column};
        }
        if (tok_.kind != Tok::ident) {
            fail("expected atom" + found());
        }
        auto name = identifier();
        use(name, VarKind::regular, at);
        return {TAtom::reg(std::move(name)), at.line, at.column};
    }

    void rule() {
        Rule r;
        if (tok_.kind != Tok::if_) {
            r.head = atom().atom;
            if (tok_.kind == Tok::dot) {
                take();
                rules_.push_back(std::move(r));
                return;
            }
        }
        expect(Tok::if_, "':-' or '.'");
        do {
            if (tok_.kind == Tok::comma) {
                take();
            }
            bool negated = false;
            if (tok_.kind == Tok::ident && tok_.text == "not") {
                take();
                negated = true;
                if (tok_.kind == Tok::ident && tok_.text == "not") {
                    fail("double negation is not supported");
                }
            }
            auto literal = atom();
            if (literal.atom.is_theory()) {
                body_atoms_.emplace(literal.atom.linear(), literal);
            }
            (negated ? r.neg : r.pos).push_back(std::move(literal.atom));
        } while (tok_.kind == Tok::comma);
        expect(Tok::dot, "'.' or ','");
        rules_.push_back(std::move(r));
    }

    void directive() {
        auto const tok = take();
        if (tok.text == "#bounds") {
            auto const lo = integer();
            expect(Tok::dots, "'..'");
            auto const hi = integer();
            expect(Tok::dot, "'.'");
            std::optional<Bounds> b;
            try {
                b = Bounds{lo, hi};
            } catch (PreconditionViolation const &e) {
                throw SemanticError{e.what(), tok.line, tok.column};
            }
            if (bounds_ && *bounds_ != *b) {
                throw SemanticError{"conflicting #bounds directives", tok.line, tok.column};
            }
            bounds_ = b;
        } else if (tok.text == "#external" || tok.text == "#founded") {
            auto const at = tok_;
            auto atom = theory_atom();
            expect(Tok::dot, "'.'");
            if (tok.text == "#external") {
                externals_.insert(std::move(atom));
            } else {
                founded_.emplace(std::move(atom), Position{at.line, at.column});
            }
        } else {
            throw SemanticError{"unknown directive " + tok.text, tok.line, tok.column};
        }
    }

    SourceProgram finish() {
        for (auto const &[atom, at] : founded_) {
            if (auto it = body_atoms_.find(atom); it != body_atoms_.end()) {
                throw SemanticError{"founded atom " + atom.to_string() + " occurs in a rule body", it->second.line,
                                    it->second.column};
            }
        }
        TProgram program{rules_, externals_, bounds_.value_or(Bounds{})};
        LinearAtomSet founded;
        for (auto const &[atom, at] : founded_) {
            if (externals_.count(atom) > 0) {
                continue; // #external wins
            }
            if (program.externals().count(atom) > 0) {
                throw SemanticError{"founded atom " + atom.to_string() + " is external as the complement of an external atom",
                                    at.line, at.column};
            }
            founded.insert(atom);
        }
        return SourceProgram{{}, std::move(program), bounds_, externals_, std::move(founded)};
    }

    Lexer lexer_;
    Token tok_;
    std::vector<Rule> rules_;
    std::optional<Bounds> bounds_;
    LinearAtomSet externals_;
    std::map<LinearAtom, Position> founded_;
    std::map<LinearAtom, Located> body_atoms_;
    std::map<std::string, VarKind> kinds_;
};

} // namespace

SourceProgram parse_program(std::string_view text) {
    auto out = Parser{text}.parse();
    out.text = std::string{text};
    return out;
}

} // namespace htceq
