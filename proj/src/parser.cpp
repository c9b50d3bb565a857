#include "mseg/parser.hpp"

#include <cctype>
#include <cstdint>
#include <map>

namespace mseg::dsl {

namespace {

constexpr std::int64_t kMaxLiteral = 1'000'000'000;

enum class Tok {
    ident,
    integer,
    lbrace,
    rbrace,
    lparen,
    rparen,
    equals,
    comma,
    plus,
    slash,
    kw_line,
    kw_pi,
    kw_st,
    kw_degree,
    kw_sigma,
    kw_self,
    kw_orthogonal,
    kw_symplectic,
    end,
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::ident: return "name";
        case Tok::integer: return "integer";
        case Tok::lbrace: return "'{'";
        case Tok::rbrace: return "'}'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::equals: return "'='";
        case Tok::comma: return "','";
        case Tok::plus: return "'+'";
        case Tok::slash: return "'/'";
        case Tok::kw_line: return "'line'";
        case Tok::kw_pi: return "'pi'";
        case Tok::kw_st: return "'St'";
        case Tok::kw_degree: return "'degree'";
        case Tok::kw_sigma: return "'sigma'";
        case Tok::kw_self: return "'self'";
        case Tok::kw_orthogonal: return "'orthogonal'";
        case Tok::kw_symplectic: return "'symplectic'";
        case Tok::end: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::int64_t value = 0;
    Position pos;
};

Tok keyword_kind(const std::string& word) {
    static const std::map<std::string, Tok> keywords = {
        {"line", Tok::kw_line},           {"pi", Tok::kw_pi},
        {"St", Tok::kw_st},               {"degree", Tok::kw_degree},
        {"sigma", Tok::kw_sigma},         {"self", Tok::kw_self},
        {"orthogonal", Tok::kw_orthogonal}, {"symplectic", Tok::kw_symplectic},
    };
    auto it = keywords.find(word);
    return it == keywords.end() ? Tok::ident : it->second;
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space_and_comments();
            const Position pos = pos_;
            if (at_end()) {
                out.push_back(Token{Tok::end, "", 0, pos});
                return out;
            }
            const char c = peek();
            if (is_ident_start(c)) {
                std::string word;
                while (!at_end() && is_ident_char(peek())) word.push_back(take());
                out.push_back(Token{keyword_kind(word), word, 0, pos});
            } else if (is_digit(c) || (c == '-' && next_is_digit())) {
                out.push_back(lex_integer(pos));
            } else {
                switch (c) {
                    case '{': out.push_back(Token{Tok::lbrace, "{", 0, pos}); break;
                    case '}': out.push_back(Token{Tok::rbrace, "}", 0, pos}); break;
                    case '(': out.push_back(Token{Tok::lparen, "(", 0, pos}); break;
                    case ')': out.push_back(Token{Tok::rparen, ")", 0, pos}); break;
                    case '=': out.push_back(Token{Tok::equals, "=", 0, pos}); break;
                    case ',': out.push_back(Token{Tok::comma, ",", 0, pos}); break;
                    case '+': out.push_back(Token{Tok::plus, "+", 0, pos}); break;
                    case '/': out.push_back(Token{Tok::slash, "/", 0, pos}); break;
                    default:
                        throw ParseError(errc::syntax_error, pos,
                                         "unexpected character (byte " +
                                             std::to_string(static_cast<unsigned char>(c)) + ")");
                }
                take();
            }
        }
    }

private:
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_ident_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }
    static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

    bool at_end() const { return index_ >= text_.size(); }
    char peek() const { return text_[index_]; }
    char peek2() const { return index_ + 1 < text_.size() ? text_[index_ + 1] : '\0'; }
    bool next_is_digit() const { return is_digit(peek2()); }

    char take() {
        const char c = text_[index_++];
        if (c == '\n') {
            pos_.line++;
            pos_.column = 1;
        } else {
            pos_.column++;
        }
        return c;
    }

    void skip_space_and_comments() {
        for (;;) {
            while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n'))
                take();
            if (!at_end() && peek() == '-' && peek2() == '-') {
                while (!at_end() && peek() != '\n') take();
                continue;
            }
            return;
        }
    }

    Token lex_integer(Position pos) {
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            take();
        }
        std::int64_t value = 0;
        while (!at_end() && is_digit(peek())) {
            value = value * 10 + (take() - '0');
            if (value > kMaxLiteral)
                throw ParseError(errc::syntax_error, pos, "integer literal out of range");
        }
        return Token{Tok::integer, "", negative ? -value : value, pos};
    }

    std::string_view text_;
    std::size_t index_ = 0;
    Position pos_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

    SourceFile run() {
        SourceFile file;
        while (peek().kind == Tok::kw_line) file.lines.push_back(parse_decl());

        for (const CuspidalLine& line : file.lines) {
            if (table_.contains(line.name))
                throw ParseError(errc::duplicate_name, decl_pos_.at(line.name),
                                 "line '" + line.name + "' declared twice");
            table_.add(line);
        }
        validate_line_table(table_);

        while (peek().kind == Tok::kw_pi) file.bindings.push_back(parse_binding());
        if (peek().kind != Tok::end)
            throw ParseError(errc::syntax_error, peek().pos,
                             std::string("expected 'line', 'pi' or end of input, found ") +
                                 tok_name(peek().kind));
        return file;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& advance() { return tokens_[index_++]; }

    const Token& expect(Tok kind) {
        if (peek().kind != kind)
            throw ParseError(errc::syntax_error, peek().pos,
                             std::string("expected ") + tok_name(kind) + ", found " +
                                 tok_name(peek().kind));
        return advance();
    }

    CuspidalLine parse_decl() {
        expect(Tok::kw_line);
        const Token& name = expect(Tok::ident);
        if (decl_pos_.count(name.text))
            throw ParseError(errc::duplicate_name, name.pos,
                             "line '" + name.text + "' declared twice");
        decl_pos_.emplace(name.text, name.pos);
        expect(Tok::lbrace);
        expect(Tok::kw_degree);
        expect(Tok::equals);
        const Token& degree = expect(Tok::integer);
        if (degree.value < 1)
            throw ParseError(errc::syntax_error, degree.pos, "degree must be positive");
        expect(Tok::comma);
        expect(Tok::kw_sigma);
        expect(Tok::equals);
        CuspidalLine line;
        line.name = name.text;
        line.degree = degree.value;
        if (peek().kind == Tok::kw_self) {
            advance();
            if (peek().kind == Tok::kw_orthogonal) {
                line.self_sign = 1;
            } else if (peek().kind == Tok::kw_symplectic) {
                line.self_sign = -1;
            } else {
                throw ParseError(errc::syntax_error, peek().pos,
                                 std::string("expected 'orthogonal' or 'symplectic', found ") +
                                     tok_name(peek().kind));
            }
            advance();
            line.sigma_partner = line.name;
        } else {
            const Token& partner = expect(Tok::ident);
            line.sigma_partner = partner.text;
        }
        expect(Tok::rbrace);
        return line;
    }

    Binding parse_binding() {
        expect(Tok::kw_pi);
        const Token& name = expect(Tok::ident);
        if (!binding_names_.emplace(name.text, name.pos).second)
            throw ParseError(errc::duplicate_name, name.pos,
                             "pi '" + name.text + "' bound twice");
        expect(Tok::equals);
        Binding binding;
        binding.name = name.text;
        binding.segments.push_back(parse_segment());
        while (peek().kind == Tok::plus) {
            advance();
            binding.segments.push_back(parse_segment());
        }
        return binding;
    }

    Segment parse_segment() {
        expect(Tok::kw_st);
        expect(Tok::lparen);
        const Token& length = expect(Tok::integer);
        if (length.value < 1)
            throw ParseError(errc::syntax_error, length.pos, "segment length must be positive");
        expect(Tok::comma);
        const Token& line = expect(Tok::ident);
        if (!table_.contains(line.text))
            throw ParseError(errc::dangling_line, line.pos,
                             "undeclared line '" + line.text + "'");
        HalfInt exponent{0};
        if (peek().kind == Tok::comma) {
            advance();
            exponent = parse_exponent();
        }
        expect(Tok::rparen);
        return st(length.value, line.text, exponent);
    }

    HalfInt parse_exponent() {
        const Token& value = expect(Tok::integer);
        if (peek().kind != Tok::slash) return HalfInt(value.value);
        advance();
        const Token& den = expect(Tok::integer);
        if (den.value != 2)
            throw ParseError(errc::syntax_error, den.pos,
                             "exponent denominator must be 2 (exponents are half-integers)");
        return HalfInt::halves(value.value);
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    LineTable table_;
    std::map<std::string, Position> decl_pos_;
    std::map<std::string, Position> binding_names_;
};

}  // namespace

SourceFile parse(std::string_view text) { return Parser(text).run(); }

std::string print(const SourceFile& file) {
    std::string out;
    for (const CuspidalLine& line : file.lines) {
        out += "line " + line.name + " { degree = " + std::to_string(line.degree) + ", sigma = ";
        if (line.self_dual())
            out += *line.self_sign == 1 ? "self orthogonal" : "self symplectic";
        else
            out += line.sigma_partner;
        out += " }\n";
    }
    for (const Binding& binding : file.bindings) {
        out += "pi " + binding.name + " =";
        bool first = true;
        for (const Segment& seg : binding.segments) {
            out += first ? " " : " + ";
            first = false;
            out += "St(" + std::to_string(seg.length) + ", " + seg.line();
            if (seg.exponent() != HalfInt(0)) out += ", " + seg.exponent().str();
            out += ")";
        }
        out += "\n";
    }
    return out;
}

LineTable make_line_table(const SourceFile& file) {
    LineTable table;
    for (const CuspidalLine& line : file.lines) table.add(line);
    validate_line_table(table);
    return table;
}

Multisegment make_multisegment(const SourceFile& file, std::string_view pi_name) {
    for (const Binding& binding : file.bindings)
        if (binding.name == pi_name) {
            Multisegment pi{make_line_table(file), binding.segments};
            validate_multisegment(pi);
            return pi;
        }
    fail(errc::unknown_binding, "no pi named '" + std::string(pi_name) + "'");
}

}  // namespace mseg::dsl
