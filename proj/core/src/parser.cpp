#include "supertime/parser.hpp"

#include "supertime/errors.hpp"

#include <cctype>

namespace supertime {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) {
            current_ = {Tok::End, "", line, col};
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                text += src_[pos_];
                bump();
            }
            current_ = {Tok::Number, std::move(text), line, col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string text;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                text += src_[pos_];
                bump();
            }
            while (pos_ < src_.size() && src_[pos_] == '\'') {
                text += '\'';
                bump();
            }
            current_ = {Tok::Ident, std::move(text), line, col};
            return;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '[': kind = Tok::LBracket; break;
            case ']': kind = Tok::RBracket; break;
            case ',': kind = Tok::Comma; break;
            default:
                throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
        }
        bump();
        current_ = {kind, std::string(1, c), line, col};
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_{Tok::End, "", 1, 1};
};

class Parser {
public:
    Parser(const Session& s, const std::string& src) : s_(s), lex_(src) {}

    SuperNumber parse_full() {
        SuperNumber v = expr();
        expect(Tok::End, "end of input");
        return v;
    }

    VierbeinParams parse_matrix() {
        expect(Tok::LBracket, "'['");
        SuperNumber slots[3][3];
        for (int r = 0; r < 3; ++r) {
            if (r > 0) expect(Tok::Comma, "','");
            expect(Tok::LBracket, "'['");
            for (int c = 0; c < 3; ++c) {
                if (c > 0) expect(Tok::Comma, "','");
                slots[r][c] = expr();
            }
            expect(Tok::RBracket, "']'");
        }
        expect(Tok::RBracket, "']'");
        expect(Tok::End, "end of input");

        static const char* coord[3] = {"t", "theta", "thetabar"};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                const SuperNumber& v = slots[r][c];
                if (v.is_zero()) continue;
                int want = ((r == 0 ? 0 : 1) + (c == 0 ? 0 : 1)) & 1;
                if (!v.is_homogeneous() || v.parity() != want)
                    throw ParityMismatch(std::string("vierbein slot (") + coord[r] + "," + coord[c] + ")");
            }
        VierbeinParams v;
        v.a = slots[0][0];
        v.alpha = slots[0][1];
        v.beta = slots[0][2];
        v.gamma = slots[1][0];
        v.b = slots[1][1];
        v.c = slots[1][2];
        v.delta = slots[2][0];
        v.d = slots[2][1];
        v.e = slots[2][2];
        return v;
    }

private:
    void expect(Tok kind, const std::string& what) {
        const Token& t = lex_.peek();
        if (t.kind != kind)
            throw SyntaxError(t.line, t.column,
                              "expected " + what + (t.kind == Tok::End ? ", found end of input"
                                                                       : ", found '" + t.text + "'"));
        lex_.next();
    }

    SuperNumber expr() {
        SuperNumber v = term();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.next();
                v += term();
            } else if (k == Tok::Minus) {
                lex_.next();
                v -= term();
            } else {
                return v;
            }
        }
    }

    SuperNumber term() {
        SuperNumber v = factor();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Star) {
                lex_.next();
                v = gmul(v, factor());
            } else if (k == Tok::Slash) {
                Token t = lex_.next();
                SuperNumber d = factor();
                try {
                    v = gmul(v, ginv(d));
                } catch (const ZeroBody&) {
                    throw SyntaxError(t.line, t.column, "division by a zero-body value");
                }
            } else {
                return v;
            }
        }
    }

    SuperNumber factor() {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.next();
            return -factor();
        }
        return power();
    }

    SuperNumber power() {
        SuperNumber base = atom();
        if (lex_.peek().kind != Tok::Caret) return base;
        lex_.next();
        const Token& t = lex_.peek();
        if (t.kind != Tok::Number) throw SyntaxError(t.line, t.column, "expected integer exponent");
        long e = std::stol(lex_.next().text);
        SuperNumber out = SuperNumber::scalar(s_.ctx(), Scalar(1));
        for (long k = 0; k < e; ++k) out = gmul(out, base);
        return out;
    }

    SuperNumber atom() {
        Token t = lex_.next();
        switch (t.kind) {
            case Tok::Number:
                return SuperNumber::scalar(s_.ctx(), Scalar(Rat(t.text)));
            case Tok::LParen: {
                SuperNumber v = expr();
                expect(Tok::RParen, "')'");
                return v;
            }
            case Tok::Ident: {
                if (t.text == "i") return s_.num(Scalar::i());
                if (t.text == "sqrt2") return s_.num(Scalar::sqrt2());
                if (int g = s_.ctx()->find_generator(t.text); g >= 0) return s_.gen(g);
                if (int v = s_.ctx()->find_symbol(t.text); v >= 0) return s_.sym(v);
                throw UnknownSymbol(t.text);
            }
            default:
                throw SyntaxError(t.line, t.column,
                                  t.kind == Tok::End ? "unexpected end of input"
                                                     : "unexpected '" + t.text + "'");
        }
    }

    const Session& s_;
    Lexer lex_;
};

}  // namespace

SuperNumber parse_expr(const Session& s, const std::string& src) {
    return Parser(s, src).parse_full();
}

VierbeinParams parse_vierbein(const Session& s, const std::string& src) {
    return Parser(s, src).parse_matrix();
}

}  // namespace supertime
