#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "supertime/parser.hpp"

using namespace supertime;

namespace {

SuperNumber random_super(const Session& s, std::mt19937_64& rng) {
    SuperNumber out(s.ctx());
    int n = s.ctx()->generator_count();
    uint64_t full = (uint64_t{1} << n) - 1;
    int terms = 1 + static_cast<int>(rng() % 4);
    std::vector<int> symbols{s.t, s.eps, s.hbar, s.x_jet[0], s.x_jet[1], s.a_B, s.pi[0]};
    for (int k = 0; k < terms; ++k) {
        uint64_t mask = rng() & full;
        Scalar c(Rat(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1));
        switch (rng() % 4) {
            case 0: c = c * Scalar::i(); break;
            case 1: c = c + Scalar::sqrt2(); break;
            default: break;
        }
        RatFunc rc = s.ratnum(c);
        if (rng() % 3 == 0) rc = rc * s.rat(symbols[rng() % symbols.size()]);
        if (rng() % 5 == 0) rc = rc / s.rat(symbols[rng() % symbols.size()]);
        out.add_term(mask, rc);
    }
    return out;
}

}  // namespace

TEST_CASE("literals, precedence and powers") {
    Session s(1);
    CHECK(parse_expr(s, "2+3*4") == s.num(Scalar(14)));
    CHECK(parse_expr(s, "(2+3)*4") == s.num(Scalar(20)));
    CHECK(parse_expr(s, "2^3") == s.num(Scalar(8)));
    CHECK(parse_expr(s, "-2^2") == s.num(Scalar(-4)));  // unary minus binds weaker than ^
    CHECK(parse_expr(s, "1/2") == s.num(Scalar(Rat(1, 2))));
    CHECK(parse_expr(s, "i*i") == s.num(Scalar(-1)));
    CHECK(parse_expr(s, "sqrt2^2") == s.num(Scalar(2)));
}

TEST_CASE("odd coordinates and jets parse to their session values") {
    Session s(1);
    CHECK(parse_expr(s, "theta") == s.gen(s.theta));
    CHECK(parse_expr(s, "theta*thetabar") == gmul(s.gen(s.theta), s.gen(s.thetabar)));
    CHECK(parse_expr(s, "theta*theta").is_zero());
    CHECK(parse_expr(s, "x'") == s.sym(s.x_jet[1]));
    CHECK(parse_expr(s, "c'") == s.gen(s.c_jet[1]));
    CHECK(parse_expr(s, "(1+theta)*(1-theta)") == s.num(Scalar(1)));
}

TEST_CASE("division routes through the exact Grassmann inverse") {
    Session s(1);
    SuperNumber lhs = parse_expr(s, "1/(eps - i*thetabar*theta/hbar)");
    SuperNumber reg = s.sym(s.eps) -
                      gmul(s.gen(s.thetabar), s.gen(s.theta)).scaled(s.ratnum(Scalar::i()) / s.rat(s.hbar));
    CHECK(lhs == ginv(reg));
}

TEST_CASE("printing and parsing are mutually inverse on random values") {
    Session s(1);
    std::mt19937_64 rng(71);
    for (int k = 0; k < 100; ++k) {
        SuperNumber a = random_super(s, rng);
        CHECK(parse_expr(s, to_string(a)) == a);
    }
}

TEST_CASE("syntax errors carry one-based positions") {
    Session s(1);
    try {
        parse_expr(s, "1/(eps");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 7);
    }
    try {
        parse_expr(s, "1 +\n* 2");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 1);
    }
    CHECK_THROWS_AS(parse_expr(s, "1/0"), SyntaxError);
}

TEST_CASE("unknown names are reported as such") {
    Session s(1);
    CHECK_THROWS_AS(parse_expr(s, "nosuchsymbol"), UnknownSymbol);
    CHECK_THROWS_AS(parse_expr(s, "t + zeta"), UnknownSymbol);
}

TEST_CASE("matrix literals parse into graded vierbein slots") {
    Session s(1);
    VierbeinParams v = parse_vierbein(
        s, "[[1, 0, 0], [gamma_th*theta, b_B, c_B], [delta_th*theta, d_B, e_B]]");
    CHECK(v.a == s.num(Scalar(1)));
    CHECK(v.gamma == s.gen(s.theta).scaled(s.rat(s.gamma_th)));
    CHECK(v.e == s.sym(s.e_B));
    CHECK(v.alpha.is_zero());
}

TEST_CASE("matrix slots are parity checked") {
    Session s(1);
    // an even value in the odd (t, theta) slot must be rejected
    CHECK_THROWS_AS(parse_vierbein(s, "[[1, 1, 0], [0, 1, 0], [0, 0, 1]]"), ParityMismatch);
}
