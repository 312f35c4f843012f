#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <random>

#include "supertime/ratfunc.hpp"

using namespace supertime;

namespace {

std::shared_ptr<const VarTable> make_vars() {
    auto vt = std::make_shared<VarTable>();
    vt->add("x");
    vt->add("y");
    return vt;
}

Polynomial random_poly(const std::shared_ptr<const VarTable>& vars, std::mt19937_64& rng) {
    Polynomial p(vars);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        Mono m;
        for (int v = 0; v < 2; ++v) {
            int e = static_cast<int>(rng() % 3);
            if (e > 0) m.emplace_back(v, e);
        }
        p.add_term(std::move(m), Scalar(Rat(static_cast<long>(rng() % 19) - 9)));
    }
    return p;
}

RatFunc random_ratfunc(const std::shared_ptr<const VarTable>& vars, std::mt19937_64& rng) {
    Polynomial num = random_poly(vars, rng);
    Polynomial den;
    do {
        den = random_poly(vars, rng);
    } while (den.is_zero());
    return RatFunc(std::move(num), std::move(den));
}

}  // namespace

TEST_CASE("canonical form makes structural equality mathematical") {
    auto vars = make_vars();
    Polynomial x = Polynomial::variable(vars, 0);
    Polynomial y = Polynomial::variable(vars, 1);
    Polynomial one = Polynomial::constant(vars, Scalar(1));
    // (x^2 - 1)/(x - 1) reduces to x + 1
    CHECK(RatFunc(x * x - one, x - one) == RatFunc(x + one));
    // common factor across numerator and denominator cancels
    CHECK(RatFunc((x + y) * x, (x + y) * y) == RatFunc(x, y));
    // scaling numerator and denominator together is invisible
    CHECK(RatFunc(x.scaled(Scalar(6)), y.scaled(Scalar(6))) == RatFunc(x, y));
}

TEST_CASE("denominators are monic after canonicalization") {
    auto vars = make_vars();
    Polynomial x = Polynomial::variable(vars, 0);
    Polynomial one = Polynomial::constant(vars, Scalar(1));
    RatFunc f(one, x.scaled(Scalar(3)));
    CHECK(f.den().leading_coeff() == Scalar(1));
    CHECK(f.num().is_constant());
    CHECK(f.num().constant_value() == Scalar(Rat(1, 3)));
}

TEST_CASE("field operations are exact on random rational functions") {
    auto vars = make_vars();
    std::mt19937_64 rng(31);
    int tested = 0;
    while (tested < 40) {
        RatFunc a = random_ratfunc(vars, rng), b = random_ratfunc(vars, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        CHECK(a + b - b == a);
        if (!b.is_zero()) {
            CHECK(a / b * b == a);
            CHECK(b * b.inv() == RatFunc::constant(vars, Scalar(1)));
        }
        ++tested;
    }
}

TEST_CASE("derivative satisfies the quotient rule") {
    auto vars = make_vars();
    // one bivariate instance
    RatFunc x = RatFunc::variable(vars, 0);
    RatFunc y = RatFunc::variable(vars, 1);
    RatFunc f = x * x * y + y;
    RatFunc g = x + y;
    for (int v = 0; v < 2; ++v) {
        CHECK((f / g).derivative(v) ==
              (f.derivative(v) * g - f * g.derivative(v)) / (g * g));
    }
    // randomized univariate draws
    std::mt19937_64 rng(32);
    auto univariate = [&vars, &rng]() {
        Polynomial p(vars);
        for (int e = 0; e < 4; ++e)
            p.add_term(e ? Mono{{0, e}} : Mono{}, Scalar(Rat(static_cast<long>(rng() % 19) - 9)));
        return p;
    };
    int tested = 0;
    while (tested < 25) {
        Polynomial gd = univariate();
        if (gd.is_zero()) continue;
        RatFunc fr(univariate());
        RatFunc gr(std::move(gd));
        RatFunc lhs = (fr / gr).derivative(0);
        RatFunc rhs = (fr.derivative(0) * gr - fr * gr.derivative(0)) / (gr * gr);
        CHECK(lhs == rhs);
        ++tested;
    }
}

TEST_CASE("substitution composes and respects arithmetic") {
    auto vars = make_vars();
    RatFunc x = RatFunc::variable(vars, 0);
    RatFunc y = RatFunc::variable(vars, 1);
    RatFunc f = (x * x + y) / (x - y);
    std::map<int, RatFunc> sub{{0, y + RatFunc::constant(vars, Scalar(1))}};
    RatFunc g = f.substitute(sub);
    RatFunc xe = y + RatFunc::constant(vars, Scalar(1));
    CHECK(g == (xe * xe + y) / (xe - y));
}

TEST_CASE("total derivative follows the time table") {
    auto vars = std::make_shared<VarTable>();
    int xv = vars->add("x");
    int xp = vars->add("x'");
    std::shared_ptr<const VarTable> cv = vars;
    std::map<int, Polynomial> table{{xv, Polynomial::variable(cv, xp)}};
    RatFunc f = RatFunc::variable(cv, xv) * RatFunc::variable(cv, xv);
    CHECK(f.derive_along(table) ==
          RatFunc::constant(cv, Scalar(2)) * RatFunc::variable(cv, xv) * RatFunc::variable(cv, xp));
}

TEST_CASE("evaluation at a pole is rejected") {
    auto vars = make_vars();
    RatFunc f = RatFunc::constant(vars, Scalar(1)) / RatFunc::variable(vars, 0);
    std::map<int, Scalar> at{{0, Scalar(0)}, {1, Scalar(0)}};
    CHECK_THROWS_AS(f.eval(at), PoleAtSubstitution);
    at[0] = Scalar(2);
    CHECK(f.eval(at) == Scalar(Rat(1, 2)));
}
