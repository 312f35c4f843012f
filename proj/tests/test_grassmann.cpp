#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "supertime/matrix_rep.hpp"
#include "supertime/superspace.hpp"

using namespace supertime;

namespace {

// Random element of the full Grassmann algebra with rational coefficients,
// occasionally scaled by i or by the even symbol t.
SuperNumber random_super(const Session& s, std::mt19937_64& rng) {
    SuperNumber out(s.ctx());
    int n = s.ctx()->generator_count();
    uint64_t full = (uint64_t{1} << n) - 1;
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < terms; ++k) {
        uint64_t mask = rng() & full;
        Scalar c(Rat(static_cast<long>(rng() % 19) - 9));
        if (rng() % 3 == 0) c = c * Scalar::i();
        RatFunc rc = s.ratnum(c);
        if (rng() % 4 == 0) rc = rc * s.rat(s.t);
        out.add_term(mask, rc);
    }
    return out;
}

}  // namespace

TEST_CASE("generators anticommute and square to zero") {
    Session s(1);
    SuperNumber th = s.gen(s.theta), thb = s.gen(s.thetabar);
    CHECK(gmul(th, th).is_zero());
    CHECK(gmul(thb, thb).is_zero());
    CHECK(gmul(th, thb) + gmul(thb, th) == SuperNumber(s.ctx()));
    CHECK(gmul(th, thb) == -gmul(thb, th));
}

TEST_CASE("multiplication is associative and distributes on random elements") {
    Session s(1);
    std::mt19937_64 rng(41);
    for (int k = 0; k < 60; ++k) {
        SuperNumber a = random_super(s, rng), b = random_super(s, rng), c = random_super(s, rng);
        CHECK(gmul(gmul(a, b), c) == gmul(a, gmul(b, c)));
        CHECK(gmul(a, b + c) == gmul(a, b) + gmul(a, c));
        CHECK(gmul(a + b, c) == gmul(a, c) + gmul(b, c));
    }
}

TEST_CASE("inverse of a two-generator element matches the closed form") {
    Session s(1);
    SuperNumber th = s.gen(s.theta), thb = s.gen(s.thetabar);
    RatFunc f0 = s.rat(s.pi[0]), f1 = s.rat(s.pi[1]), f2 = s.rat(s.pi[2]), f3 = s.rat(s.pi[3]);
    SuperNumber f = SuperNumber::scalar(s.ctx(), f0) + th.scaled(f1) + thb.scaled(f2) +
                    gmul(th, thb).scaled(f3);
    SuperNumber inv = ginv(f);
    SuperNumber expect = SuperNumber::scalar(s.ctx(), f0.inv()) - th.scaled(f1 / (f0 * f0)) -
                         thb.scaled(f2 / (f0 * f0)) - gmul(th, thb).scaled(f3 / (f0 * f0));
    CHECK(inv == expect);
    CHECK(gmul(f, inv) == s.num(Scalar(1)));
    CHECK(gmul(inv, f) == s.num(Scalar(1)));
}

TEST_CASE("inverse is exact two-sided on random invertible elements") {
    Session s(1);
    std::mt19937_64 rng(42);
    int tested = 0;
    while (tested < 50) {
        SuperNumber a = random_super(s, rng);
        if (a.coeff(0).is_zero()) continue;
        SuperNumber inv = ginv(a);
        CHECK(gmul(a, inv) == s.num(Scalar(1)));
        CHECK(gmul(inv, a) == s.num(Scalar(1)));
        ++tested;
    }
}

TEST_CASE("zero-body elements are not invertible") {
    Session s(1);
    CHECK_THROWS_AS(ginv(s.gen(s.theta)), ZeroBody);
    CHECK_THROWS_AS(ginv(SuperNumber(s.ctx())), ZeroBody);
}

TEST_CASE("Berezin integration: rightmost differential acts first") {
    Session s(1);
    SuperNumber th = s.gen(s.theta), thb = s.gen(s.thetabar);
    std::vector<int> measure{s.theta, s.thetabar};
    CHECK(berezin_integrate(gmul(thb, th), measure) == s.num(Scalar(1)));
    CHECK(berezin_integrate(gmul(th, thb), measure) == s.num(Scalar(-1)));
    CHECK(berezin_integrate(s.num(Scalar(1)), measure).is_zero());
    CHECK(berezin_integrate(th, measure).is_zero());
    CHECK(berezin_integrate(thb, measure).is_zero());
}

TEST_CASE("left derivative is the one-variable Berezin integral") {
    Session s(1);
    SuperNumber th = s.gen(s.theta), thb = s.gen(s.thetabar);
    CHECK(left_derive(th, s.theta) == s.num(Scalar(1)));
    CHECK(left_derive(gmul(th, thb), s.theta) == thb);
    CHECK(left_derive(gmul(th, thb), s.thetabar) == -th);
    CHECK(left_derive(s.num(Scalar(1)), s.theta).is_zero());
}

TEST_CASE("time derivative is linear and Leibniz") {
    Session s(1);
    std::mt19937_64 rng(43);
    // restrict to generators that have a jet prolongation: the top-order
    // jets c', cbar' deliberately have no time derivative
    uint64_t allowed = (uint64_t{1} << s.theta) | (uint64_t{1} << s.thetabar) |
                       (uint64_t{1} << s.c_jet[0]) | (uint64_t{1} << s.cbar_jet[0]);
    auto restricted = [&]() {
        SuperNumber draw = random_super(s, rng);
        SuperNumber out(s.ctx());
        for (const auto& [mask, c] : draw.terms()) out.add_term(mask & allowed, c);
        return out;
    };
    for (int k = 0; k < 30; ++k) {
        SuperNumber a = restricted(), b = restricted();
        CHECK(time_derivative(a + b) == time_derivative(a) + time_derivative(b));
        CHECK(time_derivative(gmul(a, b)) ==
              gmul(time_derivative(a), b) + gmul(a, time_derivative(b)));
    }
    // jet prolongation: d/dt c = c', d/dt theta = 0
    CHECK(time_derivative(s.gen(s.c_jet[0])) == s.gen(s.c_jet[1]));
    CHECK(time_derivative(s.gen(s.theta)).is_zero());
    CHECK(time_derivative(s.sym(s.t)) == s.num(Scalar(1)));
    CHECK(time_derivative(s.sym(s.x_jet[0])) == s.sym(s.x_jet[1]));
    // the top-order jet has nowhere to prolong to
    CHECK_THROWS_AS(time_derivative(s.gen(s.c_jet.back())), Error);
}

TEST_CASE("substitution rewrites even symbols inside every coefficient") {
    Session s(1);
    SuperNumber a = s.sym(s.eps) + s.gen(s.theta).scaled(s.rat(s.hbar));
    std::map<int, RatFunc> sub{{s.eps, s.ratnum(Scalar(2))}, {s.hbar, s.rat(s.t)}};
    SuperNumber b = substitute(a, sub);
    CHECK(b == s.num(Scalar(2)) + s.gen(s.theta).scaled(s.rat(s.t)));
}

TEST_CASE("matrix representation is an algebra homomorphism") {
    Session s(0);
    std::mt19937_64 rng(44);
    std::map<int, Scalar> bind;
    for (int k = 0; k < 30; ++k) {
        // fresh generic bindings per pair; only t can appear in coefficients
        bind[s.t] = Scalar(Rat(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 3) + 1));
        SuperNumber a = random_super(s, rng), b = random_super(s, rng);
        ScalarMatrix ra = matrix_rep(a, bind), rb = matrix_rep(b, bind);
        CHECK(matrix_rep(gmul(a, b), bind) == ra * rb);
        CHECK(matrix_rep(a + b, bind) == ra + rb);
    }
    // the generator images themselves anticommute and square to zero
    int n = s.ctx()->generator_count();
    for (int p = 0; p < n; ++p) {
        ScalarMatrix gp = generator_rep(s.ctx(), p);
        CHECK((gp * gp).is_zero());
        for (int q = p + 1; q < n; ++q) {
            ScalarMatrix gq = generator_rep(s.ctx(), q);
            CHECK((gp * gq + gq * gp).is_zero());
        }
    }
}

TEST_CASE("parity detection flags inhomogeneous values") {
    Session s(1);
    CHECK(s.gen(s.theta).parity() == 1);
    CHECK(gmul(s.gen(s.theta), s.gen(s.thetabar)).parity() == 0);
    SuperNumber mixed = s.num(Scalar(1)) + s.gen(s.theta);
    CHECK_FALSE(mixed.is_homogeneous());
    CHECK_THROWS_AS(mixed.parity(), ParityMismatch);
}
