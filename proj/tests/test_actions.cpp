#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supertime/actions.hpp"
#include "supertime/constraints.hpp"

using namespace supertime;

TEST_CASE("assembled vierbein is grading-consistent and laid out row-major") {
    Session s(1);
    VierbeinParams v = generic_vierbein(s);
    SuperMatrix m = assemble(s, v);  // throws on bad grading
    CHECK(m.at(0, 0) == v.a);
    CHECK(m.at(0, 1) == v.alpha);
    CHECK(m.at(0, 2) == v.beta);
    CHECK(m.at(1, 0) == v.gamma);
    CHECK(m.at(1, 1) == v.b);
    CHECK(m.at(2, 2) == v.e);
    CHECK(v.a.parity() == 0);
    CHECK(v.alpha.parity() == 1);
}

TEST_CASE("special vierbein pins the time-time entry to the branch sign") {
    Session s(1);
    CHECK(cpi_vierbein(s, +1).a == s.num(Scalar(1)));
    CHECK(cpi_vierbein(s, -1).a == s.num(Scalar(-1)));
    CHECK(cpi_vierbein(s, +1).alpha.is_zero());
    CHECK(cpi_vierbein(s, +1).beta.is_zero());
}

TEST_CASE("covariant derivatives act as advertised on the coordinates") {
    Session s(1);
    VierbeinParams v = generic_vierbein(s);
    DiffOperator dt = covariant_Dt(s, v);
    DiffOperator dth = covariant_Dtheta(s, v);
    CHECK(apply(dt, s.sym(s.t), s) == v.a);
    CHECK(apply(dt, s.gen(s.theta), s) == v.alpha);
    CHECK(apply(dth, s.sym(s.t), s) == v.gamma);
    CHECK(apply(dth, s.gen(s.thetabar), s) == v.c);
}

TEST_CASE("time-time kinetic closed form is exact when alpha = beta = 0") {
    Session s(1);
    SuperNumber x_field = superfield(s);
    for (int sign : {+1, -1}) {
        KineticExpansion k = kinetic_DtDt(s, cpi_vierbein(s, sign), x_field);
        CHECK(k.residual.is_zero());
        CHECK(k.full == k.printed);
        // a = +-1 makes the kinetic term literally dtX dtX
        SuperNumber dtx = time_derivative(x_field);
        CHECK(k.full == gmul(dtx, dtx));
    }
}

TEST_CASE("odd-odd kinetic closed form is exact for the fully generic vierbein") {
    Session s(1);
    SuperNumber x_field = superfield(s);
    KineticExpansion k = kinetic_DthetaDthetabar(s, generic_vierbein(s), x_field);
    CHECK(k.residual.is_zero());
    CHECK(k.full == k.printed);
}

TEST_CASE("kinetic decomposition always satisfies full = printed + residual") {
    Session s(1);
    SuperNumber x_field = superfield(s);
    KineticExpansion k = kinetic_DtDt(s, generic_vierbein(s), x_field);
    CHECK(k.full == k.printed + k.residual);
}

TEST_CASE("regularized density factor inverts to the closed form") {
    Session s(1);
    SuperNumber thbth = gmul(s.gen(s.thetabar), s.gen(s.theta));
    RatFunc ih = s.ratnum(Scalar::i()) / s.rat(s.hbar);
    SuperNumber reg = s.sym(s.eps) - thbth.scaled(ih);
    SuperNumber inv = ginv(reg);
    RatFunc eps = s.rat(s.eps);
    SuperNumber expect = SuperNumber::scalar(s.ctx(), eps.inv()) + thbth.scaled(ih / (eps * eps));
    CHECK(inv == expect);
    CHECK(gmul(reg, inv) == s.num(Scalar(1)));
    CHECK(gmul(inv, reg) == s.num(Scalar(1)));
}

TEST_CASE("Berezin reduction leaves a component Lagrangian free of odd coordinates") {
    Session s(1);
    SuperNumber x_field = superfield(s);
    SuperNumber density = build_action(s, generic_vierbein(s), x_field,
                                       compose_potential(s, x_field), ActionForm::DthetaDthetabar,
                                       s.num(Scalar(1)));
    ComponentLagrangian red = berezin_reduce(s, density);
    uint64_t odd = (uint64_t{1} << s.theta) | (uint64_t{1} << s.thetabar);
    for (const auto& [mask, c] : red.value.terms()) CHECK((mask & odd) == 0);
}

TEST_CASE("unit-superdeterminant family reproduces the reference component Lagrangian") {
    Session s(1);
    SuperNumber x_field = superfield(s);
    SuperNumber vx = compose_potential(s, x_field);
    for (Branch br : {Branch::Plus, Branch::Minus}) {
        SolutionFamily fam = cpi_family(s, br, true);
        VierbeinParams v = substitute(cpi_vierbein(s, branch_sign(br)), fam.bindings);
        CHECK(sdet(assemble(s, v)) == s.num(Scalar(1)));
        SuperNumber density = build_action(s, v, x_field, vx, ActionForm::DtDt);
        CHECK(berezin_reduce(s, density).value == cpi_reference(s).value);
    }
}

TEST_CASE("reference weights have the advertised closed forms") {
    Session s(1);
    RatFunc xp = s.rat(s.x_jet[1]);
    RatFunc ab = s.rat(s.a_B);
    RatFunc expect = (s.ratnum(Scalar(Rat(1, 2))) * ab * ab * xp * xp - s.rat(s.v_jet[0])) /
                     s.rat(s.hbar);
    CHECK(qpi_reference(s).value == SuperNumber::scalar(s.ctx(), expect));
}
