#include "supertime/actions.hpp"

#include "supertime/errors.hpp"

namespace supertime {

namespace {

// body + soul * thetabar*theta
SuperNumber even_entry(const Session& s, int body, int soul) {
    SuperNumber out = s.sym(body);
    out += gmul(s.gen(s.thetabar), s.gen(s.theta)).scaled(s.rat(soul));
    return out;
}

// c_th * theta + c_thb * thetabar
SuperNumber odd_entry(const Session& s, int c_th, int c_thb) {
    return s.gen(s.theta).scaled(s.rat(c_th)) + s.gen(s.thetabar).scaled(s.rat(c_thb));
}

}  // namespace

VierbeinParams generic_vierbein(const Session& s) {
    VierbeinParams v;
    v.a = even_entry(s, s.a_B, s.a_S);
    v.b = even_entry(s, s.b_B, s.b_S);
    v.c = even_entry(s, s.c_B, s.c_S);
    v.d = even_entry(s, s.d_B, s.d_S);
    v.e = even_entry(s, s.e_B, s.e_S);
    v.alpha = odd_entry(s, s.alpha_th, s.alpha_thb);
    v.beta = odd_entry(s, s.beta_th, s.beta_thb);
    v.gamma = odd_entry(s, s.gamma_th, s.gamma_thb);
    v.delta = odd_entry(s, s.delta_th, s.delta_thb);
    return v;
}

VierbeinParams cpi_vierbein(const Session& s, int sign) {
    VierbeinParams v = generic_vierbein(s);
    v.a = s.num(Scalar(sign));
    v.alpha = SuperNumber(s.ctx());
    v.beta = SuperNumber(s.ctx());
    return v;
}

VierbeinParams substitute(const VierbeinParams& v, const std::map<int, RatFunc>& bindings) {
    VierbeinParams out;
    out.a = substitute(v.a, bindings);
    out.alpha = substitute(v.alpha, bindings);
    out.beta = substitute(v.beta, bindings);
    out.gamma = substitute(v.gamma, bindings);
    out.b = substitute(v.b, bindings);
    out.c = substitute(v.c, bindings);
    out.delta = substitute(v.delta, bindings);
    out.d = substitute(v.d, bindings);
    out.e = substitute(v.e, bindings);
    return out;
}

SuperMatrix assemble(const Session& s, const VierbeinParams& v) {
    SuperMatrix m(s.ctx());
    m.at(0, 0) = v.a;
    m.at(0, 1) = v.alpha;
    m.at(0, 2) = v.beta;
    m.at(1, 0) = v.gamma;
    m.at(1, 1) = v.b;
    m.at(1, 2) = v.c;
    m.at(2, 0) = v.delta;
    m.at(2, 1) = v.d;
    m.at(2, 2) = v.e;
    m.check_grading();
    return m;
}

DiffOperator covariant_Dt(const Session& s, const VierbeinParams& v) {
    return make_operator(v.a, v.alpha, v.beta);
}

DiffOperator covariant_Dtheta(const Session& s, const VierbeinParams& v) {
    return make_operator(v.gamma, v.b, v.c);
}

DiffOperator covariant_Dthetabar(const Session& s, const VierbeinParams& v) {
    return make_operator(v.delta, v.d, v.e);
}

KineticExpansion kinetic_DtDt(const Session& s, const VierbeinParams& v, const SuperNumber& x_field) {
    DiffOperator dt = covariant_Dt(s, v);
    SuperNumber dtx_cov = apply(dt, x_field, s);
    SuperNumber full = gmul(dtx_cov, dtx_cov);

    SuperNumber dtx = time_derivative(x_field);
    SuperNumber dthx = left_derive(x_field, s.theta);
    SuperNumber dthbx = left_derive(x_field, s.thetabar);

    SuperNumber printed = gmul(gmul(v.a, v.a), gmul(dtx, dtx));
    printed += gmul(gmul(v.a, v.alpha), gmul(dtx, dthx)).scaled(Scalar(2));
    printed += gmul(gmul(v.a, v.beta), gmul(dtx, dthbx)).scaled(Scalar(2));

    return {full, printed, full - printed};
}

KineticExpansion kinetic_DthetaDthetabar(const Session& s, const VierbeinParams& v,
                                         const SuperNumber& x_field) {
    SuperNumber lhs = apply(covariant_Dtheta(s, v), x_field, s);
    SuperNumber rhs = apply(covariant_Dthetabar(s, v), x_field, s);
    SuperNumber full = gmul(lhs, rhs);

    SuperNumber dtx = time_derivative(x_field);
    SuperNumber dthx = left_derive(x_field, s.theta);
    SuperNumber dthbx = left_derive(x_field, s.thetabar);

    SuperNumber printed = gmul(gmul(v.gamma, v.delta), gmul(dtx, dtx));
    printed += gmul(gmul(v.gamma, v.d) - gmul(v.delta, v.b), gmul(dtx, dthx));
    printed += gmul(gmul(v.gamma, v.e) - gmul(v.delta, v.c), gmul(dtx, dthbx));
    printed += gmul(gmul(v.c, v.d) - gmul(v.b, v.e), gmul(dthbx, dthx));

    return {full, printed, full - printed};
}

SuperNumber build_action(const Session& s, const VierbeinParams& v, const SuperNumber& x_field,
                         const SuperNumber& v_of_x, ActionForm form,
                         const std::optional<SuperNumber>& sdet_override) {
    SuperNumber kinetic = form == ActionForm::DtDt
                              ? kinetic_DtDt(s, v, x_field).full
                              : kinetic_DthetaDthetabar(s, v, x_field).full;
    // E = sdet(E^A_M) = sdet(inverse frame) = 1 / sdet(E^M_A)
    SuperNumber density_factor =
        sdet_override ? *sdet_override : ginv(sdet(assemble(s, v)));
    SuperNumber bracket = kinetic.scaled(Scalar(Rat(1, 2))) - v_of_x;
    return gmul(density_factor, bracket).scaled(Scalar::i());
}

ComponentLagrangian berezin_reduce(const Session& s, const SuperNumber& density) {
    return {berezin_integrate(density, {s.theta, s.thetabar})};
}

ComponentLagrangian qpi_reference(const Session& s) {
    RatFunc half_ab2 = s.rat(s.a_B) * s.rat(s.a_B) * s.ratnum(Scalar(Rat(1, 2)));
    RatFunc xp = s.rat(s.x_jet[1]);
    RatFunc lag = (half_ab2 * xp * xp - s.rat(s.v_jet[0])) / s.rat(s.hbar);
    return {SuperNumber::scalar(s.ctx(), lag)};
}

ComponentLagrangian cpi_reference(const Session& s) {
    SuperNumber x_field = superfield(s);
    SuperNumber dtx = time_derivative(x_field);
    SuperNumber density = gmul(dtx, dtx).scaled(Scalar(Rat(1, 2))) - compose_potential(s, x_field);
    return berezin_reduce(s, density.scaled(Scalar::i()));
}

EpsilonLimits epsilon_limits(const Session& s, const ComponentLagrangian& reduced) {
    std::map<int, RatFunc> at0{{s.eps, RatFunc::constant(s.ctx()->vars(), Scalar(0))}};
    std::map<int, RatFunc> at1{{s.eps, RatFunc::constant(s.ctx()->vars(), Scalar(1))}};
    EpsilonLimits out;
    out.eps0 = {substitute(reduced.value, at0)};
    out.eps1 = {substitute(reduced.value, at1)};
    out.diff_eps0_vs_qpi = out.eps0.value - qpi_reference(s).value;
    out.diff_eps1_vs_cpi = out.eps1.value - cpi_reference(s).value;
    return out;
}

}  // namespace supertime
