#include "supertime/superspace.hpp"

#include "supertime/errors.hpp"

namespace supertime {

namespace {

std::string primes(const std::string& base, int k) {
    std::string out = base;
    for (int j = 0; j < k; ++j) out += "'";
    return out;
}

}  // namespace

Session::Session(int max_jet_order) : max_jet_order_(max_jet_order) {
    t = ctx_.add_symbol("t");
    eps = ctx_.add_symbol("eps");
    hbar = ctx_.add_symbol("hbar");
    a_B = ctx_.add_symbol("a_B");
    a_S = ctx_.add_symbol("a_S");
    b_B = ctx_.add_symbol("b_B");
    b_S = ctx_.add_symbol("b_S");
    c_B = ctx_.add_symbol("c_B");
    c_S = ctx_.add_symbol("c_S");
    d_B = ctx_.add_symbol("d_B");
    d_S = ctx_.add_symbol("d_S");
    e_B = ctx_.add_symbol("e_B");
    e_S = ctx_.add_symbol("e_S");
    alpha_th = ctx_.add_symbol("alpha_th");
    alpha_thb = ctx_.add_symbol("alpha_thb");
    beta_th = ctx_.add_symbol("beta_th");
    beta_thb = ctx_.add_symbol("beta_thb");
    gamma_th = ctx_.add_symbol("gamma_th");
    gamma_thb = ctx_.add_symbol("gamma_thb");
    delta_th = ctx_.add_symbol("delta_th");
    delta_thb = ctx_.add_symbol("delta_thb");
    for (int k = 0; k < 5; ++k) pi[k] = ctx_.add_symbol("pi" + std::to_string(k + 1));
    p_sym = ctx_.add_symbol("p");
    q_sym = ctx_.add_symbol("q");
    r_sym = ctx_.add_symbol("r");

    for (int k = 0; k <= max_jet_order + 1; ++k) {
        x_jet.push_back(ctx_.add_symbol(primes("x", k)));
        lambda_jet.push_back(ctx_.add_symbol(primes("lambda", k)));
    }
    for (int k = 0; k < 4; ++k) v_jet.push_back(ctx_.add_symbol(primes("V", k)));

    auto one = Polynomial::constant(ctx_.vars(), Scalar(1));
    ctx_.set_time_derivative(t, one);
    for (size_t k = 0; k + 1 < x_jet.size(); ++k) {
        ctx_.set_time_derivative(x_jet[k], Polynomial::variable(ctx_.vars(), x_jet[k + 1]));
        ctx_.set_time_derivative(lambda_jet[k], Polynomial::variable(ctx_.vars(), lambda_jet[k + 1]));
    }
    Polynomial xp = Polynomial::variable(ctx_.vars(), x_jet[1]);
    for (int k = 0; k < 3; ++k)
        ctx_.set_time_derivative(v_jet[static_cast<size_t>(k)],
                                 Polynomial::variable(ctx_.vars(), v_jet[static_cast<size_t>(k) + 1]) * xp);

    theta = ctx_.add_generator("theta");
    thetabar = ctx_.add_generator("thetabar");
    ctx_.set_generator_derivative(theta, -1);
    ctx_.set_generator_derivative(thetabar, -1);
    for (int k = 0; k <= max_jet_order; ++k) {
        c_jet.push_back(ctx_.add_generator(primes("c", k)));
        cbar_jet.push_back(ctx_.add_generator(primes("cbar", k)));
    }
    for (int k = 0; k < max_jet_order; ++k) {
        ctx_.set_generator_derivative(c_jet[static_cast<size_t>(k)], c_jet[static_cast<size_t>(k) + 1]);
        ctx_.set_generator_derivative(cbar_jet[static_cast<size_t>(k)], cbar_jet[static_cast<size_t>(k) + 1]);
    }
}

DiffOperator make_operator(SuperNumber coeff_t, SuperNumber coeff_theta, SuperNumber coeff_thetabar) {
    DiffOperator op{std::move(coeff_t), std::move(coeff_theta), std::move(coeff_thetabar), 0};
    int parity = -1;
    auto feed = [&parity](const SuperNumber& c, int shift) {
        if (c.is_zero()) return;
        int p = (c.parity() + shift) & 1;
        if (parity < 0) parity = p;
        if (parity != p) throw ParityMismatch("operator coefficients of mixed parity");
    };
    feed(op.coeff_t, 0);
    feed(op.coeff_theta, 1);
    feed(op.coeff_thetabar, 1);
    op.parity = parity < 0 ? 0 : parity;
    return op;
}

SuperNumber apply(const DiffOperator& op, const SuperNumber& f, const Session& s) {
    SuperNumber out = gmul(op.coeff_t, time_derivative(f));
    out += gmul(op.coeff_theta, left_derive(f, s.theta));
    out += gmul(op.coeff_thetabar, left_derive(f, s.thetabar));
    return out;
}

std::vector<DiffOperator> osp_generators(const Session& s) {
    SuperNumber zero(s.ctx());
    SuperNumber th = s.gen(s.theta);
    SuperNumber thb = s.gen(s.thetabar);
    SuperNumber tval = s.sym(s.t);
    Scalar half(Rat(1, 2));
    Scalar inv_sqrt2 = Scalar::sqrt2() * Scalar(Rat(1, 2));  // 1/sqrt2 = sqrt2/2

    std::vector<DiffOperator> xs;
    xs.push_back(make_operator(zero, -thb, zero));                               // X1
    xs.push_back(make_operator(zero, zero, th));                                 // X2
    xs.push_back(make_operator(zero, th.scaled(half), thb.scaled(-half)));       // X3
    xs.push_back(make_operator(thb.scaled(-inv_sqrt2), tval.scaled(inv_sqrt2), zero));  // X4
    xs.push_back(make_operator(th.scaled(inv_sqrt2), zero, tval.scaled(inv_sqrt2)));    // X5
    return xs;
}

SuperNumber invariant_distance(const Session& s) {
    SuperNumber f = SuperNumber::scalar(s.ctx(), RatFunc(Polynomial::variable(s.ctx()->vars(), s.t).pow(2)));
    // -2*thetabar*theta = +2*theta*thetabar
    f += gmul(s.gen(s.theta), s.gen(s.thetabar)).scaled(Scalar(2));
    return f;
}

DiffOperator graded_bracket(const DiffOperator& d1, const DiffOperator& d2, const Session& s) {
    int sign = (d1.parity & d2.parity & 1) ? -1 : 1;
    auto bracket_on = [&](const SuperNumber& f) {
        SuperNumber a = apply(d1, apply(d2, f, s), s);
        SuperNumber b = apply(d2, apply(d1, f, s), s);
        return sign < 0 ? a + b : a - b;
    };

    SuperNumber tval = s.sym(s.t);
    SuperNumber th = s.gen(s.theta);
    SuperNumber thb = s.gen(s.thetabar);
    DiffOperator out = make_operator(bracket_on(tval), bracket_on(th), bracket_on(thb));

    // A first-order candidate reproduces the bracket on coordinates by
    // construction; quadratic monomials detect surviving second-order parts.
    const SuperNumber probes[] = {gmul(tval, tval), gmul(tval, th), gmul(tval, thb), gmul(th, thb)};
    for (const auto& f : probes)
        if (apply(out, f, s) != bracket_on(f)) throw NotFirstOrder();
    return out;
}

SuperNumber superfield(const Session& s) {
    SuperNumber x_field = s.sym(s.x_jet[0]);
    x_field += gmul(s.gen(s.theta), s.gen(s.c_jet[0]));
    x_field += gmul(s.gen(s.thetabar), s.gen(s.cbar_jet[0]));
    // i*thetabar*theta*lambda
    x_field += gmul(s.gen(s.thetabar), s.gen(s.theta)).scaled(s.rat(s.lambda_jet[0]) * s.ratnum(Scalar::i()));
    return x_field;
}

SuperNumber compose_potential(const Session& s, const SuperNumber& x_field) {
    SuperNumber soul = x_field - s.sym(s.x_jet[0]);
    SuperNumber out = s.sym(s.v_jet[0]);
    out += soul.scaled(s.rat(s.v_jet[1]));
    out += gmul(soul, soul).scaled(s.rat(s.v_jet[2]) * s.ratnum(Scalar(Rat(1, 2))));
    return out;
}

}  // namespace supertime
