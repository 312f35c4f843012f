#pragma once

#include <memory>
#include <vector>

#include "supertime/grassmann.hpp"

namespace supertime {

/// One fully-registered supertime session: even symbols (t, eps, hbar, the
/// vierbein components, pi parameters, x/lambda/V jets) and odd generators
/// (theta, thetabar, c/cbar jets) with their time tables.
///
/// Generator order is theta, thetabar, then field jets; the order only fixes
/// canonical term signs.
class Session {
public:
    explicit Session(int max_jet_order = 3);
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    const Context* ctx() const { return &ctx_; }

    // even symbols
    int t, eps, hbar;
    int a_B, a_S, b_B, b_S, c_B, c_S, d_B, d_S, e_B, e_S;
    int alpha_th, alpha_thb, beta_th, beta_thb, gamma_th, gamma_thb, delta_th, delta_thb;
    int pi[5];
    int p_sym, q_sym, r_sym;
    std::vector<int> x_jet, lambda_jet, v_jet;  // x, x', ...; V, V', V'', V'''

    // odd generators
    int theta, thetabar;
    std::vector<int> c_jet, cbar_jet;

    int max_jet_order() const { return max_jet_order_; }

    SuperNumber sym(int var) const { return SuperNumber::scalar(ctx(), RatFunc::variable(ctx_.vars(), var)); }
    SuperNumber gen(int id) const { return SuperNumber::generator(ctx(), id); }
    SuperNumber num(Scalar s) const { return SuperNumber::scalar(ctx(), std::move(s)); }
    RatFunc rat(int var) const { return RatFunc::variable(ctx_.vars(), var); }
    RatFunc ratnum(Scalar s) const { return RatFunc::constant(ctx_.vars(), std::move(s)); }

private:
    Context ctx_;
    int max_jet_order_;
};

/// First-order super-differential operator c_t d/dt + c_th d/dtheta +
/// c_thb d/dthetabar with parity-homogeneous SuperFunction coefficients.
struct DiffOperator {
    SuperNumber coeff_t;
    SuperNumber coeff_theta;
    SuperNumber coeff_thetabar;
    int parity = 0;
};

/// Validates coefficient parities and computes the operator parity.
DiffOperator make_operator(SuperNumber coeff_t, SuperNumber coeff_theta, SuperNumber coeff_thetabar);

SuperNumber apply(const DiffOperator& op, const SuperNumber& f, const Session& s);

/// The five OSp(1,2) generators X1..X5 preserving t^2 - 2*thetabar*theta.
std::vector<DiffOperator> osp_generators(const Session& s);

/// F = t^2 - 2*thetabar*theta.
SuperNumber invariant_distance(const Session& s);

/// [D1, D2] = D1 D2 - (-1)^(|D1||D2|) D2 D1 reduced to first order; throws
/// NotFirstOrder when the second-order parts fail to cancel.
DiffOperator graded_bracket(const DiffOperator& d1, const DiffOperator& d2, const Session& s);

/// X = x + theta*c + thetabar*cbar + i*thetabar*theta*lambda.
SuperNumber superfield(const Session& s);

/// V(X) = V + (X - x) V' + (X - x)^2 V''/2; exact because (X - x)^3 = 0.
SuperNumber compose_potential(const Session& s, const SuperNumber& x_field);

}  // namespace supertime
