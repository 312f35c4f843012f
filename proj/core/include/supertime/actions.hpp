#pragma once

#include <optional>

#include "supertime/supermatrix.hpp"
#include "supertime/superspace.hpp"

namespace supertime {

/// The nine entries of the vierbein matrix
///
///   E^M_A = [ a  alpha  beta  ]   (row t)
///           [ gamma  b  c     ]   (row theta)
///           [ delta  d  e     ]   (row thetabar)
///
/// a..e even, alpha..delta odd (each odd entry a combination of theta and
/// thetabar; each even entry body + soul * thetabar*theta).
struct VierbeinParams {
    SuperNumber a, alpha, beta;
    SuperNumber gamma, b, c;
    SuperNumber delta, d, e;
};

/// Fully generic vierbein: a = a_B + a_S*thetabar*theta, ...,
/// alpha = alpha_th*theta + alpha_thb*thetabar, ...
VierbeinParams generic_vierbein(const Session& s);

/// The six-entry family with a = sign (+1/-1), alpha = beta = 0 and the
/// remaining entries generic.
VierbeinParams cpi_vierbein(const Session& s, int sign);

/// Entrywise substitution of even symbols.
VierbeinParams substitute(const VierbeinParams& v, const std::map<int, RatFunc>& bindings);

/// The E^M_A matrix: row A in (t, theta, thetabar) order, column M likewise,
/// entry (A, M) = E^M_A. Grading-checked.
SuperMatrix assemble(const Session& s, const VierbeinParams& v);

/// D_t = E^M_t d_M = a d_t + alpha d_theta + beta d_thetabar.
DiffOperator covariant_Dt(const Session& s, const VierbeinParams& v);
/// D_theta = gamma d_t + b d_theta + c d_thetabar.
DiffOperator covariant_Dtheta(const Session& s, const VierbeinParams& v);
/// D_thetabar = delta d_t + d d_theta + e d_thetabar.
DiffOperator covariant_Dthetabar(const Session& s, const VierbeinParams& v);

/// A kinetic term together with its advertised closed form: `full` is the
/// product of the two covariant derivatives of X, `printed` the expansion in
/// vierbein entries, `residual` their difference (zero when the closed form
/// is exact).
struct KineticExpansion {
    SuperNumber full;
    SuperNumber printed;
    SuperNumber residual;
};

/// D_tX D_tX vs a^2 dtX dtX + 2 a alpha dtX dthX + 2 a beta dtX dthbX.
KineticExpansion kinetic_DtDt(const Session& s, const VierbeinParams& v, const SuperNumber& x_field);

/// D_thetaX D_thetabarX vs gamma delta (dtX)^2 + (gamma d - delta b) dtX dthX
/// + (gamma e - delta c) dtX dthbX + (cd - be) dthbX dthX.
KineticExpansion kinetic_DthetaDthetabar(const Session& s, const VierbeinParams& v, const SuperNumber& x_field);

enum class ActionForm { DtDt, DthetaDthetabar };

/// Pre-integration superdensity i * E * [1/2 * kinetic - V(X)], where
/// E = sdet(E^A_M) (the inverse frame), or sdet_override when given.
/// V(X) is passed already composed on the superfield.
SuperNumber build_action(const Session& s, const VierbeinParams& v, const SuperNumber& x_field,
                         const SuperNumber& v_of_x, ActionForm form,
                         const std::optional<SuperNumber>& sdet_override = std::nullopt);

/// Component Lagrangian: free of theta/thetabar, lives in the jets and t.
struct ComponentLagrangian {
    SuperNumber value;
};

/// Integral dtheta dthetabar of the density (rightmost differential first).
ComponentLagrangian berezin_reduce(const Session& s, const SuperNumber& density);

/// The QPI weight (1/hbar)[1/2 a_B^2 x' x' - V].
ComponentLagrangian qpi_reference(const Session& s);

/// The CPI component Lagrangian: Berezin reduction of the density
/// i [1/2 dtX dtX - V(X)] with a = 1 and unit superdeterminant.
ComponentLagrangian cpi_reference(const Session& s);

struct EpsilonLimits {
    ComponentLagrangian eps0;
    ComponentLagrangian eps1;
    SuperNumber diff_eps0_vs_qpi;  // eps0 - QPI reference
    SuperNumber diff_eps1_vs_cpi;  // eps1 - CPI reference
};

/// Exact substitution eps -> 0 and eps -> 1 into a reduced Lagrangian, with
/// structured diffs against the canonical QPI and CPI weights. Throws
/// PoleAtSubstitution when a non-removable pole survives.
EpsilonLimits epsilon_limits(const Session& s, const ComponentLagrangian& reduced);

}  // namespace supertime
