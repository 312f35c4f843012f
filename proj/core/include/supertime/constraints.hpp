#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "supertime/actions.hpp"
#include "supertime/report.hpp"

namespace supertime {

/// Upper-sign (Plus) or lower-sign (Minus) branch of a +- equation display.
enum class Branch { Plus, Minus };

inline int branch_sign(Branch b) { return b == Branch::Plus ? 1 : -1; }
const char* to_string(Branch b);

/// One scalar equation lhs = rhs over registered even symbols.
struct Constraint {
    std::string tag;
    RatFunc lhs;
    RatFunc rhs;
};

struct ConstraintSystem {
    std::string name;     // equation tag used in check ids
    std::vector<Constraint> equations;
};

/// Closed-form solution family: bindings for the solved symbols in terms of
/// the free ones.
struct SolutionFamily {
    std::string name;
    Branch branch = Branch::Plus;
    bool e_B_nonzero = true;
    std::map<int, RatFunc> bindings;
    std::vector<int> free_symbols;
};

/// Body and soul of the unit-superdeterminant condition be - cd = +-1.
ConstraintSystem cpi_constraints(const Session& s, Branch br);

/// The two closed-form CPI branches (e_B != 0 and e_B = 0).
SolutionFamily cpi_family(const Session& s, Branch br, bool e_B_nonzero);

/// Substitutes the family into the system; pass iff every residual is 0.
ReportEntry verify_family(const Session& s, const SolutionFamily& f, const ConstraintSystem& sys,
                          const std::string& check_id, const std::string& paper_ref);

/// The five combinations of vierbein entries parametrizing the CPI metric.
std::array<RatFunc, 5> pi_parameters(const Session& s);

/// The pi-parametrized metric display with upper (Plus) or lower (Minus)
/// signs, assembled from the given pi values.
SuperMatrix pi_metric(const Session& s, Branch br, const std::array<RatFunc, 5>& pis);

/// Scalars p, q, r extracted from the vierbein: p*thetabar*theta =
/// (alpha beta) D^-1 (gamma; delta), q + r*thetabar*theta = det^-1 D.
struct PQR {
    RatFunc p, q, r;
};

PQR pqr_parameters(const Session& s, const VierbeinParams& v);

/// Full regularized-superdeterminant system: q = +-1/eps,
/// +-(a_S/eps - p/eps + r) = i/(eps^2 hbar), b_B e_B - c_B d_B = +-eps and
/// the soul condition = -eps^2 r.
ConstraintSystem qpi_constraints(const Session& s, const VierbeinParams& v, Branch br);

/// The a_S = alpha = beta = 0 special case as printed: body = -+i/hbar,
/// soul = +-eps.
ConstraintSystem qpi_special_printed(const Session& s, Branch br);

/// The same special case derived from the full system: body = +-eps,
/// soul = -+i/hbar.
ConstraintSystem qpi_special_derived(const Session& s, Branch br);

/// The system the closed-form family actually satisfies: body = +-eps,
/// soul = -+(1 - eps) i/hbar.
ConstraintSystem qpi_special_interpolating(const Session& s, Branch br);

/// The closed-form QPI special-case branches (a_S = alpha = beta = 0 baked
/// into the bindings).
SolutionFamily qpi_family(const Session& s, Branch br, bool e_B_nonzero);

/// Machine-checkable no-go witnesses for the alternative-kinetic-term system.
struct InfeasibilityCertificate {
    std::string narrative;
    bool gamma_delta_body_zero = false;   // witness (a): body(gamma*delta) = 0 != 1
    bool det_body_zero_under_cd_be = false;  // witness (b): be - dc not invertible
    bool relaxed_system_satisfiable = false; // sanity control
};

InfeasibilityCertificate sec4_infeasibility(const Session& s);

/// total minus the number of independent equations; the Jacobian rank is
/// evaluated at seeded random rational points of the family. Throws
/// RankDeficient when the equations are dependent at every sampled point.
int free_parameter_count(const Session& s, const ConstraintSystem& sys, const SolutionFamily& family,
                         const std::vector<int>& parameters, int total, uint64_t seed);

}  // namespace supertime
