#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "supertime/constraints.hpp"

namespace supertime {

/// Metric with cached two-sided inverse.
struct SuperMetric {
    SuperMatrix g;
    SuperMatrix g_inv;
};

/// Computes and validates the inverse; throws SingularMetric when the metric
/// has no invertible body.
SuperMetric make_metric(const Session& s, const SuperMatrix& g);

/// Binary sign-placement choices in the graded Levi-Civita construction.
/// 16 configurations in total.
struct ConventionConfig {
    /// 0: symmetrization factor (-1)^(|N||P|); 1: the metric-skew factor
    /// (-1)^(|N|+|P|+|N||P|).
    int sym_variant = 0;
    /// 0: left odd derivatives; 1: right odd derivatives.
    int deriv_side = 0;
    /// 0: plain Ricci trace; 1: trace weighted by (-1)^(|M|).
    int ricci_parity = 0;
    /// 0: R as contracted; 1: overall sign flipped.
    int flip_sign = 0;

    static std::vector<ConventionConfig> all();
};

std::string to_string(const ConventionConfig& c);

/// Christoffel symbols Gamma^M_NP, graded-symmetric in the lower pair under
/// the config's symmetrization factor.
using Christoffel = std::array<std::array<std::array<SuperNumber, 3>, 3>, 3>;

Christoffel christoffel(const Session& s, const SuperMetric& g, const ConventionConfig& conv);

/// Gamma^M_NP = sigma(N,P) Gamma^M_PN under the config's symmetrization
/// factor, checked symbolically.
bool christoffel_symmetric(const Session& s, const SuperMetric& g, const ConventionConfig& conv);

struct CurvatureResult {
    SuperNumber R;
    RatFunc R_body;
    ConventionConfig config;
};

CurvatureResult ricci_scalar(const Session& s, const SuperMetric& g, const ConventionConfig& conv);

/// The reference target polynomial for the body of the Ricci scalar, in the
/// session's pi symbols; the +- branch enters through the 6 pi5 term.
RatFunc reference_ricci_body(const Session& s, Branch br);

struct ScanRow {
    ConventionConfig config;
    Branch branch;
    std::string verdict;   // exact-match | near-miss-sign | near-miss-branch | residual
    std::string residual;  // canonical residual polynomial (empty when exact)
    int matching_samples = 0;
    int total_samples = 0;
};

/// Evaluates every convention on the pi-parametrized metric family against
/// the reference polynomial, per branch, at seeded random rational pi points
/// followed by exact symbolic subtraction.
std::vector<ScanRow> convention_scan(const Session& s, Branch br, int samples, uint64_t seed);

}  // namespace supertime
