#include "supertime/curvature.hpp"

#include "supertime/errors.hpp"

#include <bit>
#include <random>

namespace supertime {

namespace {

int coord_parity(int m) { return m == 0 ? 0 : 1; }

/// Right Berezin derivative: move the generator to the right end of the word.
SuperNumber right_derive(const SuperNumber& a, int gen) {
    SuperNumber out(a.ctx());
    uint64_t bit = uint64_t{1} << gen;
    for (const auto& [mask, c] : a.terms()) {
        if (!(mask & bit)) continue;
        uint64_t above = mask >> (gen + 1);
        int sign = std::popcount(above) & 1 ? -1 : 1;
        out.add_term(mask & ~bit, sign < 0 ? -c : c);
    }
    return out;
}

/// Partial derivative along coordinate m in (t, theta, thetabar).
SuperNumber coord_derive(const Session& s, const SuperNumber& f, int m, int deriv_side) {
    if (m == 0) {
        SuperNumber out(f.ctx());
        for (const auto& [mask, c] : f.terms()) {
            RatFunc d = c.derivative(s.t);
            if (!d.is_zero()) out.add_term(mask, d);
        }
        return out;
    }
    int gen = m == 1 ? s.theta : s.thetabar;
    return deriv_side == 0 ? left_derive(f, gen) : right_derive(f, gen);
}

int sym_factor(const ConventionConfig& conv, int n, int p) {
    int np = coord_parity(n) * coord_parity(p);
    int expo = conv.sym_variant == 0 ? np : coord_parity(n) + coord_parity(p) + np;
    return expo & 1 ? -1 : 1;
}

}  // namespace

SuperMetric make_metric(const Session& s, const SuperMatrix& g) {
    (void)s;
    SuperMetric out{g, SuperMatrix(g.ctx())};
    try {
        out.g_inv = sinv(g);
    } catch (const SingularBlock& e) {
        throw SingularMetric(e.what());
    }
    if (smul(out.g, out.g_inv) != SuperMatrix::identity(g.ctx()) ||
        smul(out.g_inv, out.g) != SuperMatrix::identity(g.ctx()))
        throw SingularMetric("inverse fails the two-sided identity check");
    return out;
}

std::vector<ConventionConfig> ConventionConfig::all() {
    std::vector<ConventionConfig> out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) out.push_back({a, b, c, d});
    return out;
}

std::string to_string(const ConventionConfig& c) {
    std::string out = "sym=";
    out += c.sym_variant == 0 ? "NP" : "skew";
    out += ",deriv=";
    out += c.deriv_side == 0 ? "left" : "right";
    out += ",trace=";
    out += c.ricci_parity == 0 ? "plain" : "parity";
    out += ",sign=";
    out += c.flip_sign == 0 ? "plus" : "minus";
    return out;
}

Christoffel christoffel(const Session& s, const SuperMetric& g, const ConventionConfig& conv) {
    // Symmetrized metric under the config's factor; for the config matching
    // the family's own skew pattern this is the metric itself.
    SuperNumber gsym[3][3];
    for (int n = 0; n < 3; ++n)
        for (int p = 0; p < 3; ++p) {
            SuperNumber v = g.g.at(n, p) + (sym_factor(conv, n, p) < 0 ? -g.g.at(p, n) : g.g.at(p, n));
            gsym[n][p] = v.scaled(Scalar(Rat(1, 2)));
        }

    Scalar half(Rat(1, 2));
    Christoffel gamma;
    for (int q = 0; q < 3; ++q)
        for (int n = 0; n < 3; ++n)
            for (int p = 0; p < 3; ++p) {
                SuperNumber lower = coord_derive(s, g.g.at(q, p), n, conv.deriv_side);
                SuperNumber second = coord_derive(s, g.g.at(q, n), p, conv.deriv_side);
                lower += sym_factor(conv, n, p) < 0 ? -second : second;
                lower -= coord_derive(s, gsym[n][p], q, conv.deriv_side);
                gamma[q][n][p] = lower.scaled(half);
            }

    Christoffel upper;
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
            for (int p = 0; p < 3; ++p) {
                SuperNumber acc(s.ctx());
                for (int q = 0; q < 3; ++q) acc += gmul(g.g_inv.at(m, q), gamma[q][n][p]);
                upper[m][n][p] = acc;
            }
    return upper;
}

bool christoffel_symmetric(const Session& s, const SuperMetric& g, const ConventionConfig& conv) {
    Christoffel gm = christoffel(s, g, conv);
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
            for (int p = 0; p < 3; ++p) {
                SuperNumber mirror =
                    sym_factor(conv, n, p) < 0 ? -gm[m][p][n] : gm[m][p][n];
                if (gm[m][n][p] != mirror) return false;
            }
    return true;
}

CurvatureResult ricci_scalar(const Session& s, const SuperMetric& g, const ConventionConfig& conv) {
    Christoffel gm = christoffel(s, g, conv);

    // R^M_{NPQ} = d_P Gamma^M_{QN} - d_Q Gamma^M_{PN}
    //           + Gamma^M_{P Lam} Gamma^Lam_{QN} - Gamma^M_{Q Lam} Gamma^Lam_{PN}
    auto riemann = [&](int m, int n, int p, int q) {
        SuperNumber out = coord_derive(s, gm[m][q][n], p, conv.deriv_side);
        out -= coord_derive(s, gm[m][p][n], q, conv.deriv_side);
        for (int lam = 0; lam < 3; ++lam) {
            out += gmul(gm[m][p][lam], gm[lam][q][n]);
            out -= gmul(gm[m][q][lam], gm[lam][p][n]);
        }
        return out;
    };

    // Ricci: R_{NQ} = sum_M (factor) R^M_{NMQ}
    SuperNumber ricci[3][3];
    for (int n = 0; n < 3; ++n)
        for (int q = 0; q < 3; ++q) {
            SuperNumber acc(s.ctx());
            for (int m = 0; m < 3; ++m) {
                SuperNumber term = riemann(m, n, m, q);
                if (conv.ricci_parity == 1 && coord_parity(m) == 1) term = -term;
                acc += term;
            }
            ricci[n][q] = acc;
        }

    SuperNumber r(s.ctx());
    for (int n = 0; n < 3; ++n)
        for (int q = 0; q < 3; ++q) r += gmul(g.g_inv.at(n, q), ricci[q][n]);
    if (conv.flip_sign == 1) r = -r;

    return {r, body_soul(r).body, conv};
}

RatFunc reference_ricci_body(const Session& s, Branch br) {
    RatFunc p1 = s.rat(s.pi[0]), p2 = s.rat(s.pi[1]), p3 = s.rat(s.pi[2]);
    RatFunc p4 = s.rat(s.pi[3]), p5 = s.rat(s.pi[4]);
    RatFunc half = s.ratnum(Scalar(Rat(1, 2)));
    RatFunc out = -half * p2 * p2 - half * p3 * p3 + s.ratnum(Scalar(5)) * p2 * p3;
    out -= p2 * p2 * p5;
    out -= p3 * p3 * p5;
    out -= s.ratnum(Scalar(2)) * p2 * p3 * p5;
    out -= s.ratnum(Scalar(4)) * p1 * p4;
    out += s.ratnum(Scalar(4)) * p1 * p4 * p5;
    out += s.ratnum(Scalar(6 * branch_sign(br))) * p5;
    return out;
}

std::vector<ScanRow> convention_scan(const Session& s, Branch br, int samples, uint64_t seed) {
    std::array<RatFunc, 5> pis = {s.rat(s.pi[0]), s.rat(s.pi[1]), s.rat(s.pi[2]), s.rat(s.pi[3]),
                                  s.rat(s.pi[4])};
    SuperMetric g = make_metric(s, pi_metric(s, br, pis));
    RatFunc target = reference_ricci_body(s, br);
    RatFunc target_other = reference_ricci_body(s, br == Branch::Plus ? Branch::Minus : Branch::Plus);

    std::mt19937_64 rng(seed);
    std::vector<ScanRow> rows;
    for (const auto& conv : ConventionConfig::all()) {
        CurvatureResult res = ricci_scalar(s, g, conv);
        ScanRow row;
        row.config = conv;
        row.branch = br;
        row.total_samples = samples;

        RatFunc residual = res.R_body - target;
        if (residual.is_zero())
            row.verdict = "exact-match";
        else if ((res.R_body + target).is_zero())
            row.verdict = "near-miss-sign";
        else if ((res.R_body - target_other).is_zero())
            row.verdict = "near-miss-branch";
        else {
            row.verdict = "residual";
            row.residual = to_string(residual);
        }

        for (int k = 0; k < samples; ++k) {
            std::map<int, Scalar> point;
            for (size_t v = 0; v < s.ctx()->vars()->size(); ++v)
                point[static_cast<int>(v)] =
                    Scalar(Rat(static_cast<int64_t>(rng() % 19) - 9, static_cast<int64_t>(rng() % 4) + 1));
            try {
                if (res.R_body.eval(point) == target.eval(point)) ++row.matching_samples;
            } catch (const PoleAtSubstitution&) {
                // sampled point hits a pole of the engine expression; skip
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace supertime
