#include "supertime/constraints.hpp"

#include "supertime/errors.hpp"

#include <random>

namespace supertime {

const char* to_string(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

namespace {

RatFunc rf(const Session& s, int sym) { return s.rat(sym); }
RatFunc rc(const Session& s, Scalar v) { return s.ratnum(std::move(v)); }

RatFunc body_expr(const Session& s) {
    return rf(s, s.b_B) * rf(s, s.e_B) - rf(s, s.c_B) * rf(s, s.d_B);
}

RatFunc soul_expr(const Session& s) {
    return rf(s, s.b_S) * rf(s, s.e_B) + rf(s, s.b_B) * rf(s, s.e_S) -
           rf(s, s.c_S) * rf(s, s.d_B) - rf(s, s.c_B) * rf(s, s.d_S);
}

/// Coefficient of thetabar*theta (= minus the coefficient of the canonical
/// theta*thetabar mask).
RatFunc thetabartheta_coeff(const Session& s, const SuperNumber& f) {
    uint64_t mask = (uint64_t{1} << s.theta) | (uint64_t{1} << s.thetabar);
    return -f.coeff(mask);
}

}  // namespace

ConstraintSystem cpi_constraints(const Session& s, Branch br) {
    Scalar sg(branch_sign(br));
    ConstraintSystem sys{"eq7", {}};
    sys.equations.push_back({"body", body_expr(s), rc(s, sg)});
    sys.equations.push_back({"soul", soul_expr(s), rc(s, Scalar(0))});
    return sys;
}

SolutionFamily cpi_family(const Session& s, Branch br, bool e_B_nonzero) {
    RatFunc sg = rc(s, Scalar(branch_sign(br)));
    SolutionFamily f;
    f.branch = br;
    f.e_B_nonzero = e_B_nonzero;
    if (e_B_nonzero) {
        f.name = "cpi.eB_nonzero";
        f.bindings[s.b_B] = (sg + rf(s, s.c_B) * rf(s, s.d_B)) / rf(s, s.e_B);
        f.bindings[s.b_S] =
            (-sg * rf(s, s.e_S) - rf(s, s.c_B) * rf(s, s.d_B) * rf(s, s.e_S) +
             rf(s, s.c_B) * rf(s, s.d_S) * rf(s, s.e_B) + rf(s, s.c_S) * rf(s, s.d_B) * rf(s, s.e_B)) /
            (rf(s, s.e_B) * rf(s, s.e_B));
        f.free_symbols = {s.c_B, s.c_S, s.d_B, s.d_S, s.e_B, s.e_S};
    } else {
        f.name = "cpi.eB_zero";
        f.bindings[s.e_B] = rc(s, Scalar(0));
        f.bindings[s.c_B] = -sg / rf(s, s.d_B);
        f.bindings[s.c_S] =
            (sg * rf(s, s.d_S) + rf(s, s.b_B) * rf(s, s.d_B) * rf(s, s.e_S)) /
            (rf(s, s.d_B) * rf(s, s.d_B));
        f.free_symbols = {s.b_B, s.b_S, s.d_B, s.d_S, s.e_S};
    }
    return f;
}

ReportEntry verify_family(const Session& s, const SolutionFamily& f, const ConstraintSystem& sys,
                          const std::string& check_id, const std::string& paper_ref) {
    ReportEntry e;
    e.check_id = check_id;
    e.paper_ref = paper_ref;
    e.expected = "residual 0 for every equation";
    bool ok = true;
    std::string actual;
    for (const auto& c : sys.equations) {
        RatFunc residual = (c.lhs - c.rhs).substitute(f.bindings);
        if (!actual.empty()) actual += "; ";
        actual += c.tag + ": " + to_string(residual);
        if (!residual.is_zero()) ok = false;
    }
    e.actual = actual;
    e.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    e.notes = f.name + ", " + std::string(to_string(f.branch)) + " branch vs " + sys.name;
    return e;
}

std::array<RatFunc, 5> pi_parameters(const Session& s) {
    return {rf(s, s.gamma_th) * rf(s, s.e_B) - rf(s, s.delta_th) * rf(s, s.c_B),
            rf(s, s.gamma_thb) * rf(s, s.e_B) - rf(s, s.delta_thb) * rf(s, s.c_B),
            rf(s, s.delta_th) * rf(s, s.b_B) - rf(s, s.gamma_th) * rf(s, s.d_B),
            rf(s, s.delta_thb) * rf(s, s.b_B) - rf(s, s.gamma_thb) * rf(s, s.d_B),
            rf(s, s.gamma_thb) * rf(s, s.delta_th) - rf(s, s.gamma_th) * rf(s, s.delta_thb)};
}

SuperMatrix pi_metric(const Session& s, Branch br, const std::array<RatFunc, 5>& pis) {
    Scalar sg(branch_sign(br));
    SuperNumber th = s.gen(s.theta);
    SuperNumber thb = s.gen(s.thetabar);
    SuperNumber thb_th = gmul(thb, th);
    SuperNumber one = s.num(Scalar(1));

    SuperNumber odd_12 = th.scaled(pis[0]) + thb.scaled(pis[1]);  // pi1 theta + pi2 thetabar
    SuperNumber odd_34 = th.scaled(pis[2]) + thb.scaled(pis[3]);  // pi3 theta + pi4 thetabar
    SuperNumber block = one + thb_th.scaled(pis[4]);              // 1 + pi5 thetabar theta

    SuperMatrix g(s.ctx());
    g.at(0, 0) = one;
    g.at(0, 1) = odd_12.scaled(-sg);
    g.at(0, 2) = odd_34.scaled(-sg);
    g.at(1, 0) = odd_12.scaled(sg);
    g.at(2, 0) = odd_34.scaled(sg);
    g.at(1, 2) = block.scaled(-sg);
    g.at(2, 1) = block.scaled(sg);
    return g;
}

PQR pqr_parameters(const Session& s, const VierbeinParams& v) {
    SuperNumber det = gmul(v.b, v.e) - gmul(v.c, v.d);
    SuperNumber det_inv = ginv(det);

    PQR out;
    out.q = body_soul(det_inv).body;
    out.r = thetabartheta_coeff(s, det_inv);

    // (alpha beta) D^-1 (gamma; delta) with D^-1 = adj(D) det^-1
    SuperNumber inv00 = gmul(v.e, det_inv), inv01 = -gmul(v.c, det_inv);
    SuperNumber inv10 = -gmul(v.d, det_inv), inv11 = gmul(v.b, det_inv);
    SuperNumber row0 = gmul(v.alpha, inv00) + gmul(v.beta, inv10);
    SuperNumber row1 = gmul(v.alpha, inv01) + gmul(v.beta, inv11);
    SuperNumber ptt = gmul(row0, v.gamma) + gmul(row1, v.delta);
    out.p = thetabartheta_coeff(s, ptt);
    return out;
}

ConstraintSystem qpi_constraints(const Session& s, const VierbeinParams& v, Branch br) {
    RatFunc sg = rc(s, Scalar(branch_sign(br)));
    RatFunc eps = rf(s, s.eps);
    RatFunc hb = rf(s, s.hbar);
    RatFunc ih = rc(s, Scalar::i()) / hb;
    PQR pqr = pqr_parameters(s, v);

    ConstraintSystem sys{"eq19-20", {}};
    sys.equations.push_back({"eq19.q", pqr.q, sg / eps});
    sys.equations.push_back(
        {"eq19.soul", sg * (rf(s, s.a_S) / eps - pqr.p / eps + pqr.r), ih / (eps * eps)});
    sys.equations.push_back({"eq20.body", body_expr(s), sg * eps});
    sys.equations.push_back({"eq20.soul", soul_expr(s), -eps * eps * pqr.r});
    return sys;
}

ConstraintSystem qpi_special_printed(const Session& s, Branch br) {
    RatFunc sg = rc(s, Scalar(branch_sign(br)));
    RatFunc ih = rc(s, Scalar::i()) / rf(s, s.hbar);
    ConstraintSystem sys{"eq21.printed", {}};
    sys.equations.push_back({"body", body_expr(s), -sg * ih});
    sys.equations.push_back({"soul", soul_expr(s), sg * rf(s, s.eps)});
    return sys;
}

ConstraintSystem qpi_special_derived(const Session& s, Branch br) {
    RatFunc sg = rc(s, Scalar(branch_sign(br)));
    RatFunc ih = rc(s, Scalar::i()) / rf(s, s.hbar);
    ConstraintSystem sys{"eq21.derived", {}};
    sys.equations.push_back({"body", body_expr(s), sg * rf(s, s.eps)});
    sys.equations.push_back({"soul", soul_expr(s), -sg * ih});
    return sys;
}

ConstraintSystem qpi_special_interpolating(const Session& s, Branch br) {
    RatFunc sg = rc(s, Scalar(branch_sign(br)));
    RatFunc one = rc(s, Scalar(1));
    RatFunc ih = rc(s, Scalar::i()) / rf(s, s.hbar);
    ConstraintSystem sys{"eq21.interpolating", {}};
    sys.equations.push_back({"body", body_expr(s), sg * rf(s, s.eps)});
    sys.equations.push_back({"soul", soul_expr(s), -sg * (one - rf(s, s.eps)) * ih});
    return sys;
}

SolutionFamily qpi_family(const Session& s, Branch br, bool e_B_nonzero) {
    RatFunc sg = rc(s, Scalar(branch_sign(br)));
    RatFunc eps = rf(s, s.eps);
    RatFunc one = rc(s, Scalar(1));
    RatFunc ih = rc(s, Scalar::i()) / rf(s, s.hbar);
    SolutionFamily f;
    f.branch = br;
    f.e_B_nonzero = e_B_nonzero;
    RatFunc zero = rc(s, Scalar(0));
    f.bindings[s.a_S] = zero;
    f.bindings[s.alpha_th] = zero;
    f.bindings[s.alpha_thb] = zero;
    f.bindings[s.beta_th] = zero;
    f.bindings[s.beta_thb] = zero;
    if (e_B_nonzero) {
        f.name = "qpi.eB_nonzero";
        f.bindings[s.b_B] = (sg * eps + rf(s, s.c_B) * rf(s, s.d_B)) / rf(s, s.e_B);
        f.bindings[s.b_S] =
            (-sg * eps * rf(s, s.e_S) - rf(s, s.c_B) * rf(s, s.d_B) * rf(s, s.e_S) +
             rf(s, s.c_B) * rf(s, s.d_S) * rf(s, s.e_B) + rf(s, s.c_S) * rf(s, s.d_B) * rf(s, s.e_B) -
             sg * (one - eps) * ih * rf(s, s.e_B)) /
            (rf(s, s.e_B) * rf(s, s.e_B));
        f.free_symbols = {s.c_B, s.c_S, s.d_B, s.d_S, s.e_B, s.e_S};
    } else {
        f.name = "qpi.eB_zero";
        f.bindings[s.e_B] = zero;
        f.bindings[s.c_B] = -sg * eps / rf(s, s.d_B);
        f.bindings[s.c_S] =
            (sg * eps * rf(s, s.d_S) + rf(s, s.b_B) * rf(s, s.d_B) * rf(s, s.e_S) +
             sg * (one - eps) * ih * rf(s, s.d_B)) /
            (rf(s, s.d_B) * rf(s, s.d_B));
        f.free_symbols = {s.b_B, s.b_S, s.d_B, s.d_S, s.e_S};
    }
    return f;
}

InfeasibilityCertificate sec4_infeasibility(const Session& s) {
    VierbeinParams v = generic_vierbein(s);
    InfeasibilityCertificate cert;

    // Witness (a): gamma*delta is a product of two odd elements, so its body
    // vanishes and it can never equal 1.
    SuperNumber gd = gmul(v.gamma, v.delta);
    cert.gamma_delta_body_zero = body_soul(gd).body.is_zero();

    // Witness (b): under cd - be = 0 (body and soul), be - dc has zero body
    // and a/(be - dc) = 1 has no solution.
    std::map<int, RatFunc> cd_eq_be;
    RatFunc bB = rf(s, s.c_B) * rf(s, s.d_B) / rf(s, s.e_B);
    cd_eq_be[s.b_B] = bB;
    cd_eq_be[s.b_S] =
        (rf(s, s.c_S) * rf(s, s.d_B) + rf(s, s.c_B) * rf(s, s.d_S) - bB * rf(s, s.e_S)) / rf(s, s.e_B);
    SuperNumber be_dc = substitute(gmul(v.b, v.e) - gmul(v.d, v.c), cd_eq_be);
    bool body_zero = body_soul(be_dc).body.is_zero();
    bool inverse_fails = false;
    try {
        ginv(be_dc);
    } catch (const ZeroBody&) {
        inverse_fails = true;
    }
    cert.det_body_zero_under_cd_be = body_zero && inverse_fails;

    // Sanity control: with the cd - be = 0 and gamma*delta = 1 equations
    // removed, gamma = delta = 0 satisfies the remaining two equations.
    std::map<int, RatFunc> relaxed;
    RatFunc zero = rc(s, Scalar(0));
    for (int sym : {s.gamma_th, s.gamma_thb, s.delta_th, s.delta_thb}) relaxed[sym] = zero;
    SuperNumber eq2 = substitute(gmul(v.gamma, v.d) - gmul(v.delta, v.b), relaxed);
    SuperNumber eq3 = substitute(gmul(v.gamma, v.e) - gmul(v.delta, v.c), relaxed);
    cert.relaxed_system_satisfiable = eq2.is_zero() && eq3.is_zero();

    cert.narrative =
        "gamma*delta = 1 forces a zero-body element to equal 1; "
        "independently, cd - be = 0 makes be - dc non-invertible, so a/(be - dc) = 1 "
        "has no solution. Dropping both offending equations leaves a satisfiable system "
        "(gamma = delta = 0).";
    return cert;
}

namespace {

Scalar random_nonzero_rational(std::mt19937_64& rng) {
    // deterministic across platforms: no std distributions
    for (;;) {
        int64_t n = static_cast<int64_t>(rng() % 19) - 9;
        if (n != 0) return Scalar(Rat(n, static_cast<int64_t>(rng() % 4) + 1));
    }
}

int matrix_rank(std::vector<std::vector<Scalar>> m) {
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        Scalar inv = Scalar(1) / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Scalar f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

int free_parameter_count(const Session& s, const ConstraintSystem& sys, const SolutionFamily& family,
                         const std::vector<int>& parameters, int total, uint64_t seed) {
    std::vector<RatFunc> residuals;
    for (const auto& c : sys.equations) residuals.push_back(c.lhs - c.rhs);
    std::vector<std::vector<RatFunc>> jac;
    for (const auto& r : residuals) {
        std::vector<RatFunc> row;
        for (int p : parameters) row.push_back(r.derivative(p));
        jac.push_back(std::move(row));
    }

    std::mt19937_64 rng(seed);
    int best_rank = 0;
    const int samples = 5;
    for (int sample = 0; sample < samples; ++sample) {
        // random rational point on the family: random free values, bound
        // symbols from the bindings
        std::map<int, Scalar> point;
        for (size_t v = 0; v < s.ctx()->vars()->size(); ++v)
            point[static_cast<int>(v)] = random_nonzero_rational(rng);
        bool ok = true;
        try {
            for (const auto& [sym, expr] : family.bindings) point[sym] = expr.eval(point);
            std::vector<std::vector<Scalar>> m;
            for (const auto& row : jac) {
                std::vector<Scalar> out;
                for (const auto& e : row) out.push_back(e.eval(point));
                m.push_back(std::move(out));
            }
            best_rank = std::max(best_rank, matrix_rank(std::move(m)));
        } catch (const PoleAtSubstitution&) {
            ok = false;
        }
        (void)ok;
    }
    if (best_rank < static_cast<int>(sys.equations.size()))
        throw RankDeficient("constraint equations dependent at all sampled points");
    return total - best_rank;
}

}  // namespace supertime
