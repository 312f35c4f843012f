#include "supertime/supermatrix.hpp"

#include "supertime/errors.hpp"

namespace supertime {

const char* to_string(GradingToggle t) {
    return t == GradingToggle::RightIndex ? "right-index" : "left-index";
}

SuperMatrix::SuperMatrix(const Context* ctx) : ctx_(ctx) {
    for (auto& e : e_) e = SuperNumber(ctx);
}

SuperMatrix SuperMatrix::identity(const Context* ctx) {
    SuperMatrix m(ctx);
    for (int k = 0; k < 3; ++k) m.at(k, k) = SuperNumber::scalar(ctx, Scalar(1));
    return m;
}

SuperMatrix SuperMatrix::minkowski(const Context* ctx) {
    SuperMatrix m(ctx);
    m.at(0, 0) = SuperNumber::scalar(ctx, Scalar(1));
    m.at(1, 2) = SuperNumber::scalar(ctx, Scalar(-1));
    m.at(2, 1) = SuperNumber::scalar(ctx, Scalar(1));
    return m;
}

void SuperMatrix::check_grading() const {
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const SuperNumber& v = at(r, c);
            if (v.is_zero()) continue;
            if (!v.is_homogeneous() || v.parity() != ((index_parity(r) + index_parity(c)) & 1))
                throw GradingMismatch("entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
        }
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
    SuperMatrix out(a.ctx_);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
    return out;
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
    SuperMatrix out(a.ctx_);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.at(r, c) = a.at(r, c) - b.at(r, c);
    return out;
}

SuperMatrix smul(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.ctx() != b.ctx()) throw GradingMismatch("matrices from different sessions");
    SuperMatrix out(a.ctx());
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            SuperNumber acc(a.ctx());
            for (int k = 0; k < 3; ++k) acc += gmul(a.at(r, k), b.at(k, c));
            out.at(r, c) = acc;
        }
    return out;
}

SuperNumber odd_block_det(const SuperMatrix& m) {
    return gmul(m.at(1, 1), m.at(2, 2)) - gmul(m.at(1, 2), m.at(2, 1));
}

namespace {

// Inverse of the 2x2 odd-odd block (even, hence commuting, entries).
std::array<SuperNumber, 4> inv2(const SuperMatrix& m) {
    SuperNumber det = odd_block_det(m);
    SuperNumber idet;
    try {
        idet = ginv(det);
    } catch (const ZeroBody&) {
        throw SingularOddBlock();
    }
    return {gmul(idet, m.at(2, 2)), -gmul(idet, m.at(1, 2)),
            -gmul(idet, m.at(2, 1)), gmul(idet, m.at(1, 1))};
}

}  // namespace

SuperNumber sdet(const SuperMatrix& m) {
    auto dinv = inv2(m);
    // B D^-1 C with B = (m01 m02), C = (m10; m20)
    SuperNumber t0 = gmul(m.at(0, 1), dinv[0]) + gmul(m.at(0, 2), dinv[2]);
    SuperNumber t1 = gmul(m.at(0, 1), dinv[1]) + gmul(m.at(0, 2), dinv[3]);
    SuperNumber bdc = gmul(t0, m.at(1, 0)) + gmul(t1, m.at(2, 0));
    SuperNumber core = m.at(0, 0) - bdc;
    SuperNumber idet;
    try {
        idet = ginv(odd_block_det(m));
    } catch (const ZeroBody&) {
        throw SingularOddBlock();
    }
    return gmul(core, idet);
}

SuperMatrix sinv(const SuperMatrix& m) {
    const Context* ctx = m.ctx();
    std::array<SuperNumber, 4> dinv;
    try {
        dinv = inv2(m);
    } catch (const SingularOddBlock&) {
        throw SingularBlock("odd-odd block not invertible");
    }
    SuperNumber a = m.at(0, 0);
    SuperNumber ainv;
    try {
        ainv = ginv(a);
    } catch (const ZeroBody&) {
        throw SingularBlock("even-even block not invertible");
    }
    std::array<SuperNumber, 2> b = {m.at(0, 1), m.at(0, 2)};
    std::array<SuperNumber, 2> c = {m.at(1, 0), m.at(2, 0)};

    // B D^-1 (1x2) and D^-1 C (2x1)
    std::array<SuperNumber, 2> bd = {gmul(b[0], dinv[0]) + gmul(b[1], dinv[2]),
                                     gmul(b[0], dinv[1]) + gmul(b[1], dinv[3])};
    std::array<SuperNumber, 2> dc = {gmul(dinv[0], c[0]) + gmul(dinv[1], c[1]),
                                     gmul(dinv[2], c[0]) + gmul(dinv[3], c[1])};

    SuperNumber one = SuperNumber::scalar(ctx, Scalar(1));
    // X = (1 - A^-1 B D^-1 C)^-1, scalar
    SuperNumber bdc = gmul(bd[0], c[0]) + gmul(bd[1], c[1]);
    SuperNumber x;
    try {
        x = ginv(one - gmul(ainv, bdc));
    } catch (const ZeroBody&) {
        throw SingularBlock("1 - A^-1 B D^-1 C not invertible");
    }

    // Y = (1 - D^-1 C A^-1 B)^-1, 2x2 with even entries
    std::array<SuperNumber, 2> dca = {gmul(dc[0], ainv), gmul(dc[1], ainv)};
    SuperMatrix y_arg(ctx);  // stored in the odd-odd block slots
    y_arg.at(1, 1) = one - gmul(dca[0], b[0]);
    y_arg.at(1, 2) = -gmul(dca[0], b[1]);
    y_arg.at(2, 1) = -gmul(dca[1], b[0]);
    y_arg.at(2, 2) = one - gmul(dca[1], b[1]);
    std::array<SuperNumber, 4> y;
    try {
        y = inv2(y_arg);
    } catch (const SingularOddBlock&) {
        throw SingularBlock("1 - D^-1 C A^-1 B not invertible");
    }

    SuperMatrix out(ctx);
    out.at(0, 0) = gmul(x, ainv);
    out.at(0, 1) = -gmul(x, gmul(ainv, bd[0]));
    out.at(0, 2) = -gmul(x, gmul(ainv, bd[1]));
    std::array<SuperNumber, 2> ydc = {gmul(y[0], dc[0]) + gmul(y[1], dc[1]),
                                      gmul(y[2], dc[0]) + gmul(y[3], dc[1])};
    out.at(1, 0) = -gmul(ydc[0], ainv);
    out.at(2, 0) = -gmul(ydc[1], ainv);
    out.at(1, 1) = gmul(y[0], dinv[0]) + gmul(y[1], dinv[2]);
    out.at(1, 2) = gmul(y[0], dinv[1]) + gmul(y[1], dinv[3]);
    out.at(2, 1) = gmul(y[2], dinv[0]) + gmul(y[3], dinv[2]);
    out.at(2, 2) = gmul(y[2], dinv[1]) + gmul(y[3], dinv[3]);
    return out;
}

SuperMatrix metric_from_vierbein(const SuperMatrix& frame, GradingToggle toggle) {
    frame.check_grading();
    const Context* ctx = frame.ctx();
    SuperMatrix eta = SuperMatrix::minkowski(ctx);
    SuperMatrix g(ctx);
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) {
            SuperNumber acc(ctx);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    if (eta.at(a, b).is_zero()) continue;
                    int expo = toggle == GradingToggle::RightIndex
                                   ? (1 + SuperMatrix::index_parity(b)) * SuperMatrix::index_parity(n)
                                   : (1 + SuperMatrix::index_parity(a)) * SuperMatrix::index_parity(m);
                    SuperNumber term = gmul(gmul(frame.at(m, a), eta.at(a, b)), frame.at(n, b));
                    acc += (expo & 1) ? -term : term;
                }
            g.at(m, n) = acc;
        }
    return g;
}

SuperMatrix substitute(const SuperMatrix& m, const std::map<int, RatFunc>& bindings) {
    SuperMatrix out(m.ctx());
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.at(r, c) = substitute(m.at(r, c), bindings);
    return out;
}

std::string to_string(const SuperMatrix& m) {
    std::string out = "[";
    for (int r = 0; r < 3; ++r) {
        out += "[";
        for (int c = 0; c < 3; ++c) {
            out += to_string(m.at(r, c));
            if (c < 2) out += ", ";
        }
        out += r < 2 ? "], " : "]";
    }
    return out + "]";
}

}  // namespace supertime
