#pragma once

#include <array>

#include "supertime/grassmann.hpp"

namespace supertime {

/// Placement of the grading factor in the vierbein-to-metric map:
/// RightIndex applies (-1)^((1+|B|)|N|) as printed, LeftIndex applies
/// (-1)^((1+|A|)|M|). The verification run determines which one reproduces
/// the pi-parametrized metric.
enum class GradingToggle { RightIndex, LeftIndex };

const char* to_string(GradingToggle t);

/// 3x3 graded matrix over the supertime index order (t, theta, thetabar)
/// with gradings (even, odd, odd).
class SuperMatrix {
public:
    explicit SuperMatrix(const Context* ctx);

    static SuperMatrix identity(const Context* ctx);
    /// The flat Minkowski-like metric: eta_tt = 1, eta_(theta,thetabar) = -1,
    /// eta_(thetabar,theta) = +1.
    static SuperMatrix minkowski(const Context* ctx);

    static int index_parity(int k) { return k == 0 ? 0 : 1; }

    const Context* ctx() const { return ctx_; }
    SuperNumber& at(int r, int c) { return e_[static_cast<size_t>(3 * r + c)]; }
    const SuperNumber& at(int r, int c) const { return e_[static_cast<size_t>(3 * r + c)]; }

    /// Entry (r, c) must be parity-homogeneous with parity |r|+|c| mod 2.
    void check_grading() const;

    friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) { return a.e_ == b.e_; }
    friend bool operator!=(const SuperMatrix& a, const SuperMatrix& b) { return !(a == b); }

private:
    const Context* ctx_;
    std::array<SuperNumber, 9> e_;
};

/// Row-column product with the factor order preserved entrywise.
SuperMatrix smul(const SuperMatrix& a, const SuperMatrix& b);

/// de Witt superdeterminant det(A - B D^-1 C) det^-1(D) for the 1|2 block
/// split; throws SingularOddBlock when det D has zero body.
SuperNumber sdet(const SuperMatrix& m);

/// Ordinary determinant of the even-even 2x2 odd-index block (b e - c d).
SuperNumber odd_block_det(const SuperMatrix& m);

/// Block inverse; exact two-sided inverse. Throws SingularBlock.
SuperMatrix sinv(const SuperMatrix& m);

/// g_MN = E^A_M eta_AB (grading factor) E^B_N. The input holds the frame
/// components as frame(M, A) = E^A_M, i.e. sinv of the matrix whose row A,
/// column M entry is E^M_A.
SuperMatrix metric_from_vierbein(const SuperMatrix& frame, GradingToggle toggle);

SuperMatrix substitute(const SuperMatrix& m, const std::map<int, RatFunc>& bindings);

std::string to_string(const SuperMatrix& m);

}  // namespace supertime
