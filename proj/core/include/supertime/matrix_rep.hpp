#pragma once

#include <map>
#include <vector>

#include "supertime/grassmann.hpp"

namespace supertime {

/// Dense square matrix over Q(i, sqrt2); only as large as the independent
/// fermionic-representation oracle needs (2^n for n generators).
class ScalarMatrix {
public:
    explicit ScalarMatrix(size_t n) : n_(n), data_(n * n, Scalar(0)) {}

    static ScalarMatrix identity(size_t n);

    size_t size() const { return n_; }
    Scalar& at(size_t r, size_t c) { return data_[r * n_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * n_ + c]; }

    bool is_zero() const;
    friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
    friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }
    friend bool operator!=(const ScalarMatrix& a, const ScalarMatrix& b) { return !(a == b); }

private:
    size_t n_;
    std::vector<Scalar> data_;
};

/// Jordan-Wigner image of one generator: a nilpotent raising block with a
/// sign string on earlier slots. The assignment extends to an algebra
/// homomorphism on the whole Grassmann algebra.
ScalarMatrix generator_rep(const Context* ctx, int id);

/// Representation of a SuperNumber with its even symbols bound to exact
/// scalars. Throws PoleAtSubstitution when a coefficient denominator vanishes.
ScalarMatrix matrix_rep(const SuperNumber& a, const std::map<int, Scalar>& bindings);

}  // namespace supertime
