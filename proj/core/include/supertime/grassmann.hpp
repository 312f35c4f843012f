#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "supertime/context.hpp"
#include "supertime/ratfunc.hpp"

namespace supertime {

/// Element of the finite Grassmann algebra over the session's odd generators,
/// with RatFunc coefficients. Term masks are bitmasks over generator ids; the
/// mask {i1 < i2 < ...} stands for the product g_{i1} g_{i2} ... in ascending
/// id order.
class SuperNumber {
public:
    SuperNumber() = default;
    explicit SuperNumber(const Context* ctx) : ctx_(ctx) {}

    static SuperNumber scalar(const Context* ctx, RatFunc c);
    static SuperNumber scalar(const Context* ctx, Scalar c);
    static SuperNumber symbol(const Context* ctx, const std::string& name);
    static SuperNumber generator(const Context* ctx, int id);

    const Context* ctx() const { return ctx_; }
    const std::map<uint64_t, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    /// Coefficient of a term mask (zero RatFunc when absent).
    RatFunc coeff(uint64_t mask) const;
    void add_term(uint64_t mask, RatFunc c);

    /// 0 even, 1 odd; throws ParityMismatch on inhomogeneous values.
    int parity() const;
    bool is_homogeneous() const;

    friend SuperNumber operator+(const SuperNumber& a, const SuperNumber& b);
    friend SuperNumber operator-(const SuperNumber& a, const SuperNumber& b);
    friend SuperNumber operator-(const SuperNumber& a);
    friend SuperNumber operator*(const SuperNumber& a, const SuperNumber& b);
    SuperNumber& operator+=(const SuperNumber& o) { return *this = *this + o; }
    SuperNumber& operator-=(const SuperNumber& o) { return *this = *this - o; }
    SuperNumber& operator*=(const SuperNumber& o) { return *this = *this * o; }

    SuperNumber scaled(const RatFunc& c) const;
    SuperNumber scaled(const Scalar& c) const;

    friend bool operator==(const SuperNumber& a, const SuperNumber& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SuperNumber& a, const SuperNumber& b) { return !(a == b); }

private:
    const Context* ctx_ = nullptr;
    std::map<uint64_t, RatFunc> terms_;
};

struct BodySoul {
    RatFunc body;
    SuperNumber soul;
};

SuperNumber gmul(const SuperNumber& a, const SuperNumber& b);
BodySoul body_soul(const SuperNumber& a);

/// Exact inverse via the truncated nilpotent series; throws ZeroBody.
SuperNumber ginv(const SuperNumber& a);

/// Left Berezin derivative w.r.t. one generator.
SuperNumber left_derive(const SuperNumber& a, int gen);

/// Berezin integral; the rightmost differential in the written measure is
/// integrated first, so that integrate(f, {theta, thetabar}) of thetabar*theta
/// is +1.
SuperNumber berezin_integrate(const SuperNumber& a, const std::vector<int>& measure);

/// Substitute even symbols in every coefficient.
SuperNumber substitute(const SuperNumber& a, const std::map<int, RatFunc>& bindings);

/// Total time derivative: coefficient chain rule along the session's time
/// table plus jet prolongation of odd generators.
SuperNumber time_derivative(const SuperNumber& a);

std::string to_string(const SuperNumber& a);

}  // namespace supertime
