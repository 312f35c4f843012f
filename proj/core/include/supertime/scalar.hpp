#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "supertime/errors.hpp"

namespace supertime {

using Rat = boost::multiprecision::cpp_rational;

/// Element of the field Q(i, sqrt2), the coefficient field of the whole engine.
/// Stored as (re + im*i) + (re_s + im_s*i)*sqrt2 with exact rational components.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rat v) : re_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rat re, Rat im, Rat re_s = 0, Rat im_s = 0)
        : re_(std::move(re)), im_(std::move(im)), re_s_(std::move(re_s)), im_s_(std::move(im_s)) {}

    static Scalar i() { return Scalar(0, 1); }
    static Scalar sqrt2() { return Scalar(0, 0, 1, 0); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }
    const Rat& re_s() const { return re_s_; }
    const Rat& im_s() const { return im_s_; }

    bool is_zero() const { return re_ == 0 && im_ == 0 && re_s_ == 0 && im_s_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0 && re_s_ == 0 && im_s_ == 0; }
    bool is_rational() const { return im_ == 0 && re_s_ == 0 && im_s_ == 0; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ + b.re_, a.im_ + b.im_, a.re_s_ + b.re_s_, a.im_s_ + b.im_s_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ - b.re_, a.im_ - b.im_, a.re_s_ - b.re_s_, a.im_s_ - b.im_s_);
    }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_, -a.re_s_, -a.im_s_); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        // (z1 + w1 s)(z2 + w2 s) = z1 z2 + 2 w1 w2 + (z1 w2 + w1 z2) s,  s^2 = 2
        Rat re = a.re_ * b.re_ - a.im_ * b.im_ + 2 * (a.re_s_ * b.re_s_ - a.im_s_ * b.im_s_);
        Rat im = a.re_ * b.im_ + a.im_ * b.re_ + 2 * (a.re_s_ * b.im_s_ + a.im_s_ * b.re_s_);
        Rat rs = a.re_ * b.re_s_ - a.im_ * b.im_s_ + a.re_s_ * b.re_ - a.im_s_ * b.im_;
        Rat is = a.re_ * b.im_s_ + a.im_ * b.re_s_ + a.re_s_ * b.im_ + a.im_s_ * b.re_;
        return Scalar(std::move(re), std::move(im), std::move(rs), std::move(is));
    }

    Scalar inv() const {
        if (is_zero()) throw DivisionByZero();
        // 1/(z + w s) = (z - w s) / (z^2 - 2 w^2); the denominator is Gaussian rational.
        Scalar conj_s(re_, im_, -re_s_, -im_s_);
        Scalar den = *this * conj_s;  // z^2 - 2 w^2, s-free
        // Gaussian inverse of den = dr + di*i
        Rat norm = den.re_ * den.re_ + den.im_ * den.im_;
        if (norm == 0) throw DivisionByZero();
        Scalar den_inv(den.re_ / norm, -den.im_ / norm);
        return conj_s * den_inv;
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_ && a.re_s_ == b.re_s_ && a.im_s_ == b.im_s_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        if (a.im_ != b.im_) return a.im_ < b.im_;
        if (a.re_s_ != b.re_s_) return a.re_s_ < b.re_s_;
        return a.im_s_ < b.im_s_;
    }

private:
    Rat re_{0};
    Rat im_{0};
    Rat re_s_{0};
    Rat im_s_{0};
};

std::string to_string(const Rat& r);

/// Renders a scalar in parser-compatible syntax, e.g. "1/2", "-3*i", "1/2*sqrt2".
std::string to_string(const Scalar& s);

}  // namespace supertime
