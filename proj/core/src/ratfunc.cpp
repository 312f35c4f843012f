#include "supertime/ratfunc.hpp"

#include "supertime/errors.hpp"

namespace supertime {

RatFunc::RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    canonicalize();
}

RatFunc::RatFunc(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.vars(), Scalar(1))) {
    canonicalize();
}

RatFunc RatFunc::constant(std::shared_ptr<const VarTable> vars, Scalar c) {
    return RatFunc(Polynomial::constant(std::move(vars), std::move(c)));
}

RatFunc RatFunc::variable(std::shared_ptr<const VarTable> vars, int idx) {
    return RatFunc(Polynomial::variable(std::move(vars), idx));
}

bool RatFunc::is_one() const {
    return num_.is_constant() && den_.is_constant() && !num_.is_zero() &&
           num_.constant_value() == den_.constant_value();
}

Scalar RatFunc::constant_value() const {
    return num_.constant_value() / den_.constant_value();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.vars() ? num_.vars() : den_.vars(), Scalar(1));
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    Scalar lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Scalar ilc = lc.inv();
        num_ = num_.scaled(ilc);
        den_ = den_.scaled(ilc);
    }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator-(const RatFunc& a) {
    RatFunc out = a;
    out.num_ = -out.num_;
    return out;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

RatFunc RatFunc::inv() const {
    if (num_.is_zero()) throw DivisionByZero();
    return RatFunc(den_, num_);
}

namespace {

RatFunc subst_poly(const Polynomial& p, const std::map<int, RatFunc>& bindings) {
    RatFunc out = RatFunc::constant(p.vars(), Scalar(0));
    for (const auto& [m, c] : p.terms()) {
        RatFunc term = RatFunc::constant(p.vars(), c);
        for (const auto& [v, e] : m) {
            auto it = bindings.find(v);
            RatFunc base = it != bindings.end() ? it->second : RatFunc::variable(p.vars(), v);
            for (int k = 0; k < e; ++k) term *= base;
        }
        out += term;
    }
    return out;
}

}  // namespace

RatFunc RatFunc::substitute(const std::map<int, RatFunc>& bindings) const {
    RatFunc n = subst_poly(num_, bindings);
    RatFunc d = subst_poly(den_, bindings);
    if (d.is_zero()) throw PoleAtSubstitution(to_string(*this));
    return n / d;
}

RatFunc RatFunc::derivative(int var) const {
    Polynomial dn = num_.derivative(var);
    Polynomial dd = den_.derivative(var);
    return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

RatFunc RatFunc::derive_along(const std::map<int, Polynomial>& table) const {
    Polynomial dn(num_.vars());
    Polynomial dd(den_.vars());
    for (const auto& [v, rate] : table) {
        dn += num_.derivative(v) * rate;
        dd += den_.derivative(v) * rate;
    }
    return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

Scalar RatFunc::eval(const std::map<int, Scalar>& bindings) const {
    Scalar d = den_.eval(bindings);
    if (d.is_zero()) throw PoleAtSubstitution(to_string(*this));
    return num_.eval(bindings) / d;
}

std::string to_string(const RatFunc& f) {
    if (f.den().is_constant() && !f.den().is_zero() && f.den().constant_value().is_one()) {
        if (f.num().terms().size() <= 1) return to_string(f.num());
        return "(" + to_string(f.num()) + ")";
    }
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace supertime
