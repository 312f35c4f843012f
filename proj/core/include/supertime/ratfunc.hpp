#pragma once

#include <map>
#include <memory>
#include <string>

#include "supertime/polynomial.hpp"

namespace supertime {

/// Multivariate rational function over Q(i, sqrt2), kept in canonical form:
/// gcd-reduced, denominator monic under the session monomial order. Structural
/// equality therefore equals mathematical equality.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(Polynomial num, Polynomial den);
    explicit RatFunc(Polynomial num);

    static RatFunc constant(std::shared_ptr<const VarTable> vars, Scalar c);
    static RatFunc variable(std::shared_ptr<const VarTable> vars, int idx);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const std::shared_ptr<const VarTable>& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Scalar constant_value() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc inv() const;

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Simultaneous substitution of variables by rational functions.
    RatFunc substitute(const std::map<int, RatFunc>& bindings) const;

    /// Partial derivative w.r.t. one variable.
    RatFunc derivative(int var) const;

    /// Total derivative along the table var -> d(var)/dt.
    RatFunc derive_along(const std::map<int, Polynomial>& table) const;

    Scalar eval(const std::map<int, Scalar>& bindings) const;

private:
    void canonicalize();

    Polynomial num_;
    Polynomial den_;
};

std::string to_string(const RatFunc& f);

}  // namespace supertime
