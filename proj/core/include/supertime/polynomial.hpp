#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "supertime/scalar.hpp"

namespace supertime {

/// Registry of the commuting (Grassmann-even) indeterminates of a session.
/// Registration order fixes the monomial order; read-only once values exist.
class VarTable {
public:
    int add(const std::string& name);
    int find(const std::string& name) const;  // -1 when absent
    int require(const std::string& name) const;
    const std::string& name(int idx) const { return names_.at(static_cast<size_t>(idx)); }
    int size() const { return static_cast<int>(names_.size()); }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

/// Sorted (variable, exponent) pairs, exponents > 0. Empty = the unit monomial.
using Mono = std::vector<std::pair<int32_t, int32_t>>;

int mono_degree(const Mono& m);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_div(const Mono& a, const Mono& b);  // requires b | a

/// Graded lexicographic order, earlier-registered variables more significant.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::shared_ptr<const VarTable> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(std::shared_ptr<const VarTable> vars, Scalar c);
    static Polynomial variable(std::shared_ptr<const VarTable> vars, int idx, int exp = 1);

    const std::shared_ptr<const VarTable>& vars() const { return vars_; }
    const std::map<Mono, Scalar, MonoLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value; polynomial must be constant.
    Scalar constant_value() const;
    int total_degree() const;
    int degree_in(int var) const;
    bool depends_on(int var) const;

    const Mono& leading_mono() const;
    const Scalar& leading_coeff() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial scaled(const Scalar& c) const;
    Polynomial pow(int n) const;

    Polynomial derivative(int var) const;
    /// Evaluation; every variable occurring in the polynomial must be bound.
    Scalar eval(const std::map<int, Scalar>& bindings) const;

    /// Coefficient of var^k, viewed as univariate in `var`.
    Polynomial coeff_of(int var, int k) const;

    void add_term(Mono m, Scalar c);  // accumulates, drops zeros

private:
    std::shared_ptr<const VarTable> vars_;
    std::map<Mono, Scalar, MonoLess> terms_;
};

/// Exact quotient a/b; throws Error when b does not divide a.
Polynomial divexact(const Polynomial& a, const Polynomial& b);

/// Monic (leading grlex coefficient 1) greatest common divisor via primitive
/// pseudo-remainder sequences.
Polynomial poly_gcd(Polynomial a, Polynomial b);

std::string to_string(const Polynomial& p);

}  // namespace supertime
