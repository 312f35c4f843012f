#include "supertime/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "supertime/errors.hpp"

namespace supertime {

int VarTable::add(const std::string& name) {
    if (index_.count(name)) throw Error("symbol already registered: " + name);
    int idx = static_cast<int>(names_.size());
    names_.push_back(name);
    index_[name] = idx;
    return idx;
}

int VarTable::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int VarTable::require(const std::string& name) const {
    int idx = find(name);
    if (idx < 0) throw UnknownSymbol(name);
    return idx;
}

int mono_degree(const Mono& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

bool mono_divides(const Mono& a, const Mono& b) {
    size_t j = 0;
    for (const auto& [v, e] : a) {
        while (j < b.size() && b[j].first < v) ++j;
        if (j == b.size() || b[j].first != v || b[j].second < e) return false;
    }
    return true;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

Mono mono_div(const Mono& a, const Mono& b) {
    Mono out;
    size_t j = 0;
    for (const auto& [v, e] : a) {
        int sub = 0;
        while (j < b.size() && b[j].first < v) ++j;
        if (j < b.size() && b[j].first == v) sub = b[j].second;
        if (e - sub < 0) throw Error("monomial division underflow");
        if (e - sub > 0) out.emplace_back(v, e - sub);
    }
    return out;
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    // Lex on exponent vectors over ascending variable index: the monomial with
    // more of the earliest differing variable is the larger one.
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first != b[j].first) {
            // The one owning the smaller variable index has positive exponent there.
            return a[i].first > b[j].first;  // b has the earlier variable -> a < b
        }
        if (a[i].second != b[j].second) return a[i].second < b[j].second;
        ++i;
        ++j;
    }
    return i == a.size() && j != b.size();
}

Polynomial Polynomial::constant(std::shared_ptr<const VarTable> vars, Scalar c) {
    Polynomial p(std::move(vars));
    p.add_term({}, std::move(c));
    return p;
}

Polynomial Polynomial::variable(std::shared_ptr<const VarTable> vars, int idx, int exp) {
    Polynomial p(std::move(vars));
    p.add_term(Mono{{idx, exp}}, Scalar(1));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar Polynomial::constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (!is_constant()) throw Error("polynomial is not constant");
    return terms_.begin()->second;
}

int Polynomial::total_degree() const {
    return terms_.empty() ? 0 : mono_degree(terms_.rbegin()->first);
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            if (v == var) d = std::max(d, static_cast<int>(e));
    return d;
}

bool Polynomial::depends_on(int var) const { return degree_in(var) > 0; }

const Mono& Polynomial::leading_mono() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Scalar& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

void Polynomial::add_term(Mono m, Scalar c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    if (!out.vars_) out.vars_ = b.vars_;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator-(const Polynomial& a) {
    Polynomial out(a.vars_);
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.vars_ ? a.vars_ : b.vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial out(vars_);
    if (c.is_zero()) return out;
    for (const auto& [m, t] : terms_) out.terms_.emplace(m, t * c);
    return out;
}

Polynomial Polynomial::pow(int n) const {
    Polynomial out = Polynomial::constant(vars_, Scalar(1));
    for (int k = 0; k < n; ++k) out *= *this;
    return out;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) {
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i].first != var) continue;
            Mono dm = m;
            Scalar dc = c * Scalar(Rat(m[i].second));
            if (dm[i].second == 1) {
                dm.erase(dm.begin() + static_cast<long>(i));
            } else {
                dm[i].second -= 1;
            }
            out.add_term(std::move(dm), std::move(dc));
        }
    }
    return out;
}

Scalar Polynomial::eval(const std::map<int, Scalar>& bindings) const {
    Scalar out(0);
    for (const auto& [m, c] : terms_) {
        Scalar term = c;
        for (const auto& [v, e] : m) {
            auto it = bindings.find(v);
            if (it == bindings.end()) throw UnknownSymbol(vars_ ? vars_->name(v) : std::to_string(v));
            for (int k = 0; k < e; ++k) term *= it->second;
        }
        out += term;
    }
    return out;
}

Polynomial Polynomial::coeff_of(int var, int k) const {
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) {
        int e = 0;
        Mono rest;
        for (const auto& [v, ex] : m) {
            if (v == var) {
                e = ex;
            } else {
                rest.emplace_back(v, ex);
            }
        }
        if (e == k) out.add_term(std::move(rest), c);
    }
    return out;
}

Polynomial divexact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero();
    Polynomial rem = a;
    Polynomial quot(a.vars() ? a.vars() : b.vars());
    while (!rem.is_zero()) {
        if (!mono_divides(b.leading_mono(), rem.leading_mono()))
            throw Error("inexact polynomial division");
        Mono qm = mono_div(rem.leading_mono(), b.leading_mono());
        Scalar qc = rem.leading_coeff() / b.leading_coeff();
        Polynomial t(quot.vars());
        t.add_term(qm, qc);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

namespace {

int min_variable(const Polynomial& p) {
    int best = -1;
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m)
            if (best < 0 || v < best) best = v;
    return best;
}

// Content w.r.t. `var`: gcd of the univariate coefficients.
Polynomial content_in(const Polynomial& p, int var) {
    Polynomial cont(p.vars());
    for (int k = 0; k <= p.degree_in(var); ++k) {
        Polynomial c = p.coeff_of(var, k);
        if (c.is_zero()) continue;
        cont = cont.is_zero() ? std::move(c) : poly_gcd(cont, c);
        if (cont.is_constant()) break;
    }
    if (cont.is_zero()) return cont;
    return divexact(cont, Polynomial::constant(p.vars(), cont.leading_coeff()));
}

Polynomial primitive_in(const Polynomial& p, int var) {
    Polynomial c = content_in(p, var);
    if (c.is_zero()) return p;
    return divexact(p, c);
}

// Pseudo-remainder in `var`.
Polynomial prem(Polynomial a, const Polynomial& b, int var) {
    int db = b.degree_in(var);
    Polynomial lcb = b.coeff_of(var, db);
    while (!a.is_zero() && a.degree_in(var) >= db) {
        int da = a.degree_in(var);
        Polynomial lca = a.coeff_of(var, da);
        Polynomial shift = Polynomial::variable(a.vars(), var, da - db);
        if (da == db) shift = Polynomial::constant(a.vars(), Scalar(1));
        a = a * lcb - b * lca * shift;
    }
    return a;
}

// Univariate image of p in `var` with the remaining variables bound.
std::vector<Scalar> univariate_image(const Polynomial& p, int var,
                                     const std::map<int, Scalar>& point) {
    std::vector<Scalar> out(static_cast<size_t>(p.degree_in(var)) + 1, Scalar(0));
    for (const auto& [m, c] : p.terms()) {
        Scalar v = c;
        int deg = 0;
        for (const auto& [mv, me] : m) {
            if (mv == var) {
                deg = me;
                continue;
            }
            Scalar base = point.at(mv);
            for (int k = 0; k < me; ++k) v *= base;
        }
        out[static_cast<size_t>(deg)] += v;
    }
    return out;
}

int euclid_gcd_degree(std::vector<Scalar> a, std::vector<Scalar> b) {
    auto trim = [](std::vector<Scalar>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        while (a.size() >= b.size()) {
            Scalar q = a.back() / b.back();
            size_t off = a.size() - b.size();
            for (size_t k = 0; k < b.size(); ++k) a[off + k] -= q * b[k];
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a.empty() ? -1 : static_cast<int>(a.size()) - 1;
}

// Proof of coprimality in `var` by evaluation: if both leading coefficients
// survive a substitution of the other variables, the univariate gcd degree
// bounds the true gcd degree from above; degree 0 certifies a constant gcd.
// Returns false when no non-degenerate point is found (no conclusion).
bool coprime_in(const Polynomial& a, const Polynomial& b, int var) {
    std::map<int, Scalar> point;
    for (const Polynomial* p : {&a, &b})
        for (const auto& [m, c] : p->terms())
            for (const auto& [mv, me] : m)
                if (mv != var) point.emplace(mv, Scalar(0));
    Polynomial lca = a.coeff_of(var, a.degree_in(var));
    Polynomial lcb = b.coeff_of(var, b.degree_in(var));
    uint64_t state = 0x9e3779b97f4a7c15ULL;
    for (int attempt = 0; attempt < 4; ++attempt) {
        for (auto& [v, s] : point) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            s = Scalar(Rat(static_cast<long>(state % 37) - 18, static_cast<long>((state >> 8) % 5) + 1));
        }
        if (lca.eval(point).is_zero() || lcb.eval(point).is_zero()) continue;
        return euclid_gcd_degree(univariate_image(a, var, point),
                                 univariate_image(b, var, point)) == 0;
    }
    return false;
}

}  // namespace

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    auto monic = [](const Polynomial& p) {
        if (p.is_zero()) return p;
        return p.scaled(p.leading_coeff().inv());
    };
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.vars() ? a.vars() : b.vars(), Scalar(1));

    int var = std::min(min_variable(a), min_variable(b));
    if (!a.depends_on(var) || !b.depends_on(var)) {
        // One side is free of the main variable: recurse into the other's content.
        const Polynomial& free_side = a.depends_on(var) ? b : a;
        const Polynomial& dep_side = a.depends_on(var) ? a : b;
        return poly_gcd(content_in(dep_side, var), free_side);
    }

    Polynomial ca = content_in(a, var);
    Polynomial cb = content_in(b, var);
    Polynomial cont = poly_gcd(ca, cb);
    Polynomial pa = divexact(a, ca);
    Polynomial pb = divexact(b, cb);
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    if (coprime_in(pa, pb, var)) return monic(cont);

    Polynomial g;
    while (true) {
        Polynomial r = prem(pa, pb, var);
        if (r.is_zero()) {
            g = pb;
            break;
        }
        if (r.degree_in(var) == 0) {
            g = Polynomial::constant(a.vars(), Scalar(1));
            break;
        }
        pa = std::move(pb);
        pb = primitive_in(r, var);
    }
    return monic(cont * primitive_in(g, var));
}

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

namespace {

// One Q(i,sqrt2) component as a product of syntactic atoms.
void append_component(std::vector<std::string>& parts, const Rat& value, const char* unit) {
    if (value == 0) return;
    std::string s;
    Rat v = value;
    if (v < 0) {
        s += "-";
        v = -v;
    }
    std::string num = to_string(v);
    bool trivial = (v == 1) && unit != nullptr;
    if (!trivial) s += num;
    if (unit != nullptr) {
        if (!trivial) s += "*";
        s += unit;
    }
    parts.push_back(std::move(s));
}

}  // namespace

std::string to_string(const Scalar& s) {
    std::vector<std::string> parts;
    append_component(parts, s.re(), nullptr);
    append_component(parts, s.im(), "i");
    append_component(parts, s.re_s(), "sqrt2");
    if (s.im_s() != 0) {
        std::string p;
        Rat v = s.im_s();
        if (v < 0) {
            p += "-";
            v = -v;
        }
        if (v != 1) p += to_string(v) + "*";
        p += "i*sqrt2";
        parts.push_back(std::move(p));
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t k = 1; k < parts.size(); ++k) {
        if (!parts[k].empty() && parts[k][0] == '-') {
            out += " - " + parts[k].substr(1);
        } else {
            out += " + " + parts[k];
        }
    }
    if (parts.size() > 1) return "(" + out + ")";
    return out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::vector<std::string> parts;
    // Print highest-order terms first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        std::string s = to_string(c);
        for (const auto& [v, e] : m) {
            s += "*" + p.vars()->name(v);
            if (e > 1) s += "^" + std::to_string(e);
        }
        parts.push_back(std::move(s));
    }
    std::string out = parts[0];
    for (size_t k = 1; k < parts.size(); ++k) out += " + " + parts[k];
    return out;
}

}  // namespace supertime
