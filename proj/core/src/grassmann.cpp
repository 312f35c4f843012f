#include "supertime/grassmann.hpp"

#include <bit>

#include "supertime/errors.hpp"

namespace supertime {

namespace {

int merge_sign(uint64_t a, uint64_t b) {
    // Parity of transpositions needed to merge two ascending generator words.
    int inv = 0;
    uint64_t bb = b;
    while (bb) {
        int pos = std::countr_zero(bb);
        bb &= bb - 1;
        inv += std::popcount(a >> (pos + 1));
    }
    return (inv & 1) ? -1 : 1;
}

}  // namespace

SuperNumber SuperNumber::scalar(const Context* ctx, RatFunc c) {
    SuperNumber out(ctx);
    out.add_term(0, std::move(c));
    return out;
}

SuperNumber SuperNumber::scalar(const Context* ctx, Scalar c) {
    return scalar(ctx, RatFunc::constant(ctx->vars(), std::move(c)));
}

SuperNumber SuperNumber::symbol(const Context* ctx, const std::string& name) {
    return scalar(ctx, RatFunc::variable(ctx->vars(), ctx->symbol(name)));
}

SuperNumber SuperNumber::generator(const Context* ctx, int id) {
    SuperNumber out(ctx);
    out.add_term(uint64_t{1} << id, RatFunc::constant(ctx->vars(), Scalar(1)));
    return out;
}

bool SuperNumber::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

RatFunc SuperNumber::coeff(uint64_t mask) const {
    auto it = terms_.find(mask);
    if (it != terms_.end()) return it->second;
    return RatFunc::constant(ctx_ ? ctx_->vars() : nullptr, Scalar(0));
}

void SuperNumber::add_term(uint64_t mask, RatFunc c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        terms_.emplace(mask, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int SuperNumber::parity() const {
    if (terms_.empty()) return 0;
    int p = std::popcount(terms_.begin()->first) & 1;
    for (const auto& [m, c] : terms_)
        if ((std::popcount(m) & 1) != p) throw ParityMismatch(to_string(*this));
    return p;
}

bool SuperNumber::is_homogeneous() const {
    if (terms_.empty()) return true;
    int p = std::popcount(terms_.begin()->first) & 1;
    for (const auto& [m, c] : terms_)
        if ((std::popcount(m) & 1) != p) return false;
    return true;
}

SuperNumber operator+(const SuperNumber& a, const SuperNumber& b) {
    SuperNumber out = a;
    if (!out.ctx_) out.ctx_ = b.ctx_;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

SuperNumber operator-(const SuperNumber& a, const SuperNumber& b) { return a + (-b); }

SuperNumber operator-(const SuperNumber& a) {
    SuperNumber out(a.ctx_);
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
}

SuperNumber operator*(const SuperNumber& a, const SuperNumber& b) { return gmul(a, b); }

SuperNumber SuperNumber::scaled(const RatFunc& c) const {
    SuperNumber out(ctx_);
    if (c.is_zero()) return out;
    for (const auto& [m, t] : terms_) out.add_term(m, t * c);
    return out;
}

SuperNumber SuperNumber::scaled(const Scalar& c) const {
    return scaled(RatFunc::constant(ctx_ ? ctx_->vars() : nullptr, c));
}

SuperNumber gmul(const SuperNumber& a, const SuperNumber& b) {
    SuperNumber out(a.ctx() ? a.ctx() : b.ctx());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;  // repeated generator
            int sign = merge_sign(ma, mb);
            RatFunc c = ca * cb;
            if (sign < 0) c = -c;
            out.add_term(ma | mb, std::move(c));
        }
    }
    return out;
}

BodySoul body_soul(const SuperNumber& a) {
    BodySoul out;
    out.body = a.coeff(0);
    out.soul = SuperNumber(a.ctx());
    for (const auto& [m, c] : a.terms())
        if (m != 0) out.soul.add_term(m, c);
    return out;
}

SuperNumber ginv(const SuperNumber& a) {
    BodySoul bs = body_soul(a);
    if (bs.body.is_zero()) throw ZeroBody();
    RatFunc binv = bs.body.inv();
    int n = a.ctx() ? a.ctx()->generator_count() : 0;
    // (b + s)^-1 = b^-1 sum_k (-s/b)^k, truncated at the nilpotency degree.
    SuperNumber out = SuperNumber::scalar(a.ctx(), binv);
    SuperNumber ratio = bs.soul.scaled(-binv);
    SuperNumber power = ratio;
    for (int k = 1; k <= n; ++k) {
        if (power.is_zero()) break;
        out += power.scaled(binv);
        power = gmul(power, ratio);
    }
    return out;
}

SuperNumber left_derive(const SuperNumber& a, int gen) {
    uint64_t bit = uint64_t{1} << gen;
    SuperNumber out(a.ctx());
    for (const auto& [m, c] : a.terms()) {
        if (!(m & bit)) continue;
        int below = std::popcount(m & (bit - 1));
        RatFunc nc = (below & 1) ? -c : c;
        out.add_term(m & ~bit, std::move(nc));
    }
    return out;
}

SuperNumber berezin_integrate(const SuperNumber& a, const std::vector<int>& measure) {
    SuperNumber out = a;
    for (auto it = measure.rbegin(); it != measure.rend(); ++it) out = left_derive(out, *it);
    return out;
}

SuperNumber substitute(const SuperNumber& a, const std::map<int, RatFunc>& bindings) {
    SuperNumber out(a.ctx());
    for (const auto& [m, c] : a.terms()) out.add_term(m, c.substitute(bindings));
    return out;
}

SuperNumber time_derivative(const SuperNumber& a) {
    const Context* ctx = a.ctx();
    SuperNumber out(ctx);
    const auto& gen_dt = ctx->generator_time_table();
    for (const auto& [m, c] : a.terms()) {
        out.add_term(m, c.derive_along(ctx->time_table()));
        uint64_t mm = m;
        while (mm) {
            int j = std::countr_zero(mm);
            mm &= mm - 1;
            auto it = gen_dt.find(j);
            if (it == gen_dt.end()) throw Error("no jet prolongation for generator " + ctx->generator_name(j));
            int jp = it->second;
            if (jp < 0) continue;  // coordinate generator, d/dt = 0
            uint64_t bj = uint64_t{1} << j;
            uint64_t bjp = uint64_t{1} << jp;
            if ((m & ~bj) & bjp) continue;  // repeated generator after prolongation
            // Sign from re-sorting the word with g_j replaced in place by g_j'.
            int inv = 0;
            uint64_t rest = m & ~bj;
            while (rest) {
                int k = std::countr_zero(rest);
                rest &= rest - 1;
                if ((k < j && k > jp) || (k > j && k < jp)) ++inv;
            }
            RatFunc nc = (inv & 1) ? -c : c;
            out.add_term((m & ~bj) | bjp, std::move(nc));
        }
    }
    return out;
}

std::string to_string(const SuperNumber& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
        std::string part = to_string(c);
        uint64_t mm = m;
        while (mm) {
            int j = std::countr_zero(mm);
            mm &= mm - 1;
            part += "*" + a.ctx()->generator_name(j);
        }
        if (!first) out += " + ";
        out += part;
        first = false;
    }
    return out;
}

}  // namespace supertime
