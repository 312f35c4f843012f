#include "supertime/matrix_rep.hpp"

#include <bit>

#include "supertime/errors.hpp"

namespace supertime {

ScalarMatrix ScalarMatrix::identity(size_t n) {
    ScalarMatrix m(n);
    for (size_t k = 0; k < n; ++k) m.at(k, k) = Scalar(1);
    return m;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
    ScalarMatrix out(a.n_);
    for (size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
    return out;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
    ScalarMatrix out(a.n_);
    for (size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
    return out;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    ScalarMatrix out(a.n_);
    for (size_t r = 0; r < a.n_; ++r)
        for (size_t k = 0; k < a.n_; ++k) {
            const Scalar& av = a.at(r, k);
            if (av.is_zero()) continue;
            for (size_t c = 0; c < a.n_; ++c) {
                const Scalar& bv = b.at(k, c);
                if (bv.is_zero()) continue;
                out.at(r, c) += av * bv;
            }
        }
    return out;
}

namespace {

// Apply the creation operator for generator `id` to occupation state `m`.
// Returns false when the mode is already occupied (result zero).
bool apply_creation(int id, uint64_t& m, int& sign) {
    uint64_t bit = uint64_t{1} << id;
    if (m & bit) return false;
    if (std::popcount(m & (bit - 1)) & 1) sign = -sign;
    m |= bit;
    return true;
}

}  // namespace

ScalarMatrix generator_rep(const Context* ctx, int id) {
    size_t dim = size_t{1} << ctx->generator_count();
    ScalarMatrix out(dim);
    for (uint64_t col = 0; col < dim; ++col) {
        uint64_t m = col;
        int sign = 1;
        if (apply_creation(id, m, sign)) out.at(m, col) = Scalar(sign);
    }
    return out;
}

ScalarMatrix matrix_rep(const SuperNumber& a, const std::map<int, Scalar>& bindings) {
    size_t dim = size_t{1} << a.ctx()->generator_count();
    ScalarMatrix out(dim);
    for (const auto& [mask, coeff] : a.terms()) {
        Scalar c = coeff.eval(bindings);
        if (c.is_zero()) continue;
        // Column walk: act with the word's creation operators right-to-left,
        // i.e. descending generator id, on every occupation state.
        std::vector<int> word;
        uint64_t mm = mask;
        while (mm) {
            int j = std::countr_zero(mm);
            mm &= mm - 1;
            word.push_back(j);
        }
        for (uint64_t col = 0; col < dim; ++col) {
            uint64_t state = col;
            int sign = 1;
            bool alive = true;
            for (auto it = word.rbegin(); it != word.rend(); ++it)
                if (!apply_creation(*it, state, sign)) {
                    alive = false;
                    break;
                }
            if (alive) out.at(state, col) += c * Scalar(sign);
        }
    }
    return out;
}

}  // namespace supertime
