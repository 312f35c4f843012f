#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "supertime/supermatrix.hpp"
#include "supertime/superspace.hpp"

using namespace supertime;

namespace {

RatFunc rnd_rat(const Session& s, std::mt19937_64& rng) {
    return s.ratnum(Scalar(Rat(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1)));
}

SuperNumber rnd_even(const Session& s, std::mt19937_64& rng) {
    SuperNumber out = SuperNumber::scalar(s.ctx(), rnd_rat(s, rng));
    out += gmul(s.gen(s.thetabar), s.gen(s.theta)).scaled(rnd_rat(s, rng));
    return out;
}

SuperNumber rnd_odd(const Session& s, std::mt19937_64& rng) {
    return s.gen(s.theta).scaled(rnd_rat(s, rng)) + s.gen(s.thetabar).scaled(rnd_rat(s, rng));
}

// Random graded 3x3 matrix, resampled until it is invertible.
SuperMatrix random_invertible(const Session& s, std::mt19937_64& rng) {
    for (;;) {
        SuperMatrix m(s.ctx());
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                m.at(r, c) = (SuperMatrix::index_parity(r) ^ SuperMatrix::index_parity(c))
                                 ? rnd_odd(s, rng)
                                 : rnd_even(s, rng);
        try {
            m.check_grading();
            (void)sdet(m);
            (void)sinv(m);
            return m;
        } catch (const Error&) {
            // singular sample; draw again
        }
    }
}

}  // namespace

TEST_CASE("identity and flat metric have unit superdeterminant magnitude") {
    Session s(1);
    SuperMatrix id = SuperMatrix::identity(s.ctx());
    CHECK(sdet(id) == s.num(Scalar(1)));
    CHECK(sinv(id) == id);
    SuperMatrix eta = SuperMatrix::minkowski(s.ctx());
    CHECK(eta.at(0, 0) == s.num(Scalar(1)));
    CHECK(eta.at(1, 2) == s.num(Scalar(-1)));
    CHECK(eta.at(2, 1) == s.num(Scalar(1)));
    CHECK(smul(eta, sinv(eta)) == id);
}

TEST_CASE("grading check rejects entries of the wrong parity") {
    Session s(1);
    SuperMatrix m = SuperMatrix::identity(s.ctx());
    m.at(0, 1) = s.num(Scalar(1));  // even value in an odd slot
    CHECK_THROWS_AS(m.check_grading(), GradingMismatch);
}

TEST_CASE("superdeterminant is multiplicative and sinv is two-sided on 110 random matrices") {
    Session s(1);
    std::mt19937_64 rng(51);
    SuperMatrix id = SuperMatrix::identity(s.ctx());
    std::vector<SuperMatrix> pool;
    for (int k = 0; k < 110; ++k) pool.push_back(random_invertible(s, rng));

    for (const auto& m : pool) {
        SuperMatrix inv = sinv(m);
        CHECK(smul(m, inv) == id);
        CHECK(smul(inv, m) == id);
        CHECK(gmul(sdet(m), sdet(inv)) == s.num(Scalar(1)));
    }
    for (size_t k = 0; k + 1 < pool.size(); ++k) {
        const SuperMatrix& a = pool[k];
        const SuperMatrix& b = pool[k + 1];
        CHECK(sdet(smul(a, b)) == gmul(sdet(a), sdet(b)));
    }
}

TEST_CASE("matrix multiplication is associative on graded matrices") {
    Session s(1);
    std::mt19937_64 rng(52);
    for (int k = 0; k < 10; ++k) {
        SuperMatrix a = random_invertible(s, rng);
        SuperMatrix b = random_invertible(s, rng);
        SuperMatrix c = random_invertible(s, rng);
        CHECK(smul(smul(a, b), c) == smul(a, smul(b, c)));
    }
}

TEST_CASE("singular odd block is diagnosed") {
    Session s(1);
    SuperMatrix m = SuperMatrix::identity(s.ctx());
    m.at(1, 1) = SuperNumber(s.ctx());
    m.at(2, 2) = SuperNumber(s.ctx());
    CHECK_THROWS_AS(sdet(m), SingularOddBlock);
}

TEST_CASE("odd block determinant matches the even 2x2 minor") {
    Session s(1);
    SuperMatrix m(s.ctx());
    m.at(0, 0) = s.num(Scalar(1));
    m.at(1, 1) = s.sym(s.b_B);
    m.at(1, 2) = s.sym(s.c_B);
    m.at(2, 1) = s.sym(s.d_B);
    m.at(2, 2) = s.sym(s.e_B);
    SuperNumber expect =
        s.sym(s.b_B) * s.sym(s.e_B) - s.sym(s.c_B) * s.sym(s.d_B);
    CHECK(odd_block_det(m) == expect);
    CHECK(sdet(m) == ginv(expect));
}
