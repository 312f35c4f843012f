#include <benchmark/benchmark.h>

#include <random>

#include "supertime/curvature.hpp"

using namespace supertime;

namespace {

RatFunc rnd_rat(const Session& s, std::mt19937_64& rng) {
    return s.ratnum(Scalar(Rat(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1)));
}

SuperNumber random_super(const Session& s, std::mt19937_64& rng) {
    SuperNumber out(s.ctx());
    uint64_t full = (uint64_t{1} << s.ctx()->generator_count()) - 1;
    for (int k = 0; k < 4; ++k) out.add_term(rng() & full, rnd_rat(s, rng));
    return out;
}

SuperMatrix random_invertible(const Session& s, std::mt19937_64& rng) {
    for (;;) {
        SuperMatrix m(s.ctx());
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                if (SuperMatrix::index_parity(r) ^ SuperMatrix::index_parity(c)) {
                    m.at(r, c) = s.gen(s.theta).scaled(rnd_rat(s, rng)) +
                                 s.gen(s.thetabar).scaled(rnd_rat(s, rng));
                } else {
                    m.at(r, c) = SuperNumber::scalar(s.ctx(), rnd_rat(s, rng)) +
                                 gmul(s.gen(s.thetabar), s.gen(s.theta)).scaled(rnd_rat(s, rng));
                }
            }
        }
        try {
            (void)sinv(m);
            return m;
        } catch (const Error&) {
        }
    }
}

void BM_GrassmannMul(benchmark::State& state) {
    Session s(1);
    std::mt19937_64 rng(7);
    SuperNumber a = random_super(s, rng), b = random_super(s, rng);
    for (auto _ : state) benchmark::DoNotOptimize(gmul(a, b));
}
BENCHMARK(BM_GrassmannMul);

void BM_GrassmannInv(benchmark::State& state) {
    Session s(1);
    std::mt19937_64 rng(8);
    SuperNumber a = s.num(Scalar(3)) + random_super(s, rng);
    for (auto _ : state) benchmark::DoNotOptimize(ginv(a));
}
BENCHMARK(BM_GrassmannInv);

void BM_Sdet(benchmark::State& state) {
    Session s(1);
    std::mt19937_64 rng(9);
    SuperMatrix m = random_invertible(s, rng);
    for (auto _ : state) benchmark::DoNotOptimize(sdet(m));
}
BENCHMARK(BM_Sdet);

void BM_Sinv(benchmark::State& state) {
    Session s(1);
    std::mt19937_64 rng(10);
    SuperMatrix m = random_invertible(s, rng);
    for (auto _ : state) benchmark::DoNotOptimize(sinv(m));
}
BENCHMARK(BM_Sinv);

void BM_RicciScalar(benchmark::State& state) {
    Session s(1);
    std::array<RatFunc, 5> pis;
    for (int k = 0; k < 5; ++k) pis[k] = s.rat(s.pi[k]);
    SuperMetric g = make_metric(s, pi_metric(s, Branch::Plus, pis));
    ConventionConfig conv;
    for (auto _ : state) benchmark::DoNotOptimize(ricci_scalar(s, g, conv));
}
BENCHMARK(BM_RicciScalar);

}  // namespace

BENCHMARK_MAIN();
