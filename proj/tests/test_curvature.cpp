#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "supertime/curvature.hpp"

using namespace supertime;

TEST_CASE("the flat metric is curvature-free under every convention") {
    Session s(1);
    SuperMetric eta = make_metric(s, SuperMatrix::minkowski(s.ctx()));
    for (const auto& conv : ConventionConfig::all()) {
        CurvatureResult r = ricci_scalar(s, eta, conv);
        CHECK(r.R.is_zero());
        CHECK(r.R_body.is_zero());
    }
}

TEST_CASE("metric construction validates the two-sided inverse") {
    Session s(1);
    SuperMetric eta = make_metric(s, SuperMatrix::minkowski(s.ctx()));
    SuperMatrix id = SuperMatrix::identity(s.ctx());
    CHECK(smul(eta.g, eta.g_inv) == id);
    CHECK(smul(eta.g_inv, eta.g) == id);
}

TEST_CASE("a metric with singular body is rejected") {
    Session s(1);
    SuperMatrix g(s.ctx());
    g.at(0, 0) = s.num(Scalar(1));  // odd-odd block entirely zero
    CHECK_THROWS_AS(make_metric(s, g), SingularMetric);
}

TEST_CASE("Christoffel symbols are graded-symmetric for every convention") {
    Session s(1);
    std::array<RatFunc, 5> pis;
    for (int k = 0; k < 5; ++k) pis[k] = s.rat(s.pi[k]);
    SuperMetric g = make_metric(s, pi_metric(s, Branch::Plus, pis));
    for (const auto& conv : ConventionConfig::all()) CHECK(christoffel_symmetric(s, g, conv));
}

TEST_CASE("the parametrized metric family yields time-independent curvature") {
    Session s(1);
    std::array<RatFunc, 5> pis;
    for (int k = 0; k < 5; ++k) pis[k] = s.rat(s.pi[k]);
    SuperMetric g = make_metric(s, pi_metric(s, Branch::Minus, pis));
    ConventionConfig conv;  // defaults: one representative convention
    CurvatureResult r = ricci_scalar(s, g, conv);
    CHECK_FALSE(r.R_body.num().depends_on(s.t));
}

TEST_CASE("the convention space enumerates sixteen distinct configurations") {
    auto all = ConventionConfig::all();
    CHECK(all.size() == 16);
    std::set<std::string> names;
    for (const auto& c : all) names.insert(to_string(c));
    CHECK(names.size() == 16);
}

TEST_CASE("the reference body polynomial differs between branches only in one term") {
    Session s(1);
    RatFunc diff = reference_ricci_body(s, Branch::Plus) - reference_ricci_body(s, Branch::Minus);
    RatFunc expect = s.ratnum(Scalar(12)) * s.rat(s.pi[4]);
    CHECK(diff == expect);
}

TEST_CASE("the convention scan runs to completion and classifies every row") {
    Session s(1);
    auto rows = convention_scan(s, Branch::Plus, 5, 7);
    CHECK(rows.size() == 16);
    for (const auto& row : rows) {
        CHECK_FALSE(row.verdict.empty());
        CHECK(row.total_samples == 5);
        CHECK(row.matching_samples <= row.total_samples);
        if (row.verdict == "exact-match") CHECK(row.residual.empty());
    }
}
