#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "supertime/checks.hpp"

using namespace supertime;

namespace {

std::string serialize(const VerificationReport& rep) {
    std::ostringstream os;
    os << rep.seed << "\n" << rep.convention << "\n";
    for (const auto& e : rep.entries)
        os << e.check_id << "|" << e.paper_ref << "|" << to_string(e.status) << "|" << e.expected
           << "|" << e.actual << "|" << e.notes << "\n";
    return os.str();
}

}  // namespace

TEST_CASE("the algebra, osp, cpi, sec4 and curvature sections report no failures") {
    for (const char* section : {"algebra", "osp", "cpi", "sec4", "curvature"}) {
        VerificationReport rep = run_checks(section, "both", 7);
        CHECK_FALSE(rep.entries.empty());
        for (const auto& e : rep.entries) {
            INFO(section << ": " << e.check_id << " -> " << e.actual);
            CHECK(e.status != CheckStatus::Fail);
        }
    }
}

TEST_CASE("the only failing checks are the documented printed-special-case residuals") {
    VerificationReport rep = run_checks("qpi", "both", 7);
    int fails = 0;
    for (const auto& e : rep.entries) {
        if (e.status == CheckStatus::Fail) {
            ++fails;
            INFO(e.check_id);
            CHECK(e.check_id.find("eq21") != std::string::npos);
            CHECK(e.check_id.find("printed") != std::string::npos);
        }
    }
    CHECK(fails == 4);
    CHECK(rep.has_failures());
}

TEST_CASE("entries are sorted by check id") {
    VerificationReport rep = run_checks("all", "both", 7);
    CHECK(std::is_sorted(rep.entries.begin(), rep.entries.end(),
                         [](const ReportEntry& a, const ReportEntry& b) {
                             return a.check_id < b.check_id;
                         }));
}

TEST_CASE("a fixed seed reproduces the report verbatim") {
    VerificationReport a = run_checks("cpi", "both", 13);
    VerificationReport b = run_checks("cpi", "both", 13);
    CHECK(serialize(a) == serialize(b));
    CHECK(a.seed == 13);
}

TEST_CASE("branch filtering drops the other branch's entries") {
    VerificationReport plus = run_checks("cpi", "plus", 7);
    for (const auto& e : plus.entries) CHECK(e.check_id.find(".minus.") == std::string::npos);
    VerificationReport minus = run_checks("cpi", "minus", 7);
    for (const auto& e : minus.entries) CHECK(e.check_id.find(".plus.") == std::string::npos);
}
