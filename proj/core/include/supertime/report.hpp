#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace supertime {

enum class CheckStatus { Pass, Fail, ReportOnly };

const char* to_string(CheckStatus s);

struct ReportEntry {
    std::string check_id;
    std::string paper_ref;
    CheckStatus status = CheckStatus::Pass;
    std::string expected;  // empty = null
    std::string actual;
    std::string notes;
};

struct VerificationReport {
    std::vector<ReportEntry> entries;
    uint64_t seed = 0;
    std::string convention;  // selected toggles, e.g. the metric grading toggle

    void add(ReportEntry e) { entries.push_back(std::move(e)); }
    bool has_failures() const {
        for (const auto& e : entries)
            if (e.status == CheckStatus::Fail) return true;
        return false;
    }
};

}  // namespace supertime
