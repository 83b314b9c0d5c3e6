#pragma once

#include <string>
#include <vector>

namespace fncoh {

enum class CheckStatus { Pass, Fail, Info };

inline const char* statusName(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Info: return "info";
    }
    return "?";
}

/// One verification record. check_id is stable across runs so reports diff
/// cleanly; it embeds the anchor of the claim being checked.
struct CheckRecord {
    std::string suite;
    std::string check_id;
    std::string structure;  // "g2", "spin7" or ""
    std::string freq;       // "(1,0,...,0)" or ""
    int degree = -1;        // -1 when not applicable
    std::string expected;
    std::string got;
    CheckStatus status = CheckStatus::Info;
};

inline CheckRecord makeCheck(std::string suite, std::string id, std::string structure,
                             std::string expected, std::string got, bool pass) {
    CheckRecord r;
    r.suite = std::move(suite);
    r.check_id = std::move(id);
    r.structure = std::move(structure);
    r.expected = std::move(expected);
    r.got = std::move(got);
    r.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
    return r;
}

inline bool allPass(const std::vector<CheckRecord>& records) {
    for (const auto& r : records)
        if (r.status == CheckStatus::Fail) return false;
    return true;
}

}  // namespace fncoh
