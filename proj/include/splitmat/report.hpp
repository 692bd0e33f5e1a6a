// Structured pass/fail/precondition-unmet results emitted by the checkers.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace splitmat {

enum class Verdict { pass, fail, precondition_unmet };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::precondition_unmet: return "precondition-unmet";
    }
    return "?";
}

struct CheckReport {
    std::string statement_id;
    std::string instance;  // compact digest of the object under test
    std::vector<std::pair<std::string, std::string>> params;
    Verdict verdict = Verdict::precondition_unmet;
    std::vector<std::string> witnesses;
    std::string detail;
    std::uint64_t seed = 0;
    bool outside_hypothesis = false;  // set by lenient mode when gates were skipped

    // One line of key=value pairs; stable key order, no embedded newlines.
    std::string render() const {
        std::string out = "statement=" + statement_id + " instance=" + instance;
        for (const auto& [key, value] : params) out += " " + key + "=" + value;
        out += std::string(" verdict=") + to_string(verdict);
        out += " witnesses=";
        if (witnesses.empty()) {
            out += "-";
        } else {
            for (std::size_t i = 0; i < witnesses.size(); ++i) {
                if (i) out += ";";
                out += witnesses[i];
            }
        }
        out += " seed=" + std::to_string(seed);
        if (outside_hypothesis) out += " hypothesis=outside";
        std::string safe = detail;
        for (auto& c : safe)
            if (c == '"' || c == '\n') c = '\'';
        out += " detail=\"" + safe + "\"";
        return out;
    }
};

}  // namespace splitmat
