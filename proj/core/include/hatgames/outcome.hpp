#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hatgames/plan.hpp"

namespace hg {

enum class Verdict { Winnable, Unwinnable, Unknown };

const char* to_string(Verdict v);

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t colorings = 0;
    std::uint64_t millis = 0;
};

struct TraceStep {
    std::string rule;
    std::vector<std::string> vertices;
    std::string rewrite;  // human-readable parameter change, may be empty
};

struct Outcome {
    Verdict verdict = Verdict::Unknown;
    std::optional<Strategy> certificate;  // when Winnable and constructive
    std::vector<TraceStep> trace;         // rules applied / exhaustion marker
    SearchStats stats;

    static Outcome winnable(Strategy f) {
        Outcome o;
        o.verdict = Verdict::Winnable;
        o.certificate = std::move(f);
        return o;
    }
    static Outcome unwinnable(std::string rule = "exhaustive-search") {
        Outcome o;
        o.verdict = Verdict::Unwinnable;
        o.trace.push_back({std::move(rule), {}, ""});
        return o;
    }
    static Outcome unknown(std::string reason = "budget-exceeded") {
        Outcome o;
        o.verdict = Verdict::Unknown;
        o.trace.push_back({std::move(reason), {}, ""});
        return o;
    }
};

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
    std::uint64_t max_colorings = 1'000'000;
    bool deterministic = true;
};

}  // namespace hg
