#pragma once

#include "bvlab/master_eq.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bvlab {

inline constexpr const char* kVersion = "0.1.0";

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------
//
// A report is an ordered list of check entries. Emission is deterministic:
// for the same model, checks, and seed the rendered output is byte-identical.
// Wall-clock times are therefore only recorded when explicitly requested.

struct ReportEntry {
    std::string check_id;
    std::string model_id;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string residual;
    std::string identity;
    std::string note;
    double wall_ms = -1;  // negative: not recorded
};

struct Report {
    std::uint64_t seed = 0;
    bool timings = false;
    std::vector<ReportEntry> entries;

    void add(const std::string& model_id, const CheckOutcome& outcome,
             double wall_ms = -1);
    void add_skip(const std::string& model_id, const std::string& check_id,
                  const std::string& identity, const std::string& note);
    void append(const std::string& model_id,
                const std::vector<CheckOutcome>& outcomes, double wall_ms = -1);

    int count(const std::string& status) const;
    bool all_passed() const;  // no "fail" entries ("skipped" is allowed)

    std::string render_human() const;
    std::string render_json() const;
};

}  // namespace bvlab
