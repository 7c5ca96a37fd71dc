#include "bvlab/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace bvlab {

namespace {

std::string canonical_status(const std::string& s) {
    return s == "skip" ? "skipped" : s;
}

}  // namespace

void Report::add(const std::string& model_id, const CheckOutcome& outcome,
                 double wall_ms) {
    ReportEntry e;
    e.check_id = outcome.check;
    e.model_id = model_id;
    e.status = canonical_status(outcome.status);
    e.residual = outcome.residual;
    e.identity = outcome.identity;
    e.note = outcome.note;
    e.wall_ms = timings ? wall_ms : -1;
    entries.push_back(std::move(e));
}

void Report::add_skip(const std::string& model_id, const std::string& check_id,
                      const std::string& identity, const std::string& note) {
    ReportEntry e;
    e.check_id = check_id;
    e.model_id = model_id;
    e.status = "skipped";
    e.identity = identity;
    e.note = note;
    entries.push_back(std::move(e));
}

void Report::append(const std::string& model_id,
                    const std::vector<CheckOutcome>& outcomes, double wall_ms) {
    for (const auto& c : outcomes) add(model_id, c, wall_ms);
}

int Report::count(const std::string& status) const {
    return static_cast<int>(std::count_if(
        entries.begin(), entries.end(),
        [&](const ReportEntry& e) { return e.status == status; }));
}

bool Report::all_passed() const { return count("fail") == 0; }

std::string Report::render_human() const {
    std::size_t wc = 5, wm = 5;
    for (const auto& e : entries) {
        wc = std::max(wc, e.check_id.size());
        wm = std::max(wm, e.model_id.size());
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size(), ' ');
    };

    std::ostringstream out;
    out << pad("check", wc) << "  " << pad("model", wm) << "  " << pad("status", 7)
        << "  identity\n";
    out << std::string(wc, '-') << "  " << std::string(wm, '-') << "  "
        << std::string(7, '-') << "  " << std::string(24, '-') << "\n";
    for (const auto& e : entries) {
        out << pad(e.check_id, wc) << "  " << pad(e.model_id, wm) << "  "
            << pad(e.status, 7) << "  " << e.identity;
        if (timings && e.wall_ms >= 0) out << "  [" << e.wall_ms << " ms]";
        out << "\n";
        if (e.status == "fail" && !e.residual.empty())
            out << pad("", wc) << "  " << pad("", wm) << "  residual: " << e.residual
                << "\n";
        if (!e.note.empty() && e.status != "pass")
            out << pad("", wc) << "  " << pad("", wm) << "  note: " << e.note << "\n";
    }
    out << "\n"
        << count("pass") << " passed, " << count("fail") << " failed, "
        << count("skipped") << " skipped\n";
    return out.str();
}

std::string Report::render_json() const {
    nlohmann::ordered_json doc;
    doc["tool"] = "bvlab";
    doc["version"] = kVersion;
    doc["seed"] = seed;
    doc["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json j;
        j["check_id"] = e.check_id;
        j["model_id"] = e.model_id;
        j["status"] = e.status;
        j["residual"] = e.residual;
        j["identity"] = e.identity;
        j["note"] = e.note;
        if (timings && e.wall_ms >= 0) j["wall_ms"] = e.wall_ms;
        doc["entries"].push_back(std::move(j));
    }
    doc["counts"] = {{"pass", count("pass")},
                     {"fail", count("fail")},
                     {"skipped", count("skipped")}};
    return doc.dump(2) + "\n";
}

}  // namespace bvlab
