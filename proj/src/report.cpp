/*
   Copyright 2026 The hopfneb Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hopfneb/report.hpp"

#include <json.hpp>
#include <sstream>

namespace hopfneb {

std::string_view status_name(Status s) noexcept {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::PassModIdeal: return "pass-mod-ideal";
        case Status::Fail: return "fail";
    }
    return "fail";
}

void Report::append(const Report& other) {
    scenarios_.insert(scenarios_.end(), other.scenarios_.begin(), other.scenarios_.end());
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

std::vector<const ReportEntry*> Report::find(std::string_view check, std::string_view element) const {
    std::vector<const ReportEntry*> out;
    for (const auto& e : entries_)
        if (e.check == check && (element.empty() || e.element == element)) out.push_back(&e);
    return out;
}

void Report::mark_expected(const std::function<bool(const ReportEntry&)>& expect_pass) {
    for (auto& e : entries_) e.expect_pass = expect_pass(e);
}

ReportSummary Report::summary() const {
    ReportSummary s;
    s.scenarios = scenarios_.size();
    s.checks = entries_.size();
    for (const auto& e : entries_) {
        switch (e.status) {
            case Status::Pass: ++s.passed; break;
            case Status::PassModIdeal: ++s.passed_mod_ideal; break;
            case Status::Fail: ++s.failed; break;
        }
        if (!e.as_expected()) ++s.unexpected;
    }
    return s;
}

bool Report::all_as_expected() const {
    for (const auto& e : entries_)
        if (!e.as_expected()) return false;
    return true;
}

std::string Report::to_json(std::optional<double> elapsed_ms) const {
    // nlohmann::json (std::map backed) serializes object keys sorted.
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& e : entries_) {
        nlohmann::json j;
        j["scenario"] = e.scenario;
        j["check"] = e.check;
        j["element"] = e.element;
        j["status"] = std::string(status_name(e.status));
        j["expected"] = e.expect_pass ? "pass" : "fail";
        j["degree_bound"] = e.degree_bound;
        j["level"] = e.level;
        if (!e.witness.empty()) j["witness"] = e.witness;
        if (!e.note.empty()) j["note"] = e.note;
        if (!e.certificate.empty()) {
            nlohmann::json cert = nlohmann::json::array();
            for (const auto& t : e.certificate)
                cert.push_back({{"slot", t.slot},
                                {"cofactor", t.cofactor},
                                {"u", t.left},
                                {"relation", t.relation},
                                {"relation_text", t.relation_text},
                                {"v", t.right},
                                {"coefficient", t.coefficient}});
            j["certificate"] = std::move(cert);
        }
        checks.push_back(std::move(j));
    }
    const ReportSummary s = summary();
    nlohmann::json summary_json = {{"scenarios", s.scenarios},
                                   {"checks", s.checks},
                                   {"passed", s.passed},
                                   {"passed_mod_ideal", s.passed_mod_ideal},
                                   {"failed", s.failed},
                                   {"unexpected", s.unexpected}};
    if (elapsed_ms) summary_json["elapsed_ms"] = *elapsed_ms;
    nlohmann::json root = {{"checks", std::move(checks)},
                           {"scenario_names", scenarios_},
                           {"summary", std::move(summary_json)}};
    return root.dump(2) + "\n";
}

std::string Report::to_text(std::optional<double> elapsed_ms) const {
    std::ostringstream os;
    for (const auto& e : entries_) {
        os << (e.as_expected() ? "  " : "!!") << ' ' << e.scenario << " | " << e.check << " | "
           << e.element << " | " << status_name(e.status);
        if (!e.expect_pass) os << " (expected fail)";
        if (!e.level.empty()) os << " [" << e.level << "]";
        os << '\n';
        if (!e.witness.empty()) os << "      witness: " << e.witness << '\n';
        if (!e.certificate.empty())
            os << "      certificate: " << e.certificate.size() << " term(s)\n";
        if (!e.note.empty()) os << "      note: " << e.note << '\n';
    }
    const ReportSummary s = summary();
    os << "scenarios=" << s.scenarios << " checks=" << s.checks << " passed=" << s.passed
       << " passed_mod_ideal=" << s.passed_mod_ideal << " failed=" << s.failed
       << " unexpected=" << s.unexpected;
    if (elapsed_ms) os << " elapsed_ms=" << *elapsed_ms;
    os << '\n';
    return os.str();
}

}  // namespace hopfneb
