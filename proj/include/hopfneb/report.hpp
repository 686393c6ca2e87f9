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

#ifndef HOPFNEB_REPORT_HPP
#define HOPFNEB_REPORT_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hopfneb {

enum class Status { Pass, PassModIdeal, Fail };

std::string_view status_name(Status s) noexcept;

/// One summand coef * u * r * v of an ideal-membership certificate, located
/// in tensor slot `slot` with the other slots given by `cofactor`.
struct CertificateTerm {
    std::size_t slot = 0;
    std::string cofactor;
    std::string left;
    std::size_t relation = 0;
    std::string relation_text;
    std::string right;
    std::string coefficient;
};

struct ReportEntry {
    std::string scenario;
    std::string check;
    std::string element;
    Status status = Status::Pass;
    bool expect_pass = true;
    std::string witness;
    std::vector<CertificateTerm> certificate;
    std::size_t degree_bound = 0;
    /// "free", "ideal", "table" or "" for failures.
    std::string level;
    std::string note;

    bool passed() const noexcept { return status != Status::Fail; }
    bool as_expected() const noexcept { return passed() == expect_pass; }
};

struct ReportSummary {
    std::size_t scenarios = 0;
    std::size_t checks = 0;
    std::size_t passed = 0;
    std::size_t passed_mod_ideal = 0;
    std::size_t failed = 0;
    std::size_t unexpected = 0;
};

class Report {
   public:
    void add(ReportEntry e) { entries_.push_back(std::move(e)); }
    void append(const Report& other);
    void note_scenario(std::string name) { scenarios_.push_back(std::move(name)); }

    const std::vector<ReportEntry>& entries() const noexcept { return entries_; }
    const std::vector<std::string>& scenarios() const noexcept { return scenarios_; }

    /// Entries with the given check name (and element, if non-empty).
    std::vector<const ReportEntry*> find(std::string_view check, std::string_view element = {}) const;

    /// Sets expect_pass on every entry from the predicate.
    void mark_expected(const std::function<bool(const ReportEntry&)>& expect_pass);
    ReportSummary summary() const;
    bool all_as_expected() const;

    /// Sorted keys, stable entry order; elapsed time only when given.
    std::string to_json(std::optional<double> elapsed_ms = std::nullopt) const;
    std::string to_text(std::optional<double> elapsed_ms = std::nullopt) const;

   private:
    std::vector<std::string> scenarios_;
    std::vector<ReportEntry> entries_;
};

}  // namespace hopfneb

#endif
