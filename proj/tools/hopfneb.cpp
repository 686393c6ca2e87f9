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

#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "hopfneb/errors.hpp"
#include "hopfneb/instance.hpp"
#include "hopfneb/scenarios.hpp"

namespace {

bool usage_error(hopfneb::ErrorCode code) {
    using hopfneb::ErrorCode;
    return code == ErrorCode::ParseError || code == ErrorCode::InvalidTable ||
           code == ErrorCode::InvalidGroupTable || code == ErrorCode::UnknownScenario ||
           code == ErrorCode::InvalidArgument;
}

hopfneb::GroupTable group_from_option(const std::string& value) {
    if (!value.empty() && value.find_first_not_of("0123456789") == std::string::npos) {
        if (value.size() > 4 || std::stoul(value) == 0)
            throw hopfneb::Error(hopfneb::ErrorCode::InvalidArgument,
                                 "group order must be between 1 and 9999");
        return hopfneb::GroupTable::cyclic(std::stoul(value));
    }
    return hopfneb::load_group(value);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for coactions, neb maps and relative Hopf modules"};
    app.require_subcommand(1);

    std::string scenario, field = "q", group, instance, format = "text";
    std::size_t degree = 4;
    std::uint64_t seed = 0;
    bool timing = false;

    CLI::App* verify = app.add_subcommand("verify", "Run a scenario and print its report");
    verify->add_option("--scenario", scenario, "Scenario name (see 'list')")->required();
    verify->add_option("--degree", degree, "Degree bound D")->check(CLI::Range(2, 12));
    verify->add_option("--field", field, "q or f:<p>");
    verify->add_option("--group", group, "Cyclic group order, or a group table file");
    verify->add_option("--instance", instance, "Hopf algebra instance file");
    verify->add_option("--report", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--seed", seed, "Seed for the random convolution sweep");
    verify->add_flag("--timing", timing, "Include elapsed_ms in the summary");

    CLI::App* list = app.add_subcommand("list", "List scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (list->parsed()) {
        for (const auto& s : hopfneb::scenario_list()) std::cout << s.name << "\t" << s.summary << "\n";
        return 0;
    }

    try {
        hopfneb::ScenarioParams params;
        params.degree = degree;
        params.field = hopfneb::parse_field(field);
        params.seed = seed;
        if (!group.empty()) params.group = group_from_option(group);
        if (!instance.empty()) params.instance = hopfneb::load_instance(instance, params.field);

        const auto start = std::chrono::steady_clock::now();
        const hopfneb::Report report = hopfneb::run_scenario(scenario, params);
        std::optional<double> elapsed;
        if (timing)
            elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                start)
                          .count();
        std::cout << (format == "json" ? report.to_json(elapsed) : report.to_text(elapsed));
        if (format == "json") std::cout << "\n";
        return report.all_as_expected() ? 0 : 1;
    } catch (const hopfneb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage_error(e.code()) ? 2 : 1;
    }
}
