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

/*
   Named, deterministic check suites.  Each scenario builds its own instances
   and returns one Report; "all" runs the golden suite in a fixed order.
*/

#ifndef HOPFNEB_SCENARIOS_HPP
#define HOPFNEB_SCENARIOS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfneb/equivariance.hpp"
#include "hopfneb/hopf.hpp"
#include "hopfneb/report.hpp"

namespace hopfneb {

struct ScenarioParams {
    std::size_t degree = 4;
    Field field = Field::rationals();
    /// Replaces the default groups where a scenario iterates over groups.
    std::optional<GroupTable> group;
    /// Parsed instance for the "instance" scenario.
    std::optional<TableHopfData> instance;
    std::uint64_t seed = 0;
};

struct ScenarioInfo {
    std::string name;
    std::string summary;
};

const std::vector<ScenarioInfo>& scenario_list();

/// Throws UnknownScenario.
Report run_scenario(const std::string& name, const ScenarioParams& params);

/// Homomorphisms G -> K^*, as value tables indexed by group element.  Over Q
/// the values are +-1; over F_p all |G|-th roots of unity are tried.
std::vector<std::vector<Scalar>> group_characters(const GroupTable& g, Field field);

/// A table Hopf algebra with its group-like elements.
struct SuiteInstance {
    HopfDescriptor hopf;
    std::vector<Element> group_likes;
    /// Algebra maps H -> K.
    std::vector<LinearMapSpec> characters;
};

/// K[G]; group-likes are the group elements, characters come from group_characters.
SuiteInstance group_instance(const GroupTable& g, Field field);
/// K^G; group-likes are the characters sum_g chi(g) d_g, characters are the
/// evaluations at group elements.
SuiteInstance function_instance(const GroupTable& g, Field field);

/// theta families over A = H, delta = Delta: trivial of rank 1 and 2, g (x) 1
/// for each group-like g, and the rank-2 upper triangular family
/// [[g1, g2 - g1], [0, g2]] (x) 1.
std::vector<NebMatrix> theta_families(const SuiteInstance& inst);
/// The Hopf module analogues: trivial, g (x) 1, and [[g1, 0], [g2 - g1, g2]] (x) 1.
std::vector<HopfModuleMatrix> hopfmodule_families(const SuiteInstance& inst);

/// The symmetric group on three letters, identity first.
GroupTable symmetric_group_3();

}  // namespace hopfneb

#endif
