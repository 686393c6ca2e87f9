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

#include "hopfneb/linalg.hpp"

namespace hopfneb {

std::optional<std::vector<Scalar>> solve_linear_system(const std::vector<LinearEquation>& eqs,
                                                       std::size_t unknowns, Field field) {
    // Augmented column `unknowns` carries the right-hand side.
    const std::size_t rhs_col = unknowns;
    std::vector<Scalar> x(unknowns, Scalar(0, field));
    std::vector<SparseRow> m;
    for (const auto& e : eqs) {
        SparseRow v = e.row;
        std::erase_if(v, [](const auto& kv) { return kv.second.is_zero(); });
        if (!e.rhs.is_zero()) v.emplace(rhs_col, e.rhs);
        if (!v.empty()) m.push_back(std::move(v));
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col <= unknowns && r < m.size(); ++col) {
        std::size_t sel = m.size();
        for (std::size_t i = r; i < m.size(); ++i)
            if (m[i].count(col)) {
                sel = i;
                break;
            }
        if (sel == m.size()) continue;
        if (col == rhs_col) return std::nullopt;
        std::swap(m[r], m[sel]);
        const Scalar inv = m[r].at(col).inverse();
        for (auto& [k, c] : m[r]) c *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r) continue;
            auto it = m[i].find(col);
            if (it == m[i].end()) continue;
            const Scalar f = it->second;
            for (const auto& [k, c] : m[r]) {
                auto [jt, ins] = m[i].try_emplace(k, -(f * c));
                if (!ins) {
                    jt->second -= f * c;
                    if (jt->second.is_zero()) m[i].erase(jt);
                }
            }
        }
        pivot_cols.push_back(col);
        ++r;
    }
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
        auto it = m[i].find(rhs_col);
        x[pivot_cols[i]] = it == m[i].end() ? Scalar(0, field) : it->second;
    }
    return x;
}

std::size_t rank_of(const std::vector<SparseRow>& rows, Field field) {
    Echelon<std::size_t> ech(field);
    for (std::size_t i = 0; i < rows.size(); ++i) ech.insert(rows[i], i);
    return ech.rank();
}

}  // namespace hopfneb
