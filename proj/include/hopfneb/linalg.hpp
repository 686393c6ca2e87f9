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

#ifndef HOPFNEB_LINALG_HPP
#define HOPFNEB_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hopfneb/scalar.hpp"

namespace hopfneb {

using SparseRow = std::map<std::size_t, Scalar>;

/// One equation sum_j row[j] * x_j = rhs.
struct LinearEquation {
    SparseRow row;
    Scalar rhs;
};

/// Exact Gaussian elimination.  Returns a solution (free variables set to 0)
/// or nullopt if the system is inconsistent.
std::optional<std::vector<Scalar>> solve_linear_system(const std::vector<LinearEquation>& eqs,
                                                       std::size_t unknowns, Field field);

std::size_t rank_of(const std::vector<SparseRow>& rows, Field field);

/// Incremental echelon basis of a span of sparse vectors.  Every stored row
/// has a distinct leading (largest) index, a leading coefficient of 1, and
/// remembers which inserted vectors it is a combination of.
template <class Index>
class Echelon {
   public:
    using Vec = std::map<Index, Scalar>;
    using Combination = std::map<std::size_t, Scalar>;

    explicit Echelon(Field field) : field_(field) {}

    /// Inserts v, tagged `source`.  Returns false if v was already in the span.
    bool insert(Vec v, std::size_t source) {
        Combination comb{{source, Scalar(1, field_)}};
        reduce_leading(v, comb);
        if (v.empty()) return false;
        auto lead = std::prev(v.end());
        const Scalar inv = lead->second.inverse();
        const Index key = lead->first;
        for (auto& [k, c] : v) c *= inv;
        for (auto& [k, c] : comb) c *= inv;
        rows_.emplace(key, Row{std::move(v), std::move(comb)});
        return true;
    }

    /// Reduces v to its canonical remainder modulo the span, recording the
    /// combination of sources that was subtracted.
    Vec remainder(Vec v, Combination& subtracted) const {
        Vec rest;
        while (!v.empty()) {
            auto lead = std::prev(v.end());
            auto it = rows_.find(lead->first);
            if (it == rows_.end()) {
                rest.insert(*lead);
                v.erase(lead);
                continue;
            }
            const Scalar c = lead->second;
            for (const auto& [k, rc] : it->second.vec) accumulate_(v, k, -(c * rc));
            for (const auto& [s, sc] : it->second.comb) accumulate_(subtracted, s, c * sc);
        }
        return rest;
    }

    bool contains(const Vec& v) const {
        Combination c;
        return remainder(v, c).empty();
    }

    std::size_t rank() const noexcept { return rows_.size(); }
    Field field() const noexcept { return field_; }

   private:
    struct Row {
        Vec vec;
        Combination comb;
    };

    template <class M, class K>
    static void accumulate_(M& m, const K& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, ins] = m.try_emplace(k, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) m.erase(it);
        }
    }

    void reduce_leading(Vec& v, Combination& comb) const {
        while (!v.empty()) {
            auto lead = std::prev(v.end());
            auto it = rows_.find(lead->first);
            if (it == rows_.end()) return;
            const Scalar c = lead->second;
            for (const auto& [k, rc] : it->second.vec) accumulate_(v, k, -(c * rc));
            for (const auto& [s, sc] : it->second.comb) accumulate_(comb, s, -(c * sc));
        }
    }

    Field field_;
    std::map<Index, Row> rows_;
};

}  // namespace hopfneb

#endif
