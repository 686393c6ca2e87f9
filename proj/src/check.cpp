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

#include "hopfneb/check.hpp"

#include <algorithm>

#include "hopfneb/errors.hpp"

namespace hopfneb {

namespace {

bool has_free_slot(const TensorElement& x) {
    return std::any_of(x.factors().begin(), x.factors().end(),
                       [](const AlgebraRef& a) { return a->is_free(); });
}

std::string exact_level(const TensorElement& x) { return has_free_slot(x) ? "free" : "table"; }

std::string bounded_witness(const TensorElement& x) {
    if (x.terms().size() <= kWitnessTerms) return x.to_string();
    TensorElement::TermMap head;
    for (const auto& [k, c] : x.terms()) {
        if (head.size() == kWitnessTerms) break;
        head.emplace(k, c);
    }
    return TensorElement(x.factors(), std::move(head)).to_string() + " + ... (" +
           std::to_string(x.terms().size()) + " terms)";
}

}  // namespace

CheckOutcome compare_tensors(const TensorElement& lhs, const TensorElement& rhs,
                             IdealOracle* oracle) {
    CheckOutcome out;
    if (lhs == rhs) {
        out.level = exact_level(lhs);
        return out;
    }
    const TensorElement diff = rhs - lhs;
    if (oracle && has_free_slot(diff)) {
        try {
            auto ans = oracle->member(diff);
            if (ans.result.member) {
                out.status = Status::PassModIdeal;
                out.level = "ideal";
                out.certificate = std::move(ans.rendered);
                out.note = "alphabet level " + std::to_string(ans.alphabet_level);
                return out;
            }
            out.note = "not found up to degree " + std::to_string(ans.result.degree_bound);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DegreeExceedsBound) throw;
            out.note = e.what();
        }
    }
    out.status = Status::Fail;
    out.witness = bounded_witness(diff);
    return out;
}

CheckOutcome compare_vectors(const std::vector<TensorElement>& lhs,
                             const std::vector<TensorElement>& rhs, IdealOracle* oracle) {
    if (lhs.size() != rhs.size())
        throw Error(ErrorCode::InvalidArgument, "compare_vectors: rank mismatch");
    CheckOutcome out;
    std::vector<std::string> witness;
    std::vector<std::string> levels;
    for (std::size_t p = 0; p < lhs.size(); ++p) {
        CheckOutcome c = compare_tensors(lhs[p], rhs[p], oracle);
        if (c.status == Status::Fail) {
            out.status = Status::Fail;
            witness.push_back("e" + std::to_string(p) + ": " + c.witness);
            if (!c.note.empty() && out.note.empty()) out.note = c.note;
            continue;
        }
        if (c.status == Status::PassModIdeal && out.status == Status::Pass)
            out.status = Status::PassModIdeal;
        if (c.status == Status::PassModIdeal) {
            for (auto& t : c.certificate) {
                t.cofactor = "e" + std::to_string(p) + ":" + t.cofactor;
                out.certificate.push_back(std::move(t));
            }
            if (out.note.empty()) out.note = c.note;
        }
        if (std::find(levels.begin(), levels.end(), c.level) == levels.end())
            levels.push_back(c.level);
    }
    if (out.status == Status::Fail) {
        for (std::size_t i = 0; i < witness.size(); ++i) {
            if (i) out.witness += "; ";
            out.witness += witness[i];
        }
        out.certificate.clear();
        return out;
    }
    if (std::find(levels.begin(), levels.end(), "ideal") != levels.end())
        out.level = "ideal";
    else if (std::find(levels.begin(), levels.end(), "free") != levels.end())
        out.level = "free";
    else
        out.level = "table";
    return out;
}

ReportEntry make_entry(const std::string& scenario, const std::string& check,
                       const std::string& element, const CheckOutcome& outcome,
                       std::size_t degree_bound, bool expect_pass) {
    ReportEntry e;
    e.scenario = scenario;
    e.check = check;
    e.element = element;
    e.status = outcome.status;
    e.expect_pass = expect_pass;
    e.witness = outcome.witness;
    e.certificate = outcome.certificate;
    e.degree_bound = degree_bound;
    e.level = outcome.level;
    e.note = outcome.note;
    return e;
}

}  // namespace hopfneb
