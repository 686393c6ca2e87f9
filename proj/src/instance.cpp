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

#include "hopfneb/instance.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "hopfneb/errors.hpp"

namespace hopfneb {

namespace {

struct Token {
    std::string text;
    int column = 0;
};

struct Line {
    int number = 0;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
            line.tokens.push_back({std::string(raw.substr(start, i - start)),
                                   static_cast<int>(start) + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        pos = end + 1;
    }
    return lines;
}

[[noreturn]] void fail(const Line& l, const Token& t, const std::string& msg) {
    throw ParseError(l.number, t.column, t.text, msg);
}

[[noreturn]] void fail_end(const Line& l, const std::string& msg) {
    const Token& t = l.tokens.back();
    throw ParseError(l.number, t.column + static_cast<int>(t.text.size()), "<end of line>", msg);
}

Scalar parse_scalar(const Line& l, const Token& t, std::string_view text, Field f) {
    try {
        return Scalar::parse(text, f);
    } catch (const Error& e) {
        fail(l, t, std::string("bad coefficient: ") + e.what());
    }
}

/// Splits "[coef*]body" or "-body".
std::pair<Scalar, std::string> split_term(const Line& l, const Token& t, Field f) {
    const auto star = t.text.find('*');
    if (star != std::string::npos)
        return {parse_scalar(l, t, std::string_view(t.text).substr(0, star), f),
                t.text.substr(star + 1)};
    if (!t.text.empty() && t.text[0] == '-') return {Scalar(-1, f), t.text.substr(1)};
    return {Scalar(1, f), t.text};
}

/// Term tokens after position `from`, with the '+' separators checked.
std::vector<Token> combination_terms(const Line& l, std::size_t from) {
    std::vector<Token> terms;
    bool want_term = true;
    for (std::size_t i = from; i < l.tokens.size(); ++i) {
        const Token& t = l.tokens[i];
        if (want_term) {
            if (t.text == "+") fail(l, t, "expected a term");
            terms.push_back(t);
        } else if (t.text != "+") {
            fail(l, t, "expected '+'");
        }
        want_term = !want_term;
    }
    if (want_term) fail_end(l, "expected a term");
    return terms;
}

class InstanceParser {
   public:
    InstanceParser(std::string_view text, Field field) : lines_(tokenize(text)), field_(field) {}

    TableHopfData run() {
        if (lines_.empty()) throw ParseError(1, 1, "<end of input>", "empty instance");
        const Line* basis_line = nullptr;
        for (const auto& l : lines_) {
            const std::string& kw = l.tokens[0].text;
            if (kw == "field") {
                expect_count(l, 2);
                try {
                    field_ = parse_field(l.tokens[1].text);
                } catch (const Error& e) {
                    fail(l, l.tokens[1], e.what());
                }
            } else if (kw == "basis") {
                if (basis_line) fail(l, l.tokens[0], "basis given twice");
                basis_line = &l;
                if (l.tokens.size() < 2) fail_end(l, "expected basis labels");
                for (std::size_t i = 1; i < l.tokens.size(); ++i) {
                    const Token& t = l.tokens[i];
                    if (t.text.find_first_of("*|+=") != std::string::npos || t.text[0] == '-')
                        fail(l, t, "invalid basis label");
                    if (!index_.emplace(t.text, labels_.size()).second)
                        fail(l, t, "duplicate basis label");
                    labels_.push_back(t.text);
                }
            }
        }
        if (!basis_line) throw ParseError(lines_.back().number, 1, "<end of input>", "no basis line");
        const std::size_t n = labels_.size();
        mul_.assign(n, std::vector<TableTerms>(n));
        std::vector<bool> mul_set(n * n, false);
        std::vector<bool> delta(n, false);
        std::vector<std::optional<Scalar>> eps(n);
        std::vector<std::optional<Element>> antipode(n);
        std::optional<TableTerms> unit;
        std::string name = "instance";
        bool commutative = false;
        std::vector<std::pair<const Line*, std::size_t>> antipode_lines;

        for (const auto& l : lines_) {
            const Token& kw = l.tokens[0];
            if (kw.text == "field" || kw.text == "basis") continue;
            if (kw.text == "name") {
                if (l.tokens.size() < 2) fail_end(l, "expected a name");
                name.clear();
                for (std::size_t i = 1; i < l.tokens.size(); ++i)
                    name += (i > 1 ? " " : "") + l.tokens[i].text;
            } else if (kw.text == "commutative") {
                expect_count(l, 1);
                commutative = true;
            } else if (kw.text == "unit") {
                if (unit) fail(l, kw, "unit given twice");
                if (l.tokens.size() < 2) fail_end(l, "expected the unit");
                unit = element_terms(l, 1);
            } else if (kw.text == "mul") {
                expect_equals(l, 3);
                const std::size_t a = label(l, l.tokens[1]), b = label(l, l.tokens[2]);
                if (mul_set[a * n + b]) fail(l, l.tokens[1], "product given twice");
                mul_set[a * n + b] = true;
                mul_[a][b] = element_terms(l, 4);
            } else if (kw.text == "delta") {
                expect_equals(l, 2);
                const std::size_t a = label(l, l.tokens[1]);
                if (delta[a]) fail(l, l.tokens[1], "delta given twice");
                delta[a] = true;
                delta_lines_.emplace_back(&l, a);
            } else if (kw.text == "eps") {
                expect_equals(l, 2);
                const std::size_t a = label(l, l.tokens[1]);
                if (eps[a]) fail(l, l.tokens[1], "eps given twice");
                if (l.tokens.size() != 4) fail(l, l.tokens.size() > 4 ? l.tokens[4] : l.tokens[2],
                                               "eps takes a single scalar");
                eps[a] = parse_scalar(l, l.tokens[3], l.tokens[3].text, field_);
            } else if (kw.text == "antipode") {
                expect_equals(l, 2);
                const std::size_t a = label(l, l.tokens[1]);
                for (const auto& [pl, pa] : antipode_lines)
                    if (pa == a) fail(l, l.tokens[1], "antipode given twice");
                antipode_lines.emplace_back(&l, a);
            } else {
                fail(l, kw, "unknown directive");
            }
        }
        if (!unit) throw ParseError(basis_line->number, 1, "basis", "no unit line");
        if (unit->size() == 1 && unit->begin()->second.is_one()) {
            const std::size_t u = unit->begin()->first;
            for (std::size_t i = 0; i < n; ++i) {
                if (!mul_set[u * n + i]) mul_[u][i] = {{i, Scalar(1, field_)}};
                if (!mul_set[i * n + u]) mul_[i][u] = {{i, Scalar(1, field_)}};
            }
        }
        AlgebraRef A = Algebra::table(name, field_, labels_, *unit, mul_, commutative);

        TableHopfData data{name, A, {}, {}, std::nullopt};
        std::vector<std::optional<TensorElement>> coproducts(n);
        for (const auto& [pl, pa] : delta_lines_) coproducts[pa] = tensor_terms(*pl, 3, A);
        for (std::size_t i = 0; i < n; ++i) {
            if (!coproducts[i]) throw ParseError(basis_line->number, basis_line->tokens[i + 1].column,
                                      labels_[i], "no delta line for this basis element");
            if (!eps[i]) throw ParseError(basis_line->number, basis_line->tokens[i + 1].column,
                                          labels_[i], "no eps line for this basis element");
            data.delta.push_back(*coproducts[i]);
            data.eps.push_back(*eps[i]);
        }
        if (!antipode_lines.empty()) {
            std::vector<Element> s(n, Element(A));
            std::vector<bool> seen(n, false);
            for (const auto& [pl, pa] : antipode_lines) {
                s[pa] = Element(A, to_keys(element_terms(*pl, 3)));
                seen[pa] = true;
            }
            for (std::size_t i = 0; i < n; ++i)
                if (!seen[i])
                    throw ParseError(basis_line->number, basis_line->tokens[i + 1].column,
                                     labels_[i], "no antipode line for this basis element");
            data.antipode = std::move(s);
        }
        return data;
    }

   private:
    static Element::TermMap to_keys(const TableTerms& t) {
        Element::TermMap out;
        for (const auto& [i, c] : t) out.emplace(i, c);
        return out;
    }

    void expect_count(const Line& l, std::size_t count) const {
        if (l.tokens.size() < count) fail_end(l, "too few tokens");
        if (l.tokens.size() > count) fail(l, l.tokens[count], "unexpected token");
    }

    void expect_equals(const Line& l, std::size_t at) const {
        if (l.tokens.size() <= at) fail_end(l, "expected '='");
        if (l.tokens[at].text != "=") fail(l, l.tokens[at], "expected '='");
        if (l.tokens.size() <= at + 1) fail_end(l, "expected a value after '='");
    }

    std::size_t label(const Line& l, const Token& t) const {
        auto it = index_.find(t.text);
        if (it == index_.end()) fail(l, t, "unknown basis label");
        return it->second;
    }

    std::size_t label(const Line& l, const Token& t, const std::string& text) const {
        auto it = index_.find(text);
        if (it == index_.end()) fail(l, t, "unknown basis label '" + text + "'");
        return it->second;
    }

    TableTerms element_terms(const Line& l, std::size_t from) const {
        TableTerms out;
        for (const auto& t : combination_terms(l, from)) {
            auto [c, body] = split_term(l, t, field_);
            accumulate(out, label(l, t, body), c);
        }
        return out;
    }

    TensorElement tensor_terms(const Line& l, std::size_t from, const AlgebraRef& A) const {
        TensorElement out({A, A});
        for (const auto& t : combination_terms(l, from)) {
            auto [c, body] = split_term(l, t, field_);
            const auto bar = body.find('|');
            if (bar == std::string::npos || body.find('|', bar + 1) != std::string::npos)
                fail(l, t, "expected a tensor term x|y");
            out.add_term({label(l, t, body.substr(0, bar)), label(l, t, body.substr(bar + 1))}, c);
        }
        return out;
    }

    std::vector<Line> lines_;
    Field field_;
    std::vector<std::string> labels_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<TableTerms>> mul_;
    std::vector<std::pair<const Line*, std::size_t>> delta_lines_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Field parse_field(std::string_view text) {
    if (text == "q" || text == "Q") return Field::rationals();
    if (text.size() > 2 && text.substr(0, 2) == "f:") {
        const std::string digits(text.substr(2));
        if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 9)
            return Field::prime(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    throw Error(ErrorCode::InvalidArgument, "field must be 'q' or 'f:<p>', got '" +
                                                std::string(text) + "'");
}

TableHopfData parse_instance(std::string_view text, Field default_field) {
    return InstanceParser(text, default_field).run();
}

TableHopfData load_instance(const std::string& path, Field default_field) {
    return parse_instance(read_file(path), default_field);
}

GroupTable parse_group(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "<end of input>", "empty group file");
    std::string label;
    std::vector<std::string> names;
    std::map<std::string, std::size_t> index;
    std::vector<std::vector<std::size_t>> mul;
    std::vector<bool> seen;
    for (const auto& l : lines) {
        const Token& kw = l.tokens[0];
        if (kw.text == "label") {
            if (l.tokens.size() != 2) fail(l, l.tokens.size() > 2 ? l.tokens[2] : kw, "label takes one token");
            label = l.tokens[1].text;
        } else if (kw.text == "elements") {
            if (!names.empty()) fail(l, kw, "elements given twice");
            if (l.tokens.size() < 2) fail_end(l, "expected element names");
            for (std::size_t i = 1; i < l.tokens.size(); ++i) {
                if (!index.emplace(l.tokens[i].text, names.size()).second)
                    fail(l, l.tokens[i], "duplicate element");
                names.push_back(l.tokens[i].text);
            }
            mul.assign(names.size(), std::vector<std::size_t>(names.size()));
            seen.assign(names.size(), false);
        } else if (kw.text.size() > 1 && kw.text.back() == ':') {
            if (names.empty()) fail(l, kw, "row before the elements line");
            auto it = index.find(kw.text.substr(0, kw.text.size() - 1));
            if (it == index.end()) fail(l, kw, "unknown element");
            if (seen[it->second]) fail(l, kw, "row given twice");
            seen[it->second] = true;
            if (l.tokens.size() != names.size() + 1)
                fail(l, l.tokens.size() > names.size() + 1 ? l.tokens[names.size() + 1] : kw,
                     "row must have " + std::to_string(names.size()) + " entries");
            for (std::size_t j = 0; j < names.size(); ++j) {
                auto jt = index.find(l.tokens[j + 1].text);
                if (jt == index.end()) fail(l, l.tokens[j + 1], "unknown element");
                mul[it->second][j] = jt->second;
            }
        } else {
            fail(l, kw, "unknown directive");
        }
    }
    if (names.empty()) throw ParseError(lines.back().number, 1, "<end of input>", "no elements line");
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!seen[i])
            throw ParseError(lines.back().number, 1, names[i], "missing row for this element");
    GroupTable g(std::move(mul), names);
    if (!label.empty()) g.set_label(label);
    return g;
}

GroupTable load_group(const std::string& path) { return parse_group(read_file(path)); }

}  // namespace hopfneb
