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

#include "hopfneb/convolution.hpp"

#include "hopfneb/errors.hpp"
#include "hopfneb/linalg.hpp"

namespace hopfneb {

namespace {

void require_into(const LinearMapSpec& f, const AlgebraRef& domain, const AlgebraRef& b) {
    if (f.domain() != domain || f.codomain().size() != 1 || f.codomain()[0] != b)
        throw Error(ErrorCode::FactorMismatch,
                    f.name() + " is not a map " + domain->name() + " -> " + b->name());
}

}  // namespace

LinearMapSpec convolution_unit(const HopfDescriptor& h, const AlgebraRef& b) {
    const LinearMapSpec eps = h.eps;
    return LinearMapSpec::from_basis_function(
        "eta.eps", h.algebra, {b}, [eps, b](const BasisKey& k) {
            return TensorElement::from(Element::scalar(b, to_scalar(eps.image_of_key(k))));
        });
}

LinearMapSpec zero_map(const AlgebraRef& domain, const AlgebraRef& b) {
    return LinearMapSpec::from_basis_function("0", domain, {b},
                                              [b](const BasisKey&) { return TensorElement({b}); });
}

LinearMapSpec convolution(const HopfDescriptor& h, const AlgebraRef& b, const LinearMapSpec& f,
                          const LinearMapSpec& g) {
    require_into(f, h.algebra, b);
    require_into(g, h.algebra, b);
    const LinearMapSpec delta = h.delta;
    return LinearMapSpec::from_basis_function(
        "(" + f.name() + "*" + g.name() + ")", h.algebra, {b},
        [delta, f, g](const BasisKey& k) {
            return multiply_slots(tensor_map({&f, &g}, delta.image_of_key(k)), 0);
        });
}

LinearMapSpec star_action(const LinearMapSpec& v, const LinearMapSpec& phi,
                          const LinearMapSpec& delta) {
    if (delta.codomain().size() != 2 || delta.domain() != phi.domain())
        throw Error(ErrorCode::FactorMismatch, "star_action: delta must map A -> H (x) A");
    if (v.domain() != delta.codomain()[0] || phi.codomain().size() != 1 ||
        v.codomain() != phi.codomain())
        throw Error(ErrorCode::FactorMismatch, "star_action: v and phi must map into the same B");
    return LinearMapSpec::from_basis_function(
        "(" + v.name() + "." + phi.name() + ")", phi.domain(), phi.codomain(),
        [v, phi, delta](const BasisKey& k) {
            return multiply_slots(tensor_map({&v, &phi}, delta.image_of_key(k)), 0);
        });
}

LinearMapSpec compose(const LinearMapSpec& f, const LinearMapSpec& g) {
    if (g.codomain().size() != 1 || g.codomain()[0] != f.domain())
        throw Error(ErrorCode::FactorMismatch, "compose: " + f.name() + " after " + g.name());
    return LinearMapSpec::from_basis_function(
        f.name() + "." + g.name(), g.domain(), f.codomain(),
        [f, g](const BasisKey& k) { return tensor_map({&f}, g.image_of_key(k)); });
}

bool maps_equal_on_basis(const LinearMapSpec& f, const LinearMapSpec& g) {
    if (f.domain() != g.domain() || !same_factors(f.codomain(), g.codomain())) return false;
    if (!f.domain()->is_table())
        throw Error(ErrorCode::InfiniteBasis, "maps_equal_on_basis needs a finite basis");
    for (std::size_t i = 0; i < f.domain()->dim(); ++i)
        if (!(f.image_of_key(i) == g.image_of_key(i))) return false;
    return true;
}

ConvolutionInverse convolution_inverse(const HopfDescriptor& h, const AlgebraRef& b,
                                       const LinearMapSpec& f) {
    if (!h.algebra->is_table() || !b->is_table())
        throw Error(ErrorCode::InfiniteBasis, "convolution_inverse needs finite-dimensional H and B");
    require_into(f, h.algebra, b);
    const std::size_t m = h.algebra->dim(), nb = b->dim();
    const Field field = b->field();
    const auto unknown = [nb](std::size_t i, std::size_t t) { return i * nb + t; };
    const Element unit = Element::one(b);

    std::vector<LinearEquation> eqs;
    for (std::size_t i = 0; i < m; ++i) {
        const TensorElement d = h.delta.image_of_key(i);
        const Scalar e = to_scalar(h.eps.image_of_key(i));
        // rows[k] for (f*g)(i) and (g*f)(i), coordinate k of B.
        std::vector<SparseRow> left(nb), right(nb);
        for (const auto& [key, c] : d.terms()) {
            const std::size_t j1 = std::get<std::size_t>(key[0]);
            const std::size_t j2 = std::get<std::size_t>(key[1]);
            const Element f1 = f.image_of_key(j1).to_element();
            const Element f2 = f.image_of_key(j2).to_element();
            for (std::size_t t = 0; t < nb; ++t) {
                const Element bt = Element::basis(b, t);
                const Element lt = f1 * bt, rt = bt * f2;
                for (const auto& [k, v] : lt.terms())
                    accumulate(left[std::get<std::size_t>(k)], unknown(j2, t), c * v);
                for (const auto& [k, v] : rt.terms())
                    accumulate(right[std::get<std::size_t>(k)], unknown(j1, t), c * v);
            }
        }
        for (std::size_t k = 0; k < nb; ++k) {
            const Scalar rhs = e * unit.coefficient(k);
            eqs.push_back({left[k], rhs});
            eqs.push_back({right[k], rhs});
        }
    }
    auto sol = solve_linear_system(eqs, m * nb, field);
    ConvolutionInverse out;
    if (!sol) {
        out.certificate = "inconsistent system: " + std::to_string(eqs.size()) +
                          " equations in " + std::to_string(m * nb) +
                          " unknowns for f*g = g*f = eta.eps";
        return out;
    }
    LinearMapSpec g("(" + f.name() + ")^-1", h.algebra, {b}, Extension::Linear);
    for (std::size_t i = 0; i < m; ++i) {
        Element img(b);
        for (std::size_t t = 0; t < nb; ++t) img.add_term(t, (*sol)[unknown(i, t)]);
        g.set_basis_image(i, img);
    }
    out.inverse = std::move(g);
    return out;
}

}  // namespace hopfneb
