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

#include "hopfneb/counterexamples.hpp"

#include "hopfneb/errors.hpp"

namespace hopfneb {

HopfDescriptor matrix_free_hopf(Field field) {
    return make_free_hopf(make_matrix_coalgebra(2, field), "H");
}

GenId matrix_generator(int r, int i, int j) { return GenId::make("a", {r, i, j}); }

namespace {

ModuleMatrix level0_matrix(const HopfDescriptor& h) {
    const Ring ring{h.algebra, h.algebra};
    ModuleMatrix m(ring, 2);
    const Element one = Element::one(h.algebra);
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            m.set(p, q,
                  TensorElement::pure({Element::generator(h.algebra, matrix_generator(0, p, q)), one}));
    return m;
}

}  // namespace

NebMatrix build_example_ex(const HopfDescriptor& h) {
    return NebMatrix{"Ex", Coaction::regular(h), level0_matrix(h)};
}

HopfModuleMatrix build_example_exhopf(const HopfDescriptor& h) {
    return HopfModuleMatrix{"ExHopf", Coaction::regular(h), level0_matrix(h)};
}

PartialW PartialW::make(const HopfDescriptor& h) {
    const GenId y = GenId::make("y"), z = GenId::make("z");
    AlgebraRef R = Algebra::free("R", h.algebra->field(), FreeAlphabet::finite({y, z}));
    LinearMapSpec w("w", h.algebra, {R}, Extension::AlgebraHom);
    const Element ey = Element::generator(R, y), ez = Element::generator(R, z);
    w.set_generator_image(matrix_generator(0, 0, 0), Element::one(R));
    w.set_generator_image(matrix_generator(0, 0, 1), ey);
    w.set_generator_image(matrix_generator(0, 1, 0), ez);
    w.set_generator_image(matrix_generator(0, 1, 1), ey * ez);
    RingHom w_eps = RingHom::slotwise("w.eps", {&w, &h.eps});
    return PartialW{R, std::move(w), std::move(w_eps)};
}

Element PartialW::y() const { return Element::generator(R, GenId::make("y")); }
Element PartialW::z() const { return Element::generator(R, GenId::make("z")); }

Element PartialW::lift(const Word& r_word) const {
    std::vector<GenId> letters;
    for (const auto& g : r_word.letters) {
        if (g.family() == "y")
            letters.push_back(matrix_generator(0, 0, 1));
        else if (g.family() == "z")
            letters.push_back(matrix_generator(0, 1, 0));
        else
            throw Error(ErrorCode::InvalidArgument, "lift: " + g.to_string() + " is not in R");
    }
    return Element::word(w.domain(), Word(std::move(letters)));
}

std::vector<Element> r_spanning_words(const PartialW& pw, std::size_t max_degree) {
    std::vector<Element> out;
    for (auto& w : words_up_to(pw.R->generators_up_to(0), max_degree))
        out.push_back(Element::word(pw.R, std::move(w)));
    return out;
}

std::pair<Element, Element> theta_R_direct(const PartialW& pw, const Element& x0,
                                           const Element& x1) {
    const Element y = pw.y(), z = pw.z();
    return {x0 + x1 * y, x0 * z + x1 * y * z};
}

std::pair<Element, Element> theta_R_extended(const PartialW& pw, const ModuleMatrix& Theta,
                                             const Element& x0, const Element& x1) {
    const AlgebraRef h = pw.w.domain();
    const Ring ring{h, h};
    const TensorElement one_r = TensorElement::one({pw.R});
    auto out = zero_vector({pw.R}, 2);
    const Element* xs[2] = {&x0, &x1};
    for (std::size_t q = 0; q < 2; ++q)
        for (const auto& [key, coef] : xs[q]->terms()) {
            const Element lifted = pw.lift(std::get<Word>(key));
            auto v = zero_vector(ring, 2);
            v[q] = TensorElement::pure({lifted, Element::one(h)});
            if (!(pw.w_eps(v[q]) == TensorElement::from(Element::word(pw.R, std::get<Word>(key)))))
                throw Error(ErrorCode::InvalidArgument, "lift does not map back onto its word");
            const auto image = Theta.apply(v);
            std::vector<BalancedTerm> terms;
            for (std::size_t p = 0; p < 2; ++p) terms.push_back({one_r, image[p], p});
            const auto pushed = balanced_normalize(terms, pw.w_eps, 2);
            for (std::size_t p = 0; p < 2; ++p) out[p] += pushed[p].scaled(coef);
        }
    return {out[0].to_element(), out[1].to_element()};
}

std::pair<Element, Element> apply_extended(const PartialW& pw, const ModuleMatrix& m,
                                           const Element& x0, const Element& x1) {
    const ModuleMatrix mr = extend_scalars(pw.w_eps, m);
    const auto y = mr.apply({TensorElement::from(x0), TensorElement::from(x1)});
    return {y[0].to_element(), y[1].to_element()};
}

NebMatrix mutate_example_ex(const NebMatrix& ex) {
    NebMatrix m = ex;
    m.name = "Ex-mutated";
    m.T.set(0, 1, TensorElement(ex.T.ring()));
    m.T.set(1, 0, TensorElement(ex.T.ring()));
    return m;
}

HopfModuleMatrix truncate_example_exhopf(const HopfModuleMatrix& exhopf) {
    HopfModuleMatrix d = exhopf;
    d.name = "ExHopf-truncated";
    for (std::size_t p = 0; p < d.rank(); ++p) d.D.set(p, 1, TensorElement(d.D.ring()));
    return d;
}

Coaction corrupted_coaction(Field field) {
    const HopfDescriptor h = make_group_hopf(GroupTable::cyclic(2), field);
    const AlgebraRef a = h.algebra;
    LinearMapSpec d("delta'", a, {a, a}, Extension::AlgebraHom);
    d.set_basis_image(0, TensorElement::pure({Element::basis(a, 0), Element::basis(a, 0)}));
    d.set_basis_image(1, TensorElement::pure({Element::basis(a, 1), Element::basis(a, 0)}));
    return Coaction{h.name + " corrupted", h, a, std::move(d)};
}

}  // namespace hopfneb
