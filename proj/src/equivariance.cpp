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

#include "hopfneb/equivariance.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hopfneb/check.hpp"
#include "hopfneb/errors.hpp"

namespace hopfneb {

namespace {

TensorElement delta_id(const Coaction& c, const TensorElement& x) {
    const LinearMapSpec id = LinearMapSpec::identity(c.algebra);
    return tensor_map({&c.hopf.delta, &id}, x);
}

TensorElement id_delta(const Coaction& c, const TensorElement& x) {
    const LinearMapSpec id = LinearMapSpec::identity(c.hopf.algebra);
    return tensor_map({&id, &c.delta}, x);
}

TensorElement eps_id(const Coaction& c, const TensorElement& x) {
    const LinearMapSpec id = LinearMapSpec::identity(c.algebra);
    return drop_scalar_slots(tensor_map({&c.hopf.eps, &id}, x));
}

TwistedModuleElement module_vector(const Element& a, std::size_t n, std::size_t q) {
    auto v = zero_vector({a.owner()}, n);
    v.at(q) = TensorElement::from(a);
    return v;
}

std::string pure_label(const Element& h, const Element& a, std::size_t p) {
    return element_label(h) + " (x) " + element_label(a) + "*e" + std::to_string(p);
}

CheckOutcome exact_matrix_identity(const ModuleMatrix& m) {
    CheckOutcome out;
    if (m == ModuleMatrix::identity(m.ring(), m.rank())) {
        const bool free = std::any_of(m.ring().begin(), m.ring().end(),
                                      [](const AlgebraRef& a) { return a->is_free(); });
        out.level = free ? "free" : "table";
        return out;
    }
    out.status = Status::Fail;
    out.witness = m.to_string();
    return out;
}

}  // namespace

TensorElement Coaction::nu(const Element& a) const {
    return TensorElement::pure({Element::one(hopf.algebra), a});
}

TensorElement Coaction::gamma(const Element& a) const { return delta_id(*this, coact(a)); }

TensorElement Coaction::nu3(const Element& a) const {
    return TensorElement::pure({Element::one(hopf.algebra), Element::one(hopf.algebra), a});
}

RingHom Coaction::delta_hom() const { return RingHom::slotwise("delta", {&delta}); }

RingHom Coaction::nu_hom() const {
    const AlgebraRef h = hopf.algebra;
    return RingHom("nu", {algebra}, ring(),
                   [h](const TensorElement& x) { return insert_unit_slot(x, 0, h); });
}

Coaction Coaction::regular(const HopfDescriptor& h) {
    return Coaction{h.name, h, h.algebra, h.delta};
}

Coaction Coaction::trivial(const HopfDescriptor& h, const AlgebraRef& a) {
    const AlgebraRef ha = h.algebra;
    LinearMapSpec d = LinearMapSpec::from_basis_function(
        "1(x)id", a, {ha, a}, [ha, a](const BasisKey& k) {
            TensorElement t({ha, a});
            const Element one = Element::one(ha);
            for (const auto& [uk, uc] : one.terms()) t.add_term({uk, k}, uc);
            return t;
        });
    return Coaction{h.name + " trivial on " + a->name(), h, a, std::move(d)};
}

std::vector<Element> spanning_words(const AlgebraRef& a, std::size_t degree) {
    std::vector<Element> out;
    if (a->is_table()) {
        for (std::size_t i = 0; i < a->dim(); ++i) out.push_back(Element::basis(a, i));
        return out;
    }
    std::set<Word> words;
    for (auto& w : words_up_to(a->generators_up_to(1), std::min<std::size_t>(degree, 2)))
        words.insert(std::move(w));
    for (auto& w : words_up_to(a->generators_up_to(0), degree)) words.insert(std::move(w));
    for (const auto& w : words) out.push_back(Element::word(a, w));
    return out;
}

std::vector<Element> spanning_generators(const AlgebraRef& a, int max_level) {
    std::vector<Element> out;
    if (a->is_table()) {
        for (std::size_t i = 0; i < a->dim(); ++i) out.push_back(Element::basis(a, i));
        return out;
    }
    out.push_back(Element::one(a));
    for (const auto& g : a->generators_up_to(max_level)) out.push_back(Element::generator(a, g));
    return out;
}

std::string module_element_label(const std::string& instance, const Element& a, std::size_t q) {
    return instance + ": " + element_label(a) + "*e" + std::to_string(q);
}

Report check_coaction(const Coaction& c, std::size_t degree, IdealOracle* oracle,
                      const std::string& scenario) {
    Report rep;
    const std::string prefix = c.name + ": ";
    {
        const Element one = Element::one(c.algebra);
        rep.add(make_entry(scenario, "coaction-unit", prefix + "1",
                           compare_tensors(c.coact(one), c.nu(one), oracle), degree));
    }
    for (const auto& a : spanning_words(c.algebra, degree)) {
        const std::string el = prefix + element_label(a);
        const TensorElement d = c.coact(a);
        rep.add(make_entry(scenario, "coaction-coassociativity", el,
                           compare_tensors(delta_id(c, d), id_delta(c, d), oracle), degree));
        rep.add(make_entry(scenario, "coaction-counit", el,
                           compare_tensors(eps_id(c, d), TensorElement::from(a), oracle), degree));
    }
    if (c.algebra->is_table()) {
        const auto basis = spanning_words(c.algebra, degree);
        for (const auto& x : basis)
            for (const auto& y : basis)
                rep.add(make_entry(
                    scenario, "coaction-multiplicative",
                    prefix + element_label(x) + " * " + element_label(y),
                    compare_tensors(c.coact(x * y), tensor_mul(c.coact(x), c.coact(y)), oracle),
                    degree));
    }
    return rep;
}

TwistedModuleElement NebMatrix::theta(const Element& a, std::size_t q) const {
    const TensorElement na = coaction.nu(a);
    TwistedModuleElement x;
    for (std::size_t p = 0; p < rank(); ++p) x.push_back(tensor_mul(na, T.at(p, q)));
    return x;
}

TwistedModuleElement neb_coassociativity_lhs(const NebMatrix& th, const TwistedModuleElement& x) {
    const Coaction& c = th.coaction;
    auto out = zero_vector(c.ring3(), th.rank());
    for (std::size_t p = 0; p < th.rank(); ++p) {
        if (x[p].is_zero()) continue;
        const TensorElement lifted = insert_unit_slot(x[p], 0, c.hopf.algebra);
        for (std::size_t r = 0; r < th.rank(); ++r)
            out[r] += tensor_mul(lifted, id_delta(c, th.T.at(r, p)));
    }
    return out;
}

TwistedModuleElement neb_coassociativity_rhs(const NebMatrix& th, const TwistedModuleElement& x) {
    TwistedModuleElement out;
    for (const auto& xr : x) out.push_back(delta_id(th.coaction, xr));
    return out;
}

TwistedModuleElement neb_counit_value(const NebMatrix& th, const TwistedModuleElement& x) {
    TwistedModuleElement out;
    for (const auto& xp : x) out.push_back(eps_id(th.coaction, xp));
    return out;
}

TwistedModuleElement transport(const Coaction& c, const Element& a, const TwistedModuleElement& v) {
    const TensorElement t = c.nu3(a);
    TwistedModuleElement out;
    for (const auto& x : v) out.push_back(tensor_mul(t, x));
    return out;
}

Report check_neb(const NebMatrix& th, std::size_t degree, IdealOracle* oracle,
                 const std::string& scenario) {
    Report rep;
    for (const auto& a : spanning_words(th.coaction.algebra, degree))
        for (std::size_t q = 0; q < th.rank(); ++q) {
            const std::string el = module_element_label(th.name, a, q);
            const auto x = th.theta(a, q);
            rep.add(make_entry(scenario, "neb-coassociativity", el,
                               compare_vectors(neb_coassociativity_lhs(th, x),
                                               neb_coassociativity_rhs(th, x), oracle),
                               degree));
            rep.add(make_entry(
                scenario, "neb-counit", el,
                compare_vectors(neb_counit_value(th, x), module_vector(a, th.rank(), q), oracle),
                degree));
        }
    return rep;
}

TwistedModuleElement HopfModuleMatrix::coact(const Element& a, std::size_t q) const {
    const TensorElement da = coaction.coact(a);
    TwistedModuleElement x;
    for (std::size_t p = 0; p < rank(); ++p) x.push_back(tensor_mul(da, D.at(p, q)));
    return x;
}

Report check_hopfmodule(const HopfModuleMatrix& d, std::size_t degree, IdealOracle* oracle,
                        const std::string& scenario) {
    Report rep;
    const Coaction& c = d.coaction;
    const std::size_t n = d.rank();
    const auto span = spanning_words(c.algebra, degree);
    for (const auto& a : span)
        for (std::size_t q = 0; q < n; ++q) {
            const std::string el = module_element_label(d.name, a, q);
            const auto x = d.coact(a, q);
            TwistedModuleElement lhs, rhs = zero_vector(c.ring3(), n), counit;
            for (std::size_t r = 0; r < n; ++r) lhs.push_back(delta_id(c, x[r]));
            for (std::size_t p = 0; p < n; ++p) {
                counit.push_back(eps_id(c, x[p]));
                if (x[p].is_zero()) continue;
                const TensorElement lifted = id_delta(c, x[p]);
                for (std::size_t r = 0; r < n; ++r)
                    rhs[r] += tensor_mul(lifted, insert_unit_slot(d.D.at(r, p), 0, c.hopf.algebra));
            }
            rep.add(make_entry(scenario, "hopfmodule-coassociativity", el,
                               compare_vectors(lhs, rhs, oracle), degree));
            rep.add(make_entry(scenario, "hopfmodule-counit", el,
                               compare_vectors(counit, module_vector(a, n, q), oracle), degree));
        }

    const auto times = [&](const Element& g, const TwistedModuleElement& v) {
        const TensorElement dg = c.coact(g);
        TwistedModuleElement out;
        for (const auto& x : v) out.push_back(tensor_mul(dg, x));
        return out;
    };
    for (std::size_t q = 0; q < n; ++q) {
        if (c.algebra->is_table()) {
            for (const auto& x : span)
                for (const auto& y : span)
                    rep.add(make_entry(scenario, "hopfmodule-linearity",
                                       d.name + ": " + element_label(x) + " * " + element_label(y) +
                                           "*e" + std::to_string(q),
                                       compare_vectors(d.coact(x * y, q), times(x, d.coact(y, q)),
                                                       oracle),
                                       degree));
            continue;
        }
        for (const auto& a : span) {
            const Word& w = std::get<Word>(a.terms().begin()->first);
            if (w.empty()) continue;
            const Element g = Element::generator(c.algebra, w.letters.front());
            const Element rest = Element::word(
                c.algebra, Word(std::vector<GenId>(w.letters.begin() + 1, w.letters.end())));
            rep.add(make_entry(scenario, "hopfmodule-linearity", module_element_label(d.name, a, q),
                               compare_vectors(d.coact(a, q), times(g, d.coact(rest, q)), oracle),
                               degree));
        }
    }
    return rep;
}

RingHom sigma(const Coaction& c) {
    const LinearMapSpec s = c.hopf.S();
    const LinearMapSpec delta = c.delta;
    const AlgebraRef a = c.algebra;
    return RingHom("sigma", c.ring(), c.ring(), [s, delta, a](const TensorElement& x) {
        TensorElement out(x.factors());
        const TensorElement one_a = TensorElement::one({a});
        for (const auto& [key, coef] : x.terms())
            out += tensor_mul(s.image_of_key(key[0]).otimes(one_a), delta.image_of_key(key[1]))
                       .scaled(coef);
        return out;
    });
}

Report check_isigma(const Coaction& c, std::size_t degree, IdealOracle* oracle,
                    const std::string& scenario) {
    Report rep;
    const RingHom s = sigma(c);
    for (const auto& a : spanning_generators(c.algebra, 1)) {
        const std::string el = c.name + ": " + element_label(a);
        rep.add(make_entry(scenario, "sigma-delta", el,
                           compare_tensors(s(c.coact(a)), c.nu(a), oracle), degree));
        rep.add(make_entry(scenario, "sigma-unit", el,
                           compare_tensors(s(c.nu(a)), c.coact(a), oracle), degree));
    }
    return rep;
}

HopfModuleMatrix rho_from_theta_commutative(const NebMatrix& th) {
    if (!th.coaction.hopf.commutative())
        throw Error(ErrorCode::NotCommutative,
                    th.coaction.hopf.name + " is not commutative; sigma is not an algebra map");
    return HopfModuleMatrix{"rho(" + th.name + ")", th.coaction,
                            extend_scalars(sigma(th.coaction), th.T)};
}

NebMatrix rho_from_hopfmodule_commutative(const HopfModuleMatrix& d) {
    if (!d.coaction.hopf.commutative())
        throw Error(ErrorCode::NotCommutative,
                    d.coaction.hopf.name + " is not commutative; sigma is not an algebra map");
    return NebMatrix{"Theta(" + d.name + ")", d.coaction, extend_scalars(sigma(d.coaction), d.D)};
}

Report check_inverse_pair(const ModuleMatrix& m, const ModuleMatrix& inv, const std::string& label,
                          const std::string& scenario) {
    Report rep;
    rep.add(make_entry(scenario, "inverse-left", label, exact_matrix_identity(compose(inv, m)), 0));
    rep.add(make_entry(scenario, "inverse-right", label, exact_matrix_identity(compose(m, inv)), 0));
    return rep;
}

namespace {

ModuleMatrix certified_inverse(const ModuleMatrix& m, const std::string& what) {
    std::optional<ModuleMatrix> inv;
    try {
        inv = invert_matrix(m);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InfiniteBasis) throw;
        throw Error(ErrorCode::NoCertifiedInverse,
                    what + ": no finite solve over " + factors_to_string(m.ring()));
    }
    if (!inv) throw Error(ErrorCode::NoCertifiedInverse, what + " has no two-sided inverse");
    return *inv;
}

}  // namespace

HopfModuleMatrix correspond_theta_hopfmodule(const NebMatrix& th) {
    return HopfModuleMatrix{"dbar(" + th.name + ")", th.coaction, certified_inverse(th.T, th.name)};
}

NebMatrix correspond_hopfmodule_theta(const HopfModuleMatrix& d) {
    return NebMatrix{"theta(" + d.name + ")", d.coaction, certified_inverse(d.D, d.name)};
}

Comonads comonad_structures(const Coaction& c, std::size_t rank, std::size_t degree,
                            IdealOracle* oracle, const std::string& scenario) {
    const auto coordinatewise = [](auto f) {
        return [f](const TwistedModuleElement& v) {
            TwistedModuleElement out;
            for (const auto& x : v) out.push_back(f(x));
            return out;
        };
    };
    const auto left_times = [](const TensorElement& t, const TwistedModuleElement& v) {
        TwistedModuleElement out;
        for (const auto& x : v) out.push_back(tensor_mul(t, x));
        return out;
    };
    const VectorMap comultiply =
        coordinatewise([c](const TensorElement& x) { return delta_id(c, x); });
    const VectorMap counit = coordinatewise([c](const TensorElement& x) { return eps_id(c, x); });

    Comonads out{
        {"G", comultiply, counit,
         [c, left_times](const Element& a, const TwistedModuleElement& v) {
             return left_times(c.coact(a), v);
         },
         [c, left_times](const Element& a, const TwistedModuleElement& v) {
             return left_times(id_delta(c, c.coact(a)), v);
         }},
        {"H", comultiply, counit,
         [c, left_times](const Element& a, const TwistedModuleElement& v) {
             return left_times(c.nu(a), v);
         },
         [c, left_times](const Element& a, const TwistedModuleElement& v) {
             return left_times(c.nu3(a), v);
         }},
        {}};

    const AlgebraRef h = c.hopf.algebra;
    const LinearMapSpec id_h = LinearMapSpec::identity(h);
    const LinearMapSpec id_a = LinearMapSpec::identity(c.algebra);
    const auto hs = spanning_generators(h, 0);
    const auto bs = spanning_generators(c.algebra, 0);
    const auto as = spanning_generators(c.algebra, 1);
    const std::string prefix = c.name + ": ";

    for (const ComonadStructure* t : {&out.G, &out.H}) {
        const std::string& nm = t->name;
        for (const auto& hx : hs)
            for (const auto& bx : bs)
                for (std::size_t p = 0; p < rank; ++p) {
                    auto x = zero_vector(c.ring(), rank);
                    x[p] = TensorElement::pure({hx, bx});
                    const std::string el = prefix + pure_label(hx, bx, p);
                    const auto y = t->comultiply(x);
                    TwistedModuleElement l, r, cl, cr;
                    for (const auto& yp : y) {
                        l.push_back(tensor_map({&c.hopf.delta, &id_h, &id_a}, yp));
                        r.push_back(tensor_map({&id_h, &c.hopf.delta, &id_a}, yp));
                        cl.push_back(drop_scalar_slots(tensor_map({&c.hopf.eps, &id_h, &id_a}, yp)));
                        cr.push_back(drop_scalar_slots(tensor_map({&id_h, &c.hopf.eps, &id_a}, yp)));
                    }
                    out.report.add(make_entry(scenario, nm + "-coassociativity", el,
                                              compare_vectors(l, r, oracle), degree));
                    out.report.add(make_entry(scenario, nm + "-counit-left", el,
                                              compare_vectors(cl, x, oracle), degree));
                    out.report.add(make_entry(scenario, nm + "-counit-right", el,
                                              compare_vectors(cr, x, oracle), degree));
                    for (const auto& a : as) {
                        const std::string ela = el + " ; a=" + element_label(a);
                        out.report.add(make_entry(
                            scenario, nm + "-linearity", ela,
                            compare_vectors(t->comultiply(t->act(a, x)), t->act2(a, y), oracle),
                            degree));
                        TwistedModuleElement ax = t->counit(x);
                        for (auto& v : ax) v = tensor_mul(TensorElement::from(a), v);
                        out.report.add(make_entry(scenario, nm + "-counit-linearity", ela,
                                                  compare_vectors(t->counit(t->act(a, x)), ax,
                                                                  oracle),
                                                  degree));
                        if (nm != "H") continue;
                        const TensorElement da = c.coact(a);
                        TwistedModuleElement xa, ya, ea, eb;
                        for (std::size_t s = 0; s < rank; ++s) {
                            xa.push_back(tensor_mul(x[s], da));
                            ya.push_back(tensor_mul(y[s], id_delta(c, da)));
                        }
                        out.report.add(make_entry(scenario, "H-right-linearity", ela,
                                                  compare_vectors(t->comultiply(xa), ya, oracle),
                                                  degree));
                        for (const auto& v : t->counit(x))
                            eb.push_back(tensor_mul(v, TensorElement::from(a)));
                        out.report.add(make_entry(scenario, "H-counit-right-linearity", ela,
                                                  compare_vectors(t->counit(xa), eb, oracle),
                                                  degree));
                    }
                }
    }
    return out;
}

TwistedModuleElement comodule_lift(const NebMatrix& th, const Element& a, std::size_t q) {
    const Coaction& c = th.coaction;
    const AlgebraRef h = c.hopf.algebra, alg = c.algebra;
    const auto x = th.theta(a, q);
    TwistedModuleElement out;
    for (std::size_t r = 0; r < th.rank(); ++r) {
        TensorElement::TermMap acc;
        for (std::size_t p = 0; p < th.rank(); ++p)
            for (const auto& [k1, c1] : x[p].terms())
                for (const auto& [k2, c2] : th.T.at(r, p).terms()) {
                    const TensorElement d = c.delta.image_of_key(k2[1]);
                    for (const auto& [k3, c3] : d.terms()) {
                        std::map<BasisKey, Scalar> hh, aa;
                        h->multiply_keys(k1[0], k3[0], c1 * c2 * c3, hh);
                        alg->multiply_keys(k1[1], k3[1], alg->scalar(1), aa);
                        for (const auto& [kh, ch] : hh)
                            for (const auto& [ka, ca] : aa)
                                accumulate(acc, TensorElement::Key{k2[0], kh, ka}, ch * ca);
                    }
                }
        out.push_back(TensorElement(c.ring3(), std::move(acc)));
    }
    return out;
}

Report check_comodule_equivalence(const NebMatrix& th, std::size_t degree, IdealOracle* oracle,
                                  const std::string& scenario) {
    Report rep;
    const Coaction& c = th.coaction;
    for (const auto& a : spanning_words(c.algebra, degree))
        for (std::size_t q = 0; q < th.rank(); ++q) {
            const std::string el = module_element_label(th.name, a, q);
            const auto x = th.theta(a, q);
            TwistedModuleElement counit;
            for (const auto& xp : x) {
                TensorElement::TermMap acc;
                for (const auto& [k, coef] : xp.terms())
                    accumulate(acc, TensorElement::Key{k[1]},
                               coef * to_scalar(c.hopf.eps.image_of_key(k[0])));
                counit.push_back(TensorElement({c.algebra}, std::move(acc)));
            }
            TwistedModuleElement comult;
            for (const auto& xr : x) comult.push_back(delta_id(c, xr));
            rep.add(make_entry(scenario, "comodule-counit", el,
                               compare_vectors(counit, module_vector(a, th.rank(), q), oracle),
                               degree));
            rep.add(make_entry(scenario, "comodule-coassociativity", el,
                               compare_vectors(comodule_lift(th, a, q), comult, oracle), degree));
        }

    const Report neb = check_neb(th, degree, oracle, scenario);
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"neb-coassociativity", "comodule-coassociativity"}, {"neb-counit", "comodule-counit"}};
    std::vector<ReportEntry> agreement;
    for (const auto& [nc, cc] : pairs) {
        for (const ReportEntry* e : rep.find(cc)) {
            const auto match = neb.find(nc, e->element);
            CheckOutcome out;
            if (match.size() != 1) {
                out.status = Status::Fail;
                out.witness = "no " + nc + " entry";
            } else if (match[0]->status != e->status || match[0]->witness != e->witness) {
                out.status = Status::Fail;
                out.witness = nc + " " + std::string(status_name(match[0]->status)) + " [" +
                              match[0]->witness + "] vs " + cc + " " +
                              std::string(status_name(e->status)) + " [" + e->witness + "]";
            } else {
                out.level = c.algebra->is_free() || c.hopf.is_free() ? "free" : "table";
                out.note = std::string(status_name(e->status));
            }
            agreement.push_back(make_entry(scenario, "neb-agreement", cc + " " + e->element, out,
                                           degree));
        }
    }
    for (auto& e : agreement) rep.add(std::move(e));
    return rep;
}

}  // namespace hopfneb
