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

#include "hopfneb/tensor.hpp"

#include <map>

#include "hopfneb/errors.hpp"
#include "hopfneb/linalg.hpp"

namespace hopfneb {

RingHom RingHom::identity(const Ring& r) {
    return RingHom("id", r, r, [](const TensorElement& x) { return x; });
}

RingHom RingHom::slotwise(std::string name, const std::vector<const LinearMapSpec*>& maps) {
    Ring dom, cod;
    std::vector<LinearMapSpec> owned;
    for (const auto* f : maps) {
        dom.push_back(f->domain());
        for (const auto& c : f->codomain())
            if (!c->is_scalars()) cod.push_back(c);
        owned.push_back(*f);
    }
    if (cod.empty()) cod.push_back(maps.front()->codomain().front());
    return RingHom(std::move(name), dom, cod, [owned](const TensorElement& x) {
        std::vector<const LinearMapSpec*> ptrs;
        for (const auto& f : owned) ptrs.push_back(&f);
        return drop_scalar_slots(tensor_map(ptrs, x));
    });
}

RingHom RingHom::from_map(const LinearMapSpec& f) {
    return slotwise(f.name(), {&f});
}

TensorElement RingHom::operator()(const TensorElement& x) const {
    if (!same_factors(x.factors(), domain_))
        throw Error(ErrorCode::FactorMismatch, name_ + " expects " + factors_to_string(domain_) +
                                                   ", got " + factors_to_string(x.factors()));
    TensorElement y = fn_(x);
    if (!same_factors(y.factors(), codomain_))
        throw Error(ErrorCode::FactorMismatch, name_ + " produced " + factors_to_string(y.factors()));
    return y;
}

RingHom compose(const RingHom& psi, const RingHom& phi) {
    if (!same_factors(phi.codomain(), psi.domain()))
        throw Error(ErrorCode::FactorMismatch, "compose: " + psi.name() + " after " + phi.name());
    return RingHom(psi.name() + "." + phi.name(), phi.domain(), psi.codomain(),
                   [psi, phi](const TensorElement& x) { return psi(phi(x)); });
}

TwistedModuleElement zero_vector(const Ring& r, std::size_t n) {
    return TwistedModuleElement(n, TensorElement(r));
}

TwistedModuleElement unit_vector(const Ring& r, std::size_t n, std::size_t p) {
    auto v = zero_vector(r, n);
    v.at(p) = TensorElement::one(r);
    return v;
}

bool is_zero_vector(const TwistedModuleElement& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::string vector_to_string(const TwistedModuleElement& v) {
    std::string s;
    bool first = true;
    for (std::size_t p = 0; p < v.size(); ++p) {
        if (v[p].is_zero()) continue;
        if (!first) s += "; ";
        first = false;
        s += "e" + std::to_string(p) + ": " + v[p].to_string();
    }
    return first ? "0" : s;
}

TwistedModuleElement balanced_normalize(const std::vector<BalancedTerm>& terms, const RingHom& phi,
                                        std::size_t rank) {
    auto out = zero_vector(phi.codomain(), rank);
    for (const auto& t : terms) {
        if (t.slot >= rank) throw Error(ErrorCode::InvalidArgument, "balanced term slot out of range");
        out[t.slot] += tensor_mul(t.x, phi(t.a));
    }
    return out;
}

ModuleMatrix::ModuleMatrix(Ring ring, std::size_t n)
    : ring_(std::move(ring)), n_(n), m_(n, std::vector<TensorElement>(n, TensorElement(ring_))) {}

ModuleMatrix ModuleMatrix::identity(const Ring& ring, std::size_t n) {
    ModuleMatrix m(ring, n);
    for (std::size_t p = 0; p < n; ++p) m.m_[p][p] = TensorElement::one(ring);
    return m;
}

ModuleMatrix ModuleMatrix::from_columns(const Ring& ring,
                                        const std::vector<TwistedModuleElement>& cols) {
    ModuleMatrix m(ring, cols.size());
    for (std::size_t q = 0; q < cols.size(); ++q) {
        if (cols[q].size() != cols.size())
            throw Error(ErrorCode::InvalidArgument, "from_columns: column has wrong length");
        for (std::size_t p = 0; p < cols.size(); ++p) m.set(p, q, cols[q][p]);
    }
    return m;
}

void ModuleMatrix::set(std::size_t p, std::size_t q, TensorElement v) {
    if (!same_factors(v.factors(), ring_))
        throw Error(ErrorCode::FactorMismatch, "matrix entry over " + factors_to_string(v.factors()));
    m_.at(p).at(q) = std::move(v);
}

TwistedModuleElement ModuleMatrix::column(std::size_t q) const {
    TwistedModuleElement c;
    for (std::size_t p = 0; p < n_; ++p) c.push_back(m_[p][q]);
    return c;
}

TwistedModuleElement ModuleMatrix::apply(const TwistedModuleElement& x) const {
    if (x.size() != n_) throw Error(ErrorCode::InvalidArgument, "apply: rank mismatch");
    auto y = zero_vector(ring_, n_);
    for (std::size_t q = 0; q < n_; ++q) {
        if (x[q].is_zero()) continue;
        for (std::size_t p = 0; p < n_; ++p) y[p] += tensor_mul(x[q], m_[p][q]);
    }
    return y;
}

bool operator==(const ModuleMatrix& a, const ModuleMatrix& b) {
    return same_factors(a.ring_, b.ring_) && a.n_ == b.n_ && a.m_ == b.m_;
}

std::string ModuleMatrix::to_string() const {
    std::string s = "[";
    for (std::size_t p = 0; p < n_; ++p) {
        if (p) s += "; ";
        s += "[";
        for (std::size_t q = 0; q < n_; ++q) {
            if (q) s += ", ";
            s += m_[p][q].to_string();
        }
        s += "]";
    }
    return s + "]";
}

ModuleMatrix compose(const ModuleMatrix& phi, const ModuleMatrix& psi) {
    if (!same_factors(phi.ring(), psi.ring()) || phi.rank() != psi.rank())
        throw Error(ErrorCode::FactorMismatch, "compose: matrices over different rings");
    ModuleMatrix out(phi.ring(), phi.rank());
    for (std::size_t q = 0; q < phi.rank(); ++q) {
        auto col = phi.apply(psi.column(q));
        for (std::size_t r = 0; r < phi.rank(); ++r) out.set(r, q, std::move(col[r]));
    }
    return out;
}

std::optional<ModuleMatrix> invert_matrix(const ModuleMatrix& m) {
    const Ring& ring = m.ring();
    std::vector<TensorElement::Key> basis{{}};
    for (const auto& f : ring) {
        if (!f->is_table())
            throw Error(ErrorCode::InfiniteBasis, "invert_matrix over " + factors_to_string(ring));
        std::vector<TensorElement::Key> next;
        for (const auto& k : basis)
            for (std::size_t i = 0; i < f->dim(); ++i) {
                auto nk = k;
                nk.push_back(i);
                next.push_back(std::move(nk));
            }
        basis = std::move(next);
    }
    std::map<TensorElement::Key, std::size_t> coord;
    for (std::size_t t = 0; t < basis.size(); ++t) coord.emplace(basis[t], t);

    const std::size_t n = m.rank(), dim = basis.size();
    const Field field = ring.front()->field();
    const auto unknown = [n, dim](std::size_t r, std::size_t p, std::size_t t) {
        return (r * n + p) * dim + t;
    };
    std::vector<TensorElement> b;
    for (const auto& k : basis) b.push_back(TensorElement(ring, {{k, Scalar(1, field)}}));
    const TensorElement one = TensorElement::one(ring);

    std::vector<LinearEquation> eqs;
    for (int side = 0; side < 2; ++side)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t q = 0; q < n; ++q) {
                std::vector<SparseRow> rows(dim);
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t t = 0; t < dim; ++t) {
                        // X o M: M[p][q] X[r][p];  M o X: X[p][q] M[r][p].
                        const TensorElement prod = side == 0 ? tensor_mul(m.at(p, q), b[t])
                                                             : tensor_mul(b[t], m.at(r, p));
                        const std::size_t u = side == 0 ? unknown(r, p, t) : unknown(p, q, t);
                        for (const auto& [k, c] : prod.terms()) accumulate(rows[coord.at(k)], u, c);
                    }
                for (std::size_t k = 0; k < dim; ++k) {
                    Scalar rhs(0, field);
                    if (r == q) {
                        auto it = one.terms().find(basis[k]);
                        if (it != one.terms().end()) rhs = it->second;
                    }
                    eqs.push_back({std::move(rows[k]), rhs});
                }
            }
    auto sol = solve_linear_system(eqs, n * n * dim, field);
    if (!sol) return std::nullopt;
    ModuleMatrix inv(ring, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t p = 0; p < n; ++p) {
            TensorElement e(ring);
            for (std::size_t t = 0; t < dim; ++t) e += b[t].scaled((*sol)[unknown(r, p, t)]);
            inv.set(r, p, std::move(e));
        }
    return inv;
}

ModuleMatrix extend_scalars(const RingHom& phi, const ModuleMatrix& m) {
    if (!same_factors(phi.domain(), m.ring()))
        throw Error(ErrorCode::FactorMismatch, "extend_scalars: " + phi.name() + " expects " +
                                                   factors_to_string(phi.domain()));
    ModuleMatrix out(phi.codomain(), m.rank());
    for (std::size_t p = 0; p < m.rank(); ++p)
        for (std::size_t q = 0; q < m.rank(); ++q) out.set(p, q, phi(m.at(p, q)));
    return out;
}

TwistedModuleElement ModuleMapOverPhi::apply(const TwistedModuleElement& a) const {
    if (a.size() != values.rank()) throw Error(ErrorCode::InvalidArgument, "apply: rank mismatch");
    auto y = zero_vector(values.ring(), values.rank());
    for (std::size_t q = 0; q < a.size(); ++q) {
        if (a[q].is_zero()) continue;
        const TensorElement pa = phi(a[q]);
        for (std::size_t p = 0; p < values.rank(); ++p) y[p] += tensor_mul(pa, values.at(p, q));
    }
    return y;
}

ModuleMatrix correspond_via(const ModuleMapOverPhi& f) {
    ModuleMatrix F(f.phi.codomain(), f.values.rank());
    const Ring& src = f.phi.domain();
    for (std::size_t q = 0; q < F.rank(); ++q) {
        auto col = f.apply(unit_vector(src, F.rank(), q));
        for (std::size_t p = 0; p < F.rank(); ++p) F.set(p, q, std::move(col[p]));
    }
    return F;
}

ModuleMapOverPhi correspond_back(const RingHom& phi, const ModuleMatrix& F) {
    if (!same_factors(phi.codomain(), F.ring()))
        throw Error(ErrorCode::FactorMismatch, "correspond_back: ring mismatch");
    return ModuleMapOverPhi{phi, F};
}

}  // namespace hopfneb
