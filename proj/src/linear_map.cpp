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

#include "hopfneb/linear_map.hpp"

#include <algorithm>

#include "hopfneb/errors.hpp"

namespace hopfneb {

LinearMapSpec::LinearMapSpec(std::string name, AlgebraRef domain, std::vector<AlgebraRef> codomain,
                             Extension extension)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      extension_(extension) {
    if (codomain_.empty()) throw Error(ErrorCode::InvalidArgument, name_ + ": empty codomain");
}

LinearMapSpec LinearMapSpec::identity(const AlgebraRef& a) {
    return from_basis_function("id_" + a->name(), a, {a}, [a](const BasisKey& k) {
        TensorElement t({a});
        t.add_term({k}, a->scalar(1));
        return t;
    });
}

LinearMapSpec LinearMapSpec::from_basis_function(std::string name, AlgebraRef domain,
                                                 std::vector<AlgebraRef> codomain, BasisRule rule) {
    LinearMapSpec f(std::move(name), std::move(domain), std::move(codomain), Extension::Linear);
    f.basis_rule_ = std::move(rule);
    return f;
}

LinearMapSpec& LinearMapSpec::set_generator_image(const GenId& g, TensorElement image) {
    if (!domain_->is_free())
        throw Error(ErrorCode::InvalidArgument, name_ + ": generator images need a free domain");
    if (extension_ == Extension::Linear)
        throw Error(ErrorCode::InfiniteBasis,
                    name_ + ": a linear map on a free algebra cannot be given on generators");
    if (!same_factors(image.factors(), codomain_))
        throw Error(ErrorCode::FactorMismatch, name_ + ": image of " + g.to_string());
    generator_images_.insert_or_assign(g, std::move(image));
    memo_ = std::make_shared<Memo>();
    return *this;
}

LinearMapSpec& LinearMapSpec::set_generator_image(const GenId& g, const Element& image) {
    return set_generator_image(g, TensorElement::from(image));
}

LinearMapSpec& LinearMapSpec::set_basis_image(std::size_t index, TensorElement image) {
    if (!domain_->is_table() || index >= domain_->dim())
        throw Error(ErrorCode::InvalidArgument, name_ + ": basis index out of range");
    if (!same_factors(image.factors(), codomain_))
        throw Error(ErrorCode::FactorMismatch, name_ + ": image of basis " + std::to_string(index));
    basis_images_.insert_or_assign(index, std::move(image));
    memo_ = std::make_shared<Memo>();
    return *this;
}

LinearMapSpec& LinearMapSpec::set_basis_image(std::size_t index, const Element& image) {
    return set_basis_image(index, TensorElement::from(image));
}

LinearMapSpec& LinearMapSpec::set_generator_rule(GeneratorRule rule) {
    rule_ = std::move(rule);
    memo_ = std::make_shared<Memo>();
    return *this;
}

TensorElement LinearMapSpec::image_of_generator(const GenId& g) const {
    if (auto it = generator_images_.find(g); it != generator_images_.end()) return it->second;
    {
        std::lock_guard lock(memo_->mu);
        if (auto it = memo_->generators.find(g); it != memo_->generators.end()) return it->second;
    }
    if (rule_) {
        if (auto img = rule_(g)) {
            if (!same_factors(img->factors(), codomain_))
                throw Error(ErrorCode::FactorMismatch, name_ + ": rule image of " + g.to_string());
            std::lock_guard lock(memo_->mu);
            return memo_->generators.emplace(g, std::move(*img)).first->second;
        }
    }
    throw Error(ErrorCode::MissingGeneratorImage, name_ + " has no image for " + g.to_string());
}

TensorElement LinearMapSpec::compute_key(const BasisKey& k) const {
    if (basis_rule_) {
        TensorElement img = basis_rule_(k);
        if (!same_factors(img.factors(), codomain_))
            throw Error(ErrorCode::FactorMismatch, name_ + ": basis rule image");
        return img;
    }
    if (const auto* i = std::get_if<std::size_t>(&k)) {
        auto it = basis_images_.find(*i);
        if (it == basis_images_.end())
            throw Error(ErrorCode::MissingGeneratorImage,
                        name_ + " has no image for basis vector " + domain_->key_to_string(k));
        return it->second;
    }
    const Word& w = std::get<Word>(k);
    TensorElement acc = TensorElement::one(codomain_);
    if (extension_ == Extension::AlgebraAntiHom) {
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
            acc = tensor_mul(acc, image_of_generator(*it));
    } else {
        for (const auto& g : w.letters) acc = tensor_mul(acc, image_of_generator(g));
    }
    return acc;
}

TensorElement LinearMapSpec::image_of_key(const BasisKey& k) const {
    {
        std::lock_guard lock(memo_->mu);
        if (auto it = memo_->keys.find(k); it != memo_->keys.end()) return it->second;
    }
    TensorElement img = compute_key(k);
    std::lock_guard lock(memo_->mu);
    return memo_->keys.emplace(k, std::move(img)).first->second;
}

TensorElement LinearMapSpec::apply(const Element& x) const {
    if (x.owner() != domain_)
        throw Error(ErrorCode::OwnerMismatch,
                    name_ + " expects " + domain_->name() + ", got " + x.owner()->name());
    TensorElement r(codomain_);
    for (const auto& [k, c] : x.terms()) r += image_of_key(k).scaled(c);
    return r;
}

Element LinearMapSpec::apply_element(const Element& x) const { return apply(x).to_element(); }

TensorElement map_eval(const LinearMapSpec& f, const Element& x) { return f.apply(x); }

TensorElement tensor_map(const std::vector<const LinearMapSpec*>& fs, const TensorElement& x) {
    if (fs.size() != x.arity())
        throw Error(ErrorCode::FactorMismatch, "tensor_map: " + std::to_string(fs.size()) +
                                                   " maps for " + std::to_string(x.arity()) +
                                                   " slots");
    std::vector<AlgebraRef> codomain;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i]->domain() != x.factors()[i])
            throw Error(ErrorCode::FactorMismatch, "tensor_map: " + fs[i]->name() + " expects " +
                                                       fs[i]->domain()->name() + ", slot has " +
                                                       x.factors()[i]->name());
        codomain.insert(codomain.end(), fs[i]->codomain().begin(), fs[i]->codomain().end());
    }
    TensorElement result(codomain);
    for (const auto& [key, c] : x.terms()) {
        TensorElement term = fs[0]->image_of_key(key[0]);
        for (std::size_t i = 1; i < fs.size(); ++i) {
            if (term.is_zero()) break;
            term = term.otimes(fs[i]->image_of_key(key[i]));
        }
        if (!term.is_zero()) result += term.scaled(c);
    }
    return result;
}

TensorElement multiply_slots(const TensorElement& x, std::size_t i) {
    const auto& fs = x.factors();
    if (i + 1 >= fs.size() || fs[i] != fs[i + 1])
        throw Error(ErrorCode::FactorMismatch, "multiply_slots: slots are not the same algebra");
    std::vector<AlgebraRef> out_f = fs;
    out_f.erase(out_f.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    TensorElement::TermMap out;
    const Scalar one = fs[i]->scalar(1);
    for (const auto& [key, c] : x.terms()) {
        std::map<BasisKey, Scalar> prod;
        fs[i]->multiply_keys(key[i], key[i + 1], one, prod);
        for (const auto& [k, pc] : prod) {
            TensorElement::Key nk = key;
            nk.erase(nk.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            nk[i] = k;
            accumulate(out, nk, c * pc);
        }
    }
    return TensorElement(out_f, std::move(out));
}

TensorElement flip_slots(const TensorElement& x, std::size_t i) {
    std::vector<AlgebraRef> f = x.factors();
    if (i + 1 >= f.size()) throw Error(ErrorCode::FactorMismatch, "flip_slots: slot out of range");
    std::swap(f[i], f[i + 1]);
    TensorElement::TermMap out;
    for (const auto& [key, c] : x.terms()) {
        TensorElement::Key nk = key;
        std::swap(nk[i], nk[i + 1]);
        accumulate(out, nk, c);
    }
    return TensorElement(f, std::move(out));
}

TensorElement drop_scalar_slots(const TensorElement& x) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < x.arity(); ++i)
        if (!x.factors()[i]->is_scalars()) keep.push_back(i);
    if (keep.size() == x.arity()) return x;
    if (keep.empty()) keep.push_back(0);
    std::vector<AlgebraRef> f;
    for (auto i : keep) f.push_back(x.factors()[i]);
    TensorElement::TermMap out;
    for (const auto& [key, c] : x.terms()) {
        TensorElement::Key nk;
        for (auto i : keep) nk.push_back(key[i]);
        accumulate(out, nk, c);
    }
    return TensorElement(f, std::move(out));
}

Scalar to_scalar(const TensorElement& x) {
    for (const auto& f : x.factors())
        if (!f->is_scalars())
            throw Error(ErrorCode::FactorMismatch, "to_scalar: non-scalar slot " + f->name());
    Scalar s(0, x.field());
    for (const auto& [k, c] : x.terms()) s += c;
    return s;
}

TensorElement insert_unit_slot(const TensorElement& x, std::size_t pos, const AlgebraRef& a) {
    std::vector<AlgebraRef> f = x.factors();
    if (pos > f.size()) throw Error(ErrorCode::FactorMismatch, "insert_unit_slot: bad position");
    f.insert(f.begin() + static_cast<std::ptrdiff_t>(pos), a);
    const Element one = Element::one(a);
    TensorElement::TermMap out;
    for (const auto& [key, c] : x.terms())
        for (const auto& [uk, uc] : one.terms()) {
            TensorElement::Key nk = key;
            nk.insert(nk.begin() + static_cast<std::ptrdiff_t>(pos), uk);
            accumulate(out, nk, c * uc);
        }
    return TensorElement(f, std::move(out));
}

}  // namespace hopfneb
