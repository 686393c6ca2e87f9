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

#ifndef HOPFNEB_LINEAR_MAP_HPP
#define HOPFNEB_LINEAR_MAP_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopfneb/algebra.hpp"

namespace hopfneb {

enum class Extension { Linear, AlgebraHom, AlgebraAntiHom };

/// A K-linear map from an algebra into a tensor power C_1 (x) ... (x) C_k.
///
/// Images are given on generators (free domains, extended multiplicatively,
/// or anti-multiplicatively) or on basis vectors (table domains).  A lazy rule
/// may supply generator images on demand for infinite alphabets; rule results
/// and word images are memoized.  A basis-function map is linear on any
/// basis, including words, and is how composite maps are expressed.
class LinearMapSpec {
   public:
    using GeneratorRule = std::function<std::optional<TensorElement>(const GenId&)>;
    using BasisRule = std::function<TensorElement(const BasisKey&)>;

    LinearMapSpec(std::string name, AlgebraRef domain, std::vector<AlgebraRef> codomain,
                  Extension extension);

    static LinearMapSpec identity(const AlgebraRef& a);
    static LinearMapSpec from_basis_function(std::string name, AlgebraRef domain,
                                             std::vector<AlgebraRef> codomain, BasisRule rule);

    LinearMapSpec& set_generator_image(const GenId& g, TensorElement image);
    LinearMapSpec& set_generator_image(const GenId& g, const Element& image);
    LinearMapSpec& set_basis_image(std::size_t index, TensorElement image);
    LinearMapSpec& set_basis_image(std::size_t index, const Element& image);
    LinearMapSpec& set_generator_rule(GeneratorRule rule);

    const std::string& name() const noexcept { return name_; }
    const AlgebraRef& domain() const noexcept { return domain_; }
    const std::vector<AlgebraRef>& codomain() const noexcept { return codomain_; }
    Extension extension() const noexcept { return extension_; }

    /// Throws MissingGeneratorImage.
    TensorElement image_of_generator(const GenId& g) const;
    TensorElement image_of_key(const BasisKey& k) const;

    /// Throws OwnerMismatch if x does not live in the domain.
    TensorElement apply(const Element& x) const;
    /// As apply, for maps with a single codomain factor.
    Element apply_element(const Element& x) const;

   private:
    struct Memo {
        std::mutex mu;
        std::map<GenId, TensorElement> generators;
        std::map<BasisKey, TensorElement> keys;
    };

    TensorElement compute_key(const BasisKey& k) const;

    std::string name_;
    AlgebraRef domain_;
    std::vector<AlgebraRef> codomain_;
    Extension extension_;
    std::map<GenId, TensorElement> generator_images_;
    std::map<std::size_t, TensorElement> basis_images_;
    GeneratorRule rule_;
    BasisRule basis_rule_;
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

TensorElement map_eval(const LinearMapSpec& f, const Element& x);

/// (f_1 (x) ... (x) f_k)(x), re-expanded into canonical form.
TensorElement tensor_map(const std::vector<const LinearMapSpec*>& fs, const TensorElement& x);

/// Multiplies slot i into slot i+1 (both must be the same algebra).
TensorElement multiply_slots(const TensorElement& x, std::size_t i);
/// Swaps slots i and i+1.
TensorElement flip_slots(const TensorElement& x, std::size_t i);
/// Removes base-field slots, folding their coefficients in.  If every slot is
/// a base-field slot, one is kept.
TensorElement drop_scalar_slots(const TensorElement& x);
/// Coefficient of 1 in a tensor of base-field slots.
Scalar to_scalar(const TensorElement& x);
/// Inserts a unit slot of algebra a before position pos.
TensorElement insert_unit_slot(const TensorElement& x, std::size_t pos, const AlgebraRef& a);

}  // namespace hopfneb

#endif
