// Copyright 2026 The zsum Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zsum/homomorphism.hpp"

#include <algorithm>
#include <set>

#include "zsum/errors.hpp"

namespace zsum {

Homomorphism::Homomorphism(FiniteAbelianGroup source, FiniteAbelianGroup target,
                           std::vector<GroupElement> generator_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(generator_images)) {
  if (static_cast<int>(images_.size()) != source_.rank()) {
    throw InvalidArgument("homomorphism needs " + std::to_string(source_.rank()) + " generator images, got " +
                          std::to_string(images_.size()));
  }
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (!target_.contains(images_[j])) throw InvalidArgument("generator image does not belong to target group");
    std::int64_t n = source_.invariant_factors()[j];
    if (target_.scale(n, images_[j]) != target_.zero()) {
      throw IllDefinedHomError("ill-defined homomorphism " + source_.key() + " -> " + target_.key() + ": generator " +
                               std::to_string(j) + " has order " + std::to_string(n) + " but its image does not");
    }
  }
}

Homomorphism Homomorphism::projection(const FiniteAbelianGroup& source, int coordinate) {
  if (coordinate < 0 || coordinate >= source.rank()) throw InvalidArgument("projection coordinate out of range");
  auto target = FiniteAbelianGroup::cyclic(source.invariant_factors()[coordinate]);
  std::vector<GroupElement> images;
  for (int j = 0; j < source.rank(); ++j) images.push_back(target.element({j == coordinate ? 1 : 0}));
  return {source, target, std::move(images)};
}

Homomorphism Homomorphism::multiplication(const FiniteAbelianGroup& source, std::int64_t k) {
  std::vector<GroupElement> images;
  for (int j = 0; j < source.rank(); ++j) images.push_back(source.scale(k, source.basis(j)));
  return {source, source, std::move(images)};
}

Homomorphism Homomorphism::identity(const FiniteAbelianGroup& source) { return multiplication(source, 1); }

Homomorphism Homomorphism::drop_primes(const FiniteAbelianGroup& source, const std::vector<std::int64_t>& dropped) {
  const auto& comps = source.primary_components();
  std::vector<std::int64_t> kept_moduli;
  std::vector<std::size_t> kept_index;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (std::find(dropped.begin(), dropped.end(), comps[c].prime) != dropped.end()) continue;
    kept_moduli.push_back(comps[c].modulus());
    kept_index.push_back(c);
  }
  GroupPresentation target(kept_moduli);
  std::vector<GroupElement> images;
  for (int j = 0; j < source.rank(); ++j) {
    auto coords = source.to_primary(source.basis(j));
    std::vector<std::int64_t> raw;
    for (auto c : kept_index) raw.push_back(coords[c]);
    images.push_back(kept_moduli.empty() ? FiniteAbelianGroup::trivial().zero() : target.normalize(raw));
  }
  return {source, kept_moduli.empty() ? FiniteAbelianGroup::trivial() : target.group(), std::move(images)};
}

GroupElement Homomorphism::apply(const GroupElement& g) const {
  GroupElement out = target_.zero();
  for (std::size_t j = 0; j < images_.size(); ++j) {
    out = target_.add(out, target_.scale(g.residues[j], images_[j]));
  }
  return out;
}

bool Homomorphism::in_kernel(const GroupElement& g) const { return apply(g) == target_.zero(); }

std::vector<GroupElement> Homomorphism::kernel_elements() const {
  std::vector<GroupElement> out;
  for (const auto& g : source_.elements()) {
    if (in_kernel(g)) out.push_back(g);
  }
  return out;
}

std::vector<GroupElement> Homomorphism::image_elements() const {
  std::set<GroupElement> seen;
  for (const auto& g : source_.elements()) seen.insert(apply(g));
  return {seen.begin(), seen.end()};
}

FiniteAbelianGroup Homomorphism::kernel_structure() const {
  auto k = kernel_elements();
  return structure_of_subgroup(source_, k);
}

FiniteAbelianGroup Homomorphism::quotient_structure() const {
  auto im = image_elements();
  return structure_of_subgroup(target_, im);
}

}  // namespace zsum
