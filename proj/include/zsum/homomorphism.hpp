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

#pragma once

#include <vector>

#include "zsum/group.hpp"

namespace zsum {

// A group homomorphism determined by the images of the invariant-factor
// generators of its source.
class Homomorphism {
 public:
  // Throws IllDefinedHomError if n_j * image_j != 0 in the target for some j,
  // InvalidArgument on a length or membership mismatch.
  Homomorphism(FiniteAbelianGroup source, FiniteAbelianGroup target, std::vector<GroupElement> generator_images);

  // G -> C_{n_j}, the j-th invariant-factor coordinate.
  static Homomorphism projection(const FiniteAbelianGroup& source, int coordinate);
  // G -> G, g |-> k g.
  static Homomorphism multiplication(const FiniteAbelianGroup& source, std::int64_t k);
  // G -> (sum of the primary components whose prime is not in `dropped`),
  // i.e. the projection killing the listed Sylow subgroups.
  static Homomorphism drop_primes(const FiniteAbelianGroup& source, const std::vector<std::int64_t>& dropped);
  static Homomorphism identity(const FiniteAbelianGroup& source);

  const FiniteAbelianGroup& source() const { return source_; }
  const FiniteAbelianGroup& target() const { return target_; }
  const std::vector<GroupElement>& generator_images() const { return images_; }

  GroupElement apply(const GroupElement& g) const;
  bool in_kernel(const GroupElement& g) const;

  std::vector<GroupElement> kernel_elements() const;
  std::vector<GroupElement> image_elements() const;
  FiniteAbelianGroup kernel_structure() const;
  // G / ker(phi), recovered as the structure of the image.
  FiniteAbelianGroup quotient_structure() const;

 private:
  FiniteAbelianGroup source_;
  FiniteAbelianGroup target_;
  std::vector<GroupElement> images_;
};

inline Homomorphism make_hom(FiniteAbelianGroup source, FiniteAbelianGroup target,
                             std::vector<GroupElement> generator_images) {
  return Homomorphism(std::move(source), std::move(target), std::move(generator_images));
}

}  // namespace zsum
