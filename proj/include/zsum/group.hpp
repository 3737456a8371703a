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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zsum {

// ---------------------------------------------------------------------------
// Prime utilities
// ---------------------------------------------------------------------------

bool is_prime(std::int64_t n);

struct PrimeFactor {
  std::int64_t prime;
  int exponent;
  friend auto operator<=>(const PrimeFactor&, const PrimeFactor&) = default;
};

// Trial-division factorization, primes ascending. n must be >= 1.
std::vector<PrimeFactor> factorize(std::int64_t n);

struct PrimeStats {
  std::int64_t p_minus;  // smallest prime divisor
  std::int64_t p_plus;   // largest prime divisor
  int omega;             // number of distinct prime divisors
  friend bool operator==(const PrimeStats&, const PrimeStats&) = default;
};

// Throws InvalidArgument for n < 2.
PrimeStats prime_stats(std::int64_t n);

std::vector<std::int64_t> primes_up_to(std::int64_t bound);

std::int64_t ipow(std::int64_t base, int exponent);

// ---------------------------------------------------------------------------
// Groups and elements
// ---------------------------------------------------------------------------

// Residue vector against the invariant-factor moduli of some group. The
// defaulted comparison is the global lexicographic element order.
struct GroupElement {
  std::vector<std::int64_t> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

// One cyclic summand C_{p^e} of the primary decomposition, together with the
// invariant factor it is folded into.
struct PrimaryComponent {
  std::int64_t prime;
  int exponent;
  int factor_index;

  std::int64_t modulus() const { return ipow(prime, exponent); }
};

// Finite abelian group in normalized form: invariant factors n_1 | ... | n_r
// with n_1 > 1, and the prime-power decomposition sorted by (p, e). The
// trivial group has no invariant factors.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;  // trivial group

  // Normalizes an arbitrary list of cyclic moduli (each >= 2).
  static FiniteAbelianGroup from_moduli(std::span<const std::int64_t> moduli);
  static FiniteAbelianGroup from_moduli(std::initializer_list<std::int64_t> moduli);
  static FiniteAbelianGroup cyclic(std::int64_t n);
  static FiniteAbelianGroup trivial() { return {}; }

  // Group spec string: comma-separated moduli, each either "n" or "p^e";
  // "trivial" names the trivial group.
  static FiniteAbelianGroup parse(std::string_view spec);

  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  const std::vector<PrimaryComponent>& primary_components() const { return primary_; }
  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  int rank() const { return static_cast<int>(factors_.size()); }
  bool is_trivial() const { return factors_.empty(); }

  // Invariant factors joined by "x" ("2x4"); "1" for the trivial group.
  std::string key() const;

  GroupElement zero() const;
  bool contains(const GroupElement& g) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(std::int64_t k, const GroupElement& a) const;
  GroupElement basis(int j) const;
  // Reduces arbitrary integers coordinate-wise.
  GroupElement element(std::vector<std::int64_t> residues) const;

  std::int64_t element_order(const GroupElement& g) const;

  // All elements in the global (lexicographic) order.
  std::vector<GroupElement> elements() const;

  // Prime-power coordinates, one per primary component (same order as
  // primary_components()), and the inverse CRT recombination.
  std::vector<std::int64_t> to_primary(const GroupElement& g) const;
  GroupElement from_primary(std::span<const std::int64_t> coords) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<std::int64_t> factors_;
  std::vector<PrimaryComponent> primary_;
  std::int64_t order_ = 1;
};

std::int64_t element_order(const FiniteAbelianGroup& group, const GroupElement& g);

// Every abelian group of the given order, sorted by key.
std::vector<FiniteAbelianGroup> all_groups_of_order(std::int64_t n);

// Counts of elements per order, indexed by order value.
std::vector<std::int64_t> order_statistics(const FiniteAbelianGroup& group);

// The abelian group whose order statistics match the given element list
// (which must form a subgroup of `ambient`).
FiniteAbelianGroup structure_of_subgroup(const FiniteAbelianGroup& ambient,
                                         std::span<const GroupElement> subgroup);

// An explicit isomorphism between a raw direct sum of cyclic groups (moduli in
// any order, not necessarily normalized) and its normalized group.
class GroupPresentation {
 public:
  explicit GroupPresentation(std::vector<std::int64_t> moduli);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }

  GroupElement normalize(std::span<const std::int64_t> raw) const;
  std::vector<std::int64_t> raw(const GroupElement& g) const;

 private:
  std::vector<std::int64_t> moduli_;
  FiniteAbelianGroup group_;
  // For each raw coordinate, the primary component slots its prime-power
  // parts map to.
  std::vector<std::vector<int>> slots_;
};

// ---------------------------------------------------------------------------
// Dense indexing
// ---------------------------------------------------------------------------

// Elements numbered 0..|G|-1 in the global order (index 0 is the identity).
// Used by the enumeration and search code.
class DenseGroup {
 public:
  static constexpr std::int64_t kMaxOrder = std::int64_t{1} << 20;

  explicit DenseGroup(const FiniteAbelianGroup& group);

  const FiniteAbelianGroup& group() const { return group_; }
  int size() const { return size_; }

  int index(const GroupElement& g) const;
  GroupElement element(int index) const;

  int add(int a, int b) const {
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * size_ + b];
    return add_slow(a, b);
  }
  int neg(int a) const { return neg_[a]; }
  std::int64_t order_of(int a) const { return orders_[a]; }

 private:
  int add_slow(int a, int b) const;

  FiniteAbelianGroup group_;
  int size_ = 1;
  int rank_ = 0;
  std::vector<int> residues_;  // size_ x rank_
  std::vector<int> radix_;
  std::vector<int> neg_;
  std::vector<std::int64_t> orders_;
  std::vector<int> add_table_;
};

}  // namespace zsum
