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

#include "zsum/constructions.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "zsum/element_set.hpp"
#include "zsum/errors.hpp"
#include "zsum/formulas.hpp"

namespace zsum {
namespace {

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// Element of G with one primary coordinate set.
GroupElement on_component(const FiniteAbelianGroup& group, std::size_t component, std::int64_t value) {
  std::vector<std::int64_t> coords(group.primary_components().size(), 0);
  coords[component] = mod(value, group.primary_components()[component].modulus());
  return group.from_primary(coords);
}

}  // namespace

IndexedMultiset gao_wang_extremal(std::int64_t p, int m) {
  require_prime(p);
  if (m < 1) throw InvalidArgument("gao_wang_extremal needs m >= 1");
  const std::int64_t q = ipow(p, m);
  if (q > DenseGroup::kMaxOrder) throw ResourceLimitError("p^m too large");
  auto group = FiniteAbelianGroup::cyclic(q);
  IndexedMultiset s(group);
  for (int i = 1; i <= m; ++i) {
    std::int64_t base = ipow(p, i - 1);
    for (std::int64_t c = 0; c < p - 1; ++c) s.push_back(group.element({base}));
  }
  for (int i = 1; i <= m; ++i) s.push_back(group.element({mod((1 - p) * ipow(p, i - 1), q)}));
  if (!is_ufim(s) || cross_number(s) != k1_star(group)) {
    throw std::logic_error("gao_wang_extremal postcondition failed for C_" + std::to_string(q));
  }
  return s;
}

IndexedMultiset extremal_zero_sum_free(const FiniteAbelianGroup& group) {
  IndexedMultiset s(group);
  const auto& comps = group.primary_components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (int i = 1; i <= comps[c].exponent; ++i) {
      auto g = on_component(group, c, ipow(comps[c].prime, i - 1));
      for (std::int64_t k = 0; k < comps[c].prime - 1; ++k) s.push_back(g);
    }
  }
  if (!is_zero_sum_free(s) || cross_number(s) != little_k_star(group)) {
    throw std::logic_error("extremal_zero_sum_free postcondition failed for " + group.key());
  }
  return s;
}

IndexedMultiset direct_sum_union(const IndexedMultiset& a, const IndexedMultiset& b) {
  std::vector<std::int64_t> moduli = a.group().invariant_factors();
  const std::size_t split = moduli.size();
  for (auto n : b.group().invariant_factors()) moduli.push_back(n);
  GroupPresentation pres(moduli);
  IndexedMultiset out(pres.group());
  for (const auto& g : a.elements()) {
    std::vector<std::int64_t> raw(moduli.size(), 0);
    std::copy(g.residues.begin(), g.residues.end(), raw.begin());
    out.push_back(pres.normalize(raw));
  }
  for (const auto& g : b.elements()) {
    std::vector<std::int64_t> raw(moduli.size(), 0);
    std::copy(g.residues.begin(), g.residues.end(), raw.begin() + static_cast<std::ptrdiff_t>(split));
    out.push_back(pres.normalize(raw));
  }
  if (cross_number(out) != cross_number(a) + cross_number(b)) {
    throw std::logic_error("direct_sum_union changed the cross number");
  }
  auto ufim = [](const IndexedMultiset& s) {
    return s.empty() || (!s.contains_identity() && is_zero_sum(s) && is_ufim(s));
  };
  if (ufim(a) && ufim(b) && !ufim(out)) throw std::logic_error("direct sum of UFIMs is not a UFIM");
  return out;
}

IndexedMultiset k1_star_witness(const FiniteAbelianGroup& group) {
  IndexedMultiset s(group);
  const auto& comps = group.primary_components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const std::int64_t p = comps[c].prime;
    for (int i = 1; i <= comps[c].exponent; ++i) {
      auto g = on_component(group, c, ipow(p, i - 1));
      for (std::int64_t k = 0; k < p - 1; ++k) s.push_back(g);
    }
    for (int i = 1; i <= comps[c].exponent; ++i) s.push_back(on_component(group, c, (1 - p) * ipow(p, i - 1)));
  }
  return s;
}

namespace {

using Mask = std::uint64_t;

class Packer {
 public:
  Packer(std::vector<Mask> candidates, std::uint64_t budget) : budget_(budget) {
    for (Mask c : candidates) by_lowest_[std::countr_zero(c)].push_back(c);
  }

  int max_pack(Mask avail) {
    if (avail == 0) return 0;
    if (auto it = memo_.find(avail); it != memo_.end()) return it->second;
    if (++nodes_ > budget_) throw ResourceLimitError("packing search exceeds its node budget");
    int low = std::countr_zero(avail);
    int best = max_pack(avail & (avail - 1));
    if (auto it = by_lowest_.find(low); it != by_lowest_.end()) {
      for (Mask c : it->second) {
        if ((c & ~avail) == 0) best = std::max(best, 1 + max_pack(avail & ~c));
      }
    }
    memo_.emplace(avail, best);
    return best;
  }

 private:
  std::unordered_map<int, std::vector<Mask>> by_lowest_;
  std::unordered_map<Mask, int> memo_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

DecompositionResult construction4_decompose(const IndexedMultiset& s, const Homomorphism& phi,
                                            const DecomposeOptions& options) {
  if (!(phi.source() == s.group())) throw InvalidArgument("multiset is not over the homomorphism source");
  if (!s.empty() && (s.contains_identity() || !is_zero_sum(s) || !is_ufim(s, options.zero_sum))) {
    throw PreconditionError("construction4_decompose needs a UFIM over G \\ {0}");
  }
  DecompositionResult out;
  std::vector<std::size_t> rest;  // positions of S' = S \ T
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (phi.in_kernel(s.elements()[i])) {
      out.kernel_part.labels.push_back(s.labels()[i]);
    } else {
      rest.push_back(i);
    }
  }
  std::sort(out.kernel_part.labels.begin(), out.kernel_part.labels.end());
  if (rest.size() > 64) throw ResourceLimitError("too many non-kernel entries for the packing search");

  // Zero-sum free subsets of S' whose sum lies in the kernel (and is nonzero
  // automatically), as bitmasks over `rest`.
  auto dense = shared_dense(s.group());
  std::vector<int> value(rest.size());
  for (std::size_t i = 0; i < rest.size(); ++i) value[i] = dense->index(s.elements()[rest[i]]);
  std::vector<Mask> candidates;
  std::uint64_t nodes = 0;
  auto dfs = [&](auto&& self, std::size_t from, Mask chosen, const ElementSet& sums, int sigma) -> void {
    for (std::size_t i = from; i < rest.size(); ++i) {
      int g = value[i];
      if (sums.contains(dense->neg(g))) continue;
      if (++nodes > options.budget_nodes) throw ResourceLimitError("packing search exceeds its node budget");
      int next = dense->add(sigma, g);
      Mask m = chosen | Mask{1} << i;
      if (phi.in_kernel(dense->element(next))) candidates.push_back(m);
      self(self, i + 1, m, sums.extended_by(*dense, g), next);
    }
  };
  dfs(dfs, 0, 0, ElementSet(dense->size()), 0);

  auto labels_of = [&](Mask m) {
    IndexSubset sub;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (m >> i & 1U) sub.labels.push_back(s.labels()[rest[i]]);
    }
    std::sort(sub.labels.begin(), sub.labels.end());
    return sub;
  };
  std::vector<std::pair<IndexSubset, Mask>> ordered;
  for (Mask m : candidates) ordered.emplace_back(labels_of(m), m);
  std::sort(ordered.begin(), ordered.end());

  Packer packer(candidates, options.budget_nodes);
  const Mask full = rest.size() == 64 ? ~Mask{0} : (Mask{1} << rest.size()) - 1;
  const int t = packer.max_pack(full);
  // Lexicographically least maximum family: take the least candidate that
  // still extends to t blocks, and repeat. Any block smaller than the one
  // picked would itself have been picked, so the blocks come out sorted.
  Mask avail = full;
  for (int k = 0; k < t; ++k) {
    for (const auto& [sub, m] : ordered) {
      if ((m & ~avail) == 0 && k + 1 + packer.max_pack(avail & ~m) == t) {
        out.packing.push_back(sub);
        avail &= ~m;
        break;
      }
    }
  }
  out.remainder = labels_of(avail);

  auto is_ufim_or_empty = [&](const IndexedMultiset& m) {
    return m.empty() || (!m.contains_identity() && is_zero_sum(m) && is_ufim(m, options.zero_sum));
  };
  auto s2 = s.sub(out.remainder);
  if (!is_ufim_or_empty(s2)) throw std::logic_error("S'' is not a UFIM");
  if (!is_ufim_or_empty(apply(phi, s2))) throw std::logic_error("phi(S'') is not a UFIM");
  auto kernel_side = s.sub(out.kernel_part);
  for (const auto& b : out.packing) kernel_side.push_back(sigma(s, b));
  if (!is_ufim_or_empty(kernel_side)) throw std::logic_error("T with the packing sums is not a UFIM");
  return out;
}

std::vector<ConsequenceCheck> phiunique_consequences(const IndexedMultiset& s, const Homomorphism& phi,
                                                     const DecompositionResult& d, const PartInvariants& parts) {
  const Rational t(static_cast<std::int64_t>(d.t()));
  auto kernel_side = s.sub(d.kernel_part);
  for (const auto& b : d.packing) kernel_side.push_back(sigma(s, b));
  auto s_prime = s.without(d.kernel_part);
  const Rational k_s = cross_number(s);
  const Rational k_s_prime = cross_number(s_prime);
  const Rational k_phi_s_prime = cross_number(apply(phi, s_prime));

  std::vector<ConsequenceCheck> out;
  auto add = [&](int item, std::string statement, Rational lhs, Rational rhs, bool applicable = true) {
    out.push_back({item, std::move(statement), lhs, rhs, applicable, !applicable || lhs <= rhs});
  };
  add(1, "k(T) + sum k(sigma(S_i)) <= K1(ker)", cross_number(kernel_side), parts.k1_kernel);
  add(2, "|T| + t <= N1(ker)", Rational(static_cast<std::int64_t>(kernel_side.size())), Rational(parts.n1_kernel));
  add(3, "k(S) <= K1(ker) + k(S')", k_s, parts.k1_kernel + k_s_prime);
  add(4, "k(S) <= K1(ker) + k(phi(S'))", k_s, parts.k1_kernel + k_phi_s_prime);
  add(5, "k(phi(S')) <= K1(G/ker) + t K(G/ker)", k_phi_s_prime, parts.k1_quotient + t * parts.big_k_quotient);
  add(7, "t = 0 implies k(S) <= K1(ker) + K1(G/ker)", k_s, parts.k1_kernel + parts.k1_quotient, d.t() == 0);
  return out;
}

}  // namespace zsum
