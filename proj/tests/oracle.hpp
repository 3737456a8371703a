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

// Brute-force reference implementations for the tests. They work on raw
// residue vectors with their own modular arithmetic and scan every subset
// mask; nothing here calls the library's zero-sum or search code.

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "zsum/group.hpp"
#include "zsum/rational.hpp"

namespace oracle {

using Elem = std::vector<std::int64_t>;
using Mask = std::uint64_t;

struct Group {
  std::vector<std::int64_t> mod;
  std::int64_t order = 1;
  std::vector<Elem> elems;  // lexicographic, identity first
};

inline Group make(const zsum::FiniteAbelianGroup& g) {
  Group out;
  out.mod = g.invariant_factors();
  for (auto n : out.mod) out.order *= n;
  Elem cur(out.mod.size(), 0);
  for (std::int64_t i = 0; i < out.order; ++i) {
    out.elems.push_back(cur);
    for (int j = static_cast<int>(cur.size()) - 1; j >= 0; --j) {
      if (++cur[j] < out.mod[j]) break;
      cur[j] = 0;
    }
  }
  return out;
}

inline Elem add(const Group& g, const Elem& a, const Elem& b) {
  Elem out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = (a[j] + b[j]) % g.mod[j];
  return out;
}

inline bool is_zero(const Elem& a) {
  for (auto x : a) {
    if (x != 0) return false;
  }
  return true;
}

inline std::int64_t order(const Group& g, const Elem& a) {
  std::int64_t o = 1;
  for (std::size_t j = 0; j < a.size(); ++j) o = std::lcm(o, g.mod[j] / std::gcd(g.mod[j], a[j]));
  return o;
}

inline Elem sum(const Group& g, const std::vector<Elem>& s, Mask mask) {
  Elem acc(g.mod.size(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (mask >> i & 1U) acc = add(g, acc, s[i]);
  }
  return acc;
}

inline Mask full(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline bool zero_sum(const Group& g, const std::vector<Elem>& s) { return is_zero(sum(g, s, full(s.size()))); }

// Every nonempty proper submask of `within` has a nonzero sum.
inline bool no_proper_zero_sum(const Group& g, const std::vector<Elem>& s, Mask within) {
  for (Mask m = (within - 1) & within; m != 0; m = (m - 1) & within) {
    if (is_zero(sum(g, s, m))) return false;
  }
  return true;
}

inline bool minimal_zero_sum(const Group& g, const std::vector<Elem>& s) {
  if (s.empty()) return false;
  return zero_sum(g, s) && no_proper_zero_sum(g, s, full(s.size()));
}

inline bool zero_sum_free(const Group& g, const std::vector<Elem>& s) {
  for (Mask m = 1; m <= full(s.size()) && m != 0; ++m) {
    if (is_zero(sum(g, s, m))) return false;
    if (m == full(s.size())) break;
  }
  return true;
}

inline std::vector<Mask> zero_sum_masks(const Group& g, const std::vector<Elem>& s) {
  std::vector<Mask> out;
  for (Mask m = 0;; ++m) {
    if (is_zero(sum(g, s, m))) out.push_back(m);
    if (m == full(s.size())) break;
  }
  return out;
}

// Set partitions of the positions into minimal zero-sum blocks, counted by
// always placing the lowest remaining position first.
inline std::uint64_t count_factorizations(const Group& g, const std::vector<Elem>& s, std::uint64_t cap) {
  std::map<Mask, std::uint64_t> memo;
  std::function<std::uint64_t(Mask)> rec = [&](Mask rem) -> std::uint64_t {
    if (rem == 0) return 1;
    if (auto it = memo.find(rem); it != memo.end()) return it->second;
    Mask low = rem & (~rem + 1);
    std::uint64_t total = 0;
    Mask rest = rem & ~low;
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      Mask block = sub | low;
      if (is_zero(sum(g, s, block)) && no_proper_zero_sum(g, s, block)) {
        total += rec(rem & ~block);
        if (total >= cap) {
          total = cap;
          break;
        }
      }
      if (sub == 0) break;
    }
    memo[rem] = total;
    return total;
  };
  return rec(full(s.size()));
}

inline bool ufim(const Group& g, const std::vector<Elem>& s) {
  for (const auto& x : s) {
    if (is_zero(x)) return false;
  }
  return zero_sum(g, s) && count_factorizations(g, s, 2) == 1;
}

inline zsum::Rational cross(const Group& g, const std::vector<Elem>& s) {
  zsum::Rational out(0);
  for (const auto& x : s) out += zsum::Rational(1, order(g, x));
  return out;
}

// Calls f on every nondecreasing list of nonzero element positions (into
// g.elems) with 1 <= length <= max_len.
inline void for_each_multiset(const Group& g, int max_len, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (!cur.empty()) f(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int i = from; i < static_cast<int>(g.elems.size()); ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(1);
}

inline std::vector<Elem> elems_of(const Group& g, const std::vector<int>& idx) {
  std::vector<Elem> out;
  for (int i : idx) out.push_back(g.elems[static_cast<std::size_t>(i)]);
  return out;
}

struct Extremes {
  zsum::Rational k1{0};         // max cross number of a UFIM
  std::int64_t n1 = 0;          // max size of a UFIM
  std::int64_t d = 0;           // max atom length
  zsum::Rational big_k{0};      // max atom cross number
  zsum::Rational little_k{0};   // max zero-sum free cross number
  std::vector<std::vector<int>> atoms;  // sorted position lists, by (length, lex)
};

// Exhaustive over all multisets of size <= |G|, which bounds every UFIM
// (sum of block lengths <= their product <= |G|) and every atom.
inline Extremes extremes(const Group& g) {
  Extremes out;
  for_each_multiset(g, static_cast<int>(g.order), [&](const std::vector<int>& idx) {
    auto s = elems_of(g, idx);
    if (zero_sum_free(g, s)) {
      out.little_k = std::max(out.little_k, cross(g, s));
      return;
    }
    if (!zero_sum(g, s)) return;
    if (minimal_zero_sum(g, s)) {
      out.atoms.push_back(idx);
      out.d = std::max<std::int64_t>(out.d, static_cast<std::int64_t>(s.size()));
      out.big_k = std::max(out.big_k, cross(g, s));
    }
    if (ufim(g, s)) {
      out.k1 = std::max(out.k1, cross(g, s));
      out.n1 = std::max<std::int64_t>(out.n1, static_cast<std::int64_t>(s.size()));
    }
  });
  std::sort(out.atoms.begin(), out.atoms.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace oracle
