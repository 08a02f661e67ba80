// core.hpp
//
// Integer-set arithmetic: k-fold sumsets kA (repetition allowed),
// restricted sumsets k^A (pairwise-distinct summands), the (k,l)-sum-free
// predicates, and projective-cube detection.
//
//   kA  := {a_1+...+a_k | a_i in A}
//   k^A := {a_1+...+a_k | a_i in A, all distinct}
//   A is (k,l)-sum-free            iff kA  and lA  are disjoint
//   A is restricted (k,l)-sum-free iff k^A and l^A are disjoint
//
// All operations are pure; every entry point checks the k*max(A) overflow
// guard and a bit budget before allocating.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "klfree/intset.hpp"
#include "klfree/sumbitset.hpp"

namespace klfree {

// Default cap on the bit range a single sumset table may span (64 Mbit).
inline constexpr std::int64_t kDefaultSumsetBitBudget = std::int64_t{1} << 26;

namespace detail {

inline void check_fold_range(const IntSet& a, int k, std::int64_t bit_budget) {
  if (a.empty()) throw std::invalid_argument("sumset: empty set");
  if (k < 1) throw std::invalid_argument("sumset: k must be >= 1");
  if (a.max() > std::numeric_limits<std::int64_t>::max() / k)
    throw std::range_error("sumset: k*max(A) overflows 64-bit range");
  std::int64_t span = k * (a.max() - a.min()) + 1;
  if (span > bit_budget)
    throw std::range_error("sumset: bit range " + std::to_string(span) +
                           " exceeds budget " + std::to_string(bit_budget));
}

}  // namespace detail

// k-fold sumset with repetition, by (k-1)-fold shift-OR folding.
// Result covers exactly [k*min(A), k*max(A)].
inline SumBitset sumset_fold(const IntSet& a, int k,
                             std::int64_t bit_budget = kDefaultSumsetBitBudget) {
  detail::check_fold_range(a, k, bit_budget);
  const std::int64_t lo = a.min(), span = a.max() - a.min();
  SumBitset cur(lo, span + 1);
  for (auto v : a) cur.set(v);
  for (int j = 2; j <= k; ++j) {
    SumBitset next(static_cast<std::int64_t>(j) * lo, j * span + 1);
    for (auto v : a) next.or_shifted(cur, v);
    cur = std::move(next);
  }
  return cur;
}

// Sums of exactly k pairwise-distinct elements, via the layered DP that
// processes each element once and updates layer j from layer j-1.
// Empty (zero-length) table when k > |A|.
inline SumBitset restricted_sumset(const IntSet& a, int k,
                                   std::int64_t bit_budget = kDefaultSumsetBitBudget) {
  if (k < 1) throw std::invalid_argument("restricted_sumset: k must be >= 1");
  if (k > static_cast<int>(a.size())) return SumBitset(0, 0);
  detail::check_fold_range(a, k, bit_budget);
  const std::int64_t top = static_cast<std::int64_t>(k) * a.max();
  std::vector<SumBitset> layer;
  layer.reserve(static_cast<std::size_t>(k) + 1);
  layer.emplace_back(0, 1);
  layer[0].set(0);
  for (int j = 1; j <= k; ++j) layer.emplace_back(0, top + 1);
  int processed = 0;
  for (auto v : a) {
    ++processed;
    for (int j = std::min(k, processed); j >= 1; --j) layer[j].or_shifted(layer[j - 1], v);
  }
  SumBitset out = std::move(layer[static_cast<std::size_t>(k)]);
  out.trim();
  return out;
}

inline bool is_sum_free(const IntSet& a, const KLParams& p,
                        std::int64_t bit_budget = kDefaultSumsetBitBudget) {
  if (a.empty()) return true;
  return !sumset_fold(a, p.k, bit_budget).intersects(sumset_fold(a, p.l, bit_budget));
}

// Vacuously true when |A| < k (the k-fold restricted sumset is empty).
inline bool is_restricted_sum_free(const IntSet& a, const KLParams& p,
                                   std::int64_t bit_budget = kDefaultSumsetBitBudget) {
  if (a.size() < static_cast<std::size_t>(p.k)) return true;
  return !restricted_sumset(a, p.k, bit_budget)
              .intersects(restricted_sumset(a, p.l, bit_budget));
}

// Generators s_1 <= ... <= s_d (elements of A, repetition allowed) whose
// 2^d - 1 nonempty subset-sums all lie in A, or nullopt.  Searched in
// ascending lexicographic order, so the first witness is returned.
// Only d in {2,3} is supported.
inline std::optional<std::vector<std::int64_t>> contains_projective_cube(const IntSet& a,
                                                                         int d) {
  if (d != 2 && d != 3) throw std::invalid_argument("contains_projective_cube: d must be 2 or 3");
  if (a.empty()) return std::nullopt;
  if (a.max() > std::numeric_limits<std::int64_t>::max() / d)
    throw std::range_error("contains_projective_cube: d*max(A) overflows");
  const auto& e = a.elems();
  const std::size_t n = e.size();
  if (d == 2) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (a.contains(e[i] + e[j])) return std::vector<std::int64_t>{e[i], e[j]};
    return std::nullopt;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (!a.contains(e[i] + e[j])) continue;
      for (std::size_t l = j; l < n; ++l)
        if (a.contains(e[i] + e[l]) && a.contains(e[j] + e[l]) &&
            a.contains(e[i] + e[j] + e[l]))
          return std::vector<std::int64_t>{e[i], e[j], e[l]};
    }
  return std::nullopt;
}

inline bool is_cube_free(const IntSet& a, int d) {
  return !contains_projective_cube(a, d).has_value();
}

}  // namespace klfree
