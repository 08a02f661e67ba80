// exact.hpp
//
// Exact maximum (k,l)-sum-free subset solvers (ordinary, restricted and
// projective-cube-free) plus the desk-scale extremal search over all
// n-element subsets of [1, universe_bound].
//
// Tie-break contract shared by every solver here: among all
// maximum-cardinality feasible subsets, return the lexicographically
// smallest (as an ascending element sequence).  The branch-and-bound
// solver branches on elements in descending order to find the optimal
// size, then reconstructs the lex-smallest witness with a second
// ascending pass; the oracle enumerates size classes directly.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "klfree/core.hpp"
#include "klfree/intset.hpp"

namespace klfree {

inline constexpr std::size_t kDefaultSolverCap = 40;
inline constexpr std::uint64_t kDefaultExtremalBudget = 2'000'000;

enum class SolveMode { branch_and_bound, exhaustive };

inline const char* to_string(SolveMode m) {
  return m == SolveMode::branch_and_bound ? "branch_and_bound" : "exhaustive";
}

struct SolveResult {
  int size = 0;
  IntSet witness;
  std::uint64_t nodes_explored = 0;
  SolveMode mode = SolveMode::branch_and_bound;
};

struct ExtremalResult {
  int n = 0;
  std::int64_t universe_bound = 0;
  int min_value = 0;
  IntSet argmin_set;
  bool exhaustive = false;
  std::uint64_t nodes = 0;
  std::uint64_t seed = 0;
};

namespace detail {

// Incremental sumset tables for the chosen subset S: one bit layer per
// fold level j = 1..k over [0, k*max(universe)].  push() adds an element
// and reports whether S stays (k,l)-sum-free; pop() restores the previous
// state from a snapshot stack.
class SumFreeState {
 public:
  SumFreeState(const IntSet& universe, KLParams p, bool restricted)
      : k_(p.k), l_(p.l), restricted_(restricted) {
    if (!universe.empty()) {
      if (universe.max() > std::numeric_limits<std::int64_t>::max() / p.k)
        throw std::range_error("solver: k*max(A) overflows 64-bit range");
      words_ = static_cast<std::size_t>((static_cast<std::int64_t>(p.k) * universe.max()) / 64 + 1);
    } else {
      words_ = 1;
    }
    lv_.assign(static_cast<std::size_t>(k_ + 1) * words_, 0);
    lv_[0] = 1;  // layer 0 = {0}; used by the restricted DP
  }

  bool push(std::int64_t a) {
    stack_.push_back(lv_);
    counts_.push_back(count_);
    ++count_;
    if (restricted_) {
      for (int j = std::min(k_, count_); j >= 1; --j) or_shift(j, j - 1, a);
    } else {
      set_bit(1, a);
      for (int j = 2; j <= k_; ++j) or_shift(j, j - 1, a);
    }
    return feasible();
  }

  void pop() {
    lv_ = std::move(stack_.back());
    stack_.pop_back();
    count_ = counts_.back();
    counts_.pop_back();
  }

 private:
  void set_bit(int layer, std::int64_t v) {
    lv_[static_cast<std::size_t>(layer) * words_ + static_cast<std::size_t>(v >> 6)] |=
        std::uint64_t{1} << (v & 63);
  }

  // layer dst |= (layer src shifted up by a)
  void or_shift(int dst, int src, std::int64_t a) {
    const std::uint64_t* s = lv_.data() + static_cast<std::size_t>(src) * words_;
    std::uint64_t* d = lv_.data() + static_cast<std::size_t>(dst) * words_;
    const std::size_t ws = static_cast<std::size_t>(a >> 6);
    const int bs = static_cast<int>(a & 63);
    if (bs == 0) {
      for (std::size_t w = 0; w + ws < words_; ++w) d[w + ws] |= s[w];
    } else {
      for (std::size_t w = 0; w + ws < words_; ++w) {
        std::uint64_t v = s[w];
        if (!v) continue;
        d[w + ws] |= v << bs;
        if (w + ws + 1 < words_) d[w + ws + 1] |= v >> (64 - bs);
      }
    }
  }

  bool feasible() const {
    const std::uint64_t* pk = lv_.data() + static_cast<std::size_t>(k_) * words_;
    const std::uint64_t* pl = lv_.data() + static_cast<std::size_t>(l_) * words_;
    for (std::size_t w = 0; w < words_; ++w)
      if (pk[w] & pl[w]) return false;
    return true;
  }

  int k_, l_;
  bool restricted_;
  int count_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> lv_;
  std::vector<std::vector<std::uint64_t>> stack_;
  std::vector<int> counts_;
};

// Two-phase maximizer over a monotone feasibility state.
template <typename State>
class SubsetMaximizer {
 public:
  SubsetMaximizer(const IntSet& a, State state) : elems_(a.elems()), state_(std::move(state)) {}

  SolveResult solve() {
    SolveResult r;
    best_ = 0;
    // Phase 1: optimal size, branching on elements in descending order,
    // bound = current size + remaining candidates.
    desc_.assign(elems_.rbegin(), elems_.rend());
    dfs_best(0, 0);
    r.size = best_;
    // Phase 2: lex-smallest witness of that size, ascending greedy with a
    // completion-feasibility probe at each element.
    std::vector<std::int64_t> chosen;
    int need = best_;
    for (std::size_t i = 0; i < elems_.size() && need > 0; ++i) {
      if (static_cast<int>(elems_.size() - i) < need) break;  // cannot happen for a sound phase 1
      ++nodes_;
      if (state_.push(elems_[i])) {
        if (can_complete(i + 1, need - 1)) {
          chosen.push_back(elems_[i]);
          --need;
          continue;  // keep it pushed
        }
      }
      state_.pop();
    }
    r.witness = IntSet::of(std::move(chosen));
    r.nodes_explored = nodes_;
    r.mode = SolveMode::branch_and_bound;
    return r;
  }

 private:
  void dfs_best(std::size_t pos, int size) {
    ++nodes_;
    if (size + static_cast<int>(desc_.size() - pos) <= best_) return;
    if (pos == desc_.size()) {
      best_ = std::max(best_, size);
      return;
    }
    if (state_.push(desc_[pos])) {
      best_ = std::max(best_, size + 1);
      dfs_best(pos + 1, size + 1);
    }
    state_.pop();
    dfs_best(pos + 1, size);
  }

  bool can_complete(std::size_t start, int need) {
    ++nodes_;
    if (need == 0) return true;
    if (static_cast<int>(elems_.size() - start) < need) return false;
    for (std::size_t j = start; j + static_cast<std::size_t>(need) <= elems_.size(); ++j) {
      if (state_.push(elems_[j])) {
        if (can_complete(j + 1, need - 1)) {
          state_.pop();
          return true;
        }
      }
      state_.pop();
    }
    return false;
  }

  std::vector<std::int64_t> elems_, desc_;
  State state_;
  int best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Maximum (k,l)-sum-free (or restricted (k,l)-sum-free) subset of A.
inline SolveResult max_sum_free_subset(const IntSet& a, const KLParams& p, bool restricted,
                                       std::size_t cap = kDefaultSolverCap) {
  if (a.size() > cap)
    throw std::length_error("max_sum_free_subset: |A| = " + std::to_string(a.size()) +
                            " exceeds cap " + std::to_string(cap));
  detail::SubsetMaximizer<detail::SumFreeState> m(a, detail::SumFreeState(a, p, restricted));
  return m.solve();
}

// Independent oracle: scans subsets size class by size class in
// lexicographic order, evaluating every candidate with the fresh core
// predicates (no incremental state shared with the solver).  Branches
// whose prefix already violates the predicate cannot lead to a feasible
// superset, so they are skipped.
inline SolveResult brute_force_oracle(const IntSet& a, const KLParams& p, bool restricted,
                                      std::size_t cap = 20) {
  if (a.size() > cap)
    throw std::length_error("brute_force_oracle: |A| exceeds cap " + std::to_string(cap));
  const auto& e = a.elems();
  const int n = static_cast<int>(e.size());
  std::uint64_t nodes = 0;
  std::vector<std::int64_t> chosen;

  auto feasible = [&](void) -> bool {
    IntSet s = IntSet::of(chosen);
    return restricted ? is_restricted_sum_free(s, p) : is_sum_free(s, p);
  };

  std::function<bool(int, int)> find_first = [&](int start, int need) -> bool {
    ++nodes;
    if (need == 0) return true;
    if (n - start < need) return false;
    for (int j = start; j <= n - need; ++j) {
      chosen.push_back(e[static_cast<std::size_t>(j)]);
      if (feasible() && find_first(j + 1, need - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  SolveResult r;
  r.mode = SolveMode::exhaustive;
  for (int s = n; s >= 0; --s) {
    chosen.clear();
    if (find_first(0, s)) {
      r.size = s;
      r.witness = IntSet::of(chosen);
      break;
    }
  }
  r.nodes_explored = nodes;
  return r;
}

// Maximum subset of A containing no d-dimensional projective cube.
inline SolveResult max_cube_free_subset(const IntSet& a, int d, std::size_t cap = 25) {
  if (d != 2 && d != 3) throw std::invalid_argument("max_cube_free_subset: d must be 2 or 3");
  if (a.size() > cap) throw std::length_error("max_cube_free_subset: |A| exceeds cap");
  const auto& e = a.elems();
  const int n = static_cast<int>(e.size());
  std::uint64_t nodes = 0;
  std::vector<std::int64_t> chosen;

  auto push = [&](std::int64_t v) -> bool {
    chosen.insert(std::lower_bound(chosen.begin(), chosen.end(), v), v);
    return !contains_projective_cube(IntSet::of(chosen), d).has_value();
  };
  auto pop = [&](std::int64_t v) {
    chosen.erase(std::lower_bound(chosen.begin(), chosen.end(), v));
  };

  int best = 0;
  std::function<void(int, int)> dfs = [&](int pos, int size) {
    ++nodes;
    if (size + (n - pos) <= best) return;
    if (pos == n) {
      best = std::max(best, size);
      return;
    }
    std::int64_t v = e[static_cast<std::size_t>(n - 1 - pos)];  // descending
    if (push(v)) {
      best = std::max(best, size + 1);
      dfs(pos + 1, size + 1);
    }
    pop(v);
    dfs(pos + 1, size);
  };
  dfs(0, 0);

  // lex-min witness of size `best`
  std::function<bool(int, int)> can_complete = [&](int start, int need) -> bool {
    ++nodes;
    if (need == 0) return true;
    if (n - start < need) return false;
    for (int j = start; j <= n - need; ++j) {
      if (push(e[static_cast<std::size_t>(j)])) {
        if (can_complete(j + 1, need - 1)) {
          pop(e[static_cast<std::size_t>(j)]);
          return true;
        }
      }
      pop(e[static_cast<std::size_t>(j)]);
    }
    return false;
  };
  chosen.clear();
  std::vector<std::int64_t> witness;
  int need = best;
  for (int i = 0; i < n && need > 0; ++i) {
    if (push(e[static_cast<std::size_t>(i)]) && can_complete(i + 1, need - 1)) {
      witness.push_back(e[static_cast<std::size_t>(i)]);
      --need;
    } else {
      pop(e[static_cast<std::size_t>(i)]);
    }
  }

  SolveResult r;
  r.size = best;
  r.witness = IntSet::of(witness);
  r.nodes_explored = nodes;
  r.mode = SolveMode::branch_and_bound;
  return r;
}

namespace detail {

// C(u, n) capped at `cap` (returns cap+1 on overflow past it).
inline std::uint64_t binomial_capped(std::int64_t u, int n, std::uint64_t cap) {
  if (n < 0 || n > u) return 0;
  __int128 c = 1;
  for (int i = 1; i <= n; ++i) {
    c = c * (u - n + i) / i;
    if (c > static_cast<__int128>(cap)) return cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

inline int solver_value(const IntSet& a, const KLParams& p, bool restricted) {
  SumFreeState st(a, p, restricted);
  SubsetMaximizer<SumFreeState> m(a, std::move(st));
  return m.solve().size;
}

}  // namespace detail

// Desk-scale proxy for the extremal value over n-element subsets of
// [1, universe_bound]: exhaustive enumeration when C(universe, n) fits the
// budget, otherwise seeded greedy descent over single-element swaps with
// restarts.  min_value is an upper bound on the restricted-universe
// infimum unless `exhaustive` is set.
inline ExtremalResult extremal_search(int n, std::int64_t universe_bound, const KLParams& p,
                                      bool restricted,
                                      std::uint64_t budget = kDefaultExtremalBudget,
                                      std::uint64_t seed = 0, int threads = 1) {
  if (n < 1 || universe_bound < n)
    throw std::invalid_argument("extremal_search: need 1 <= n <= universe_bound");
  ExtremalResult res;
  res.n = n;
  res.universe_bound = universe_bound;
  res.seed = seed;

  const std::uint64_t total = detail::binomial_capped(universe_bound, n, budget);
  auto value_of = [&](const std::vector<std::int64_t>& v) {
    return detail::solver_value(IntSet::of(v), p, restricted);
  };

  if (total <= budget) {
    res.exhaustive = true;
    struct Best {
      int value = std::numeric_limits<int>::max();
      std::vector<std::int64_t> set;
      std::uint64_t evals = 0;
    };
    auto run_chunk = [&](int chunk, int nchunks) {
      Best b;
      std::vector<std::int64_t> comb(static_cast<std::size_t>(n));
      std::function<void(int, std::int64_t)> rec = [&](int depth, std::int64_t from) {
        if (depth == n) {
          ++b.evals;
          int v = value_of(comb);
          if (v < b.value) {
            b.value = v;
            b.set = comb;
          }
          return;
        }
        for (std::int64_t x = from; x <= universe_bound - (n - 1 - depth); ++x) {
          if (depth == 0 && static_cast<int>((x - 1) % nchunks) != chunk) continue;
          comb[static_cast<std::size_t>(depth)] = x;
          rec(depth + 1, x + 1);
        }
      };
      rec(0, 1);
      return b;
    };
    int nthreads = std::max(1, threads);
    std::vector<Best> partial(static_cast<std::size_t>(nthreads));
    if (nthreads == 1) {
      partial[0] = run_chunk(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < nthreads; ++t)
        pool.emplace_back([&, t] { partial[static_cast<std::size_t>(t)] = run_chunk(t, nthreads); });
      for (auto& th : pool) th.join();
    }
    Best best;
    for (auto& b : partial) {
      best.evals += b.evals;
      if (b.set.empty()) continue;
      if (b.value < best.value ||
          (b.value == best.value &&
           std::lexicographical_compare(b.set.begin(), b.set.end(), best.set.begin(),
                                        best.set.end())))
        best.value = b.value, best.set = b.set;
    }
    res.min_value = best.value;
    res.argmin_set = IntSet::of(best.set);
    res.nodes = best.evals;
    return res;
  }

  // Seeded local search: greedy first-improvement descent over swaps.
  std::mt19937_64 rng(seed);
  int best_value = std::numeric_limits<int>::max();
  std::vector<std::int64_t> best_set;
  std::uint64_t evals = 0;
  std::vector<std::int64_t> pool(static_cast<std::size_t>(universe_bound));
  for (std::int64_t i = 0; i < universe_bound; ++i) pool[static_cast<std::size_t>(i)] = i + 1;

  while (evals < budget) {
    std::vector<std::int64_t> cur(pool);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      std::uniform_int_distribution<std::size_t> d(i, cur.size() - 1);
      std::swap(cur[i], cur[d(rng)]);
    }
    cur.resize(static_cast<std::size_t>(n));
    std::sort(cur.begin(), cur.end());
    int cur_value = value_of(cur);
    ++evals;
    bool improved = true;
    while (improved && evals < budget) {
      improved = false;
      for (std::size_t i = 0; i < cur.size() && !improved && evals < budget; ++i) {
        for (std::int64_t v = 1; v <= universe_bound && !improved && evals < budget; ++v) {
          if (std::binary_search(cur.begin(), cur.end(), v)) continue;
          std::vector<std::int64_t> cand(cur);
          cand[i] = v;
          std::sort(cand.begin(), cand.end());
          int cv = value_of(cand);
          ++evals;
          if (cv < cur_value) {
            cur = cand;
            cur_value = cv;
            improved = true;
          }
        }
      }
    }
    if (cur_value < best_value ||
        (cur_value == best_value && std::lexicographical_compare(cur.begin(), cur.end(),
                                                                 best_set.begin(), best_set.end())))
      best_value = cur_value, best_set = cur;
  }
  res.min_value = best_value;
  res.argmin_set = IntSet::of(best_set);
  res.nodes = evals;
  return res;
}

}  // namespace klfree
