// Unit and property tests for sumsets, restricted sumsets, the sum-free
// predicates and projective-cube detection.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "klfree/core.hpp"

using namespace klfree;

namespace {

// Naive k-fold sumset by explicit multiset enumeration; the oracle for the
// shift-OR folding path.
std::set<std::int64_t> naive_fold(const IntSet& a, int k) {
  std::set<std::int64_t> cur{0};
  for (int i = 0; i < k; ++i) {
    std::set<std::int64_t> next;
    for (auto s : cur)
      for (auto v : a) next.insert(s + v);
    cur = std::move(next);
  }
  return cur;
}

std::set<std::int64_t> naive_restricted(const IntSet& a, int k) {
  std::set<std::int64_t> out;
  const auto& e = a.elems();
  const int n = static_cast<int>(e.size());
  std::vector<int> idx;
  std::function<void(int, std::int64_t)> rec = [&](int start, std::int64_t sum) {
    if (static_cast<int>(idx.size()) == k) {
      out.insert(sum);
      return;
    }
    for (int j = start; j < n; ++j) {
      idx.push_back(j);
      rec(j + 1, sum + e[static_cast<std::size_t>(j)]);
      idx.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

IntSet random_set(std::mt19937_64& rng, int max_size, std::int64_t max_elem) {
  std::uniform_int_distribution<int> size_d(1, max_size);
  std::uniform_int_distribution<std::int64_t> elem_d(1, max_elem);
  std::set<std::int64_t> s;
  int target = size_d(rng);
  while (static_cast<int>(s.size()) < target) s.insert(elem_d(rng));
  return IntSet::of({s.begin(), s.end()});
}

}  // namespace

TEST_CASE("sumset_fold worked examples") {
  CHECK(sumset_fold(IntSet::of({1, 2}), 2).to_intset() == IntSet::of({2, 3, 4}));
  CHECK(sumset_fold(IntSet::of({5}), 3).to_intset() == IntSet::of({15}));
  CHECK(sumset_fold(IntSet::of({1, 2, 3}), 3).to_intset() == IntSet::range(3, 9));
}

TEST_CASE("sumset_fold range and overflow guards") {
  auto s = sumset_fold(IntSet::of({4, 10}), 3);
  CHECK(s.offset() == 12);
  CHECK(s.length() == 3 * 6 + 1);
  CHECK_THROWS_AS(sumset_fold(IntSet::of({std::numeric_limits<std::int64_t>::max() / 2}), 3),
                  std::range_error);
  CHECK_THROWS_AS(sumset_fold(IntSet::of({1, 1'000'000'000}), 2, /*bit_budget=*/1 << 20),
                  std::range_error);
}

TEST_CASE("restricted_sumset worked examples") {
  CHECK(restricted_sumset(IntSet::of({1, 2}), 2).to_intset() == IntSet::of({3}));
  CHECK(restricted_sumset(IntSet::of({1, 2, 3}), 2).to_intset() == IntSet::of({3, 4, 5}));
  CHECK(restricted_sumset(IntSet::of({1, 2}), 3).count() == 0);
}

TEST_CASE("is_sum_free worked examples") {
  CHECK_FALSE(is_sum_free(IntSet::of({1, 2}), KLParams(2, 1)));
  CHECK(is_sum_free(IntSet::of({1, 2}), KLParams(3, 1)));
  CHECK(is_sum_free(IntSet::range(4, 10), KLParams(3, 1)));
}

TEST_CASE("is_restricted_sum_free worked examples") {
  CHECK(is_restricted_sum_free(IntSet::of({1, 2}), KLParams(2, 1)));
  CHECK_FALSE(is_restricted_sum_free(IntSet::of({1, 2, 3}), KLParams(2, 1)));
  CHECK(is_restricted_sum_free(IntSet::of({1}), KLParams(2, 1)));  // vacuous
}

namespace {

// every nonempty subset-sum of the generators must land in A
bool cube_witness_valid(const IntSet& a, const std::vector<std::int64_t>& gen) {
  for (unsigned mask = 1; mask < (1u << gen.size()); ++mask) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < gen.size(); ++i)
      if (mask & (1u << i)) sum += gen[i];
    if (!a.contains(sum)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("projective cube worked examples") {
  // {1,2,3} contains a square cube (e.g. generators (1,2)); generators may repeat
  auto w2 = contains_projective_cube(IntSet::of({1, 2, 3}), 2);
  REQUIRE(w2.has_value());
  CHECK(cube_witness_valid(IntSet::of({1, 2, 3}), *w2));

  auto w3 = contains_projective_cube(IntSet::range(1, 7), 3);
  REQUIRE(w3.has_value());
  CHECK(w3->size() == 3);
  CHECK(cube_witness_valid(IntSet::range(1, 7), *w3));
  // (1,2,4) is a witness too
  CHECK(cube_witness_valid(IntSet::range(1, 7), {1, 2, 4}));

  CHECK_FALSE(contains_projective_cube(IntSet::of({2, 3}), 2).has_value());
  CHECK_THROWS_AS(contains_projective_cube(IntSet::of({1}), 4), std::invalid_argument);
}

TEST_CASE("cube witness with repeated generator") {
  // 2 = 1 + 1 forces the witness (1,1)
  auto w = contains_projective_cube(IntSet::of({1, 2}), 2);
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("fold equals naive enumeration (oracle), |A|<=8, k<=4") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    IntSet a = random_set(rng, 8, 60);
    for (int k = 1; k <= 4; ++k) {
      auto fold = sumset_fold(a, k).members();
      auto naive = naive_fold(a, k);
      CHECK(std::set<std::int64_t>(fold.begin(), fold.end()) == naive);
    }
  }
}

TEST_CASE("restricted DP equals naive distinct enumeration") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    IntSet a = random_set(rng, 8, 50);
    for (int k = 1; k <= 4; ++k) {
      auto got = restricted_sumset(a, k).members();
      auto want = naive_restricted(a, k);
      CHECK(std::set<std::int64_t>(got.begin(), got.end()) == want);
    }
  }
}

TEST_CASE("properties: fold vs restricted, identity fold, predicate relations") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    IntSet a = random_set(rng, 10, 80);

    // sumset_fold(A,1) has exactly the bits of A
    CHECK(sumset_fold(a, 1).to_intset() == a);

    for (int k = 2; k <= 4; ++k) {
      if (k > static_cast<int>(a.size())) continue;
      auto full = sumset_fold(a, k);
      for (auto v : restricted_sumset(a, k).members()) CHECK(full.test(v));
    }

    KLParams p(trial % 2 ? 3 : 2, 1);
    // sum-free implies restricted sum-free
    if (is_sum_free(a, p)) CHECK(is_restricted_sum_free(a, p));
    // (2,1)-sum-freeness is exactly square-cube-freeness
    CHECK(is_sum_free(a, KLParams(2, 1)) == !contains_projective_cube(a, 2).has_value());
  }
}
