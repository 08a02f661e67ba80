// Arc arithmetic, the Omega_t construction, and exact dilation counts.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "klfree/core.hpp"
#include "klfree/exact.hpp"
#include "klfree/torus.hpp"

using namespace klfree;

TEST_CASE("omega arcs") {
  Arc a = omega(KLParams(2, 1), 1);
  CHECK(a.lo == Rational(1, 3));
  CHECK(a.hi == Rational(2, 3));
  CHECK_FALSE(a.wraps);

  Arc b = omega(KLParams(3, 1), 2);
  CHECK(b.lo == Rational(5, 8));
  CHECK(b.hi == Rational(7, 8));

  Arc c = omega(KLParams(5, 1), 1);
  CHECK(c.lo == Rational(1, 24));
  CHECK(c.hi == Rational(5, 24));

  CHECK_THROWS_AS(omega(KLParams(3, 1), 3), std::out_of_range);
  CHECK_THROWS_AS(omega(KLParams(3, 1), 0), std::out_of_range);
}

TEST_CASE("arc length is exactly 1/(k+l) for k <= 12") {
  for (int k = 2; k <= 12; ++k)
    for (int l = 1; l < k; ++l)
      for (int t = 1; t <= k - l; ++t)
        CHECK(arc_length(omega(KLParams(k, l), t)) == Rational(1, k + l));
}

TEST_CASE("arc_k_fold") {
  Arc a = make_arc(Rational(1, 3), Rational(2, 3));
  auto f2 = arc_k_fold(a, 2);
  REQUIRE_FALSE(f2.full_circle);
  CHECK(f2.arc.lo == Rational(2, 3));
  CHECK(f2.arc.hi == Rational(1, 3));
  CHECK(f2.arc.wraps);

  auto f1 = arc_k_fold(a, 1);
  CHECK(f1.arc.lo == a.lo);
  CHECK(f1.arc.hi == a.hi);

  auto f4 = arc_k_fold(make_arc(Rational(1, 8), Rational(3, 8)), 4);
  CHECK(f4.full_circle);
}

TEST_CASE("verify_omega_sum_free across the full small-parameter sweep") {
  CHECK(verify_omega_sum_free(KLParams(2, 1), 1));
  CHECK(verify_omega_sum_free(KLParams(3, 1), 1));
  CHECK(verify_omega_sum_free(KLParams(3, 2), 1));
  int cases = 0;
  for (int k = 2; k <= 12; ++k)
    for (int l = 1; l < k; ++l)
      for (int t = 1; t <= k - l; ++t) {
        ++cases;
        CHECK(verify_omega_sum_free(KLParams(k, l), t));
      }
  CHECK(cases == 286);  // sum of C(k,2) for k = 2..12
}

TEST_CASE("dilation_subset worked examples") {
  Arc third = make_arc(Rational(1, 3), Rational(2, 3));
  CHECK(dilation_subset(IntSet::range(1, 10), Rational(1, 2), third) ==
        IntSet::of({1, 3, 5, 7, 9}));

  CHECK(dilation_subset(IntSet::range(6, 10), Rational(1, 1000), third).empty());

  // an arc missing only one point of the circle catches every member
  Arc almost = make_arc(Rational(1, 997), Rational(1, 997) + Rational(996, 997));
  IntSet a = IntSet::of({1, 2, 3, 4, 5});
  CHECK(dilation_subset(a, Rational(1, 7), almost) == a);
}

TEST_CASE("open endpoints are excluded exactly") {
  Arc third = make_arc(Rational(1, 3), Rational(2, 3));
  // frac(1 * 1/3) == lo and frac(2 * 1/3) == hi -> both excluded
  CHECK(dilation_subset(IntSet::of({1, 2}), Rational(1, 3), third).empty());
  // nudge inside and both count
  CHECK(dilation_subset(IntSet::of({1}), Rational(1, 3) + Rational(1, 1000), third) ==
        IntSet::of({1}));
  CHECK(dilation_subset(IntSet::of({2}), Rational(1, 4), third) == IntSet::of({2}));
}

TEST_CASE("best_dilation worked examples") {
  auto r = best_dilation(IntSet::range(1, 10), KLParams(2, 1));
  CHECK(r.count == 5);
  CHECK(is_sum_free(r.subset, KLParams(2, 1)));
  CHECK(static_cast<int>(r.subset.size()) == r.count);

  auto r3 = best_dilation(IntSet::of({1, 2, 3}), KLParams(2, 1));
  CHECK(r3.count == 2);

  auto r1 = best_dilation(IntSet::of({3}), KLParams(5, 2));
  CHECK(r1.count == 1);
}

TEST_CASE("best_dilation is reproducible and subset matches its own x") {
  IntSet a = IntSet::of({2, 5, 9, 11, 17});
  for (auto p : {KLParams(2, 1), KLParams(3, 1), KLParams(5, 2)}) {
    auto r1 = best_dilation(a, p);
    auto r2 = best_dilation(a, p);
    CHECK(r1.x == r2.x);
    CHECK(r1.t == r2.t);
    CHECK(r1.subset == dilation_subset(a, r1.x, omega(p, r1.t)));
  }
}

TEST_CASE("dilation properties on random sets") {
  std::mt19937_64 rng(4242);
  const KLParams params[] = {{2, 1}, {3, 1}, {3, 2}, {5, 1}, {4, 2}};
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> size_d(1, 10);
    std::uniform_int_distribution<std::int64_t> elem_d(1, 60);
    std::set<std::int64_t> s;
    int target = size_d(rng);
    while (static_cast<int>(s.size()) < target) s.insert(elem_d(rng));
    IntSet a = IntSet::of({s.begin(), s.end()});

    const auto& p = params[trial % 5];
    auto r = best_dilation(a, p);
    const int n = static_cast<int>(a.size());
    const int kl = p.k + p.l;

    // pigeonhole floor, strengthened to the ceiling when (k+l) does not divide |A|
    if (n % kl != 0)
      CHECK(r.count >= (n + kl - 1) / kl);
    else
      CHECK(r.count * kl >= n);

    // dilate of a sum-free arc is sum-free
    CHECK(is_sum_free(r.subset, p));

    // one feasible construction can never beat the exact solver
    CHECK(r.count <= max_sum_free_subset(a, p, false).size);
  }
}

TEST_CASE("dilation_profile covers the circle and matches spot checks") {
  IntSet a = IntSet::of({1, 2, 5});
  auto gaps = dilation_profile(a, KLParams(2, 1), 1);
  REQUIRE_FALSE(gaps.empty());
  Arc om = omega(KLParams(2, 1), 1);
  for (const auto& g : gaps)
    CHECK(static_cast<int>(dilation_subset(a, g.x_mid, om).size()) == g.count);
}

TEST_CASE("breakpoint budget is enforced") {
  CHECK_THROWS_AS(best_dilation(IntSet::of({1'000'000}), KLParams(2, 1), /*budget=*/100),
                  std::range_error);
}
