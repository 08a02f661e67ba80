// torus.hpp
//
// Exact rational arc arithmetic on the circle R/Z, the length-1/(k+l)
// sum-free arcs Omega_t, and exact maximization of the dilation count
//
//     count(x, t) = |{n in A : frac(n*x) in Omega_t}|.
//
// Every membership test is exact rational: the arcs are open, so a single
// grazed endpoint flips counts, and floating point is banned here.  The
// count is piecewise constant in x with breakpoints at (endpoint + j)/n,
// n in A, 0 <= j < n; evaluating midpoints of consecutive breakpoints
// realizes every value the count takes.

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "klfree/intset.hpp"
#include "klfree/rational.hpp"

namespace klfree {

inline constexpr std::int64_t kDefaultBreakpointBudget = 10'000'000;

// Open arc (lo, hi) with endpoints in [0,1); wraps means it crosses 0.
struct Arc {
  Rational lo, hi;
  bool wraps = false;
};

// Builds the open arc (raw_lo, raw_hi) reduced mod 1; the raw length
// must lie in (0,1).
inline Arc make_arc(const Rational& raw_lo, const Rational& raw_hi) {
  Rational len = raw_hi - raw_lo;
  if (!(Rational(0) < len && len < Rational(1)))
    throw std::invalid_argument("make_arc: length must be in (0,1)");
  Arc a;
  a.lo = raw_lo.frac();
  a.hi = raw_hi.frac();
  a.wraps = a.hi < a.lo || a.hi == a.lo;  // hi==lo cannot happen for len in (0,1)
  return a;
}

inline Rational arc_length(const Arc& a) {
  Rational d = a.hi - a.lo;
  return a.wraps ? d + Rational(1) : d;
}

// Membership of x (reduced to [0,1) by the caller or not; frac applied here).
inline bool arc_contains(const Arc& a, const Rational& x) {
  Rational f = x.frac();
  if (a.wraps) return f > a.lo || f < a.hi;
  return a.lo < f && f < a.hi;
}

// k-fold sumset of an open arc: (k*lo, k*hi) mod 1, or the full circle
// once k*length >= 1.
struct FoldedArc {
  bool full_circle = false;
  Arc arc;
};

inline FoldedArc arc_k_fold(const Arc& a, int k) {
  if (k < 1) throw std::invalid_argument("arc_k_fold: k must be >= 1");
  Rational len = arc_length(a) * Rational(k);
  if (len >= Rational(1)) return FoldedArc{true, Arc{}};
  Rational lo = a.lo * Rational(k);
  return FoldedArc{false, make_arc(lo, lo + len)};
}

namespace detail {

// An arc as one or two disjoint open linear intervals inside (0,1).
inline std::vector<std::pair<Rational, Rational>> arc_pieces(const Arc& a) {
  std::vector<std::pair<Rational, Rational>> out;
  if (!a.wraps) {
    out.emplace_back(a.lo, a.hi);
  } else {
    out.emplace_back(a.lo, Rational(1));
    if (a.hi > Rational(0)) out.emplace_back(Rational(0), a.hi);
  }
  return out;
}

}  // namespace detail

inline bool arcs_disjoint(const Arc& a, const Arc& b) {
  for (const auto& [u1, v1] : detail::arc_pieces(a))
    for (const auto& [u2, v2] : detail::arc_pieces(b))
      if (std::max(u1, u2) < std::min(v1, v2)) return false;
  return true;
}

// Omega_t = ((t-1)/(k-l) + l/(k^2-l^2), (t-1)/(k-l) + k/(k^2-l^2)),
// an open (k,l)-sum-free arc of length exactly 1/(k+l), for t in [k-l].
inline Arc omega(const KLParams& p, int t) {
  if (t < 1 || t > p.k - p.l)
    throw std::out_of_range("omega: t must satisfy 1 <= t <= k-l");
  const std::int64_t k = p.k, l = p.l;
  const std::int64_t d2 = k * k - l * l;
  Rational shift(t - 1, k - l);
  return make_arc(shift + Rational(l, d2), shift + Rational(k, d2));
}

// Exact check that k*Omega_t and l*Omega_t are disjoint on the circle.
inline bool verify_omega_sum_free(const KLParams& p, int t) {
  Arc om = omega(p, t);
  FoldedArc fk = arc_k_fold(om, p.k);
  FoldedArc fl = arc_k_fold(om, p.l);
  if (fk.full_circle || fl.full_circle) return false;
  return arcs_disjoint(fk.arc, fl.arc);
}

// {n in A : frac(n*x) in arc}, exact (open endpoints excluded).
inline IntSet dilation_subset(const IntSet& a, const Rational& x, const Arc& arc) {
  std::vector<std::int64_t> out;
  for (auto n : a) {
    Rational nx = x * Rational(n);
    if (arc_contains(arc, nx)) out.push_back(n);
  }
  return IntSet::of(out);
}

struct DilationResult {
  Rational x;
  int count = 0;
  IntSet subset;
  int t = 1;
};

// One constant piece of the count function: the open gap between two
// consecutive breakpoints, represented by its midpoint.
struct DilationGap {
  Rational x_mid;
  int count = 0;
};

namespace detail {

// value num/den in [0,1); exact compare via 128-bit cross products
struct Frac64 {
  std::int64_t num, den;
  friend bool operator<(const Frac64& a, const Frac64& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator==(const Frac64& a, const Frac64& b) {
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
  }
  Rational to_rational() const { return Rational(num, den); }
};

struct Sweep {
  std::vector<Frac64> xs;       // distinct breakpoints, ascending
  std::vector<int> deltas;      // aggregated count change when crossing xs[i] upward
  int wrap_count = 0;           // exact count inside the circular gap (xs.back(), xs.front()+1)
};

inline std::int64_t endpoint_i64(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) throw std::range_error(std::string("best_dilation: ") + what);
  return z.get_si();
}

inline Sweep build_sweep(const IntSet& a, const Arc& arc) {
  if (arc.wraps)
    throw std::invalid_argument("dilation sweep expects a non-wrapping arc");
  const std::int64_t lo_n = endpoint_i64(arc.lo.num(), "endpoint numerator too large");
  const std::int64_t lo_d = endpoint_i64(arc.lo.den(), "endpoint denominator too large");
  const std::int64_t hi_n = endpoint_i64(arc.hi.num(), "endpoint numerator too large");
  const std::int64_t hi_d = endpoint_i64(arc.hi.den(), "endpoint denominator too large");

  std::vector<std::pair<Frac64, int>> events;
  std::size_t total = 0;
  for (auto n : a) total += 2 * static_cast<std::size_t>(n);
  events.reserve(total);
  for (auto n : a) {
    for (std::int64_t j = 0; j < n; ++j) {
      events.push_back({{lo_n + j * lo_d, n * lo_d}, +1});
      events.push_back({{hi_n + j * hi_d, n * hi_d}, -1});
    }
  }
  std::sort(events.begin(), events.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  Sweep s;
  for (const auto& [x, d] : events) {
    if (!s.xs.empty() && s.xs.back() == x) {
      s.deltas.back() += d;
    } else {
      s.xs.push_back(x);
      s.deltas.push_back(d);
    }
  }
  return s;
}

}  // namespace detail

// All constant pieces of x -> |{n in A : frac(nx) in Omega_t}|, in order of
// increasing left breakpoint (the circular gap through 0/1 comes last).
inline std::vector<DilationGap> dilation_profile(const IntSet& a, const KLParams& p, int t,
                                                 std::int64_t budget = kDefaultBreakpointBudget) {
  if (a.empty()) throw std::invalid_argument("dilation_profile: empty set");
  __int128 total = 0;
  for (auto n : a) total += 2 * static_cast<__int128>(n);
  if (total > budget)
    throw std::range_error("dilation: breakpoint count exceeds budget " + std::to_string(budget));

  Arc om = omega(p, t);
  auto sweep = detail::build_sweep(a, om);
  const std::size_t m = sweep.xs.size();

  // exact count inside the circular gap
  Rational wrap_mid = (sweep.xs.back().to_rational() + sweep.xs.front().to_rational() +
                       Rational(1)) /
                      Rational(2);
  int count = static_cast<int>(dilation_subset(a, wrap_mid, om).size());

  std::vector<DilationGap> gaps;
  gaps.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    count += sweep.deltas[i];
    Rational left = sweep.xs[i].to_rational();
    Rational right = (i + 1 < m) ? sweep.xs[i + 1].to_rational()
                                 : sweep.xs.front().to_rational() + Rational(1);
    gaps.push_back({((left + right) / Rational(2)).frac(), count});
  }
  return gaps;
}

// Exact global maximum of the dilation count over x in [0,1) and
// t in [k-l].  Ties: smallest midpoint x, then smallest t.  The sweep
// stays in 64-bit fractions; exact rationals are built only for the
// handful of candidate gaps.
inline DilationResult best_dilation(const IntSet& a, const KLParams& p,
                                    std::int64_t budget = kDefaultBreakpointBudget) {
  if (a.empty()) throw std::invalid_argument("best_dilation: empty set");
  __int128 total = 0;
  for (auto n : a) total += 2 * static_cast<__int128>(n);
  if (total > budget)
    throw std::range_error("best_dilation: breakpoint count exceeds budget " +
                           std::to_string(budget));

  DilationResult best;
  best.count = -1;
  for (int t = 1; t <= p.k - p.l; ++t) {
    Arc om = omega(p, t);
    auto sweep = detail::build_sweep(a, om);
    const std::size_t m = sweep.xs.size();

    Rational wrap_mid = ((sweep.xs.back().to_rational() + sweep.xs.front().to_rational() +
                          Rational(1)) /
                         Rational(2))
                            .frac();
    int count = static_cast<int>(dilation_subset(a, wrap_mid, om).size());
    const int wrap_count = count;

    // non-wrap gaps have ascending midpoints, so the first max is the
    // x-smallest among them
    int best_nonwrap = -1;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      count += sweep.deltas[i];
      if (count > best_nonwrap) {
        best_nonwrap = count;
        best_i = i;
      }
    }

    auto consider = [&](int c, const Rational& mid) {
      if (c > best.count || (c == best.count && mid < best.x)) {
        best.count = c;
        best.x = mid;
        best.t = t;
      }
    };
    if (best_nonwrap >= 0) {
      Rational mid = (sweep.xs[best_i].to_rational() + sweep.xs[best_i + 1].to_rational()) /
                     Rational(2);
      consider(best_nonwrap, mid);
    }
    consider(wrap_count, wrap_mid);
  }
  best.subset = dilation_subset(a, best.x, omega(p, best.t));
  return best;
}

}  // namespace klfree
