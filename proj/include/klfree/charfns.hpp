// charfns.hpp
//
// Arithmetic and character functions driving the Mobius sieve:
//
//   mu        Mobius function
//   psi       +1 at n = 1,2 (mod 6), -1 at 4,5 (mod 6), 0 otherwise
//   eta       mu-weighted variant of psi: +mu at 1,4 (mod 6), -mu at 2,5
//   pi        +1 at n = +-1 (mod 12), -1 at +-5 (mod 12), 0 otherwise
//   psi', pi' 2-adic lifts (value at n, n odd; combined at 2||n; 0 at 4|n)
//   Phi_u     +1 at 1, u-1 (mod 2u), -1 at u+1, 2u-1 (mod 2u)
//   Psi_u     +1 at +-1 (mod 4u), -1 at +-(2u-1) (mod 4u)
//
// plus the factor-restricted integer sets (P-rough N, squarefree P-smooth
// M, and M_1 = M restricted to 3-coprime members), Dirichlet-convolution
// sieve coefficients in exact integer arithmetic, the alpha/beta/gamma
// coefficient functions, and the Mertens product over primes up to P.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>

#include "klfree/intset.hpp"

namespace klfree {

inline constexpr std::int64_t kDefaultFactorSetBudget = 100'000'000;

namespace detail {

inline bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

inline int mobius(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
  int factors = 0;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;  // square factor
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return factors % 2 ? -1 : 1;
}

struct CharSpec {
  enum class Kind { Mobius, Psi, Eta, PiChar, PsiPrime, PiPrime, PhiU, PsiCapU };
  Kind kind = Kind::Psi;
  int u = 0;  // required (even, >= 2) for PhiU / PsiCapU

  static CharSpec mobius() { return {Kind::Mobius, 0}; }
  static CharSpec psi() { return {Kind::Psi, 0}; }
  static CharSpec eta() { return {Kind::Eta, 0}; }
  static CharSpec pi() { return {Kind::PiChar, 0}; }
  static CharSpec psi_prime() { return {Kind::PsiPrime, 0}; }
  static CharSpec pi_prime() { return {Kind::PiPrime, 0}; }
  static CharSpec phi_u(int u) { return {Kind::PhiU, u}; }
  static CharSpec psi_cap_u(int u) { return {Kind::PsiCapU, u}; }
};

inline std::int64_t char_value(const CharSpec& spec, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("char_value: n must be >= 1");
  using Kind = CharSpec::Kind;
  switch (spec.kind) {
    case Kind::Mobius:
      return mobius(n);
    case Kind::Psi: {
      switch (n % 6) {
        case 1: case 2: return 1;
        case 4: case 5: return -1;
        default: return 0;
      }
    }
    case Kind::Eta: {
      switch (n % 6) {
        case 1: case 4: return mobius(n);
        case 2: case 5: return -mobius(n);
        default: return 0;
      }
    }
    case Kind::PiChar: {
      switch (n % 12) {
        case 1: case 11: return 1;
        case 5: case 7: return -1;
        default: return 0;
      }
    }
    case Kind::PsiPrime: {
      if (n % 2) return char_value(CharSpec::psi(), n);
      if (n % 4 == 0) return 0;
      return char_value(CharSpec::psi(), n) + char_value(CharSpec::psi(), n / 2);
    }
    case Kind::PiPrime: {
      if (n % 2) return char_value(CharSpec::pi(), n);
      if (n % 4 == 0) return 0;
      return char_value(CharSpec::pi(), n / 2);
    }
    case Kind::PhiU: {
      if (spec.u < 2 || spec.u % 2)
        throw std::invalid_argument("char_value: PhiU requires even u >= 2");
      std::int64_t r = n % (2 * spec.u);
      if (r == 1 || r == spec.u - 1) return 1;
      if (r == spec.u + 1 || r == 2 * spec.u - 1) return -1;
      return 0;
    }
    case Kind::PsiCapU: {
      if (spec.u < 2 || spec.u % 2)
        throw std::invalid_argument("char_value: PsiCapU requires even u >= 2");
      std::int64_t m = 4 * spec.u;
      std::int64_t r = n % m;
      if (r == 1 || r == m - 1) return 1;
      if (r == 2 * spec.u - 1 || r == 2 * spec.u + 1) return -1;
      return 0;
    }
  }
  return 0;
}

struct FactorSetSpec {
  enum class Kind { RoughN, SmoothSquarefreeM, M1 };
  Kind kind = Kind::RoughN;
  std::int64_t P = 2;      // prime threshold
  std::int64_t bound = 1;  // enumeration cap

  static FactorSetSpec rough(std::int64_t P, std::int64_t bound) {
    return {Kind::RoughN, P, bound};
  }
  static FactorSetSpec smooth_squarefree(std::int64_t P, std::int64_t bound) {
    return {Kind::SmoothSquarefreeM, P, bound};
  }
  static FactorSetSpec m1(std::int64_t P, std::int64_t bound) { return {Kind::M1, P, bound}; }
};

// Membership test behind enumerate_factor_set; usable on its own for the
// divisor scans in convolution_coefficient.
inline bool in_factor_set(const FactorSetSpec& spec, std::int64_t n) {
  if (!detail::is_prime_i64(spec.P))
    throw std::invalid_argument("FactorSetSpec: P must be prime");
  if (n < 1) return false;
  switch (spec.kind) {
    case FactorSetSpec::Kind::RoughN: {
      if (n == 1) return false;  // the n = 1 term is always split off separately
      for (std::int64_t d = 2; d < spec.P && d * d <= n; ++d)
        if (n % d == 0) return false;
      // nothing below min(P, sqrt(n)+1) divides n: the smallest prime
      // factor is >= P unless n is itself a prime below P
      return n >= spec.P;
    }
    case FactorSetSpec::Kind::M1:
      if (n % 3 == 0) return false;
      [[fallthrough]];
    case FactorSetSpec::Kind::SmoothSquarefreeM: {
      if (n == 1) return true;
      std::int64_t m = n;
      for (std::int64_t d = 2; d * d <= m && d <= spec.P; ++d) {
        if (m % d == 0) {
          m /= d;
          if (m % d == 0) return false;  // not squarefree
        }
      }
      return m == 1 || (m <= spec.P && detail::is_prime_i64(m));
    }
  }
  return false;
}

inline IntSet enumerate_factor_set(const FactorSetSpec& spec,
                                   std::int64_t budget = kDefaultFactorSetBudget) {
  if (spec.bound < 1 || spec.bound > budget)
    throw std::length_error("enumerate_factor_set: bound outside budget");
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= spec.bound; ++n)
    if (in_factor_set(spec, n)) out.push_back(n);
  return IntSet::of(std::move(out));
}

// alpha(n) = 0 unless (k-l) | n, else (-1)^s (k-l) at n = (k-l)s.
// Equals sum_{t=1..k-l} cos((2t-1) n pi / (k-l)).
inline std::int64_t alpha(std::int64_t n, const KLParams& p) {
  const int d = p.k - p.l;
  if (d < 2) throw std::invalid_argument("alpha: requires k - l >= 2");
  if (n % d != 0) return 0;
  std::int64_t s = n / d;
  return (s % 2 == 0 ? 1 : -1) * d;
}

// beta(n) = 0 unless n = (k-l)(2s-1)/2, else 2(-1)^{s+1};
// gamma(n) = beta((k-l) n / 2).  Requires k - l even.
inline std::pair<std::int64_t, std::int64_t> beta_gamma(std::int64_t n, const KLParams& p) {
  const int d = p.k - p.l;
  if (d % 2) throw std::invalid_argument("beta_gamma: requires k - l even");
  const std::int64_t h = d / 2;
  auto beta = [h](std::int64_t m) -> std::int64_t {
    if (m % h != 0) return 0;
    std::int64_t q = m / h;
    if (q % 2 == 0) return 0;
    std::int64_t s = (q + 1) / 2;
    return (s % 2 == 0 ? -2 : 2);  // 2 * (-1)^(s+1)
  };
  return {beta(n), beta(h * n)};
}

// sum over m in the weight set dividing n of weight(m) * target(n/m),
// in exact integer arithmetic.  The generic overload takes an arbitrary
// integer weight (used for mu*pi products).
inline std::int64_t convolution_coefficient(std::int64_t n, const FactorSetSpec& weight_set,
                                            const std::function<std::int64_t(std::int64_t)>& weight,
                                            const CharSpec& target) {
  if (n < 1) throw std::invalid_argument("convolution_coefficient: n must be >= 1");
  if (n > weight_set.bound)
    throw std::out_of_range("convolution_coefficient: n beyond enumeration bound");
  std::int64_t sum = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    std::int64_t e = n / d;
    if (in_factor_set(weight_set, d)) sum += weight(d) * char_value(target, e);
    if (e != d && in_factor_set(weight_set, e)) sum += weight(e) * char_value(target, d);
  }
  return sum;
}

inline std::int64_t convolution_coefficient(std::int64_t n, const FactorSetSpec& weight_set,
                                            const CharSpec& weight, const CharSpec& target) {
  return convolution_coefficient(
      n, weight_set, [&](std::int64_t m) { return char_value(weight, m); }, target);
}

// prod_{p <= P, p prime} (1 + 1/p)
inline double mertens_product(std::int64_t P) {
  if (P < 2) throw std::invalid_argument("mertens_product: P must be >= 2");
  double prod = 1.0;
  std::vector<bool> composite(static_cast<std::size_t>(P + 1), false);
  for (std::int64_t p = 2; p <= P; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    prod *= 1.0 + 1.0 / static_cast<double>(p);
    for (std::int64_t q = p * p; q <= P; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  return prod;
}

}  // namespace klfree
