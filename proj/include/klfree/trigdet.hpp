// trigdet.hpp
//
// Closed-form determinants of the sine/cosine matrices
//
//   A_n = ( sin(i theta_j) )_{i=1..n}          B_n = ( cos((i-1) theta_j) )_{i=1..n}
//
//   det A_n = 2^{n(n-1)/2} (prod_k sin theta_k) prod_{k<l} (cos theta_l - cos theta_k)
//   det B_n = 2^{(n-1)(n-2)/2}                  prod_{k<l} (cos theta_l - cos theta_k)
//
// together with a pivoted-elimination evaluator as the independent route,
// Chebyshev polynomials, and the small linear solves for the lambda /
// alpha / beta coefficient vectors:
//
//   D lambda^T = (0,...,0,1)^T   d_ij = sin(i(2j-1)pi/(k-l)),  size (k-l)/2
//   X alpha^T  = (-1,0,...,0)^T  x_ij = sin(i(2j-1)pi/u),      size u/2
//   Y beta^T   = (1,0,...,0)^T   y_ij = sin((2i-1)(2j-1)pi/2u) size u/2

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "klfree/intset.hpp"

namespace klfree {

enum class DetKind { A_n, B_n };

inline double det_closed(DetKind kind, std::span<const double> theta) {
  const std::size_t n = theta.size();
  if (n < 1) throw std::invalid_argument("det_closed: need n >= 1");
  double vandermonde = 1.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l)
      vandermonde *= std::cos(theta[l]) - std::cos(theta[k]);
  if (kind == DetKind::B_n)
    return std::ldexp(vandermonde, static_cast<int>((n - 1) * (n - 2) / 2));
  double sines = 1.0;
  for (std::size_t k = 0; k < n; ++k) sines *= std::sin(theta[k]);
  return std::ldexp(sines * vandermonde, static_cast<int>(n * (n - 1) / 2));
}

namespace detail {

// determinant by partial-pivot Gaussian elimination
inline double det_eliminate(std::vector<double> m, std::size_t n) {
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(m[r * n + col]) > std::fabs(m[piv * n + col])) piv = r;
    if (m[piv * n + col] == 0.0) return 0.0;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m[piv * n + c], m[col * n + c]);
      det = -det;
    }
    det *= m[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      double f = m[r * n + col] / m[col * n + col];
      for (std::size_t c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
    }
  }
  return det;
}

// Solves m x = b in place (square, partial pivoting).  Throws on a
// numerically singular pivot.
inline std::vector<double> solve_linear(std::vector<double> m, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(m[r * n + col]) > std::fabs(m[piv * n + col])) piv = r;
    if (std::fabs(m[piv * n + col]) < 1e-14)
      throw std::domain_error("solve_linear: singular system");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m[piv * n + c], m[col * n + c]);
      std::swap(b[piv], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      double f = m[r * n + col] / m[col * n + col];
      for (std::size_t c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= m[i * n + c] * x[c];
    x[i] = s / m[i * n + i];
  }
  return x;
}

}  // namespace detail

// Builds the matrix per its display and eliminates.  Capped at n = 12:
// beyond that the closed form is the only sensible route.
inline double det_direct(DetKind kind, std::span<const double> theta) {
  const std::size_t n = theta.size();
  if (n < 1) throw std::invalid_argument("det_direct: need n >= 1");
  if (n > 12) throw std::length_error("det_direct: capped at n = 12");
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i * n + j] = (kind == DetKind::A_n)
                         ? std::sin(static_cast<double>(i + 1) * theta[j])
                         : std::cos(static_cast<double>(i) * theta[j]);
  return detail::det_eliminate(std::move(m), n);
}

inline double chebyshev_T(int n, double x) {
  if (n < 0) throw std::invalid_argument("chebyshev_T: n must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int i = 2; i <= n; ++i) {
    double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Leading coefficient of T_n recovered by n-th forward differencing at
// unit step: delta^n T_n (0) = a_n * n!.
inline double chebyshev_leading_coefficient(int n) {
  if (n < 1) throw std::invalid_argument("chebyshev_leading_coefficient: n must be >= 1");
  std::vector<double> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = chebyshev_T(n, i);
  for (int round = 0; round < n; ++round)
    for (int i = 0; i < n - round; ++i)
      v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i) + 1] - v[static_cast<std::size_t>(i)];
  double fact = 1.0;
  for (int i = 2; i <= n; ++i) fact *= i;
  return v[0] / fact;
}

struct CoeffSolve {
  enum class Kind { LambdaD, AlphaX, BetaY };
  Kind kind = Kind::LambdaD;
  std::vector<double> coeffs;
  double residual = 0.0;
  bool bound_ok = false;
};

namespace detail {

inline double residual_inf(const std::vector<double>& m, const std::vector<double>& x,
                           const std::vector<double>& b) {
  const std::size_t n = b.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = -b[i];
    for (std::size_t j = 0; j < n; ++j) s += m[i * n + j] * x[j];
    worst = std::max(worst, std::fabs(s));
  }
  return worst;
}

// |c_i| <= base^base for all i, compared in logs to dodge overflow
inline bool coeffs_within_power_bound(const std::vector<double>& c, double base) {
  double cap = base * std::log(base);  // log(base^base)
  for (double v : c)
    if (v != 0.0 && std::log(std::fabs(v)) > cap + 1e-12) return false;
  return true;
}

}  // namespace detail

// D lambda^T = (0,...,0,1)^T with d_ij = sin(i(2j-1)pi/(k-l)); needs k-l even.
inline CoeffSolve solve_lambda(const KLParams& p) {
  const int d = p.k - p.l;
  if (d % 2 || d < 2) throw std::invalid_argument("solve_lambda: requires even k - l >= 2");
  const std::size_t m = static_cast<std::size_t>(d) / 2;
  std::vector<double> mat(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      mat[i * m + j] =
          std::sin(static_cast<double>((i + 1) * (2 * j + 1)) * std::numbers::pi / d);
  std::vector<double> rhs(m, 0.0);
  rhs[m - 1] = 1.0;
  CoeffSolve out;
  out.kind = CoeffSolve::Kind::LambdaD;
  out.coeffs = detail::solve_linear(mat, rhs);
  out.residual = detail::residual_inf(mat, out.coeffs, rhs);
  out.bound_ok = detail::coeffs_within_power_bound(out.coeffs, static_cast<double>(p.k));
  return out;
}

// X alpha^T = (-1,0,...,0)^T with x_ij = sin(i(2j-1)pi/u); needs u even.
inline CoeffSolve solve_alpha(int u) {
  if (u < 2 || u % 2) throw std::invalid_argument("solve_alpha: requires even u >= 2");
  const std::size_t t = static_cast<std::size_t>(u) / 2;
  std::vector<double> mat(t * t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      mat[i * t + j] =
          std::sin(static_cast<double>((i + 1) * (2 * j + 1)) * std::numbers::pi / u);
  std::vector<double> rhs(t, 0.0);
  rhs[0] = -1.0;
  CoeffSolve out;
  out.kind = CoeffSolve::Kind::AlphaX;
  out.coeffs = detail::solve_linear(mat, rhs);
  out.residual = detail::residual_inf(mat, out.coeffs, rhs);
  out.bound_ok = detail::coeffs_within_power_bound(out.coeffs, static_cast<double>(t));
  return out;
}

// Y beta^T = (1,0,...,0)^T with y_ij = sin((2i-1)(2j-1)pi/(2u)); needs u even.
inline CoeffSolve solve_beta(int u) {
  if (u < 2 || u % 2) throw std::invalid_argument("solve_beta: requires even u >= 2");
  const std::size_t t = static_cast<std::size_t>(u) / 2;
  std::vector<double> mat(t * t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      mat[i * t + j] =
          std::sin(static_cast<double>((2 * i + 1) * (2 * j + 1)) * std::numbers::pi / (2 * u));
  std::vector<double> rhs(t, 0.0);
  rhs[0] = 1.0;
  CoeffSolve out;
  out.kind = CoeffSolve::Kind::BetaY;
  out.coeffs = detail::solve_linear(mat, rhs);
  out.residual = detail::residual_inf(mat, out.coeffs, rhs);
  out.bound_ok = detail::coeffs_within_power_bound(out.coeffs, static_cast<double>(t));
  return out;
}

// The lambda-weighted sine combination behind the beta coefficients:
//   sum_{j in I1} lambda_j sin((2j-1) n pi/(k-l))
//     - sum_{t in I2} lambda_{k-l+1-t} sin((2t-1) n pi/(k-l)).
inline double beta_from_lambda(std::int64_t n, const KLParams& p,
                               const std::vector<double>& lambda) {
  const int d = p.k - p.l;
  const int half = d / 2;
  double s = 0.0;
  for (int j = 1; j <= half; ++j)
    s += lambda[static_cast<std::size_t>(j - 1)] *
         std::sin(static_cast<double>((2 * j - 1) * n) * std::numbers::pi / d);
  for (int t = half + 1; t <= d; ++t)
    s -= lambda[static_cast<std::size_t>(d - t)] *
         std::sin(static_cast<double>((2 * t - 1) * n) * std::numbers::pi / d);
  return s;
}

// The solved alpha reproduces Phi_u:  Phi(n) = (-1)^n sum_j alpha_j sin(n(2j-1)pi/u).
inline double phi_from_alpha(std::int64_t n, int u, const std::vector<double>& alpha) {
  double s = 0.0;
  for (std::size_t j = 0; j < alpha.size(); ++j)
    s += alpha[j] * std::sin(static_cast<double>(n) * static_cast<double>(2 * j + 1) *
                             std::numbers::pi / u);
  return (n % 2 == 0 ? s : -s);
}

// The solved beta reproduces Psi_u:  Psi(n) = gamma(n)/2 * sum_j beta_j sin(n(2j-1)pi/(2u)),
// gamma(n) = 2(-1)^{(n+1)/2+1} on odd n and 0 on even n.
inline double psi_from_beta(std::int64_t n, int u, const std::vector<double>& beta) {
  if (n % 2 == 0) return 0.0;
  double g = ((n + 1) / 2 + 1) % 2 == 0 ? 2.0 : -2.0;
  double s = 0.0;
  for (std::size_t j = 0; j < beta.size(); ++j)
    s += beta[j] * std::sin(static_cast<double>(n) * static_cast<double>(2 * j + 1) *
                            std::numbers::pi / (2 * u));
  return g * s / 2.0;
}

}  // namespace klfree
