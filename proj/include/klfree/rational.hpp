// rational.hpp
//
// Exact rational arithmetic (GMP-backed).  Values are kept canonical:
// lowest terms, positive denominator.  Used wherever endpoint grazing
// would make floating point lie: arc membership, dilation counts,
// Folner defects, density bounds.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace klfree {

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(std::int64_t value) : q_(static_cast<long>(value)) {}  // NOLINT(runtime/explicit)
  Rational(std::int64_t num, std::int64_t den)
      : q_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Rational from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("Rational: bad literal " + text);
    q.canonicalize();
    return Rational(std::move(q));
  }

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  double to_double() const { return q_.get_d(); }
  std::string str() const { return q_.get_str(); }  // "p/q" or "p"

  // x - floor(x), in [0,1)
  Rational frac() const {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return Rational(q_ - mpq_class(fl));
  }

  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.q_ == 0) throw std::invalid_argument("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_;
};

}  // namespace klfree
