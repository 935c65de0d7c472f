#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace dinikit {

// Exact rational number, always in lowest terms with positive denominator.
// mpq_class does not canonicalize two-argument construction on its own, so
// every entry point that could produce a non-canonical value re-canonicalizes.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);

  // Accepts "p", "p/q", and plain decimals like "-0.625" (parsed exactly).
  static Rational from_string(const std::string& text);
  // Exact: every finite double is a dyadic rational.
  static Rational from_double(double x);

  [[nodiscard]] std::string num_str() const;
  [[nodiscard]] std::string den_str() const;
  [[nodiscard]] std::string str() const;  // "p/q", or "p" when q == 1

  // Rounds toward zero (GMP semantics); adequate for display.
  [[nodiscard]] double to_double() const;
  // Smallest double >= exact value; use when the double must stay an upper bound.
  [[nodiscard]] double to_double_up() const;

  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const;
  [[nodiscard]] Rational abs() const;
  // Integer power; e < 0 requires a nonzero base.
  [[nodiscard]] Rational pow_int(long e) const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

}  // namespace dinikit
