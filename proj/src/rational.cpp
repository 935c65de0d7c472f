#include "dinikit/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace dinikit {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");

  const auto slash = text.find('/');
  const auto dot = text.find('.');
  if (slash != std::string::npos && dot != std::string::npos)
    throw std::invalid_argument("Rational: mixed '/' and '.' in \"" + text + "\"");

  auto check_integer = [&](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: bad integer in \"" + text + "\"");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("Rational: bad integer in \"" + text + "\"");
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("Rational: bad character in \"" + text + "\"");
  };

  // base 10 always: the default base 0 would read leading zeros as octal
  auto to_mpz = [](std::string s) {
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s, 10);
  };

  mpq_class q;
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    check_integer(num);
    check_integer(den);
    if (den[0] == '+' || den[0] == '-')
      throw std::invalid_argument("Rational: signed denominator in \"" + text + "\"");
    q = mpq_class(to_mpz(num), to_mpz(den));
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in \"" + text + "\"");
  } else if (dot != std::string::npos) {
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0) throw std::invalid_argument("Rational: trailing '.' in \"" + text + "\"");
    if (text.find('.', dot + 1) != std::string::npos)
      throw std::invalid_argument("Rational: repeated '.' in \"" + text + "\"");
    check_integer(digits);
    mpz_class den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    q = mpq_class(to_mpz(digits), den);
  } else {
    check_integer(text);
    q = mpq_class(to_mpz(text));
  }
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("Rational: non-finite double");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return Rational(std::move(q));
}

std::string Rational::num_str() const { return q_.get_num().get_str(); }
std::string Rational::den_str() const { return q_.get_den().get_str(); }

std::string Rational::str() const {
  return q_.get_den() == 1 ? num_str() : num_str() + "/" + den_str();
}

double Rational::to_double() const { return mpq_get_d(q_.get_mpq_t()); }

double Rational::to_double_up() const {
  const double d = mpq_get_d(q_.get_mpq_t());
  if (!std::isfinite(d)) return d;
  mpq_class back;
  mpq_set_d(back.get_mpq_t(), d);
  // mpq_get_d truncates toward zero, so the round-trip is below the exact
  // value iff the value is positive and inexact.
  if (mpq_cmp(back.get_mpq_t(), q_.get_mpq_t()) < 0)
    return std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

bool Rational::is_integer() const { return q_.get_den() == 1; }

int Rational::sign() const { return mpq_sgn(q_.get_mpq_t()); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  const bool invert = e < 0;
  if (invert && sign() == 0) throw std::domain_error("Rational: 0 to a negative power");
  const auto ue = static_cast<unsigned long>(invert ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), ue);
  mpq_class out = invert ? mpq_class(den, num) : mpq_class(num, den);
  out.canonicalize();
  return Rational(std::move(out));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dinikit
