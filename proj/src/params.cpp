#include "dinikit/params.hpp"

#include <stdexcept>

namespace dinikit {

bool in_series_domain(const Params& p) {
  return p.alpha.sign() > 0 && p.v > Rational(-1);
}

bool in_bounds_domain(const Params& p) {
  return p.alpha.sign() > 0 && p.v > Rational(-7, 8);
}

void require_series_domain(const Params& p) {
  if (p.alpha.sign() <= 0)
    throw std::domain_error("alpha must be positive (got " + p.alpha.str() + ")");
  if (!(p.v > Rational(-1)))
    throw std::domain_error("v must exceed -1 (got " + p.v.str() + ")");
}

void require_bounds_domain(const Params& p) {
  if (p.alpha.sign() <= 0)
    throw std::domain_error("alpha must be positive (got " + p.alpha.str() + ")");
  if (!(p.v > Rational(-7, 8)))
    throw std::domain_error("v must exceed -7/8 for the closed-form constants (got " +
                            p.v.str() + ")");
}

}  // namespace dinikit
