#include "toricsyz/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace toricsyz {

double log_of(const Int& v) {
    if (v <= 0) throw std::domain_error("log_of: argument must be positive");
    signed long exponent = 0;
    double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

}  // namespace toricsyz
