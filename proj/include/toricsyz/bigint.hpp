#pragma once

#include <gmpxx.h>

namespace toricsyz {

using Int = mpz_class;

// Natural log of a positive big integer via mantissa/exponent extraction.
// Gives full double precision (53 mantissa bits, ~16 decimal digits).
double log_of(const Int& v);

}  // namespace toricsyz
