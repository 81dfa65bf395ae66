#pragma once

#include <gmpxx.h>

namespace qflag {

using Int = mpz_class;
using Rat = mpq_class;

// base^e for integer e of either sign; base must be nonzero when e < 0.
Rat rat_pow(const Rat& base, long e);

// Narrowing conversion with a range check.
long to_long_checked(const Int& v);

Int binomial(unsigned long n, unsigned long k);

}  // namespace qflag
