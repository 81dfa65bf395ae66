#include "qflag/numeric.hpp"

#include <stdexcept>

namespace qflag {

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e > 0) return Rat(0);
    throw std::domain_error("rat_pow: zero base with negative exponent");
  }
  const unsigned long mag =
      e > 0 ? static_cast<unsigned long>(e) : -static_cast<unsigned long>(e);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), mag);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), mag);
  Rat out = e > 0 ? Rat(num, den) : Rat(den, num);
  out.canonicalize();
  return out;
}

long to_long_checked(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer exceeds long range");
  return v.get_si();
}

Int binomial(unsigned long n, unsigned long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace qflag
