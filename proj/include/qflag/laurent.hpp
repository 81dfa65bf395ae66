#pragma once

#include <map>
#include <string>

#include "qflag/numeric.hpp"

namespace qflag {

/// Element of the Laurent ring Z[q, q^-1].
///
/// Stored as a finite map from exponent to coefficient; zero coefficients are
/// never stored, and the empty map is the zero polynomial. Values are
/// immutable in practice: all operations return fresh polynomials.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long constant);        // NOLINT: implicit by design, constants embed
  explicit Laurent(Int constant);

  static Laurent monomial(Int coeff, int exp);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  /// Extremal exponents; undefined on zero (throws std::logic_error).
  int min_exp() const;
  int max_exp() const;

  Int coeff(int exp) const;
  const std::map<int, Int>& terms() const { return terms_; }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent pow(unsigned n) const;

  /// The bar involution q -> q^-1.
  Laurent bar() const;

  /// Exact evaluation at a nonzero rational point.
  Rat eval_at(const Rat& q0) const;

  /// Canonical form, decreasing exponents: "q^4 + q^2 + 2 + q^-2 + q^-4".
  std::string str() const;

  /// Exact quotient num/den; throws std::domain_error if den is zero or the
  /// division leaves a remainder. There is no rational-function fallback.
  static Laurent divide_exact(const Laurent& num, const Laurent& den);

 private:
  std::map<int, Int> terms_;
};

/// Balanced q-integer [m] in q^d: q^{d(m-1)} + q^{d(m-3)} + ... + q^{-d(m-1)}.
/// Requires m >= 0 and d >= 1; [0] = 0 and [1] = 1.
Laurent qint(long m, int d = 1);

/// [m] extended to negative m by [-m] = -[m] (the EF-commutator pairing).
Laurent qint_signed(long m, int d = 1);

Laurent qfactorial(int n, int d = 1);

/// Gaussian binomial in the balanced convention, [n]!/([k]![n-k]!) in q^d.
/// Always an honest Laurent polynomial; requires 0 <= k <= n.
Laurent qbinom(int n, int k, int d = 1);

}  // namespace qflag
