#include "qflag/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qflag {

Laurent::Laurent(long constant) {
  if (constant != 0) terms_[0] = constant;
}

Laurent::Laurent(Int constant) {
  if (constant != 0) terms_[0] = std::move(constant);
}

Laurent Laurent::monomial(Int coeff, int exp) {
  Laurent p;
  if (coeff != 0) p.terms_[exp] = std::move(coeff);
  return p;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

int Laurent::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int Laurent::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

Int Laurent::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      auto it = out.terms_.find(ea + eb);
      if (it == out.terms_.end()) {
        out.terms_.emplace(ea + eb, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  for (auto it = out.terms_.begin(); it != out.terms_.end();)
    it = it->second == 0 ? out.terms_.erase(it) : std::next(it);
  return out;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::operator-() const {
  Laurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Laurent Laurent::pow(unsigned n) const {
  Laurent out(1);
  for (unsigned i = 0; i < n; ++i) out *= *this;
  return out;
}

Laurent Laurent::bar() const {
  Laurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

Rat Laurent::eval_at(const Rat& q0) const {
  if (q0 == 0) throw std::invalid_argument("eval_at: q0 must be nonzero");
  Rat acc(0);
  for (const auto& [e, c] : terms_) acc += Rat(c) * rat_pow(q0, e);
  return acc;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    const bool neg = it->second < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const Int mag = abs(it->second);
    if (e == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str();
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

Laurent Laurent::divide_exact(const Laurent& num, const Laurent& den) {
  if (den.is_zero()) throw std::domain_error("Laurent division by zero");
  if (num.is_zero()) return Laurent{};
  // For an exact quotient every quotient exponent lies in
  // [num.min - den.min, num.max - den.max]; falling below the floor means a
  // nonzero remainder.
  const int floor_exp = num.min_exp() - den.min_exp();
  const int den_top = den.max_exp();
  const Int den_lead = den.terms_.rbegin()->second;
  std::map<int, Int> rem = num.terms_;
  Laurent quot;
  while (!rem.empty()) {
    const int top = rem.rbegin()->first;
    const int qe = top - den_top;
    if (qe < floor_exp) throw std::domain_error("inexact Laurent division");
    const Int lead = rem.rbegin()->second;
    if (!mpz_divisible_p(lead.get_mpz_t(), den_lead.get_mpz_t()))
      throw std::domain_error("inexact Laurent division");
    const Int qc = lead / den_lead;
    for (const auto& [e, c] : den.terms_) {
      auto it = rem.find(e + qe);
      if (it == rem.end()) {
        rem.emplace(e + qe, -(qc * c));
      } else {
        it->second -= qc * c;
        if (it->second == 0) rem.erase(it);
      }
    }
    quot.terms_.emplace(qe, qc);
  }
  return quot;
}

Laurent qint(long m, int d) {
  if (m < 0) throw std::invalid_argument("qint: m must be nonnegative");
  if (d < 1) throw std::invalid_argument("qint: d must be positive");
  Laurent p;
  for (long j = 0; j < m; ++j)
    p += Laurent::monomial(1, static_cast<int>(d * (m - 1 - 2 * j)));
  return p;
}

Laurent qint_signed(long m, int d) {
  return m >= 0 ? qint(m, d) : -qint(-m, d);
}

Laurent qfactorial(int n, int d) {
  if (n < 0) throw std::invalid_argument("qfactorial: n must be nonnegative");
  Laurent p(1);
  for (int m = 2; m <= n; ++m) p *= qint(m, d);
  return p;
}

Laurent qbinom(int n, int k, int d) {
  if (k < 0 || n < 0 || k > n)
    throw std::invalid_argument("qbinom: need 0 <= k <= n");
  // Iterated exact division; after step j the accumulator is the honest
  // binomial [n-k+j choose j], so every division is remainder-free.
  Laurent acc(1);
  for (int j = 1; j <= k; ++j)
    acc = Laurent::divide_exact(acc * qint(n - k + j, d), qint(j, d));
  return acc;
}

}  // namespace qflag
