#include "mtckit/rational.hpp"

#include <stdexcept>

namespace mtc {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("DivisionByZero: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s), mpz_class(1));
    return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

long Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p())
    throw std::range_error("rational is not a machine integer: " + str());
  return q_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("DivisionByZero");
  q_ /= o.q_;
  return *this;
}

void Rational::add_mul(const Rational& b, long k) {
  if (k == 0 || b.is_zero()) return;
  mpq_class t = b.q_;
  t *= k;
  q_ += t;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

mpz_class floor(const Rational& x) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), x.mpq().get_num_mpz_t(), x.mpq().get_den_mpz_t());
  return r;
}

Rational frac(const Rational& x) { return x - Rational(floor(x), mpz_class(1)); }

}  // namespace mtc
