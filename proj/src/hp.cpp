#include "mtckit/hp.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace mtc::hp {

unsigned digits10_for(int bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionScope::PrecisionScope(int bits) : saved_(Real::default_precision()) {
  Real::default_precision(digits10_for(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

int default_bits() {
  if (const char* env = std::getenv("MTCKIT_PRECISION")) {
    int b = std::atoi(env);
    if (b >= 53) return b;
  }
  return 128;
}

Complex& Complex::operator/=(const Complex& o) {
  Real den = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / den;
  im = (im * o.re - re * o.im) / den;
  re = std::move(r);
  return *this;
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }
Real abs(const Complex& z) { return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im); }
Real arg(const Complex& z) { return boost::multiprecision::atan2(z.im, z.re); }
Real pi() {
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

Complex expi(const Real& angle) {
  return {boost::multiprecision::cos(angle), boost::multiprecision::sin(angle)};
}

Complex root_of_unity(long n, long k) {
  k %= n;
  if (k < 0) k += n;
  // exact values for the quarter turns keep zero imaginary parts clean
  if (k == 0) return Complex(1);
  if (2 * k == n) return Complex(-1);
  if (4 * k == n) return Complex(Real(0), Real(1));
  if (4 * k == 3 * n) return Complex(Real(0), Real(-1));
  Real angle = 2 * pi() * k / n;
  return expi(angle);
}

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

}  // namespace mtc::hp
