#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <string>

namespace mtc::hp {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Sets the working precision (in bits) for values created inside the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

int default_bits();        // 128 unless MTCKIT_PRECISION is set
unsigned digits10_for(int bits);

struct Complex {
  Real re, im;
  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  template <typename I>
    requires std::is_arithmetic_v<I>
  Complex(I v) : re(v), im(0) {}

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o);
  Complex operator-() const { return {-re, -im}; }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

  std::complex<double> to_std() const { return {re.convert_to<double>(), im.convert_to<double>()}; }
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real arg(const Complex& z);
Real pi();
Complex expi(const Real& angle);
Complex root_of_unity(long n, long k);  // e^{2 pi i k / n}
std::string to_string(const Real& x, int digits = 25);

}  // namespace mtc::hp
