#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mtckit/hp.hpp"
#include "mtckit/rational.hpp"

namespace mtc {

// Element of Q(zeta_N). Stored in the power basis 1, z, ..., z^{phi(N)-1}
// with z = e^{2 pi i / N}; the conductor is whatever N the value was built at
// (arithmetic rescales to the lcm, minimize_conductor() shrinks it).
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1) {}
  template <std::integral I>
  Cyclotomic(I v) : n_(1), c_{Rational(v)} {}
  Cyclotomic(const Rational& q) : n_(1), c_{q} {}

  static Cyclotomic zeta(long n, long k = 1);
  // sum_k raw[k] zeta_N^k for k in [0, N); any length-N vector is accepted.
  static Cyclotomic from_exponent_coeffs(long N, const std::vector<Rational>& raw);

  long conductor() const { return n_; }
  const std::vector<Rational>& basis_coeffs() const { return c_; }
  // Length-N coefficient vector of the canonical form (zeros past phi(N)).
  std::vector<Rational> coeffs() const;

  Cyclotomic rescaled(long M) const;  // M must be a multiple of conductor()

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic scaled(const Rational& q) const;

  std::string str() const;  // human readable, e.g. "1 + z5 + z5^4"

 private:
  Cyclotomic(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  friend Cyclotomic galois_apply(const Cyclotomic&, long);
  friend Cyclotomic canonical_from_raw(long, const std::vector<Rational>&);

  long n_;
  std::vector<Rational> c_;  // length phi(n_)
};

long euler_phi(long n);
long gcd_l(long a, long b);
long lcm_l(long a, long b);
std::vector<long> units_mod(long n);  // ascending
std::vector<long> divisors(long n);   // ascending

// sigma_l : zeta_N -> zeta_N^l. Throws NotCoprime when gcd(l, N) != 1.
Cyclotomic galois_apply(const Cyclotomic& x, long l);
Cyclotomic conj(const Cyclotomic& x);
Cyclotomic inverse(const Cyclotomic& x);  // norm method
Rational field_norm(const Cyclotomic& x);  // norm from Q(zeta_N) to Q at x's conductor

// Smallest M | N with x in Q(zeta_M).
long minimal_conductor(const Cyclotomic& x);
Cyclotomic minimize_conductor(const Cyclotomic& x);

struct ElementKind {
  enum Kind { rational, real, root_of_unity, generic } kind;
  Rational value;   // for rational
  long order = 0;   // for root_of_unity
  long exponent = 0;  // x = zeta_order^exponent
};
ElementKind classify_element(const Cyclotomic& x);

// Exact square root of a nonzero integer, built from quadratic Gauss sums.
Cyclotomic sqrt_integer(long n);

hp::Complex embed_complex(const Cyclotomic& x, int bits);
std::complex<double> to_complex(const Cyclotomic& x);

// Root of unity zeta_q^p for a rational exponent p/q (value e^{2 pi i r}).
Cyclotomic exp2pii(const Rational& r);

}  // namespace mtc
