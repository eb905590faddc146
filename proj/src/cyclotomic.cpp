#include "mtckit/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mtc {

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<long> units_mod(long n) {
  if (n == 1) return {1};
  std::vector<long> u;
  for (long l = 1; l < n; ++l)
    if (std::gcd(l, n) == 1) u.push_back(l);
  return u;
}

std::vector<long> divisors(long n) {
  std::vector<long> d;
  for (long k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

namespace {

using Poly = std::vector<long long>;  // ascending coefficients

// Exact division by a monic polynomial.
Poly poly_div(Poly num, const Poly& den) {
  const size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {};
  Poly q(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    long long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

struct FieldData {
  long n = 1, phi = 1;
  Poly cyclo;  // Phi_n, length phi+1
  // pow[e] = x^e mod Phi_n for e in [0, n), sparse (index, coefficient)
  std::vector<std::vector<std::pair<int, long long>>> pow;
};

// Function-local so Cyclotomic values in other static initializers are safe.
struct Caches {
  std::map<long, Poly> cyclo;
  std::map<long, std::shared_ptr<const FieldData>> fields;
  std::mutex mutex;
};
Caches& caches() {
  static Caches c;
  return c;
}

const Poly& cyclo_poly_locked(long n) {
  auto& g_cyclo = caches().cyclo;
  auto it = g_cyclo.find(n);
  if (it != g_cyclo.end()) return it->second;
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div(p, cyclo_poly_locked(d));
  return g_cyclo.emplace(n, std::move(p)).first->second;
}

const FieldData& field(long n) {
  auto& g_fields = caches().fields;
  std::lock_guard<std::mutex> lock(caches().mutex);
  auto it = g_fields.find(n);
  if (it != g_fields.end()) return *it->second;
  auto fd = std::make_shared<FieldData>();
  fd->n = n;
  fd->cyclo = cyclo_poly_locked(n);
  fd->phi = static_cast<long>(fd->cyclo.size()) - 1;
  const long phi = fd->phi;
  Poly cur(phi, 0);
  cur[0] = 1;
  fd->pow.resize(n);
  for (long e = 0; e < n; ++e) {
    if (e > 0) {
      long long top = cur[phi - 1];
      for (long i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (long i = 0; i < phi; ++i) cur[i] -= top * fd->cyclo[i];
    }
    for (long i = 0; i < phi; ++i)
      if (cur[i] != 0) fd->pow[e].emplace_back(static_cast<int>(i), cur[i]);
  }
  return *g_fields.emplace(n, std::move(fd)).first->second;
}

}  // namespace

Cyclotomic canonical_from_raw(long N, const std::vector<Rational>& raw) {
  const FieldData& f = field(N);
  std::vector<Rational> c(f.phi);
  for (long e = 0; e < N; ++e) {
    const Rational& r = raw[e];
    if (r.is_zero()) continue;
    for (const auto& [i, k] : f.pow[e]) c[i].add_mul(r, static_cast<long>(k));
  }
  return Cyclotomic(N, std::move(c));
}

Cyclotomic Cyclotomic::zeta(long n, long k) {
  if (n <= 0) throw std::invalid_argument("zeta: order must be positive");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> raw(n);
  raw[k] = 1;
  return canonical_from_raw(n, raw);
}

Cyclotomic Cyclotomic::from_exponent_coeffs(long N, const std::vector<Rational>& raw) {
  if (N <= 0) throw std::invalid_argument("conductor must be positive");
  if (static_cast<long>(raw.size()) != N)
    throw std::invalid_argument("coefficient vector length must equal the conductor");
  return canonical_from_raw(N, raw);
}

std::vector<Rational> Cyclotomic::coeffs() const {
  std::vector<Rational> out(n_);
  std::copy(c_.begin(), c_.end(), out.begin());
  return out;
}

Cyclotomic Cyclotomic::rescaled(long M) const {
  if (M == n_) return *this;
  if (M % n_ != 0) throw std::invalid_argument("rescale target must be a multiple of the conductor");
  if (n_ == 1) {
    std::vector<Rational> c(euler_phi(M));
    c[0] = c_[0];
    return Cyclotomic(M, std::move(c));
  }
  const long step = M / n_;
  std::vector<Rational> raw(M);
  for (size_t i = 0; i < c_.size(); ++i) raw[(i * step) % M] = c_[i];
  return canonical_from_raw(M, raw);
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool Cyclotomic::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return r.is_zero(); });
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("value is not rational: " + str());
  return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ == n_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  long N = std::lcm(n_, o.n_);
  Cyclotomic a = rescaled(N);
  Cyclotomic b = o.rescaled(N);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::scaled(const Rational& q) const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x *= q;
  return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == 1) return b.scaled(a.c_[0]);
  if (b.n_ == 1) return a.scaled(b.c_[0]);
  const long N = std::lcm(a.n_, b.n_);
  const Cyclotomic x = a.rescaled(N);
  const Cyclotomic y = b.rescaled(N);
  std::vector<Rational> raw(N);
  for (size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (size_t j = 0; j < y.c_.size(); ++j) {
      if (y.c_[j].is_zero()) continue;
      raw[(i + j) % N] += x.c_[i] * y.c_[j];
    }
  }
  return canonical_from_raw(N, raw);
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this = *this * inverse(o); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  const long N = std::lcm(a.n_, b.n_);
  return a.rescaled(N).c_ == b.rescaled(N).c_;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const Rational& r = c_[i];
    if (r.is_zero()) continue;
    std::string mag = abs(r).str();
    if (first) {
      if (r.sign() < 0) os << "-";
    } else {
      os << (r.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != "1") os << mag << "*";
    os << "z" << n_;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

Cyclotomic galois_apply(const Cyclotomic& x, long l) {
  const long N = x.n_;
  if (N == 1) return x;
  long ll = ((l % N) + N) % N;
  if (std::gcd(ll, N) != 1)
    throw std::domain_error("NotCoprime: gcd(" + std::to_string(l) + ", " + std::to_string(N) + ") != 1");
  if (ll == 1) return x;
  std::vector<Rational> raw(N);
  for (size_t i = 0; i < x.c_.size(); ++i)
    if (!x.c_[i].is_zero()) raw[(static_cast<long>(i) * ll) % N] = x.c_[i];
  return canonical_from_raw(N, raw);
}

Cyclotomic conj(const Cyclotomic& x) { return galois_apply(x, -1); }

long minimal_conductor(const Cyclotomic& x) {
  if (x.is_rational()) return 1;
  const long N = x.conductor();
  const auto units = units_mod(N);
  for (long M : divisors(N)) {
    if (M == N) return N;
    bool fixed = true;
    for (long l : units) {
      if (l == 1 || (l - 1) % M != 0) continue;
      if (galois_apply(x, l) != x) {
        fixed = false;
        break;
      }
    }
    if (fixed) return M;
  }
  return N;
}

Cyclotomic minimize_conductor(const Cyclotomic& x) {
  const long N = x.conductor();
  const long M = minimal_conductor(x);
  if (M == N) return x;
  if (M == 1) return Cyclotomic(x.basis_coeffs()[0]);
  // Solve B y = x with B's columns the images of zeta_M^j, j < phi(M).
  const long phiN = euler_phi(N), phiM = euler_phi(M);
  std::vector<std::vector<Rational>> a(phiN, std::vector<Rational>(phiM + 1));
  for (long j = 0; j < phiM; ++j) {
    Cyclotomic col = Cyclotomic::zeta(M, j).rescaled(N);
    for (long i = 0; i < phiN; ++i) a[i][j] = col.basis_coeffs()[i];
  }
  for (long i = 0; i < phiN; ++i) a[i][phiM] = x.basis_coeffs()[i];
  long row = 0;
  std::vector<long> pivcol;
  for (long col = 0; col < phiM && row < phiN; ++col) {
    long p = row;
    while (p < phiN && a[p][col].is_zero()) ++p;
    if (p == phiN) continue;
    std::swap(a[p], a[row]);
    Rational inv = Rational(1) / a[row][col];
    for (long k = col; k <= phiM; ++k) a[row][k] *= inv;
    for (long r = 0; r < phiN; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (long k = col; k <= phiM; ++k) a[r][k] -= f * a[row][k];
    }
    pivcol.push_back(col);
    ++row;
  }
  std::vector<Rational> raw(M);
  for (size_t r = 0; r < pivcol.size(); ++r) raw[pivcol[r]] = a[r][phiM];
  Cyclotomic y = Cyclotomic::from_exponent_coeffs(M, raw);
  if (y != x) throw std::logic_error("minimize_conductor: re-expression failed");
  return y;
}

Rational field_norm(const Cyclotomic& x) {
  Cyclotomic prod = x;
  for (long l : units_mod(x.conductor()))
    if (l != 1) prod *= galois_apply(x, l);
  return prod.rational_value();
}

Cyclotomic inverse(const Cyclotomic& x0) {
  if (x0.is_zero()) throw std::domain_error("DivisionByZero: inverse of 0");
  if (x0.is_rational()) return Cyclotomic(Rational(1) / x0.rational_value());
  const Cyclotomic x = minimize_conductor(x0);
  Cyclotomic others(1);
  for (long l : units_mod(x.conductor()))
    if (l != 1) others *= galois_apply(x, l);
  Rational n = (x * others).rational_value();
  return others.scaled(Rational(1) / n);
}

ElementKind classify_element(const Cyclotomic& x) {
  ElementKind k{ElementKind::generic, Rational(0), 0, 0};
  if (x.is_rational()) {
    k.value = x.rational_value();
    if (k.value == Rational(1)) {
      k.kind = ElementKind::root_of_unity;
      k.order = 1;
      return k;
    }
    if (k.value == Rational(-1)) {
      k.kind = ElementKind::root_of_unity;
      k.order = 2;
      k.exponent = 1;
      return k;
    }
    k.kind = ElementKind::rational;
    return k;
  }
  // roots of unity in Q(zeta_N) are +-zeta_N^j
  const long N = x.conductor();
  const FieldData& f = field(N);
  const auto& c = x.basis_coeffs();
  for (long j = 0; j < N; ++j) {
    for (int s : {1, -1}) {
      bool eq = true;
      std::vector<Rational> v(f.phi);
      for (const auto& [i, kk] : f.pow[j]) v[i] = Rational(static_cast<long>(kk * s));
      for (long i = 0; i < f.phi && eq; ++i) eq = (v[i] == c[i]);
      if (!eq) continue;
      // +-zeta_N^j = zeta_{2N}^{2j (+N)}
      long num = 2 * j + (s < 0 ? N : 0), den = 2 * N;
      long g = std::gcd(num, den);
      k.kind = ElementKind::root_of_unity;
      k.order = den / g;
      k.exponent = num / g;
      return k;
    }
  }
  k.kind = (conj(x) == x) ? ElementKind::real : ElementKind::generic;
  return k;
}

namespace {

int legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long r = 1, b = a, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

Cyclotomic sqrt_prime(long p) {
  if (p == 2) return Cyclotomic::zeta(8, 1) - Cyclotomic::zeta(8, 3);
  std::vector<Rational> raw(p);
  for (long a = 1; a < p; ++a) raw[a] = legendre(a, p);
  Cyclotomic g = Cyclotomic::from_exponent_coeffs(p, raw);
  if (p % 4 == 1) return g;
  return -(Cyclotomic::zeta(4, 1) * g);
}

}  // namespace

Cyclotomic sqrt_integer(long n) {
  if (n == 0) return Cyclotomic(0);
  long m = std::labs(n);
  long sq = 1;
  Cyclotomic r(1);
  for (long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) sq *= p;
    if (e % 2) r *= sqrt_prime(p);
  }
  if (m > 1) r *= sqrt_prime(m);
  r = r.scaled(Rational(sq));
  if (n < 0) r *= Cyclotomic::zeta(4, 1);
  if (r * r != Cyclotomic(n)) throw std::logic_error("sqrt_integer: self-check failed");
  return r;
}

hp::Complex embed_complex(const Cyclotomic& x, int bits) {
  if (bits < 53) throw std::invalid_argument("precision must be at least 53 bits");
  hp::PrecisionScope scope(bits + 16);
  hp::Complex acc;
  const auto& c = x.basis_coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    hp::Real q;
    mpfr_set_q(q.backend().data(), c[i].mpq().get_mpq_t(), MPFR_RNDN);
    hp::Complex z = hp::root_of_unity(x.conductor(), static_cast<long>(i));
    acc += hp::Complex(q * z.re, q * z.im);
  }
  return acc;
}

std::complex<double> to_complex(const Cyclotomic& x) {
  std::complex<double> acc = 0;
  const auto& c = x.basis_coeffs();
  const double w = 2.0 * M_PI / static_cast<double>(x.conductor());
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    acc += c[i].to_double() * std::polar(1.0, w * static_cast<double>(i));
  }
  return acc;
}

Cyclotomic exp2pii(const Rational& r) {
  Rational f = frac(r);
  long q = f.den().get_si();
  long p = f.num().get_si();
  return Cyclotomic::zeta(q, p);
}

}  // namespace mtc
