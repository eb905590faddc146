#include <random>

#include "doctest.h"
#include "mtckit/cyclotomic.hpp"

using namespace mtc;

namespace {

Cyclotomic z(long n, long k = 1) { return Cyclotomic::zeta(n, k); }
const Cyclotomic phi = Cyclotomic(1) + z(5) + z(5, 4);

}  // namespace

TEST_CASE("rational canonical form") {
  const Rational q(mpz_class(6), mpz_class(-4));
  CHECK(q.mpq().get_num() == -3);
  CHECK(q.mpq().get_den() == 2);
  CHECK(Rational(mpz_class(2), mpz_class(4)) == Rational(mpz_class(1), mpz_class(2)));
}

TEST_CASE("cyclotomic arithmetic") {
  CHECK(z(4) * z(4) == Cyclotomic(-1));
  CHECK(phi * phi == Cyclotomic(2) + z(5) + z(5, 4));
  CHECK(phi * phi == Cyclotomic(1) + phi);
  CHECK(phi + Cyclotomic(0) == phi);
  // equality across conductors
  CHECK(z(8, 2) == z(4));
  CHECK(z(3) + z(3, 2) == Cyclotomic(-1));
  CHECK(z(12, 4) == z(3));
  CHECK((z(6) - z(6)).is_zero());
  CHECK(minimize_conductor(z(40, 8)).conductor() == 5);
}

TEST_CASE("galois action") {
  CHECK(galois_apply(z(5) + z(5, 4), 2) == z(5, 2) + z(5, 3));
  CHECK(galois_apply(z(5) + z(5, 4), 2) == Cyclotomic(-1) - (z(5) + z(5, 4)));
  CHECK(galois_apply(phi, 1) == phi);
  CHECK(galois_apply(z(3), 2) == z(3, 2));
  CHECK(galois_apply(z(3), 2) == conj(z(3)));
  CHECK_THROWS_AS(galois_apply(z(6), 3), std::domain_error);
}

TEST_CASE("inverse") {
  CHECK(inverse(Cyclotomic(2)) == Cyclotomic(Rational(mpz_class(1), mpz_class(2))));
  CHECK(inverse(phi) == phi - Cyclotomic(1));
  CHECK(inverse(phi) == z(5) + z(5, 4));
  CHECK(inverse(z(8)) == z(8, 7));
  CHECK_THROWS_AS(inverse(Cyclotomic(0)), std::domain_error);
}

TEST_CASE("classify_element") {
  const ElementKind a = classify_element(z(16, 3));
  CHECK(a.kind == ElementKind::root_of_unity);
  CHECK(a.order == 16);
  CHECK(classify_element(phi).kind == ElementKind::real);
  const ElementKind c = classify_element(Cyclotomic(Rational(mpz_class(7), mpz_class(3))));
  CHECK(c.kind == ElementKind::rational);
  CHECK(c.value == Rational(mpz_class(7), mpz_class(3)));
}

TEST_CASE("embedding") {
  CHECK(std::abs(to_complex(z(4)) - std::complex<double>(0, 1)) < 1e-15);
  CHECK(std::abs(to_complex(phi).real() - 1.6180339887498949) < 1e-14);
  CHECK(std::abs(to_complex(Cyclotomic(-1)) - std::complex<double>(-1, 0)) < 1e-15);
  hp::PrecisionScope s(256);
  const hp::Complex p = embed_complex(phi, 256);
  const hp::Real exact = (1 + boost::multiprecision::sqrt(hp::Real(5))) / 2;
  CHECK(hp::abs(p - hp::Complex(exact)) < hp::Real("1e-70"));
}

TEST_CASE("square roots and exponentials") {
  for (long n : {2L, 3L, 5L, -1L, -3L, 7L, 12L}) CHECK(sqrt_integer(n) * sqrt_integer(n) == Cyclotomic(n));
  CHECK(exp2pii(Rational(mpz_class(1), mpz_class(16))) == z(16));
  CHECK(exp2pii(Rational(mpz_class(-1), mpz_class(4))) == z(4, 3));
}

// ---------------------------------------------------------------- randomized laws

namespace {

struct Gen {
  std::mt19937_64 rng{20261016};
  const std::vector<long> conductors{1, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24, 40};

  long pick_n() { return conductors[rng() % conductors.size()]; }
  Cyclotomic element(long N) {
    std::vector<Rational> raw(N);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    for (auto& q : raw) q = (rng() % 3 == 0) ? Rational(0) : Rational(mpz_class(num(rng)), mpz_class(den(rng)));
    return Cyclotomic::from_exponent_coeffs(N, raw);
  }
  long unit(long N) {
    const auto u = units_mod(N);
    return u[rng() % u.size()];
  }
};

}  // namespace

TEST_CASE("property: Galois homomorphism laws (1000 cases)") {
  Gen g;
  for (int t = 0; t < 1000; ++t) {
    const long N = g.pick_n(), M = g.pick_n(), L = lcm_l(N, M);
    const Cyclotomic x = g.element(N), y = g.element(M);
    const long l = g.unit(L), m = g.unit(L);
    CAPTURE(x.str());
    CAPTURE(y.str());
    CAPTURE(l);
    REQUIRE(galois_apply(x + y, l) == galois_apply(x, l) + galois_apply(y, l));
    REQUIRE(galois_apply(x * y, l) == galois_apply(x, l) * galois_apply(y, l));
    REQUIRE(galois_apply(galois_apply(x, l), m) == galois_apply(x, (l * m) % L));
    REQUIRE(conj(x) == galois_apply(x, L - 1));
    REQUIRE(galois_apply(x, 1) == x);
  }
}

TEST_CASE("property: inverse exactness (1000 cases)") {
  Gen g;
  int nonzero = 0;
  for (int t = 0; t < 1000; ++t) {
    const Cyclotomic x = g.element(g.pick_n());
    if (x.is_zero()) continue;
    ++nonzero;
    CAPTURE(x.str());
    REQUIRE(x * inverse(x) == Cyclotomic(1));
    REQUIRE(inverse(inverse(x)) == x);
    REQUIRE(field_norm(x) != Rational(0));
  }
  CHECK(nonzero > 950);
}

TEST_CASE("property: canonical equality across rescaling") {
  Gen g;
  for (int t = 0; t < 300; ++t) {
    const long N = g.pick_n();
    const Cyclotomic x = g.element(N);
    const Cyclotomic r = x.rescaled(N * 6);
    REQUIRE(r == x);
    REQUIRE(minimize_conductor(r) == x);
    REQUIRE(N % minimal_conductor(x) == 0);
  }
}
