#include "doctest.h"
#include "mtckit/catalog.hpp"
#include "mtckit/modular.hpp"

using namespace mtc;

namespace {

Cyclotomic z(long n, long k = 1) { return Cyclotomic::zeta(n, k); }
const Cyclotomic phi = Cyclotomic(1) + z(5) + z(5, 4);
const Cyclotomic r2 = z(8) - z(8, 3);

SMatrixTilde fib_s(const Cyclotomic& d = phi) {
  CMatrix s(2, 2);
  s << Cyclotomic(1), d, d, Cyclotomic(-1);
  return SMatrixTilde(LabelSet::self_dual(2), s);
}

SMatrixTilde ising_s() {
  CMatrix s(3, 3);
  s << Cyclotomic(1), r2, Cyclotomic(1), r2, Cyclotomic(0), -r2, Cyclotomic(1), -r2, Cyclotomic(1);
  return SMatrixTilde(LabelSet::self_dual(3), s);
}

ModularSymbol ising_with(const Cyclotomic& theta) {
  return make_symbol(ising_s(), {Cyclotomic(1), theta, Cyclotomic(-1)});
}

}  // namespace

TEST_CASE("labels") {
  CHECK_THROWS_AS(LabelSet({}), MtcError);
  CHECK_THROWS_AS(LabelSet({1, 0}), MtcError);    // dual(0) must be 0
  CHECK_THROWS_AS(LabelSet({0, 2, 2}), MtcError);  // not an involution
  const LabelSet L({0, 2, 1});
  for (int i = 0; i < 3; ++i) CHECK(L.dual(L.dual(i)) == i);
  CHECK_FALSE(L.all_self_dual());
}

TEST_CASE("verlinde") {
  const FusionRules F = verlinde(fib_s());
  CHECK(F.ni(1, 1, 0) == 1);
  CHECK(F.ni(1, 1, 1) == 1);
  CHECK(F.ni(1, 0, 1) == 1);
  CMatrix one(1, 1);
  one(0, 0) = Cyclotomic(1);
  CHECK(verlinde(SMatrixTilde(LabelSet::self_dual(1), one)).ni(0, 0, 0) == 1);
  const FusionRules I = verlinde(ising_s());
  const int want[3][3] = {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) CHECK(I.ni(1, j, k) == want[j][k]);
  CHECK(I.validate().ok());
}

TEST_CASE("fusion rule invariants") {
  const FusionRules F = verlinde(get("z4").stilde);
  const int n = F.rank();
  const auto& L = F.labels();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        CHECK(F.ni(i, j, k) == F.ni(j, i, k));
        CHECK(F.ni(i, j, k) == F.ni(L.dual(i), L.dual(j), L.dual(k)));
        CHECK(F.ni(i, j, k) == F.ni(i, L.dual(k), L.dual(j)));
      }
  auto t = F.table();
  t[1][1][0] = 0;  // break the unit axiom
  CHECK_FALSE(FusionRules::from_table(L, t).validate().ok());
}

TEST_CASE("S~ invariants") {
  CHECK(fib_s().validate().ok());
  CMatrix bad = fib_s().matrix();
  bad(0, 1) = bad(0, 1) + Cyclotomic(1);
  CHECK_FALSE(SMatrixTilde(LabelSet::self_dual(2), bad).validate().ok());
  CHECK_THROWS_AS(verlinde(SMatrixTilde(LabelSet::self_dual(2), bad)), MtcError);
  // orthogonality S~ conj(S~) = D^2 I
  const SMatrixTilde S = get("a1k7half").stilde;
  const CMatrix P = S.matrix() * S.matrix().unaryExpr([](const Cyclotomic& x) { return conj(x); });
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(P(i, j) == (i == j ? S.Dsq() : Cyclotomic(0)));
}

TEST_CASE("eigen relation") {
  CHECK(check_eigen_relation(fib_s(), verlinde(fib_s())).ok());
  CMatrix one(1, 1);
  one(0, 0) = Cyclotomic(1);
  const SMatrixTilde S1(LabelSet::self_dual(1), one);
  CHECK(check_eigen_relation(S1, verlinde(S1)).ok());
  // N from Fibonacci against a perturbed matrix: fails at row 1
  CMatrix p = fib_s().matrix();
  p(1, 1) = p(1, 1) + Cyclotomic(1);
  const Report r = check_eigen_relation(SMatrixTilde(LabelSet::self_dual(2), p), verlinde(fib_s()));
  REQUIRE_FALSE(r.ok());
  CHECK(r.first_failure()->detail.rfind("(1,", 0) == 0);
}

TEST_CASE("modular symbol checks") {
  const ModularSymbol fib = make_symbol(fib_s(), {Cyclotomic(1), z(5, 2)});
  CHECK(check_modular_symbol(fib).ok());
  CHECK(twist_ring_identity(fib).ok());
  CHECK(vafa_check(fib).ok());
  const ModularSymbol wrong = make_symbol(fib_s(), {Cyclotomic(1), z(5)});
  CHECK_FALSE(twist_ring_identity(wrong).ok());
  // any unimodular theta gives a symbol with Ising fusion, but only 16th roots pass Vafa
  const ModularSymbol s7 = ising_with(z(14));
  CHECK(s7.validate_types().ok());
  CHECK(check_eigen_relation(s7.stilde, s7.fusion).ok());
  CHECK(vafa_check(ising_with(z(16))).ok());
  CHECK_FALSE(vafa_check(ising_with(z(20))).ok());
  CHECK_FALSE(vafa_check(ising_with(z(14))).ok());
  ModularSymbol bad = fib;
  bad.twists[0] = z(5);
  CHECK_FALSE(bad.validate_types().ok());
}

TEST_CASE("twist ring identity by hand") {
  const AnyonTheory s = get("semion");
  CHECK(s.twists[1] == z(4));
  CHECK(s.stilde(1, 1) == Cyclotomic(-1));
  CHECK(twist_ring_identity(s.symbol()).ok());
  CMatrix one(1, 1);
  one(0, 0) = Cyclotomic(1);
  CHECK(twist_ring_identity(make_symbol(SMatrixTilde(LabelSet::self_dual(1), one), {Cyclotomic(1)})).ok());
  CHECK(vafa_check(make_symbol(SMatrixTilde(LabelSet::self_dual(1), one), {Cyclotomic(1)})).ok());
}

TEST_CASE("Frobenius-Schur indicators") {
  CHECK(fs_indicators(get("semion").symbol())[1] == -1);
  CHECK(fs_indicators(get("ising").symbol())[1] == 1);
  CHECK(fs_indicators(get("a1k2").symbol())[1] == -1);
  const auto z3 = fs_indicators(get("z3").symbol());
  CHECK(z3[1] == 0);
  CHECK(z3[2] == 0);
}

TEST_CASE("Gauss sums and central charge") {
  for (const auto& n : catalog_names()) {
    const ModularSymbol s = get(n).symbol();
    CAPTURE(n);
    CHECK(gauss_sum(s, 1) * gauss_sum(s, -1) == s.stilde.Dsq());
  }
  CHECK(central_charge(get("ising").symbol()) == Rational(mpz_class(1), mpz_class(2)));
  CHECK(central_charge(get("toric").symbol()) == Rational(0));
  CHECK(central_charge(get("a1k5half").symbol()) == Rational(mpz_class(48), mpz_class(7)));
  CHECK(total_dimension(get("ising").symbol()) == Cyclotomic(2));
  const SMatrixTilde a5 = get("a1k5half").stilde;
  CHECK(total_dimension_odd_rank(a5) * total_dimension_odd_rank(a5) == a5.Dsq());
  CHECK_THROWS_AS(total_dimension_odd_rank(get("z3").stilde), MtcError);
}

TEST_CASE("label distinguishability") {
  CHECK(label_distinguishability(fib_s()).ok());
  CHECK(label_distinguishability(get("toric").stilde).ok());
  CMatrix m = get("toric").stilde.matrix();
  for (int i = 0; i < 4; ++i) m(i, 3) = m(i, 2);
  const Report r = label_distinguishability(SMatrixTilde(LabelSet::self_dual(4), m));
  REQUIRE_FALSE(r.ok());
  CHECK(r.first_failure()->detail == "2,3");
}

TEST_CASE("unitarity") {
  CHECK(is_unitary_symbol(make_symbol(fib_s(), {Cyclotomic(1), z(5, 2)})));
  const Cyclotomic yl = Cyclotomic(1) - phi;
  CHECK_FALSE(is_unitary_symbol(make_symbol(fib_s(yl), {Cyclotomic(1), z(5)})));
  CHECK(is_unitary_symbol(get("semion").symbol()));
}

TEST_CASE("strict and lax Verlinde") {
  // rational but non-integral coefficients: S~ = [[1, 2], [2, -1]] has n_{11}^1 = 3/2
  CMatrix s(2, 2);
  s << Cyclotomic(1), Cyclotomic(2), Cyclotomic(2), Cyclotomic(-1);
  const SMatrixTilde S(LabelSet::self_dual(2), s);
  CHECK_THROWS_AS(verlinde(S, VerlindeMode::strict), MtcError);
  const FusionRules F = verlinde(S, VerlindeMode::lax);
  CHECK(F.n(1, 1, 1) == Rational(mpz_class(3), mpz_class(2)));
  CHECK_FALSE(F.integral_nonnegative());
}

TEST_CASE("full suite on every stored theory") {
  for (const auto& n : catalog_names()) {
    CAPTURE(n);
    const Report r = full_symbol_suite(get(n).symbol());
    CHECK_MESSAGE(r.ok(), r.text());
  }
}
