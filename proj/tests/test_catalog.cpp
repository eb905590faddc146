#include "doctest.h"
#include "mtckit/catalog.hpp"
#include "mtckit/fsymbols.hpp"
#include "mtckit/galois.hpp"
#include "mtckit/twists.hpp"

using namespace mtc;

namespace {

Cyclotomic z(long n, long k = 1) { return Cyclotomic::zeta(n, k); }

}  // namespace

TEST_CASE("stored records") {
  CHECK(catalog_names().size() == 10);
  const AnyonTheory ising = get("ising");
  CHECK(ising.label_names == std::vector<std::string>{"1", "sigma", "psi"});
  CHECK(ising.twists == TwistVector{Cyclotomic(1), z(16), Cyclotomic(-1)});
  CHECK(ising.D == Cyclotomic(2));
  CHECK(get("toric").central_charge == Rational(0));
  CHECK_THROWS_AS(get("nonsense"), MtcError);
  for (const auto& n : catalog_names()) {
    CAPTURE(n);
    const AnyonTheory t = get(n);
    CHECK(verlinde(t.stilde) == t.fusion);
    CHECK(t.D * t.D == t.stilde.Dsq());
    CHECK(charge_residual(t) < hp::Real("1e-20"));
  }
}

TEST_CASE("Fibonacci F matrix") {
  const AnyonTheory f = get("fibonacci");
  const FMatrix& F = f.Fsym(1, 1, 1, 1);
  REQUIRE(F.m.size() == 2);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const double want[2][2] = {{1 / phi, 1 / std::sqrt(phi)}, {1 / std::sqrt(phi), -1 / phi}};
  hp::PrecisionScope s(128);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(F.m[i][j].value(128).to_std().real() == doctest::Approx(want[i][j]));
  // entries stay exact: phi^{-1/2} squared is phi - 1
  const FEntry sq = F.m[0][1] * F.m[0][1];
  CHECK(sq.coeff * sq.coeff * sq.radicand == Cyclotomic(1) * (z(5) + z(5, 4)) * (z(5) + z(5, 4)));
}

TEST_CASE("F data invariants") {
  for (const auto& n : catalog_names()) {
    const AnyonTheory t = get(n);
    if (!t.F) continue;
    CAPTURE(n);
    for (const auto& [k, f] : *t.F) {
      CHECK(f.left == f_left(t.fusion, k[0], k[1], k[2], k[3]));
      CHECK(f.right == f_right(t.fusion, k[0], k[1], k[2], k[3]));
      CHECK(f.m.size() == f.left.size());
      for (const auto& row : f.m) CHECK(row.size() == f.right.size());
    }
    for (int a = 0; a < t.rank(); ++a)
      for (int b = 0; b < t.rank(); ++b)
        for (int c = 0; c < t.rank(); ++c) CHECK(t.fusion.ni(a, b, c) <= 1);
  }
}

TEST_CASE("pentagon and hexagon") {
  int with_f = 0;
  for (const auto& n : catalog_names()) {
    const AnyonTheory t = get(n);
    if (!t.F) continue;
    ++with_f;
    CAPTURE(n);
    const ResidualReport p = verify_pentagon(t), h = verify_hexagon(t);
    CHECK_MESSAGE(p.report.ok(), p.report.text());
    CHECK_MESSAGE(h.report.ok(), h.report.text());
    CHECK(p.max_residual < 1e-20);
    CHECK(h.max_residual < 1e-20);
    // a single sign flip breaks them
    const AnyonTheory m = mutate_f(t);
    CHECK_FALSE((verify_pentagon(m).report.ok() && verify_hexagon(m).report.ok()));
  }
  CHECK(with_f == 8);
  CHECK_FALSE(verify_pentagon(mutate_f(get("fibonacci"))).report.ok());
  // Ising and (A1,2) differ in the sign of F^{sss}_s and both pass
  CHECK(verify_pentagon(get("a1k2")).report.ok());
  // conjugating one R-value only breaks the hexagon
  AnyonTheory bad = get("ising");
  bad.R[{1, 1, 2}] = conj(bad.R[{1, 1, 2}]);
  CHECK_FALSE(verify_hexagon(bad).report.ok());
}

TEST_CASE("ribbon relations") {
  for (const auto& n : catalog_names()) {
    CAPTURE(n);
    const Report r = ribbon_checks(get(n));
    CHECK_MESSAGE(r.ok(), r.text());
  }
  const AnyonTheory s = get("semion");
  CHECK(s.Rsym(1, 1, 0) == z(4));
  CHECK(s.Rsym(1, 1, 0) == Cyclotomic(fs_indicators(s.symbol())[1]) * conj(s.twists[1]));
  const AnyonTheory f = get("fibonacci");
  CHECK(f.Rsym(1, 1, 0) * f.Rsym(1, 1, 0) == conj(f.twists[1] * f.twists[1]));
}

TEST_CASE("symmetry operations") {
  const AnyonTheory s = get("semion");
  const AnyonTheory p = product(s, conjugate(s));
  CHECK(p.rank() == 4);
  CHECK(fusion_key(p.fusion) == fusion_key(get("toric").fusion));
  std::multiset<std::string> th;
  for (const auto& x : p.twists) th.insert(x.str());
  CHECK(th == std::multiset<std::string>{Cyclotomic(1).str(), z(4).str(), (-z(4)).str(), Cyclotomic(1).str()});
  CHECK(negate_s(get("ising")).central_charge == Rational(mpz_class(9), mpz_class(2)));
  CHECK(conjugate(get("fibonacci")).twists == TwistVector{Cyclotomic(1), z(5, 3)});
  for (const auto& n : catalog_names()) {
    const AnyonTheory t = get(n);
    CHECK(canonical_key(conjugate(conjugate(t)).symbol()) == canonical_key(t.symbol()));
    CHECK(canonical_key(negate_s(negate_s(t)).symbol()) == canonical_key(t.symbol()));
  }
  const AnyonTheory a = get("semion"), b = get("fibonacci"), c = conjugate(get("semion"));
  CHECK(canonical_key(product(product(a, b), c).symbol()) == canonical_key(product(a, product(b, c)).symbol()));
  CHECK(derive_theory("fibonacci*fibonacci").rank() == 4);
  CHECK(derive_theory("conj(neg(semion))").s00_sign == -1);
}

TEST_CASE("primality") {
  CHECK(primality(get("ising")).prime);
  CHECK(primality(get("toric")).prime);
  const Primality ff = primality(derive_theory("fibonacci*fibonacci"));
  CHECK_FALSE(ff.prime);
  CHECK(ff.factors.find("fibonacci") != std::string::npos);
  CHECK_FALSE(primality(derive_theory("semion*semion")).prime);
}

TEST_CASE("congruence relations") {
  for (const auto& n : catalog_names()) {
    CAPTURE(n);
    const Report r = congruence_relations(get(n));
    CHECK_MESSAGE(r.ok(), r.text());
  }
  const Report a7 = congruence_relations(get("a1k7half"));
  bool seen = false;
  for (const auto& c : a7.checks) seen = seen || c.name == "(T^4 S T^5 S)^2 = I";
  CHECK(seen);
}

TEST_CASE("Temperley-Lieb generators") {
  const TLData t7 = tl_generator(7);
  // a = 2: theta = A^8 = e^{4 pi i/9}
  CHECK(t7.twists[1] == z(9, 2));
  CHECK(t7.central_charge == Rational(mpz_class(10), mpz_class(3)));
  CHECK(t7.central_charge_raw == Rational(1) + Rational(mpz_class(21), mpz_class(9)));
  const TLData t5 = tl_generator(5);
  // a = 4: theta = A^24 = e^{2 pi i/7}
  CHECK(t5.twists[2] == z(7));
  CHECK(t5.central_charge == Rational(mpz_class(48), mpz_class(7)));
  for (int k : {5, 7}) {
    const TLData t = tl_generator(k);
    CHECK(classify_element(t.A).kind == ElementKind::root_of_unity);
    CHECK((2 * (k + 2)) % classify_element(t.A).order == 0);
    const Report r = tl_crosscheck(k);
    CHECK_MESSAGE(r.ok(), r.text());
  }
  CHECK_THROWS_AS(tl_generator(4), MtcError);
}

TEST_CASE("counting") {
  const CountResult c = count_umtcs(4);
  CHECK(c.total == 70);
  CHECK(c.up_to_sign == 35);
  for (const auto& r : c.rules) {
    CAPTURE(r.fusion_rule);
    CHECK(r.mtcs == r.expected);
  }
  int rank1 = 0, rank4 = 0;
  for (const auto& r : c.rules) {
    if (r.rank == 1) rank1 += r.mtcs;
    if (r.rank == 4) rank4 += r.mtcs;
    if (r.fusion_rule == "(A1,2)") CHECK(r.mtcs == 16);
    if (r.fusion_rule == "Z2xZ2") CHECK(r.mtcs == 10);
  }
  CHECK(rank1 == 2);
  CHECK(rank4 == 36);
}

TEST_CASE("Ising fusion splits 8 + 8 by indicator") {
  int minus = 0;
  for (const auto& s : solve_twists(get("ising").stilde)) {
    const auto nu = fs_indicators(make_symbol(get("ising").stilde, s));
    minus += nu[1] == -1;
  }
  // one S~ carries both indicator classes among its eight T
  CHECK(minus == 4);
}

TEST_CASE("theory suite") {
  const Report r = theory_suite(get("a1k5half"));
  CHECK(r.ok());
  bool na = false;
  for (const auto& c : r.checks) na = na || c.name == "pentagon: not applicable";
  CHECK(na);
  CHECK_THROWS_AS(theory_suite(get("semion"), {"bogus"}), MtcError);
}
