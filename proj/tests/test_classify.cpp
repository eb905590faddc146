#include <set>

#include "doctest.h"
#include "mtckit/catalog.hpp"
#include "mtckit/classify.hpp"
#include "mtckit/galois.hpp"

using namespace mtc;

namespace {

Cyclotomic z(long n, long k = 1) { return Cyclotomic::zeta(n, k); }

int family_count(const ClassificationResult& r, const std::string& fam) {
  int n = 0;
  for (const auto& s : r.symbols)
    if (s.family == fam && s.unitary) n += s.orbits;
  return n;
}

std::set<std::string> twist_set(const std::vector<TwistVector>& v) {
  std::set<std::string> out;
  for (const auto& t : v) out.insert(twist_text(t));
  return out;
}

}  // namespace

TEST_CASE("solve_twists") {
  const auto ising = solve_twists(reference_family("ising").members[0]);
  CHECK(ising.size() == 8);
  std::set<std::string> want;
  for (int k = 0; k < 8; ++k) want.insert(twist_text({Cyclotomic(1), z(16, 2 * k + 1), Cyclotomic(-1)}));
  CHECK(twist_set(ising) == want);
  const auto fib = solve_twists(get("fibonacci").stilde);
  CHECK(twist_set(fib) == twist_set({{Cyclotomic(1), z(5, 2)}, {Cyclotomic(1), z(5, 3)}}));
  // toric: Diag(1, -1, e, e) up to the labels' order
  const auto toric = solve_twists(reference_family("toric").members[0]);
  CHECK(toric.size() == 4);
  CHECK(twist_orbit_count(reference_family("toric").members[0], toric) == 2);
  for (const auto& t : toric) {
    int minus = 0;
    for (const auto& x : t) minus += x == Cyclotomic(-1);
    CHECK((minus == 1 || minus == 3));
  }
}

TEST_CASE("twist inequalities") {
  const Report fib = twist_inequality_filter(get("fibonacci").stilde);
  CHECK(fib.ok());
  // j = 0: 2 phi^2 = 5.236 <= D + D^2 = 5.520
  const double phi = (1 + std::sqrt(5.0)) / 2, D2 = 2 + phi;
  CHECK(2 * phi * phi <= std::sqrt(D2) + D2);
  CHECK(2 * phi * phi == doctest::Approx(5.236).epsilon(1e-3));
  CHECK(std::sqrt(D2) + D2 == doctest::Approx(5.520).epsilon(1e-3));
  CMatrix one(1, 1);
  one(0, 0) = Cyclotomic(1);
  CHECK(twist_inequality_filter(SMatrixTilde(LabelSet::self_dual(1), one)).ok());
  const Report c1 = twist_inequality_filter(case1_rejected_candidate());
  REQUIRE_FALSE(c1.ok());
  CHECK(c1.first_failure()->name == "TwistInequality (0,2)");
  CHECK_THROWS_AS(twist_inequality_filter(get("z3").stilde), MtcError);
}

TEST_CASE("rank-4 Case-1 candidate is an S~ but fails the inequality") {
  const SMatrixTilde S = case1_rejected_candidate();
  CHECK(S.validate().ok());
  CHECK(solve_twists(S).empty());
}

TEST_CASE("alpha family is generated and rejected") {
  const SMatrixTilde S = alpha_family_stilde(1);
  CHECK(S.validate().ok());
  CHECK(alpha_family_d2(1) == doctest::Approx(1 + std::sqrt(3.0)));
  CHECK(alpha_family_d2(1) > alpha_family_bound());
  CHECK(alpha_family_bound() == doctest::Approx(2.66891).epsilon(1e-5));
  const ClassificationResult r = enumerate_rank3(false);
  bool traced = false;
  for (const auto& t : r.trace)
    if (t.rfind("(k,l,m,n)=(2,1,2,1)", 0) == 0) traced = t.find("alpha=1") != std::string::npos && t.find("rejected") != std::string::npos;
  CHECK(traced);
}

TEST_CASE("fusion ring search") {
  CHECK(duality_classes(3).size() == 2);
  CHECK(duality_classes(4).size() == 2);
  CHECK(duality_classes(4, false).size() == 1);
  long visited = 0;
  const auto r2 = fusion_rings(LabelSet::self_dual(2), {}, &visited);
  CHECK(r2.size() == 4);  // n_11^1 in 0..3
  CHECK(visited >= 4);
  const auto lam = character_table(verlinde(get("fibonacci").stilde));
  CHECK(lam.rows() == 2);
  const auto nums = numeric_stilde(verlinde(get("fibonacci").stilde), false);
  CHECK(nums.size() == 2);
  CHECK(numeric_stilde(verlinde(get("fibonacci").stilde), true).size() == 1);
  const auto d = real_cyclotomic_integers((1 + std::sqrt(5.0)) / 2, 5);
  REQUIRE(d.size() == 1);
  CHECK(d[0] == Cyclotomic(1) + z(5) + z(5, 4));
}

TEST_CASE("bounded enumeration") {
  auto keys = [](const BoundedResult& b) {
    std::set<std::string> k;
    for (const auto& f : b.survivors()) k.insert(fusion_key(f));
    return k;
  };
  const BoundedResult b1 = bounded_enumeration(Rational(1));
  CHECK(b1.survivors().size() == 1);
  CHECK(b1.survivors()[0].rank() == 1);
  const BoundedResult b15 = bounded_enumeration(Rational(mpz_class(3), mpz_class(2)));
  CHECK(keys(b15) == std::set<std::string>{fusion_key(get("trivial").fusion), fusion_key(get("semion").fusion)});
  const BoundedResult b2 = bounded_enumeration(Rational(2));
  const auto k2 = keys(b2);
  for (const char* n : {"trivial", "semion", "fibonacci", "z3", "ising", "toric", "z4"}) {
    CAPTURE(n);
    CHECK(k2.count(fusion_key(get(n).fusion)));
  }
  CHECK(k2.size() == 7);
  CHECK(b2.max_rank == 4);
  for (const auto& c : b2.candidates) {
    const auto t = c.fusion.table();
    for (const auto& a : t)
      for (const auto& b : a)
        for (long x : b) CHECK(x <= 8);
  }
  CHECK_THROWS_AS(bounded_enumeration(Rational(4), 1000), MtcError);
}

TEST_CASE("rank 1 and 2") {
  const ClassificationResult r1 = classify_rank(1);
  CHECK(r1.symbol_count() == 1);
  const ClassificationResult r2 = enumerate_rank2();
  CHECK(r2.families() == std::vector<std::string>{"z2", "fibonacci"});
  CHECK(r2.symbol_count() == 4);
  CHECK(family_count(r2, "z2") == 2);
  CHECK(family_count(r2, "fibonacci") == 2);
  CHECK(r2.symbols.size() == 4);  // eps = +-1, phi and 1 - phi
  CHECK(r2.crosscheck.ok());
  CHECK(diff_paper(r2).ok());
  const std::string rep = classification_report(r2);
  CHECK(rep.find("families: 2, symbols: 4") != std::string::npos);
}

TEST_CASE("rank 3") {
  const ClassificationResult r = enumerate_rank3(true);
  CHECK(r.families() == std::vector<std::string>{"z3", "ising", "a1k5half"});
  CHECK(family_count(r, "ising") == 8);
  CHECK(family_count(r, "z3") == 2);
  CHECK(family_count(r, "a1k5half") == 2);
  CHECK(r.crosscheck.ok());
  const Report d = diff_paper(r);
  CHECK_MESSAGE(d.ok(), d.text());
  // eps = -1 in the non-self-dual branch is not a symbol
  bool rejected = false;
  for (const auto& t : r.trace) rejected = rejected || (t.find("d=-1") != std::string::npos && t.find("rejected") != std::string::npos);
  CHECK(rejected);
  const ClassificationResult sd = enumerate_rank3(false);
  CHECK(sd.families() == std::vector<std::string>{"ising", "a1k5half"});
}

TEST_CASE("rank 4 unitary") {
  const ClassificationResult r = enumerate_rank4_unitary();
  CHECK(r.families() ==
        std::vector<std::string>{"z4", "toric", "semion-squared", "fib-semion", "fib-fib", "a1k7half"});
  const std::vector<std::pair<std::string, int>> counts{{"z4", 4},       {"toric", 2},   {"semion-squared", 3},
                                                        {"fib-semion", 4}, {"fib-fib", 3}, {"a1k7half", 2}};
  for (const auto& [f, c] : counts) {
    CAPTURE(f);
    CHECK(family_count(r, f) == c);
  }
  CHECK(r.crosscheck.ok());
  const Report d = diff_paper(r);
  CHECK_MESSAGE(d.ok(), d.text());
  // the a1k7half dims are 1, d^2 - 1, d + 1, d with d the largest root of x^3 - 3x - 1
  for (const auto& s : r.symbols)
    if (s.family == "a1k7half") {
      std::multiset<long> dims;
      for (int i = 0; i < 4; ++i) dims.insert(std::lround(1e6 * to_complex(s.stilde.d(i)).real()));
      const double dd = 2 * std::cos(M_PI / 9);
      CHECK(dims == std::multiset<long>{1000000, std::lround(1e6 * (dd * dd - 1)), std::lround(1e6 * (dd + 1)),
                                        std::lround(1e6 * dd)});
    }
  // fib-fib is a product of two rank-2 theories
  for (const auto& row : family_rows(r))
    if (row.family == "fib-fib") CHECK_FALSE(row.prime);
}

TEST_CASE("classification errors and options") {
  CHECK_THROWS_WITH_AS(classify_rank(5), doctest::Contains("UnsupportedRank"), MtcError);
  CHECK_THROWS_AS(classify_rank(0), MtcError);
  ClassifyOptions o;
  o.max_D = 1.5;
  const ClassificationResult r = classify_rank(2, o);
  for (const auto& s : r.symbols) CHECK(s.D <= 1.5 + 1e-9);
  CHECK(diff_paper(r).ok());
  o = {};
  o.unitary_only = true;
  for (const auto& s : classify_rank(3, o).symbols) CHECK(s.unitary);
}

TEST_CASE("symmetries of the solution sets") {
  for (int rank = 2; rank <= 4; ++rank) {
    ClassifyOptions o;
    o.unitary_only = rank == 4;
    const ClassificationResult r = classify_rank(rank, o);
    for (const auto& s : r.symbols) {
      // complex conjugation maps each twist set to itself
      std::set<std::string> conj_set;
      for (const auto& t : s.twists) {
        TwistVector c;
        for (const auto& x : t) c.push_back(conj(x));
        conj_set.insert(twist_text(c));
      }
      const SMatrixTilde cs(s.stilde.labels(), s.stilde.matrix().unaryExpr([](const Cyclotomic& x) { return conj(x); }));
      const auto cs_sols = solve_twists(cs);
      CHECK(conj_set == twist_set(cs_sols));
      // S -> -S doubles the count of MTC candidates and moves c by 4
      if (!s.unitary) continue;
      for (const auto& t : s.twists) {
        const ModularSymbol p = make_symbol(s.stilde, t, 1), m = make_symbol(s.stilde, t, -1);
        CHECK(canonical_key(p) != canonical_key(m));
        const Rational dc = central_charge(m) - central_charge(p);
        CHECK((dc == Rational(4) || dc == Rational(-4)));
      }
    }
  }
}

TEST_CASE("every emitted symbol passes the core checks") {
  for (int rank = 1; rank <= 4; ++rank) {
    ClassifyOptions o;
    o.unitary_only = rank == 4;
    for (const auto& s : classify_rank(rank, o).symbols) {
      CHECK(s.stilde.validate().ok());
      CHECK(label_distinguishability(s.stilde).ok());
      for (const auto& t : s.twists) {
        const ModularSymbol m = make_symbol(s.stilde, t);
        CHECK(check_modular_symbol(m).ok());
        CHECK(twist_ring_identity(m).ok());
        CHECK(vafa_check(m).ok());
        CHECK(fs_check(m).ok());
      }
    }
  }
}
