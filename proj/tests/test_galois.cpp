#include "doctest.h"
#include "mtckit/catalog.hpp"
#include "mtckit/galois.hpp"

using namespace mtc;

namespace {

const GaloisElement& nontrivial(const GaloisGroup& G) {
  REQUIRE(G.order() > 1);
  return G.elements[1];
}

}  // namespace

TEST_CASE("fusion field conductor") {
  CHECK(fusion_field_conductor(get("fibonacci").stilde) == 5);
  CHECK(fusion_field_conductor(get("toric").stilde) == 1);
  CHECK(fusion_field_conductor(get("a1k5half").stilde) == 7);
}

TEST_CASE("Galois groups") {
  CHECK(galois_group(get("fibonacci").stilde).structure() == "Z2");
  CHECK(galois_group(get("a1k7half").stilde).structure() == "Z3");
  CHECK(galois_group(get("toric").stilde).structure() == "1");
  CHECK(galois_group(get("ising").stilde).structure() == "Z2");
  CHECK(galois_group(get("z3").stilde).structure() == "Z2");
}

TEST_CASE("group laws: closed, abelian, injective") {
  for (const auto& n : catalog_names()) {
    CAPTURE(n);
    const GaloisGroup G = galois_group(get(n).stilde);
    const int m = G.order();
    CHECK(G.elements[0].perm == std::vector<int>{[&] {
            std::vector<int> id(get(n).rank());
            for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
            return id;
          }()});
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        CHECK(G.table[a][b] == G.table[b][a]);
        // perm of a product is the composition
        const auto& pa = G.elements[a].perm;
        const auto& pb = G.elements[b].perm;
        const auto& pab = G.elements[G.table[a][b]].perm;
        for (size_t k = 0; k < pa.size(); ++k) CHECK(pab[k] == pa[pb[k]]);
      }
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) CHECK(G.elements[a].perm != G.elements[b].perm);
  }
}

TEST_CASE("signed permutation matrix") {
  const SMatrixTilde S = get("a1k5half").stilde;
  const GaloisGroup G = galois_group(S);
  for (const auto& g : G.elements) {
    const int n = S.rank();
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const Cyclotomic want = i == g.sigma(k) ? Cyclotomic(g.raw_eps[i]) : Cyclotomic(0);
        CHECK(g.C(i, k) * g.d_sigma0 == want);
      }
    CHECK(g.eps[0] == 1);
  }
}

TEST_CASE("action identities") {
  for (const auto& n : catalog_names()) {
    CAPTURE(n);
    const SMatrixTilde S = get(n).stilde;
    const Report r = verify_action_identities(galois_group(S), S);
    CHECK_MESSAGE(r.ok(), r.text());
  }
  // Fibonacci, nontrivial element: sigma(s~_00) relation becomes phi/phi
  const SMatrixTilde F = get("fibonacci").stilde;
  const GaloisGroup G = galois_group(F);
  const GaloisElement& g = nontrivial(G);
  CHECK(g.sigma(0) == 1);
  CHECK(sigma(F(0, 0), g.l) == F(g.sigma(0), 0).scaled(Rational(g.raw_eps[g.sigma(0)])) * inverse(g.d_sigma0));
  CHECK(g.d_sigma0 == F(1, 0));
}

TEST_CASE("parity law") {
  const SMatrixTilde F = get("fibonacci").stilde;
  const GaloisGroup G = galois_group(F);
  CHECK(parity_check(G, F).ok());
  const GaloisElement& g = nontrivial(G);
  CHECK(permutation_sign(g.perm) == -1);
  CHECK(g.raw_eps[0] * g.raw_eps[1] == -1);
  // 3-cycle of the rank-3 family
  const SMatrixTilde A = get("a1k5half").stilde;
  const GaloisGroup GA = galois_group(A);
  CHECK(parity_check(GA, A).ok());
  for (const auto& e : GA.elements) CHECK(permutation_sign(e.perm) == 1);
  CMatrix one(1, 1);
  one(0, 0) = Cyclotomic(1);
  const SMatrixTilde T(LabelSet::self_dual(1), one);
  CHECK(parity_check(galois_group(T), T).ok());
}

TEST_CASE("fixed-point twist sums") {
  const ModularSymbol fib = get("fibonacci").symbol();
  const GaloisGroup G = galois_group(fib.stilde);
  const Report r = twist_fixedpoint_sum(fib, nontrivial(G));
  CHECK(r.ok());
  CHECK(r.checks[0].name.find("no fixed points") != std::string::npos);
  CHECK(twist_fixedpoint_sum(fib, G.elements[0]).ok());
  const ModularSymbol a7 = get("a1k7half").symbol();
  for (const auto& g : galois_group(a7.stilde).elements) CHECK(twist_fixedpoint_sum(a7, g).ok());
  // non-self-dual: fixed points are sigma(i) = dual(i)
  const ModularSymbol z3 = get("z3").symbol();
  for (const auto& g : galois_group(z3.stilde).elements) CHECK(twist_fixedpoint_sum(z3, g).ok());
}

TEST_CASE("modular data conductor") {
  CHECK(modular_data_conductor(get("semion").symbol()) == 8);
  CHECK(modular_data_conductor(get("toric").symbol()) == 2);
  CHECK(modular_data_conductor(get("ising").symbol()) == 16);
}

TEST_CASE("Galois suite on every stored theory") {
  for (const auto& n : catalog_names()) {
    CAPTURE(n);
    const Report r = galois_suite(get(n).symbol());
    CHECK_MESSAGE(r.ok(), r.text());
  }
}
