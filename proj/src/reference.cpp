#include "mtckit/reference.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace mtc {

namespace {

using C = Cyclotomic;

C z(long n, long k) { return C::zeta(n, ((k % n) + n) % n); }
C eta(long n, long k) { return z(n, k) + z(n, -k); }

SMatrixTilde mat(const LabelSet& L, const std::vector<std::vector<C>>& rows) {
  const int n = L.size();
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return SMatrixTilde(L, m);
}

TwistVector tv(std::initializer_list<C> v) { return TwistVector(v); }

std::vector<ReferenceFamily> build() {
  std::vector<ReferenceFamily> out;
  const C one(1), zero(0), i4 = z(4, 1);
  const C phi = (one + sqrt_integer(5)).scaled(Rational(1) / Rational(2));
  const C phibar = one - phi;
  const LabelSet sd1 = LabelSet::self_dual(1), sd2 = LabelSet::self_dual(2), sd3 = LabelSet::self_dual(3),
                 sd4 = LabelSet::self_dual(4);

  {
    ReferenceFamily f{"trivial", 1, fusion_from_products(sd1, {"1"}, {})};
    f.members = {mat(sd1, {{one}})};
    f.twists = {tv({one})};
    f.count = 1;
    f.galois = "1";
    out.push_back(f);
  }
  {
    ReferenceFamily f{"z2", 2, fusion_from_products(sd2, {"1", "X"}, {{"X", "X", "1"}})};
    for (int e : {1, -1}) f.members.push_back(mat(sd2, {{one, C(e)}, {C(e), C(-1)}}));
    f.twists = {tv({one, i4}), tv({one, -i4})};
    f.count = 2;
    f.galois = "1";
    out.push_back(f);
  }
  {
    ReferenceFamily f{"fibonacci", 2, fusion_from_products(sd2, {"1", "X"}, {{"X", "X", "1+X"}})};
    for (const C& p : {phi, phibar}) f.members.push_back(mat(sd2, {{one, p}, {p, C(-1)}}));
    f.twists = {tv({one, z(5, 2)}), tv({one, z(5, -2)})};
    f.count = 2;
    f.galois = "Z2";
    out.push_back(f);
  }
  {
    const LabelSet L({0, 2, 1});
    ReferenceFamily f{"z3", 3,
                      fusion_from_products(L, {"1", "X", "X*"}, {{"X", "X", "X*"}, {"X", "X*", "1"}, {"X*", "X*", "X"}})};
    for (int e : {1, -1})
      for (long k : {1, 2}) {
        const C w = z(3, k), w2 = z(3, 2 * k), E(e);
        SMatrixTilde s = mat(L, {{one, E, E}, {E, w, w2}, {E, w2, w}});
        if (e == 1)
          f.members.push_back(s);
        else
          f.excluded.push_back({s, "eps = -1: the Verlinde formula gives n_{XX}^{X*} = -1"});
      }
    f.twists = {tv({one, z(3, 1), z(3, 1)}), tv({one, z(3, -1), z(3, -1)})};
    f.count = 2;
    f.galois = "Z2";
    out.push_back(f);
  }
  {
    ReferenceFamily f{"ising", 3,
                      fusion_from_products(sd3, {"1", "X", "Y"}, {{"X", "X", "1+Y"}, {"X", "Y", "X"}, {"Y", "Y", "1"}})};
    for (int s : {1, -1}) {
      const C d = sqrt_integer(2).scaled(Rational(s));
      f.members.push_back(mat(sd3, {{one, d, one}, {d, zero, -d}, {one, -d, one}}));
    }
    for (int k = 0; k < 8; ++k) f.twists.push_back(tv({one, z(16, 2 * k + 1), C(-1)}));
    f.count = 8;
    f.galois = "Z2";
    out.push_back(f);
  }
  {
    ReferenceFamily f{"a1k5half", 3,
                      fusion_from_products(sd3, {"1", "X", "Y"},
                                           {{"X", "X", "1+X+Y"}, {"X", "Y", "X+Y"}, {"Y", "Y", "1+X"}})};
    // d_2 runs over the conjugates of 2cos(pi/7) = -(zeta_7^3 + zeta_7^-3)
    for (long l : {1, 2, 3}) {
      const C d2 = -eta(7, 3 * l);
      const C d1 = d2 / (d2 - one);
      f.members.push_back(mat(sd3, {{one, d1, d2}, {d1, -d2, one}, {d2, one, -d1}}));
    }
    f.twists = {tv({one, z(7, 5), z(7, 1)}), tv({one, z(7, -5), z(7, -1)})};
    f.count = 2;
    f.galois = "Z3";
    out.push_back(f);
  }
  {
    const LabelSet L({0, 1, 3, 2});
    ReferenceFamily f{"z4", 4,
                      fusion_from_products(L, {"1", "Y", "X", "X*"},
                                           {{"X", "X", "Y"},
                                            {"X*", "X*", "Y"},
                                            {"X", "X*", "1"},
                                            {"Y", "Y", "1"},
                                            {"X", "Y", "X*"},
                                            {"X*", "Y", "X"}})};
    for (const C& w : {i4, -i4})
      f.members.push_back(mat(L, {{one, one, one, one},
                                  {one, one, C(-1), C(-1)},
                                  {one, C(-1), w, conj(w)},
                                  {one, C(-1), conj(w), w}}));
    for (long m : {1, 3, 5, 7}) f.twists.push_back(tv({one, C(-1), z(8, m), z(8, m)}));
    f.count = 4;
    f.galois = "Z2";
    out.push_back(f);
  }
  const std::vector<std::string> XYZ{"1", "X", "Y", "Z"};
  const std::vector<Product> klein{{"X", "X", "1"}, {"X", "Y", "Z"}, {"X", "Z", "Y"},
                                   {"Y", "Y", "1"}, {"Y", "Z", "X"}, {"Z", "Z", "1"}};
  const C m1(-1);
  {
    ReferenceFamily f{"toric", 4, fusion_from_products(sd4, XYZ, klein)};
    f.members = {mat(sd4, {{one, one, one, one}, {one, one, m1, m1}, {one, m1, one, m1}, {one, m1, m1, one}})};
    for (int e : {1, -1}) f.twists.push_back(tv({one, m1, C(e), C(e)}));
    f.count = 2;
    f.galois = "1";
    out.push_back(f);
  }
  {
    ReferenceFamily f{"semion-squared", 4, fusion_from_products(sd4, XYZ, klein)};
    f.members = {mat(sd4, {{one, one, one, one}, {one, m1, one, m1}, {one, one, m1, m1}, {one, m1, m1, one}})};
    for (const C& a : {i4, -i4})
      for (const C& b : {i4, -i4}) f.twists.push_back(tv({one, a, b, a * b}));
    f.count = 3;
    f.prime = false;
    f.galois = "1";
    out.push_back(f);
  }
  {
    ReferenceFamily f{"fib-semion", 4,
                      fusion_from_products(sd4, XYZ,
                                           {{"X", "X", "1+X"},
                                            {"X", "Y", "Z"},
                                            {"X", "Z", "Y+Z"},
                                            {"Y", "Y", "1"},
                                            {"Y", "Z", "X"},
                                            {"Z", "Z", "1+X"}})};
    f.members = {mat(sd4, {{one, phi, one, phi}, {phi, m1, phi, m1}, {one, phi, m1, -phi}, {phi, m1, -phi, one}})};
    for (const C& a : {z(5, 2), z(5, -2)})
      for (const C& b : {i4, -i4}) f.twists.push_back(tv({one, a, b, a * b}));
    f.count = 4;
    f.prime = false;
    f.galois = "Z2";
    out.push_back(f);
  }
  {
    ReferenceFamily f{"fib-fib", 4,
                      fusion_from_products(sd4, XYZ,
                                           {{"X", "X", "1+X"},
                                            {"X", "Y", "Z"},
                                            {"X", "Z", "Y+Z"},
                                            {"Y", "Y", "1+Y"},
                                            {"Y", "Z", "X+Z"},
                                            {"Z", "Z", "1+X+Y+Z"}})};
    const C p2 = phi * phi;
    f.members = {mat(sd4, {{one, phi, phi, p2}, {phi, m1, p2, -phi}, {phi, p2, m1, -phi}, {p2, -phi, -phi, one}})};
    for (const C& a : {z(5, 2), z(5, -2)})
      for (const C& b : {z(5, 2), z(5, -2)}) f.twists.push_back(tv({one, a, b, a * b}));
    f.count = 3;
    f.prime = false;
    f.galois = "Z2";
    out.push_back(f);
  }
  {
    ReferenceFamily f{"a1k7half", 4,
                      fusion_from_products(sd4, XYZ,
                                           {{"X", "X", "1+X+Y"},
                                            {"X", "Y", "X+Y+Z"},
                                            {"X", "Z", "Y+Z"},
                                            {"Y", "Y", "1+X+Y+Z"},
                                            {"Y", "Z", "X+Y"},
                                            {"Z", "Z", "1+X"}})};
    // largest root of x^3 - 3x - 1 is 2cos(pi/9)
    const C d = eta(18, 1), a = d * d - one, b = d + one;
    f.members = {mat(sd4, {{one, a, b, d}, {a, zero, -a, a}, {b, -a, d, m1}, {d, a, m1, -b}})};
    f.twists = {tv({one, z(9, 2), z(9, 6), z(9, -6)}), tv({one, z(9, -2), z(9, -6), z(9, 6)})};
    f.count = 2;
    f.galois = "Z3";
    out.push_back(f);
  }
  return out;
}

}  // namespace

FusionRules fusion_from_products(const LabelSet& L, const std::vector<std::string>& names,
                                 const std::vector<Product>& products) {
  const int n = L.size();
  std::map<std::string, int> idx;
  for (int i = 0; i < n; ++i) idx[names.at(i)] = i;
  std::vector<std::vector<std::vector<long>>> t(n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
  for (int j = 0; j < n; ++j) t[0][j][j] = t[j][0][j] = 1;
  for (const auto& p : products) {
    const int a = idx.at(p.a), b = idx.at(p.b);
    std::stringstream ss(p.sum);
    std::string term;
    while (std::getline(ss, term, '+')) {
      const int c = idx.at(term);
      ++t[a][b][c];
      if (a != b) ++t[b][a][c];
    }
  }
  FusionRules F = FusionRules::from_table(L, t);
  const Report r = F.validate();
  if (!r.ok()) throw MtcError("NotAFusionRule", "transcribed products: " + r.first_failure()->name);
  return F;
}

const std::vector<ReferenceFamily>& reference_families() {
  static const std::vector<ReferenceFamily> fams = build();
  return fams;
}

const ReferenceFamily& reference_family(const std::string& name) {
  for (const auto& f : reference_families())
    if (f.name == name) return f;
  throw MtcError("UnknownFamily", name);
}

SMatrixTilde alpha_family_stilde(int alpha) {
  const C one(1), a(alpha), r = sqrt_integer(static_cast<long>(alpha) * alpha + 2);
  const C d2 = a + r, d1 = a * a + one + a * r;
  return mat(LabelSet::self_dual(3), {{one, d1, d2}, {d1, one, -d2}, {d2, -d2, a * a + a * r}});
}

double alpha_family_d2(int alpha) { return alpha + std::sqrt(double(alpha) * alpha + 2); }
double alpha_family_bound() { return std::sqrt(3 + std::sqrt(17.0)); }

SMatrixTilde case1_rejected_candidate() {
  const C one(1), e1 = eta(16, 1), e2 = eta(16, 2), e3 = eta(16, 3);
  const C d1 = one + e1, d2 = one + e1 + e2 + e3, d3 = one + e1 + e2;
  return mat(LabelSet::self_dual(4), {{one, d1, d2, d3}, {d1, d2, -d3, one}, {d2, -d3, C(-1), d1}, {d3, one, d1, -d2}});
}

}  // namespace mtc
