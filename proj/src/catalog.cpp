#include "mtckit/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "mtckit/galois.hpp"

namespace mtc {

// ---------------------------------------------------------------- F entries

hp::Complex FEntry::value(int bits) const {
  hp::Complex c = embed_complex(coeff, bits);
  if (radicand == Cyclotomic(1)) return c;
  hp::PrecisionScope scope(bits);
  hp::Complex r = embed_complex(radicand, bits);
  return c * hp::Complex(boost::multiprecision::sqrt(r.re));
}

std::string FEntry::str() const {
  if (radicand == Cyclotomic(1)) return coeff.str();
  return "(" + coeff.str() + ")*sqrt(" + radicand.str() + ")";
}

// ---------------------------------------------------------------- helpers

namespace {

Cyclotomic z(long n, long k = 1) { return Cyclotomic::zeta(n, k); }
// e^{pi i p / q}
Cyclotomic epi(long p, long q) { return exp2pii(Rational(mpz_class(p), mpz_class(2 * q))); }

Cyclotomic golden() { return Cyclotomic(1) + z(5) + z(5, 4); }
Cyclotomic sqrt2() { return z(8) - z(8, 3); }
Cyclotomic d7() { return -(z(7, 3) + z(7, 4)); }   // 2 cos(pi/7)
Cyclotomic d9() { return z(18) + z(18, 17); }      // 2 cos(pi/9)

struct Spec {
  std::string name;
  std::vector<std::string> names;
  std::vector<int> dual;
  // nontrivial products a*b -> list of c (a <= b is enough; symmetry filled in)
  std::vector<std::tuple<int, int, std::vector<int>>> products;
  std::vector<std::vector<Cyclotomic>> s;
  TwistVector theta;
  Rational c;
  std::vector<std::tuple<int, int, int, Cyclotomic>> R;
  bool has_F = true;
  std::vector<std::tuple<int, int, int, int, std::vector<std::vector<FEntry>>>> F;
  std::vector<std::string> realizations;
};

FusionRules fusion_from_products(const LabelSet& L, const std::vector<std::tuple<int, int, std::vector<int>>>& prods) {
  const int n = L.size();
  std::vector<std::vector<std::vector<long>>> t(n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
  for (int j = 0; j < n; ++j) {
    t[0][j][j] = 1;
    t[j][0][j] = 1;
  }
  for (const auto& [a, b, cs] : prods)
    for (int c : cs) {
      t[a][b][c] = 1;
      t[b][a][c] = 1;
    }
  return FusionRules::from_table(L, t);
}

std::map<RKey, Cyclotomic> complete_r(const FusionRules& N, std::map<RKey, Cyclotomic> R) {
  const int n = N.rank();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (N.ni(a, b, c) != 0 && (a == 0 || b == 0) && !R.count({a, b, c})) R[{a, b, c}] = Cyclotomic(1);
  return R;
}

AnyonTheory build(const Spec& sp) {
  LabelSet L(sp.dual);
  const int n = L.size();
  FusionRules N = fusion_from_products(L, sp.products);
  CMatrix s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i, j) = sp.s[i][j];
  AnyonTheory t{sp.name, sp.names, N, SMatrixTilde(L, s), 1, sp.theta, sp.c, Cyclotomic(1), {}, std::nullopt,
                sp.realizations};
  std::map<RKey, Cyclotomic> R;
  for (const auto& [a, b, c, v] : sp.R) R[{a, b, c}] = v;
  t.R = complete_r(N, R);
  if (sp.has_F) {
    std::map<FKey, FMatrix> listed;
    for (const auto& [a, b, c, d, m] : sp.F)
      listed[{a, b, c, d}] = FMatrix{f_left(N, a, b, c, d), f_right(N, a, b, c, d), m};
    t.F = complete_fsymbols(N, listed);
  }
  t.D = total_dimension(t.symbol());
  return t;
}

FEntry fe(const Cyclotomic& c, const Cyclotomic& r = Cyclotomic(1)) { return FEntry{c, r}; }

Spec semion() {
  return {"semion", {"1", "s"}, {0, 1}, {{1, 1, {0}}}, {{1, 1}, {1, -1}}, {1, z(4)}, Rational(1),
          {{1, 1, 0, z(4)}}, true, {{1, 1, 1, 1, {{fe(-1)}}}}, {"(A1,1)", "(E7,1)"}};
}

Spec fibonacci() {
  const Cyclotomic p = golden(), ip = p - Cyclotomic(1);
  return {"fibonacci", {"1", "tau"}, {0, 1}, {{1, 1, {0, 1}}}, {{1, p}, {p, -1}}, {1, z(5, 2)}, Rational(14, 5),
          {{1, 1, 0, epi(-4, 5)}, {1, 1, 1, epi(3, 5)}}, true,
          {{1, 1, 1, 1, {{fe(ip), fe(1, ip)}, {fe(1, ip), fe(-ip)}}}},
          {"(A1,3)_1/2", "(G2,1)", "complex conjugate of (F4,1)"}};
}

Spec z3() {
  const Cyclotomic w = z(3), w2 = z(3, 2);
  return {"z3", {"1", "w", "w*"}, {0, 2, 1},
          {{1, 1, {2}}, {1, 2, {0}}, {2, 2, {1}}},
          {{1, 1, 1}, {1, w, w2}, {1, w2, w}}, {1, w, w}, Rational(2),
          {{1, 2, 0, epi(-2, 3)}, {2, 1, 0, epi(-2, 3)}, {1, 1, 2, epi(-4, 3)}, {2, 2, 1, epi(-4, 3)}}, true, {},
          {"(A2,1)", "(E6,1)"}};
}

Spec ising_like(bool su2) {
  const Cyclotomic r2 = sqrt2(), h = sqrt2().scaled(Rational(1, 2));  // 1/sqrt2
  const Cyclotomic sg = su2 ? Cyclotomic(-1) : Cyclotomic(1);
  Spec sp{su2 ? "a1k2" : "ising", {"1", "sigma", "psi"}, {0, 1, 2},
          {{1, 1, {0, 2}}, {1, 2, {1}}, {2, 2, {0}}},
          {{1, r2, 1}, {r2, 0, -r2}, {1, -r2, 1}},
          {1, su2 ? epi(3, 8) : epi(1, 8), -1}, su2 ? Rational(3, 2) : Rational(1, 2), {}, true,
          {{1, 1, 1, 1, {{fe(sg * h), fe(sg * h)}, {fe(sg * h), fe(-(sg * h))}}},
           {2, 1, 2, 1, {{fe(-1)}}},
           {1, 2, 1, 2, {{fe(-1)}}}},
          {su2 ? "(A1,2)" : "complex conjugate of (E8,2)"}};
  if (su2)
    sp.R = {{1, 1, 0, -epi(-3, 8)}, {2, 2, 0, -1}, {2, 1, 1, z(4)}, {1, 2, 1, z(4)}, {1, 1, 2, epi(1, 8)}};
  else
    sp.R = {{1, 1, 0, epi(-1, 8)}, {2, 2, 0, -1}, {2, 1, 1, -z(4)}, {1, 2, 1, -z(4)}, {1, 1, 2, epi(3, 8)}};
  return sp;
}

Spec a1k5half() {
  const Cyclotomic d = d7(), d2m = d7() * d7() - Cyclotomic(1);
  return {"a1k5half", {"1", "alpha", "beta"}, {0, 1, 2},
          {{1, 1, {0, 2}}, {1, 2, {1, 2}}, {2, 2, {0, 1, 2}}},
          {{1, d, d2m}, {d, -d2m, 1}, {d2m, 1, -d}}, {1, epi(2, 7), epi(10, 7)}, Rational(48, 7),
          {{1, 1, 0, epi(-2, 7)}, {2, 2, 0, epi(-10, 7)}, {2, 2, 1, epi(-2, 7)},
           {1, 2, 1, epi(9, 7)}, {2, 1, 1, epi(9, 7)}, {2, 2, 2, epi(-5, 7)},
           {1, 2, 2, epi(6, 7)}, {2, 1, 2, epi(6, 7)},
           // printed as e^{-4 pi i/7}; the trace identity and the TL generator both force the sign flip
           {1, 1, 2, epi(3, 7)}},
          false, {}, {"(A1,5)_1/2"}};
}

Spec z4() {
  const Cyclotomic i = z(4);
  return {"z4", {"1", "eps", "sigma", "sigma*"}, {0, 1, 3, 2},
          {{1, 1, {0}}, {2, 3, {0}}, {2, 2, {1}}, {3, 3, {1}}, {1, 2, {3}}, {1, 3, {2}}},
          {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, -i, i}, {1, -1, i, -i}}, {1, -1, epi(1, 4), epi(1, 4)}, Rational(1),
          {{1, 1, 0, -1}, {2, 2, 1, epi(1, 4)}, {3, 3, 1, epi(1, 4)}, {2, 3, 0, epi(-1, 4)}, {3, 2, 0, epi(-1, 4)},
           {2, 1, 3, -i}, {1, 2, 3, -i}, {3, 1, 2, -i}, {1, 3, 2, -i}},
          true,
          {{2, 2, 2, 3, {{fe(-1)}}}, {3, 3, 3, 2, {{fe(-1)}}}, {1, 2, 1, 2, {{fe(-1)}}},
           {1, 3, 1, 3, {{fe(-1)}}}, {2, 1, 3, 1, {{fe(-1)}}}, {3, 1, 2, 1, {{fe(-1)}}}},
          {"(A3,1)", "(D9,1)"}};
}

Spec z2z2(bool d4) {
  Spec sp{d4 ? "d4l1" : "toric", {"1", "e", "m", "eps"}, {0, 1, 2, 3},
          {{1, 1, {0}}, {2, 2, {0}}, {3, 3, {0}}, {1, 2, {3}}, {1, 3, {2}}, {2, 3, {1}}},
          {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}},
          d4 ? TwistVector{1, -1, -1, -1} : TwistVector{1, 1, 1, -1}, d4 ? Rational(4) : Rational(0), {}, true, {},
          d4 ? std::vector<std::string>{"(D4,1)"} : std::vector<std::string>{"(D8,1)", "D(Z2)"}};
  const Cyclotomic x = d4 ? Cyclotomic(-1) : Cyclotomic(1);
  sp.R = {{3, 3, 0, -1}, {1, 2, 3, x}, {2, 1, 3, -x}, {1, 1, 0, x}, {2, 2, 0, x},
          {3, 2, 1, 1}, {2, 3, 1, -1}, {1, 3, 2, 1}, {3, 1, 2, -1}};
  return sp;
}

Spec a1k7half() {
  const Cyclotomic d = d9(), d2m = d9() * d9() - Cyclotomic(1), dp = d9() + Cyclotomic(1);
  // labels 1, alpha, omega, rho
  return {"a1k7half", {"1", "alpha", "omega", "rho"}, {0, 1, 2, 3},
          {{1, 1, {0, 2}}, {1, 2, {1, 3}}, {1, 3, {2, 3}}, {2, 2, {0, 2, 3}}, {2, 3, {1, 2, 3}}, {3, 3, {0, 1, 2, 3}}},
          {{1, d, d2m, dp}, {d, -dp, d2m, -1}, {d2m, d2m, 0, -d2m}, {dp, -1, -d2m, d}},
          {1, epi(2, 3), epi(4, 9), epi(4, 3)}, Rational(10, 3),
          {{1, 1, 0, epi(-2, 3)}, {2, 2, 0, epi(-4, 9)}, {3, 3, 0, epi(-4, 3)},
           {1, 2, 1, epi(7, 9)}, {2, 1, 1, epi(7, 9)}, {2, 3, 1, epi(4, 9)}, {3, 2, 1, epi(4, 9)}, {3, 3, 1, -1},
           {1, 3, 2, epi(2, 9)}, {3, 1, 2, epi(2, 9)}, {2, 3, 2, epi(-2, 3)}, {3, 2, 2, epi(-2, 3)},
           {1, 1, 2, epi(5, 9)}, {3, 3, 2, epi(-1, 9)}, {2, 2, 2, epi(7, 9)},
           {1, 2, 3, epi(-8, 9)}, {2, 1, 3, epi(-8, 9)}, {1, 3, 3, epi(-1, 3)}, {3, 1, 3, epi(-1, 3)},
           {3, 2, 3, epi(7, 9)}, {2, 3, 3, epi(7, 9)}, {2, 2, 3, epi(2, 9)}, {3, 3, 3, epi(-2, 3)}},
          false, {}, {"(A1,7)_1/2", "complex conjugate of (G2,2)"}};
}

}  // namespace

// ---------------------------------------------------------------- theory access

const Cyclotomic& AnyonTheory::Rsym(int a, int b, int c) const {
  auto it = R.find({a, b, c});
  if (it == R.end())
    throw MtcError("UnknownChannel", name + ": no R^{" + std::to_string(a) + "," + std::to_string(b) + "}_" +
                                         std::to_string(c));
  return it->second;
}

const FMatrix& AnyonTheory::Fsym(int a, int b, int c, int d) const {
  if (!F) throw MtcError("NoFSymbols", name + " ships without F-matrices");
  auto it = F->find({a, b, c, d});
  if (it == F->end()) throw MtcError("UnknownChannel", name + ": F not admissible");
  return it->second;
}

int AnyonTheory::label(const std::string& nm) const {
  for (size_t i = 0; i < label_names.size(); ++i)
    if (label_names[i] == nm) return static_cast<int>(i);
  throw MtcError("UnknownLabel", nm);
}

std::vector<int> f_left(const FusionRules& N, int a, int b, int c, int d) {
  std::vector<int> out;
  for (int m = 0; m < N.rank(); ++m)
    if (N.ni(a, b, m) && N.ni(m, c, d)) out.push_back(m);
  return out;
}

std::vector<int> f_right(const FusionRules& N, int a, int b, int c, int d) {
  std::vector<int> out;
  for (int m = 0; m < N.rank(); ++m)
    if (N.ni(b, c, m) && N.ni(a, m, d)) out.push_back(m);
  return out;
}

std::map<FKey, FMatrix> complete_fsymbols(const FusionRules& N, std::map<FKey, FMatrix> listed) {
  const int n = N.rank();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          auto L = f_left(N, a, b, c, d);
          if (L.empty() || listed.count({a, b, c, d})) continue;
          auto Rr = f_right(N, a, b, c, d);
          if (L.size() != Rr.size()) throw std::logic_error("complete_fsymbols: channel counts differ");
          FMatrix f{L, Rr, {}};
          f.m.assign(L.size(), std::vector<FEntry>(L.size(), FEntry{}));
          for (size_t i = 0; i < L.size(); ++i) f.m[i][i] = FEntry{Cyclotomic(1)};
          listed[{a, b, c, d}] = std::move(f);
        }
  return listed;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"semion", "fibonacci", "z3",   "ising", "a1k2",
                                              "a1k5half", "z4",      "toric", "d4l1", "a1k7half"};
  return names;
}

AnyonTheory trivial_theory() {
  LabelSet L = LabelSet::self_dual(1);
  CMatrix s(1, 1);
  s(0, 0) = Cyclotomic(1);
  std::map<FKey, FMatrix> F;
  FusionRules N = FusionRules::from_table(L, {{{1}}});
  AnyonTheory t{"trivial", {"1"}, N, SMatrixTilde(L, s), 1, {Cyclotomic(1)}, Rational(0), Cyclotomic(1),
                complete_r(N, {}), complete_fsymbols(N, {}), {"Vect_C"}};
  return t;
}

AnyonTheory get(const std::string& name) {
  if (name == "trivial") return trivial_theory();
  if (name == "semion") return build(semion());
  if (name == "fibonacci") return build(fibonacci());
  if (name == "z3") return build(z3());
  if (name == "ising") return build(ising_like(false));
  if (name == "a1k2") return build(ising_like(true));
  if (name == "a1k5half") return build(a1k5half());
  if (name == "z4") return build(z4());
  if (name == "toric") return build(z2z2(false));
  if (name == "d4l1") return build(z2z2(true));
  if (name == "a1k7half") return build(a1k7half());
  throw MtcError("UnknownTheory", name);
}

// ---------------------------------------------------------------- symmetries

namespace {
Rational mod8(const Rational& c) { return frac(c / Rational(8)) * Rational(8); }
}  // namespace

AnyonTheory conjugate(const AnyonTheory& t) {
  AnyonTheory r = t;
  r.name = "conj(" + t.name + ")";
  r.stilde = SMatrixTilde(t.stilde.labels(), conj(t.stilde.matrix()));
  for (auto& th : r.twists) th = conj(th);
  for (auto& [k, v] : r.R) v = conj(v);
  if (r.F)
    for (auto& [k, f] : *r.F)
      for (auto& row : f.m)
        for (auto& e : row) e.coeff = conj(e.coeff);
  r.central_charge = mod8(-t.central_charge);
  return r;
}

AnyonTheory negate_s(const AnyonTheory& t) {
  AnyonTheory r = t;
  r.name = "neg(" + t.name + ")";
  r.s00_sign = -t.s00_sign;
  r.central_charge = mod8(t.central_charge + Rational(4));
  return r;
}

AnyonTheory product(const AnyonTheory& a, const AnyonTheory& b) {
  const int na = a.rank(), nb = b.rank(), n = na * nb;
  auto idx = [nb](int i, int j) { return i * nb + j; };
  std::vector<int> dual(n);
  std::vector<std::string> names(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      dual[idx(i, j)] = idx(a.fusion.labels().dual(i), b.fusion.labels().dual(j));
      names[idx(i, j)] = (i == 0 && j == 0) ? "1" : "(" + a.label_names[i] + "," + b.label_names[j] + ")";
    }
  LabelSet L(dual);
  std::vector<QMatrix> mats;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      QMatrix m(n, n);
      for (int p = 0; p < na; ++p)
        for (int q = 0; q < nb; ++q)
          for (int r = 0; r < na; ++r)
            for (int s = 0; s < nb; ++s) m(idx(p, q), idx(r, s)) = a.fusion.n(i, p, r) * b.fusion.n(j, q, s);
      mats.push_back(std::move(m));
    }
  FusionRules N(L, std::move(mats));
  TwistVector th(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) th[idx(i, j)] = a.twists[i] * b.twists[j];
  AnyonTheory t{a.name + "*" + b.name, names, N, SMatrixTilde(L, kron(a.stilde.matrix(), b.stilde.matrix())),
                a.s00_sign * b.s00_sign, th, mod8(a.central_charge + b.central_charge), a.D * b.D, {}, std::nullopt,
                {}};
  for (const auto& [ka, va] : a.R)
    for (const auto& [kb, vb] : b.R) t.R[{idx(ka[0], kb[0]), idx(ka[1], kb[1]), idx(ka[2], kb[2])}] = va * vb;
  if (a.F && b.F) {
    std::map<FKey, FMatrix> F;
    for (const auto& [ka, fa] : *a.F)
      for (const auto& [kb, fb] : *b.F) {
        FMatrix f;
        for (int m1 : fa.left)
          for (int m2 : fb.left) f.left.push_back(idx(m1, m2));
        for (int m1 : fa.right)
          for (int m2 : fb.right) f.right.push_back(idx(m1, m2));
        const size_t sa = fa.left.size(), sb = fb.left.size();
        f.m.assign(sa * sb, std::vector<FEntry>(sa * sb));
        for (size_t i1 = 0; i1 < sa; ++i1)
          for (size_t i2 = 0; i2 < sb; ++i2)
            for (size_t j1 = 0; j1 < sa; ++j1)
              for (size_t j2 = 0; j2 < sb; ++j2) f.m[i1 * sb + i2][j1 * sb + j2] = fa.m[i1][j1] * fb.m[i2][j2];
        F[{idx(ka[0], kb[0]), idx(ka[1], kb[1]), idx(ka[2], kb[2]), idx(ka[3], kb[3])}] = std::move(f);
      }
    t.F = std::move(F);
  }
  return t;
}

AnyonTheory derive_theory(const std::string& expr) {
  std::string s;
  for (char ch : expr)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  size_t pos = 0;
  std::function<AnyonTheory()> parse_expr, parse_term;
  parse_term = [&]() -> AnyonTheory {
    for (const char* fn : {"conj(", "neg("}) {
      const std::string f = fn;
      if (s.compare(pos, f.size(), f) == 0) {
        pos += f.size();
        AnyonTheory inner = parse_expr();
        if (pos >= s.size() || s[pos] != ')') throw MtcError("UnknownTheory", "unbalanced parentheses in " + expr);
        ++pos;
        return f == "conj(" ? conjugate(inner) : negate_s(inner);
      }
    }
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (start == pos) throw MtcError("UnknownTheory", "cannot parse " + expr);
    return get(s.substr(start, pos - start));
  };
  parse_expr = [&]() -> AnyonTheory {
    AnyonTheory t = parse_term();
    while (pos < s.size() && s[pos] == '*') {
      ++pos;
      t = product(t, parse_term());
    }
    return t;
  };
  AnyonTheory t = parse_expr();
  if (pos != s.size()) throw MtcError("UnknownTheory", "trailing input in " + expr);
  return t;
}

// ---------------------------------------------------------------- canonical keys

namespace {

std::string num_key(std::complex<double> z) {
  char buf[64];
  double re = std::abs(z.real()) < 5e-9 ? 0.0 : z.real();
  double im = std::abs(z.imag()) < 5e-9 ? 0.0 : z.imag();
  std::snprintf(buf, sizeof buf, "%.7f,%.7f;", re, im);
  return buf;
}

template <typename F>
void for_each_relabel(const LabelSet& L, F&& f) {
  const int n = L.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  if (n > 8) {
    f(p);
    return;
  }
  do f(p);
  while (std::next_permutation(p.begin() + 1, p.end()));
}

// Duality in the relabeled order, so keys agree across label layouts.
std::string dual_key(const LabelSet& L, const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  std::string k;
  for (size_t i = 0; i < p.size(); ++i) k += std::to_string(inv[L.dual(p[i])]) + ",";
  return k + "|";
}

}  // namespace

std::string canonical_key(const ModularSymbol& sym, bool with_sign) {
  const Eigen::MatrixXcd s = to_complex(sym.stilde.matrix());
  std::vector<std::complex<double>> th;
  for (const auto& t : sym.twists) th.push_back(to_complex(t));
  std::string best;
  for_each_relabel(sym.stilde.labels(), [&](const std::vector<int>& p) {
    std::string k = dual_key(sym.stilde.labels(), p);
    for (size_t i = 0; i < p.size(); ++i) k += num_key(th[p[i]]);
    k += "|";
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = 0; j < p.size(); ++j) k += num_key(s(p[i], p[j]));
    if (best.empty() || k < best) best = k;
  });
  if (with_sign) best += sym.s00_sign > 0 ? "+" : "-";
  return best;
}

std::string fusion_key(const FusionRules& F) {
  std::string best;
  for_each_relabel(F.labels(), [&](const std::vector<int>& p) {
    std::string k;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = 0; j < p.size(); ++j)
        for (size_t l = 0; l < p.size(); ++l) k += std::to_string(F.ni(p[i], p[j], p[l])) + ",";
    if (best.empty() || k < best) best = k;
  });
  return best;
}

// ---------------------------------------------------------------- primality

namespace {

struct Sub {
  ModularSymbol sym;
};

ModularSymbol restrict_symbol(const ModularSymbol& s, const std::vector<int>& labels, int sign) {
  const int m = static_cast<int>(labels.size());
  std::vector<int> pos(s.rank(), -1);
  for (int i = 0; i < m; ++i) pos[labels[i]] = i;
  std::vector<int> dual(m);
  for (int i = 0; i < m; ++i) dual[i] = pos[s.stilde.labels().dual(labels[i])];
  LabelSet L(dual);
  std::vector<std::vector<std::vector<long>>> t(m, std::vector<std::vector<long>>(m, std::vector<long>(m)));
  CMatrix st(m, m);
  TwistVector th(m);
  for (int i = 0; i < m; ++i) {
    th[i] = s.twists[labels[i]];
    for (int j = 0; j < m; ++j) {
      st(i, j) = s.stilde(labels[i], labels[j]);
      for (int k = 0; k < m; ++k) t[i][j][k] = s.fusion.ni(labels[i], labels[j], labels[k]);
    }
  }
  return ModularSymbol{FusionRules::from_table(L, t), SMatrixTilde(L, st), sign, th};
}

ModularSymbol product_symbol(const ModularSymbol& a, const ModularSymbol& b) {
  AnyonTheory ta{"a", std::vector<std::string>(a.rank(), "x"), a.fusion, a.stilde, a.s00_sign, a.twists, Rational(0),
                 Cyclotomic(1), {}, std::nullopt, {}};
  AnyonTheory tb{"b", std::vector<std::string>(b.rank(), "y"), b.fusion, b.stilde, b.s00_sign, b.twists, Rational(0),
                 Cyclotomic(1), {}, std::nullopt, {}};
  return product(ta, tb).symbol();
}

std::string name_symbol(const ModularSymbol& s) {
  const std::string key = canonical_key(s, false);
  std::vector<AnyonTheory> pool;
  for (const auto& nm : catalog_names()) {
    AnyonTheory t = get(nm);
    pool.push_back(t);
    pool.push_back(conjugate(t));
  }
  for (const auto& t : pool)
    if (canonical_key(t.symbol(), false) == key) return t.name;
  return "rank-" + std::to_string(s.rank()) + " subcategory";
}

}  // namespace

Primality primality(const AnyonTheory& t) {
  Primality out;
  const int n = t.rank();
  const ModularSymbol sym = t.symbol();
  if (n > 16) throw MtcError("UnsupportedRank", "primality search limited to rank 16");
  for (unsigned mask = 1; mask < (1u << n); mask += 2) {  // always contains label 0
    if (mask == (1u << n) - 1) continue;
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(i);
    if (sub.size() == 1) continue;
    bool closed = true;
    for (int i : sub) {
      if (!(mask >> t.fusion.labels().dual(i) & 1)) closed = false;
      for (int j : sub)
        for (int k = 0; k < n && closed; ++k)
          if (t.fusion.ni(i, j, k) && !(mask >> k & 1)) closed = false;
    }
    if (!closed) continue;
    Eigen::MatrixXcd m(sub.size(), sub.size());
    for (size_t i = 0; i < sub.size(); ++i)
      for (size_t j = 0; j < sub.size(); ++j) m(i, j) = to_complex(t.stilde(sub[i], sub[j]));
    if (Eigen::FullPivLU<Eigen::MatrixXcd>(m).rank() < static_cast<Eigen::Index>(sub.size())) continue;
    out.modular_subsets.push_back(sub);
  }
  out.prime = out.modular_subsets.empty();
  if (out.prime) return out;
  // Factor along the first modular subcategory and its centralizer.
  const auto& A = out.modular_subsets.front();
  std::vector<int> B;
  for (int j = 0; j < n; ++j) {
    bool central = true;
    for (int i : A) central = central && (t.stilde(i, j) == t.stilde(i, 0) * t.stilde(0, j));
    if (central) B.push_back(j);
  }
  ModularSymbol sa = restrict_symbol(sym, A, t.s00_sign), sb = restrict_symbol(sym, B, 1);
  out.factors = name_symbol(sa) + " x " + name_symbol(sb);
  out.product_reconstructs =
      static_cast<int>(A.size() * B.size()) == n && canonical_key(product_symbol(sa, sb)) == canonical_key(sym);
  return out;
}

// ---------------------------------------------------------------- congruence relations

namespace {

struct Relation {
  std::string text;
  std::vector<std::pair<char, int>> word;  // ('T', k) or ('S', 1), applied left to right as a product
  int power = 1;
};

HMatrix pow_word(const std::vector<std::pair<char, int>>& w, const HMatrix& S, const HMatrix& T, int power) {
  const auto n = S.rows();
  HMatrix id = HMatrix::Identity(n, n);
  HMatrix m = id;
  for (const auto& [g, k] : w)
    for (int i = 0; i < k; ++i) m = mul(m, g == 'S' ? S : T);
  HMatrix out = id;
  for (int i = 0; i < power; ++i) out = mul(out, m);
  return out;
}

hp::Real proj_residual(const HMatrix& a, const HMatrix& b) {
  // smallest |a - lambda b| with lambda read off the largest entry of b
  Eigen::Index bi = 0, bj = 0;
  hp::Real best = 0;
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      if (hp::abs(b(i, j)) > best) {
        best = hp::abs(b(i, j));
        bi = i;
        bj = j;
      }
  hp::Complex lam = a(bi, bj) / b(bi, bj);
  hp::Real r = boost::multiprecision::abs(hp::abs(lam) - 1);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r = std::max(r, hp::abs(a(i, j) - lam * b(i, j)));
  return r;
}

std::vector<Relation> table_relations(const std::string& base) {
  using W = std::vector<std::pair<char, int>>;
  if (base == "trivial") return {{"S = T = 1", {{'T', 1}}, 1}, {"S = 1", {{'S', 1}}, 1}};
  if (base == "semion") return {{"T^4 = I", {{'T', 4}}, 1}};
  if (base == "fibonacci") return {{"T^5 = I", {{'T', 5}}, 1}};
  if (base == "z3") return {{"T^3 = I", {{'T', 3}}, 1}};
  if (base == "a1k2" || base == "ising")
    return {{"T^16 = I", {{'T', 16}}, 1}, {"(T^2 S T)^3 = I", W{{'T', 2}, {'S', 1}, {'T', 1}}, 3}};
  if (base == "a1k5half")
    return {{"T^7 = I", {{'T', 7}}, 1}, {"(T^4 S T^4 S)^2 = I", W{{'T', 4}, {'S', 1}, {'T', 4}, {'S', 1}}, 2}};
  if (base == "z4") return {{"T^8 = I", {{'T', 8}}, 1}, {"(T^2 S T)^3 = I", W{{'T', 2}, {'S', 1}, {'T', 1}}, 3}};
  if (base == "toric") return {{"T^2 = I", {{'T', 2}}, 1}};
  if (base == "a1k7half")
    return {{"T^9 = I", {{'T', 9}}, 1}, {"(T^4 S T^5 S)^2 = I", W{{'T', 4}, {'S', 1}, {'T', 5}, {'S', 1}}, 2}};
  return {};
}

}  // namespace

Report congruence_relations(const AnyonTheory& t, int bits) {
  Report r;
  r.subject = "congruence relations: " + t.name;
  hp::PrecisionScope scope(bits);
  const int n = t.rank();
  HMatrix S = embed(t.stilde.matrix(), bits);
  hp::Complex D = embed_complex(t.D, bits);
  hp::Complex scale = hp::Complex(t.s00_sign) / D;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) S(i, j) = S(i, j) * scale;
  HMatrix T = HMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) T(i, i) = embed_complex(t.twists[i], bits);
  const HMatrix I = HMatrix::Identity(n, n);
  const hp::Real tol("1e-20");
  auto add = [&](const std::string& name, const HMatrix& a, const HMatrix& b) {
    hp::Real res = proj_residual(a, b);
    r.add(name, res < tol, "residual " + hp::to_string(res, 3));
  };
  const std::string base = t.name;
  for (const auto& rel : table_relations(base)) add(rel.text, pow_word(rel.word, S, T, rel.power), I);
  const HMatrix S2 = mul(S, S);
  add("(ST)^3 ~ S^2", pow_word({{'S', 1}, {'T', 1}}, S, T, 3), S2);
  add("S^4 = I", mul(S2, S2), I);
  return r;
}

// ---------------------------------------------------------------- Temperley-Lieb

TLData tl_generator(int k) {
  if (k % 2 == 0) throw MtcError("EvenLevel", "k = " + std::to_string(k));
  if (k < 1) throw MtcError("EvenLevel", "k must be a positive odd integer");
  TLData out;
  out.k = k;
  // A = i e^{-+2 pi i/(4(k+2))}
  const long M = 4 * (k + 2);
  out.A = (k % 4 == 1) ? z(4) * z(M, M - 1) : z(4) * z(M, 1);
  const ElementKind ak = classify_element(out.A);
  auto Apow = [&](long e) {
    const long ord = ak.order;
    return Cyclotomic::zeta(ord, ((e * ak.exponent) % ord + ord) % ord);
  };
  for (int a = 0; a <= k - 1; a += 2) out.labels.push_back(a);
  const int n = static_cast<int>(out.labels.size());
  const Cyclotomic q = out.A * out.A, qi = conj(q);
  const Cyclotomic den_inv = inverse(q - qi);
  auto qint = [&](long m) {
    Cyclotomic qm(1), qmi(1);
    for (long i = 0; i < m; ++i) {
      qm *= q;
      qmi *= qi;
    }
    return (qm - qmi) * den_inv;
  };
  for (int a : out.labels) {
    out.dims.push_back(qint(a + 1));
    Cyclotomic th = Apow(static_cast<long>(a) * (a + 2));
    out.twists.push_back(a % 2 ? -th : th);
  }
  out.fusion.assign(n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        int a = out.labels[i], b = out.labels[j], c = out.labels[l];
        if (std::abs(a - b) <= c && c <= std::min(a + b, 2 * k - a - b) && (a + b + c) % 2 == 0) {
          out.fusion[i][j][l] = 1;
          long e = -(static_cast<long>(a) * (a + 2) + static_cast<long>(b) * (b + 2) - static_cast<long>(c) * (c + 2));
          // exponent is even: labels are even
          Cyclotomic v = Apow(e / 2);
          if (((a + b - c) / 2) % 2) v = -v;
          out.R[{i, j, l}] = v;
        }
      }
  out.stilde = CMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cyclotomic acc(0);
      for (int l = 0; l < n; ++l)
        if (out.fusion[i][j][l]) acc += out.dims[l] * out.twists[l];
      out.stilde(i, j) = acc * conj(out.twists[i] * out.twists[j]);
    }
  const Rational frac3k(3 * k, k + 2);
  out.central_charge_raw = (k % 4 == 1) ? Rational(1) - frac3k : Rational(1) + frac3k;
  out.central_charge = frac(out.central_charge_raw / Rational(8)) * Rational(8);
  return out;
}

std::vector<int> tl_label_map(int k) {
  // catalog index -> TL position; from the printed correspondences
  if (k == 5) return {0, 2, 1};     // 1, alpha = 4, beta = 2
  if (k == 7) return {0, 3, 1, 2};  // 1, alpha = 6, omega = 2, rho = 4
  throw MtcError("UnknownTheory", "no stored theory for level " + std::to_string(k));
}

Report tl_crosscheck(int k) {
  Report r;
  r.subject = "Temperley-Lieb level " + std::to_string(k);
  const TLData tl = tl_generator(k);
  const AnyonTheory t = get(k == 5 ? "a1k5half" : "a1k7half");
  const auto p = tl_label_map(k);
  const int n = t.rank();
  bool th = true, dims = true, st = true, fus = true, rr = true;
  std::string bad;
  for (int i = 0; i < n; ++i) {
    th = th && tl.twists[p[i]] == t.twists[i];
    dims = dims && tl.dims[p[i]] == t.stilde.d(i);
    for (int j = 0; j < n; ++j) {
      st = st && tl.stilde(p[i], p[j]) == t.stilde(i, j);
      for (int l = 0; l < n; ++l) {
        fus = fus && tl.fusion[p[i]][p[j]][p[l]] == t.fusion.ni(i, j, l);
        if (!t.fusion.ni(i, j, l)) continue;
        auto it = tl.R.find({p[i], p[j], p[l]});
        if (it == tl.R.end() || it->second != t.Rsym(i, j, l)) {
          rr = false;
          if (bad.empty()) bad = t.label_names[i] + "," + t.label_names[j] + "->" + t.label_names[l];
        }
      }
    }
  }
  r.add("A = " + tl.A.str(), true);
  r.add("fusion", fus);
  r.add("dims [a+1]_q", dims);
  r.add("twists (-1)^a A^{a(a+2)}", th);
  r.add("R-table", rr, bad);
  r.add("S~ from the twist ring identity", st);
  const std::string branch = (k % 4 == 1) ? "1 - 3k/(k+2)" : "1 + 3k/(k+2)";
  r.add("central charge " + branch + " = " + tl.central_charge_raw.str() + " = " + tl.central_charge.str() + " mod 8",
        tl.central_charge == t.central_charge, "stored " + t.central_charge.str());
  Rational computed = central_charge(t.symbol());
  r.add("central charge from Gauss sum", computed == tl.central_charge, computed.str());
  return r;
}

// ---------------------------------------------------------------- counting

namespace {

struct Cell {
  std::string name;
  int rank;
  int expected;
  std::string seed;  // expression whose fusion rule identifies the cell
};

const std::vector<Cell>& table1() {
  static const std::vector<Cell> cells{
      {"trivial", 1, 2, "trivial"},         {"Z2", 2, 4, "semion"},
      {"(A1,3)_1/2", 2, 4, "fibonacci"},    {"Z3", 3, 4, "z3"},
      {"(A1,2)", 3, 16, "ising"},           {"(A1,5)_1/2", 3, 4, "a1k5half"},
      {"Z2xZ2", 4, 10, "toric"},            {"Z4", 4, 8, "z4"},
      {"(A1,3)", 4, 8, "fibonacci*semion"}, {"(A1,7)_1/2", 4, 4, "a1k7half"},
      {"FibxFib", 4, 6, "fibonacci*fibonacci"}};
  return cells;
}

// Galois conjugate of the normalized data (S, T); kept only when all d_i are fixed.
std::optional<ModularSymbol> galois_conjugate(const ModularSymbol& s, const Cyclotomic& D, long l) {
  const int n = s.rank();
  CMatrix st(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) st(i, j) = sigma(s.stilde(i, j), l);
  for (int i = 0; i < n; ++i)
    if (st(i, 0) != s.stilde(i, 0)) return std::nullopt;
  TwistVector th(n);
  for (int i = 0; i < n; ++i) th[i] = sigma(s.twists[i], l);
  const int sg = to_complex(sigma(D, l)).real() > 0 ? 1 : -1;
  return ModularSymbol{s.fusion, SMatrixTilde(s.stilde.labels(), st), s.s00_sign * sg, th};
}

}  // namespace

CountResult count_umtcs(int max_rank) {
  std::vector<AnyonTheory> seeds{trivial_theory()};
  std::vector<AnyonTheory> rank2;
  for (const auto& nm : catalog_names()) {
    AnyonTheory t = get(nm);
    if (t.rank() == 2) {
      rank2.push_back(t);
      rank2.push_back(conjugate(t));
    }
    seeds.push_back(std::move(t));
  }
  for (size_t i = 0; i < rank2.size(); ++i)
    for (size_t j = i; j < rank2.size(); ++j) seeds.push_back(product(rank2[i], rank2[j]));

  std::map<std::string, std::pair<ModularSymbol, std::string>> seen;
  std::vector<std::pair<ModularSymbol, std::string>> queue;
  std::map<std::string, Cyclotomic> Dcache;
  auto push = [&](const ModularSymbol& s, const std::string& how) {
    if (s.rank() > max_rank) return;
    std::string k = canonical_key(s);
    if (seen.count(k)) return;
    seen.emplace(k, std::make_pair(s, how));
    queue.emplace_back(s, how);
  };
  for (const auto& t : seeds) push(t.symbol(), t.name);
  while (!queue.empty()) {
    auto [s, how] = queue.back();
    queue.pop_back();
    ModularSymbol c{s.fusion, SMatrixTilde(s.stilde.labels(), conj(s.stilde.matrix())), s.s00_sign, s.twists};
    for (auto& t : c.twists) t = conj(t);
    push(c, "conj(" + how + ")");
    ModularSymbol ng = s;
    ng.s00_sign = -s.s00_sign;
    push(ng, "neg(" + how + ")");
    const Cyclotomic D = total_dimension(s);
    long N = std::lcm(entry_conductor(s.stilde.matrix()), minimal_conductor(D));
    for (const auto& t : s.twists) N = std::lcm(N, minimal_conductor(t));
    for (long l : units_mod(N))
      if (auto g = galois_conjugate(s, D, l)) push(*g, "sigma" + std::to_string(l) + "(" + how + ")");
  }
  CountResult out;
  std::map<std::string, int> cell_of;
  for (size_t i = 0; i < table1().size(); ++i) {
    const auto& c = table1()[i];
    if (c.rank > max_rank) continue;
    cell_of[fusion_key(derive_theory(c.seed).fusion)] = static_cast<int>(out.rules.size());
    out.rules.push_back({c.name, c.rank, 0, c.expected, {}});
  }
  std::set<std::string> unsigned_keys;
  for (const auto& [k, v] : seen) {
    auto it = cell_of.find(fusion_key(v.first.fusion));
    if (it == cell_of.end()) throw std::logic_error("count_umtcs: orbit left the known fusion rules");
    auto& rule = out.rules[it->second];
    ++rule.mtcs;
    rule.members.push_back(v.second);
    ++out.total;
    unsigned_keys.insert(canonical_key(v.first, false));
  }
  out.up_to_sign = static_cast<int>(unsigned_keys.size());
  return out;
}

}  // namespace mtc
