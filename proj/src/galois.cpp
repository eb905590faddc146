#include "mtckit/galois.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mtc {

std::vector<int> GaloisElement::inverse_perm() const {
  std::vector<int> inv(perm.size());
  for (size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = static_cast<int>(k);
  return inv;
}

std::string cycle_notation(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += "(";
    for (size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      out += std::to_string(j);
      if (!seen[perm[j]]) out += " ";
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

int permutation_sign(const std::vector<int>& perm) {
  int s = 1;
  std::vector<bool> seen(perm.size(), false);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = perm[j], ++len) seen[j] = true;
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::string GaloisGroup::structure() const {
  // Abelian group from element orders: invariant factors via the order histogram.
  const int n = order();
  if (n == 1) return "1";
  std::vector<int> ord(n, 1);
  for (int a = 0; a < n; ++a) {
    int x = a;
    while (x != 0) {
      x = table[x][a];
      ++ord[a];
    }
  }
  int maxord = *std::max_element(ord.begin(), ord.end());
  if (maxord == n) return "Z" + std::to_string(n);
  // small groups only; enough for anything of rank <= 12
  std::string s;
  int rest = n;
  std::vector<int> factors;
  while (rest > 1) {
    int m = 1;
    for (int o : ord)
      if (rest % o == 0) m = std::max(m, o);
    factors.push_back(m);
    rest /= m;
    for (int& o : ord) o = std::gcd(o, rest);
  }
  for (size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + ("Z" + std::to_string(factors[i]));
  return s;
}

Cyclotomic sigma(const Cyclotomic& x, long l) {
  if (x.conductor() == 1) return x;
  if (std::gcd(l, x.conductor()) != 1) {
    Cyclotomic y = minimize_conductor(x);
    if (y.conductor() == 1) return y;
    return galois_apply(y, ((l % y.conductor()) + y.conductor()) % y.conductor());
  }
  return galois_apply(x, ((l % x.conductor()) + x.conductor()) % x.conductor());
}

long entry_conductor(const CMatrix& m) {
  long N = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) N = std::lcm(N, minimal_conductor(m(i, j)));
  return N;
}

long fusion_field_conductor(const SMatrixTilde& S) { return entry_conductor(lambda_table(S)); }

namespace {

Cyclotomic apply_l(const Cyclotomic& x, long l) { return sigma(x, l); }

GaloisElement element_for(const SMatrixTilde& S, long l) {
  const int n = S.rank();
  const CMatrix& s = S.matrix();
  CMatrix sig(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sig(i, j) = apply_l(s(i, j), l);
  const CMatrix W = mul(conj(s), sig);  // = D^2 C_sigma
  int row0 = -1;
  for (int i = 0; i < n; ++i)
    if (!W(i, 0).is_zero()) {
      if (row0 >= 0) throw MtcError("NotSignedPermutation", "l=" + std::to_string(l) + ": column 0 has two nonzero entries");
      row0 = i;
    }
  if (row0 < 0) throw MtcError("NotSignedPermutation", "l=" + std::to_string(l) + ": column 0 vanishes");
  GaloisElement g;
  g.l = l;
  g.d_sigma0 = S.d(row0);
  const Cyclotomic scale = g.d_sigma0 * inverse(S.Dsq());
  g.C = W * inverse(S.Dsq());
  g.perm.assign(n, -1);
  g.raw_eps.assign(n, 0);
  g.signed_perm = Eigen::MatrixXi::Zero(n, n);
  std::vector<bool> hit(n, false);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (W(i, k).is_zero()) continue;
      Cyclotomic p = W(i, k) * scale;
      int v = 0;
      if (p == Cyclotomic(1)) v = 1;
      else if (p == Cyclotomic(-1)) v = -1;
      if (v == 0 || g.perm[k] >= 0 || hit[i])
        throw MtcError("NotSignedPermutation", "l=" + std::to_string(l) + " entry (" + std::to_string(i) + "," +
                                                   std::to_string(k) + ") = " + p.str());
      g.perm[k] = i;
      hit[i] = true;
      g.raw_eps[i] = v;
      g.signed_perm(i, k) = v;
    }
  for (int k = 0; k < n; ++k)
    if (g.perm[k] < 0) throw MtcError("NotSignedPermutation", "l=" + std::to_string(l) + ": empty column");
  g.eps = g.raw_eps;
  if (g.eps[0] < 0)
    for (int& e : g.eps) e = -e;
  return g;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {  // a after b
  std::vector<int> c(a.size());
  for (size_t k = 0; k < a.size(); ++k) c[k] = a[b[k]];
  return c;
}

}  // namespace

GaloisGroup galois_group(const SMatrixTilde& S) {
  GaloisGroup G;
  G.conductor = entry_conductor(S.matrix());
  std::map<std::vector<int>, size_t> seen;
  for (long l : units_mod(G.conductor)) {
    GaloisElement g = element_for(S, l);
    auto it = seen.find(g.perm);
    if (it != seen.end()) {
      G.elements[it->second].also.push_back(l);
      continue;
    }
    seen[g.perm] = G.elements.size();
    G.elements.push_back(std::move(g));
  }
  const int m = G.order();
  G.table.assign(m, std::vector<int>(m, -1));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      auto it = seen.find(compose(G.elements[a].perm, G.elements[b].perm));
      if (it == seen.end()) throw MtcError("NotSignedPermutation", "permutations are not closed under composition");
      G.table[a][b] = static_cast<int>(it->second);
    }
  return G;
}

Report verify_action_identities(const GaloisGroup& G, const SMatrixTilde& S) {
  Report r;
  r.subject = "Galois action identities";
  const int n = S.rank();
  const int m = G.order();
  const CMatrix& s = S.matrix();
  const Cyclotomic D2 = S.Dsq();
  std::map<std::vector<int>, int> index;
  for (int a = 0; a < m; ++a) index[G.elements[a].perm] = a;

  // homomorphism l -> perm and abelianness
  bool hom = true, abel = true;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      long lab = (G.elements[a].l * G.elements[b].l) % G.conductor;
      GaloisElement g = element_for(S, lab);
      if (g.perm != G.elements[G.table[a][b]].perm) hom = false;
      if (G.table[a][b] != G.table[b][a]) abel = false;
    }
  r.add("homomorphism into S_n", hom);
  r.add("abelian", abel, G.structure());

  for (const auto& g : G.elements) {
    const std::string tag = "l=" + std::to_string(g.l) + " ";
    std::string bad;
    // Eq5 in the raw signs
    for (int j = 0; j < n && bad.empty(); ++j)
      for (int k = 0; k < n && bad.empty(); ++k) {
        Cyclotomic lhs = apply_l(s(j, k), g.l) * g.d_sigma0;
        Cyclotomic rhs = s(j, g.sigma(k)).scaled(Rational(g.raw_eps[g.sigma(k)]));
        if (lhs != rhs) bad = std::to_string(j) + "," + std::to_string(k);
      }
    r.add(tag + "eq5 sigma(s_jk) d_sigma(0) = eps_sigma(k) s_j,sigma(k)", bad.empty(), bad);
    bad.clear();
    const auto inv = g.inverse_perm();
    for (int pass = 0; pass < 2; ++pass) {
      const std::vector<int>& e = pass ? g.raw_eps : g.eps;
      for (int j = 0; j < n && bad.empty(); ++j)
        for (int k = 0; k < n && bad.empty(); ++k)
          if (s(j, k) != s(g.sigma(j), inv[k]).scaled(Rational(e[g.sigma(j)] * e[k])))
            bad = std::to_string(j) + "," + std::to_string(k);
    }
    r.add(tag + "eq6", bad.empty(), bad);
    bad.clear();
    auto it = index.find(inv);
    if (it == index.end()) {
      r.add(tag + "eq7", false, "inverse missing");
    } else {
      const GaloisElement& gi = G.elements[it->second];
      for (int pass = 0; pass < 2 && bad.empty(); ++pass) {
        const std::vector<int>& e = pass ? g.raw_eps : g.eps;
        const std::vector<int>& ei = pass ? gi.raw_eps : gi.eps;
        for (int k = 0; k < n && bad.empty(); ++k)
          if (ei[inv[k]] != e[g.sigma(0)] * e[0] * e[k]) bad = std::to_string(k);
      }
      r.add(tag + "eq7", bad.empty(), bad);
    }
    bad.clear();
    for (int j = 0; j < n && bad.empty(); ++j)
      for (int k = 0; k < n && bad.empty(); ++k) {
        const Cyclotomic& a = s(j, k);
        const Cyclotomic& b = s(g.sigma(j), inv[k]);
        if (a * conj(a) != b * conj(b)) bad = std::to_string(j) + "," + std::to_string(k);
      }
    r.add(tag + "|s_jk| constant on orbits", bad.empty(), bad);
    r.add(tag + "sigma(D^2) d_sigma(0)^2 = D^2", apply_l(D2, g.l) * g.d_sigma0 * g.d_sigma0 == D2);
  }
  // C_{ab} = C_a sigma_a(C_b)
  bool cocycle = true;
  for (int a = 0; a < m && cocycle; ++a)
    for (int b = 0; b < m && cocycle; ++b) {
      const auto& ga = G.elements[a];
      const auto& gb = G.elements[b];
      long lab = (ga.l * gb.l) % G.conductor;
      GaloisElement gab = element_for(S, lab);
      CMatrix sb(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sb(i, j) = apply_l(gb.C(i, j), ga.l);
      if (!equal(gab.C, mul(ga.C, sb))) cocycle = false;
    }
  r.add("C_{ab} = C_a sigma_a(C_b)", cocycle);
  return r;
}

Report parity_check(const GaloisGroup& G, const SMatrixTilde& S) {
  Report r;
  r.subject = "parity law";
  const int n = S.rank();
  // Works with Delta = det(S~): sigma(Delta) d_sigma(0)^n = eps_sigma Delta and prod eps = eps_sigma sign(sigma).
  // Self-dual labels give Delta = +-D^n, so eps_sigma = +1 for even rank and the sigma(D) form for odd rank.
  // Dual pairs contribute det(C) = -1 factors: Delta picks up an i and D need not lie in K.
  const bool sd = S.labels().all_self_dual();
  const Cyclotomic Delta = det(S.matrix());
  std::optional<Cyclotomic> D;
  if (n % 2 == 1 && sd) D = total_dimension_odd_rank(S);
  for (const auto& g : G.elements) {
    const std::string tag = "l=" + std::to_string(g.l) + " ";
    int prod = 1;
    for (int e : g.raw_eps) prod *= e;
    const int sgn = permutation_sign(g.perm);
    Cyclotomic dn(1);
    for (int i = 0; i < n; ++i) dn *= g.d_sigma0;
    const Cyclotomic lhs = apply_l(Delta, g.l) * dn;
    const int eps_sigma = lhs == Delta ? 1 : (lhs == -Delta ? -1 : 0);
    r.add(tag + "sigma(det S~) d_sigma(0)^n = eps_sigma det S~", eps_sigma != 0);
    if (n % 2 == 0 && sd) r.add(tag + "even rank, self-dual: eps_sigma = +1", eps_sigma == 1);
    if (D) {
      const Cyclotomic x = apply_l(*D, g.l) * g.d_sigma0;
      const int e2 = x == *D ? 1 : (x == -*D ? -1 : 0);
      r.add(tag + "sigma(D) = eps_sigma D / d_sigma(0)", e2 != 0 && e2 == eps_sigma);
    }
    r.add(tag + "prod eps = eps_sigma sign(sigma)", eps_sigma != 0 && prod == eps_sigma * sgn,
          "prod=" + std::to_string(prod) + " eps_sigma=" + std::to_string(eps_sigma) + " sign=" + std::to_string(sgn));
  }
  return r;
}

Report twist_fixedpoint_sum(const ModularSymbol& sym, const GaloisElement& g) {
  Report r;
  r.subject = "fixed-point twist sum";
  const int n = sym.rank();
  const auto& th = sym.twists;
  Cyclotomic lhs(0), fix(0);
  for (int j = 0; j < n; ++j) {
    const int sj = g.sigma(j);
    lhs += sym.stilde(j, sj).scaled(Rational(g.eps[sj])) * conj(th[j] * th[sj]);
  }
  bool any = false;
  for (int i = 0; i < n; ++i)
    if (g.sigma(i) == sym.stilde.labels().dual(i)) {
      fix += th[i].scaled(Rational(g.eps[g.sigma(i)]));
      any = true;
    }
  Cyclotomic rhs = gauss_sum(sym, -1) * fix;
  r.add("l=" + std::to_string(g.l) + (any ? "" : " (no fixed points)"), lhs == rhs);
  return r;
}

long modular_data_conductor(const ModularSymbol& sym, Report* report, int bits) {
  const int n = sym.rank();
  long N = entry_conductor(sym.stilde.matrix());
  long ordT = 1;
  for (const auto& t : sym.twists) {
    N = std::lcm(N, minimal_conductor(t));
    ElementKind k = classify_element(t);
    if (k.kind == ElementKind::root_of_unity) ordT = std::lcm(ordT, k.order);
    else ordT = 0;
  }
  const Cyclotomic D = total_dimension(sym, bits);
  N = std::lcm(N, minimal_conductor(D));
  if (N % 2 == 1 && ordT % 2 == 0) N *= 2;  // Q(zeta_N) = Q(zeta_2N), report the even one when T needs it
  if (!report) return N;
  report->add("ord(T) | N", ordT != 0 && N % ordT == 0, "ord(T)=" + std::to_string(ordT) + " N=" + std::to_string(N));
  bool tl = true, sl = true;
  const CMatrix& s = sym.stilde.matrix();
  for (long l : units_mod(N)) {
    for (int i = 0; i < n; ++i) {
      Cyclotomic p(1);
      for (long e = 0; e < l; ++e) p *= sym.twists[i];
      if (apply_l(sym.twists[i], l) != p) tl = false;
    }
    GaloisElement g = element_for(sym.stilde, l);
    // sigma(S~)/sigma(D) against S~ P~ / D, up to an overall sign
    const Cyclotomic sD = apply_l(D, l);
    bool plus = true, minus = true;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Cyclotomic lhs = apply_l(s(j, k), l) * D;
        Cyclotomic rhs = s(j, g.sigma(k)).scaled(Rational(g.raw_eps[g.sigma(k)])) * sD;
        plus = plus && lhs == rhs;
        minus = minus && lhs == -rhs;
      }
    sl = sl && (plus || minus);
  }
  report->add("sigma_l(T) = T^l", tl);
  report->add("sigma_l(S) = +-S P~_sigma", sl);
  return N;
}

Report galois_suite(const ModularSymbol& sym, int bits) {
  Report r;
  r.subject = "Galois suite";
  GaloisGroup G;
  try {
    G = galois_group(sym.stilde);
  } catch (const MtcError& e) {
    r.add("signed permutations", false, e.what());
    return r;
  }
  r.add("signed permutations", true, "G=" + G.structure() + " over conductor " + std::to_string(G.conductor));
  r.merge(verify_action_identities(G, sym.stilde));
  r.merge(parity_check(G, sym.stilde));
  for (const auto& g : G.elements) r.merge(twist_fixedpoint_sum(sym, g), "fixed-point ");
  Report c;
  long N = modular_data_conductor(sym, &c, bits);
  r.merge(c, "conductor " + std::to_string(N) + ": ");
  return r;
}

}  // namespace mtc
