#include "mtckit/fsymbols.hpp"

#include <algorithm>
#include <sstream>

#include "mtckit/galois.hpp"
#include "mtckit/twists.hpp"

namespace mtc {

namespace {

struct NumF {
  std::map<FKey, std::tuple<std::vector<int>, std::vector<int>, HMatrix>> m;

  NumF(const AnyonTheory& t, int bits) {
    for (const auto& [k, f] : *t.F) {
      HMatrix h(f.left.size(), f.right.size());
      for (size_t i = 0; i < f.left.size(); ++i)
        for (size_t j = 0; j < f.right.size(); ++j) h(i, j) = f.m[i][j].value(bits);
      m[k] = {f.left, f.right, h};
    }
  }

  hp::Complex at(int a, int b, int c, int d, int x, int y) const {
    auto it = m.find({a, b, c, d});
    if (it == m.end()) return hp::Complex(0);
    const auto& [L, Rr, h] = it->second;
    auto px = std::find(L.begin(), L.end(), x);
    auto py = std::find(Rr.begin(), Rr.end(), y);
    if (px == L.end() || py == Rr.end()) return hp::Complex(0);
    return h(px - L.begin(), py - Rr.begin());
  }
};

std::string tuple_str(std::initializer_list<int> v) {
  std::string s = "(";
  for (int x : v) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

}  // namespace

ResidualReport verify_pentagon(const AnyonTheory& t, int bits, double tol) {
  ResidualReport out;
  out.report.subject = "pentagon: " + t.name;
  if (!t.F) {
    out.report.add("pentagon", true, "not applicable (no F data)");
    return out;
  }
  hp::PrecisionScope scope(bits);
  NumF F(t, bits);
  const auto& N = t.fusion;
  const int n = t.rank();
  hp::Real worst = 0;
  std::string where;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f) {
              if (!N.ni(a, b, f)) continue;
              for (int g = 0; g < n; ++g) {
                if (!N.ni(f, c, g) || !N.ni(g, d, e)) continue;
                for (int l = 0; l < n; ++l) {
                  if (!N.ni(c, d, l) || !N.ni(f, l, e)) continue;
                  for (int k = 0; k < n; ++k) {
                    if (!N.ni(b, l, k) || !N.ni(a, k, e)) continue;
                    hp::Complex lhs = F.at(f, c, d, e, g, l) * F.at(a, b, l, e, f, k);
                    hp::Complex rhs(0);
                    for (int h = 0; h < n; ++h) {
                      if (!N.ni(b, c, h) || !N.ni(a, h, g) || !N.ni(h, d, k)) continue;
                      rhs += F.at(a, b, c, g, f, h) * F.at(a, h, d, e, g, k) * F.at(b, c, d, k, h, l);
                    }
                    hp::Real res = hp::abs(lhs - rhs);
                    ++out.equations;
                    if (res > worst) {
                      worst = res;
                      where = tuple_str({a, b, c, d, e, f, g, k, l});
                    }
                  }
                }
              }
            }
  out.max_residual = worst.convert_to<double>();
  const bool pass = worst < hp::Real(tol);
  out.report.add("pentagon", pass,
                 std::to_string(out.equations) + " equations, max residual " + hp::to_string(worst, 3) +
                     (pass ? "" : " at (a,b,c,d,e,f,g,k,l)=" + where));
  if (!pass) out.report.checks.back().name = "PentagonViolation";
  return out;
}

ResidualReport verify_hexagon(const AnyonTheory& t, int bits, double tol) {
  ResidualReport out;
  out.report.subject = "hexagon: " + t.name;
  if (!t.F) {
    out.report.add("hexagon", true, "not applicable (no F data)");
    return out;
  }
  hp::PrecisionScope scope(bits);
  NumF F(t, bits);
  const auto& N = t.fusion;
  const int n = t.rank();
  std::map<RKey, hp::Complex> Rn, Rinv;
  for (const auto& [k, v] : t.R) {
    Rn[k] = embed_complex(v, bits);
    Rinv[{k[1], k[0], k[2]}] = embed_complex(conj(v), bits);
  }
  for (int fam = 0; fam < 2; ++fam) {
    const auto& R = fam == 0 ? Rn : Rinv;
    auto r = [&](int x, int y, int z) {
      auto it = R.find({x, y, z});
      return it == R.end() ? hp::Complex(0) : it->second;
    };
    hp::Real worst = 0;
    long eqs = 0;
    std::string where;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e) {
              if (!N.ni(c, a, e) || !N.ni(e, b, d)) continue;
              for (int g = 0; g < n; ++g) {
                if (!N.ni(c, b, g) || !N.ni(a, g, d)) continue;
                hp::Complex lhs = r(c, a, e) * F.at(a, c, b, d, e, g) * r(c, b, g);
                hp::Complex rhs(0);
                for (int f = 0; f < n; ++f) {
                  if (!N.ni(a, b, f) || !N.ni(c, f, d)) continue;
                  rhs += F.at(c, a, b, d, e, f) * r(c, f, d) * F.at(a, b, c, d, f, g);
                }
                hp::Real res = hp::abs(lhs - rhs);
                ++eqs;
                if (res > worst) {
                  worst = res;
                  where = tuple_str({a, b, c, d, e, g});
                }
              }
            }
    out.equations += eqs;
    out.max_residual = std::max(out.max_residual, worst.convert_to<double>());
    const bool pass = worst < hp::Real(tol);
    const std::string name = fam == 0 ? "hexagon (R)" : "hexagon (R^-1)";
    out.report.add(pass ? name : "HexagonViolation " + name, pass,
                   std::to_string(eqs) + " equations, max residual " + hp::to_string(worst, 3) +
                       (pass ? "" : " at (a,b,c,d,e,g)=" + where));
  }
  return out;
}

Report ribbon_checks(const AnyonTheory& t) {
  Report r;
  r.subject = "ribbon: " + t.name;
  const int n = t.rank();
  const ModularSymbol sym = t.symbol();
  std::vector<int> nu;
  try {
    nu = fs_indicators(sym);
  } catch (const MtcError& e) {
    r.add("RibbonViolation nu", false, e.what());
    return r;
  }
  std::string bad;
  for (int a = 0; a < n; ++a) {
    if (t.fusion.labels().dual(a) != a) continue;
    if (t.Rsym(a, a, 0) != conj(t.twists[a]).scaled(Rational(nu[a]))) bad += t.label_names[a] + " ";
  }
  r.add(bad.empty() ? "R^{aa}_1 = nu_a / theta_a" : "RibbonViolation R^{aa}_1 = nu_a / theta_a", bad.empty(), bad);
  bad.clear();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!t.fusion.ni(a, b, c)) continue;
        if (t.Rsym(a, b, c) * t.Rsym(b, a, c) != t.twists[c] * conj(t.twists[a] * t.twists[b]))
          bad += t.label_names[a] + t.label_names[b] + "->" + t.label_names[c] + " ";
      }
  r.add(bad.empty() ? "R^{ab}_c R^{ba}_c = theta_c / (theta_a theta_b)" : "RibbonViolation monodromy", bad.empty(),
        bad);
  bad.clear();
  for (int a = 0; a < n; ++a) {
    Cyclotomic acc(0);
    for (int c = 0; c < n; ++c)
      if (t.fusion.ni(a, a, c)) acc += t.stilde.d(c) * t.Rsym(a, a, c);
    if (acc != t.stilde.d(a) * t.twists[a]) bad += t.label_names[a] + " ";
  }
  r.add(bad.empty() ? "sum_c d_c R^{aa}_c = d_a theta_a" : "RibbonViolation sum_c d_c R^{aa}_c = d_a theta_a",
        bad.empty(), bad);
  std::string s;
  for (int v : nu) s += (s.empty() ? "" : ",") + std::to_string(v);
  r.add("nu = (" + s + ")", true);
  return r;
}

AnyonTheory mutate_f(const AnyonTheory& t, std::string* where) {
  AnyonTheory m = t;
  if (!m.F) throw MtcError("NoFSymbols", t.name);
  for (auto& [k, f] : *m.F) {
    if (k[0] == 0 || k[1] == 0 || k[2] == 0) continue;
    f.m[0][0].coeff = -f.m[0][0].coeff;
    if (where)
      *where = "F^{" + t.label_names[k[0]] + "," + t.label_names[k[1]] + "," + t.label_names[k[2]] + "}_" +
               t.label_names[k[3]] + "[0,0]";
    m.name = t.name + " (mutated)";
    return m;
  }
  throw MtcError("NoFSymbols", t.name + " has no F with nontrivial a,b,c");
}

const std::vector<std::string>& theory_check_names() {
  static const std::vector<std::string> n{"core", "ribbon", "pentagon", "hexagon", "galois", "congruence"};
  return n;
}

hp::Real charge_residual(const AnyonTheory& t, int bits) {
  hp::PrecisionScope scope(bits);
  const ModularSymbol sym = t.symbol();
  const hp::Complex Dp = embed_complex(gauss_sum(sym, 1), bits);
  const hp::Complex D = embed_complex(total_dimension(sym, bits), bits) * hp::Complex(t.s00_sign);
  const hp::Real angle = hp::pi() * hp::Real(t.central_charge.mpq().get_num().get_str()) /
                         hp::Real(t.central_charge.mpq().get_den().get_str()) / 4;
  return hp::abs(Dp / D - hp::expi(angle));
}

Report theory_suite(const AnyonTheory& t, const std::vector<std::string>& which, int bits) {
  auto want = [&](const std::string& g) { return which.empty() || std::count(which.begin(), which.end(), g); };
  for (const auto& w : which)
    if (!std::count(theory_check_names().begin(), theory_check_names().end(), w)) throw MtcError("UnknownCheck", w);
  Report r;
  r.subject = t.name;
  const ModularSymbol sym = t.symbol();
  if (want("core")) {
    r.merge(full_symbol_suite(sym, bits), "core: ");
    try {
      r.add("core: verlinde(S~) equals stored fusion", verlinde(t.stilde) == t.fusion);
    } catch (const MtcError& e) {
      r.add("core: verlinde(S~) equals stored fusion", false, e.what());
    }
    if (t.stilde.labels().all_self_dual())
      r.merge(twist_inequality_filter(t.stilde, bits), "core: ");
    else
      r.add("core: twist inequalities not applicable", true, "S~ not real");
    try {
      const Rational c = central_charge(sym, bits);
      r.add("core: central charge " + t.central_charge.str(), c == t.central_charge, "computed " + c.str());
      const hp::Real res = charge_residual(t, bits);
      r.add("core: D+/D = e^{pi i c/4}", res < hp::Real("1e-20"), "residual " + hp::to_string(res, 3));
    } catch (const MtcError& e) {
      r.add("core: central charge", false, e.what());
    }
  }
  if (want("ribbon")) r.merge(ribbon_checks(t), "ribbon: ");
  for (const char* g : {"pentagon", "hexagon"}) {
    if (!want(g)) continue;
    if (!t.F) {
      r.add(std::string(g) + ": not applicable", true, "no F data stored");
      continue;
    }
    const ResidualReport rr = std::string(g) == "pentagon" ? verify_pentagon(t, bits) : verify_hexagon(t, bits);
    r.add(std::string(g) + ": " + std::to_string(rr.equations) + " equations", rr.report.ok(),
          "max residual " + std::to_string(rr.max_residual));
    if (!rr.report.ok()) r.merge(rr.report, std::string(g) + ": ");
  }
  if (want("galois")) r.merge(galois_suite(sym, bits), "galois: ");
  if (want("congruence")) r.merge(congruence_relations(t, bits), "congruence: ");
  return r;
}

}  // namespace mtc
