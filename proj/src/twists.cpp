#include "mtckit/twists.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <set>

namespace mtc {

namespace {

using Z = mpz_class;

// Column-recorded diagonalization: U A V = diag(e) with U, V unimodular. Returns false when
// some diagonal entry is zero.
bool diagonalize(std::vector<std::vector<Z>> A, int m, std::vector<Z>& e, std::vector<std::vector<Z>>& V) {
  const int r = static_cast<int>(A.size());
  V.assign(m, std::vector<Z>(m, 0));
  for (int i = 0; i < m; ++i) V[i][i] = 1;
  e.assign(m, 0);
  for (int t = 0; t < m; ++t) {
    for (;;) {
      int p = -1, q = -1;
      Z best = 0;
      for (int i = t; i < r; ++i)
        for (int j = t; j < m; ++j)
          if (A[i][j] != 0 && (p < 0 || abs(A[i][j]) < best)) {
            best = abs(A[i][j]);
            p = i;
            q = j;
          }
      if (p < 0) return false;
      std::swap(A[t], A[p]);
      for (auto& row : A) std::swap(row[t], row[q]);
      for (auto& row : V) std::swap(row[t], row[q]);
      bool done = true;
      for (int i = t + 1; i < r; ++i) {
        if (A[i][t] == 0) continue;
        Z f = A[i][t] / A[t][t];
        for (int j = t; j < m; ++j) A[i][j] -= f * A[t][j];
        if (A[i][t] != 0) done = false;
      }
      for (int j = t + 1; j < m; ++j) {
        if (A[t][j] == 0) continue;
        Z f = A[t][j] / A[t][t];
        for (int i = 0; i < r; ++i) A[i][j] -= f * A[i][t];
        for (int i = 0; i < m; ++i) V[i][j] -= f * V[i][t];
        if (A[t][j] != 0) done = false;
      }
      if (done) break;
    }
    e[t] = abs(A[t][t]);
  }
  return true;
}

struct RingTables {
  int n;
  std::vector<std::vector<std::vector<int>>> n_dual;  // n_{i^ j}^k
  std::vector<std::complex<double>> d;
};

// theta_i theta_j s_ij = sum_k n_{i^ j}^k d_k theta_k, diagonal first since it fails fastest
bool ring_identity_holds(const RingTables& R, const Eigen::MatrixXcd& S, const std::vector<std::complex<double>>& th,
                         double tol) {
  const int n = R.n;
  auto entry = [&](int i, int j) {
    std::complex<double> rhs = 0;
    for (int k = 0; k < n; ++k)
      if (R.n_dual[i][j][k]) rhs += double(R.n_dual[i][j][k]) * R.d[k] * th[k];
    return std::abs(th[i] * th[j] * S(i, j) - rhs) <= tol * (1 + std::abs(rhs));
  };
  for (int i = 1; i < n; ++i)
    if (!entry(i, i)) return false;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!entry(i, j) || !entry(j, i)) return false;
  return true;
}

Cyclotomic root(long L, long x) {
  x %= L;
  if (x < 0) x += L;
  const long g = std::gcd(x, L);
  return Cyclotomic::zeta(L / g, x / g);
}

}  // namespace

long VafaLattice::size() const {
  long s = 1;
  for (long e : invariants) {
    if (s > LONG_MAX / e) return LONG_MAX;
    s *= e;
  }
  return s;
}

std::vector<long> VafaLattice::exponents(const std::vector<long>& t) const {
  std::vector<long> x(var_of_label.size(), 0);
  std::vector<long> y(vars, 0);
  for (int v = 0; v < vars; ++v) {
    __int128 acc = 0;
    for (int k = 0; k < vars; ++k) acc += static_cast<__int128>(V[v][k]) * t[k] * (exponent / invariants[k]);
    long r = static_cast<long>(acc % exponent);
    y[v] = r < 0 ? r + exponent : r;
  }
  for (size_t j = 0; j < x.size(); ++j) x[j] = var_of_label[j] < 0 ? 0 : y[var_of_label[j]];
  return x;
}

VafaLattice vafa_lattice(const FusionRules& F) {
  const int n = F.rank();
  const auto& L = F.labels();
  VafaLattice out;
  out.var_of_label.assign(n, -1);
  for (int i = 1; i < n; ++i) {
    if (out.var_of_label[i] >= 0) continue;
    out.var_of_label[i] = out.var_of_label[L.dual(i)] = out.vars++;
  }
  if (out.vars == 0) return out;
  const Eigen::MatrixXi A = vafa_matrix(F);
  // 3 sum_j A_ij x_j - 4 (sum_j A_ij) x_i in Z
  std::vector<std::vector<Z>> M;
  for (int i = 1; i < n; ++i) {
    std::vector<Z> row(out.vars, 0);
    long rs = 0;
    for (int j = 0; j < n; ++j) rs += A(i, j);
    for (int j = 1; j < n; ++j) row[out.var_of_label[j]] += 3 * A(i, j);
    row[out.var_of_label[i]] -= 4 * rs;
    M.push_back(row);
  }
  std::vector<Z> e;
  std::vector<std::vector<Z>> V;
  if (!diagonalize(M, out.vars, e, V))
    throw MtcError("UnboundedTwistOrder", "the Vafa exponent system has a free direction");
  out.exponent = 1;
  for (const auto& x : e) {
    if (!x.fits_slong_p()) throw MtcError("TwistBudgetExceeded", "Vafa invariant factor too large");
    out.invariants.push_back(x.get_si());
    out.exponent = std::lcm(out.exponent, x.get_si());
  }
  out.V.assign(out.vars, std::vector<long>(out.vars));
  for (int i = 0; i < out.vars; ++i)
    for (int j = 0; j < out.vars; ++j) {
      Z r = V[i][j] % Z(out.exponent);
      out.V[i][j] = r.get_si();
    }
  return out;
}

std::vector<std::vector<long>> numeric_twist_candidates(const FusionRules& F, const Eigen::MatrixXcd& S,
                                                        const TwistOptions& opts, long* modulus, bool* used_fallback) {
  const int n = F.rank();
  const auto& Lb = F.labels();
  RingTables R{n, {}, {}};
  R.n_dual.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) R.n_dual[i][j][k] = static_cast<int>(F.ni(Lb.dual(i), j, k));
  for (int k = 0; k < n; ++k) R.d.push_back(S(k, 0));

  std::vector<std::vector<long>> out;
  std::vector<std::complex<double>> th(n, 1.0);
  auto test = [&](const std::vector<long>& x, long L) {
    for (int j = 1; j < n; ++j) th[j] = std::polar(1.0, 2 * std::numbers::pi * double(x[j]) / double(L));
    if (ring_identity_holds(R, S, th, 1e-8)) out.push_back(x);
  };

  if (used_fallback) *used_fallback = false;
  std::optional<VafaLattice> lat;
  try {
    lat = vafa_lattice(F);
  } catch (const MtcError& e) {
    if (e.kind() != "UnboundedTwistOrder") throw;
  }
  if (lat) {
    if (lat->size() > opts.budget)
      throw MtcError("TwistBudgetExceeded", std::to_string(lat->size()) + " Vafa solutions exceed the budget");
    *modulus = lat->exponent;
    std::vector<long> t(lat->vars, 0);
    for (;;) {
      test(lat->exponents(t), lat->exponent);
      int k = 0;
      while (k < lat->vars && ++t[k] == lat->invariants[k]) t[k++] = 0;
      if (k == lat->vars) break;
    }
    return out;
  }
  // Fallback: every variable ranges over roots of unity of order dividing the cap.
  if (used_fallback) *used_fallback = true;
  const long cap = opts.conductor_cap;
  std::vector<int> var(n, -1);
  int vars = 0;
  for (int i = 1; i < n; ++i)
    if (var[i] < 0) var[i] = var[Lb.dual(i)] = vars++;
  double total = std::pow(double(cap), vars);
  if (total > double(opts.budget))
    throw MtcError("TwistBudgetExceeded", "fallback search over order " + std::to_string(cap) + " roots exceeds budget");
  *modulus = cap;
  std::vector<long> y(vars, 0), x(n, 0);
  for (;;) {
    for (int j = 1; j < n; ++j) x[j] = y[var[j]];
    test(x, cap);
    int k = 0;
    while (k < vars && ++y[k] == cap) y[k++] = 0;
    if (k == vars) break;
  }
  return out;
}

std::vector<TwistVector> solve_twists(const SMatrixTilde& S, const TwistOptions& opts) {
  const FusionRules F = verlinde(S);
  long L = 1;
  const auto cands = numeric_twist_candidates(F, to_complex(S.matrix()), opts, &L);
  std::vector<std::pair<std::vector<Rational>, TwistVector>> found;
  for (const auto& x : cands) {
    TwistVector th;
    std::vector<Rational> key;
    for (long v : x) {
      th.push_back(root(L, v));
      key.push_back(Rational(v) / Rational(L));
    }
    ModularSymbol sym{F, S, 1, th};
    if (!check_modular_symbol(sym).ok() || !twist_ring_identity(sym).ok() || !vafa_check(sym).ok() ||
        !fs_check(sym).ok())
      continue;
    found.emplace_back(key, th);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<TwistVector> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::vector<std::vector<int>> stilde_automorphisms(const SMatrixTilde& S) {
  const int n = S.rank();
  const auto& L = S.labels();
  std::vector<std::vector<int>> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = p[L.dual(i)] == L.dual(p[i]);
    for (int i = 0; i < n && ok; ++i)
      for (int j = i; j < n && ok; ++j) ok = S(p[i], p[j]) == S(i, j);
    if (ok) out.push_back(p);
  } while (n > 1 && std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

int twist_orbit_count(const SMatrixTilde& S, const std::vector<TwistVector>& sols) {
  const auto autos = stilde_automorphisms(S);
  std::set<std::string> orbits;
  for (const auto& th : sols) {
    std::string best;
    for (const auto& p : autos) {
      std::string k;
      for (size_t i = 0; i < p.size(); ++i) k += th[p[i]].str() + ";";
      if (best.empty() || k < best) best = k;
    }
    orbits.insert(best);
  }
  return static_cast<int>(orbits.size());
}

Report twist_inequality_filter(const SMatrixTilde& S, int bits) {
  const int n = S.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (conj(S(i, j)) != S(i, j)) throw MtcError("NotReal", "s~ entry (" + std::to_string(i) + "," +
                                                                    std::to_string(j) + ") is not real");
  hp::PrecisionScope scope(bits);
  RealTable t(n, std::vector<hp::Real>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = embed_complex(S(i, j), bits).re;
  return twist_inequality_filter(t, bits);
}

Report twist_inequality_filter(const RealTable& S, int bits) {
  hp::PrecisionScope scope(bits);
  Report r;
  r.subject = "twist inequalities";
  const int n = static_cast<int>(S.size());
  hp::Real D2 = 0;
  for (int i = 0; i < n; ++i) D2 += S[i][0] * S[i][0];
  const hp::Real D = sqrt(D2);
  const hp::Real tol = hp::Real(1e-20) * (1 + D2);
  int checked = 0;
  for (int j = 0; j < n; ++j) {
    hp::Real mx = 0;
    for (int i = 0; i < n; ++i) mx = std::max(mx, hp::Real(S[i][j] * S[i][j]));
    const hp::Real lhs = 2 * mx, rhs = D * abs(S[j][j]) + D2;
    ++checked;
    if (lhs > rhs + tol)
      r.add("TwistInequality (" + std::to_string(j) + "," + std::to_string(j) + ")", false,
            "2 max s^2 = " + hp::to_string(lhs, 8) + " > D|s_jj| + D^2 = " + hp::to_string(rhs, 8));
  }
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      const hp::Real a = abs(S[j][k]);
      if (a < hp::Real(1e-30)) continue;
      hp::Real sum = 0;
      for (int i = 0; i < n; ++i) sum += abs(S[i][j] * S[i][k]);
      const hp::Real rhs = sum / a;
      ++checked;
      if (D > rhs + tol)
        r.add("TwistInequality (" + std::to_string(j) + "," + std::to_string(k) + ")", false,
              "D = " + hp::to_string(D, 8) + " > " + hp::to_string(rhs, 8));
    }
  if (r.checks.empty()) r.add("twist inequalities", true, std::to_string(checked) + " inequalities");
  return r;
}

bool twist_inequalities_hold(const Eigen::MatrixXd& S, double tol) {
  const int n = static_cast<int>(S.rows());
  double D2 = 0;
  for (int i = 0; i < n; ++i) D2 += S(i, 0) * S(i, 0);
  const double D = std::sqrt(D2), slack = tol * (1 + D2);
  for (int j = 0; j < n; ++j) {
    double mx = 0;
    for (int i = 0; i < n; ++i) mx = std::max(mx, S(i, j) * S(i, j));
    if (2 * mx > D * std::abs(S(j, j)) + D2 + slack) return false;
    for (int k = j; k < n; ++k) {
      const double a = std::abs(S(j, k));
      if (a < 1e-12) continue;
      double sum = 0;
      for (int i = 0; i < n; ++i) sum += std::abs(S(i, j) * S(i, k));
      if (D > sum / a + slack) return false;
    }
  }
  return true;
}

}  // namespace mtc
