#include "mtckit/fusion_search.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

#include "mtckit/catalog.hpp"

namespace mtc {

namespace {

using Table = std::vector<std::vector<std::vector<long>>>;

std::string cnum(std::complex<double> z) {
  char buf[64];
  double re = std::abs(z.real()) < 5e-7 ? 0.0 : z.real();
  double im = std::abs(z.imag()) < 5e-7 ? 0.0 : z.imag();
  std::snprintf(buf, sizeof buf, "%.6f,%.6f;", re, im);
  return buf;
}

template <typename Fn>
void relabelings(const LabelSet& L, Fn&& f) {
  const int n = L.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> inv(n);
  do {
    for (int i = 0; i < n; ++i) inv[p[i]] = i;
    std::string k;
    for (int i = 0; i < n; ++i) k += std::to_string(inv[L.dual(p[i])]) + ",";
    f(p, k + "|");
  } while (n > 1 && std::next_permutation(p.begin() + 1, p.end()));
}

bool associative(const Table& t, int n) {
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      for (int k = 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          long a = 0, b = 0;
          for (int m = 0; m < n; ++m) {
            a += t[i][j][m] * t[m][k][l];
            b += t[j][k][m] * t[i][m][l];
          }
          if (a != b) return false;
        }
  return true;
}

Eigen::MatrixXd dmat(const QMatrix& q) {
  Eigen::MatrixXd m(q.rows(), q.cols());
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) m(i, j) = q(i, j).to_double();
  return m;
}

bool is_real(const Eigen::MatrixXcd& m, double tol) { return m.imag().cwiseAbs().maxCoeff() < tol; }

}  // namespace

std::vector<LabelSet> duality_classes(int n, bool include_nonselfdual) {
  std::vector<LabelSet> out;
  for (int pairs = 0; 2 * pairs <= n - 1; ++pairs) {
    if (pairs > 0 && !include_nonselfdual) break;
    std::vector<int> d(n);
    std::iota(d.begin(), d.end(), 0);
    for (int p = 0; p < pairs; ++p) std::swap(d[2 * p + 1], d[2 * p + 2]);
    out.emplace_back(d);
  }
  return out;
}

std::vector<std::vector<std::array<int, 3>>> fusion_parameter_orbits(const LabelSet& L) {
  const int n = L.size();
  const int m = n - 1;
  if (m <= 0) return {};
  auto id = [&](int i, int j, int k) { return ((i - 1) * m + (j - 1)) * m + (k - 1); };
  std::vector<int> parent(m * m * m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      for (int k = 1; k < n; ++k) {
        unite(id(i, j, k), id(j, i, k));
        unite(id(i, j, k), id(L.dual(i), L.dual(j), L.dual(k)));
        unite(id(i, j, k), id(i, L.dual(k), L.dual(j)));
      }
  std::map<int, std::vector<std::array<int, 3>>> groups;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      for (int k = 1; k < n; ++k) groups[find(id(i, j, k))].push_back({i, j, k});
  std::vector<std::vector<std::array<int, 3>>> out;
  for (auto& [r, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FusionRules> fusion_rings(const LabelSet& L, const RingSearchOptions& opts, long* visited) {
  const int n = L.size();
  const auto orbits = fusion_parameter_orbits(L);
  const int P = static_cast<int>(orbits.size());
  std::vector<int> mx(P, opts.max_entry);
  if (!opts.orbit_max.empty()) mx = opts.orbit_max;
  double space = 1;
  for (int v : mx) space *= v + 1;
  if (space > double(opts.budget))
    throw MtcError("CapTooLarge", "rank " + std::to_string(n) + " search space " + std::to_string(space) +
                                      " exceeds the node budget " + std::to_string(opts.budget));
  Table t(n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
  for (int j = 0; j < n; ++j) {
    t[0][j][j] = t[j][0][j] = 1;
    t[j][L.dual(j)][0] = 1;
  }
  std::map<std::string, FusionRules> found;
  std::vector<int> v(P, 0);
  long count = 0;
  for (;;) {
    ++count;
    for (int o = 0; o < P; ++o)
      for (const auto& [i, j, k] : orbits[o]) t[i][j][k] = v[o];
    if (associative(t, n)) {
      FusionRules F = FusionRules::from_table(L, t);
      found.emplace(fusion_key(F), F);
    }
    int o = 0;
    while (o < P && ++v[o] > mx[o]) v[o++] = 0;
    if (o == P) break;
  }
  if (visited) *visited += count;
  std::vector<FusionRules> out;
  for (auto& [k, F] : found) out.push_back(std::move(F));
  return out;
}

Eigen::MatrixXcd character_table(const FusionRules& F) {
  const int n = F.rank();
  std::vector<Eigen::MatrixXd> N;
  for (int i = 0; i < n; ++i) N.push_back(dmat(F.N(i)));
  for (int attempt = 0; attempt < 6; ++attempt) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) M += std::sqrt(2.0 + i + 7 * attempt) / (1 + std::numbers::pi * i) * N[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M.cast<std::complex<double>>());
    if (es.info() != Eigen::Success) continue;
    Eigen::MatrixXcd lam(n, n);
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      Eigen::VectorXcd v = es.eigenvectors().col(a);
      v /= v.norm();
      for (int i = 0; i < n && ok; ++i) {
        Eigen::VectorXcd w = N[i].cast<std::complex<double>>() * v;
        lam(i, a) = v.dot(w);
        ok = (w - lam(i, a) * v).norm() < 1e-8 * (1 + std::abs(lam(i, a)));
      }
    }
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b) ok = (lam.col(a) - lam.col(b)).norm() > 1e-6;
    if (!ok) continue;
    // deterministic column order
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    auto key = [&](int a) {
      std::vector<std::pair<double, double>> k;
      for (int i = 0; i < n; ++i) k.emplace_back(std::round(lam(i, a).real() * 1e6), std::round(lam(i, a).imag() * 1e6));
      return k;
    };
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return key(a) > key(b); });
    Eigen::MatrixXcd out(n, n);
    for (int a = 0; a < n; ++a) out.col(a) = lam.col(idx[a]);
    return out;
  }
  throw MtcError("NotSemisimple", "could not separate the characters of the fusion ring");
}

int fp_character(const Eigen::MatrixXcd& lam) {
  int best = -1;
  double best_sum = -1;
  for (int a = 0; a < lam.cols(); ++a) {
    bool pos = true;
    double s = 0;
    for (int i = 0; i < lam.rows(); ++i) {
      pos = pos && std::abs(lam(i, a).imag()) < 1e-9 && lam(i, a).real() > 1 - 1e-9;
      s += lam(i, a).real();
    }
    if (pos && s > best_sum) {
      best = a;
      best_sum = s;
    }
  }
  if (best < 0) throw MtcError("NotSemisimple", "no Frobenius-Perron character");
  return best;
}

std::vector<Eigen::MatrixXcd> numeric_stilde(const FusionRules& F, bool unitary_only, double tol) {
  const int n = F.rank();
  const auto& L = F.labels();
  const Eigen::MatrixXcd lam = character_table(F);
  std::vector<int> zero_cols;
  if (unitary_only) {
    zero_cols.push_back(fp_character(lam));
  } else {
    for (int a = 0; a < n; ++a) {
      bool ok = true;
      for (int i = 0; i < n; ++i) ok = ok && std::abs(lam(i, a).imag()) < 1e-9 && std::abs(lam(i, a)) > 1e-9;
      if (ok) zero_cols.push_back(a);
    }
  }
  std::vector<Eigen::MatrixXcd> out;
  std::set<std::string> seen;
  for (int c0 : zero_cols) {
    std::vector<int> rest;
    for (int a = 0; a < n; ++a)
      if (a != c0) rest.push_back(a);
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = lam(i, c0).real();
    do {
      std::vector<int> pi{c0};
      pi.insert(pi.end(), rest.begin(), rest.end());
      Eigen::MatrixXcd S(n, n);
      for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a) S(i, a) = lam(i, pi[a]) * d[a];
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          ok = std::abs(S(i, j) - S(j, i)) < tol && std::abs(S(i, L.dual(j)) - std::conj(S(i, j))) < tol;
      if (!ok) continue;
      double D2 = 0;
      for (int i = 0; i < n; ++i) D2 += d[i] * d[i];
      if ((S * S.adjoint() - D2 * Eigen::MatrixXcd::Identity(n, n)).norm() > tol * D2) continue;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          for (int k = 0; k < n && ok; ++k) {
            std::complex<double> v = 0;
            for (int a = 0; a < n; ++a) v += S(i, a) * S(j, a) * std::conj(S(k, a)) / S(0, a);
            v /= D2;
            ok = std::abs(v - double(F.ni(i, j, k))) < 1e-6;
          }
      if (!ok) continue;
      if (seen.insert(stilde_key(L, S)).second) out.push_back(S);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

std::vector<Cyclotomic> real_cyclotomic_integers(double value, long M, double tol) {
  std::vector<std::pair<double, Cyclotomic>> hits;
  const long phi = euler_phi(M);
  if (M <= 2 || phi <= 2) {
    const double r = std::round(value);
    if (std::abs(r - value) < tol) return {Cyclotomic(static_cast<long>(r))};
    return {};
  }
  const int m = static_cast<int>(phi / 2);
  std::vector<double> eta(m);
  for (int k = 1; k < m; ++k) eta[k] = 2 * std::cos(2 * std::numbers::pi * k / double(M));
  int B = 6;
  while (B > 1 && std::pow(2 * B + 1, m - 1) > 2e6) --B;
  std::vector<int> c(m, -B);
  c[0] = 0;
  for (;;) {
    double s = 0;
    for (int k = 1; k < m; ++k) s += c[k] * eta[k];
    const double c0 = std::round(value - s);
    const double res = std::abs(value - s - c0);
    if (res < tol) {
      Cyclotomic x(static_cast<long>(c0));
      for (int k = 1; k < m; ++k)
        if (c[k]) x += (Cyclotomic::zeta(M, k) + Cyclotomic::zeta(M, M - k)).scaled(Rational(c[k]));
      hits.emplace_back(res, x);
    }
    int k = 1;
    while (k < m && ++c[k] > B) c[k++] = -B;
    if (k >= m) break;
  }
  std::stable_sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Cyclotomic> out;
  for (auto& h : hits) out.push_back(minimize_conductor(h.second));
  return out;
}

std::string stilde_key(const LabelSet& L, const Eigen::MatrixXcd& S) {
  std::string best;
  relabelings(L, [&](const std::vector<int>& p, std::string k) {
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = 0; j < p.size(); ++j) k += cnum(S(p[i], p[j]));
    if (best.empty() || k < best) best = k;
  });
  return best;
}

std::string stilde_key(const SMatrixTilde& S) { return stilde_key(S.labels(), to_complex(S.matrix())); }

RingSymbols symbols_on_ring(const FusionRules& F, bool unitary_only, const TwistOptions& opts) {
  RingSymbols out{F, {}, {}, 0, 0, {}};
  const int n = F.rank();
  const auto& L = F.labels();
  std::set<std::string> keys;
  for (const auto& S : numeric_stilde(F, unitary_only)) {
    ++out.numeric_candidates;
    if (is_real(S, 1e-9) && !twist_inequalities_hold(S.real())) continue;
    long mod = 1;
    std::vector<std::vector<long>> cands;
    try {
      cands = numeric_twist_candidates(F, S, opts, &mod);
    } catch (const MtcError& e) {
      out.notes.push_back(e.what());
      continue;
    }
    if (cands.empty()) continue;
    ++out.twist_candidates;
    bool identified = false;
    for (const auto& x : cands) {
      long g = mod;
      for (long v : x) g = std::gcd(g, v);
      const long M = mod / g;
      TwistVector th;
      for (long v : x) th.push_back(exp2pii(Rational(v) / Rational(mod)));
      // exact dimensions, label by label
      std::vector<std::vector<Cyclotomic>> opts_d(n);
      bool any_missing = false;
      for (int i = 0; i < n; ++i) {
        opts_d[i] = real_cyclotomic_integers(S(i, 0).real(), M);
        if (opts_d[i].empty()) any_missing = true;
        if (opts_d[i].size() > 4) opts_d[i].resize(4);
      }
      if (any_missing) continue;
      std::vector<size_t> pick(n, 0);
      for (;;) {
        std::vector<Cyclotomic> d;
        for (int i = 0; i < n; ++i) d.push_back(opts_d[i][pick[i]]);
        CMatrix s(n, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            Cyclotomic acc(0);
            for (int k = 0; k < n; ++k)
              if (F.ni(L.dual(i), j, k)) acc += d[k] * th[k] * Cyclotomic(F.ni(L.dual(i), j, k));
            s(i, j) = conj(th[i] * th[j]) * acc;
          }
        if ((to_complex(s) - S).cwiseAbs().maxCoeff() < 1e-6) {
          try {
            SMatrixTilde st(L, s);
            if (st.validate().ok() && verlinde(st) == F) {
              auto sols = solve_twists(st, opts);
              if (!sols.empty()) {
                identified = true;
                if (keys.insert(stilde_key(st)).second) {
                  out.stilde.push_back(st);
                  out.twists.push_back(std::move(sols));
                }
              }
            }
          } catch (const MtcError&) {
          }
        }
        if (identified) break;
        int i = 0;
        while (i < n && ++pick[i] == opts_d[i].size()) pick[i++] = 0;
        if (i == n) break;
      }
      if (identified) break;
    }
    if (!identified) out.notes.push_back("numeric S~ " + stilde_key(L, S) + " has numeric twists but no exact symbol");
  }
  return out;
}

std::string BoundedCandidate::diagnosis() const {
  std::string s = "ring";
  s += fp_bound ? ", FP bound" : ", FP bound fails";
  if (!fp_bound) return s;
  s += stilde ? ", unitary S~" : ", no unitary S~";
  if (!stilde) return s;
  s += twists ? ", twists" : ", no twists";
  return s;
}

std::vector<FusionRules> BoundedResult::survivors() const {
  std::vector<FusionRules> out;
  for (const auto& c : candidates)
    if (c.survivor()) out.push_back(c.fusion);
  return out;
}

BoundedResult bounded_enumeration(const Rational& cap, long budget, const TwistOptions& opts) {
  if (cap < Rational(1)) throw MtcError("InvalidCap", "cap must be at least 1");
  BoundedResult out;
  out.cap = cap;
  const Rational c2 = cap * cap;
  const double c2d = c2.to_double(), c3d = (c2 * cap).to_double();
  const int nmax = static_cast<int>(std::floor(c2d + 1e-12));
  out.max_rank = nmax;
  struct Job {
    LabelSet L;
    RingSearchOptions o;
  };
  std::vector<Job> jobs;
  double space = 0;
  for (int n = 1; n <= nmax; ++n) {
    const double dmax2 = c2d - (n - 1);
    const int E = static_cast<int>(std::floor(std::min(c3d, dmax2) + 1e-12));
    for (const auto& L : duality_classes(n)) {
      RingSearchOptions o;
      o.max_entry = E;
      o.budget = budget;
      double s = 1;
      for (size_t p = 0; p < fusion_parameter_orbits(L).size(); ++p) s *= E + 1;
      space += s;
      jobs.push_back({L, o});
    }
  }
  if (space > double(budget))
    throw MtcError("CapTooLarge", "cap " + cap.str() + " needs about " + std::to_string(static_cast<long>(space)) +
                                      " nodes, budget " + std::to_string(budget));
  for (const auto& job : jobs) {
    for (auto& F : fusion_rings(job.L, job.o, &out.nodes)) {
      BoundedCandidate c{F};
      const Eigen::MatrixXcd lam = character_table(F);
      const int fp = fp_character(lam);
      for (int i = 0; i < F.rank(); ++i) c.fp_dim_sq += std::norm(lam(i, fp));
      c.fp_bound = c.fp_dim_sq <= c2d + 1e-9;
      if (c.fp_bound) {
        c.stilde = !numeric_stilde(F, true).empty();
        if (c.stilde) c.twists = !symbols_on_ring(F, true, opts).stilde.empty();
      }
      out.candidates.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace mtc
