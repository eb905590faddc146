#include "mtckit/classify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "mtckit/catalog.hpp"
#include "mtckit/galois.hpp"

namespace mtc {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double x, int prec = 6) {
  std::ostringstream os;
  os.precision(prec);
  os << x;
  return os.str();
}

double total_D(const SMatrixTilde& S) {
  double s = 0;
  for (int i = 0; i < S.rank(); ++i) s += std::norm(to_complex(S.d(i)));
  return std::sqrt(s);
}

bool unitary_stilde(const SMatrixTilde& S, const FusionRules& F) {
  const Eigen::MatrixXcd lam = character_table(F);
  const int fp = fp_character(lam);
  for (int i = 0; i < S.rank(); ++i)
    if (std::abs(to_complex(S.d(i)) - lam(i, fp)) > 1e-9) return false;
  return true;
}

std::map<std::string, std::string> family_index() {
  std::map<std::string, std::string> m;
  for (const auto& f : reference_families())
    for (const auto& s : f.members) m[stilde_key(s)] = f.name;
  return m;
}

int family_order(const std::string& name) {
  const auto& fams = reference_families();
  for (size_t i = 0; i < fams.size(); ++i)
    if (fams[i].name == name) return static_cast<int>(i);
  return static_cast<int>(fams.size());
}

// Symbol-level acceptance used for transcribed T columns.
bool symbol_ok(const SMatrixTilde& S, const TwistVector& th) {
  try {
    ModularSymbol sym{verlinde(S), S, 1, th};
    return check_modular_symbol(sym).ok() && twist_ring_identity(sym).ok() && vafa_check(sym).ok() &&
           fs_check(sym).ok();
  } catch (const MtcError&) {
    return false;
  }
}

std::string pair_key(const SMatrixTilde& S, const TwistVector& th) {
  return canonical_key(ModularSymbol{verlinde(S), S, 1, th}, false);
}

struct Collector {
  std::map<std::string, std::pair<SMatrixTilde, std::vector<TwistVector>>> found;

  void add(const SMatrixTilde& S, const std::vector<TwistVector>& th) {
    found.emplace(stilde_key(S), std::make_pair(S, th));
  }
  void add(const RingSymbols& r) {
    for (size_t i = 0; i < r.stilde.size(); ++i) add(r.stilde[i], r.twists[i]);
  }
  std::set<std::string> keys() const {
    std::set<std::string> k;
    for (const auto& [key, v] : found) k.insert(key);
    return k;
  }
};

void finalize(ClassificationResult& r, const Collector& c, Clock::time_point t0) {
  const auto fam = family_index();
  for (const auto& [key, v] : c.found) {
    const auto& [S, th] = v;
    ClassifiedSymbol s{S, verlinde(S)};
    s.unitary = unitary_stilde(S, s.fusion);
    s.D = total_D(S);
    if (r.options.unitary_only && !s.unitary) continue;
    if (r.options.max_D && s.D > *r.options.max_D + 1e-9) continue;
    s.twists = th;
    s.orbits = twist_orbit_count(S, th);
    auto it = fam.find(key);
    s.family = it == fam.end() ? "unlisted" : it->second;
    r.symbols.push_back(std::move(s));
  }
  std::stable_sort(r.symbols.begin(), r.symbols.end(), [](const auto& a, const auto& b) {
    const int fa = family_order(a.family), fb = family_order(b.family);
    if (fa != fb) return fa < fb;
    if (a.unitary != b.unitary) return a.unitary;
    return stilde_key(a.stilde) < stilde_key(b.stilde);
  });
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
}

// Generic cross-check: every ring on the given duality classes, entries <= max_entry.
Collector generic_search(ClassificationResult& r, const std::vector<LabelSet>& classes, bool unitary) {
  Collector c;
  for (const auto& L : classes) {
    RingSearchOptions o;
    o.max_entry = r.options.max_entry;
    o.budget = r.options.budget;
    const auto rings = fusion_rings(L, o, &r.rings_visited);
    r.rings += static_cast<int>(rings.size());
    for (const auto& F : rings) {
      const RingSymbols s = symbols_on_ring(F, unitary, r.options.twists);
      c.add(s);
      for (const auto& n : s.notes) r.trace.push_back("note: " + n);
    }
  }
  return c;
}

void compare_sets(ClassificationResult& r, const Collector& literal, const Collector& generic, const std::string& what) {
  const bool same = literal.keys() == generic.keys();
  r.trace.push_back(what + ": literal derivation gives " + std::to_string(literal.found.size()) +
                    " S~, generic search gives " + std::to_string(generic.found.size()) +
                    (same ? " (identical)" : " (DIFFERENT)"));
  r.crosscheck.add("literal derivation = generic search (" + what + ")", same);
}

std::string label_name(const LabelSet& L, int i) {
  if (i == 0) return "1";
  static const char* letters = "XYZWVUTS";
  int letter = 0;
  for (int j = 1; j < i; ++j)
    if (L.dual(j) >= j) ++letter;
  if (L.dual(i) < i) {
    int base = 0;
    for (int j = 1; j < L.dual(i); ++j)
      if (L.dual(j) >= j) ++base;
    return std::string(1, letters[base]) + "*";
  }
  return std::string(1, letters[letter]);
}

}  // namespace

std::vector<std::string> ClassificationResult::families() const {
  std::vector<std::string> out;
  for (const auto& s : symbols)
    if (std::find(out.begin(), out.end(), s.family) == out.end()) out.push_back(s.family);
  return out;
}

int ClassificationResult::symbol_count() const {
  int n = 0;
  for (const auto& s : symbols)
    if (s.unitary) n += s.orbits;
  return n;
}

ClassificationResult enumerate_rank1(const ClassifyOptions& opts) {
  const auto t0 = Clock::now();
  ClassificationResult r;
  r.rank = 1;
  r.options = opts;
  Collector c;
  CMatrix one(1, 1);
  one(0, 0) = Cyclotomic(1);
  const SMatrixTilde S(LabelSet::self_dual(1), one);
  c.add(S, solve_twists(S, opts.twists));
  r.trace.push_back("rank 1: S~ = (1), T = (1)");
  finalize(r, c, t0);
  return r;
}

ClassificationResult enumerate_rank2(const ClassifyOptions& opts) {
  const auto t0 = Clock::now();
  ClassificationResult r;
  r.rank = 2;
  r.options = opts;
  Collector lit;
  // S~ = [[1,d],[d,-1]], N_1 = [[0,1],[1,m]], d^2 = 1 + m d, theta + 1/theta = -m d
  for (int m = 0; m <= 12; ++m)
    for (int sg : {1, -1}) {
      const double d = (m + sg * std::sqrt(double(m) * m + 4)) / 2, md = m * d;
      std::string line = "m=" + std::to_string(m) + " d=" + fmt(d) + ": ";
      if (std::abs(md) > 2 + 1e-12) {
        r.trace.push_back(line + "|m d| = " + fmt(md) + " > 2, rejected");
        continue;
      }
      // theta + 1/theta has degree <= 2, so theta = e^{p pi i/q} with q <= 6
      int hit_p = -1, hit_q = -1;
      for (int q = 1; q <= 6 && hit_q < 0; ++q)
        for (int p = 0; p < 2 * q && hit_q < 0; ++p)
          if (std::gcd(p, q) == 1 && std::abs(2 * std::cos(p * std::numbers::pi / q) + md) < 1e-12) {
            hit_p = p;
            hit_q = q;
          }
      if (hit_q < 0) {
        r.trace.push_back(line + "no theta = e^{p pi i/q}, q <= 6, with theta + 1/theta = " + fmt(-md) + ", rejected");
        continue;
      }
      const Cyclotomic dd = (Cyclotomic(m) + sqrt_integer(long(m) * m + 4).scaled(Rational(sg))).scaled(Rational(1) / Rational(2));
      CMatrix s(2, 2);
      s << Cyclotomic(1), dd, dd, Cyclotomic(-1);
      const SMatrixTilde S(LabelSet::self_dual(2), s);
      const auto sols = solve_twists(S, opts.twists);
      r.trace.push_back(line + "theta = e^{" + std::to_string(hit_p) + " pi i/" + std::to_string(hit_q) + "}, " +
                        std::to_string(sols.size()) + " twist solutions");
      if (!sols.empty()) lit.add(S, sols);
    }
  const Collector gen = generic_search(r, duality_classes(2), false);
  compare_sets(r, lit, gen, "rank 2");
  finalize(r, lit, t0);
  return r;
}

ClassificationResult enumerate_rank3(bool include_nonselfdual, const ClassifyOptions& opts_in) {
  const auto t0 = Clock::now();
  ClassifyOptions opts = opts_in;
  opts.include_nonselfdual = include_nonselfdual;
  ClassificationResult r;
  r.rank = 3;
  r.options = opts;
  Collector lit;
  const bool unitary = opts.unitary_only;
  const int B = opts.literal_bound;
  const LabelSet sd = LabelSet::self_dual(3);
  int agree = 0, tuples = 0;
  for (int k = 0; k <= B; ++k)
    for (int l = 0; l <= B; ++l)
      for (int m = 0; m <= B; ++m)
        for (int n = 0; n <= B; ++n) {
          if (1 + m * l + k * n != k * k + l * l) continue;
          std::vector<std::vector<std::vector<long>>> t(3, std::vector<std::vector<long>>(3, std::vector<long>(3, 0)));
          for (int j = 0; j < 3; ++j) t[0][j][j] = t[j][0][j] = 1;
          t[1][1][0] = t[2][2][0] = 1;
          t[1][1][1] = m;
          t[1][1][2] = k;
          t[1][2][1] = t[2][1][1] = k;
          t[1][2][2] = t[2][1][2] = l;
          t[2][2][1] = l;
          t[2][2][2] = n;
          const FusionRules F = FusionRules::from_table(sd, t);
          if (!F.validate().ok()) continue;
          ++tuples;
          std::string tag = "(k,l,m,n)=(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m) + "," +
                            std::to_string(n) + ")";
          bool predicted = false;
          std::string why;
          auto alpha_form = [](int k, int l, int m, int n) { return l == 1 && k % 2 == 0 && m == k * k / 2 && n == k / 2; };
          auto p1_reducible = [](int k, int l, int m) {
            for (int x = -std::max(l, 1); x <= std::max(l, 1); ++x) {
              if (x == 0 || (l != 0 && l % x != 0)) continue;
              if (long(x) * x * x - long(l + m) * x * x + long(m * l - k * k - 1) * x + l == 0) return true;
            }
            return false;
          };
          if (l == 0 || k == 0) {
            predicted = l == 0 ? m == 0 : n == 0;
            const std::string br = l == 0 ? "l=0 branch" : "k=0 branch (mirror)";
            why = br + (predicted ? ": d^2 = 2" : ": multiplicity must vanish, rejected");
          } else if (p1_reducible(k, l, m) || p1_reducible(l, k, n)) {
            const bool a1 = alpha_form(k, l, m, n), a2 = alpha_form(l, k, n, m);
            if (a1 || a2) {
              const int alpha = (a1 ? k : l) / 2;
              const double d2 = alpha_family_d2(alpha);
              why = "reducible, alpha=" + std::to_string(alpha) + ": d2 = " + fmt(d2, 8) + " > sqrt(3+sqrt 17) = " +
                    fmt(alpha_family_bound(), 8) + ", rejected";
              predicted = d2 <= alpha_family_bound();
            } else {
              why = "reducible but not of the alpha form, rejected";
            }
          } else {
            predicted = k == 1 && l == 1 && m + n == 1;
            why = predicted ? "irreducible: s~12 = +-1, d1 root of x^3-2x^2-x+1" : "irreducible, not k=l=1, m+n=1: rejected";
          }
          const RingSymbols rs = symbols_on_ring(F, unitary, opts.twists);
          const bool actual = !rs.stilde.empty();
          if (actual == predicted) ++agree;
          r.trace.push_back(tag + ": " + why + "; search finds " + std::to_string(rs.stilde.size()) + " S~" +
                            (actual == predicted ? "" : " (DISAGREES)"));
          lit.add(rs);
        }
  r.crosscheck.add("(k,l,m,n) case verdicts match the search", agree == tuples,
                   std::to_string(agree) + "/" + std::to_string(tuples) + " tuples");

  std::vector<LabelSet> classes{sd};
  if (include_nonselfdual) {
    const LabelSet L({0, 2, 1});
    classes.push_back(L);
    // d is an integer, 1 - 2d^2 + theta + 1/theta = 0 forces 2d^2 <= 3, then 1 + x + conj(x) = 0 with |x| = 1
    for (int d : {-1, 1}) {
      for (int k : {1, 2}) {
        const Cyclotomic x = Cyclotomic::zeta(3, k), D(d);
        CMatrix s(3, 3);
        s << Cyclotomic(1), D, D, D, x, conj(x), D, conj(x), x;
        const SMatrixTilde S(L, s);
        std::string tag = "non-self-dual d=" + std::to_string(d) + " x=" + x.str() + ": ";
        try {
          if (!S.validate().ok()) throw MtcError("NotAnSMatrix", S.validate().first_failure()->name);
          verlinde(S);
          const auto sols = solve_twists(S, opts.twists);
          r.trace.push_back(tag + std::to_string(sols.size()) + " twist solutions");
          if (!sols.empty()) lit.add(S, sols);
        } catch (const MtcError& e) {
          r.trace.push_back(tag + "rejected, " + e.what());
        }
      }
    }
  }
  const Collector gen = generic_search(r, classes, unitary);
  // the tuple scan runs past the generic multiplicity bound, so compare within it
  Collector lit_bounded;
  for (const auto& [key, v] : lit.found) {
    const auto tab = verlinde(v.first).table();
    long mx = 0;
    for (const auto& a : tab)
      for (const auto& b : a)
        for (long c : b) mx = std::max(mx, c);
    if (mx <= opts.max_entry) lit_bounded.found.emplace(key, v);
  }
  if (lit_bounded.found.size() != lit.found.size())
    r.trace.push_back("literal symbols with multiplicity above " + std::to_string(opts.max_entry) + ": " +
                      std::to_string(lit.found.size() - lit_bounded.found.size()));
  if (unitary) {
    Collector u;
    for (const auto& [key, v] : lit_bounded.found)
      if (unitary_stilde(v.first, verlinde(v.first))) u.found.emplace(key, v);
    lit_bounded = u;
  }
  compare_sets(r, lit_bounded, gen, include_nonselfdual ? "rank 3, both dualities" : "rank 3, self-dual");
  finalize(r, lit, t0);
  return r;
}

ClassificationResult enumerate_rank4_unitary(const ClassifyOptions& opts_in) {
  const auto t0 = Clock::now();
  ClassifyOptions opts = opts_in;
  opts.unitary_only = true;
  ClassificationResult r;
  r.rank = 4;
  r.options = opts;
  const Collector gen = generic_search(r, duality_classes(4, opts.include_nonselfdual), true);

  if (opts.include_nonselfdual) {
    // Labels 1, Y, X, X* with the seven multiplicities n1..n7 of the non-self-dual analysis.
    const LabelSet L({0, 1, 3, 2});
    const int B = opts.max_entry;
    int tuples = 0, agree = 0;
    Collector z4;
    for (int n1 = 0; n1 <= B; ++n1)
      for (int n2 = 0; n2 <= B; ++n2)
        for (int n3 = 0; n3 <= B; ++n3)
          for (int n4 = 0; n4 <= B; ++n4)
            for (int n5 = 0; n5 <= B; ++n5)
              for (int n6 = 0; n6 <= B; ++n6)
                for (int n7 = 0; n7 <= B; ++n7) {
                  if (1 + n1 * n3 + n2 * (n5 + n7) != n2 * n2 + n3 * n3 + n4 * n4) continue;
                  if (n1 * n4 + n2 * (n6 + n7) != n2 * n2 + 2 * n3 * n4) continue;
                  if (n1 * n4 + n2 * (n5 + n6) != n2 * n2 + 2 * n3 * n4) continue;
                  if (n2 * n4 + n4 * n6 != n2 * n3 + n4 * n5 || n5 != n7) continue;
                  if (n4 * n4 + n6 * n6 != 1 + n3 * n3 + n7 * n7) continue;
                  const long Y = 1, X = 2, Xs = 3;
                  std::vector<std::vector<std::vector<long>>> t(4, std::vector<std::vector<long>>(4, std::vector<long>(4, 0)));
                  for (int j = 0; j < 4; ++j) t[0][j][j] = t[j][0][j] = 1;
                  auto row = [&](long i, long j, std::array<long, 4> v) {
                    for (int c = 0; c < 4; ++c) t[i][j][c] = v[c];
                  };
                  row(Y, Y, {1, n1, n2, n2});
                  row(Y, X, {0, n2, n3, n4});
                  row(Y, Xs, {0, n2, n4, n3});
                  row(X, Y, {0, n2, n3, n4});
                  row(X, X, {0, n4, n5, n6});
                  row(X, Xs, {1, n3, n7, n7});
                  row(Xs, Y, {0, n2, n4, n3});
                  row(Xs, X, {1, n3, n7, n7});
                  row(Xs, Xs, {0, n4, n6, n5});
                  const FusionRules F = FusionRules::from_table(L, t);
                  if (!F.validate().ok()) continue;
                  ++tuples;
                  const bool is_z4 = n1 == 0 && n2 == 0 && n3 == 0 && n4 == 1 && n5 == 0 && n6 == 0 && n7 == 0;
                  std::string why;
                  if (n4 == 0)
                    why = "n4=0: the rank-3 subcategory argument rules it out";
                  else if (n2 == 0)
                    why = is_z4 ? "n2=0: Z4 fusion rule" : "n2=0: forces the Z4 rule, rejected";
                  else if (n4 == n3 || n5 == n6)
                    why = "n4=n3 or n5=n6: contradiction";
                  else
                    why = "n2, n4 nonzero, n4 != n3, n5 != n6: excluded by the Galois degree argument";
                  const RingSymbols rs = symbols_on_ring(F, true, opts.twists);
                  const bool actual = !rs.stilde.empty();
                  if (actual == is_z4) ++agree;
                  z4.add(rs);
                  char tag[96];
                  std::snprintf(tag, sizeof tag, "(n1..n7)=(%d,%d,%d,%d,%d,%d,%d)", n1, n2, n3, n4, n5, n6, n7);
                  r.trace.push_back(std::string(tag) + ": " + why + "; search finds " + std::to_string(rs.stilde.size()) +
                                    " S~" + (actual == is_z4 ? "" : " (DISAGREES)"));
                }
    r.crosscheck.add("non-self-dual n1..n7 verdicts match the search (only Z4 survives)", agree == tuples,
                     std::to_string(agree) + "/" + std::to_string(tuples) + " tuples");
    Collector gen_nsd;
    for (const auto& [key, v] : gen.found)
      if (!v.first.labels().all_self_dual()) gen_nsd.found.emplace(key, v);
    compare_sets(r, z4, gen_nsd, "rank 4, non-self-dual");
  }
  r.trace.push_back("generic search: " + std::to_string(r.rings) + " rank-4 rings with multiplicities <= " +
                    std::to_string(opts.max_entry) + ", " + std::to_string(r.rings_visited) + " assignments");
  finalize(r, gen, t0);
  return r;
}

ClassificationResult classify_rank(int rank, const ClassifyOptions& opts) {
  switch (rank) {
    case 1:
      return enumerate_rank1(opts);
    case 2:
      return enumerate_rank2(opts);
    case 3:
      return enumerate_rank3(opts.include_nonselfdual, opts);
    case 4: {
      if (opts.unitary_only) return enumerate_rank4_unitary(opts);
      // exploratory: non-unitary characters allowed, no completeness claim
      const auto t0 = Clock::now();
      ClassificationResult r;
      r.rank = 4;
      r.options = opts;
      r.exploratory = true;
      const Collector gen = generic_search(r, duality_classes(4, opts.include_nonselfdual), false);
      r.trace.push_back("exploratory non-unitary rank-4 run; completeness is not claimed");
      finalize(r, gen, t0);
      return r;
    }
    default:
      throw MtcError("UnsupportedRank", "classification covers ranks 1 to 4, got " + std::to_string(rank));
  }
}

std::string fusion_text(const FusionRules& F) {
  const int n = F.rank();
  const auto& L = F.labels();
  std::string out;
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::string rhs;
      for (int k = 0; k < n; ++k) {
        const long c = F.ni(i, j, k);
        if (!c) continue;
        if (!rhs.empty()) rhs += "+";
        if (c > 1) rhs += std::to_string(c);
        rhs += label_name(L, k);
      }
      if (!out.empty()) out += ", ";
      out += label_name(L, i) + (i == j ? "^2" : label_name(L, j)) + "=" + rhs;
    }
  return out;
}

std::string twist_text(const TwistVector& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + minimize_conductor(t[i]).str();
  return s + ")";
}

std::string stilde_text(const SMatrixTilde& S) {
  std::string s = "[";
  for (int i = 0; i < S.rank(); ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < S.rank(); ++j) s += (j ? ", " : "") + minimize_conductor(S(i, j)).str();
  }
  return s + "]";
}

std::vector<FamilyRow> family_rows(const ClassificationResult& r) {
  std::vector<FamilyRow> rows;
  for (const auto& name : r.families()) {
    FamilyRow row;
    row.family = name;
    const ClassifiedSymbol* rep = nullptr;
    for (const auto& s : r.symbols) {
      if (s.family != name) continue;
      ++row.members;
      if (!rep) rep = &s;
      if (!s.unitary) continue;
      if (!rep->unitary) rep = &s;
      ++row.unitary_members;
      row.count += s.orbits;
      for (const auto& t : s.twists) row.twists.push_back(twist_text(t));
    }
    row.fusion = fusion_text(rep->fusion);
    row.galois = galois_group(rep->stilde).structure();
    AnyonTheory t{name, {}, rep->fusion, rep->stilde, 1, rep->twists.front()};
    for (int i = 0; i < rep->stilde.rank(); ++i) t.label_names.push_back(label_name(rep->stilde.labels(), i));
    row.prime = primality(t).prime;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string classification_report(const ClassificationResult& r) {
  std::ostringstream os;
  os << "rank " << r.rank << (r.options.unitary_only ? " unitary" : "")
     << (r.options.include_nonselfdual ? "" : " self-dual only") << (r.exploratory ? " (exploratory)" : "") << "\n";
  for (const auto& row : family_rows(r)) {
    os << "family " << row.family << ": " << row.members << " S~ (" << row.unitary_members << " unitary)\n";
    os << "  fusion  " << row.fusion << "\n";
    for (const auto& s : r.symbols)
      if (s.family == row.family)
        os << "  S~      " << stilde_text(s.stilde) << (s.unitary ? "  unitary" : "") << ", D = " << fmt(s.D, 8)
           << ", " << s.twists.size() << " T, " << s.orbits << " up to relabeling\n";
    std::string ts;
    for (const auto& t : row.twists) ts += (ts.empty() ? "" : " ") + t;
    os << "  T       " << ts << "\n";
    os << "  #=" << row.count << " P=" << (row.prime ? "Yes" : "No") << " G=" << row.galois << "\n";
  }
  os << "families: " << r.families().size() << ", symbols: " << r.symbol_count() << " (" << r.rings
     << " fusion rings searched, " << fmt(r.seconds, 3) << " s)\n";
  return os.str();
}

Report diff_paper(const ClassificationResult& r) {
  Report rep;
  rep.subject = "classification rank " + std::to_string(r.rank) + " vs transcribed families";
  std::map<std::string, const ClassifiedSymbol*> computed;
  for (const auto& s : r.symbols) computed[stilde_key(s.stilde)] = &s;
  std::set<std::string> claimed;
  for (const auto& fam : reference_families()) {
    if (fam.rank != r.rank) continue;
    if (!fam.self_dual() && !r.options.include_nonselfdual) continue;
    // expected members under the run's filters
    std::set<std::string> want, got;
    std::vector<const SMatrixTilde*> unitary_members;
    for (const auto& m : fam.members) {
      const bool u = unitary_stilde(m, verlinde(m));
      if (r.options.unitary_only && !u) continue;
      if (r.options.max_D && total_D(m) > *r.options.max_D + 1e-9) continue;
      want.insert(stilde_key(m));
      if (u) unitary_members.push_back(&m);
    }
    if (want.empty()) continue;
    for (const auto& s : r.symbols)
      if (s.family == fam.name) got.insert(stilde_key(s.stilde));
    claimed.insert(want.begin(), want.end());
    rep.add(fam.name + ": S~ members", want == got,
            std::to_string(got.size()) + " computed, " + std::to_string(want.size()) + " transcribed");
    for (const auto& ex : fam.excluded) {
      bool rejected = false;
      try {
        rejected = !symbol_ok(ex.stilde, TwistVector(ex.stilde.rank(), Cyclotomic(1))) &&
                   solve_twists(ex.stilde, r.options.twists).empty();
      } catch (const MtcError&) {
        rejected = true;
      }
      rep.add(fam.name + ": excluded member absent", rejected && !computed.count(stilde_key(ex.stilde)), ex.reason);
    }
    // fusion rule column
    std::string fk;
    for (const auto& s : r.symbols)
      if (s.family == fam.name) fk = fusion_key(s.fusion);
    rep.add(fam.name + ": fusion rules", fk == fusion_key(fam.fusion), fusion_text(fam.fusion));
    if (unitary_members.empty()) continue;
    // "#", T, P, G on unitary members
    int count = 0;
    std::set<std::string> got_T, want_T;
    const ClassifiedSymbol* rep_sym = nullptr;
    for (const auto& s : r.symbols) {
      if (s.family != fam.name || !s.unitary) continue;
      if (!rep_sym) rep_sym = &s;
      count += s.orbits;
      for (const auto& t : s.twists) got_T.insert(pair_key(s.stilde, t));
    }
    rep.add(fam.name + ": #", count == fam.count,
            "computed " + std::to_string(count) + ", transcribed " + std::to_string(fam.count));
    std::string unpaired;
    for (const auto& t : fam.twists) {
      bool paired = false;
      for (const auto* m : unitary_members)
        if (symbol_ok(*m, t)) {
          want_T.insert(pair_key(*m, t));
          paired = true;
        }
      if (!paired) unpaired += twist_text(t) + " ";
    }
    rep.add(fam.name + ": T column", want_T == got_T && unpaired.empty(),
            std::to_string(got_T.size()) + " computed, " + std::to_string(want_T.size()) + " transcribed" +
                (unpaired.empty() ? "" : "; not a symbol with any member: " + unpaired));
    if (!rep_sym) continue;
    const std::string g = galois_group(rep_sym->stilde).structure();
    rep.add(fam.name + ": G", g == fam.galois, "computed " + g + ", transcribed " + fam.galois);
    for (const auto& row : family_rows(r))
      if (row.family == fam.name)
        rep.add(fam.name + ": P", row.prime == fam.prime,
                std::string("computed ") + (row.prime ? "Yes" : "No") + ", transcribed " + (fam.prime ? "Yes" : "No"));
  }
  std::string extra;
  for (const auto& [key, s] : computed)
    if (!claimed.count(key)) extra += stilde_text(s->stilde) + " ";
  rep.add("no unlisted S~", extra.empty(), extra);
  rep.merge(r.crosscheck, "cross-check: ");
  return rep;
}

}  // namespace mtc
