// One pass/fail line per acceptance criterion, with runtimes against their limits.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "mtckit/catalog.hpp"
#include "mtckit/classify.hpp"
#include "mtckit/fsymbols.hpp"
#include "mtckit/galois.hpp"

using namespace mtc;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void need(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

Rational q(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }

Outcome catalog_integrity() {
  Outcome o;
  const std::map<std::string, Rational> charges{
      {"ising", q(1, 2)}, {"fibonacci", q(14, 5)}, {"a1k5half", q(48, 7)}, {"a1k7half", q(10, 3)},
      {"z4", q(1)},       {"toric", q(0)},         {"d4l1", q(4)},         {"semion", q(1)},
      {"z3", q(2)},       {"a1k2", q(3, 2)}};
  std::set<std::string> minus_one;
  for (const auto& n : catalog_names()) {
    const AnyonTheory t = get(n);
    const ModularSymbol s = t.symbol();
    o.need(verlinde(t.stilde) == t.fusion, n + " verlinde");
    o.need(check_eigen_relation(t.stilde, t.fusion).ok(), n + " eigen relation");
    o.need(check_modular_symbol(s).ok(), n + " twist equation / balance");
    o.need(twist_ring_identity(s).ok(), n + " twist ring identity");
    o.need(vafa_check(s).ok(), n + " vafa");
    o.need(fs_check(s).ok(), n + " FS indicators");
    const auto nu = fs_indicators(s);
    for (int i = 0; i < t.rank(); ++i)
      if (nu[i] == -1) minus_one.insert(n + ":" + t.label_names[i]);
    o.need(central_charge(s) == charges.at(n), n + " central charge");
    o.need(t.central_charge == charges.at(n), n + " stored central charge");
    o.need(charge_residual(t) < hp::Real("1e-20"), n + " D+/D residual");
  }
  o.need(minus_one == std::set<std::string>{"semion:s", "a1k2:sigma"}, "FS = -1 exactly on semion s, (A1,2) sigma");
  std::string m;
  for (const auto& x : minus_one) m += x + " ";
  o.note("nu = -1 at " + m);
  return o;
}

Outcome galois_suite_all() {
  Outcome o;
  std::string gs;
  for (const auto& f : reference_families()) {
    const SMatrixTilde* u = nullptr;
    for (const auto& m : f.members)
      if (is_unitary_symbol(make_symbol(m, TwistVector(m.rank(), Cyclotomic(1))))) u = &m;
    if (!u) u = &f.members.front();
    const GaloisGroup G = galois_group(*u);
    o.need(G.structure() == f.galois, f.name + " G = " + f.galois + " (computed " + G.structure() + ")");
    gs += G.structure() + " ";
  }
  o.note("G per row: " + gs);
  for (const auto& n : catalog_names()) {
    const ModularSymbol s = get(n).symbol();
    const GaloisGroup G = galois_group(s.stilde);
    o.need(verify_action_identities(G, s.stilde).ok(), n + " action identities");
    o.need(parity_check(G, s.stilde).ok(), n + " parity law");
    for (int a = 0; a < G.order(); ++a)
      for (int b = 0; b < G.order(); ++b) o.need(G.table[a][b] == G.table[b][a], n + " abelian");
    for (const auto& g : G.elements) o.need(twist_fixedpoint_sum(s, g).ok(), n + " fixed-point sum");
    o.need(galois_suite(s).ok(), n + " suite");
  }
  return o;
}

Outcome classification() {
  Outcome o;
  std::vector<int> counts;
  for (int rank = 2; rank <= 4; ++rank) {
    ClassifyOptions opts;
    opts.unitary_only = rank == 4;
    const ClassificationResult r = classify_rank(rank, opts);
    const Report d = diff_paper(r);
    o.need(d.ok(), "rank " + std::to_string(rank) + " diff: " + (d.ok() ? "" : d.first_failure()->name));
    for (const auto& row : family_rows(r)) counts.push_back(row.count);
  }
  o.need(counts == std::vector<int>{2, 2, 2, 8, 2, 4, 2, 3, 4, 3, 2}, "# column 2,2,2,8,2,4,2,3,4,3,2");
  std::string c;
  for (int x : counts) c += std::to_string(x) + ",";
  o.note("# = " + c.substr(0, c.size() - 1));
  return o;
}

Outcome counting() {
  Outcome o;
  const CountResult c = count_umtcs(4);
  std::map<int, std::vector<int>> by_rank;
  for (const auto& r : c.rules) {
    by_rank[r.rank].push_back(r.mtcs);
    o.need(r.mtcs == r.expected, r.fusion_rule);
  }
  o.need(by_rank[1] == std::vector<int>{2}, "rank 1: 2");
  o.need(by_rank[2] == std::vector<int>{4, 4}, "rank 2: 4+4");
  o.need(by_rank[3] == std::vector<int>{4, 16, 4}, "rank 3: 4+16+4");
  o.need(by_rank[4] == std::vector<int>{10, 8, 8, 4, 6}, "rank 4: 10+8+8+4+6");
  o.need(c.total == 70, "total 70");
  o.need(c.up_to_sign == 35, "35 up to S -> -S");
  o.note("total " + std::to_string(c.total) + ", " + std::to_string(c.up_to_sign) + " up to S -> -S");
  return o;
}

Outcome pentagon_hexagon() {
  Outcome o;
  int n_f = 0;
  double worst = 0;
  for (const auto& n : catalog_names()) {
    const AnyonTheory t = get(n);
    if (!t.F) continue;
    ++n_f;
    const ResidualReport p = verify_pentagon(t, 128), h = verify_hexagon(t, 128);
    o.need(p.report.ok() && p.max_residual < 1e-20, n + " pentagon");
    o.need(h.report.ok() && h.max_residual < 1e-20, n + " hexagon");
    worst = std::max({worst, p.max_residual, h.max_residual});
    const AnyonTheory m = mutate_f(t);
    o.need(!(verify_pentagon(m, 128).report.ok() && verify_hexagon(m, 128).report.ok()), n + " mutation detected");
  }
  o.need(n_f == 8, "8 theories with F data");
  std::ostringstream os;
  os << n_f << " theories, max residual " << worst;
  o.note(os.str());
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const Rational cap = q(21, 10);
  const BoundedResult b = bounded_enumeration(cap);
  const double c = cap.to_double();
  for (const auto& cand : b.candidates) {
    o.need(cand.fusion.rank() <= c * c, "n <= cap^2");
    for (const auto& x : cand.fusion.table())
      for (const auto& y : x)
        for (long v : y) o.need(v <= c * c * c, "n_ij^k <= cap^3");
  }
  std::set<std::string> surv_le3, surv_all, fam_le3, fam_all;
  for (const auto& f : b.survivors()) {
    surv_all.insert(fusion_key(f));
    if (f.rank() <= 3) surv_le3.insert(fusion_key(f));
  }
  for (const auto& f : reference_families()) {
    bool small = false;
    for (const auto& m : f.members) {
      const ModularSymbol s = make_symbol(m, TwistVector(m.rank(), Cyclotomic(1)));
      if (is_unitary_symbol(s) && std::sqrt(to_complex(m.Dsq()).real()) <= c + 1e-12) small = true;
    }
    if (!small) continue;
    fam_all.insert(fusion_key(f.fusion));
    if (f.rank <= 3) fam_le3.insert(fusion_key(f.fusion));
  }
  o.need(surv_le3 == fam_le3, "rank <= 3 survivors = rank <= 3 families with D <= 2.1");
  o.need(surv_all == fam_all, "all survivors = all families with D <= 2.1");
  o.note(std::to_string(surv_le3.size()) + " rank<=3 survivors; " + std::to_string(surv_all.size() - surv_le3.size()) +
         " rank-4 survivors (Z4, Z2xZ2) also match the rank-4 families with D = 2; " + std::to_string(b.nodes) +
         " nodes");
  return o;
}

Outcome congruence() {
  Outcome o;
  for (const auto& n : catalog_names()) o.need(congruence_relations(get(n)).ok(), n);
  const Report a7 = congruence_relations(get("a1k7half"));
  bool seen = false;
  for (const auto& c : a7.checks) seen = seen || (c.name == "(T^4 S T^5 S)^2 = I" && c.pass);
  o.need(seen, "a1k7half (T^4 S T^5 S)^2 = I");
  const Report f = congruence_relations(get("fibonacci"));
  seen = false;
  for (const auto& c : f.checks) seen = seen || (c.name == "T^5 = I" && c.pass);
  o.need(seen, "fibonacci T^5 = I");
  return o;
}

Outcome temperley_lieb() {
  Outcome o;
  for (int k : {5, 7}) {
    const Report r = tl_crosscheck(k);
    o.need(r.ok(), "level " + std::to_string(k));
    for (const auto& c : r.checks)
      if (c.name.rfind("central charge 1", 0) == 0) o.note("k=" + std::to_string(k) + ": " + c.name);
  }
  o.need(tl_generator(5).central_charge == q(48, 7), "c_5 = 48/7");
  o.need(tl_generator(7).central_charge == q(10, 3), "c_7 = 10/3");
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(7);
  const std::vector<long> ns{1, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24};
  auto elem = [&](long N) {
    std::vector<Rational> raw(N);
    for (auto& x : raw) x = rng() % 3 ? q(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4) : q(0);
    return Cyclotomic::from_exponent_coeffs(N, raw);
  };
  auto unit = [&](long N) {
    const auto u = units_mod(N);
    return u[rng() % u.size()];
  };
  int hom = 0, inv = 0, orth = 0;
  for (int t = 0; t < 1000; ++t) {
    const long N = ns[rng() % ns.size()], M = ns[rng() % ns.size()], L = lcm_l(N, M);
    const Cyclotomic x = elem(N), y = elem(M);
    const long l = unit(L), m = unit(L);
    hom += galois_apply(x + y, l) == galois_apply(x, l) + galois_apply(y, l) &&
           galois_apply(x * y, l) == galois_apply(x, l) * galois_apply(y, l) &&
           galois_apply(galois_apply(x, l), m) == galois_apply(x, l * m % L) && conj(x) == galois_apply(x, L - 1);
  }
  for (int t = 0; t < 1000; ++t) {
    Cyclotomic x = elem(ns[rng() % ns.size()]);
    if (x.is_zero()) x = Cyclotomic(1);
    inv += x * inverse(x) == Cyclotomic(1);
  }
  // rows of Galois conjugates of stored and product S~ stay orthogonal
  std::vector<SMatrixTilde> pool;
  for (const auto& n : catalog_names()) pool.push_back(get(n).stilde);
  for (const char* e : {"fibonacci*semion", "fibonacci*fibonacci", "semion*conj(semion)"})
    pool.push_back(derive_theory(e).stilde);
  for (int t = 0; t < 1000; ++t) {
    const SMatrixTilde& S = pool[rng() % pool.size()];
    const long N = entry_conductor(S.matrix());
    const long l = unit(N);
    const int n = S.rank(), j = rng() % n, k = rng() % n;
    Cyclotomic acc(0), D2(0);
    for (int i = 0; i < n; ++i) {
      acc += sigma(S(i, j), l) * conj(sigma(S(i, k), l));
      D2 += sigma(S(i, 0), l) * sigma(S(i, 0), l);
    }
    orth += acc == (j == k ? D2 : Cyclotomic(0));
  }
  o.need(hom == 1000, "Galois homomorphism laws " + std::to_string(hom) + "/1000");
  o.need(inv == 1000, "inverse exactness " + std::to_string(inv) + "/1000");
  o.need(orth == 1000, "row orthogonality " + std::to_string(orth) + "/1000");
  o.note(std::to_string(hom + inv + orth) + "/3000 cases");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> cs{
      {1, "catalog integrity", 10, catalog_integrity},
      {2, "Galois suite", 5, galois_suite_all},
      {3, "classification reproduction", 300, classification},
      {4, "counting 70/35", 0, counting},
      {5, "pentagon/hexagon", 30, pentagon_hexagon},
      {6, "oracle equivalence at cap 2.1", 0, oracle_equivalence},
      {7, "congruence relations", 0, congruence},
      {8, "Temperley-Lieb cross-check", 0, temperley_lieb},
      {9, "property suite", 0, properties},
  };
  bool all = true;
  for (const auto& c : cs) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.need(false, std::string("exception ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0) o.need(s < c.limit, "runtime limit");
    all = all && o.pass;
    std::ostringstream os;
    os.precision(3);
    os << s << " s";
    if (c.limit > 0) os << " of " << c.limit << " s";
    std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << " (" << os.str() << ")";
    for (const auto& n : o.notes) std::cout << "; " << n;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
