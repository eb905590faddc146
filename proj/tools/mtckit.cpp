#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "mtckit/catalog.hpp"
#include "mtckit/classify.hpp"
#include "mtckit/fsymbols.hpp"
#include "mtckit/galois.hpp"
#include "mtckit/io.hpp"

using namespace mtc;
using io::json;

namespace {

// exit codes
constexpr int kOk = 0, kCheckFailure = 1, kInputError = 2;

struct RunConfig {
  std::string format = "text";
  int precision = 128;
  long budget = 100'000'000;
  long conductor_cap = 360;
  bool strict = true;
  bool json() const { return format == "json"; }
};

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int report_exit(const Report& r) { return r.ok() ? kOk : kCheckFailure; }

std::string failures_line(const Report& r) {
  int bad = 0;
  for (const auto& c : r.checks) bad += !c.pass;
  return std::to_string(r.checks.size()) + " checks, " + std::to_string(bad) + " failed";
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, const std::string& path) {
  const io::ModularDataInput in = io::read_modular_data(path);
  Report r;
  r.subject = path;
  const VerlindeMode mode = cfg.strict ? VerlindeMode::strict : VerlindeMode::lax;
  std::optional<ModularSymbol> sym;
  try {
    sym = make_symbol(in.stilde, in.twists, in.s00_sign, mode);
    r.add("verlinde", true, cfg.strict ? "integral, nonnegative" : "lax: rational coefficients allowed");
  } catch (const MtcError& e) {
    r.add("verlinde", false, e.what());
  }
  if (sym && in.fusion) {
    bool same = false;
    try {
      same = FusionRules::from_table(in.labels, *in.fusion) == sym->fusion;
    } catch (const MtcError&) {
    }
    r.add("input fusion matches Verlinde", same);
  }
  if (sym) {
    r.merge(full_symbol_suite(*sym, cfg.precision));
    if (r.ok()) {
      try {
        r.merge(galois_suite(*sym, cfg.precision), "galois: ");
      } catch (const MtcError& e) {
        r.add("galois", false, e.what());
      }
    }
  }
  if (cfg.json()) {
    json j = io::to_json(r);
    if (sym) j["symbol"] = io::to_json(*sym);
    print_json(j);
  } else {
    std::cout << r.text() << (r.ok() ? "PASS: " : "FAIL: ") << failures_line(r) << "\n";
  }
  return report_exit(r);
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  int rank = 0;
  bool self_dual_only = false;
  bool non_self_dual = false;
  bool unitary = false;
  bool non_unitary = false;
  std::optional<double> max_D;
  bool diff = false;
  bool trace = false;
};

int cmd_classify(const RunConfig& cfg, const ClassifyArgs& a) {
  ClassifyOptions o;
  o.include_nonselfdual = !a.self_dual_only;
  // rank 4 is a unitary classification unless an exploratory run is asked for
  o.unitary_only = a.unitary || (a.rank == 4 && !a.non_unitary);
  o.max_D = a.max_D;
  o.budget = cfg.budget;
  o.twists.budget = std::max(cfg.budget / 2, 1L);
  o.twists.conductor_cap = cfg.conductor_cap;
  const ClassificationResult r = classify_rank(a.rank, o);
  std::optional<Report> d;
  if (a.diff) d = diff_paper(r);
  if (cfg.json()) {
    json j = io::to_json(r);
    if (d) j["diff"] = io::to_json(*d);
    print_json(j);
  } else {
    if (a.trace)
      for (const auto& t : r.trace) std::cout << "trace: " << t << "\n";
    std::cout << classification_report(r);
    if (d) std::cout << d->text() << "diff: " << failures_line(*d) << "\n";
  }
  return d ? report_exit(*d) : kOk;
}

// ---------------------------------------------------------------- catalog

std::string family_of(const AnyonTheory& t) {
  const std::string key = stilde_key(t.stilde);
  for (const auto& f : reference_families())
    for (const auto& m : f.members)
      if (m.labels().size() == t.rank() && stilde_key(m) == key) return f.name;
  return "none";
}

void show_text(const AnyonTheory& t) {
  std::cout << "theory " << t.name << " (rank " << t.rank() << ")\n";
  std::cout << "  labels  ";
  for (int i = 0; i < t.rank(); ++i)
    std::cout << (i ? ", " : "") << t.label_names[i] << (t.fusion.labels().dual(i) != i ? "*=" + t.label_names[t.fusion.labels().dual(i)] : "");
  std::cout << "\n  fusion  " << fusion_text(t.fusion) << "\n";
  std::cout << "  S~      " << stilde_text(t.stilde) << (t.s00_sign < 0 ? "  (S = -S~/D)" : "") << "\n";
  std::cout << "  T       " << twist_text(t.twists) << "\n";
  std::cout << "  c       " << t.central_charge.str() << "\n";
  std::cout << "  D       " << minimize_conductor(t.D).str() << " = " << to_complex(t.D).real() << "\n";
  std::cout << "  R       " << t.R.size() << " entries\n";
  std::cout << "  F       " << (t.F ? std::to_string(t.F->size()) + " blocks" : std::string("not stored")) << "\n";
  std::cout << "  family  " << family_of(t) << "\n";
  std::string real;
  for (const auto& s : t.realizations) real += (real.empty() ? "" : "; ") + s;
  if (!real.empty()) std::cout << "  realized as " << real << "\n";
}

int cmd_catalog_list(const RunConfig& cfg, bool extended) {
  json arr = json::array();
  if (!cfg.json()) std::cout << "name        rank  c      D\n";
  for (const auto& n : catalog_names()) {
    const AnyonTheory t = get(n);
    if (cfg.json()) {
      arr.push_back({{"name", n}, {"rank", t.rank()}, {"central_charge", t.central_charge.str()},
                     {"realizations", t.realizations}});
    } else {
      std::ostringstream os;
      os.precision(6);
      os << to_complex(t.D).real();
      std::cout << n << std::string(12 - std::min<size_t>(11, n.size()), ' ') << t.rank() << "     "
                << t.central_charge.str() << std::string(7 - std::min<size_t>(6, t.central_charge.str().size()), ' ')
                << os.str() << "\n";
    }
  }
  if (extended) {
    json ext = json::array();
    if (!cfg.json()) std::cout << "\nquantum group categories of rank <= 12 (metadata only)\n";
    for (const auto& r : io::quantum_group_table()) {
      if (cfg.json())
        ext.push_back({{"family", r.family}, {"rank", r.rank}, {"notes", r.notes}, {"ell", r.ell}});
      else
        std::cout << "  " << r.family << " | rank " << r.rank << " | " << r.notes << " | l = " << r.ell << "\n";
    }
    if (cfg.json()) {
      print_json({{"theories", arr}, {"extended", ext}});
      return kOk;
    }
  }
  if (cfg.json()) print_json({{"theories", arr}});
  return kOk;
}

int cmd_catalog_show(const RunConfig& cfg, const std::string& name) {
  const AnyonTheory t = derive_theory(name);
  if (cfg.json())
    print_json(io::to_json(t, cfg.precision));
  else
    show_text(t);
  return kOk;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string x;
  while (std::getline(ss, x, ','))
    if (!x.empty()) out.push_back(x);
  return out;
}

int cmd_catalog_verify(const RunConfig& cfg, const std::string& target, const std::string& checks) {
  const std::vector<std::string> which = split(checks);
  std::vector<std::string> names = target == "all" ? catalog_names() : std::vector<std::string>{target};
  json arr = json::array();
  std::map<std::string, std::map<std::string, std::string>> matrix;
  bool ok = true;
  for (const auto& n : names) {
    const AnyonTheory t = derive_theory(n);
    const Report r = theory_suite(t, which, cfg.precision);
    ok = ok && r.ok();
    for (const auto& c : r.checks) {
      const std::string g = c.name.substr(0, c.name.find(':'));
      auto& cell = matrix[n][g];
      const bool na = c.name.find("not applicable") != std::string::npos;
      if (!c.pass) cell = "FAIL";
      else if (na && cell.empty()) cell = "n/a";
      else if (!na && cell != "FAIL") cell = "pass";
    }
    if (cfg.json())
      arr.push_back(io::to_json(r));
    else
      std::cout << r.text() << std::flush;
  }
  if (cfg.json()) {
    print_json({{"ok", ok}, {"theories", arr}});
  } else {
    const auto& groups = which.empty() ? theory_check_names() : which;
    std::cout << "\n" << std::string(10, ' ');
    for (const auto& g : groups) std::cout << " " << g.substr(0, 10) << std::string(10 - std::min<size_t>(10, g.size()), ' ');
    std::cout << "\n";
    for (const auto& n : names) {
      std::cout << n.substr(0, 10) << std::string(10 - std::min<size_t>(10, n.size()), ' ');
      for (const auto& g : groups) {
        const std::string c = matrix[n][g].empty() ? "-" : matrix[n][g];
        std::cout << " " << c << std::string(10 - c.size(), ' ');
      }
      std::cout << "\n";
    }
    std::cout << names.size() << " theories, " << (ok ? "all checks pass" : "FAILURES") << "\n";
  }
  return ok ? kOk : kCheckFailure;
}

int cmd_catalog_derive(const RunConfig& cfg, const std::vector<std::string>& prod, const std::string& conj_of,
                       const std::string& neg_of) {
  AnyonTheory t = [&] {
    if (!prod.empty()) return product(derive_theory(prod.at(0)), derive_theory(prod.at(1)));
    if (!conj_of.empty()) return conjugate(derive_theory(conj_of));
    return negate_s(derive_theory(neg_of));
  }();
  const Primality p = primality(t);
  const Report r = theory_suite(t, {"core", "ribbon"}, cfg.precision);
  if (cfg.json()) {
    json j = io::to_json(t, cfg.precision);
    j["family"] = family_of(t);
    j["prime"] = p.prime;
    j["factors"] = p.factors;
    j["checks"] = io::to_json(r);
    print_json(j);
  } else {
    show_text(t);
    std::cout << "  prime   " << (p.prime ? "yes" : "no, " + p.factors) << "\n";
    std::cout << "checks: " << failures_line(r) << "\n";
  }
  return report_exit(r);
}

// ---------------------------------------------------------------- count

int cmd_count(const RunConfig& cfg, int rank, bool all, bool check) {
  if (!all && (rank < 1 || rank > 4))
    throw MtcError("UnsupportedRank", "counting covers ranks 1 to 4, got " + std::to_string(rank));
  const CountResult c = count_umtcs(all ? 4 : rank);
  CountResult shown;
  for (const auto& r : c.rules)
    if (all || r.rank == rank) {
      shown.rules.push_back(r);
      shown.total += r.mtcs;
    }
  shown.up_to_sign = all ? c.up_to_sign : shown.total / 2;
  Report rep;
  rep.subject = "count";
  if (check) {
    for (const auto& r : shown.rules)
      rep.add(r.fusion_rule + " = " + std::to_string(r.expected), r.mtcs == r.expected, std::to_string(r.mtcs));
    if (all) {
      rep.add("total = 70", shown.total == 70, std::to_string(shown.total));
      rep.add("up to S -> -S = 35", shown.up_to_sign == 35, std::to_string(shown.up_to_sign));
    }
  }
  if (cfg.json()) {
    json j = io::to_json(shown);
    if (check) j["check"] = io::to_json(rep);
    print_json(j);
  } else {
    int cur = 0;
    for (const auto& r : shown.rules) {
      if (r.rank != cur) std::cout << "rank " << (cur = r.rank) << "\n";
      std::cout << "  " << r.fusion_rule << ": " << r.mtcs << "\n";
    }
    if (check) std::cout << rep.text();
    std::cout << "total " << shown.total << ", " << shown.up_to_sign << " up to S -> -S\n";
  }
  return check ? report_exit(rep) : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mtckit: modular tensor category data toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  cfg.precision = hp::default_bits();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--precision", cfg.precision, "working precision in bits (MTCKIT_PRECISION sets the default)")
      ->check(CLI::Range(53, 1 << 16));
  app.add_option("--budget", cfg.budget, "node budget of searches")->check(CLI::PositiveNumber);
  app.add_option("--conductor-cap", cfg.conductor_cap, "root-of-unity order cap of the twist fallback")
      ->check(CLI::PositiveNumber);
  app.add_flag("--strict,!--lax", cfg.strict, "require integral Verlinde coefficients (default strict)");

  std::string path;
  auto* verify = app.add_subcommand("verify", "check a modular-data JSON file");
  verify->add_option("path", path)->required();

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "classify modular symbols of a given rank");
  classify->add_option("--rank", ca.rank)->required();
  classify->add_flag("--non-self-dual", ca.non_self_dual, "include non-self-dual rules (default)");
  classify->add_flag("--self-dual-only", ca.self_dual_only, "skip non-self-dual rules");
  classify->add_flag("--unitary", ca.unitary, "keep unitary S~ only");
  classify->add_flag("--non-unitary", ca.non_unitary, "rank 4: exploratory run with non-unitary S~");
  classify->add_option("--max-D", ca.max_D, "drop symbols with D above this");
  classify->add_flag("--diff-paper", ca.diff, "compare with the transcribed classification tables");
  classify->add_flag("--trace", ca.trace, "print derivation steps");

  auto* catalog = app.add_subcommand("catalog", "stored prime unitary theories");
  catalog->require_subcommand(1);
  bool extended = false, show_json = false;
  std::string name, target, checks;
  auto* list = catalog->add_subcommand("list", "names, rank, central charge and D");
  list->add_flag("--extended", extended, "also print the rank <= 12 quantum group list");
  auto* show = catalog->add_subcommand("show", "full data of a theory or derived expression");
  show->add_option("name", name, "theory name or expression, e.g. fibonacci*semion")->required();
  show->add_flag("--json", show_json);
  auto* cverify = catalog->add_subcommand("verify", "run check groups on one theory or all");
  cverify->add_option("target", target, "theory name or all")->required();
  cverify->add_option("--checks", checks, "comma list of core,ribbon,pentagon,hexagon,galois,congruence");
  std::vector<std::string> prod;
  std::string conj_of, neg_of;
  auto* derive = catalog->add_subcommand("derive", "product, conjugate or S -> -S of stored theories");
  auto* o1 = derive->add_option("--product", prod)->expected(2);
  auto* o2 = derive->add_option("--conjugate", conj_of);
  auto* o3 = derive->add_option("--negate", neg_of);
  o1->excludes(o2)->excludes(o3);
  o2->excludes(o3);
  derive->require_option(1);

  int count_rank = 0;
  bool count_all = false, count_check = false;
  auto* count = app.add_subcommand("count", "count unitary MTCs of rank <= 4 up to relabeling");
  auto* r1 = count->add_option("--rank", count_rank);
  auto* r2 = count->add_flag("--all", count_all);
  r1->excludes(r2);
  count->require_option(1, 2);
  count->add_flag("--check", count_check, "compare with the expected table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*verify) return cmd_verify(cfg, path);
    if (*classify) return cmd_classify(cfg, ca);
    if (*count) return cmd_count(cfg, count_rank, count_all, count_check);
    if (*list) return cmd_catalog_list(cfg, extended);
    if (*show) {
      if (show_json) cfg.format = "json";
      return cmd_catalog_show(cfg, name);
    }
    if (*cverify) return cmd_catalog_verify(cfg, target, checks);
    if (*derive) return cmd_catalog_derive(cfg, prod, conj_of, neg_of);
  } catch (const MtcError& e) {
    std::cerr << e.what() << "\n";
    const std::string& k = e.kind();
    const bool input = k == "ParseError" || k == "UnsupportedRank" || k == "UnknownTheory" || k == "UnknownCheck" ||
                       k == "InvalidLabels" || k == "ShapeMismatch";
    return input ? kInputError : kCheckFailure;
  }
  return kInputError;
}
