#include "mtckit/io.hpp"

#include <fstream>
#include <sstream>

#include "mtckit/fsymbols.hpp"

namespace mtc::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw MtcError("ParseError", what); }

json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from(const json& j, const std::string& where) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) fail(where + ": not an integer");
    return z;
  }
  fail(where + ": expected an integer");
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where + ": missing \"" + key + "\"");
  return j.at(key);
}

}  // namespace

json to_json(const Cyclotomic& x) {
  const Cyclotomic m = minimize_conductor(x);
  json coeffs = json::array();
  for (const auto& q : m.coeffs()) coeffs.push_back(json::array({integer(q.mpq().get_num()), integer(q.mpq().get_den())}));
  json j;
  j["conductor"] = m.conductor();
  j["coeffs"] = std::move(coeffs);
  return j;
}

Cyclotomic cyclotomic_from_json(const json& j) {
  if (j.is_number_integer()) return Cyclotomic(j.get<long>());
  const json& nj = field(j, "conductor", "cyclotomic");
  if (!nj.is_number_integer() || nj.get<long>() < 1) fail("cyclotomic: conductor must be a positive integer");
  const long N = nj.get<long>();
  const json& cj = field(j, "coeffs", "cyclotomic");
  if (!cj.is_array() || static_cast<long>(cj.size()) != N)
    fail("cyclotomic: expected " + std::to_string(N) + " coefficients");
  std::vector<Rational> raw;
  for (const auto& c : cj) {
    if (c.is_array() && c.size() == 2) {
      const mpz_class den = integer_from(c[1], "coefficient denominator");
      if (den == 0) fail("cyclotomic: zero denominator");
      raw.emplace_back(integer_from(c[0], "coefficient numerator"), den);
    } else {
      raw.emplace_back(integer_from(c, "coefficient"), mpz_class(1));
    }
  }
  return Cyclotomic::from_exponent_coeffs(N, raw);
}

ModularDataInput modular_data_from_json(const json& j) {
  const json& lj = field(j, "labels", "modular data");
  const json& sz = field(lj, "size", "labels");
  if (!sz.is_number_integer() || sz.get<long>() < 1) fail("labels.size must be a positive integer");
  const int n = sz.get<int>();
  std::vector<int> dual(n);
  if (lj.contains("dual")) {
    const json& dj = lj.at("dual");
    if (!dj.is_array() || static_cast<int>(dj.size()) != n) fail("labels.dual must have size entries");
    for (int i = 0; i < n; ++i) {
      if (!dj[i].is_number_integer()) fail("labels.dual entries must be integers");
      dual[i] = dj[i].get<int>();
    }
  } else {
    for (int i = 0; i < n; ++i) dual[i] = i;
  }
  std::vector<std::string> names;
  if (lj.contains("names")) {
    if (!lj.at("names").is_array() || static_cast<int>(lj.at("names").size()) != n) fail("labels.names size");
    for (const auto& s : lj.at("names")) names.push_back(s.get<std::string>());
  } else {
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  LabelSet L(dual);

  const json& sj = field(j, "stilde", "modular data");
  if (!sj.is_array() || static_cast<int>(sj.size()) != n) fail("stilde must have size rows");
  CMatrix s(n, n);
  for (int i = 0; i < n; ++i) {
    if (!sj[i].is_array() || static_cast<int>(sj[i].size()) != n) fail("stilde row " + std::to_string(i));
    for (int k = 0; k < n; ++k) s(i, k) = cyclotomic_from_json(sj[i][k]);
  }
  const json& tj = field(j, "twists", "modular data");
  if (!tj.is_array() || static_cast<int>(tj.size()) != n) fail("twists must have size entries");
  TwistVector th;
  for (const auto& t : tj) th.push_back(cyclotomic_from_json(t));
  int sign = 1;
  if (j.contains("s00_sign")) {
    if (!j.at("s00_sign").is_number_integer() || std::abs(j.at("s00_sign").get<int>()) != 1)
      fail("s00_sign must be +1 or -1");
    sign = j.at("s00_sign").get<int>();
  }
  ModularDataInput in{L, names, SMatrixTilde(L, s), th, sign, std::nullopt};
  if (j.contains("fusion")) {
    try {
      in.fusion = j.at("fusion").get<std::vector<std::vector<std::vector<long>>>>();
    } catch (const nlohmann::json::exception& e) {
      fail(std::string("fusion: ") + e.what());
    }
  }
  return in;
}

ModularDataInput read_modular_data(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail("cannot open " + path);
  json j;
  try {
    j = json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    fail(path + ": " + e.what());
  }
  try {
    return modular_data_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    fail(path + ": " + e.what());
  }
}

json fusion_table_json(const FusionRules& F) {
  json t = json::array();
  for (const auto& a : F.table()) t.push_back(a);
  return t;
}

json to_json(const ModularSymbol& sym) {
  const int n = sym.rank();
  json j;
  j["labels"] = {{"size", n}, {"dual", sym.stilde.labels().duals()}};
  json s = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int k = 0; k < n; ++k) row.push_back(to_json(sym.stilde(i, k)));
    s.push_back(std::move(row));
  }
  j["stilde"] = std::move(s);
  json t = json::array();
  for (const auto& x : sym.twists) t.push_back(to_json(x));
  j["twists"] = std::move(t);
  j["s00_sign"] = sym.s00_sign;
  return j;
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  json j;
  j["subject"] = r.subject;
  j["ok"] = r.ok();
  j["checks"] = std::move(checks);
  return j;
}

json to_json(const AnyonTheory& t, int bits) {
  json j = to_json(t.symbol());
  j["labels"]["names"] = t.label_names;
  json out;
  out["name"] = t.name;
  for (auto& [k, v] : j.items()) out[k] = v;
  out["fusion"] = fusion_table_json(t.fusion);
  out["central_charge"] = t.central_charge.str();
  out["D"] = to_json(t.D);
  json R = json::array();
  for (const auto& [k, v] : t.R) R.push_back({{"a", k[0]}, {"b", k[1]}, {"c", k[2]}, {"value", to_json(v)}});
  out["R"] = std::move(R);
  if (t.F) {
    hp::PrecisionScope scope(bits);
    json F = json::array();
    for (const auto& [k, f] : *t.F) {
      json rows = json::array();
      for (const auto& row : f.m) {
        json r = json::array();
        for (const auto& e : row) {
          const hp::Complex v = e.value(bits);
          r.push_back({{"coeff", to_json(e.coeff)},
                       {"sqrt", to_json(e.radicand)},
                       {"decimal", {hp::to_string(v.re, 30), hp::to_string(v.im, 30)}}});
        }
        rows.push_back(std::move(r));
      }
      F.push_back({{"a", k[0]}, {"b", k[1]}, {"c", k[2]}, {"d", k[3]}, {"left", f.left}, {"right", f.right},
                   {"entries", std::move(rows)}});
    }
    out["F"] = {{"precision_bits", bits}, {"entry", "coeff * sqrt(sqrt), decimal = [re, im]"}, {"blocks", std::move(F)}};
  } else {
    out["F"] = nullptr;
  }
  out["realizations"] = t.realizations;
  return out;
}

json to_json(const ClassificationResult& r) {
  json j;
  j["rank"] = r.rank;
  j["options"] = {{"non_self_dual", r.options.include_nonselfdual},
                  {"unitary_only", r.options.unitary_only},
                  {"max_D", r.options.max_D ? json(*r.options.max_D) : json(nullptr)},
                  {"max_entry", r.options.max_entry},
                  {"budget", r.options.budget},
                  {"conductor_cap", r.options.twists.conductor_cap}};
  j["exploratory"] = r.exploratory;
  j["families"] = r.families();
  j["symbol_count"] = r.symbol_count();
  json rows = json::array();
  for (const auto& row : family_rows(r))
    rows.push_back({{"family", row.family},
                    {"fusion", row.fusion},
                    {"members", row.members},
                    {"unitary_members", row.unitary_members},
                    {"twists", row.twists},
                    {"count", row.count},
                    {"prime", row.prime},
                    {"galois", row.galois}});
  j["table"] = std::move(rows);
  json syms = json::array();
  for (const auto& s : r.symbols) {
    json sj;
    sj["family"] = s.family;
    sj["unitary"] = s.unitary;
    std::ostringstream d;
    d.precision(12);
    d << s.D;
    sj["D"] = d.str();
    sj["labels"] = {{"size", s.stilde.rank()}, {"dual", s.stilde.labels().duals()}};
    json st = json::array();
    for (int a = 0; a < s.stilde.rank(); ++a) {
      json row = json::array();
      for (int b = 0; b < s.stilde.rank(); ++b) row.push_back(to_json(s.stilde(a, b)));
      st.push_back(std::move(row));
    }
    sj["stilde"] = std::move(st);
    sj["fusion"] = fusion_table_json(s.fusion);
    json tw = json::array();
    for (const auto& t : s.twists) {
      json v = json::array();
      for (const auto& x : t) v.push_back(to_json(x));
      tw.push_back(std::move(v));
    }
    sj["twists"] = std::move(tw);
    sj["orbits"] = s.orbits;
    syms.push_back(std::move(sj));
  }
  j["symbols"] = std::move(syms);
  j["rings"] = r.rings;
  j["rings_visited"] = r.rings_visited;
  j["crosscheck"] = to_json(r.crosscheck);
  j["trace"] = r.trace;
  return j;
}

json to_json(const CountResult& c) {
  json rules = json::array();
  for (const auto& r : c.rules)
    rules.push_back({{"fusion_rule", r.fusion_rule},
                     {"rank", r.rank},
                     {"mtcs", r.mtcs},
                     {"expected", r.expected},
                     {"members", r.members}});
  json j;
  j["rules"] = std::move(rules);
  j["total"] = c.total;
  j["up_to_sign"] = c.up_to_sign;
  return j;
}

const std::vector<QuantumGroupRow>& quantum_group_table() {
  static const std::vector<QuantumGroupRow> rows{
      {"(A_r,1), r<=11", "r+1", "r>=2 NSD, abelian", "r+2"},
      {"(A_1,k), k<=11", "k+1", "", "k+2"},
      {"(A_2,2)", "6", "NSD", "5"},
      {"(A_2,3), (A_3,2)", "10", "NSD", "6"},
      {"(A_r,k)_1/(r+1), (r,k) in L", "binom(k+r,k)/(r+1)", "r>=2 NSD", "k+r+1"},
      {"(B_r,1)", "3", "c.f. (A_1,2)", "4r"},
      {"(B_r,2), r<=8", "r+4", "finite braid image?", "4r+2"},
      {"(B_2,3)", "10", "", "12"},
      {"(C_r,1), r<=11", "r+1", "c.f. (A_1,r)", "2(r+2)"},
      {"(C_3,2)", "10", "", "12"},
      {"(D_2r,1)", "4", "r even c.f. D^w(Z2)", "4r-1"},
      {"(D_2r+1,1)", "4", "c.f. (A_3,1)", "4r+1"},
      {"(D_r,2), r=4,5", "11,12", "r=5 NSD", "8,10"},
      {"(E_6,k), k=1,2", "3,9", "NSD", "13,14"},
      {"(E_7,k), 1<=k<=3", "2,6,11", "", "19,20,21"},
      {"(E_8,k), 2<=k<=4", "3,5,10", "", "32,33,34"},
      {"(F_4,k), 1<=k<=3", "2,5,9", "", "20,22,24"},
      {"(G_2,k), 1<=k<=5", "2,4,6,9,12", "", "15,18,21,24,27"},
      {"F_4", "10", "c.f. (E_8,4)", "17"},
      {"G_2", "5,8,10", "", "11,13,14"},
      {"D^w(Z2)", "4", "prime", ""},
      {"D^w(Z3)", "9", "prime", ""},
      {"D^w(S3)", "8", "c.f. (B_4,2)", ""},
  };
  return rows;
}

}  // namespace mtc::io
