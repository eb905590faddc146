#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtckit/modular.hpp"

namespace mtc {

// F-matrix entry coeff * sqrt(radicand), radicand a positive real cyclotomic.
// Covers phi^{-1/2} and 1/sqrt(2) without leaving exact data.
struct FEntry {
  Cyclotomic coeff{0};
  Cyclotomic radicand{1};

  hp::Complex value(int bits) const;
  std::string str() const;
  friend FEntry operator*(const FEntry& a, const FEntry& b) {
    return {a.coeff * b.coeff, a.radicand * b.radicand};
  }
};

struct FMatrix {
  std::vector<int> left;   // m with a b -> m, m c -> d
  std::vector<int> right;  // n with b c -> n, a n -> d
  std::vector<std::vector<FEntry>> m;
};

using FKey = std::array<int, 4>;
using RKey = std::array<int, 3>;

struct AnyonTheory {
  std::string name;
  std::vector<std::string> label_names;
  FusionRules fusion;
  SMatrixTilde stilde;
  int s00_sign = 1;
  TwistVector twists;
  Rational central_charge;
  Cyclotomic D{1};                                // exact total quantum order
  std::map<RKey, Cyclotomic> R;                   // R^{ab}_c
  std::optional<std::map<FKey, FMatrix>> F;       // complete: every admissible (a,b,c,d)
  std::vector<std::string> realizations;

  int rank() const { return fusion.rank(); }
  ModularSymbol symbol() const { return ModularSymbol{fusion, stilde, s00_sign, twists}; }
  const Cyclotomic& Rsym(int a, int b, int c) const;  // throws when the channel is not admissible
  const FMatrix& Fsym(int a, int b, int c, int d) const;
  int label(const std::string& name) const;
};

// Internal channel lists for F^{abc}_d.
std::vector<int> f_left(const FusionRules& N, int a, int b, int c, int d);
std::vector<int> f_right(const FusionRules& N, int a, int b, int c, int d);
// Fills every admissible (a,b,c,d) not already present with the identity.
std::map<FKey, FMatrix> complete_fsymbols(const FusionRules& N, std::map<FKey, FMatrix> listed);

const std::vector<std::string>& catalog_names();
AnyonTheory get(const std::string& name);  // UnknownTheory
AnyonTheory trivial_theory();

AnyonTheory conjugate(const AnyonTheory& t);
AnyonTheory negate_s(const AnyonTheory& t);
AnyonTheory product(const AnyonTheory& a, const AnyonTheory& b);
// Parses "name", "conj(x)", "neg(x)", "x*y" (left associative).
AnyonTheory derive_theory(const std::string& expr);

struct Primality {
  bool prime = true;
  std::vector<std::vector<int>> modular_subsets;  // proper nontrivial modular subcategories
  std::string factors;                            // e.g. "fibonacci x fibonacci"
  bool product_reconstructs = false;
};
Primality primality(const AnyonTheory& t);

Report congruence_relations(const AnyonTheory& t, int bits = 128);

struct TLData {
  int k = 0;
  Cyclotomic A;
  std::vector<int> labels;                // 0, 2, ..., k-1
  std::vector<Cyclotomic> dims;           // [a+1]_q
  TwistVector twists;
  std::map<RKey, Cyclotomic> R;           // indexed by position in labels
  CMatrix stilde;                         // from the twist ring identity
  Rational central_charge;                // printed branch formula, reduced mod 8
  Rational central_charge_raw;            // before reduction (e.g. -8/7)
  std::vector<std::vector<std::vector<long>>> fusion;
};
TLData tl_generator(int k);  // EvenLevel
// Position map from TL labels to catalog labels for the stored k = 5, 7 theories.
std::vector<int> tl_label_map(int k);
Report tl_crosscheck(int k);

struct RuleCount {
  std::string fusion_rule;
  int rank = 0;
  int mtcs = 0;        // orbit count, including the S -> -S partner
  int expected = 0;    // reference count
  std::vector<std::string> members;
};
struct CountResult {
  std::vector<RuleCount> rules;
  int total = 0;
  int up_to_sign = 0;  // identifying S with -S
};
CountResult count_umtcs(int max_rank = 4);

// Numeric canonical key of (S~, T, sign) up to label permutations fixing 0; the permuted duality is
// part of the key, so it does not depend on how dual pairs were laid out.
std::string canonical_key(const ModularSymbol& sym, bool with_sign = true);
std::string fusion_key(const FusionRules& F);

}  // namespace mtc
