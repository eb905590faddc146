#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtckit/fusion_search.hpp"
#include "mtckit/reference.hpp"
#include "mtckit/twists.hpp"

namespace mtc {

struct ClassifyOptions {
  bool include_nonselfdual = true;
  bool unitary_only = false;        // forced for rank 4
  std::optional<double> max_D;      // drop symbols with D above this
  int max_entry = 3;                // fusion multiplicity bound of the generic search
  int literal_bound = 8;            // parameter bound for the rank-3 (k,l,m,n) trace
  long budget = 100'000'000;
  TwistOptions twists;
};

struct ClassifiedSymbol {
  SMatrixTilde stilde;
  FusionRules fusion;
  bool unitary = false;
  double D = 0;
  std::vector<TwistVector> twists;  // every solution, deterministic order
  int orbits = 0;                   // solutions modulo automorphisms of S~
  std::string family;               // reference family name, or "unlisted"
};

struct ClassificationResult {
  int rank = 0;
  ClassifyOptions options;
  bool exploratory = false;         // non-unitary rank-4 runs
  std::vector<ClassifiedSymbol> symbols;
  std::vector<std::string> trace;   // derivation steps and cross-checks
  Report crosscheck;                // literal derivation vs generic search
  long rings_visited = 0;
  int rings = 0;
  double seconds = 0;

  std::vector<std::string> families() const;  // distinct family names in order of appearance
  int symbol_count() const;                   // sum of unitary orbit counts
};

ClassificationResult enumerate_rank1(const ClassifyOptions& opts = {});
// m-scan with |m d| <= 2, cross-checked against the generic ring search.
ClassificationResult enumerate_rank2(const ClassifyOptions& opts = {});
// (k,l,m,n) case trace for self-dual rules plus the non-self-dual branch, cross-checked.
ClassificationResult enumerate_rank3(bool include_nonselfdual, const ClassifyOptions& opts = {});
// Generic bounded search over self-dual and non-self-dual rank-4 rings with unitary S~.
ClassificationResult enumerate_rank4_unitary(const ClassifyOptions& opts = {});
// Dispatch by rank; throws UnsupportedRank outside 1..4.
ClassificationResult classify_rank(int rank, const ClassifyOptions& opts = {});

struct FamilyRow {
  std::string family;
  std::string fusion;               // products, e.g. "X*X = 1+X"
  int members = 0;
  int unitary_members = 0;
  std::vector<std::string> twists;  // T of unitary members
  int count = 0;
  bool prime = true;
  std::string galois;
};
std::vector<FamilyRow> family_rows(const ClassificationResult& r);
std::string classification_report(const ClassificationResult& r);

// Compares against the transcribed families: member S~ sets, "#" counts, T columns, fusion
// rules, primality and Galois groups. Any difference is a failing check.
Report diff_paper(const ClassificationResult& r);

// Text rendering helpers shared with the CLI.
std::string fusion_text(const FusionRules& F);
std::string twist_text(const TwistVector& t);
std::string stilde_text(const SMatrixTilde& S);

}  // namespace mtc
