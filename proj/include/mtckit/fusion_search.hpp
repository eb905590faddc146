#pragma once

#include <array>
#include <string>
#include <vector>

#include "mtckit/modular.hpp"
#include "mtckit/twists.hpp"

namespace mtc {

// One representative duality per isomorphism type: labels 1..2p pair up as (1,2), (3,4), ...
std::vector<LabelSet> duality_classes(int n, bool include_nonselfdual = true);

// Orbits of triples (i,j,k), i,j,k >= 1, under n_ij^k = n_ji^k = n_{i^ j^}^{k^} = n_{i k^}^{j^}.
std::vector<std::vector<std::array<int, 3>>> fusion_parameter_orbits(const LabelSet& L);

struct RingSearchOptions {
  int max_entry = 3;
  std::vector<int> orbit_max;  // optional per-orbit bound, overrides max_entry
  long budget = 100'000'000;   // rings visited before CapTooLarge
};

// Every commutative associative fusion ring on L with bounded multiplicities, up to relabeling.
// Deterministic order (by fusion_key).
std::vector<FusionRules> fusion_rings(const LabelSet& L, const RingSearchOptions& opts = {}, long* visited = nullptr);

// lambda(i, a) = eigenvalue of N_i on the a-th common eigenvector. Throws NotSemisimple.
Eigen::MatrixXcd character_table(const FusionRules& F);
// Index of the Frobenius-Perron character.
int fp_character(const Eigen::MatrixXcd& lambda);

// Numeric S~ built from characters: column 0 is a character with real nonzero values (the FP one
// when unitary_only), the remaining columns a bijection onto the other characters. Survivors are
// symmetric, duality compatible, unitary up to D and reproduce F by the Verlinde formula.
std::vector<Eigen::MatrixXcd> numeric_stilde(const FusionRules& F, bool unitary_only, double tol = 1e-8);

// Exact d_i in the real subfield of Q(zeta_M), searched over integer coordinates in 1, eta_1, ...
// (eta_k = zeta_M^k + zeta_M^-k). Every match within tol, nearest first.
std::vector<Cyclotomic> real_cyclotomic_integers(double value, long M, double tol = 1e-7);

struct RingSymbols {
  FusionRules fusion;
  std::vector<SMatrixTilde> stilde;          // exact, distinct up to relabeling
  std::vector<std::vector<TwistVector>> twists;
  int numeric_candidates = 0;                // numeric S~ passing Verlinde
  int twist_candidates = 0;                  // of those, with a numeric twist solution
  std::vector<std::string> notes;            // unidentified candidates and such
};

// All modular symbols on the fusion ring F (exact S~ with at least one twist vector).
RingSymbols symbols_on_ring(const FusionRules& F, bool unitary_only, const TwistOptions& opts = {});

// Numeric canonical key of S~ alone up to relabeling, duality included.
std::string stilde_key(const SMatrixTilde& S);
std::string stilde_key(const LabelSet& L, const Eigen::MatrixXcd& S);

struct BoundedCandidate {
  FusionRules fusion;
  double fp_dim_sq = 0;
  bool fp_bound = false;    // sum FPdim^2 <= cap^2
  bool stilde = false;      // a unitary numeric S~ reproduces the fusion rule
  bool twists = false;      // an exact unitary modular symbol exists
  bool survivor() const { return fp_bound && stilde && twists; }
  std::string diagnosis() const;
};

struct BoundedResult {
  Rational cap;
  int max_rank = 0;
  long nodes = 0;
  std::vector<BoundedCandidate> candidates;
  std::vector<FusionRules> survivors() const;
};

// Brute force over fusion rules with D <= cap: n <= cap^2, n_ij^k <= cap^3, tightened by
// d_i^2 <= cap^2 - (n - 1) and n_ij^k <= d_i d_j. Throws CapTooLarge past the node budget.
BoundedResult bounded_enumeration(const Rational& cap, long budget = 100'000'000, const TwistOptions& opts = {});

}  // namespace mtc
