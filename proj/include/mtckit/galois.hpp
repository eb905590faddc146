#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtckit/modular.hpp"

namespace mtc {

struct GaloisElement {
  long l = 1;                  // smallest Frobenius index realizing this element
  std::vector<long> also;      // other units inducing the same permutation
  std::vector<int> perm;       // sigma(k)
  std::vector<int> eps;        // normalized, eps[0] = +1
  std::vector<int> raw_eps;    // as read off d_{sigma(0)} C_sigma; raw_eps[sigma(0)] = +1
  Eigen::MatrixXi signed_perm; // d_{sigma(0)} S~^{-1} sigma(S~), entry (sigma(k), k) = raw_eps[sigma(k)]
  Cyclotomic d_sigma0;
  CMatrix C;                   // S~^{-1} sigma_l(S~), exact

  int sigma(int k) const { return perm[k]; }
  std::vector<int> inverse_perm() const;
};

struct GaloisGroup {
  long conductor = 1;  // conductor of the S~ entries the units were taken from
  std::vector<GaloisElement> elements;  // elements[0] is the identity
  std::vector<std::vector<int>> table;  // table[a][b] = index of a*b

  int order() const { return static_cast<int>(elements.size()); }
  std::string structure() const;        // "1", "Z2", "Z3", "Z2xZ2", ...
};

// sigma_l for l a unit modulo some multiple of x's minimal conductor.
Cyclotomic sigma(const Cyclotomic& x, long l);

std::string cycle_notation(const std::vector<int>& perm);
int permutation_sign(const std::vector<int>& perm);

long fusion_field_conductor(const SMatrixTilde& S);
long entry_conductor(const CMatrix& m);

// Throws NotSignedPermutation when some sigma_l does not act by a signed permutation.
GaloisGroup galois_group(const SMatrixTilde& S);
Report verify_action_identities(const GaloisGroup& G, const SMatrixTilde& S);
Report parity_check(const GaloisGroup& G, const SMatrixTilde& S);
// The fixed-point sum in the form valid for any duality: fixed points are labels with
// sigma(i) = dual(i), which is sigma(i) = i for self-dual fusion rules.
Report twist_fixedpoint_sum(const ModularSymbol& sym, const GaloisElement& g);
// Minimal conductor of Q(s~, D, theta); checks ord(T) | N, sigma_l(T) = T^l and sigma_l(S) = S P~.
long modular_data_conductor(const ModularSymbol& sym, Report* report = nullptr, int bits = 128);
Report galois_suite(const ModularSymbol& sym, int bits = 128);

}  // namespace mtc
