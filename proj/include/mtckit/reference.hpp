#pragma once

#include <string>
#include <vector>

#include "mtckit/modular.hpp"

namespace mtc {

// Transcribed classification data for one S~ family of rank <= 4, independent of the search code.
struct ReferenceFamily {
  std::string name;                   // "z2", "fibonacci", ..., "a1k7half"
  int rank = 1;
  FusionRules fusion;                 // as printed in the fusion-rule column
  std::vector<SMatrixTilde> members;  // every printed parameter choice that is a modular symbol
  struct Excluded {
    SMatrixTilde stilde;
    std::string reason;
  };
  std::vector<Excluded> excluded;     // printed parameter choices that are not modular symbols
  std::vector<TwistVector> twists;    // T column, in the label order of the printed matrix
  int count = 0;                      // "#" column
  bool prime = true;
  std::string galois;                 // "1", "Z2", "Z3"
  bool self_dual() const { return fusion.labels().all_self_dual(); }
};

// Rows in printed order, rank 1 through 4.
const std::vector<ReferenceFamily>& reference_families();
const ReferenceFamily& reference_family(const std::string& name);

// Fusion rules from named products, e.g. {"X", "X", "1+Y"}; names[0] is the unit.
struct Product {
  std::string a, b, sum;
};
FusionRules fusion_from_products(const LabelSet& L, const std::vector<std::string>& names,
                                 const std::vector<Product>& products);

// Self-dual rank-3 family generated in the reducible branch, k = 2 alpha, l = 1, m = 2 alpha^2, n = alpha.
SMatrixTilde alpha_family_stilde(int alpha);
// d_2 = alpha + sqrt(alpha^2 + 2) and the bound sqrt(3 + sqrt 17) it must not exceed.
double alpha_family_d2(int alpha);
double alpha_family_bound();

// Rank-4 candidate with c1 = c3 = 4, c2 = 2 in Q(zeta_16)^+, rejected by the (0,2) twist inequality.
SMatrixTilde case1_rejected_candidate();

}  // namespace mtc
