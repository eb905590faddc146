#pragma once

#include <functional>
#include <vector>

#include "mtckit/modular.hpp"

namespace mtc {

struct TwistOptions {
  long budget = 50'000'000;  // candidate twist vectors examined before giving up
  long conductor_cap = 360;  // root-of-unity order cap for the fallback search
};

// Solution group of the Vafa relations with theta_0 = 1 and theta_i = theta_{i^}.
// Every solution is theta_j = zeta_L^{x_j} with x = V (t_k L / e_k), 0 <= t_k < e_k.
struct VafaLattice {
  std::vector<int> var_of_label;  // -1 for label 0
  int vars = 0;
  std::vector<long> invariants;   // e_k > 0
  std::vector<std::vector<long>> V;
  long exponent = 1;              // L = lcm(e_k)
  long size() const;              // prod e_k, saturating at LONG_MAX

  // x[j] mod L for the solution with coordinates t
  std::vector<long> exponents(const std::vector<long>& t) const;
};

// Throws UnboundedTwistOrder when the exponent system is degenerate.
VafaLattice vafa_lattice(const FusionRules& F);

// Candidate twist exponent vectors (common modulus *modulus) that satisfy the twist ring identity
// numerically for the given numeric S~. Falls back to roots of unity of order dividing
// opts.conductor_cap when the Vafa system is degenerate. Throws TwistBudgetExceeded.
std::vector<std::vector<long>> numeric_twist_candidates(const FusionRules& F, const Eigen::MatrixXcd& S,
                                                        const TwistOptions& opts, long* modulus,
                                                        bool* used_fallback = nullptr);

// All twist vectors making (N, S~, T) a modular symbol, N = verlinde(S~). Exact confirmation of
// the twist equation, twist ring identity, Vafa relation and nu_i in {0,+-1}. Deterministic order.
std::vector<TwistVector> solve_twists(const SMatrixTilde& S, const TwistOptions& opts = {});

// Label permutations fixing 0, commuting with duality and preserving S~ exactly.
std::vector<std::vector<int>> stilde_automorphisms(const SMatrixTilde& S);
// Number of orbits of the automorphism group on a set of twist vectors.
int twist_orbit_count(const SMatrixTilde& S, const std::vector<TwistVector>& sols);

// 2 max_i s~_ij^2 <= D|s~_jj| + D^2 and D <= sum_i |s~_ij s~_ik| / |s~_jk|, for real S~.
// Throws NotReal. Failing checks are named "TwistInequality (j,k)".
Report twist_inequality_filter(const SMatrixTilde& S, int bits = 128);
using RealTable = std::vector<std::vector<hp::Real>>;
Report twist_inequality_filter(const RealTable& S, int bits = 128);
bool twist_inequalities_hold(const Eigen::MatrixXd& S, double tol = 1e-9);

}  // namespace mtc
