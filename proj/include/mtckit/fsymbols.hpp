#pragma once

#include "mtckit/catalog.hpp"

namespace mtc {

struct ResidualReport {
  Report report;
  double max_residual = 0;  // log-free; values below 1e-300 reported as 0
  long equations = 0;
};

// Standard multiplicity-free pentagon:
// F^{fcd}_e[g,l] F^{abl}_e[f,k] = sum_h F^{abc}_g[f,h] F^{ahd}_e[g,k] F^{bcd}_k[h,l].
ResidualReport verify_pentagon(const AnyonTheory& t, int bits = 128, double tol = 1e-20);
// R^{ca}_e F^{acb}_d[e,g] R^{cb}_g = sum_f F^{cab}_d[e,f] R^{cf}_d F^{abc}_d[f,g],
// and the same with every R^{xy}_z replaced by 1/R^{yx}_z.
ResidualReport verify_hexagon(const AnyonTheory& t, int bits = 128, double tol = 1e-20);
// R^{aa}_0 = nu_a / theta_a for self-dual a; R^{ab}_c R^{ba}_c = theta_c / (theta_a theta_b).
// sum_c d_c R^{aa}_c = d_a theta_a for every a.
Report ribbon_checks(const AnyonTheory& t);

// Copy of t with the sign of one F entry flipped (the first F^{abc}_d with a,b,c nontrivial).
AnyonTheory mutate_f(const AnyonTheory& t, std::string* where = nullptr);

// Check groups of catalog verify: "core" (symbol suite, stored fusion, twist inequalities,
// central charge), "ribbon", "pentagon", "hexagon", "galois", "congruence".
const std::vector<std::string>& theory_check_names();
// Empty `which` runs everything. Pentagon and hexagon report "not applicable" without F data.
Report theory_suite(const AnyonTheory& t, const std::vector<std::string>& which = {}, int bits = 128);
// |D_+ / (s00 D) - e^{pi i c/4}| for the stored c.
hp::Real charge_residual(const AnyonTheory& t, int bits = 128);

}  // namespace mtc
