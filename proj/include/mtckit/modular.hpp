#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mtckit/cyclotomic.hpp"
#include "mtckit/linalg.hpp"

namespace mtc {

// Errors carry a stable kind tag ("NotAFusionRule", "NotSignedPermutation", ...).
class MtcError : public std::runtime_error {
 public:
  MtcError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct Report {
  std::string subject;
  std::vector<Check> checks;

  bool ok() const;
  void add(std::string name, bool pass, std::string detail = {});
  void merge(const Report& other, const std::string& prefix = {});
  const Check* first_failure() const;
  std::string text() const;
};

class LabelSet {
 public:
  explicit LabelSet(std::vector<int> dual);
  static LabelSet self_dual(int n);

  int size() const { return static_cast<int>(dual_.size()); }
  int dual(int i) const { return dual_[i]; }
  const std::vector<int>& duals() const { return dual_; }
  bool all_self_dual() const;
  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<int> dual_;
};

// matrices[i](j, k) = n_{ij}^k
class FusionRules {
 public:
  FusionRules(LabelSet labels, std::vector<QMatrix> matrices);
  // From an integer table n[i][j][k].
  static FusionRules from_table(LabelSet labels, const std::vector<std::vector<std::vector<long>>>& n);

  const LabelSet& labels() const { return labels_; }
  int rank() const { return labels_.size(); }
  const QMatrix& N(int i) const { return mats_[i]; }
  const Rational& n(int i, int j, int k) const { return mats_[i](j, k); }
  long ni(int i, int j, int k) const { return mats_[i](j, k).to_long(); }
  bool integral_nonnegative() const;
  // Type invariants: unit, duality, symmetries, commutativity, associativity.
  Report validate() const;
  std::vector<std::vector<std::vector<long>>> table() const;  // requires integrality
  friend bool operator==(const FusionRules& a, const FusionRules& b);

 private:
  LabelSet labels_;
  std::vector<QMatrix> mats_;
};

class SMatrixTilde {
 public:
  SMatrixTilde(LabelSet labels, CMatrix s);
  const LabelSet& labels() const { return labels_; }
  int rank() const { return labels_.size(); }
  const CMatrix& matrix() const { return s_; }
  const Cyclotomic& operator()(int i, int j) const { return s_(i, j); }
  const Cyclotomic& d(int i) const { return s_(i, 0); }
  Cyclotomic Dsq() const;
  Report validate() const;

 private:
  LabelSet labels_;
  CMatrix s_;
};

using TwistVector = std::vector<Cyclotomic>;

struct ModularSymbol {
  FusionRules fusion;
  SMatrixTilde stilde;
  int s00_sign = 1;
  TwistVector twists;

  int rank() const { return stilde.rank(); }
  Report validate_types() const;
};

struct DerivedQuantities {
  Cyclotomic Dsq, Dplus, Dminus;
  CMatrix lambda;
  std::vector<int> nu;
  Rational c;
  Eigen::MatrixXi A;
};

enum class VerlindeMode { strict, lax };

FusionRules verlinde(const SMatrixTilde& S, VerlindeMode mode = VerlindeMode::strict);
Report check_eigen_relation(const SMatrixTilde& S, const FusionRules& F);
Report check_modular_symbol(const ModularSymbol& sym);
Report twist_ring_identity(const ModularSymbol& sym);
Eigen::MatrixXi vafa_matrix(const FusionRules& F);
Report vafa_check(const ModularSymbol& sym);
std::vector<int> fs_indicators(const ModularSymbol& sym);
Report fs_check(const ModularSymbol& sym);
Cyclotomic gauss_sum(const ModularSymbol& sym, int sign);  // D_+ (sign=+1) or D_-
Rational central_charge(const ModularSymbol& sym, int bits = 128);
// Exact D > 0 as a field element, obtained from D_+ and the central charge.
Cyclotomic total_dimension(const ModularSymbol& sym, int bits = 128);
// Exact D for odd rank from det(S~) = +-D^n.
Cyclotomic total_dimension_odd_rank(const SMatrixTilde& S);
Report label_distinguishability(const SMatrixTilde& S);
bool is_unitary_symbol(const ModularSymbol& sym);
double frobenius_perron(const QMatrix& N);
CMatrix lambda_table(const SMatrixTilde& S);
DerivedQuantities derive(const ModularSymbol& sym, int bits = 128);
Cyclotomic det(const CMatrix& m);

// Builds a symbol from S~ and twists, deriving fusion by the Verlinde formula.
ModularSymbol make_symbol(const SMatrixTilde& S, const TwistVector& twists, int s00_sign = 1,
                          VerlindeMode mode = VerlindeMode::strict);
// Every exact check of this module in one report.
Report full_symbol_suite(const ModularSymbol& sym, int bits = 128);

}  // namespace mtc
