#include "mtckit/modular.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numeric>
#include <sstream>

namespace mtc {

// ---------------------------------------------------------------- reports

bool Report::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.detail});
}

const Check* Report::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

std::string Report::text() const {
  std::ostringstream os;
  if (!subject.empty()) os << subject << "\n";
  for (const auto& c : checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- labels

LabelSet::LabelSet(std::vector<int> dual) : dual_(std::move(dual)) {
  const int n = size();
  if (n < 1) throw MtcError("InvalidLabels", "rank must be at least 1");
  if (dual_[0] != 0) throw MtcError("InvalidLabels", "dual(0) must be 0");
  for (int i = 0; i < n; ++i) {
    if (dual_[i] < 0 || dual_[i] >= n) throw MtcError("InvalidLabels", "dual index out of range");
    if (dual_[dual_[i]] != i) throw MtcError("InvalidLabels", "duality is not an involution");
  }
}

LabelSet LabelSet::self_dual(int n) {
  std::vector<int> d(n);
  std::iota(d.begin(), d.end(), 0);
  return LabelSet(d);
}

bool LabelSet::all_self_dual() const {
  for (int i = 0; i < size(); ++i)
    if (dual_[i] != i) return false;
  return true;
}

// ---------------------------------------------------------------- fusion

FusionRules::FusionRules(LabelSet labels, std::vector<QMatrix> matrices)
    : labels_(std::move(labels)), mats_(std::move(matrices)) {
  const int n = labels_.size();
  if (static_cast<int>(mats_.size()) != n) throw MtcError("InvalidFusion", "need one matrix per label");
  for (const auto& m : mats_)
    if (m.rows() != n || m.cols() != n) throw MtcError("InvalidFusion", "fusion matrix has wrong shape");
}

FusionRules FusionRules::from_table(LabelSet labels, const std::vector<std::vector<std::vector<long>>>& t) {
  const int n = labels.size();
  std::vector<QMatrix> mats;
  for (int i = 0; i < n; ++i) {
    QMatrix m(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m(j, k) = Rational(t.at(i).at(j).at(k));
    mats.push_back(std::move(m));
  }
  return FusionRules(std::move(labels), std::move(mats));
}

bool FusionRules::integral_nonnegative() const {
  for (const auto& m : mats_)
    for (Eigen::Index j = 0; j < m.rows(); ++j)
      for (Eigen::Index k = 0; k < m.cols(); ++k)
        if (!m(j, k).is_integer() || m(j, k).sign() < 0) return false;
  return true;
}

std::vector<std::vector<std::vector<long>>> FusionRules::table() const {
  const int n = rank();
  std::vector<std::vector<std::vector<long>>> t(n, std::vector<std::vector<long>>(n, std::vector<long>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t[i][j][k] = ni(i, j, k);
  return t;
}

bool operator==(const FusionRules& a, const FusionRules& b) {
  if (!(a.labels_ == b.labels_)) return false;
  for (int i = 0; i < a.rank(); ++i)
    if (a.mats_[i] != b.mats_[i]) return false;
  return true;
}

namespace {
std::string idx3(int i, int j, int k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}
}  // namespace

Report FusionRules::validate() const {
  Report r;
  r.subject = "fusion rules";
  const int n = rank();
  auto d = [&](int i) { return labels_.dual(i); };
  auto n_ = [&](int i, int j, int k) -> const Rational& { return mats_[i](j, k); };
  std::string bad;
  for (int j = 0; j < n && bad.empty(); ++j)
    for (int k = 0; k < n && bad.empty(); ++k)
      if (n_(0, j, k) != Rational(j == k ? 1 : 0)) bad = idx3(0, j, k);
  r.add("unit", bad.empty(), bad);
  bad.clear();
  for (int i = 0; i < n && bad.empty(); ++i)
    for (int j = 0; j < n && bad.empty(); ++j)
      if (n_(i, 0, j) != Rational(i == j ? 1 : 0)) bad = idx3(i, 0, j);
  r.add("row0", bad.empty(), bad);
  bad.clear();
  for (int i = 0; i < n && bad.empty(); ++i)
    for (int j = 0; j < n && bad.empty(); ++j)
      for (int k = 0; k < n && bad.empty(); ++k) {
        const Rational& v = n_(i, j, k);
        if (v != n_(j, i, k) || v != n_(d(i), d(j), d(k)) || v != n_(i, d(k), d(j))) bad = idx3(i, j, k);
      }
  r.add("symmetries", bad.empty(), bad);
  bad.clear();
  for (int i = 0; i < n && bad.empty(); ++i)
    for (int j = 0; j < n && bad.empty(); ++j)
      for (int k = 0; k < n && bad.empty(); ++k)
        if (n_(d(i), j, k) != n_(i, d(j), d(k))) bad = idx3(i, j, k);
  r.add("duality", bad.empty(), bad);
  bad.clear();
  for (int i = 0; i < n && bad.empty(); ++i)
    for (int j = 0; j < n && bad.empty(); ++j) {
      QMatrix ab = mats_[i] * mats_[j];
      if (ab != mats_[j] * mats_[i]) {
        bad = "N" + std::to_string(i) + " N" + std::to_string(j);
        break;
      }
      QMatrix sum = QMatrix::Constant(n, n, Rational(0));
      for (int k = 0; k < n; ++k)
        if (!n_(i, j, k).is_zero()) sum += mats_[k] * n_(i, j, k);
      if (ab != sum) bad = "assoc N" + std::to_string(i) + " N" + std::to_string(j);
    }
  r.add("commutative-associative", bad.empty(), bad);
  return r;
}

// ---------------------------------------------------------------- S~

SMatrixTilde::SMatrixTilde(LabelSet labels, CMatrix s) : labels_(std::move(labels)), s_(std::move(s)) {
  if (s_.rows() != labels_.size() || s_.cols() != labels_.size())
    throw MtcError("InvalidSMatrix", "S~ shape does not match the label set");
}

Cyclotomic SMatrixTilde::Dsq() const {
  Cyclotomic acc(0);
  for (int i = 0; i < rank(); ++i) acc += s_(i, 0) * s_(i, 0);
  return acc;
}

Report SMatrixTilde::validate() const {
  Report r;
  r.subject = "S~ invariants";
  const int n = rank();
  r.add("s00=1", s_(0, 0) == Cyclotomic(1));
  std::string bad;
  for (int i = 0; i < n && bad.empty(); ++i)
    for (int j = i + 1; j < n && bad.empty(); ++j)
      if (s_(i, j) != s_(j, i)) bad = std::to_string(i) + "," + std::to_string(j);
  r.add("symmetric", bad.empty(), bad);
  bad.clear();
  for (int i = 0; i < n && bad.empty(); ++i)
    for (int j = 0; j < n && bad.empty(); ++j)
      if (s_(i, labels_.dual(j)) != conj(s_(i, j))) bad = std::to_string(i) + "," + std::to_string(j);
  r.add("dual-conjugate", bad.empty(), bad);
  bad.clear();
  for (int i = 0; i < n && bad.empty(); ++i)
    if (s_(i, 0).is_zero()) bad = std::to_string(i);
  r.add("d_i nonzero", bad.empty(), bad);
  const Cyclotomic D2 = Dsq();
  bad.clear();
  const CMatrix cs = conj(s_);
  for (int i = 0; i < n && bad.empty(); ++i)
    for (int j = 0; j < n && bad.empty(); ++j) {
      Cyclotomic acc(0);
      for (int k = 0; k < n; ++k) acc += s_(i, k) * cs(k, j);
      if (acc != (i == j ? D2 : Cyclotomic(0))) bad = std::to_string(i) + "," + std::to_string(j);
    }
  r.add("unitary S~ conj(S~) = D^2 I", bad.empty(), bad);
  return r;
}

// ---------------------------------------------------------------- symbol

Report ModularSymbol::validate_types() const {
  Report r;
  r.subject = "symbol types";
  const int n = rank();
  r.add("rank agreement", fusion.rank() == n && static_cast<int>(twists.size()) == n);
  if (static_cast<int>(twists.size()) != n) return r;
  r.add("theta_0=1", twists[0] == Cyclotomic(1));
  std::string bad;
  for (int i = 0; i < n && bad.empty(); ++i)
    if (twists[stilde.labels().dual(i)] != twists[i]) bad = std::to_string(i);
  r.add("theta dual-invariant", bad.empty(), bad);
  bad.clear();
  for (int i = 0; i < n && bad.empty(); ++i)
    if (conj(twists[i]) * twists[i] != Cyclotomic(1)) bad = std::to_string(i);
  r.add("theta unimodular", bad.empty(), bad);
  r.add("s00 sign", s00_sign == 1 || s00_sign == -1);
  return r;
}

FusionRules verlinde(const SMatrixTilde& S, VerlindeMode mode) {
  if (const Check* f = S.validate().first_failure())
    throw MtcError("InvalidSMatrix", f->name + " " + f->detail);
  const int n = S.rank();
  // Numeric guess, then exact confirmation through N_i S~ = S~ Lambda_i (which,
  // with S~ invertible, pins N_i down uniquely and is the same identity).
  const Eigen::MatrixXcd s = to_complex(S.matrix());
  std::complex<double> D2 = 0;
  for (int i = 0; i < n; ++i) D2 += s(i, 0) * s(i, 0);
  bool integral = true;
  std::vector<std::vector<std::vector<long>>> guess(n, std::vector<std::vector<long>>(n, std::vector<long>(n)));
  for (int i = 0; i < n && integral; ++i)
    for (int j = 0; j < n && integral; ++j)
      for (int k = 0; k < n && integral; ++k) {
        std::complex<double> acc = 0;
        for (int m = 0; m < n; ++m) acc += s(i, m) * s(j, m) * std::conj(s(k, m)) / s(m, 0);
        acc /= D2;
        double rr = std::round(acc.real());
        if (std::abs(acc - std::complex<double>(rr, 0)) > 1e-6) integral = false;
        guess[i][j][k] = static_cast<long>(rr);
      }
  if (integral) {
    FusionRules F = FusionRules::from_table(S.labels(), guess);
    if (check_eigen_relation(S, F).ok()) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            if (guess[i][j][k] < 0)
              throw MtcError("NotAFusionRule", idx3(i, j, k) + " = " + std::to_string(guess[i][j][k]));
      return F;
    }
  }
  // Exact formula, coefficient by coefficient.
  const Cyclotomic invD2 = inverse(S.Dsq());
  std::vector<Cyclotomic> invd(n);
  for (int m = 0; m < n; ++m) invd[m] = inverse(S.d(m));
  const CMatrix cs = conj(S.matrix());
  std::vector<QMatrix> mats(n, QMatrix::Constant(n, n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Cyclotomic> t(n);
      for (int m = 0; m < n; ++m) t[m] = S(i, m) * S(j, m) * invd[m];
      for (int k = 0; k < n; ++k) {
        Cyclotomic acc(0);
        for (int m = 0; m < n; ++m) acc += t[m] * cs(k, m);
        acc *= invD2;
        if (!acc.is_rational()) throw MtcError("NotAFusionRule", idx3(i, j, k) + " = " + acc.str() + " is not rational");
        Rational v = acc.rational_value();
        if (v.sign() < 0) throw MtcError("NotAFusionRule", idx3(i, j, k) + " = " + v.str() + " is negative");
        if (mode == VerlindeMode::strict && !v.is_integer())
          throw MtcError("NotAFusionRule", idx3(i, j, k) + " = " + v.str() + " is not an integer");
        mats[i](j, k) = v;
      }
    }
  return FusionRules(S.labels(), std::move(mats));
}

Report check_eigen_relation(const SMatrixTilde& S, const FusionRules& F) {
  Report r;
  r.subject = "eigen relation N_i S~ = S~ Lambda_i";
  const int n = S.rank();
  std::string bad;
  for (int i = 0; i < n && bad.empty(); ++i)
    for (int a = 0; a < n && bad.empty(); ++a)
      for (int j = 0; j < n && bad.empty(); ++j) {
        Cyclotomic lhs(0);
        for (int k = 0; k < n; ++k)
          if (!F.n(i, j, k).is_zero()) lhs += S(k, a).scaled(F.n(i, j, k));
        // (N_i S~)_{ja} d_a = s~_{ja} s~_{ia}
        if (lhs * S.d(a) != S(j, a) * S(i, a)) bad = "(" + std::to_string(i) + "," + std::to_string(a) + ")";
      }
  r.add("N_i S~ = S~ Lambda_i", bad.empty(), bad);
  return r;
}

Cyclotomic gauss_sum(const ModularSymbol& sym, int sign) {
  Cyclotomic acc(0);
  for (int i = 0; i < sym.rank(); ++i) {
    Cyclotomic t = sign > 0 ? sym.twists[i] : conj(sym.twists[i]);
    acc += t * sym.stilde.d(i) * sym.stilde.d(i);
  }
  return acc;
}

Report check_modular_symbol(const ModularSymbol& sym) {
  Report r = sym.validate_types();
  r.subject = "modular symbol";
  if (!r.ok()) return r;
  const int n = sym.rank();
  const CMatrix& s = sym.stilde.matrix();
  const auto& th = sym.twists;
  const Cyclotomic Dp = gauss_sum(sym, 1), Dm = gauss_sum(sym, -1), D2 = sym.stilde.Dsq();
  // (a) T S~ T S~ T = D_+ S~
  CMatrix tst(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tst(i, j) = th[i] * s(i, j) * th[j];
  std::string bad;
  for (int i = 0; i < n && bad.empty(); ++i)
    for (int k = 0; k < n && bad.empty(); ++k) {
      Cyclotomic acc(0);
      for (int j = 0; j < n; ++j) acc += tst(i, j) * s(j, k);
      if (acc * th[k] != Dp * s(i, k)) bad = std::to_string(i) + "," + std::to_string(k);
    }
  r.add("twist equation T S~ T S~ T = D_+ S~", bad.empty(), bad);
  bad.clear();
  for (int i = 0; i < n && bad.empty(); ++i)
    for (int k = 0; k < n && bad.empty(); ++k) {
      Cyclotomic acc(0);
      for (int j = 0; j < n; ++j) acc += s(i, j) * s(j, k);
      Cyclotomic want = (sym.stilde.labels().dual(i) == k) ? D2 : Cyclotomic(0);
      if (acc != want) bad = std::to_string(i) + "," + std::to_string(k);
    }
  r.add("S~^2 = D^2 C", bad.empty(), bad);
  r.add("balance D_+ D_- = D^2", Dp * Dm == D2);
  return r;
}

Report twist_ring_identity(const ModularSymbol& sym) {
  Report r;
  r.subject = "twist ring identity";
  const int n = sym.rank();
  const auto& th = sym.twists;
  const auto& F = sym.fusion;
  std::string bad;
  for (int i = 0; i < n && bad.empty(); ++i)
    for (int j = 0; j < n && bad.empty(); ++j) {
      const int id = sym.stilde.labels().dual(i);
      Cyclotomic rhs(0);
      for (int k = 0; k < n; ++k)
        if (!F.n(id, j, k).is_zero()) rhs += (sym.stilde.d(k) * th[k]).scaled(F.n(id, j, k));
      if (th[i] * th[j] * sym.stilde(i, j) != rhs) bad = std::to_string(i) + "," + std::to_string(j);
    }
  r.add("theta_i theta_j s~_ij = sum_k n_{i*j}^k d_k theta_k", bad.empty(), bad);
  return r;
}

Eigen::MatrixXi vafa_matrix(const FusionRules& F) {
  const int n = F.rank();
  Eigen::MatrixXi A(n, n);
  for (int i = 0; i < n; ++i) {
    const int id = F.labels().dual(i);
    for (int j = 0; j < n; ++j)
      A(i, j) = static_cast<int>(2 * F.ni(i, id, j) * F.ni(i, j, i) + F.ni(i, i, j) * F.ni(j, id, i));
  }
  return A;
}

Report vafa_check(const ModularSymbol& sym) {
  Report r;
  r.subject = "Vafa relation";
  const int n = sym.rank();
  std::vector<long> ord(n), ex(n);
  long L = 1;
  for (int i = 0; i < n; ++i) {
    ElementKind k = classify_element(sym.twists[i]);
    if (k.kind != ElementKind::root_of_unity)
      throw MtcError("NonTorsionTwist", "theta_" + std::to_string(i) + " is not a root of unity");
    ord[i] = k.order;
    ex[i] = k.exponent;
    L = std::lcm(L, k.order);
  }
  std::vector<long> e(n);
  for (int i = 0; i < n; ++i) e[i] = ex[i] * (L / ord[i]);
  const Eigen::MatrixXi A = vafa_matrix(sym.fusion);
  for (int i = 0; i < n; ++i) {
    long lhs = 0, rowsum = 0;
    for (int j = 0; j < n; ++j) {
      lhs += 3L * A(i, j) * e[j];
      rowsum += A(i, j);
    }
    long diff = (lhs - 4 * rowsum * e[i]) % L;
    r.add("label " + std::to_string(i), diff == 0,
          diff == 0 ? "" : "3 sum A_ij e_j - 4 (sum A_ij) e_i = " + std::to_string(diff) + " mod " + std::to_string(L));
  }
  return r;
}

namespace {

std::vector<Cyclotomic> fs_values(const ModularSymbol& sym) {
  const int n = sym.rank();
  const auto& th = sym.twists;
  std::vector<Cyclotomic> th2(n), ith2(n);
  for (int i = 0; i < n; ++i) {
    th2[i] = th[i] * th[i];
    ith2[i] = conj(th2[i]);
  }
  const Cyclotomic invD2 = inverse(sym.stilde.Dsq());
  std::vector<Cyclotomic> out(n);
  for (int k = 0; k < n; ++k) {
    Cyclotomic acc(0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const Rational& c = sym.fusion.n(k, j, i);
        if (c.is_zero()) continue;
        acc += (sym.stilde.d(i) * sym.stilde.d(j) * th2[i] * ith2[j]).scaled(c);
      }
    out[k] = acc * invD2;
  }
  return out;
}

}  // namespace

std::vector<int> fs_indicators(const ModularSymbol& sym) {
  const auto vals = fs_values(sym);
  std::vector<int> nu;
  for (int k = 0; k < sym.rank(); ++k) {
    const Cyclotomic& v = vals[k];
    bool ok = v.is_rational();
    int iv = 0;
    if (ok) {
      Rational q = v.rational_value();
      ok = q.is_integer() && abs(q) <= Rational(1);
      if (ok) iv = static_cast<int>(q.to_long());
      if (ok && sym.stilde.labels().dual(k) != k && iv != 0) ok = false;
      if (ok && sym.stilde.labels().dual(k) == k && iv == 0) ok = false;
    }
    if (!ok) throw MtcError("IndicatorOutOfRange", "nu_" + std::to_string(k) + " = " + v.str());
    nu.push_back(iv);
  }
  return nu;
}

Report fs_check(const ModularSymbol& sym) {
  Report r;
  r.subject = "Frobenius-Schur indicators";
  try {
    auto nu = fs_indicators(sym);
    std::string s;
    for (int v : nu) s += (s.empty() ? "" : ",") + std::to_string(v);
    r.add("nu in {0,+-1}", true, s);
  } catch (const MtcError& e) {
    r.add("nu in {0,+-1}", false, e.what());
  }
  return r;
}

namespace {

struct ChargeResult {
  Rational c0;  // before the s00 sign adjustment
  Cyclotomic D;
};

ChargeResult charge_and_D(const ModularSymbol& sym, int bits) {
  const Cyclotomic Dp = gauss_sum(sym, 1);
  const Cyclotomic D2 = sym.stilde.Dsq();
  hp::PrecisionScope scope(std::max(bits, 128));
  hp::Complex z = embed_complex(Dp, std::max(bits, 128));
  hp::Real craw = 4 * hp::arg(z) / hp::pi();
  while (craw < 0) craw += 8;
  while (craw >= 8) craw -= 8;
  const long N = minimal_conductor(Dp);
  const long qmax = 16 * std::lcm(N, 8L);
  hp::Real tol = std::max(hp::Real("1e-20"), boost::multiprecision::pow(hp::Real(2), -(bits - 12)));
  for (long q = 1; q <= qmax; ++q) {
    hp::Real pq = craw * q;
    hp::Real p = boost::multiprecision::round(pq);
    if (boost::multiprecision::abs(pq - p) / q >= tol) continue;
    Rational c(mpz_class(p.convert_to<long>()), mpz_class(q));
    c = frac(c / Rational(8)) * Rational(8);
    // exact confirmation: x = D_+ e^{-pi i c/4} must be a positive real square root of D^2
    Cyclotomic x = Dp * conj(exp2pii(c / Rational(8)));
    if (conj(x) != x || x * x != D2) continue;
    if (to_complex(x).real() <= 0) continue;
    return {c, x};
  }
  throw MtcError("NotRational", "central charge does not snap to a rational");
}

}  // namespace

Rational central_charge(const ModularSymbol& sym, int bits) {
  Rational c = charge_and_D(sym, bits).c0;
  if (sym.s00_sign < 0) c = frac((c + Rational(4)) / Rational(8)) * Rational(8);
  return c;
}

Cyclotomic total_dimension(const ModularSymbol& sym, int bits) { return charge_and_D(sym, bits).D; }

Cyclotomic det(const CMatrix& m) {
  const auto n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (n <= 5) {
    Cyclotomic acc(0);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (m(0, j).is_zero()) continue;
      CMatrix minor(n - 1, n - 1);
      for (Eigen::Index r = 1; r < n; ++r)
        for (Eigen::Index c = 0, cc = 0; c < n; ++c)
          if (c != j) minor(r - 1, cc++) = m(r, c);
      Cyclotomic t = m(0, j) * det(minor);
      acc += (j % 2 == 0) ? t : -t;
    }
    return acc;
  }
  CMatrix a = m;
  Cyclotomic d(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Cyclotomic(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      d = -d;
    }
    d *= a(c, c);
    Cyclotomic inv = inverse(a(c, c));
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      Cyclotomic f = a(r, c) * inv;
      for (Eigen::Index k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return d;
}

Cyclotomic total_dimension_odd_rank(const SMatrixTilde& S) {
  const int n = S.rank();
  if (n % 2 == 0) throw MtcError("EvenRank", "D need not lie in the fusion field for even rank");
  // det(S~)^2 = det(C) D^{2n}; with dual pairs det(S~) is i D^n up to sign and D can leave the field
  if (!S.labels().all_self_dual()) throw MtcError("NotSelfDual", "det(S~) determines D only for self-dual labels");
  const Cyclotomic D2 = S.Dsq();
  Cyclotomic x = det(S.matrix());
  Cyclotomic p(1);
  for (int i = 0; i < n / 2; ++i) p *= D2;
  x = x * inverse(p);
  if (to_complex(x).real() < 0) x = -x;
  if (x * x != D2) throw std::logic_error("total_dimension_odd_rank: det(S~) is not +-D^n");
  return x;
}

CMatrix lambda_table(const SMatrixTilde& S) {
  const int n = S.rank();
  CMatrix l(n, n);
  for (int a = 0; a < n; ++a) {
    Cyclotomic inv = inverse(S(0, a));
    for (int i = 0; i < n; ++i) l(i, a) = S(i, a) * inv;
  }
  return l;
}

Report label_distinguishability(const SMatrixTilde& S) {
  Report r;
  r.subject = "label distinguishability";
  const int n = S.rank();
  std::string bad;
  for (int j = 0; j < n && bad.empty(); ++j)
    for (int k = j + 1; k < n && bad.empty(); ++k) {
      bool same = true;
      for (int i = 0; i < n && same; ++i) same = (S(i, j) * S(0, k) == S(i, k) * S(0, j));
      if (same) bad = std::to_string(j) + "," + std::to_string(k);
    }
  r.add("distinct lambda columns", bad.empty(), bad);
  return r;
}

double frobenius_perron(const QMatrix& N) {
  const auto n = N.rows();
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = N(i, j).to_double();
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  double rho = 0;
  for (Eigen::Index i = 0; i < n; ++i) rho = std::max(rho, std::abs(es.eigenvalues()[i]));
  return rho;
}

bool is_unitary_symbol(const ModularSymbol& sym) {
  for (int i = 0; i < sym.rank(); ++i) {
    std::complex<double> d = to_complex(sym.stilde.d(i));
    if (std::abs(d.imag()) > 1e-9) return false;
    if (std::abs(d.real() - frobenius_perron(sym.fusion.N(i))) > 1e-9) return false;
  }
  return true;
}

DerivedQuantities derive(const ModularSymbol& sym, int bits) {
  DerivedQuantities q;
  q.Dsq = sym.stilde.Dsq();
  q.Dplus = gauss_sum(sym, 1);
  q.Dminus = gauss_sum(sym, -1);
  q.lambda = lambda_table(sym.stilde);
  q.nu = fs_indicators(sym);
  q.c = central_charge(sym, bits);
  q.A = vafa_matrix(sym.fusion);
  return q;
}

ModularSymbol make_symbol(const SMatrixTilde& S, const TwistVector& twists, int s00_sign, VerlindeMode mode) {
  return ModularSymbol{verlinde(S, mode), S, s00_sign, twists};
}

Report full_symbol_suite(const ModularSymbol& sym, int bits) {
  Report r;
  r.subject = "modular symbol suite";
  r.merge(sym.validate_types(), "types: ");
  r.merge(sym.fusion.validate(), "fusion: ");
  r.merge(sym.stilde.validate(), "S~: ");
  try {
    FusionRules v = verlinde(sym.stilde, sym.fusion.integral_nonnegative() ? VerlindeMode::strict : VerlindeMode::lax);
    r.add("verlinde reproduces fusion", v == sym.fusion);
  } catch (const MtcError& e) {
    r.add("verlinde reproduces fusion", false, e.what());
  }
  r.merge(check_eigen_relation(sym.stilde, sym.fusion), "eigen: ");
  r.merge(check_modular_symbol(sym), "symbol: ");
  r.merge(twist_ring_identity(sym), "ring: ");
  try {
    r.merge(vafa_check(sym), "vafa: ");
  } catch (const MtcError& e) {
    r.add("vafa", false, e.what());
  }
  r.merge(fs_check(sym), "fs: ");
  r.merge(label_distinguishability(sym.stilde), "labels: ");
  try {
    r.add("central charge", true, central_charge(sym, bits).str());
  } catch (const MtcError& e) {
    r.add("central charge", false, e.what());
  }
  return r;
}

}  // namespace mtc
