#include "mtckit/linalg.hpp"

namespace mtc {

CMatrix conj(const CMatrix& m) {
  CMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = conj(m(i, j));
  return r;
}

bool equal(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

Eigen::MatrixXcd to_complex(const CMatrix& m) {
  Eigen::MatrixXcd r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = to_complex(m(i, j));
  return r;
}

HMatrix embed(const CMatrix& m, int bits) {
  HMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = embed_complex(m(i, j), bits);
  return r;
}

CMatrix diag(const std::vector<Cyclotomic>& v) {
  const auto n = static_cast<Eigen::Index>(v.size());
  CMatrix r = CMatrix::Constant(n, n, Cyclotomic(0));
  for (Eigen::Index i = 0; i < n; ++i) r(i, i) = v[i];
  return r;
}

CMatrix mul(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Cyclotomic acc(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      r(i, j) = std::move(acc);
    }
  return r;
}

HMatrix mul(const HMatrix& a, const HMatrix& b) {
  HMatrix r(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      hp::Complex acc;
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      r(i, j) = std::move(acc);
    }
  return r;
}

}  // namespace mtc
