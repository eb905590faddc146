#pragma once

#include <Eigen/Core>
#include <Eigen/Dense>

#include "mtckit/cyclotomic.hpp"
#include "mtckit/hp.hpp"
#include "mtckit/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<mtc::Rational> : GenericNumTraits<mtc::Rational> {
  typedef mtc::Rational Real;
  typedef mtc::Rational NonInteger;
  typedef mtc::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
};

template <>
struct NumTraits<mtc::Cyclotomic> : GenericNumTraits<mtc::Cyclotomic> {
  typedef mtc::Cyclotomic Real;
  typedef mtc::Cyclotomic NonInteger;
  typedef mtc::Cyclotomic Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 64,
    AddCost = 256,
    MulCost = 4096
  };
};

template <>
struct NumTraits<mtc::hp::Complex> : GenericNumTraits<mtc::hp::Complex> {
  typedef mtc::hp::Real Real;
  typedef mtc::hp::Complex NonInteger;
  typedef mtc::hp::Complex Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 128
  };
};

}  // namespace Eigen

namespace mtc {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CMatrix = Mat<Cyclotomic>;
using QMatrix = Mat<Rational>;
using HMatrix = Mat<hp::Complex>;

// Entrywise complex conjugation.
CMatrix conj(const CMatrix& m);
bool equal(const CMatrix& a, const CMatrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);
Eigen::MatrixXcd to_complex(const CMatrix& m);
HMatrix embed(const CMatrix& m, int bits);
CMatrix diag(const std::vector<Cyclotomic>& v);
// Products done entry by entry; avoids temporaries Eigen's blocked kernels allocate.
CMatrix mul(const CMatrix& a, const CMatrix& b);
HMatrix mul(const HMatrix& a, const HMatrix& b);

}  // namespace mtc
