#pragma once

#include <utility>

#include "vlaser/core/hilbert.hpp"

namespace vlaser {

struct Operator {
  HilbertSpace space;
  CMatrix mat;

  Operator() = default;
  Operator(HilbertSpace s, CMatrix m) : space(std::move(s)), mat(std::move(m)) {
    require(mat.rows() == mat.cols() && int(mat.rows()) == space.dim(), "Operator: matrix is ",
            mat.rows(), "x", mat.cols(), " but space dimension is ", space.dim());
  }

  bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect(mat) <= tol; }
};

struct DensityMatrix {
  HilbertSpace space;
  CMatrix mat;

  DensityMatrix() = default;
  DensityMatrix(HilbertSpace s, CMatrix m, double tol_scale = 1.0)
      : space(std::move(s)), mat(std::move(m)) {
    require(mat.rows() == mat.cols() && int(mat.rows()) == space.dim(), "DensityMatrix: matrix is ",
            mat.rows(), "x", mat.cols(), " but space dimension is ", space.dim());
    validate(tol_scale);
  }

  // trace 1, Hermitian, positive semidefinite (within numerical slack)
  void validate(double tol_scale = 1.0) const {
    double tr_err = std::abs(mat.trace() - Complex(1.0));
    require(tr_err <= 1e-10 * tol_scale, "DensityMatrix: trace deviates from 1 by ", tr_err);
    require(hermiticity_defect(mat) <= 1e-10 * tol_scale,
            "DensityMatrix: not Hermitian, defect = ", hermiticity_defect(mat));
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (mat + mat.adjoint()),
                                              Eigen::EigenvaluesOnly);
    double min_ev = es.eigenvalues().minCoeff();
    require(min_ev >= -1e-8 * tol_scale, "DensityMatrix: negative eigenvalue ", min_ev);
  }
};

inline DensityMatrix pure_state(const HilbertSpace& space, int index) {
  CMatrix m = CMatrix::Zero(space.dim(), space.dim());
  m(index, index) = 1.0;
  return DensityMatrix(space, std::move(m));
}

struct LindbladTerm {
  Operator jump;
  double rate = 0.0;  // angular frequency; enters as rate/2 (2 J rho J' - J'J rho - rho J'J)

  LindbladTerm() = default;
  LindbladTerm(Operator j, double r) : jump(std::move(j)), rate(r) {
    require(rate >= 0.0, "LindbladTerm: negative rate ", rate);
  }
};

// tr(op * rho)
inline Complex expect(const Operator& op, const DensityMatrix& rho) {
  require(op.space == rho.space, "expect: operator and state live on different spaces");
  return (op.mat * rho.mat).trace();
}

inline Complex expect(const CMatrix& op, const CMatrix& rho) { return (op * rho).trace(); }

}  // namespace vlaser
