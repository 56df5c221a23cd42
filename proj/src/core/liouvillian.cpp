#include "vlaser/core/liouvillian.hpp"

#include <Eigen/LU>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace vlaser {

Superoperator liouvillian(const Operator& h, const std::vector<LindbladTerm>& terms) {
  require(h.is_hermitian(1e-12), "liouvillian: Hamiltonian not Hermitian, defect = ",
          hermiticity_defect(h.mat));
  const int d = h.space.dim();
  const CMatrix id = CMatrix::Identity(d, d);

  // vec(H rho) = (I (x) H) vec, vec(rho H) = (H^T (x) I) vec
  CMatrix lv = -ii * (kron(id, h.mat) - kron(h.mat.transpose(), id));

  for (const auto& t : terms) {
    require(t.jump.space == h.space, "liouvillian: jump operator on a different space");
    const CMatrix& j = t.jump.mat;
    CMatrix jdj = j.adjoint() * j;
    lv += (t.rate / 2.0) *
          (2.0 * kron(j.conjugate(), j) - kron(id, jdj) - kron(jdj.transpose(), id));
  }
  return Superoperator{h.space, std::move(lv)};
}

namespace {

// Two smallest-magnitude eigenvalues of L via inverse block iteration with a
// tiny shift. Returns (null vector, |lambda_1|, |lambda_2|).
struct NullSpaceResult {
  CVector vec;
  double ev1, ev2;
};

NullSpaceResult null_space_pair(const CMatrix& lv) {
  const Eigen::Index n = lv.rows();
  const double scale = lv.cwiseAbs().maxCoeff();
  require(scale > 0.0, "steady_state: zero Liouvillian has a degenerate null space");

  CMatrix shifted = lv;
  shifted.diagonal().array() -= Complex(1e-9 * scale, 0.0);
  Eigen::PartialPivLU<CMatrix> lu(shifted);

  // deterministic pseudo-random second column to probe the next eigenvector
  CMatrix q(n, 2);
  q.col(0).setOnes();
  for (Eigen::Index i = 0; i < n; ++i)
    q.col(1)(i) = Complex(std::cos(0.7 * double(i) + 0.3), std::sin(1.3 * double(i)));
  q.colwise().normalize();

  Eigen::Matrix2cd b;
  for (int it = 0; it < 8; ++it) {
    CMatrix z = lu.solve(q);
    Eigen::HouseholderQR<CMatrix> qr(z);
    q = qr.householderQ() * CMatrix::Identity(n, 2);
    b = q.adjoint() * (lv * q);
    if (it >= 2 && std::abs(b(0, 0)) < 1e-13 * scale) break;
  }
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(b);
  double e0 = std::abs(es.eigenvalues()(0));
  double e1 = std::abs(es.eigenvalues()(1));
  if (e0 > e1) std::swap(e0, e1);

  // polish the null vector alone
  CVector x = q.col(0);
  for (int it = 0; it < 4; ++it) {
    x = lu.solve(x);
    x.normalize();
    if ((lv * x).norm() < 1e-13 * scale) break;
  }
  return {x, e0, e1};
}

}  // namespace

DensityMatrix steady_state(const Superoperator& lv) {
  const int d = lv.state_dim();
  const double scale = lv.mat.cwiseAbs().maxCoeff();

  NullSpaceResult ns = null_space_pair(lv.mat);
  require(ns.ev2 > 1e-8 * scale,
          "steady_state: degenerate null space, two smallest |eigenvalues| = ", ns.ev1, ", ",
          ns.ev2);

  CMatrix x = unvectorize(ns.vec, d);
  // rotate away the arbitrary global phase so the Hermitian part keeps the
  // full weight, then Hermitize and normalize
  Complex tr = x.trace();
  require(std::abs(tr) > 1e-12, "steady_state: null vector is traceless");
  x *= std::conj(tr) / std::abs(tr);
  CMatrix rho = 0.5 * (x + x.adjoint());
  rho /= rho.trace().real();

  double resid = (lv.mat * vectorize(rho)).norm();
  require(resid < 1e-10 * lv.mat.norm(), "steady_state: residual ", resid, " exceeds 1e-10 * ",
          lv.mat.norm());
  return DensityMatrix(lv.space, std::move(rho));
}

namespace {

// TR-BDF2 (gamma = 2 - sqrt(2)): L-stable one-step pair for x' = L x.
// Both stages solve with the same matrix (I - d h L), so one LU per
// step size serves the whole integration.
class TrBdf2Linear {
 public:
  explicit TrBdf2Linear(const CMatrix& lv) : lv_(lv), n_(lv.rows()) {}

  // advance x from t by h; on success updates x and returns true, otherwise
  // suggests a smaller h. err_out receives the scaled error estimate.
  bool step(CVector& x, double h, double rtol, double atol, double& err_out) {
    prepare(h);
    const double g = gamma_;
    CVector f0 = lv_ * x;
    CVector xg = lu_.solve(x + (g * h / 2.0) * f0);
    CVector fg = lv_ * xg;
    const double a1 = 1.0 / (g * (2.0 - g));
    const double a2 = -(1.0 - g) * (1.0 - g) / (g * (2.0 - g));
    CVector x1 = lu_.solve(a1 * xg + a2 * x);
    CVector f1 = lv_ * x1;

    // 3rd-order embedded estimate, filtered through the stage matrix
    CVector est = h * (c0_ * f0 + c1_ * fg + c2_ * f1);
    est = lu_.solve(est);
    double sc = atol + rtol * std::max(x.norm(), x1.norm());
    err_out = est.norm() / sc;
    if (err_out <= 1.0) {
      x = x1;
      return true;
    }
    return false;
  }

 private:
  void prepare(double h) {
    if (h == h_cached_) return;
    const double d = (1.0 - gamma_) / (2.0 - gamma_);  // equals gamma/2
    CMatrix m = CMatrix::Identity(n_, n_) - (d * h) * lv_;
    lu_.compute(m);
    h_cached_ = h;
  }

  const CMatrix& lv_;
  Eigen::Index n_;
  Eigen::PartialPivLU<CMatrix> lu_;
  double h_cached_ = -1.0;
  static constexpr double sqrt2_ = 1.4142135623730951;
  static constexpr double gamma_ = 2.0 - sqrt2_;
  // quadrature-difference weights for the 3rd-order error estimate
  static constexpr double c0_ = (sqrt2_ - 1.0) / 3.0;
  static constexpr double c1_ = -1.0 / 3.0;
  static constexpr double c2_ = (2.0 - sqrt2_) / 3.0;
};

}  // namespace

std::vector<DensityMatrix> time_evolve(const Superoperator& lv, const DensityMatrix& rho0,
                                       const std::vector<double>& t_grid) {
  require(!t_grid.empty(), "time_evolve: empty time grid");
  require(t_grid.front() >= 0.0, "time_evolve: grid starts at negative time");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    require(t_grid[i] > t_grid[i - 1], "time_evolve: grid not strictly increasing at index ", i);
  require(rho0.space == lv.space, "time_evolve: state and Liouvillian on different spaces");

  const double scale = std::max(lv.mat.cwiseAbs().maxCoeff(), 1e-300);
  const double rtol = 1e-10, atol = 1e-14;

  TrBdf2Linear stepper(lv.mat);
  CVector x = vectorize(rho0.mat);
  double t = 0.0;
  double h = 0.1 / scale;

  std::vector<DensityMatrix> out;
  out.reserve(t_grid.size());

  for (double target : t_grid) {
    while (t < target * (1.0 - 1e-14)) {
      double h_try = std::min(h, target - t);
      double err = 0.0;
      if (stepper.step(x, h_try, rtol, atol, err)) {
        t += h_try;
        if (h_try >= h && err < 0.05) h = std::min(h * 3.0, 10.0 * h);
      } else {
        require(h_try > 1e-14 * std::max(target, 1.0), "time_evolve: integrator failure at t = ",
                t, " (step size underflow)");
        h = 0.5 * h_try;
      }
    }
    CMatrix m = unvectorize(x, lv.state_dim());
    m = 0.5 * (m + m.adjoint());
    out.emplace_back(lv.space, std::move(m), 10.0);  // invariant tolerances relaxed x10
  }
  return out;
}

DensityMatrix evolve_to(const Superoperator& lv, const DensityMatrix& rho0, double t) {
  if (t <= 0.0) return rho0;
  return time_evolve(lv, rho0, {t}).back();
}

CVector evolve_weighted_trace(const Superoperator& lv, const CMatrix& x0, const CMatrix& weight,
                              double dt, int n_steps) {
  const int d = lv.state_dim();
  require(int(x0.rows()) == d && int(weight.rows()) == d,
          "evolve_weighted_trace: dimension mismatch");
  // fixed-step exact propagation: one matrix exponential, repeated application
  CMatrix prop = (dt * lv.mat).exp();
  CVector x = vectorize(x0);
  CVector wt = vectorize(weight.adjoint().eval());  // tr(W X) = <vec(W'), vec(X)>
  CVector series(n_steps + 1);
  series(0) = wt.dot(x);
  for (int k = 1; k <= n_steps; ++k) {
    x = prop * x;
    series(k) = wt.dot(x);
  }
  return series;
}

}  // namespace vlaser
