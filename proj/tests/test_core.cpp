#include <random>

#include "doctest.h"
#include "vlaser/core/liouvillian.hpp"
#include "vlaser/core/operator.hpp"

using namespace vlaser;

namespace {

CMatrix random_density(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMatrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = Complex(n(rng), n(rng));
  CMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return rho;
}

// driven two-level atom: H = -Delta s22 + Omega (s21 + s12), decay Gamma
Superoperator two_level(double omega, double delta, double gamma) {
  HilbertSpace space({2});
  CMatrix s12 = transition_local(2, 0, 1);
  CMatrix s22 = transition_local(2, 1, 1);
  CMatrix h = -delta * s22 + omega * (s12.adjoint() + s12);
  return liouvillian(Operator(space, h), {LindbladTerm(Operator(space, s12), gamma)});
}

}  // namespace

TEST_CASE("embed places local operators with identities around them") {
  HilbertSpace single({3});
  CMatrix m = embed(single, transition_local(3, 1, 0), 0);
  CHECK(m.rows() == 3);
  CHECK(m(1, 0) == Complex(1.0));
  CHECK(m.cwiseAbs().sum() == doctest::Approx(1.0));

  HilbertSpace pair({3, 2}, 2);
  CHECK((embed(pair, identity_local(3), 0) - CMatrix::Identity(6, 6)).norm() == 0.0);

  CMatrix a = destroy_local(2);
  CMatrix expected = kron(identity_local(3), a);
  CHECK((embed(pair, a, 1) - expected).norm() == 0.0);

  CHECK_THROWS_AS(embed(pair, identity_local(4), 0), SimError);
  CHECK_THROWS_AS(embed(pair, identity_local(3), 2), SimError);
}

TEST_CASE("pure decay Liouvillian moves population |2> -> |1>") {
  HilbertSpace space({2});
  double gamma = 1.7;
  CMatrix h = CMatrix::Zero(2, 2);
  Superoperator lv = liouvillian(Operator(space, h),
                                 {LindbladTerm(Operator(space, transition_local(2, 0, 1)), gamma)});
  CMatrix rho22 = transition_local(2, 1, 1);
  CMatrix drho = unvectorize(lv.mat * vectorize(rho22), 2);
  CMatrix expected = gamma * (transition_local(2, 0, 0) - rho22);
  CHECK((drho - expected).norm() < 1e-14);
}

TEST_CASE("liouvillian rejects non-Hermitian Hamiltonians and mixed spaces") {
  HilbertSpace space({2});
  CMatrix h = transition_local(2, 0, 1);  // not Hermitian
  CHECK_THROWS_AS(liouvillian(Operator(space, h), {}), SimError);

  HilbertSpace other({3});
  CHECK_THROWS_AS(liouvillian(Operator(space, CMatrix::Zero(2, 2)),
                              {LindbladTerm(Operator(other, CMatrix::Zero(3, 3)), 1.0)}),
                  SimError);
}

TEST_CASE("trace preservation and Hermiticity preservation on random states") {
  std::mt19937_64 rng(12345);
  Superoperator lv = two_level(0.8, -0.3, 1.1);
  for (int k = 0; k < 100; ++k) {
    CMatrix rho = random_density(2, rng);
    CMatrix drho = unvectorize(lv.mat * vectorize(rho), 2);
    CHECK(std::abs(drho.trace()) < 1e-10);
    CHECK(hermiticity_defect(drho) < 1e-12);
  }
}

TEST_CASE("two-level steady state matches the analytic optical Bloch result") {
  // steady <s22> = Omega^2 / (Gamma^2/4 + Delta^2 + 2 Omega^2)
  for (auto [omega, delta, gamma] : {std::array<double, 3>{0.5, 0.0, 1.0},
                                     std::array<double, 3>{2.0, 1.5, 0.7},
                                     std::array<double, 3>{0.1, -3.0, 2.0}}) {
    DensityMatrix rho = steady_state(two_level(omega, delta, gamma));
    double expected =
        omega * omega / (gamma * gamma / 4.0 + delta * delta + 2.0 * omega * omega);
    CHECK(rho.mat(1, 1).real() == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("steady state saturates to 1/2 under strong resonant drive") {
  DensityMatrix rho = steady_state(two_level(100.0, 0.0, 1.0));
  CHECK(std::abs(rho.mat(1, 1).real() - 0.5) < 1e-3);
}

TEST_CASE("steady state of pure decay is the ground state") {
  HilbertSpace space({2});
  Superoperator lv = liouvillian(
      Operator(space, CMatrix::Zero(2, 2)),
      {LindbladTerm(Operator(space, transition_local(2, 0, 1)), 2.3)});
  DensityMatrix rho = steady_state(lv);
  CHECK(std::abs(rho.mat(0, 0).real() - 1.0) < 1e-12);
}

TEST_CASE("steady state detects a degenerate null space") {
  // two decoupled decay channels, no coherent mixing: the null space is 2d
  HilbertSpace space({3});
  CMatrix j = transition_local(3, 0, 2);  // |3> decays to |1>, |2> untouched
  Superoperator lv =
      liouvillian(Operator(space, CMatrix::Zero(3, 3)), {LindbladTerm(Operator(space, j), 1.0)});
  CHECK_THROWS_AS(steady_state(lv), SimError);
}

TEST_CASE("time evolution: frozen generator keeps the state") {
  HilbertSpace space({2});
  Superoperator lv{space, CMatrix::Zero(4, 4)};
  DensityMatrix rho0 = pure_state(space, 1);
  auto out = time_evolve(lv, rho0, {0.5, 2.0});
  for (const auto& r : out) CHECK((r.mat - rho0.mat).norm() < 1e-12);
}

TEST_CASE("time evolution reproduces exponential decay") {
  double gamma = 1.3;
  Superoperator lv = two_level(0.0, 0.0, gamma);
  DensityMatrix rho0 = pure_state(lv.space, 1);
  std::vector<double> grid{0.1, 0.7, 1.9, 4.0};
  auto out = time_evolve(lv, rho0, grid);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    double expected = std::exp(-gamma * grid[k]);
    CHECK(std::abs(out[k].mat(1, 1).real() - expected) < 1e-8);
  }
}

TEST_CASE("time evolution rejects bad grids") {
  Superoperator lv = two_level(1.0, 0.0, 1.0);
  DensityMatrix rho0 = pure_state(lv.space, 0);
  CHECK_THROWS_AS(time_evolve(lv, rho0, {1.0, 0.5}), SimError);
  CHECK_THROWS_AS(time_evolve(lv, rho0, {-1.0, 0.5}), SimError);
}

TEST_CASE("long time evolution agrees with the steady state") {
  Superoperator lv = two_level(0.9, 0.4, 1.0);
  DensityMatrix rho_ss = steady_state(lv);
  DensityMatrix rho_t = evolve_to(lv, pure_state(lv.space, 0), 50.0);
  CHECK((rho_t.mat - rho_ss.mat).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("expect computes traces and flags mismatched spaces") {
  HilbertSpace space({3});
  DensityMatrix rho = pure_state(space, 0);
  CHECK(expect(Operator(space, identity_local(3)), rho).real() == doctest::Approx(1.0));
  CHECK(std::abs(expect(Operator(space, transition_local(3, 1, 1)), rho)) < 1e-15);

  HilbertSpace fock({5}, 0);
  DensityMatrix n3 = pure_state(fock, 3);
  CMatrix num = destroy_local(5).adjoint() * destroy_local(5);
  CHECK(expect(Operator(fock, num), n3).real() == doctest::Approx(3.0));

  CHECK_THROWS_AS(expect(Operator(fock, num), rho), SimError);
}

TEST_CASE("evolved states keep density-matrix invariants") {
  Superoperator lv = two_level(2.0, -1.0, 0.5);
  auto out = time_evolve(lv, pure_state(lv.space, 0), {0.3, 1.1, 6.0});
  for (const auto& r : out) {
    CHECK(std::abs(r.mat.trace().real() - 1.0) < 1e-9);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(r.mat, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > -1e-6);
  }
}
