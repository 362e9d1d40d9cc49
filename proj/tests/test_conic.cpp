// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <complex>

#include "sarbeam/conic.hpp"
#include "sarbeam/rng.hpp"

using namespace sarbeam;
using namespace sarbeam::conic;

namespace {
Eigen::VectorXcd random_cvec(Rng& rng, int n) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.cgauss(1.0);
  return v;
}
}  // namespace

TEST_SUITE_BEGIN("conic");

TEST_CASE("one-dimensional lp") {
  Problem p;
  VarId x = p.add_var("x", 3.0, kInf);
  LinExpr obj;
  obj.add(x, 1.0);
  p.minimize(obj);
  auto r = solve(p);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.value(x) == doctest::Approx(3.0).epsilon(1e-7));
  CHECK(r.objective == doctest::Approx(3.0).epsilon(1e-7));
}

TEST_CASE("rank-1 sdp with analytic optimum") {
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 3 + trial % 2;
    Eigen::VectorXcd h = random_cvec(rng, n);
    Problem p;
    MatVarId w = p.add_hermitian_var("W", n);
    LinExpr obj;
    obj.add_trace(w, Eigen::MatrixXcd::Identity(n, n));
    p.minimize(obj);
    LinExpr gain;
    gain.add_trace(w, h * h.adjoint());
    p.add_ge(gain, 1.0);
    auto r = solve(p);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.objective == doctest::Approx(1.0 / h.squaredNorm()).epsilon(1e-6));
  }
}

TEST_CASE("rotated cone boundary") {
  Problem p;
  VarId s = p.add_var("s", 0.0, kInf);
  VarId x = p.add_var("x", 1.0, 1.0);
  VarId y = p.add_var("y", 1.0, 1.0);
  LinExpr obj;
  obj.add(s, -1.0);  // maximize s
  p.minimize(obj);
  LinExpr es, ex, ey;
  es.add(s, 1.0);
  ex.add(x, 1.0);
  ey.add(y, 1.0);
  p.add_rotated_cone(es, ex, ey);
  auto r = solve(p);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.value(s) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("hermitian embedding examples") {
  CHECK((hermitian_to_real_embedding(Eigen::MatrixXcd::Identity(2, 2)) -
         Eigen::MatrixXd::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() == 0.0);

  Eigen::MatrixXcd h(2, 2);
  h << 0.0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0.0;
  Eigen::MatrixXd e = hermitian_to_real_embedding(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e);
  // eigenvalues of H are {-1, +1}; the embedding doubles each
  CHECK(es.eigenvalues()(0) == doctest::Approx(-1.0));
  CHECK(es.eigenvalues()(1) == doctest::Approx(-1.0));
  CHECK(es.eigenvalues()(2) == doctest::Approx(1.0));
  CHECK(es.eigenvalues()(3) == doctest::Approx(1.0));
}

TEST_CASE("embedding trace identity on random pairs") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    Eigen::MatrixXcd a(3, 3), b(3, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        a(i, j) = rng.cgauss(1.0);
        b(i, j) = rng.cgauss(1.0);
      }
    }
    const double lhs = (a.adjoint() * b).trace().real();
    const double rhs =
        0.5 * (hermitian_to_real_embedding(a).transpose() * hermitian_to_real_embedding(b)).trace();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("embedding round trip") {
  Rng rng(13);
  Eigen::MatrixXcd h(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) h(i, j) = rng.cgauss(1.0);
  }
  h = (0.5 * (h + h.adjoint())).eval();
  auto back = real_embedding_to_hermitian(hermitian_to_real_embedding(h));
  CHECK((back - h).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("determinism up to numerical noise") {
  Rng rng(17);
  Eigen::VectorXcd h = random_cvec(rng, 4);
  auto build = [&]() {
    Problem p;
    MatVarId w = p.add_hermitian_var("W", 4);
    LinExpr obj;
    obj.add_trace(w, Eigen::MatrixXcd::Identity(4, 4));
    p.minimize(obj);
    LinExpr gain;
    gain.add_trace(w, h * h.adjoint());
    p.add_ge(gain, 1.0);
    return p;
  };
  auto r1 = solve(build(), 1e-8);
  auto r2 = solve(build(), 1e-8);
  REQUIRE(r1.status == SolveStatus::Optimal);
  REQUIRE(r2.status == SolveStatus::Optimal);
  CHECK(std::abs(r1.objective - r2.objective) <= 10.0 * 1e-8 * (1.0 + std::abs(r1.objective)));
}

TEST_CASE("infeasible box") {
  Problem p;
  VarId x = p.add_var("x");
  LinExpr ex;
  ex.add(x, 1.0);
  p.add_ge(ex, 3.0);
  p.add_le(ex, 2.0);
  LinExpr obj;
  obj.add(x, 1.0);
  p.minimize(obj);
  auto r = solve(p);
  CHECK(r.status == SolveStatus::Infeasible);

  CHECK(feasibility_margin(p) > 1e-3);
}

TEST_CASE("feasibility margin sign") {
  Problem p;
  VarId x = p.add_var("x", 3.0, kInf);
  LinExpr obj;
  obj.add(x, 1.0);
  p.minimize(obj);
  CHECK(feasibility_margin(p) < -1e-3);
}

TEST_CASE("equality presolve") {
  Problem p;
  VarId x = p.add_var("x");
  VarId y = p.add_var("y", -kInf, 1.0);
  LinExpr ex, ey, sum;
  ex.add(x, 1.0);
  ey.add(y, 1.0);
  sum.add(x, 1.0).add(y, 1.0);
  p.add_eq(sum, 3.0);
  LinExpr obj;
  obj.add(x, 1.0);
  p.minimize(obj);
  auto r = solve(p);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.value(x) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(r.value(y) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("largest eigenvalue via lmi") {
  Rng rng(23);
  for (int t = 0; t < 4; ++t) {
    const int n = 4;
    Eigen::MatrixXcd b(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) b(i, j) = rng.cgauss(1.0);
    }
    b = (0.5 * (b + b.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(b);
    const double lmax = es.eigenvalues().maxCoeff();

    Problem p;
    VarId x = p.add_var("x");
    LinExpr obj;
    obj.add(x, 1.0);
    p.minimize(obj);
    HermitianExpr lmi(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        ComplexExpr e;
        e.re.add_constant(-b(i, j).real());
        e.im.add_constant(-b(i, j).imag());
        if (i == j) e.re.add(x, 1.0);
        lmi.set_entry(i, j, e);
      }
    }
    p.add_psd(lmi);
    auto r = solve(p);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.value(x) == doctest::Approx(lmax).epsilon(1e-6));
  }
}

TEST_CASE("complex 2x2 psd corner") {
  // minimize a+b s.t. [[a, 3+4i],[3-4i, b]] psd  ->  a = b = 5
  Problem p;
  VarId a = p.add_var("a", 0.0, kInf);
  VarId b = p.add_var("b", 0.0, kInf);
  LinExpr obj;
  obj.add(a, 1.0).add(b, 1.0);
  p.minimize(obj);
  HermitianExpr lmi(2);
  ComplexExpr e00, e01, e11;
  e00.re.add(a, 1.0);
  e01.re.add_constant(3.0);
  e01.im.add_constant(4.0);
  e11.re.add(b, 1.0);
  lmi.set_entry(0, 0, e00);
  lmi.set_entry(0, 1, e01);
  lmi.set_entry(1, 1, e11);
  p.add_psd(lmi);
  auto r = solve(p);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.objective == doctest::Approx(10.0).epsilon(1e-6));
}

TEST_CASE("soc distance with pinned point") {
  Problem p;
  VarId t = p.add_var("t", 0.0, kInf);
  VarId x1 = p.add_var("x1", 2.0, 2.0);
  VarId x2 = p.add_var("x2", -1.0, -1.0);
  LinExpr obj;
  obj.add(t, 1.0);
  p.minimize(obj);
  LinExpr d1, d2, et;
  d1.add(x1, 1.0).add_constant(-5.0);
  d2.add(x2, 1.0).add_constant(-3.0);
  et.add(t, 1.0);
  p.add_soc({d1, d2}, et);
  auto r = solve(p);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.objective == doctest::Approx(5.0).epsilon(1e-6));  // ||(2-5, -1-3)|| = 5
}

TEST_CASE("rotated cone equals 2x2 psd route") {
  // random linear objective over (s,x,y) in a box; the rotated-cone model and
  // the [[x,s],[s,y]] psd model must agree
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const double cs = rng.uniform(-1.0, 1.0);
    const double cx = rng.uniform(0.2, 1.0);
    const double cy = rng.uniform(0.2, 1.0);

    auto solve_rot = [&]() {
      Problem p;
      VarId s = p.add_var("s", 0.0, 4.0);
      VarId x = p.add_var("x", 0.1, 4.0);
      VarId y = p.add_var("y", 0.1, 4.0);
      LinExpr obj;
      obj.add(s, cs).add(x, cx).add(y, cy);
      p.minimize(obj);
      LinExpr es, ex, ey;
      es.add(s, 1.0);
      ex.add(x, 1.0);
      ey.add(y, 1.0);
      p.add_rotated_cone(es, ex, ey);
      return solve(p);
    };
    auto solve_psd = [&]() {
      Problem p;
      VarId s = p.add_var("s", 0.0, 4.0);
      VarId x = p.add_var("x", 0.1, 4.0);
      VarId y = p.add_var("y", 0.1, 4.0);
      LinExpr obj;
      obj.add(s, cs).add(x, cx).add(y, cy);
      p.minimize(obj);
      HermitianExpr lmi(2);
      ComplexExpr exx, exy, eyy;
      exx.re.add(x, 1.0);
      exy.re.add(s, 1.0);
      eyy.re.add(y, 1.0);
      lmi.set_entry(0, 0, exx);
      lmi.set_entry(0, 1, exy);
      lmi.set_entry(1, 1, eyy);
      p.add_psd(lmi);
      return solve(p);
    };
    auto r1 = solve_rot();
    auto r2 = solve_psd();
    REQUIRE(r1.status == SolveStatus::Optimal);
    REQUIRE(r2.status == SolveStatus::Optimal);
    CHECK(r1.objective ==
          doctest::Approx(r2.objective).epsilon(1e-6));
  }
}

TEST_CASE("psd diagonal entries must be real") {
  Problem p;
  VarId x = p.add_var("x");
  HermitianExpr lmi(2);
  ComplexExpr bad;
  bad.re.add(x, 1.0);
  bad.im.add_constant(1.0);
  lmi.set_entry(0, 0, bad);
  lmi.set_entry(1, 1, ComplexExpr{LinExpr(1.0), LinExpr(0.0)});
  p.add_psd(lmi);
  LinExpr obj;
  obj.add(x, 1.0);
  p.minimize(obj);
  CHECK_THROWS_AS(solve(p), ProblemFormatError);
}

TEST_SUITE_END();
