// SPDX-License-Identifier: Apache-2.0
// sarbeam: SAR-constrained beamforming and power splitting for MISO SWIPT downlinks.
#include "sarbeam/conic.hpp"

#include <cmath>
#include <sstream>

#include "ipm.hpp"

namespace sarbeam::conic {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::Unbounded: return "Unbounded";
    case SolveStatus::Inaccurate: return "Inaccurate";
  }
  return "?";
}

LinExpr& LinExpr::add(VarId v, double coeff) {
  if (v.idx < 0) throw ProblemFormatError("scalar variable is not declared");
  scalar_.emplace_back(v.idx, coeff);
  return *this;
}

LinExpr& LinExpr::add_trace(MatVarId m, const Eigen::MatrixXcd& coeff) {
  if (m.idx < 0) throw ProblemFormatError("matrix variable is not declared");
  if (coeff.rows() != coeff.cols()) throw ProblemFormatError("trace coefficient must be square");
  // real(trace(A W)) == trace(sym(A) W) for Hermitian W
  matrix_.emplace_back(m.idx, 0.5 * (coeff + coeff.adjoint()));
  return *this;
}

HermitianExpr::HermitianExpr(int dim) : dim_(dim) {
  if (dim < 1) throw ProblemFormatError("PSD expression dimension must be >= 1");
  upper_.resize(static_cast<size_t>(dim) * (dim + 1) / 2);
}

namespace {
int upper_index(int dim, int i, int j) {
  // row-major upper triangle: row i starts at i*dim - i*(i-1)/2 - i
  return i * dim - i * (i - 1) / 2 + (j - i);
}
}  // namespace

void HermitianExpr::set_entry(int i, int j, ComplexExpr e) {
  if (i < 0 || j < i || j >= dim_) throw ProblemFormatError("PSD entry index out of range");
  upper_[upper_index(dim_, i, j)] = std::move(e);
}

void HermitianExpr::add_entry(int i, int j, const ComplexExpr& e) {
  if (i < 0 || j < i || j >= dim_) throw ProblemFormatError("PSD entry index out of range");
  auto& cur = upper_[upper_index(dim_, i, j)];
  cur.re.add_constant(e.re.constant());
  for (const auto& [v, c] : e.re.scalar_terms()) cur.re.add(VarId{v}, c);
  for (const auto& [m, a] : e.re.matrix_terms()) cur.re.add_trace(MatVarId{m}, a);
  cur.im.add_constant(e.im.constant());
  for (const auto& [v, c] : e.im.scalar_terms()) cur.im.add(VarId{v}, c);
  for (const auto& [m, a] : e.im.matrix_terms()) cur.im.add_trace(MatVarId{m}, a);
}

const ComplexExpr& HermitianExpr::entry(int i, int j) const {
  return upper_.at(upper_index(dim_, i, j));
}

VarId Problem::add_var(std::string name, double lb, double ub) {
  var_names_.push_back(std::move(name));
  lb_.push_back(lb);
  ub_.push_back(ub);
  return VarId{static_cast<int>(var_names_.size()) - 1};
}

MatVarId Problem::add_hermitian_var(std::string name, int dim) {
  if (dim < 1) throw ProblemFormatError("matrix variable dimension must be >= 1");
  mat_names_.push_back(std::move(name));
  mat_dims_.push_back(dim);
  return MatVarId{static_cast<int>(mat_names_.size()) - 1};
}

namespace {
LinExpr subtract(const LinExpr& a, const LinExpr& b) {
  LinExpr out(a.constant() - b.constant());
  for (const auto& [v, c] : a.scalar_terms()) out.add(VarId{v}, c);
  for (const auto& [m, mat] : a.matrix_terms()) out.add_trace(MatVarId{m}, mat);
  for (const auto& [v, c] : b.scalar_terms()) out.add(VarId{v}, -c);
  for (const auto& [m, mat] : b.matrix_terms()) out.add_trace(MatVarId{m}, -mat);
  return out;
}
}  // namespace

void Problem::add_le(const LinExpr& lhs, const LinExpr& rhs) {
  rows_.push_back({subtract(rhs, lhs), false});
}

void Problem::add_ge(const LinExpr& lhs, const LinExpr& rhs) {
  rows_.push_back({subtract(lhs, rhs), false});
}

void Problem::add_eq(const LinExpr& lhs, const LinExpr& rhs) {
  rows_.push_back({subtract(lhs, rhs), true});
}

void Problem::add_soc(std::vector<LinExpr> u, LinExpr v) {
  if (u.empty()) throw ProblemFormatError("second-order cone needs a nonempty vector part");
  socs_.push_back({std::move(u), std::move(v)});
}

void Problem::add_rotated_cone(const LinExpr& s, const LinExpr& x, const LinExpr& y) {
  LinExpr two_s;
  two_s.add_constant(2.0 * s.constant());
  for (const auto& [v, c] : s.scalar_terms()) two_s.add(VarId{v}, 2.0 * c);
  for (const auto& [m, mat] : s.matrix_terms()) two_s.add_trace(MatVarId{m}, 2.0 * mat);
  std::vector<LinExpr> u{two_s, subtract(x, y)};
  LinExpr v = subtract(x, LinExpr(0.0));
  for (const auto& [vv, c] : y.scalar_terms()) v.add(VarId{vv}, c);
  for (const auto& [m, mat] : y.matrix_terms()) v.add_trace(MatVarId{m}, mat);
  v.add_constant(y.constant());
  add_soc(std::move(u), std::move(v));
}

void Problem::add_psd(const HermitianExpr& expr) {
  Psd p;
  p.dim = expr.dim();
  p.upper.reserve(static_cast<size_t>(p.dim) * (p.dim + 1) / 2);
  for (int i = 0; i < p.dim; ++i) {
    for (int j = i; j < p.dim; ++j) p.upper.push_back(expr.entry(i, j));
  }
  psds_.push_back(std::move(p));
}

Eigen::MatrixXd hermitian_to_real_embedding(const Eigen::MatrixXcd& h) {
  const int n = static_cast<int>(h.rows());
  Eigen::MatrixXd m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = h.real();
  m.topRightCorner(n, n) = -h.imag();
  m.bottomLeftCorner(n, n) = h.imag();
  m.bottomRightCorner(n, n) = h.real();
  return m;
}

Eigen::MatrixXcd real_embedding_to_hermitian(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows()) / 2;
  Eigen::MatrixXd re = 0.5 * (m.topLeftCorner(n, n) + m.bottomRightCorner(n, n));
  Eigen::MatrixXd im = 0.5 * (m.bottomLeftCorner(n, n) - m.topRightCorner(n, n));
  Eigen::MatrixXcd h = re.cast<std::complex<double>>() +
                       std::complex<double>(0, 1) * im.cast<std::complex<double>>();
  return 0.5 * (h + h.adjoint());
}

// ---------------------------------------------------------------------------
// lowering to the block form consumed by the interior-point core
// ---------------------------------------------------------------------------

struct Lowering {
  const Problem& p;
  int num_scalars = 0;
  int total_coords = 0;
  std::vector<int> mat_base;  // coordinate offset of each matrix variable

  explicit Lowering(const Problem& prob) : p(prob) {
    num_scalars = p.num_vars();
    total_coords = num_scalars;
    mat_base.resize(p.mat_dims_.size());
    for (size_t m = 0; m < p.mat_dims_.size(); ++m) {
      mat_base[m] = total_coords;
      const int d = p.mat_dims_[m];
      total_coords += d * d;
    }
  }

  int coord_diag(int m, int i) const { return mat_base[m] + i; }
  // off-diagonal coords follow the diagonal block: for i<j, pair index
  int coord_off(int m, int i, int j, bool imag_part) const {
    const int d = p.mat_dims_[m];
    int pair = i * d - i * (i + 1) / 2 + (j - i - 1);
    return mat_base[m] + d + 2 * pair + (imag_part ? 1 : 0);
  }

  // dense coefficient accumulation of a LinExpr over all coordinates
  void accumulate(const LinExpr& e, Eigen::VectorXd& coeff, double& constant) const {
    constant += e.constant();
    for (const auto& [v, c] : e.scalar_terms()) {
      if (v >= num_scalars) throw ProblemFormatError("scalar variable index out of range");
      coeff(v) += c;
    }
    for (const auto& [m, a] : e.matrix_terms()) {
      if (m >= static_cast<int>(p.mat_dims_.size())) {
        throw ProblemFormatError("matrix variable index out of range");
      }
      const int d = p.mat_dims_[m];
      if (a.rows() != d) throw ProblemFormatError("trace coefficient dimension mismatch");
      for (int i = 0; i < d; ++i) {
        coeff(coord_diag(m, i)) += a(i, i).real();
        for (int j = i + 1; j < d; ++j) {
          coeff(coord_off(m, i, j, false)) += 2.0 * a(i, j).real();
          coeff(coord_off(m, i, j, true)) += 2.0 * a(i, j).imag();
        }
      }
    }
  }

  detail::IpmBlock row_block(const LinExpr& e) const {
    Eigen::VectorXd coeff = Eigen::VectorXd::Zero(total_coords);
    double cst = 0.0;
    accumulate(e, coeff, cst);
    detail::IpmBlock blk;
    blk.dim = 1;
    blk.g0 = Eigen::MatrixXd::Constant(1, 1, cst);
    for (int j = 0; j < total_coords; ++j) {
      if (coeff(j) != 0.0) blk.terms.emplace_back(j, Eigen::MatrixXd::Constant(1, 1, coeff(j)));
    }
    return blk;
  }

  detail::IpmBlock soc_block(const Problem::Soc& soc) const {
    const int k = static_cast<int>(soc.u.size());
    const int dim = k + 1;
    Eigen::MatrixXd ucoef(k, total_coords);
    ucoef.setZero();
    Eigen::VectorXd ucst = Eigen::VectorXd::Zero(k);
    Eigen::VectorXd vcoef = Eigen::VectorXd::Zero(total_coords);
    double vcst = 0.0;
    for (int i = 0; i < k; ++i) {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(total_coords);
      accumulate(soc.u[i], row, ucst(i));
      ucoef.row(i) = row.transpose();
    }
    accumulate(soc.v, vcoef, vcst);

    auto arrow = [dim, k](double v, const Eigen::VectorXd& u) {
      Eigen::MatrixXd a = v * Eigen::MatrixXd::Identity(dim, dim);
      for (int i = 0; i < k; ++i) {
        a(0, i + 1) = u(i);
        a(i + 1, 0) = u(i);
      }
      return a;
    };

    detail::IpmBlock blk;
    blk.dim = dim;
    blk.g0 = arrow(vcst, ucst);
    for (int j = 0; j < total_coords; ++j) {
      if (vcoef(j) == 0.0 && (ucoef.col(j).array() == 0.0).all()) continue;
      blk.terms.emplace_back(j, arrow(vcoef(j), ucoef.col(j)));
    }
    return blk;
  }

  // coefficient matrices (complex Hermitian) of an affine PSD expression
  detail::IpmBlock psd_block(const Problem::Psd& psd) const {
    const int d = psd.dim;
    Eigen::MatrixXcd f0 = Eigen::MatrixXcd::Zero(d, d);
    std::vector<Eigen::MatrixXcd> fj(total_coords);  // lazily allocated
    auto touch = [&](int j) -> Eigen::MatrixXcd& {
      if (fj[j].size() == 0) fj[j] = Eigen::MatrixXcd::Zero(d, d);
      return fj[j];
    };

    int idx = 0;
    for (int i = 0; i < d; ++i) {
      for (int j = i; j < d; ++j, ++idx) {
        const ComplexExpr& e = psd.upper[idx];
        Eigen::VectorXd cre = Eigen::VectorXd::Zero(total_coords);
        Eigen::VectorXd cim = Eigen::VectorXd::Zero(total_coords);
        double kre = 0.0, kim = 0.0;
        accumulate(e.re, cre, kre);
        accumulate(e.im, cim, kim);
        if (i == j) {
          const double iscale = cim.cwiseAbs().maxCoeff() + std::abs(kim);
          if (iscale > 1e-12 * (1.0 + cre.cwiseAbs().maxCoeff() + std::abs(kre))) {
            throw ProblemFormatError("PSD diagonal entry has a nonzero imaginary part");
          }
          f0(i, i) += kre;
          for (int t = 0; t < total_coords; ++t) {
            if (cre(t) != 0.0) touch(t)(i, i) += cre(t);
          }
        } else {
          const std::complex<double> kc(kre, kim);
          f0(i, j) += kc;
          f0(j, i) += std::conj(kc);
          for (int t = 0; t < total_coords; ++t) {
            if (cre(t) != 0.0 || cim(t) != 0.0) {
              const std::complex<double> c(cre(t), cim(t));
              touch(t)(i, j) += c;
              touch(t)(j, i) += std::conj(c);
            }
          }
        }
      }
    }

    bool all_real = f0.imag().cwiseAbs().maxCoeff() == 0.0;
    if (all_real) {
      for (int t = 0; t < total_coords && all_real; ++t) {
        if (fj[t].size() != 0 && fj[t].imag().cwiseAbs().maxCoeff() != 0.0) all_real = false;
      }
    }

    detail::IpmBlock blk;
    if (all_real) {
      blk.dim = d;
      blk.g0 = f0.real();
      for (int t = 0; t < total_coords; ++t) {
        if (fj[t].size() != 0) blk.terms.emplace_back(t, fj[t].real());
      }
    } else {
      blk.dim = 2 * d;
      blk.g0 = hermitian_to_real_embedding(f0);
      for (int t = 0; t < total_coords; ++t) {
        if (fj[t].size() != 0) blk.terms.emplace_back(t, hermitian_to_real_embedding(fj[t]));
      }
    }
    return blk;
  }

  // PSD cone of a Hermitian matrix variable in its own coordinates
  detail::IpmBlock var_psd_block(int m) const {
    const int d = p.mat_dims_[m];
    detail::IpmBlock blk;
    if (d == 1) {
      blk.dim = 1;
      blk.g0 = Eigen::MatrixXd::Zero(1, 1);
      blk.terms.emplace_back(coord_diag(m, 0), Eigen::MatrixXd::Constant(1, 1, 1.0));
      return blk;
    }
    blk.dim = 2 * d;
    blk.g0 = Eigen::MatrixXd::Zero(2 * d, 2 * d);
    Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) {
      basis.setZero();
      basis(i, i) = 1.0;
      blk.terms.emplace_back(coord_diag(m, i), hermitian_to_real_embedding(basis));
    }
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        basis.setZero();
        basis(i, j) = 1.0;
        basis(j, i) = 1.0;
        blk.terms.emplace_back(coord_off(m, i, j, false), hermitian_to_real_embedding(basis));
        basis(i, j) = std::complex<double>(0.0, 1.0);
        basis(j, i) = std::complex<double>(0.0, -1.0);
        blk.terms.emplace_back(coord_off(m, i, j, true), hermitian_to_real_embedding(basis));
      }
    }
    return blk;
  }

  // equality rows as a dense system A x = b
  void equalities(Eigen::MatrixXd& a, Eigen::VectorXd& b) const {
    std::vector<std::pair<Eigen::VectorXd, double>> rows;
    for (const auto& row : p.rows_) {
      if (!row.equality) continue;
      Eigen::VectorXd coeff = Eigen::VectorXd::Zero(total_coords);
      double cst = 0.0;
      accumulate(row.expr, coeff, cst);
      rows.emplace_back(coeff, -cst);
    }
    for (int v = 0; v < num_scalars; ++v) {
      if (p.lb_[v] == p.ub_[v] && std::isfinite(p.lb_[v])) {
        Eigen::VectorXd coeff = Eigen::VectorXd::Zero(total_coords);
        coeff(v) = 1.0;
        rows.emplace_back(coeff, p.lb_[v]);
      }
    }
    a.resize(static_cast<int>(rows.size()), total_coords);
    b.resize(static_cast<int>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i) {
      a.row(static_cast<int>(i)) = rows[i].first.transpose();
      b(static_cast<int>(i)) = rows[i].second;
    }
  }

  detail::IpmProblem build(Eigen::VectorXd& c_out, double& obj_const) const {
    detail::IpmProblem ipm;
    ipm.num_vars = total_coords;
    c_out = Eigen::VectorXd::Zero(total_coords);
    obj_const = 0.0;
    accumulate(p.objective_, c_out, obj_const);
    ipm.c = c_out;

    for (size_t m = 0; m < p.mat_dims_.size(); ++m) {
      ipm.blocks.push_back(var_psd_block(static_cast<int>(m)));
    }
    for (const auto& row : p.rows_) {
      if (!row.equality) ipm.blocks.push_back(row_block(row.expr));
    }
    for (int v = 0; v < num_scalars; ++v) {
      if (p.lb_[v] == p.ub_[v]) continue;  // handled as an equality
      if (std::isfinite(p.lb_[v])) {
        detail::IpmBlock blk;
        blk.dim = 1;
        blk.g0 = Eigen::MatrixXd::Constant(1, 1, -p.lb_[v]);
        blk.terms.emplace_back(v, Eigen::MatrixXd::Constant(1, 1, 1.0));
        ipm.blocks.push_back(std::move(blk));
      }
      if (std::isfinite(p.ub_[v])) {
        detail::IpmBlock blk;
        blk.dim = 1;
        blk.g0 = Eigen::MatrixXd::Constant(1, 1, p.ub_[v]);
        blk.terms.emplace_back(v, Eigen::MatrixXd::Constant(1, 1, -1.0));
        ipm.blocks.push_back(std::move(blk));
      }
    }
    for (const auto& soc : p.socs_) ipm.blocks.push_back(soc_block(soc));
    for (const auto& psd : p.psds_) ipm.blocks.push_back(psd_block(psd));
    return ipm;
  }
};

namespace {

// substitute x = x0 + N z into the block data; returns the reduced problem
detail::IpmProblem reduce_to_nullspace(const detail::IpmProblem& full, const Eigen::VectorXd& x0,
                                       const Eigen::MatrixXd& nbasis) {
  detail::IpmProblem red;
  red.num_vars = static_cast<int>(nbasis.cols());
  red.c = nbasis.transpose() * full.c;
  for (const auto& blk : full.blocks) {
    detail::IpmBlock rb;
    rb.dim = blk.dim;
    rb.g0 = blk.g0;
    std::vector<Eigen::MatrixXd> gz(red.num_vars);
    for (const auto& [j, g] : blk.terms) {
      rb.g0.noalias() += x0(j) * g;
      for (int t = 0; t < red.num_vars; ++t) {
        const double w = nbasis(j, t);
        if (w == 0.0) continue;
        if (gz[t].size() == 0) gz[t] = Eigen::MatrixXd::Zero(blk.dim, blk.dim);
        gz[t].noalias() += w * g;
      }
    }
    for (int t = 0; t < red.num_vars; ++t) {
      if (gz[t].size() != 0) rb.terms.emplace_back(t, std::move(gz[t]));
    }
    red.blocks.push_back(std::move(rb));
  }
  return red;
}

SolveStatus map_status(detail::IpmStatus s) {
  switch (s) {
    case detail::IpmStatus::Converged: return SolveStatus::Optimal;
    case detail::IpmStatus::SuspectInfeasible: return SolveStatus::Infeasible;
    case detail::IpmStatus::SuspectUnbounded: return SolveStatus::Unbounded;
    default: return SolveStatus::Inaccurate;
  }
}

}  // namespace

SolveReport solve(const Problem& problem, double tolerance) {
  Lowering low(problem);
  Eigen::VectorXd c;
  double obj_const = 0.0;
  detail::IpmProblem ipm = low.build(c, obj_const);

  Eigen::MatrixXd aeq;
  Eigen::VectorXd beq;
  low.equalities(aeq, beq);

  SolveReport report;
  Eigen::VectorXd x;

  if (aeq.rows() > 0) {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(aeq);
    const Eigen::VectorXd x0 = cod.solve(beq);
    if ((aeq * x0 - beq).norm() > 1e-9 * (1.0 + beq.norm())) {
      report.status = SolveStatus::Infeasible;
      return report;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(aeq);
    lu.setThreshold(1e-12);
    Eigen::MatrixXd kernel = lu.kernel();
    if (kernel.cols() == 1 && kernel.cwiseAbs().maxCoeff() == 0.0) kernel.resize(low.total_coords, 0);
    if (kernel.cols() > 0) {
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(kernel);
      kernel = qr.householderQ() * Eigen::MatrixXd::Identity(low.total_coords, kernel.cols());
    }
    if (kernel.cols() == 0) {
      // fully determined point; verify cone membership
      x = x0;
      double worst = 0.0;
      for (const auto& blk : ipm.blocks) {
        Eigen::MatrixXd s = blk.g0;
        for (const auto& [j, g] : blk.terms) s.noalias() += x(j) * g;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
        worst = std::min(worst, es.eigenvalues().minCoeff() / (1.0 + blk.g0.norm()));
      }
      report.status = worst >= -1e-8 ? SolveStatus::Optimal : SolveStatus::Infeasible;
    } else {
      detail::IpmProblem red = reduce_to_nullspace(ipm, x0, kernel);
      detail::IpmResult res = detail::ipm_solve(red, tolerance);
      x = x0 + kernel * res.x;
      report.status = map_status(res.status);
      report.cone_residual = res.cone_res;
      report.mult_residual = res.mult_res;
      report.rel_gap = res.rel_gap;
      report.iterations = res.iterations;
      if (res.probe_ran) report.feasibility_margin = res.margin;
    }
  } else {
    detail::IpmResult res = detail::ipm_solve(ipm, tolerance);
    x = res.x;
    report.status = map_status(res.status);
    report.cone_residual = res.cone_res;
    report.mult_residual = res.mult_res;
    report.rel_gap = res.rel_gap;
    report.iterations = res.iterations;
    if (res.probe_ran) report.feasibility_margin = res.margin;
  }

  if (x.size() == low.total_coords) {
    report.objective = c.dot(x) + obj_const;
    report.scalars.assign(x.data(), x.data() + low.num_scalars);
    report.matrices.resize(problem.num_matrix_vars());
    for (int m = 0; m < problem.num_matrix_vars(); ++m) {
      const int d = problem.matrix_dim(MatVarId{m});
      Eigen::MatrixXcd w(d, d);
      for (int i = 0; i < d; ++i) {
        w(i, i) = x(low.coord_diag(m, i));
        for (int j = i + 1; j < d; ++j) {
          const std::complex<double> v(x(low.coord_off(m, i, j, false)),
                                       x(low.coord_off(m, i, j, true)));
          w(i, j) = v;
          w(j, i) = std::conj(v);
        }
      }
      report.matrices[m] = w;
    }
  }
  return report;
}

SolveReport solve_with_retry(const Problem& problem, double tolerance, double relaxed) {
  SolveReport r = solve(problem, tolerance);
  if (r.status == SolveStatus::Inaccurate) r = solve(problem, relaxed);
  return r;
}

double feasibility_margin(const Problem& problem, double tolerance) {
  Lowering low(problem);
  Eigen::VectorXd c;
  double obj_const = 0.0;
  detail::IpmProblem ipm = low.build(c, obj_const);

  Eigen::MatrixXd aeq;
  Eigen::VectorXd beq;
  low.equalities(aeq, beq);
  if (aeq.rows() > 0) {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(aeq);
    const Eigen::VectorXd x0 = cod.solve(beq);
    if ((aeq * x0 - beq).norm() > 1e-9 * (1.0 + beq.norm())) {
      return std::numeric_limits<double>::infinity();
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(aeq);
    lu.setThreshold(1e-12);
    Eigen::MatrixXd kernel = lu.kernel();
    ipm = reduce_to_nullspace(ipm, x0, kernel);
  }
  return detail::ipm_feasibility_margin(ipm, tolerance);
}

std::string Problem::dump() const {
  std::ostringstream os;
  os << "conic problem: " << var_names_.size() << " scalar vars, " << mat_names_.size()
     << " hermitian vars (";
  for (size_t m = 0; m < mat_dims_.size(); ++m) os << (m ? "," : "") << mat_dims_[m];
  os << "), " << rows_.size() << " linear rows, " << socs_.size() << " socs, " << psds_.size()
     << " psd constraints\n";
  os << "objective: const " << objective_.constant() << ", " << objective_.scalar_terms().size()
     << " scalar terms, " << objective_.matrix_terms().size() << " trace terms\n";
  for (const auto& row : rows_) {
    os << (row.equality ? "  eq: " : "  ge: ") << row.expr.constant() << " + "
       << row.expr.scalar_terms().size() << " scalar + " << row.expr.matrix_terms().size()
       << " trace terms >= 0\n";
  }
  return os.str();
}

}  // namespace sarbeam::conic
