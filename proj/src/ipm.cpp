// SPDX-License-Identifier: Apache-2.0
// sarbeam: SAR-constrained beamforming and power splitting for MISO SWIPT downlinks.
#include "ipm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sarbeam::conic::detail {

namespace {

constexpr double kStepFraction = 0.98;
constexpr double kDivergence = 1e9;
constexpr double kHuge = 1e30;

double frob_inner(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return a.cwiseProduct(b).sum();
}

// Ruiz-style equilibration on the block data. Scales blocks and variables so
// the largest coefficient magnitudes are near one; returns the variable
// scales needed to map the solution back.
struct Scaling {
  Eigen::VectorXd var_scale;
  double obj_scale = 1.0;
};

Scaling equilibrate(IpmProblem& p) {
  Scaling sc;
  sc.var_scale = Eigen::VectorXd::Ones(p.num_vars);
  auto clampf = [](double v) { return std::clamp(v, 1e-8, 1e8); };
  for (int round = 0; round < 3; ++round) {
    for (auto& blk : p.blocks) {
      double mx = blk.g0.cwiseAbs().maxCoeff();
      for (auto& [j, g] : blk.terms) mx = std::max(mx, g.cwiseAbs().maxCoeff());
      if (mx <= 0.0) continue;
      const double s = clampf(1.0 / std::sqrt(mx));
      blk.g0 *= s;
      for (auto& [j, g] : blk.terms) g *= s;
    }
    Eigen::VectorXd colmax = Eigen::VectorXd::Zero(p.num_vars);
    for (const auto& blk : p.blocks) {
      for (const auto& [j, g] : blk.terms) {
        colmax(j) = std::max(colmax(j), g.cwiseAbs().maxCoeff());
      }
    }
    for (int j = 0; j < p.num_vars; ++j) {
      if (colmax(j) <= 0.0) continue;
      const double s = clampf(1.0 / std::sqrt(colmax(j)));
      sc.var_scale(j) *= s;
      p.c(j) *= s;
      for (auto& blk : p.blocks) {
        for (auto& [i, g] : blk.terms) {
          if (i == j) g *= s;
        }
      }
    }
  }
  const double cmax = p.c.cwiseAbs().maxCoeff();
  if (cmax > 0.0) {
    sc.obj_scale = cmax;
    p.c /= cmax;
  }
  return sc;
}

// Cholesky with a small jitter fallback; returns false if the matrix cannot
// be made positive definite.
bool robust_llt(const Eigen::MatrixXd& m, Eigen::LLT<Eigen::MatrixXd>& llt) {
  llt.compute(m);
  if (llt.info() == Eigen::Success) return true;
  const int n = static_cast<int>(m.rows());
  double jitter = 1e-14 * (1.0 + m.trace() / n);
  for (int attempt = 0; attempt < 5; ++attempt) {
    llt.compute(m + jitter * Eigen::MatrixXd::Identity(n, n));
    if (llt.info() == Eigen::Success) return true;
    jitter *= 100.0;
  }
  return false;
}

// Largest alpha with P + alpha*D still PSD, via the generalized eigenvalue
// bound through the Cholesky factor of P.
double step_to_boundary(const Eigen::LLT<Eigen::MatrixXd>& llt_p, const Eigen::MatrixXd& d) {
  Eigen::MatrixXd b = llt_p.matrixL().solve(d);
  b = llt_p.matrixL().solve(b.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b, Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues().minCoeff();
  if (lmin >= -1e-14) return kHuge;
  return -1.0 / lmin;
}

struct BlockState {
  Eigen::MatrixXd x;      // multiplier
  Eigen::MatrixXd s;      // cone slack
  Eigen::MatrixXd w;      // NT scaling point
  Eigen::MatrixXd s_inv;  // slack inverse
  Eigen::LLT<Eigen::MatrixXd> llt_x, llt_s;
};

struct Iterate {
  Eigen::VectorXd y;  // decision variables (scaled space)
  std::vector<BlockState> blk;
};

IpmResult run_core(const IpmProblem& scaled, const Eigen::VectorXd& c_orig,
                   const Scaling& sc, double tol, int max_iter) {
  const int m = scaled.num_vars;
  const int nblocks = static_cast<int>(scaled.blocks.size());
  IpmResult out;
  out.x = Eigen::VectorXd::Zero(m);

  int n_tot = 0;
  double data_norm = 1.0;
  for (const auto& b : scaled.blocks) {
    n_tot += b.dim;
    data_norm = std::max(data_norm, b.g0.cwiseAbs().maxCoeff());
  }
  if (n_tot == 0 || m == 0) {
    out.status = IpmStatus::Converged;
    out.pobj = 0.0;
    return out;
  }

  Iterate it;
  it.y = Eigen::VectorXd::Zero(m);
  it.blk.resize(nblocks);
  const double init = 10.0 * data_norm;
  for (int b = 0; b < nblocks; ++b) {
    it.blk[b].x = init * Eigen::MatrixXd::Identity(scaled.blocks[b].dim, scaled.blocks[b].dim);
    it.blk[b].s = it.blk[b].x;
  }

  std::vector<Eigen::MatrixXd> rd(nblocks), rc(nblocks), kmat(nblocks);
  std::vector<Eigen::MatrixXd> ds(nblocks), dx(nblocks), ds_a(nblocks), dx_a(nblocks);
  Eigen::VectorXd r(m), q(m), dy(m), dy_a(m);
  Eigen::MatrixXd schur(m, m);

  double best_score = std::numeric_limits<double>::infinity();
  int tiny_steps = 0;

  auto record_best = [&](double relgap, double cres, double mres) {
    const double score = std::max({relgap, cres, mres});
    if (score < best_score) {
      best_score = score;
      out.x = it.y;
      out.rel_gap = relgap;
      out.cone_res = cres;
      out.mult_res = mres;
    }
  };

  for (int iter = 0; iter < max_iter; ++iter) {
    out.iterations = iter;

    // residuals
    double gap = 0.0, dobj = 0.0, cres = 0.0;
    for (int b = 0; b < nblocks; ++b) {
      const auto& data = scaled.blocks[b];
      rd[b] = it.blk[b].s - data.g0;
      for (const auto& [j, g] : data.terms) rd[b].noalias() -= it.y(j) * g;
      gap += frob_inner(it.blk[b].x, it.blk[b].s);
      dobj -= frob_inner(data.g0, it.blk[b].x);
      cres = std::max(cres, rd[b].norm() / (1.0 + data.g0.norm()));
    }
    r = scaled.c;
    for (int b = 0; b < nblocks; ++b) {
      for (const auto& [j, g] : scaled.blocks[b].terms) r(j) -= frob_inner(g, it.blk[b].x);
    }
    const double pobj = scaled.c.dot(it.y);
    const double mres = r.norm() / (1.0 + scaled.c.norm());
    const double relgap = std::abs(gap) / (1.0 + std::abs(pobj) + std::abs(dobj));
    const double mu = gap / n_tot;
    record_best(relgap, cres, mres);

    if (relgap <= tol && cres <= tol && mres <= tol) {
      out.status = IpmStatus::Converged;
      out.x = it.y;
      out.rel_gap = relgap;
      out.cone_res = cres;
      out.mult_res = mres;
      break;
    }
    if (dobj > kDivergence) {
      out.status = IpmStatus::SuspectInfeasible;
      break;
    }
    if (pobj < -kDivergence) {
      out.status = IpmStatus::SuspectUnbounded;
      break;
    }

    // NT scaling per block: W = G G' with G = Lx V diag(sv)^{-1/2}, where
    // Ls' Lx = U diag(sv) V'.
    bool scaling_ok = true;
    for (int b = 0; b < nblocks; ++b) {
      auto& st = it.blk[b];
      st.x = 0.5 * (st.x + st.x.transpose()).eval();
      st.s = 0.5 * (st.s + st.s.transpose()).eval();
      if (!robust_llt(st.x, st.llt_x) || !robust_llt(st.s, st.llt_s)) {
        scaling_ok = false;
        break;
      }
      const Eigen::MatrixXd lx = st.llt_x.matrixL();
      const Eigen::MatrixXd ls = st.llt_s.matrixL();
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(ls.transpose() * lx,
                                            Eigen::ComputeFullU | Eigen::ComputeFullV);
      Eigen::VectorXd sv = svd.singularValues();
      for (int i = 0; i < sv.size(); ++i) sv(i) = 1.0 / std::sqrt(std::max(sv(i), 1e-300));
      const Eigen::MatrixXd g = lx * svd.matrixV() * sv.asDiagonal();
      st.w.noalias() = g * g.transpose();
      const int n = scaled.blocks[b].dim;
      st.s_inv = st.llt_s.solve(Eigen::MatrixXd::Identity(n, n));
    }
    if (!scaling_ok) {
      out.status = IpmStatus::Stalled;
      break;
    }

    // Schur complement M_ij = sum_b <G_i, W G_j W>
    schur.setZero();
    std::vector<std::vector<Eigen::MatrixXd>> wgw(nblocks);
    for (int b = 0; b < nblocks; ++b) {
      const auto& data = scaled.blocks[b];
      const auto& w = it.blk[b].w;
      const int nt = static_cast<int>(data.terms.size());
      wgw[b].resize(nt);
      for (int ti = 0; ti < nt; ++ti) {
        wgw[b][ti].noalias() = w * data.terms[ti].second * w;
      }
      for (int ti = 0; ti < nt; ++ti) {
        const int i = data.terms[ti].first;
        for (int tj = ti; tj < nt; ++tj) {
          const int j = data.terms[tj].first;
          const double v = frob_inner(data.terms[ti].second, wgw[b][tj]);
          schur(i, j) += v;
          if (i != j) schur(j, i) += v;
        }
      }
    }
    Eigen::LLT<Eigen::MatrixXd> schur_llt;
    if (!robust_llt(schur, schur_llt)) {
      out.status = IpmStatus::Stalled;
      break;
    }

    // direction solve for a given complementarity target Rc:
    //   M dy = <G_j, Rc + W Rd W> - r ;  dS = -Rd + sum dy_j G_j ;
    //   dX = Rc - W dS W
    auto solve_direction = [&](const std::vector<Eigen::MatrixXd>& rc_in,
                               std::vector<Eigen::MatrixXd>& dx_out,
                               std::vector<Eigen::MatrixXd>& ds_out, Eigen::VectorXd& dy_out) {
      q = -r;
      for (int b = 0; b < nblocks; ++b) {
        const auto& w = it.blk[b].w;
        kmat[b].noalias() = w * rd[b] * w;
        kmat[b] += rc_in[b];
        for (const auto& [j, g] : scaled.blocks[b].terms) q(j) += frob_inner(g, kmat[b]);
      }
      dy_out = schur_llt.solve(q);
      for (int b = 0; b < nblocks; ++b) {
        const auto& data = scaled.blocks[b];
        ds_out[b] = -rd[b];
        for (const auto& [j, g] : data.terms) ds_out[b].noalias() += dy_out(j) * g;
        dx_out[b] = rc_in[b];
        dx_out[b].noalias() -= it.blk[b].w * ds_out[b] * it.blk[b].w;
        dx_out[b] = 0.5 * (dx_out[b] + dx_out[b].transpose()).eval();
      }
    };

    // predictor (affine scaling)
    for (int b = 0; b < nblocks; ++b) rc[b] = -it.blk[b].x;
    solve_direction(rc, dx_a, ds_a, dy_a);

    double ax_a = 1.0, as_a = 1.0;
    for (int b = 0; b < nblocks; ++b) {
      ax_a = std::min(ax_a, step_to_boundary(it.blk[b].llt_x, dx_a[b]));
      as_a = std::min(as_a, step_to_boundary(it.blk[b].llt_s, ds_a[b]));
    }
    double gap_aff = 0.0;
    for (int b = 0; b < nblocks; ++b) {
      gap_aff += frob_inner(it.blk[b].x + ax_a * dx_a[b], it.blk[b].s + as_a * ds_a[b]);
    }
    const double mu_aff = std::max(gap_aff, 0.0) / n_tot;
    const double sigma = std::min(0.99, std::pow(std::max(mu_aff / std::max(mu, 1e-300), 0.0), 3));

    // corrector
    for (int b = 0; b < nblocks; ++b) {
      const Eigen::MatrixXd cross = dx_a[b] * ds_a[b] * it.blk[b].s_inv;
      rc[b] = sigma * mu * it.blk[b].s_inv - it.blk[b].x -
              0.5 * (cross + cross.transpose());
    }
    solve_direction(rc, dx, ds, dy);

    double ax = kHuge, as = kHuge;
    for (int b = 0; b < nblocks; ++b) {
      ax = std::min(ax, step_to_boundary(it.blk[b].llt_x, dx[b]));
      as = std::min(as, step_to_boundary(it.blk[b].llt_s, ds[b]));
    }
    ax = std::min(1.0, kStepFraction * ax);
    as = std::min(1.0, kStepFraction * as);

    it.y += as * dy;
    for (int b = 0; b < nblocks; ++b) {
      it.blk[b].x += ax * dx[b];
      it.blk[b].s += as * ds[b];
    }

    if (std::min(ax, as) < 1e-4) {
      if (++tiny_steps >= 3) {
        out.status = IpmStatus::Stalled;
        break;
      }
    } else {
      tiny_steps = 0;
    }
    if (iter == max_iter - 1) out.status = IpmStatus::IterLimit;
  }

  // map back to original variable scale
  out.x = out.x.cwiseProduct(sc.var_scale);
  out.pobj = c_orig.dot(out.x);
  return out;
}

IpmProblem make_margin_problem(const IpmProblem& scaled) {
  IpmProblem mp;
  mp.num_vars = scaled.num_vars + 1;
  const int u = scaled.num_vars;
  mp.c = Eigen::VectorXd::Zero(mp.num_vars);
  mp.c(u) = 1.0;
  mp.blocks = scaled.blocks;
  for (auto& blk : mp.blocks) {
    blk.terms.emplace_back(u, Eigen::MatrixXd::Identity(blk.dim, blk.dim));
  }
  IpmBlock cap;
  cap.dim = 1;
  cap.g0 = Eigen::MatrixXd::Constant(1, 1, 1.0);
  cap.terms.emplace_back(u, Eigen::MatrixXd::Constant(1, 1, 1.0));
  mp.blocks.push_back(cap);  // u >= -1 keeps the margin program bounded
  return mp;
}

}  // namespace

IpmResult ipm_solve(const IpmProblem& problem, double tol, int max_iter, bool enable_probe) {
  IpmProblem scaled = problem;
  const Eigen::VectorXd c_orig = problem.c;
  Scaling sc = equilibrate(scaled);
  IpmResult res = run_core(scaled, c_orig, sc, tol, max_iter);

  if (res.status == IpmStatus::Converged || !enable_probe) return res;

  // classification probe: min u s.t. every block + u*I is PSD, u >= -1
  IpmProblem mp = make_margin_problem(scaled);
  const Eigen::VectorXd mc = mp.c;
  Scaling msc;
  msc.var_scale = Eigen::VectorXd::Ones(mp.num_vars);
  IpmResult probe = run_core(mp, mc, msc, 1e-9, max_iter);
  res.probe_ran = true;
  if (probe.status == IpmStatus::Converged) {
    const double margin = probe.x(scaled.num_vars);
    res.margin = margin;
    if (margin > 1e-7) {
      res.status = IpmStatus::SuspectInfeasible;
    } else if (margin < -1e-7 && res.status == IpmStatus::SuspectInfeasible) {
      // the direct solve diverged but the problem is strictly feasible
      res.status = IpmStatus::Stalled;
    }
  }
  return res;
}

double ipm_feasibility_margin(const IpmProblem& problem, double tol) {
  IpmProblem scaled = problem;
  Scaling sc = equilibrate(scaled);
  IpmProblem mp = make_margin_problem(scaled);
  const Eigen::VectorXd mc = mp.c;
  Scaling msc;
  msc.var_scale = Eigen::VectorXd::Ones(mp.num_vars);
  IpmResult probe = run_core(mp, mc, msc, tol, 200);
  if (probe.status != IpmStatus::Converged) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return probe.x(scaled.num_vars);
}

}  // namespace sarbeam::conic::detail
