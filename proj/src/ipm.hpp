// SPDX-License-Identifier: Apache-2.0
// sarbeam: SAR-constrained beamforming and power splitting for MISO SWIPT downlinks.
//
// Dense primal-dual interior-point solver for linear cone programs in the
// block form  min c'x  s.t.  S_b(x) = G0_b + sum_j x_j G_jb  PSD  for every
// block b. Nesterov-Todd scaling with a Mehrotra predictor-corrector.
// Second-order cones and scalar rows arrive here already lowered to arrow
// and 1x1 blocks; complex Hermitian data arrives in its real symmetric
// embedding.
#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace sarbeam::conic::detail {

struct IpmBlock {
  int dim = 0;
  Eigen::MatrixXd g0;
  std::vector<std::pair<int, Eigen::MatrixXd>> terms;  // (variable index, coefficient)
};

struct IpmProblem {
  int num_vars = 0;
  Eigen::VectorXd c;
  std::vector<IpmBlock> blocks;
};

enum class IpmStatus { Converged, SuspectInfeasible, SuspectUnbounded, Stalled, IterLimit };

struct IpmResult {
  IpmStatus status = IpmStatus::Stalled;
  Eigen::VectorXd x;
  double pobj = 0.0;  // c'x in the original (unscaled) data
  double cone_res = 0.0;
  double mult_res = 0.0;
  double rel_gap = 0.0;
  int iterations = 0;
  bool probe_ran = false;
  double margin = 0.0;  // feasibility margin from the probe (negative = strictly feasible)
};

// Full pipeline: equilibrate, run the predictor-corrector loop, and on
// non-convergence classify via a feasibility-margin probe (min u with every
// block relaxed by u*I and u >= -1). The probe is strictly feasible and
// bounded, so its sign is a reliable feasible/infeasible verdict.
IpmResult ipm_solve(const IpmProblem& problem, double tol, int max_iter = 150,
                    bool enable_probe = true);

// Solves only the margin program and returns u*; used by the public
// feasibility_margin entry point.
double ipm_feasibility_margin(const IpmProblem& problem, double tol);

}  // namespace sarbeam::conic::detail
