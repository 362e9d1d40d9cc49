// SPDX-License-Identifier: Apache-2.0
// sarbeam: SAR-constrained beamforming and power splitting for MISO SWIPT downlinks.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sarbeam::conic {

// Thrown on malformed problems (undeclared variables, dimension mismatches,
// non-Hermitian PSD data).
class ProblemFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, Inaccurate };

const char* to_string(SolveStatus s);

struct VarId {
  int idx = -1;
};
struct MatVarId {
  int idx = -1;
};

constexpr double kInf = std::numeric_limits<double>::infinity();

// Real affine expression over scalar variables and Hermitian matrix
// variables. Matrix terms contribute real(trace(A * W)); A is symmetrized on
// insertion, which is exact for Hermitian W.
class LinExpr {
 public:
  LinExpr() = default;
  /* implicit */ LinExpr(double constant) : constant_(constant) {}

  LinExpr& add(VarId v, double coeff);
  LinExpr& add_trace(MatVarId m, const Eigen::MatrixXcd& coeff);
  LinExpr& add_constant(double c) {
    constant_ += c;
    return *this;
  }

  double constant() const { return constant_; }
  const std::vector<std::pair<int, double>>& scalar_terms() const { return scalar_; }
  const std::vector<std::pair<int, Eigen::MatrixXcd>>& matrix_terms() const { return matrix_; }

 private:
  double constant_ = 0.0;
  std::vector<std::pair<int, double>> scalar_;
  std::vector<std::pair<int, Eigen::MatrixXcd>> matrix_;
};

// Pair of real affine expressions representing a complex affine quantity.
struct ComplexExpr {
  LinExpr re;
  LinExpr im;
};

// n x n Hermitian-valued affine expression, built entry by entry on the upper
// triangle. Diagonal entries must have a vanishing imaginary part; the lower
// triangle is implied by conjugate symmetry.
class HermitianExpr {
 public:
  explicit HermitianExpr(int dim);
  void set_entry(int i, int j, ComplexExpr e);  // requires i <= j
  void add_entry(int i, int j, const ComplexExpr& e);
  int dim() const { return dim_; }
  const ComplexExpr& entry(int i, int j) const;  // i <= j

 private:
  int dim_;
  std::vector<ComplexExpr> upper_;  // row-major upper triangle incl. diagonal
};

// Solver-agnostic convex program: linear objective over scalar and Hermitian
// matrix variables; linear equality/inequality, second-order cone, and PSD
// constraints. Hermitian matrix variables are constrained PSD. Problems are
// immutable once handed to solve(); independent solves may run in parallel.
class Problem {
 public:
  VarId add_var(std::string name, double lb = -kInf, double ub = kInf);
  MatVarId add_hermitian_var(std::string name, int dim);

  void minimize(LinExpr objective) { objective_ = std::move(objective); }

  void add_le(const LinExpr& lhs, const LinExpr& rhs);  // lhs <= rhs
  void add_ge(const LinExpr& lhs, const LinExpr& rhs);  // lhs >= rhs
  void add_eq(const LinExpr& lhs, const LinExpr& rhs);
  void add_soc(std::vector<LinExpr> u, LinExpr v);  // ||u|| <= v
  // s^2 <= x*y with x, y >= 0, encoded as ||[2s; x-y]|| <= x+y
  void add_rotated_cone(const LinExpr& s, const LinExpr& x, const LinExpr& y);
  void add_psd(const HermitianExpr& expr);  // expr >= 0 (PSD)

  // Debug listing of the problem; not a stable interchange format.
  std::string dump() const;

  int num_vars() const { return static_cast<int>(var_names_.size()); }
  int num_matrix_vars() const { return static_cast<int>(mat_dims_.size()); }
  int matrix_dim(MatVarId m) const { return mat_dims_.at(m.idx); }

 private:
  friend struct Lowering;
  std::vector<std::string> var_names_;
  std::vector<double> lb_, ub_;
  std::vector<std::string> mat_names_;
  std::vector<int> mat_dims_;
  LinExpr objective_;
  struct Row {
    LinExpr expr;  // expr >= 0
    bool equality = false;
  };
  std::vector<Row> rows_;
  struct Soc {
    std::vector<LinExpr> u;
    LinExpr v;
  };
  std::vector<Soc> socs_;
  struct Psd {
    int dim;
    std::vector<ComplexExpr> upper;
  };
  std::vector<Psd> psds_;
};

// Result of one solve. status == Optimal guarantees the primal point is
// feasible within the solver tolerance and objective-optimal to the same
// accuracy. Inaccurate carries the best iterate found.
struct SolveReport {
  SolveStatus status = SolveStatus::Inaccurate;
  double objective = 0.0;
  std::vector<double> scalars;
  std::vector<Eigen::MatrixXcd> matrices;
  double cone_residual = 0.0;  // constraint mismatch, scaled
  double mult_residual = 0.0;  // multiplier stationarity mismatch, scaled
  double rel_gap = 0.0;
  int iterations = 0;
  double feasibility_margin = 0.0;  // from the probe, when one ran

  double value(VarId v) const { return scalars.at(v.idx); }
  const Eigen::MatrixXcd& value(MatVarId m) const { return matrices.at(m.idx); }
};

SolveReport solve(const Problem& problem, double tolerance = 1e-8);

// Retries once with the relaxed tolerance when the first solve comes back
// Inaccurate.
SolveReport solve_with_retry(const Problem& problem, double tolerance = 1e-8,
                             double relaxed = 1e-6);

// Largest u such that relaxing every constraint block by u*I keeps the
// problem feasible, negated: the problem is strictly feasible iff the
// returned margin is < 0. Always converges (the margin program is strictly
// feasible and bounded).
double feasibility_margin(const Problem& problem, double tolerance = 1e-9);

// [[Re H, -Im H], [Im H, Re H]]: PSD iff H is PSD; trace doubles.
Eigen::MatrixXd hermitian_to_real_embedding(const Eigen::MatrixXcd& h);

// Inverse of the embedding by block averaging; exact on embedded matrices and
// a PSD-preserving projection on arbitrary symmetric ones.
Eigen::MatrixXcd real_embedding_to_hermitian(const Eigen::MatrixXd& m);

}  // namespace sarbeam::conic
