#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "otpart/distance_matrix.hpp"
#include "otpart/graph.hpp"
#include "otpart/mat.hpp"
#include "otpart/targets.hpp"

namespace otpart {

// N x k plan; row sums fixed to the source weights mu, column marginal
// free (the semi-relaxed setting).
struct TransportPlan {
  Mat t;
};

struct LossParams {
  int q = 2;          // cost exponent; q = 2 uses the factorized kernels
  double alpha = 1.0; // structure weight in the fused loss
};

struct SolverReport {
  Mat plan;
  std::vector<double> loss_trace;  // non-increasing within one solve
  std::size_t iterations = 0;
  std::vector<std::size_t> barycenter_ids;  // alternating solver only
  std::uint32_t nonempty_k = 0;             // columns carrying mass
  // Alternating-solver bookkeeping for the monotonicity certificate:
  // chain L(T^{n+1}, B^{n+1}) <= L(T^{n+1}, B^n) <= L(T^n, B^n).
  double outer_initial_loss = 0.0;               // L(T^0, B^0)
  std::vector<double> outer_loss_after_plan;     // L(T^{n+1}, B^n)
  std::vector<double> outer_loss_after_bary;     // L(T^{n+1}, B^{n+1})
};

// true iff rows sum to mu within tol and entries are non-negative
bool plan_feasible(const Mat& t, const std::vector<double>& mu,
                   double tol = 1e-9);

// t0 from a hard assignment: t_il = mu_i when assign(i) = l
Mat plan_from_partition(const Partition& p, const std::vector<double>& mu);

// Quadratic structure-matching cost
//   sum_{ijlm} |r1_ij - r2_lm|^q t_il t_jm,
// with the source marginal taken as the row sums of t. q = 2 runs the
// factorized O(N^2 k + k^2 N) scheme, other q the naive contraction.
double gw_loss(const DistanceMatrix& r1, const DistanceMatrix& r2,
               const Mat& t, int q = 2);

// Fused loss: (1 - alpha) * sum_il m_il^q t_il + alpha * gw_loss.
// m holds raw attribute distances d_A(v_i, b_l).
double fgw_loss(const DistanceMatrix& r1, const DistanceMatrix& r2,
                const Mat& m, const Mat& t, const LossParams& params);

// Conditional-gradient solver for the structure-only semi-relaxed
// problem: linear-minimization oracle puts each row's mass on its
// minimal-gradient column (smallest index on ties), then an exact line
// search on the 1-D quadratic. Stops when the relative loss decrease
// drops below tol, the step size hits zero, or max_cg_iter is reached.
// Throws InfeasibleInit.
SolverReport srgw_solve(const DistanceMatrix& r1,
                        const std::vector<double>& mu,
                        const DistanceMatrix& r2, const Mat& t0,
                        const LossParams& params = {},
                        std::size_t max_cg_iter = 1000, double tol = 1e-9);

// Same loop on the fused objective; with alpha = 1 the iterates coincide
// with srgw_solve on identical inputs.
SolverReport srfgw_solve(const DistanceMatrix& ds_source,
                         const std::vector<double>& mu,
                         const DistanceMatrix& ds_target, const Mat& m,
                         const Mat& t0, const LossParams& params = {},
                         std::size_t max_cg_iter = 1000, double tol = 1e-9);

struct PartitionOptions {
  std::size_t max_outer = 50;
  std::size_t max_cg_iter = 1000;
  double cg_tol = 1e-9;
  // Optional closing steps: project the plan to hard assignments and
  // refresh the barycenters under it.
  bool final_hard_project = false;
};

struct PartitionResult {
  SolverReport report;
  Partition partition;
};

// Alternating partitioner: medoid barycenters (candidates are all graph
// nodes, ties to the smallest id) against the fused CG solve, shrinking
// the target whenever a column loses all transport mass (loss-neutral,
// keeps the monotone chain intact). Stops on a same-shape plan fixpoint
// (elementwise 1e-12) or after max_outer rounds. da holds the pairwise
// node attribute distances; target is resolved against ds.
PartitionResult srfgw_partition(const DistanceMatrix& ds,
                                const DistanceMatrix& da,
                                const std::vector<double>& mu,
                                const TargetSpec& target,
                                const LossParams& params, const Mat& t0,
                                const PartitionOptions& options = {});

// Convenience overload computing da from the graph's bundles.
PartitionResult srfgw_partition(const AttributedGraph& g,
                                const DistanceMatrix& ds,
                                const TargetSpec& target,
                                const LossParams& params, const Mat& t0,
                                const PartitionOptions& options = {},
                                double beta = 0.5);

// Row i sends all of mu_i to the first column attaining the row maximum.
std::pair<Mat, Partition> hard_project(const Mat& t,
                                       const std::vector<double>& mu);

// Checks the recorded alternating-solver chain within tol. Throws
// MissingTrace when the report lacks outer losses.
bool prop1_certificate(const SolverReport& report, double tol = 1e-9);

// ((1 - alpha) * d_a_max^q + 2 * alpha * d_s_max^q) * sum |t - t_tilde|
double prop2_bound(const Mat& t, const Mat& t_tilde, double d_a_max,
                   double d_s_max, const LossParams& params);

}  // namespace otpart
