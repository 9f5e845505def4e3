#include "otpart/ot_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "otpart/attribute_metrics.hpp"
#include "otpart/errors.hpp"
#include "otpart/kernels.hpp"

namespace otpart {

bool plan_feasible(const Mat& t, const std::vector<double>& mu, double tol) {
  if (t.rows != mu.size()) return false;
  for (std::size_t i = 0; i < t.rows; ++i) {
    double s = 0.0;
    for (std::size_t l = 0; l < t.cols; ++l) {
      if (t(i, l) < 0.0) return false;
      s += t(i, l);
    }
    if (std::abs(s - mu[i]) > tol) return false;
  }
  return true;
}

Mat plan_from_partition(const Partition& p, const std::vector<double>& mu) {
  if (p.assign.size() != mu.size()) {
    throw ShapeMismatch("plan_from_partition: size mismatch");
  }
  Mat t(mu.size(), p.k, 0.0);
  for (std::size_t i = 0; i < mu.size(); ++i) t(i, p.assign[i]) = mu[i];
  return t;
}

namespace {

Mat entrywise_pow(const Mat& m, int q) {
  Mat out = m;
  if (q == 1) {
    for (auto& v : out.data) v = std::abs(v);
  } else if (q == 2) {
    for (auto& v : out.data) v = v * v;
  } else {
    for (auto& v : out.data) v = std::pow(std::abs(v), q);
  }
  return out;
}

// Quadratic form machinery shared by the loss functions and the solver.
// For q = 2 everything goes through the factorized identity
//   sum |r1 - r2|^2 t t = <(R1 o R1) mu, mu> + q^T (R2 o R2) q
//                         - 2 <T, R1 T R2>,
// with q the (free) column marginal. Other exponents use the naive
// contraction, fine at desk scale.
struct GwCore {
  const Mat* r1 = nullptr;
  const Mat* r2 = nullptr;
  int q = 2;
  Mat r1sq;  // entrywise squares (q = 2)
  Mat r2sq;
  Mat r1q;  // entrywise |.|^q (naive path)
  Mat r2q;
  std::vector<double> r1sq_mu;  // (R1 o R1) mu
  double const_term = 0.0;      // <(R1 o R1) mu, mu>

  GwCore(const Mat& r1_, const Mat& r2_, int q_,
         const std::vector<double>& mu)
      : r1(&r1_), r2(&r2_), q(q_) {
    if (q == 2) {
      r1sq = entrywise_pow(r1_, 2);
      r2sq = entrywise_pow(r2_, 2);
      const std::size_t n = r1_.rows;
      r1sq_mu.assign(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        const double* row = r1sq.row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * mu[j];
        r1sq_mu[i] = acc;
        const_term += acc * mu[i];
      }
    } else {
      r1q = entrywise_pow(r1_, q);
      r2q = entrywise_pow(r2_, q);
    }
  }

  // cross term R1 * X * R2
  Mat cross(const Mat& x) const {
    Mat u(r1->rows, x.cols, 0.0);
    kernels::gemm(*r1, x, u);
    Mat c(r1->rows, r2->cols, 0.0);
    kernels::gemm(u, *r2, c);
    return c;
  }

  // (R2 o R2) applied to a column marginal
  std::vector<double> r2sq_apply(const std::vector<double>& qcol) const {
    const std::size_t k = r2->rows;
    std::vector<double> out(k, 0.0);
    for (std::size_t l = 0; l < k; ++l) {
      const double* row = r2sq.row(l);
      double acc = 0.0;
      for (std::size_t m = 0; m < k; ++m) acc += row[m] * qcol[m];
      out[l] = acc;
    }
    return out;
  }

  // naive tensor application G(X)_il = sum_jm |r1_ij - r2_lm|^q X_jm
  Mat naive_apply(const Mat& x) const {
    const std::size_t n = r1->rows;
    const std::size_t k = r2->rows;
    Mat g(n, k, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < k; ++l) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t m = 0; m < k; ++m) {
            acc += std::pow(std::abs((*r1)(i, j) - (*r2)(l, m)), q) * x(j, m);
          }
        }
        g(i, l) = acc;
      }
    }
    return g;
  }
};

}  // namespace

double gw_loss(const DistanceMatrix& r1, const DistanceMatrix& r2,
               const Mat& t, int q) {
  if (t.rows != r1.size() || t.cols != r2.size()) {
    throw ShapeMismatch("gw_loss: plan shape inconsistent with matrices");
  }
  if (q < 1) throw InvalidArgument("gw_loss: q must be >= 1");
  const std::vector<double> mu = row_sums(t);
  GwCore core(r1.mat(), r2.mat(), q, mu);
  if (q == 2) {
    const std::vector<double> qcol = col_sums(t);
    const std::vector<double> r2q_q = core.r2sq_apply(qcol);
    double term2 = 0.0;
    for (std::size_t l = 0; l < qcol.size(); ++l) term2 += r2q_q[l] * qcol[l];
    const Mat c = core.cross(t);
    return core.const_term + term2 - 2.0 * dot(t, c);
  }
  return dot(t, core.naive_apply(t));
}

double fgw_loss(const DistanceMatrix& r1, const DistanceMatrix& r2,
                const Mat& m, const Mat& t, const LossParams& params) {
  if (!m.same_shape(t)) {
    throw ShapeMismatch("fgw_loss: attribute-cost shape differs from plan");
  }
  if (!(params.alpha >= 0.0 && params.alpha <= 1.0)) {
    throw InvalidArgument("fgw_loss: alpha must lie in [0, 1]");
  }
  const Mat mq = entrywise_pow(m, params.q);
  double lin = 0.0;
  for (std::size_t i = 0; i < t.data.size(); ++i) lin += mq.data[i] * t.data[i];
  return (1.0 - params.alpha) * lin +
         params.alpha * gw_loss(r1, r2, t, params.q);
}

namespace {

struct CgProblem {
  const GwCore& core;
  const std::vector<double>& mu;
  const Mat* lin = nullptr;  // (1 - alpha) * m^q, optional
  double gw_scale = 1.0;
};

double cg_loss(const CgProblem& p, const Mat& t, const Mat& cross,
               const std::vector<double>& qcol,
               const std::vector<double>& r2q_q) {
  double gw;
  if (p.core.q == 2) {
    double term2 = 0.0;
    for (std::size_t l = 0; l < qcol.size(); ++l) term2 += r2q_q[l] * qcol[l];
    gw = p.core.const_term + term2 - 2.0 * dot(t, cross);
  } else {
    gw = dot(t, cross);  // cross holds G(T) on the naive path
  }
  double loss = p.gw_scale * gw;
  if (p.lin) loss += dot(*p.lin, t);
  return loss;
}

Mat cg_grad(const CgProblem& p, const Mat& cross,
            const std::vector<double>& r2q_q) {
  const std::size_t n = cross.rows;
  const std::size_t k = cross.cols;
  Mat g(n, k, 0.0);
  if (p.core.q == 2) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < k; ++l) {
        g(i, l) = p.gw_scale * 2.0 *
                  (p.core.r1sq_mu[i] + r2q_q[l] - 2.0 * cross(i, l));
      }
    }
  } else {
    for (std::size_t i = 0; i < g.data.size(); ++i) {
      g.data[i] = p.gw_scale * 2.0 * cross.data[i];
    }
  }
  if (p.lin) {
    for (std::size_t i = 0; i < g.data.size(); ++i) {
      g.data[i] += p.lin->data[i];
    }
  }
  return g;
}

SolverReport cg_solve(const Mat& r1, const Mat& r2,
                      const std::vector<double>& mu, const Mat* lin,
                      double gw_scale, int q, const Mat& t0,
                      std::size_t max_cg_iter, double tol) {
  const std::size_t n = r1.rows;
  const std::size_t k = r2.rows;
  if (t0.rows != n || t0.cols != k) {
    throw ShapeMismatch("cg_solve: t0 shape inconsistent");
  }
  if (!plan_feasible(t0, mu)) {
    throw InfeasibleInit("cg_solve: t0 rows must sum to mu, entries >= 0");
  }
  GwCore core(r1, r2, q, mu);
  CgProblem prob{core, mu, lin, gw_scale};

  Mat t = t0;
  Mat cross = (q == 2) ? core.cross(t) : core.naive_apply(t);
  std::vector<double> qcol = col_sums(t);
  std::vector<double> r2q_q =
      (q == 2) ? core.r2sq_apply(qcol) : std::vector<double>();

  SolverReport rep;
  double loss = cg_loss(prob, t, cross, qcol, r2q_q);
  rep.loss_trace.push_back(loss);

  for (std::size_t it = 0; it < max_cg_iter; ++it) {
    const Mat grad = cg_grad(prob, cross, r2q_q);
    // LMO over {T >= 0, T 1 = mu}: row-separable
    Mat s(n, k, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t arg = 0;
      double best = grad(i, 0);
      for (std::size_t l = 1; l < k; ++l) {
        if (grad(i, l) < best) {
          best = grad(i, l);
          arg = l;
        }
      }
      s(i, arg) = mu[i];
    }
    Mat d = s;
    for (std::size_t i = 0; i < d.data.size(); ++i) d.data[i] -= t.data[i];

    const double b = dot(grad, d);
    if (!(b < 0.0)) break;  // stationary

    // quadratic coefficient along T + gamma D
    double a;
    Mat cross_d;
    std::vector<double> u = col_sums(d);
    if (q == 2) {
      cross_d = core.cross(d);
      const std::vector<double> r2q_u = core.r2sq_apply(u);
      double a_gw = -2.0 * dot(d, cross_d);
      for (std::size_t l = 0; l < k; ++l) a_gw += r2q_u[l] * u[l];
      a = gw_scale * a_gw;
    } else {
      cross_d = core.naive_apply(d);
      a = gw_scale * dot(d, cross_d);
    }

    double gamma;
    if (a > 0.0) {
      gamma = std::clamp(-b / (2.0 * a), 0.0, 1.0);
    } else {
      gamma = (a + b < 0.0) ? 1.0 : 0.0;
    }
    if (gamma == 0.0) break;

    for (std::size_t i = 0; i < t.data.size(); ++i) {
      t.data[i] += gamma * d.data[i];
      if (t.data[i] < 0.0) t.data[i] = 0.0;  // clip float dust
    }
    // cross term and marginal update are linear in the step
    for (std::size_t i = 0; i < cross.data.size(); ++i) {
      cross.data[i] += gamma * cross_d.data[i];
    }
    for (std::size_t l = 0; l < k; ++l) qcol[l] += gamma * u[l];
    if (q == 2) r2q_q = core.r2sq_apply(qcol);

    const double new_loss = cg_loss(prob, t, cross, qcol, r2q_q);
    rep.loss_trace.push_back(new_loss);
    rep.iterations = it + 1;
    if (loss - new_loss <= tol * std::max(std::abs(loss), 1e-16)) {
      loss = new_loss;
      break;
    }
    loss = new_loss;
  }

  std::uint32_t nonempty = 0;
  for (std::size_t l = 0; l < k; ++l) {
    double cs = 0.0;
    for (std::size_t i = 0; i < n; ++i) cs += t(i, l);
    if (cs > 1e-15) ++nonempty;
  }
  rep.plan = std::move(t);
  rep.nonempty_k = nonempty;
  return rep;
}

}  // namespace

SolverReport srgw_solve(const DistanceMatrix& r1,
                        const std::vector<double>& mu,
                        const DistanceMatrix& r2, const Mat& t0,
                        const LossParams& params, std::size_t max_cg_iter,
                        double tol) {
  if (mu.size() != r1.size()) {
    throw ShapeMismatch("srgw_solve: mu size differs from source");
  }
  if (params.q < 1) throw InvalidArgument("srgw_solve: q must be >= 1");
  return cg_solve(r1.mat(), r2.mat(), mu, nullptr, 1.0, params.q, t0,
                  max_cg_iter, tol);
}

SolverReport srfgw_solve(const DistanceMatrix& ds_source,
                         const std::vector<double>& mu,
                         const DistanceMatrix& ds_target, const Mat& m,
                         const Mat& t0, const LossParams& params,
                         std::size_t max_cg_iter, double tol) {
  if (mu.size() != ds_source.size()) {
    throw ShapeMismatch("srfgw_solve: mu size differs from source");
  }
  if (m.rows != ds_source.size() || m.cols != ds_target.size()) {
    throw ShapeMismatch("srfgw_solve: attribute-cost shape inconsistent");
  }
  if (!(params.alpha >= 0.0 && params.alpha <= 1.0)) {
    throw InvalidArgument("srfgw_solve: alpha must lie in [0, 1]");
  }
  if (params.q < 1) throw InvalidArgument("srfgw_solve: q must be >= 1");
  Mat lin = entrywise_pow(m, params.q);
  for (auto& v : lin.data) v *= (1.0 - params.alpha);
  return cg_solve(ds_source.mat(), ds_target.mat(), mu, &lin, params.alpha,
                  params.q, t0, max_cg_iter, tol);
}

std::pair<Mat, Partition> hard_project(const Mat& t,
                                       const std::vector<double>& mu) {
  if (t.rows != mu.size()) {
    throw ShapeMismatch("hard_project: mu size differs from plan rows");
  }
  Mat hard(t.rows, t.cols, 0.0);
  Partition p;
  p.k = static_cast<std::uint32_t>(t.cols);
  p.assign.resize(t.rows);
  for (std::size_t i = 0; i < t.rows; ++i) {
    std::size_t arg = 0;
    double best = t(i, 0);
    for (std::size_t l = 1; l < t.cols; ++l) {
      if (t(i, l) > best) {
        best = t(i, l);
        arg = l;
      }
    }
    hard(i, arg) = mu[i];
    p.assign[i] = static_cast<std::uint32_t>(arg);
  }
  return {std::move(hard), std::move(p)};
}

namespace {

// b_l = argmin_b sum_i da(i, b)^q t_il, candidates all nodes, smallest
// index on ties; cost table via one matrix product.
std::vector<std::size_t> medoid_barycenters(const Mat& daq, const Mat& t) {
  const std::size_t n = daq.rows;
  const std::size_t k = t.cols;
  Mat cost(n, k, 0.0);
  kernels::gemm(daq, t, cost);
  std::vector<std::size_t> ids(k, 0);
  for (std::size_t l = 0; l < k; ++l) {
    std::size_t arg = 0;
    double best = cost(0, l);
    for (std::size_t b = 1; b < n; ++b) {
      if (cost(b, l) < best) {
        best = cost(b, l);
        arg = b;
      }
    }
    ids[l] = arg;
  }
  return ids;
}

Mat costs_at_barycenters(const Mat& da, const std::vector<std::size_t>& ids) {
  Mat m(da.rows, ids.size(), 0.0);
  for (std::size_t i = 0; i < da.rows; ++i) {
    for (std::size_t l = 0; l < ids.size(); ++l) m(i, l) = da(i, ids[l]);
  }
  return m;
}

}  // namespace

PartitionResult srfgw_partition(const DistanceMatrix& ds,
                                const DistanceMatrix& da,
                                const std::vector<double>& mu,
                                const TargetSpec& target,
                                const LossParams& params, const Mat& t0,
                                const PartitionOptions& options) {
  const std::size_t n = ds.size();
  if (da.size() != n || mu.size() != n) {
    throw ShapeMismatch("srfgw_partition: input sizes inconsistent");
  }
  if (!(params.alpha >= 0.0 && params.alpha <= 1.0)) {
    throw InvalidArgument("srfgw_partition: alpha must lie in [0, 1]");
  }
  if (!plan_feasible(t0, mu)) {
    throw InfeasibleInit("srfgw_partition: t0 rows must sum to mu");
  }
  DistanceMatrix r2 = build_target(target, ds);
  if (t0.cols != r2.size()) {
    throw ShapeMismatch("srfgw_partition: t0 columns differ from target size");
  }

  const Mat daq = entrywise_pow(da.mat(), params.q);

  Mat t = t0;
  Mat r2m = r2.mat();
  std::vector<std::size_t> bary = medoid_barycenters(daq, t);
  Mat m = costs_at_barycenters(da.mat(), bary);

  SolverReport rep;
  rep.outer_initial_loss = fgw_loss(DistanceMatrix(ds.mat()),
                                    DistanceMatrix(r2m), m, t, params);
  rep.loss_trace.push_back(rep.outer_initial_loss);

  for (std::size_t outer = 0; outer < options.max_outer; ++outer) {
    SolverReport inner =
        srfgw_solve(ds, mu, DistanceMatrix(r2m), m, t, params,
                    options.max_cg_iter, options.cg_tol);
    Mat t_new = std::move(inner.plan);
    const double loss_after_plan = inner.loss_trace.back();

    // drop target columns that lost all transport mass (loss-neutral)
    std::vector<double> colmass = col_sums(t_new);
    std::vector<std::size_t> keep;
    for (std::size_t l = 0; l < colmass.size(); ++l) {
      if (colmass[l] > 1e-15) keep.push_back(l);
    }
    bool shrank = false;
    if (keep.size() < t_new.cols && !keep.empty()) {
      shrank = true;
      Mat t2(t_new.rows, keep.size(), 0.0);
      for (std::size_t i = 0; i < t_new.rows; ++i) {
        for (std::size_t l = 0; l < keep.size(); ++l) {
          t2(i, l) = t_new(i, keep[l]);
        }
      }
      Mat r2b(keep.size(), keep.size(), 0.0);
      for (std::size_t a = 0; a < keep.size(); ++a) {
        for (std::size_t b = 0; b < keep.size(); ++b) {
          r2b(a, b) = r2m(keep[a], keep[b]);
        }
      }
      t_new = std::move(t2);
      r2m = std::move(r2b);
    }

    std::vector<std::size_t> bary_new = medoid_barycenters(daq, t_new);
    Mat m_new = costs_at_barycenters(da.mat(), bary_new);
    const double loss_after_bary = fgw_loss(
        DistanceMatrix(ds.mat()), DistanceMatrix(r2m), m_new, t_new, params);

    rep.outer_loss_after_plan.push_back(loss_after_plan);
    rep.outer_loss_after_bary.push_back(loss_after_bary);
    rep.loss_trace.push_back(loss_after_plan);
    rep.loss_trace.push_back(loss_after_bary);
    rep.iterations = outer + 1;

    bool converged = false;
    if (!shrank && t_new.same_shape(t)) {
      double diff = 0.0;
      for (std::size_t i = 0; i < t.data.size(); ++i) {
        diff = std::max(diff, std::abs(t_new.data[i] - t.data[i]));
      }
      converged = diff <= 1e-12;
    }
    t = std::move(t_new);
    bary = std::move(bary_new);
    m = std::move(m_new);
    if (converged) break;
  }

  auto [hard, part] = hard_project(t, mu);
  if (options.final_hard_project) {
    t = std::move(hard);
    bary = medoid_barycenters(daq, t);
  }

  std::uint32_t nonempty = 0;
  for (double cs : col_sums(t)) {
    if (cs > 1e-15) ++nonempty;
  }
  rep.plan = std::move(t);
  rep.barycenter_ids = std::move(bary);
  rep.nonempty_k = nonempty;
  return {std::move(rep), std::move(part)};
}

PartitionResult srfgw_partition(const AttributedGraph& g,
                                const DistanceMatrix& ds,
                                const TargetSpec& target,
                                const LossParams& params, const Mat& t0,
                                const PartitionOptions& options, double beta) {
  if (!g.attributed()) {
    throw AttributesRequired("srfgw_partition: graph carries no attributes");
  }
  const DistanceMatrix da = attribute_distance_matrix(g.attributes, beta);
  return srfgw_partition(ds, da, g.mu, target, params, t0, options);
}

bool prop1_certificate(const SolverReport& report, double tol) {
  if (report.outer_loss_after_plan.empty() ||
      report.outer_loss_after_plan.size() !=
          report.outer_loss_after_bary.size()) {
    throw MissingTrace("prop1_certificate: outer losses not recorded");
  }
  double prev = report.outer_initial_loss;
  for (std::size_t nIt = 0; nIt < report.outer_loss_after_plan.size(); ++nIt) {
    const double after_plan = report.outer_loss_after_plan[nIt];
    const double after_bary = report.outer_loss_after_bary[nIt];
    if (after_plan > prev + tol) return false;
    if (after_bary > after_plan + tol) return false;
    prev = after_bary;
  }
  return true;
}

double prop2_bound(const Mat& t, const Mat& t_tilde, double d_a_max,
                   double d_s_max, const LossParams& params) {
  if (!t.same_shape(t_tilde)) {
    throw ShapeMismatch("prop2_bound: plans differ in shape");
  }
  double l1 = 0.0;
  for (std::size_t i = 0; i < t.data.size(); ++i) {
    l1 += std::abs(t.data[i] - t_tilde.data[i]);
  }
  const double c = (1.0 - params.alpha) * std::pow(d_a_max, params.q) +
                   2.0 * params.alpha * std::pow(d_s_max, params.q);
  return c * l1;
}

}  // namespace otpart
