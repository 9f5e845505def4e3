#include "otpart/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "otpart/errors.hpp"

namespace otpart {

namespace {

bool pairs_connected(std::size_t k, const std::vector<char>& keep) {
  // keep is a k*k symmetric 0/1 mask over group pairs
  std::vector<char> seen(k, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t r = stack.back();
    stack.pop_back();
    for (std::size_t s = 0; s < k; ++s) {
      if (!seen[s] && keep[r * k + s]) {
        seen[s] = 1;
        ++count;
        stack.push_back(s);
      }
    }
  }
  return count == k;
}

std::vector<char> shape_mask(const BlockModelConfig& cfg, Rng& rng) {
  const std::size_t k = cfg.k;
  std::vector<char> keep(k * k, 0);
  auto keep_pair = [&](std::size_t r, std::size_t s) {
    keep[r * k + s] = 1;
    keep[s * k + r] = 1;
  };
  for (std::size_t r = 0; r < k; ++r) keep[r * k + r] = 1;
  switch (cfg.shape) {
    case Shape::FullyConnected:
      for (auto& v : keep) v = 1;
      break;
    case Shape::Sparse: {
      for (std::size_t attempt = 0; attempt < 100000; ++attempt) {
        std::vector<char> mask = keep;
        for (std::size_t r = 0; r < k; ++r) {
          for (std::size_t s = r + 1; s < k; ++s) {
            if (rng.uniform01() < 0.5) {
              mask[r * k + s] = 1;
              mask[s * k + r] = 1;
            }
          }
        }
        if (pairs_connected(k, mask)) return mask;
      }
      throw DisconnectedSample("block_matrix: no connected sparse mask found");
    }
    case Shape::Chain:
      for (std::size_t r = 0; r + 1 < k; ++r) keep_pair(r, r + 1);
      break;
    case Shape::Donut:
      for (std::size_t r = 0; r + 1 < k; ++r) keep_pair(r, r + 1);
      if (k > 1) keep_pair(0, k - 1);
      break;
    case Shape::Star:
      for (std::size_t s = 1; s < k; ++s) keep_pair(0, s);
      break;
  }
  return keep;
}

}  // namespace

Mat block_matrix(const BlockModelConfig& cfg) {
  if (cfg.k == 0) throw InvalidArgument("block_matrix: k must be positive");
  if (!(cfg.b > 0.0)) throw InvalidArgument("block_matrix: b must be positive");
  if (!(cfg.t >= 0.0)) {
    throw InvalidArgument("block_matrix: t must be non-negative");
  }
  const std::size_t k = cfg.k;
  Rng rng(cfg.rng_seed);
  Mat a(k, k, 0.0);
  for (auto& v : a.data) v = rng.uniform(0.0, cfg.b);
  const std::vector<char> keep = shape_mask(cfg, rng);
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    if (!keep[i]) a.data[i] = 0.0;
  }
  for (std::size_t r = 0; r < k; ++r) a(r, r) += cfg.t;
  // symmetrize, column-normalize, re-symmetrize (normalization breaks
  // symmetry and edge probabilities must be symmetric), clip
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r + 1; s < k; ++s) {
      const double v = 0.5 * (a(r, s) + a(s, r));
      a(r, s) = v;
      a(s, r) = v;
    }
  }
  std::vector<double> csum(k, 0.0);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < k; ++s) csum[s] += a(r, s);
  }
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < k; ++s) {
      if (csum[s] > 0.0) a(r, s) /= csum[s];
    }
  }
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r + 1; s < k; ++s) {
      const double v = 0.5 * (a(r, s) + a(s, r));
      a(r, s) = v;
      a(s, r) = v;
    }
  }
  for (auto& v : a.data) v = std::clamp(v, 0.0, 1.0);
  return a;
}

namespace {

bool graph_connected(std::size_t n,
                     const std::vector<AttributedGraph::Edge>& edges) {
  if (n == 0) return false;
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const auto& e : edges) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (auto v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

}  // namespace

SbmSample sample_sbm(const Mat& p, const std::vector<std::size_t>& sizes,
                     Rng& rng, std::size_t max_retries) {
  if (p.rows != p.cols || p.rows != sizes.size()) {
    throw ShapeMismatch("sample_sbm: block matrix / sizes mismatch");
  }
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(),
                                        std::size_t{0});
  if (n == 0) throw EmptyGraph("sample_sbm: zero nodes requested");
  std::vector<std::uint32_t> group(n);
  {
    std::size_t at = 0;
    for (std::size_t g = 0; g < sizes.size(); ++g) {
      for (std::size_t c = 0; c < sizes[g]; ++c) {
        group[at++] = static_cast<std::uint32_t>(g);
      }
    }
  }
  for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<AttributedGraph::Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng.uniform01() < p(group[i], group[j])) {
          edges.push_back({static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j), 1.0});
        }
      }
    }
    if (graph_connected(n, edges)) {
      SbmSample out;
      out.graph = AttributedGraph::with_uniform_mu(n, std::move(edges));
      out.labels.assign = std::move(group);
      out.labels.k = static_cast<std::uint32_t>(sizes.size());
      return out;
    }
  }
  throw DisconnectedSample("sample_sbm: retry cap hit without connectivity");
}

std::vector<double> bspline_knots(std::size_t n_basis, int degree) {
  if (degree < 1 || n_basis <= static_cast<std::size_t>(degree)) {
    throw InvalidArgument("bspline_knots: need n_basis > degree >= 1");
  }
  const std::size_t p = static_cast<std::size_t>(degree);
  const std::size_t intervals = n_basis - p;  // interior spans
  std::vector<double> knots(n_basis + p + 1, 0.0);
  for (std::size_t i = 0; i <= p; ++i) knots[i] = 0.0;
  for (std::size_t i = 1; i < intervals; ++i) {
    knots[p + i] = static_cast<double>(i) / static_cast<double>(intervals);
  }
  for (std::size_t i = n_basis; i < knots.size(); ++i) knots[i] = 1.0;
  return knots;
}

std::vector<double> eval_bspline(const std::vector<double>& coeffs,
                                 int degree,
                                 const std::vector<double>& knots,
                                 const std::vector<double>& grid) {
  const std::size_t p = static_cast<std::size_t>(degree);
  const std::size_t n_basis = knots.size() - p - 1;
  if (coeffs.size() != n_basis) {
    throw ShapeMismatch("eval_bspline: coefficient count mismatch");
  }
  std::vector<double> out(grid.size(), 0.0);
  std::vector<double> left(p + 1, 0.0), right(p + 1, 0.0), nfun(p + 1, 0.0);
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    const double x = grid[gi];
    // span index: largest i in [p, n_basis-1] with knots[i] <= x
    std::size_t span = p;
    while (span + 1 < n_basis && knots[span + 1] <= x) ++span;
    // triangular recurrence for the p+1 basis values on this span
    nfun[0] = 1.0;
    for (std::size_t j = 1; j <= p; ++j) {
      left[j] = x - knots[span + 1 - j];
      right[j] = knots[span + j] - x;
      double saved = 0.0;
      for (std::size_t r = 0; r < j; ++r) {
        const double denom = right[r + 1] + left[j - r];
        const double temp = denom != 0.0 ? nfun[r] / denom : 0.0;
        nfun[r] = saved + right[r + 1] * temp;
        saved = left[j - r] * temp;
      }
      nfun[j] = saved;
    }
    double acc = 0.0;
    for (std::size_t r = 0; r <= p; ++r) {
      acc += nfun[r] * coeffs[span - p + r];
    }
    out[gi] = acc;
  }
  return out;
}

std::vector<double> uniform_grid(std::size_t n) {
  if (n < 2) throw InvalidArgument("uniform_grid: need at least two points");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return g;
}

std::vector<Curve> gen_splines(std::size_t k,
                               const std::vector<std::size_t>& counts,
                               double epsilon, Rng& rng,
                               std::size_t grid_size) {
  if (counts.size() != k) {
    throw ShapeMismatch("gen_splines: counts size differs from k");
  }
  if (!(epsilon >= 0.0)) {
    throw InvalidArgument("gen_splines: epsilon must be non-negative");
  }
  constexpr std::size_t kBasis = 24;
  constexpr int kDegree = 3;
  const std::vector<double> knots = bspline_knots(kBasis, kDegree);
  const std::vector<double> grid = uniform_grid(grid_size);
  std::vector<Curve> out;
  for (std::size_t g = 0; g < k; ++g) {
    std::vector<double> base(kBasis);
    for (auto& v : base) v = rng.uniform01();
    for (std::size_t node = 0; node < counts[g]; ++node) {
      std::vector<double> coeffs(kBasis);
      for (std::size_t l = 0; l < kBasis; ++l) {
        coeffs[l] = base[l] + rng.uniform(-epsilon, epsilon);
      }
      out.push_back({eval_bspline(coeffs, kDegree, knots, grid)});
    }
  }
  return out;
}

std::vector<Histogram> gen_histograms(std::size_t k,
                                      const std::vector<std::size_t>& counts,
                                      double c, std::size_t support_size,
                                      Rng& rng, double bin_width) {
  if (counts.size() != k) {
    throw ShapeMismatch("gen_histograms: counts size differs from k");
  }
  if (!(c > 0.0)) throw InvalidArgument("gen_histograms: c must be positive");
  if (support_size < 2) {
    throw InvalidArgument("gen_histograms: support must have >= 2 bins");
  }
  std::vector<Histogram> out;
  for (std::size_t g = 0; g < k; ++g) {
    std::vector<double> conc(support_size);
    for (auto& v : conc) v = rng.uniform01();
    const std::vector<double> base = rng.dirichlet(conc);
    std::vector<double> scaled(support_size);
    for (std::size_t s = 0; s < support_size; ++s) {
      scaled[s] = std::max(c * base[s], 1e-12);  // Dirichlet needs > 0
    }
    for (std::size_t node = 0; node < counts[g]; ++node) {
      Histogram h;
      h.bin_width = bin_width;
      h.masses = rng.dirichlet(scaled);
      double total = 0.0;
      for (double v : h.masses) total += v;
      for (auto& v : h.masses) v /= total;
      out.push_back(std::move(h));
    }
  }
  return out;
}

PerturbationLevel perturbation_level(int level) {
  switch (level) {
    case 1: return {1, 0.05, 1000.0};
    case 2: return {2, 0.15, 200.0};
    case 3: return {3, 0.20, 80.0};
    case 4: return {4, 0.35, 15.0};
    case 5: return {5, 2.00, 2.0};
    default: throw BadLevel("perturbation_level: level must be in 1..5");
  }
}

void attach_attributes(AttributedGraph& g, const Partition& labels,
                       const PerturbationLevel& level, Rng& rng,
                       std::size_t support_size, std::size_t grid_size) {
  if (labels.assign.size() != g.n) {
    throw ShapeMismatch("attach_attributes: labels size differs from graph");
  }
  std::vector<std::size_t> counts(labels.k, 0);
  for (std::size_t i = 0; i < g.n; ++i) ++counts[labels.assign[i]];
  // generators emit nodes group-major; graph nodes are ordered the same way
  for (std::size_t i = 1; i < g.n; ++i) {
    if (labels.assign[i] < labels.assign[i - 1]) {
      throw InvalidArgument("attach_attributes: labels must be group-major");
    }
  }
  std::vector<Curve> curves =
      gen_splines(labels.k, counts, level.epsilon, rng, grid_size);
  std::vector<Histogram> hists = gen_histograms(labels.k, counts, level.c,
                                                support_size, rng);
  g.attributes.clear();
  g.attributes.resize(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    g.attributes[i].curves.push_back(std::move(curves[i]));
    g.attributes[i].histograms.push_back(std::move(hists[i]));
  }
}

DistanceMatrix noise_distance_matrix(std::size_t n, Rng& rng) {
  Mat m(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = rng.uniform01();
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return DistanceMatrix(std::move(m));
}

DistanceMatrix add_gaussian_noise(const DistanceMatrix& d, double sigma,
                                  Rng& rng) {
  if (!(sigma >= 0.0)) {
    throw InvalidArgument("add_gaussian_noise: sigma must be non-negative");
  }
  Mat m = d.mat();
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = std::max(0.0, m(i, j) + rng.normal(0.0, sigma));
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return DistanceMatrix(std::move(m));
}

}  // namespace otpart
