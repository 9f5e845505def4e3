#include "otpart/frechet_kmeans.hpp"

#include <algorithm>
#include <limits>

#include "otpart/embeddings.hpp"
#include "otpart/rng.hpp"

namespace otpart {

DistanceMatrix seeding_metric(const DistanceMatrix& d, SeedMode mode) {
  switch (mode) {
    case SeedMode::Random:
    case SeedMode::PlusPlusOnV:
      return d;
    case SeedMode::PlusPlusOnD:
      return embed(d);
    case SeedMode::PlusPlusOnD1:
      return embed(embed(d));
  }
  throw InvalidArgument("seeding_metric: unknown mode");
}

std::vector<std::size_t> kmeanspp_seed(const DistanceMatrix& d, std::size_t k,
                                       const Seeding& seeding) {
  const std::size_t n = d.size();
  if (k == 0) throw InvalidArgument("kmeanspp_seed: k must be positive");
  if (k > n) throw KTooLarge("kmeanspp_seed: k exceeds node count");
  Rng rng(seeding.rng_seed);
  std::vector<std::size_t> centers;
  centers.reserve(k);
  centers.push_back(rng.uniform_index(n));
  if (seeding.mode == SeedMode::Random) {
    // uniform without replacement
    std::vector<char> used(n, 0);
    used[centers[0]] = 1;
    while (centers.size() < k) {
      const std::size_t c = rng.uniform_index(n);
      if (!used[c]) {
        used[c] = 1;
        centers.push_back(c);
      }
    }
    return centers;
  }
  const DistanceMatrix metric = seeding_metric(d, seeding.mode);
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<char> used(n, 0);
  used[centers[0]] = 1;
  while (centers.size() < k) {
    const std::size_t last = centers.back();
    std::vector<double> weights(n, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      best[i] = std::min(best[i], metric(i, last));
      if (!used[i]) {
        weights[i] = best[i] * best[i];
        total += weights[i];
      }
    }
    std::size_t next;
    if (total > 0.0) {
      next = rng.categorical(weights);
    } else {
      // all remaining nodes coincide with a center; fall back to the
      // smallest unused index
      next = 0;
      while (used[next]) ++next;
    }
    used[next] = 1;
    centers.push_back(next);
  }
  return centers;
}

Partition assign_to_centers(const DistanceMatrix& metric,
                            const std::vector<std::size_t>& centers) {
  const std::size_t n = metric.size();
  const std::size_t k = centers.size();
  if (k == 0) throw InvalidCenters("assign_to_centers: no centers");
  for (std::size_t a = 0; a < k; ++a) {
    if (centers[a] >= n) {
      throw InvalidCenters("assign_to_centers: center out of range");
    }
    for (std::size_t b = a + 1; b < k; ++b) {
      if (centers[a] == centers[b]) {
        throw InvalidCenters("assign_to_centers: duplicate center");
      }
    }
  }
  Partition p;
  p.k = static_cast<std::uint32_t>(k);
  p.assign.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t arg = 0;
    double best = metric(i, centers[0]);
    for (std::size_t j = 1; j < k; ++j) {
      const double v = metric(i, centers[j]);
      if (v < best) {
        best = v;
        arg = j;
      }
    }
    p.assign[i] = static_cast<std::uint32_t>(arg);
  }
  return p;
}

namespace {

void check_centers(std::size_t n, std::size_t k,
                   const std::vector<std::size_t>& centers) {
  if (centers.size() != k) {
    throw InvalidCenters("lloyd_frechet: need exactly k init centers");
  }
  std::vector<char> used(n, 0);
  for (std::size_t c : centers) {
    if (c >= n) throw InvalidCenters("lloyd_frechet: center out of range");
    if (used[c]) throw InvalidCenters("lloyd_frechet: duplicate center");
    used[c] = 1;
  }
}

}  // namespace

double frechet_objective(const DistanceMatrix& d,
                         const std::vector<double>& mu, const Partition& p,
                         const std::vector<std::size_t>& centers) {
  const std::size_t n = d.size();
  if (p.assign.size() != n || mu.size() != n || centers.size() != p.k) {
    throw ShapeMismatch("frechet_objective: inconsistent shapes");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = d(i, centers[p.assign[i]]);
    acc += v * v * mu[i];
  }
  return acc;
}

KmeansResult lloyd_frechet(const DistanceMatrix& d,
                           const std::vector<double>& mu, std::size_t k,
                           const std::vector<std::size_t>& init_centers,
                           std::size_t max_iter) {
  const std::size_t n = d.size();
  if (mu.size() != n) throw ShapeMismatch("lloyd_frechet: mu size mismatch");
  if (k == 0 || k > n) throw KTooLarge("lloyd_frechet: k out of range");
  check_centers(n, k, init_centers);

  KmeansResult res;
  res.centers = init_centers;
  res.partition = assign_to_centers(d, res.centers);
  res.objective_trace.push_back(
      frechet_objective(d, mu, res.partition, res.centers));

  for (std::size_t it = 0; it < max_iter; ++it) {
    // medoid update per cluster, restricted to members
    std::vector<std::size_t> next_centers = res.centers;
    std::vector<std::vector<std::size_t>> members(k);
    for (std::size_t i = 0; i < n; ++i) {
      members[res.partition.assign[i]].push_back(i);
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (members[j].empty()) continue;  // keep previous center
      double best = std::numeric_limits<double>::infinity();
      std::size_t arg = members[j].front();
      for (std::size_t cand : members[j]) {
        double cost = 0.0;
        for (std::size_t v : members[j]) {
          const double dv = d(v, cand);
          cost += dv * dv * mu[v];
        }
        if (cost < best) {
          best = cost;
          arg = cand;
        }
      }
      next_centers[j] = arg;
    }
    if (next_centers == res.centers) break;  // assignment cannot change
    res.centers = std::move(next_centers);
    res.partition = assign_to_centers(d, res.centers);
    res.objective_trace.push_back(
        frechet_objective(d, mu, res.partition, res.centers));
    res.iterations = it + 1;
  }
  return res;
}

}  // namespace otpart
