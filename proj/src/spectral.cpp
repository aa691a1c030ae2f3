#include "reslab/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "reslab/generators.hpp"

namespace reslab::spectral {

SpectralProfile adjacency_spectrum(const Graph& g, int cap) {
  const int n = g.order();
  if (n > cap)
    throw Error("adjacency_spectrum: n=" + std::to_string(n) + " exceeds the dense cap " + std::to_string(cap) +
                "; use lambda_estimate");
  SpectralProfile profile;
  profile.n = n;
  if (n > 0 && is_regular(g)) profile.degree = g.degree_unchecked(0);
  if (n == 0) return profile;

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) a(v, w) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("adjacency_spectrum: eigensolver did not converge");
  const auto& ev = solver.eigenvalues();  // ascending
  profile.eigenvalues.assign(ev.data(), ev.data() + n);
  std::reverse(profile.eigenvalues.begin(), profile.eigenvalues.end());
  for (int i = 1; i < n; ++i) profile.lambda = std::max(profile.lambda, std::abs(profile.eigenvalues[i]));
  return profile;
}

double lambda_estimate(const Graph& g, int iterations, Seed seed) {
  const int n = g.order();
  if (!is_regular(g)) throw Error("lambda_estimate: graph is not regular");
  if (n < 2) return 0.0;

  Rng rng = make_rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> x(n), y(n);
  auto project_normalize = [n](std::vector<double>& v) {
    double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    double norm = 0.0;
    for (double& t : v) {
      t -= mean;
      norm += t * t;
    }
    norm = std::sqrt(norm);
    if (norm > 0)
      for (double& t : v) t /= norm;
    return norm;
  };
  auto apply = [&g, n](const std::vector<double>& in, std::vector<double>& out) {
    for (Vertex v = 0; v < n; ++v) {
      double s = 0.0;
      for (Vertex w : g.neighbors(v)) s += in[w];
      out[v] = s;
    }
  };

  for (double& t : x) t = gauss(rng);
  if (project_normalize(x) == 0.0) return 0.0;
  double estimate = 0.0;
  for (int it = 0; it < std::max(iterations, 1); ++it) {
    apply(x, y);
    // x is unit and orthogonal to 1, so ||Ax|| = sqrt(x^T A^2 x) <= lambda.
    double norm = project_normalize(y);
    estimate = std::max(estimate, norm);
    if (norm == 0.0) break;
    std::swap(x, y);
  }
  return estimate;
}

std::int64_t ordered_pair_count(const Graph& g, const VertexSet& b, const VertexSet& c) {
  b.mask(g.order());
  auto in_c = c.mask(g.order());
  std::int64_t count = 0;
  for (Vertex u : b)
    for (Vertex v : g.neighbors(u)) count += in_c[v];
  return count;
}

MixingCheck mixing_discrepancy(const Graph& g, const SpectralProfile& profile, const VertexSet& b, const VertexSet& c) {
  if (!is_regular(g)) throw Error("mixing_discrepancy: graph is not regular");
  if (profile.n != g.order() || !profile.degree || (g.order() > 0 && *profile.degree != g.degree_unchecked(0)))
    throw Error("mixing_discrepancy: profile does not belong to this graph");
  const double n = g.order();
  const double bs = static_cast<double>(b.size());
  const double cs = static_cast<double>(c.size());
  MixingCheck out;
  double expected = n > 0 ? *profile.degree / n * bs * cs : 0.0;
  out.lhs = std::abs(static_cast<double>(ordered_pair_count(g, b, c)) - expected);
  out.rhs = profile.lambda * std::sqrt(bs * cs);
  return out;
}

RegularityReport eps_regularity_probe(const Graph& g, double d, double epsilon, int samples, Seed seed) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw Error("eps_regularity_probe: epsilon must lie in (0, 1/2)");
  const int n = g.order();
  RegularityReport report;
  report.d = d;
  report.epsilon = epsilon;
  report.samples = samples;
  report.min_degree_ok = static_cast<double>(min_degree(g)) >= d * n;

  const int lo = std::max(1, static_cast<int>(std::ceil(epsilon * n)));
  const int hi = n / 2;
  if (lo > hi) return report;

  std::vector<Vertex> perm(n);
  std::vector<char> in_t(n, 0);
  for (int s = 0; s < samples; ++s) {
    Rng rng = make_rng(derive_seed(seed, stream::sample, static_cast<std::uint64_t>(s)));
    std::uniform_int_distribution<int> size(lo, hi);
    int ssize = size(rng), tsize = size(rng);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::fill(in_t.begin(), in_t.end(), 0);
    for (int i = ssize; i < ssize + tsize; ++i) in_t[perm[i]] = 1;
    std::int64_t e = 0;
    for (int i = 0; i < ssize; ++i)
      for (Vertex w : g.neighbors(perm[i])) e += in_t[w];
    double density = static_cast<double>(e) / (static_cast<double>(ssize) * tsize);
    report.worst_deviation = std::max(report.worst_deviation, std::abs(density - d));
  }
  return report;
}

double expansion_ratio(const Graph& g, const VertexSet& u) {
  if (u.empty()) throw Error("expansion_ratio: empty set");
  return static_cast<double>(neighborhood_of_set(g, u).size()) / static_cast<double>(u.size());
}

ExpansionResult expansion_probe(const Graph& g, int set_size, int samples, double threshold, Seed seed) {
  if (set_size < 1 || set_size > g.order()) throw Error("expansion_probe: set_size out of range");
  ExpansionResult out;
  out.min_ratio = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    Rng rng = make_rng(derive_seed(seed, stream::sample, static_cast<std::uint64_t>(s)));
    VertexSet u = random_subset(g.order(), set_size, rng);
    double ratio = expansion_ratio(g, u);
    out.min_ratio = std::min(out.min_ratio, ratio);
    if (ratio < threshold && !out.witness) out.witness = std::move(u);
  }
  return out;
}

}  // namespace reslab::spectral
