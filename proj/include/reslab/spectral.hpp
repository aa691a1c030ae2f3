#pragma once

#include <optional>
#include <vector>

#include "reslab/graph.hpp"
#include "reslab/rng.hpp"

namespace reslab::spectral {

inline constexpr int kDenseCap = 5000;

struct SpectralProfile {
  int n = 0;
  std::optional<int> degree;          ///< common degree D when the graph is regular
  std::vector<double> eigenvalues;    ///< descending
  double lambda = 0.0;                ///< max_{i>=2} |lambda_i|
};

/// Sampled (d, epsilon)-regularity evidence. Covers only the sampled pairs,
/// it is not a proof over all pairs.
struct RegularityReport {
  double d = 0.0;
  double epsilon = 0.0;
  double worst_deviation = 0.0;
  int samples = 0;
  bool min_degree_ok = false;
};

struct MixingCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds(double slack = 1e-9) const { return lhs <= rhs + slack * (1.0 + rhs); }
};

struct ExpansionResult {
  double min_ratio = 0.0;
  std::optional<VertexSet> witness;
};

/// Full adjacency spectrum by dense symmetric eigensolve.
SpectralProfile adjacency_spectrum(const Graph& g, int cap = kDenseCap);

/// Power iteration on the adjacency operator restricted to the complement of
/// the all-ones vector. Returns sqrt of the Rayleigh quotient of A^2, a lower
/// bound on lambda that tightens with more iterations. Requires a regular graph.
double lambda_estimate(const Graph& g, int iterations, Seed seed);

/// Ordered pairs (u, v), u in b, v in c, uv an edge. Sets may overlap; an edge
/// inside b and c counts twice.
std::int64_t ordered_pair_count(const Graph& g, const VertexSet& b, const VertexSet& c);

/// Both sides of |e(B,C) - (D/n)|B||C|| <= lambda sqrt(|B||C|).
MixingCheck mixing_discrepancy(const Graph& g, const SpectralProfile& profile, const VertexSet& b, const VertexSet& c);

RegularityReport eps_regularity_probe(const Graph& g, double d, double epsilon, int samples, Seed seed);

/// |N(u)| / |u| for one set.
double expansion_ratio(const Graph& g, const VertexSet& u);

/// Minimum expansion ratio over sampled sets of the given size; the first
/// sampled set with ratio below threshold is returned as witness.
ExpansionResult expansion_probe(const Graph& g, int set_size, int samples, double threshold, Seed seed);

}  // namespace reslab::spectral
