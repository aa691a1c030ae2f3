#pragma once

#include <utility>

#include "reslab/graph.hpp"
#include "reslab/rng.hpp"

namespace reslab {

/// Binomial random graph: each of the n(n-1)/2 pairs is an edge independently
/// with probability p. Uses geometric skipping below p = 0.1 and a dense pair
/// scan otherwise.
Graph gnp(int n, double p, Seed seed);

/// Uniform-ish simple d-regular graph from the pairing model. Pairs that
/// would form a loop or a repeated edge are rejected and redrawn; if no legal
/// pair remains the pairing restarts. At most 10*n*d redraws in total.
Graph random_regular(int n, int d, Seed seed);

/// Uniformly random split of [n] into two halves of size n/2 (n even).
std::pair<VertexSet, VertexSet> random_equal_bipartition(int n, Seed seed);

/// Uniformly random split into parts whose sizes differ by at most one.
std::pair<VertexSet, VertexSet> random_balanced_bipartition(int n, Seed seed);

/// Uniformly random k-subset of [n].
VertexSet random_subset(int n, int k, Rng& rng);

}  // namespace reslab
