#pragma once

#include <optional>
#include <vector>

#include "reslab/graph.hpp"
#include "reslab/rng.hpp"

namespace reslab {

/// A simple path v_1 ... v_k with an O(1) membership mask.
struct PathRecord {
  std::vector<Vertex> order;
  std::vector<char> on_path;

  PathRecord() = default;
  /// Builds the mask; throws if an id repeats or is out of range.
  PathRecord(int n, std::vector<Vertex> vertices);

  std::size_t length() const { return order.size(); }
  Vertex front() const { return order.front(); }
  Vertex back() const { return order.back(); }
};

bool is_valid_path(const Graph& g, const PathRecord& p);

/// Endpoints reachable by rotation sequences with a fixed start, in discovery
/// order. transform_log[i] lists the pivot vertices that turn `path` into the
/// path ending at endpoint_set[i] (empty for the original endpoint).
struct RotationState {
  PathRecord path;
  Vertex fixed_end = -1;
  std::vector<Vertex> endpoint_set;
  std::vector<std::vector<Vertex>> transform_log;
  std::vector<int> round;  ///< BFS depth at which each endpoint was discovered
};

/// Pósa rotation: for path (v_0, ..., v_{l-1}) and pivot v_i adjacent to the
/// free end v_{l-1}, returns (v_0, ..., v_i, v_{l-1}, ..., v_{i+1}). The broken
/// edge is (v_i, v_{i+1}); v_{i+1} becomes the free end. Requires
/// 0 <= pivot_index < l - 2 and an edge between the pivot and the free end.
PathRecord rotate(const Graph& g, const PathRecord& p, int pivot_index);

struct RotationOptions {
  /// Only break edges of the starting path, as in the sparse-case argument.
  bool restrict_to_original_edges = false;
  std::int64_t max_rotations = -1;  ///< < 0: unbounded
};

/// Breadth-first closure of the endpoint set under rotations with p.front() fixed.
RotationState rotation_closure(const Graph& g, const PathRecord& p, const RotationOptions& opts = {});

/// Re-applies the logged pivots for endpoint_set[index].
PathRecord replay(const Graph& g, const RotationState& state, std::size_t index);

struct PosaOptions {
  int restart_budget = 20;
  std::int64_t rotation_budget = -1;  ///< per restart; < 0 means 50 * n
  bool restrict_to_original_edges = false;
};

struct PosaStats {
  int restarts_used = 0;
  std::int64_t rotations = 0;
  int closures = 0;  ///< cycles closed on a proper subset and re-opened
};

/// Rotation-extension search for a Hamilton cycle. A returned cycle has been
/// verified. nullopt means the budget ran out (or the graph is visibly not
/// Hamiltonian); it is not a proof of non-Hamiltonicity in general.
std::optional<std::vector<Vertex>> posa_find_hamilton(const Graph& g, Seed seed, const PosaOptions& opts = {},
                                                      PosaStats* stats = nullptr);

inline constexpr int kExactHamiltonCap = 20;

/// Exact decision by subset dynamic programming over paths from vertex 0.
std::optional<std::vector<Vertex>> exact_hamilton(const Graph& g);

bool verify_hamilton_cycle(const Graph& g, const std::vector<Vertex>& cycle);

}  // namespace reslab
