#pragma once

#include <string>

#include "reslab/graph.hpp"
#include "reslab/rng.hpp"

namespace reslab {

enum class MoveMode { remove, add, symmetric_difference };

std::string to_string(MoveMode mode);
MoveMode parse_move_mode(const std::string& text);

/// A modification graph H on the target's vertex set with Δ(H) <= budget.
struct AdversaryMove {
  Graph h;
  MoveMode mode = MoveMode::remove;
  int budget = 0;
};

/// Throws unless Δ(H) <= budget and the mode discipline holds against g
/// (remove: E(H) ⊆ E(g); add: E(H) ∩ E(g) = ∅). The message names the
/// offending vertex or edge.
void validate_move(const Graph& g, const AdversaryMove& move);

/// G - H, G ∪ H or G △ H depending on the mode.
Graph apply_move(const Graph& g, const AdversaryMove& move);

enum class IsolateVariant {
  uniform,        ///< X uniform among (floor(n/2)+1)-subsets
  lowest_degree,  ///< peel the highest residual degree vertex until |X| = floor(n/2)+1
};

/// H = G[X] for |X| = floor(n/2)+1; X becomes independent in G - H and
/// outnumbers its complement. Budget is Δ(G[X]). Requires n >= 4.
AdversaryMove isolate_larger_half(const Graph& g, Seed seed, IsolateVariant variant = IsolateVariant::uniform,
                                  VertexSet* chosen = nullptr);

/// H = crossing edges of a random balanced bipartition. Requires n >= 2.
AdversaryMove cut_bisection(const Graph& g, Seed seed, VertexSet* side = nullptr);

/// Random maximal H with Δ(H) <= r drawn from E(g) (remove), non-edges (add)
/// or all pairs (symmetric difference), scanning candidates in random order.
AdversaryMove random_degree_bounded(const Graph& g, int r, MoveMode mode, Seed seed);

/// Clique on a random (r+1)-subset minus edges already in g; mode add.
AdversaryMove clique_addition(const Graph& g, int r, Seed seed);

/// Repeatedly deletes an edge at the vertex of minimum residual degree whose
/// H-degree is below r, choosing uniformly among incident edges whose other
/// endpoint also has H-degree below r.
AdversaryMove min_degree_attack(const Graph& g, int r, Seed seed);

}  // namespace reslab
