#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "paving/graph.hpp"
#include "paving/matroid.hpp"

namespace paving {

/// Labels a1..aV, b1..bV, c1..cV matching element indices v, V+v, 2V+v.
LabelMap class_labels(int v);

/// Rank-4 matroid on {a_1..a_k, b_1..b_k, c_1..c_k} whose circuit hyperplanes
/// are {a_i,a_j,b_i,b_j} and {b_i,b_j,c_i,c_j} for all i < j, and
/// {a_i,a_j,c_i,c_j} for all i < j except (i, j) = (1, k).
/// Element indexing: a_i -> i-1, b_i -> k+i-1, c_i -> 2k+i-1.
SparsePavingMatroid build_mk(int k);

/// dualize(build_mk(3)): rank 5 on 9 elements, 8 circuit hyperplanes.
SparsePavingMatroid build_tictactoe();

/// Rank 4 on {a,a',b,b',c,c',d,d'} with circuit hyperplanes aa'bb', aa'cc',
/// bb'cc', bb'dd', cc'dd'; the fourth "face" aa'dd' is independent.
SparsePavingMatroid build_vamos();

enum class PrismFamily { ab, ac, bc };

const char* to_string(PrismFamily family);

/// One circuit hyperplane to omit from a graph-prism construction.
struct PrismRelaxation {
  std::pair<int, int> edge;  // vertices of the target graph, any order
  PrismFamily family;
};

/// Ground set {a_v, b_v, c_v : v} (indices v, V+v, 2V+v), rank 4; every edge
/// (i, j) contributes the circuit hyperplanes {a_i,a_j,b_i,b_j},
/// {a_i,a_j,c_i,c_j}, {b_i,b_j,c_i,c_j} minus the listed relaxations.
SparsePavingMatroid graph_prism(const SimpleGraph& g,
                                const std::vector<PrismRelaxation>& relaxations = {});

/// Greedily samples r-subsets keeping those that respect the pairwise
/// intersection bound, until target_ch_count kept or attempts run out.
/// Deterministic in seed; may return fewer circuit hyperplanes than asked.
SparsePavingMatroid random_sparse_paving(int n, int r, int target_ch_count, std::uint64_t seed);

}  // namespace paving
