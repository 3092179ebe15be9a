#pragma once

#include <optional>
#include <vector>

#include "raatc/graph.hpp"

namespace raatc {

// r cliques with empty total intersection; total = sum of cardinalities.
struct CliqueTuple {
  std::vector<VertexSet> cliques;
  int total = 0;

  bool valid_for(const Graph& g) const;
};

// Inclusion-maximal cliques, each once, sorted by ascending member lists.
// The empty graph has none; an isolated vertex yields a singleton.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// All cliques of g, including the empty clique.
std::vector<VertexSet> all_cliques(const Graph& g);

// c(Gamma): size of the largest clique, 0 for the empty graph.
int clique_number(const Graph& g);

// True iff g contains two disjoint cliques of size clique_number(g).
bool has_two_disjoint_max_cliques(const Graph& g);

// Exact optimum of sum |C_i| over r cliques with empty total intersection
// (empty cliques allowed). Throws for r < 2.
int z_r(const Graph& g, int r);

struct ZrResult {
  int value = 0;
  CliqueTuple witness;
};

// Same optimum plus the witness with lexicographically smallest per-vertex
// label assignment among optima.
ZrResult z_r_with_witness(const Graph& g, int r);

// Independent brute-force route over per-vertex label sets. Guarded to
// |V| <= 12 and r <= 5.
int z_r_oracle(const Graph& g, int r);

// If some size-k sub-collection (k < r) of the witness has empty
// intersection, returns z_k(g) + (r-k)*c(g) and asserts it equals z_r(g).
std::optional<int> z_shortcut_check(const Graph& g, int r,
                                    const CliqueTuple& witness);

}  // namespace raatc
