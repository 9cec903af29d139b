#pragma once

#include <cstddef>
#include <vector>

#include "stse/completion.hpp"
#include "stse/graph.hpp"

namespace stse {

/// Edge-disjoint triangles of a host graph together with their leave.
struct TrianglePacking {
    Graph host;
    std::vector<Triple> triangles;  // sorted
    Graph leave;
};

/// Validates and sorts; throws PreconditionError if a triangle is not in the
/// host or two triangles share an edge.
TrianglePacking make_triangle_packing(Graph host, std::vector<Triple> triangles);

/// Fewest leave edges of a triangle packing of K_u: 0 for u ≡ 1,3 (mod 6),
/// 4 for u ≡ 5, u/2 for u ≡ 0,2 and u/2+1 for u ≡ 4.
std::size_t min_leave_edges_complete(int u);

/// Triangle packing of K_u whose leave has the minimum size above, found by
/// hill-climbing (for u ≡ 0,2 (mod 6), on K_{u+1} with one point then
/// deleted). Deterministic for a fixed cfg.seed.
TrianglePacking max_packing_complete(int u, const CompletionConfig& cfg = {});

struct SparsifyStats {
    std::size_t dropped = 0;   // triangles of K_u not inside L
    std::size_t deleted = 0;   // triangles removed to hit the leave size
    std::size_t case1 = 0;     // repairs using a leave edge inside Nbd(a)
    std::size_t case2 = 0;     // repairs reusing an edge of K_A
};

/// 4|E(L)| ≥ 4·C(u,2) - (w(u-w+1) - u - 2), evaluated exactly.
bool sparsify_edge_bound_holds(const Graph& l, int w);

/// Triangle packing of L with leave L* such that |E(L*)| = w(u-w+1)/2 and
/// Δ(L*) ≤ w-8. Requires u ≥ 62, w = (3u+k)/5 with k ∈ {17,19,21,23}, (L,w)
/// admissible and the edge bound above.
TrianglePacking sparsify_leave(const Graph& l, int u, int w, const CompletionConfig& cfg = {},
                               SparsifyStats* stats = nullptr);

}  // namespace stse
