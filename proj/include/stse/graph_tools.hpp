#pragma once

#include <string>
#include <vector>

#include "stse/graph.hpp"

namespace stse {

/// H with parts A and B; every edge of H joins A to B.
struct BipartiteInstance {
    Graph h;
    VertexSet a;
    VertexSet b;

    /// Throws PreconditionError unless A, B partition V(H) and H has no edge
    /// inside either part.
    void validate() const;
};

struct TwoMatchings {
    std::vector<Edge> m1;
    std::vector<Edge> m2;
};

struct MatchingsOrCertificate {
    bool success = false;
    TwoMatchings matchings;       // success branch: |M1|+|M2| = 2|A|-d
    VertexSet deficiency_set;     // failure branch: S ⊆ A violating the cut inequality
    int max_total = 0;            // largest |M1|+|M2| achievable
};

/// 2|S| - Σ_{x∈B} min(2, |N(x) ∩ S|).
int cut_excess(const BipartiteInstance& inst, const VertexSet& s);

/// Two edge-disjoint A-B matchings of total size exactly 2|A|-d, or a set
/// S ⊆ A with cut_excess(S) > d. Computed by max flow with capacities 2 on
/// source/sink arcs and 1 on edges of H.
MatchingsOrCertificate two_disjoint_matchings(const BipartiteInstance& inst, int d);

/// Components are even paths (length ≥ 2) or even cycles. Isolated vertices
/// are ignored. On failure `why` (if given) names the problem.
bool is_even_linear_forest(const Graph& f, std::string* why = nullptr);

/// 5w - 3u when it lies in {17,19,21,23}, else 0.
int join_parameter(int u, int w);

/// Subgraph F of L* with u-w+1 edges whose components are even paths or even
/// cycles. Requires u ≥ 22, w = (3u+k)/5, |E(L*)| ≥ w(u-w+1)/2, Δ(L*) ≤ w-8.
Graph find_even_linear_forest(const Graph& lstar, int u, int w);

/// As find_even_linear_forest, with A ⊆ V(F). Requires u ≥ 16,
/// |A| = (u-w+1)/2 and deg(x) ≥ u-w on A.
Graph find_even_linear_forest_covering(const Graph& lstar, int u, int w, const VertexSet& a);

/// Proper edge colouring as a list of matchings.
struct MatchingDecomposition {
    std::vector<std::vector<Edge>> classes;
};

/// Misra–Gries fan/path recolouring; uses at most Δ(G)+1 classes.
MatchingDecomposition vizing_color(const Graph& g);

/// Classes are matchings, pairwise disjoint, and cover E(G) exactly.
bool is_proper_decomposition(const Graph& g, const MatchingDecomposition& md, std::string* why = nullptr);

}  // namespace stse
