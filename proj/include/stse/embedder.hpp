#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stse/completion.hpp"
#include "stse/design.hpp"
#include "stse/graph.hpp"
#include "stse/packing.hpp"
#include "stse/switching.hpp"

namespace stse {

/// v = u + w with w = (3u+k)/5; k is 21, 23, 17, 19 for v ≡ 1, 3, 5, 7 (mod 8).
struct OrderSplit {
    int v = 0;
    int k = 0;
    int u = 0;
    int w = 0;
};

/// Requires v odd and v ≥ 103.
OrderSplit split_order(int v);

/// 300t ≤ 6u² - 33u - 464, i.e. t ≤ u²/50 - 11u/100 - 116/75.
bool triple_bound_holds(int u, std::size_t t);
/// Largest t with triple_bound_holds(u, t), or -1.
long long max_triples(int u);

/// 128|E| ≥ 64v(v-1) - (3v² - 54v - 409), i.e. |E| ≥ C(v,2) - (3v²/128 - 27v/64 - 409/128).
bool nw_edge_bound_holds(int v, std::size_t edges);

/// T = {z_1..z_{w-5}} is labelled u..u+w-6, so z_i = u+i-1.
inline Vertex z_vertex(int u, int i) { return u + i - 1; }

/// Decomposition {F, F_1..F_{w-7}} of L* with the distinguished set D.
struct HelperDecomposition {
    Graph f;
    std::vector<std::vector<Edge>> matchings;  // matchings[i-1] is F_i
    VertexSet d;                               // d_1..d_s; d_1, d_2 ∉ V(F_{w-7})
    Vertex a1 = -1;
    Vertex a2 = -1;
    bool covering = false;  // F was built to contain the high-degree set M
};

/// Problems with hd as a decomposition of L*; empty if none.
std::string helper_problem(const Graph& lstar, int u, int w, const HelperDecomposition& hd);

/// Requires u ≥ 32, w = (3u+k)/5, |E(L*)| = w(u-w+1)/2, Δ(L*) ≤ w-8 and
/// every degree ≡ u+1 (mod 2).
HelperDecomposition helper_decomposition(const Graph& lstar, int u, int w);

/// Packing of L* ∨ K_T during the extraction stage, with the data needed to
/// state its invariants.
struct StageState {
    int u = 0;
    int w = 0;
    int step = 0;
    ExtractionState ext;
    Graph f;
    VertexSet d;
    Vertex a1 = -1;
    Vertex a2 = -1;
    std::vector<int> tau;  // indexed by U
};

/// deg_F+1 on V(F), 3 on D ∖ {a1,a2}, 1 otherwise.
std::vector<int> tau_profile(int u, const Graph& f, const VertexSet& d, Vertex a1, Vertex a2);

/// Triangles (x, y, z_i) for xy ∈ F_i plus the D-cycles on z_{w-7}, z_{w-6}, z_{w-5}.
StageState build_initial_packing(const Graph& lstar, const HelperDecomposition& hd, int u, int w);

/// First failing stage invariant, or empty.
std::string stage_invariant_problem(const StageState& s);

struct ExtractionStats {
    std::size_t direct = 0;
    std::size_t via_nose = 0;
    std::size_t via_relocated_edge = 0;
};

/// Extracts C(w-5,2) triangles, one per step, at the lowest vertex whose leave
/// degree into T exceeds τ by at least 2. Invariants are checked every
/// `check_every` steps (and at the end); 0 checks only at the end.
StageState extraction_loop(StageState s, int check_every = 1, ExtractionStats* stats = nullptr);

struct BulletCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct FinishPrecondition {
    std::vector<BulletCheck> bullets;
    bool ok() const;
    std::string describe() const;
};

/// Exact check of the finishing stage's three hypotheses on s.
FinishPrecondition finish_off_precondition(const StageState& s);

/// Triangle decomposition of L* ∨ K_w (finishing vertices u+w-5..u+w-1),
/// searched from the triangles of the stage packing.
std::vector<Triple> finish_off(const StageState& s, const CompletionConfig& cfg);

struct EmbedReport {
    OrderSplit split;
    SparsifyStats sparsify;
    std::size_t lstar_edges = 0;
    int lstar_max_degree = 0;
    bool helper_covering = false;
    std::size_t d_size = 0;
    ExtractionStats extraction;
    FinishPrecondition finish;
};

/// 4|E(L)| ≥ 4·C(u,2) - (w(u-w+1) - u - 2).
bool embed_edge_bound_holds(const Graph& l, int w);

/// Triangle decomposition of L ∨ K_w (new vertices u..u+w-1). Requires
/// u ≥ 62, w = (3u+k)/5, (L,w) admissible and the edge bound.
std::vector<Triple> embed_graph(const Graph& l, int u, int w, const CompletionConfig& cfg = {},
                                EmbedReport* report = nullptr);

/// STS(v) containing p. Requires u ≥ 62, the triple bound, v ≡ 1,3 (mod 6)
/// and 5v ≥ 8u+17.
Psts embed_psts(const Psts& p, int v, const CompletionConfig& cfg = {}, EmbedReport* report = nullptr);

/// Triangle decomposition of an even graph G of order v ≥ 103 with |E| ≡ 0
/// (mod 3), the edge bound, and at least (3v+17)/8 vertices of degree v-1.
std::vector<Triple> decompose_nw(const Graph& g, const CompletionConfig& cfg = {}, EmbedReport* report = nullptr);

}  // namespace stse
