#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stse/cycle_packing.hpp"

namespace stse {

/// One pair {x, y} of the switch partition for twins (a, b), with the cycles
/// whose a/b transposition realises it.
struct SwitchPair {
    Vertex x = -1;
    Vertex y = -1;
    std::vector<std::size_t> cycles;

    Vertex partner(Vertex v) const { return v == x ? y : x; }
};

struct SwitchPlan {
    Vertex a = -1;
    Vertex b = -1;
    std::vector<SwitchPair> pairs;

    /// Index of the pair containing v, or -1.
    int pair_of(Vertex v) const;
};

/// Host neighbourhoods of a and b agree outside {a, b}.
bool are_twins(const Graph& host, Vertex a, Vertex b);

/// Partition of (N_L(a) ∪ N_L(b)) ∖ ((N_L(a) ∩ N_L(b)) ∪ {a,b}) into pairs,
/// L the leave. Each pair is the two leave ends of a chain of cycles linked at
/// vertices x where ax and bx lie in different cycles; swapping a and b in
/// every cycle of the chain toggles ax, ay, bx, by in the leave and nothing
/// else. Vacant slots are ignored. Throws PreconditionError if a, b are not
/// twins, and if a cycle meets the chains at more than two vertices (a shape
/// the pipeline never produces).
SwitchPlan path_switch_pairs(const CyclePacking& p, Vertex a, Vertex b);

/// Applies the transform of one pair in place; slots are preserved, so the
/// identity correspondence witnesses equivalence on V ∖ {a, b}.
void apply_switch(CyclePacking& p, const SwitchPlan& plan, const SwitchPair& pair);

/// Copying form of apply_switch.
CyclePacking switched(const CyclePacking& p, const SwitchPlan& plan, std::size_t pair_index);

/// A cycle packing of L ∨ K_T with V(L) = {0..m-1} and T = {m..n-1}.
struct ExtractionState {
    int m = 0;
    CyclePacking packing;

    int order() const { return packing.order(); }
    bool in_t(Vertex x) const { return x >= m && x < order(); }
    /// |N_leave(x) ∩ T|.
    int t_degree(Vertex x) const;
    VertexSet l_vertices() const;
};

/// Host L ∨ K_T for a graph L, with T = {m..m+t-1}.
Graph join_host(const Graph& l, int t);

/// Problems with the hypotheses of triangle extraction at y; empty if none.
std::string extraction_hypotheses_problem(const ExtractionState& s, Vertex y);

enum class NoseCase { AlreadyLeave, Rotation, SwitchRotation, SwitchTriangle };

struct NoseResult {
    CyclePacking packing;
    Correspondence correspondence;
    NoseCase kind = NoseCase::AlreadyLeave;
    int chain_length = 0;  // t
};

/// Relocates leave edges so that bc and cd are in the leave, keeping the
/// packing equivalent on V(L) ∪ {b}. a, b, c ∈ T, d ∈ V(L) distinct; ab and
/// cd leave edges; every packed K_T edge at b lies in a triangle (b, y, z) with
/// y ∈ V(L), and each such y has a leave neighbour in T. Throws
/// PreconditionError if the chain of such triangles at b reaches d, which can
/// only happen when bd itself lies in one of them.
NoseResult get_nose(const ExtractionState& s, Vertex a, Vertex b, Vertex c, Vertex d);

enum class ExtractionCase { Direct, ViaNose, ViaRelocatedEdge };

struct ExtractionResult {
    CyclePacking packing;  // P', same slots as the input
    Triple triangle;       // C with V(C) ∩ V(L) = {y}
    Correspondence correspondence;
    ExtractionCase kind = ExtractionCase::Direct;
};

/// Triangle through y and two vertices of T, after re-arranging the packing
/// while keeping it equivalent on V(L). P' ∪ {C} packs the host.
ExtractionResult extract_triangle(const ExtractionState& s, Vertex y);

}  // namespace stse
