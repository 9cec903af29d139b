#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "stse/cycle_packing.hpp"
#include "stse/design.hpp"
#include "stse/graph.hpp"

namespace stse {

/// Knobs for randomized triangle packing/decomposition search.
struct CompletionConfig {
    std::uint64_t seed = 0;
    /// Proposals per restart; 0 means 200·|E(G)|.
    std::uint64_t budget = 0;
    int restarts = 32;
    /// Worker threads for restarts; 0 means STSE_THREADS or the OpenMP default.
    int threads = 0;
    /// Stop once at most this many host edges are uncovered.
    std::size_t target_uncovered = 0;
};

struct CompletionResult {
    std::vector<Triple> triangles;  // sorted
    std::size_t uncovered = 0;
    int restart = -1;
    std::uint64_t proposals = 0;
};

/// Degrees even and |E| ≡ 0 (mod 3).
bool decomposition_counts_ok(const Graph& g);

/// One hill-climbing run: sample an uncovered edge, place a triangle through
/// it, evict whatever conflicts. Starts from `warm` (edge-disjoint triangles
/// of G). Returns std::nullopt when the budget runs out.
std::optional<CompletionResult> hill_climb_run(const Graph& g, const std::vector<Triple>& warm, std::uint64_t seed,
                                               std::uint64_t budget, std::size_t target_uncovered);

/// Runs restarts with seeds derive_seed(seed, i) in waves across threads and
/// returns the successful restart of lowest index, so the result does not
/// depend on the thread count. Throws BudgetExhausted if all restarts fail.
CompletionResult complete_with_restarts(const Graph& g, const std::vector<Triple>& warm, const CompletionConfig& cfg);

/// Serial reference for complete_with_restarts; identical output.
CompletionResult complete_with_restarts_serial(const Graph& g, const std::vector<Triple>& warm,
                                               const CompletionConfig& cfg);

/// Triangle decomposition of G. Throws PreconditionError when the counting
/// conditions fail and BudgetExhausted when every restart runs out.
std::vector<Triple> hill_climb_complete(const Graph& g, const CompletionConfig& cfg = {});

/// Threads used by parallel kernels for a requested count (0 = default).
int resolve_threads(int requested);

enum class ExhaustiveStatus { Found, ProvenInfeasible };

struct ExhaustiveResult {
    ExhaustiveStatus status = ExhaustiveStatus::ProvenInfeasible;
    std::vector<Triple> triangles;
    std::uint64_t nodes = 0;
};

/// Backtracking over the triangles through the most constrained uncovered
/// edge. Sound and complete; throws PreconditionError above `edge_limit`.
ExhaustiveResult exhaustive_complete(const Graph& g, std::size_t edge_limit = 60);

enum class SpectrumMode { Exhaustive, Heuristic };

struct SpectrumResult {
    std::vector<int> orders;  // admissible v with an embedding found
    bool exact = false;       // false in heuristic mode: successes only
};

/// Admissible orders v ≤ v_max (v ≥ u) for which p embeds in an STS(v).
SpectrumResult embedding_spectrum(const Psts& p, int v_max, SpectrumMode mode, std::uint64_t seed = 0);

/// Every PSTS of order u with fewer than (u-1)/2 triples, generated with points
/// introduced in increasing order, that has no completion. Requires u ≤ 13 and
/// u ≡ 1,3 (mod 6).
std::vector<Psts> evans_check(int u, int threads = 0);

/// Serial reference for evans_check; identical output.
std::vector<Psts> evans_check_serial(int u);

/// Brute-force search for a Correspondence witnessing equivalence on S.
/// Oracle for tests; requires at most 8 cycles.
std::optional<Correspondence> find_correspondence(const CyclePacking& p, const CyclePacking& q, const VertexSet& s);

}  // namespace stse
