#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stse/graph.hpp"

namespace stse {

/// A partial Steiner triple system: triples over {0..u-1}, each pair in at
/// most one triple. Validity is enforced at construction.
class Psts {
public:
    Psts() = default;
    /// Throws PreconditionError on out-of-range points, degenerate triples, or
    /// a pair covered twice.
    Psts(int order, std::vector<Triple> triples);

    int order() const { return order_; }
    const std::vector<Triple>& triples() const { return triples_; }
    std::size_t size() const { return triples_.size(); }

    /// True when every pair is covered (a Steiner triple system).
    bool is_complete() const;
    bool contains_all(const Psts& other) const;

    friend bool operator==(const Psts&, const Psts&) = default;

private:
    int order_ = 0;
    std::vector<Triple> triples_;  // sorted
};

/// Graph of pairs covered by no triple.
Graph leave_of(const Psts& p);

enum class AdmissibilityFailure { OrderParity, DegreeParity, EdgeCount };

struct AdmissibilityReport {
    bool admissible = false;
    std::vector<AdmissibilityFailure> failures;
    std::string describe() const;
};

/// (L, w) is admissible when u+w is odd, every degree is ≡ u+1 (mod 2), and
/// |E(L)| + uw + w(w-1)/2 ≡ 0 (mod 3).
AdmissibilityReport is_admissible(const Graph& leave, int w);

struct DecompositionReport {
    bool ok = false;
    std::size_t uncovered = 0;
    std::size_t doubly_covered = 0;
    std::string first_violation;
};

/// True iff every triple spans three host edges and every host edge lies in
/// exactly one triple.
DecompositionReport verify_triangle_decomposition(const Graph& host, std::span<const Triple> triangles);

/// Same check, with the per-triple edge accounting split across threads.
/// Result is identical to verify_triangle_decomposition.
DecompositionReport verify_triangle_decomposition_parallel(const Graph& host, std::span<const Triple> triangles);

/// Largest deg_L(a) over vertices a whose leave-neighbourhood spans no edge.
/// Any decomposition of L ∨ K_w needs w at least this value.
int lower_bound_independent_nbhd(const Graph& leave);

enum class Necessity { Fail, PassNecessary };

struct NecessaryConditionsReport {
    Necessity verdict = Necessity::Fail;
    AdmissibilityReport admissibility;
    int independent_bound = 0;
    std::string reason;
};

/// Refutable part of the standard necessary conditions for a decomposition of
/// L ∨ K_w. PassNecessary does not imply an embedding exists.
NecessaryConditionsReport necessary_conditions(const Graph& leave, int w);

}  // namespace stse
