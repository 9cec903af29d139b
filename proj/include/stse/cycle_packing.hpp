#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stse/graph.hpp"

namespace stse {

/// Cyclic vertex sequence (x1,...,xp) with edges x1x2,...,xpx1.
using Cycle = std::vector<Vertex>;

/// A set of edge-disjoint cycles in a host graph, addressed by slot index.
///
/// The leave (host edges in no cycle) is maintained incrementally. Slots may
/// be vacated and refilled so that transforms can keep cycle indices stable;
/// packings handed between operations have no vacant slots.
class CyclePacking {
public:
    static constexpr int kLeave = -1;

    CyclePacking() = default;
    explicit CyclePacking(Graph host);

    const Graph& host() const { return host_; }
    const Graph& leave() const { return leave_; }
    int order() const { return host_.order(); }

    std::size_t size() const { return cycles_.size(); }
    std::size_t live_count() const { return cycles_.size() - vacancies_; }
    bool has_vacancies() const { return vacancies_ != 0; }
    bool vacant(std::size_t i) const { return cycles_[i].empty(); }
    const Cycle& cycle(std::size_t i) const { return cycles_[i]; }
    const std::vector<Cycle>& cycles() const { return cycles_; }

    /// Slot of the cycle using host edge xy, or kLeave.
    int owner(Vertex x, Vertex y) const { return owner_[static_cast<std::size_t>(x) * host_.order() + y]; }
    bool in_leave(Vertex x, Vertex y) const { return leave_.has_edge(x, y); }

    /// Appends a cycle; throws PreconditionError if it is not a cycle of the
    /// host or reuses a packed edge.
    std::size_t add(Cycle c);
    void erase(std::size_t slot);
    void place(std::size_t slot, Cycle c);

    /// Problem with `c` as a new cycle, or empty if it could be added.
    std::string why_not_addable(const Cycle& c) const;

private:
    void set_owner(Vertex x, Vertex y, int slot);

    Graph host_;
    Graph leave_;
    std::vector<Cycle> cycles_;
    std::vector<std::int32_t> owner_;
    std::size_t vacancies_ = 0;
};

std::vector<Edge> cycle_edges(const Cycle& c);

/// Bijection between cycle slots of two packings: pairing[i] is the slot in
/// the second packing matched with slot i of the first.
struct Correspondence {
    std::vector<std::size_t> pairing;

    static Correspondence identity(std::size_t n);
};

struct EquivalenceReport {
    bool ok = false;
    std::string reason;
    std::size_t cycle = static_cast<std::size_t>(-1);
};

/// Checks that `c` witnesses P and Q being equivalent on S: paired cycles
/// have equal length, contain the same vertices of S, and the same edges with
/// both ends in S.
EquivalenceReport equivalent_on(const CyclePacking& p, const CyclePacking& q, const VertexSet& s,
                                const Correspondence& c);

/// Same length, same vertices of S, same edges inside S.
bool cycles_agree_on(const Cycle& a, const Cycle& b, const VertexSet& s);

/// deg_leave(x) ≡ deg_host(x) (mod 2) for every x.
bool leave_parity_holds(const CyclePacking& p);

}  // namespace stse
