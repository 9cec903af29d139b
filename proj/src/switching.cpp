#include "stse/switching.hpp"

#include <algorithm>

#include "stse/errors.hpp"

namespace stse {

int SwitchPlan::pair_of(Vertex v) const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].x == v || pairs[i].y == v) return static_cast<int>(i);
    return -1;
}

bool are_twins(const Graph& host, Vertex a, Vertex b) {
    if (a == b) return false;
    for (Vertex x = 0; x < host.order(); ++x) {
        if (x == a || x == b) continue;
        if (host.has_edge(a, x) != host.has_edge(b, x)) return false;
    }
    return true;
}

namespace {

// Vertices x ∉ {a,b} next to a or b in cycle `slot` where ax and bx belong to
// different cycles (or one of them to the leave).
std::vector<Vertex> external_ports(const CyclePacking& p, std::size_t slot, Vertex a, Vertex b) {
    const Cycle& c = p.cycle(slot);
    std::vector<Vertex> out;
    const std::size_t len = c.size();
    for (std::size_t i = 0; i < len; ++i) {
        if (c[i] != a && c[i] != b) continue;
        for (Vertex nb : {c[(i + len - 1) % len], c[(i + 1) % len]}) {
            if (nb == a || nb == b) continue;
            if (p.owner(a, nb) == p.owner(b, nb)) continue;
            if (std::find(out.begin(), out.end(), nb) == out.end()) out.push_back(nb);
        }
    }
    return out;
}

}  // namespace

SwitchPlan path_switch_pairs(const CyclePacking& p, Vertex a, Vertex b) {
    const Graph& host = p.host();
    if (!are_twins(host, a, b)) throw PreconditionError("switch vertices are not twins in the host");
    SwitchPlan plan{a, b, {}};
    const int n = p.order();
    std::vector<char> done(n, 0);
    for (Vertex x = 0; x < n; ++x) {
        if (x == a || x == b || !host.has_edge(a, x) || done[x]) continue;
        const bool la = p.in_leave(a, x);
        const bool lb = p.in_leave(b, x);
        if (la == lb) continue;
        SwitchPair pair;
        pair.x = x;
        done[x] = 1;
        Vertex port = x;
        int cyc = la ? p.owner(b, x) : p.owner(a, x);
        while (true) {
            if (std::find(pair.cycles.begin(), pair.cycles.end(), static_cast<std::size_t>(cyc)) != pair.cycles.end())
                throw DefectError("switch chain revisits a cycle");
            pair.cycles.push_back(static_cast<std::size_t>(cyc));
            const auto ports = external_ports(p, static_cast<std::size_t>(cyc), a, b);
            if (ports.size() != 2)
                throw PreconditionError("cycle " + std::to_string(cyc) + " meets the switch at " +
                                        std::to_string(ports.size()) + " vertices; only 2 are supported");
            const Vertex next = ports[0] == port ? ports[1] : ports[0];
            const int other = p.owner(a, next) == cyc ? p.owner(b, next) : p.owner(a, next);
            if (other == CyclePacking::kLeave) {
                pair.y = next;
                done[next] = 1;
                break;
            }
            port = next;
            cyc = other;
        }
        plan.pairs.push_back(std::move(pair));
    }
    return plan;
}

void apply_switch(CyclePacking& p, const SwitchPlan& plan, const SwitchPair& pair) {
    std::vector<Cycle> swapped;
    for (std::size_t slot : pair.cycles) {
        Cycle c = p.cycle(slot);
        for (Vertex& v : c) {
            if (v == plan.a)
                v = plan.b;
            else if (v == plan.b)
                v = plan.a;
        }
        swapped.push_back(std::move(c));
    }
    for (std::size_t slot : pair.cycles) p.erase(slot);
    for (std::size_t i = 0; i < pair.cycles.size(); ++i) p.place(pair.cycles[i], std::move(swapped[i]));
}

CyclePacking switched(const CyclePacking& p, const SwitchPlan& plan, std::size_t pair_index) {
    CyclePacking q = p;
    apply_switch(q, plan, plan.pairs.at(pair_index));
    return q;
}

int ExtractionState::t_degree(Vertex x) const {
    int d = 0;
    for (Vertex z = m; z < order(); ++z)
        if (packing.in_leave(x, z)) ++d;
    return d;
}

VertexSet ExtractionState::l_vertices() const {
    VertexSet s(m);
    for (Vertex x = 0; x < m; ++x) s[x] = x;
    return s;
}

Graph join_host(const Graph& l, int t) { return l.join(t); }

}  // namespace stse
