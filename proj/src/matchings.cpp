#include <algorithm>
#include <queue>

#include "stse/errors.hpp"
#include "stse/graph_tools.hpp"

namespace stse {

namespace {

// Edmonds–Karp on a small residual network. Node count is |V(H)|+2.
class FlowNetwork {
public:
    explicit FlowNetwork(int nodes) : adj_(nodes) {}

    int add_arc(int from, int to, int cap) {
        adj_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap});
        adj_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0});
        return static_cast<int>(arcs_.size()) - 2;
    }

    int max_flow(int s, int t) {
        int total = 0;
        while (true) {
            std::vector<int> via(adj_.size(), -1);
            std::vector<char> seen(adj_.size(), 0);
            std::queue<int> q;
            q.push(s);
            seen[s] = 1;
            while (!q.empty() && !seen[t]) {
                const int x = q.front();
                q.pop();
                for (int id : adj_[x]) {
                    const Arc& a = arcs_[id];
                    if (a.cap > 0 && !seen[a.to]) {
                        seen[a.to] = 1;
                        via[a.to] = id;
                        q.push(a.to);
                    }
                }
            }
            if (!seen[t]) return total;
            int push = INT32_MAX;
            for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) push = std::min(push, arcs_[via[x]].cap);
            for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) {
                arcs_[via[x]].cap -= push;
                arcs_[via[x] ^ 1].cap += push;
            }
            total += push;
        }
    }

    std::vector<char> reachable_from(int s) const {
        std::vector<char> seen(adj_.size(), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int id : adj_[x]) {
                if (arcs_[id].cap > 0 && !seen[arcs_[id].to]) {
                    seen[arcs_[id].to] = 1;
                    stack.push_back(arcs_[id].to);
                }
            }
        }
        return seen;
    }

    // Saturated forward arc (residual capacity 0 on a unit arc).
    bool used(int arc_id) const { return arcs_[arc_id].cap == 0; }

private:
    struct Arc {
        int to;
        int cap;
    };
    std::vector<std::vector<int>> adj_;
    std::vector<Arc> arcs_;
};

// Splits a graph of maximum degree 2 with no odd cycle into two matchings by
// alternating colours along each path or cycle.
TwoMatchings split_two_matchings(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> at(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        at[edges[i].x].push_back(static_cast<int>(i));
        at[edges[i].y].push_back(static_cast<int>(i));
    }
    std::vector<int> colour(edges.size(), -1);
    auto walk = [&](Vertex start, int first_edge) {
        Vertex x = start;
        int e = first_edge;
        int c = 0;
        while (e >= 0 && colour[e] < 0) {
            colour[e] = c;
            c ^= 1;
            const Vertex next = edges[e].x == x ? edges[e].y : edges[e].x;
            int following = -1;
            for (int f : at[next])
                if (f != e && colour[f] < 0) following = f;
            x = next;
            e = following;
        }
    };
    // Paths from their endpoints first, then the remaining (even) cycles.
    for (Vertex x = 0; x < n; ++x)
        if (at[x].size() == 1 && colour[at[x][0]] < 0) walk(x, at[x][0]);
    for (Vertex x = 0; x < n; ++x)
        for (int e : at[x])
            if (colour[e] < 0) walk(x, e);
    TwoMatchings out;
    for (std::size_t i = 0; i < edges.size(); ++i) (colour[i] == 0 ? out.m1 : out.m2).push_back(edges[i]);
    return out;
}

}  // namespace

void BipartiteInstance::validate() const {
    std::vector<int> side(h.order(), -1);
    for (Vertex x : a) {
        if (x < 0 || x >= h.order() || side[x] != -1) throw PreconditionError("A is not a set of vertices of H");
        side[x] = 0;
    }
    for (Vertex x : b) {
        if (x < 0 || x >= h.order() || side[x] != -1) throw PreconditionError("A and B overlap or B is invalid");
        side[x] = 1;
    }
    for (Vertex x = 0; x < h.order(); ++x)
        if (side[x] == -1) throw PreconditionError("A and B do not cover V(H)");
    for (const Edge& e : h.edges())
        if (side[e.x] == side[e.y]) throw PreconditionError("edge inside a part: " + to_string(e));
}

int cut_excess(const BipartiteInstance& inst, const VertexSet& s) {
    int sum = 0;
    for (Vertex x : inst.b) {
        int hits = 0;
        for (Vertex y : s)
            if (inst.h.has_edge(x, y)) ++hits;
        sum += std::min(2, hits);
    }
    return 2 * static_cast<int>(s.size()) - sum;
}

MatchingsOrCertificate two_disjoint_matchings(const BipartiteInstance& inst, int d) {
    if (d < 0) throw PreconditionError("deficiency d must be nonnegative");
    inst.validate();
    const int n = inst.h.order();
    const int source = n;
    const int sink = n + 1;
    FlowNetwork net(n + 2);
    for (Vertex x : inst.a) net.add_arc(source, x, 2);
    for (Vertex x : inst.b) net.add_arc(x, sink, 2);
    std::vector<std::pair<int, Edge>> edge_arcs;
    std::vector<char> in_a(n, 0);
    for (Vertex x : inst.a) in_a[x] = 1;
    for (const Edge& e : inst.h.edges()) {
        const Vertex from = in_a[e.x] ? e.x : e.y;
        const Vertex to = in_a[e.x] ? e.y : e.x;
        edge_arcs.emplace_back(net.add_arc(from, to, 1), e);
    }
    MatchingsOrCertificate out;
    out.max_total = net.max_flow(source, sink);
    const int need = 2 * static_cast<int>(inst.a.size()) - d;
    if (out.max_total >= need) {
        std::vector<Edge> chosen;
        for (const auto& [id, e] : edge_arcs)
            if (net.used(id)) chosen.push_back(e);
        // Any subset of a max-degree-2 bipartite graph keeps that shape.
        chosen.resize(static_cast<std::size_t>(std::max(need, 0)));
        out.matchings = split_two_matchings(n, chosen);
        out.success = true;
        return out;
    }
    const auto reach = net.reachable_from(source);
    for (Vertex x : inst.a)
        if (reach[x]) out.deficiency_set.push_back(x);
    if (cut_excess(inst, out.deficiency_set) <= d) throw DefectError("min-cut certificate does not violate the cut bound");
    return out;
}

}  // namespace stse
