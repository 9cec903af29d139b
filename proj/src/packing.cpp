#include "stse/packing.hpp"

#include <algorithm>
#include <utility>

#include "stse/design.hpp"
#include "stse/errors.hpp"
#include "stse/graph_tools.hpp"

namespace stse {

TrianglePacking make_triangle_packing(Graph host, std::vector<Triple> triangles) {
    Graph leave = host;
    for (const Triple& t : triangles) {
        for (const Edge& e : t.edges()) {
            if (!host.has_edge(e.x, e.y)) throw PreconditionError("triangle " + to_string(t) + " not in host");
            if (!leave.remove_edge(e.x, e.y)) throw PreconditionError("edge " + to_string(e) + " packed twice");
        }
    }
    std::sort(triangles.begin(), triangles.end());
    return {std::move(host), std::move(triangles), std::move(leave)};
}

std::size_t min_leave_edges_complete(int u) {
    switch (u % 6) {
        case 1:
        case 3: return 0;
        case 5: return 4;
        case 4: return static_cast<std::size_t>(u / 2 + 1);
        default: return static_cast<std::size_t>(u / 2);
    }
}

TrianglePacking max_packing_complete(int u, const CompletionConfig& cfg) {
    if (u < 6) throw PreconditionError("max_packing_complete requires u >= 6");
    Graph k = Graph::complete(u);
    CompletionConfig c = cfg;
    if (u % 6 == 0 || u % 6 == 2) {
        // Deleting a point from an STS(u+1) leaves a perfect matching.
        c.target_uncovered = 0;
        auto r = complete_with_restarts(Graph::complete(u + 1), {}, c);
        std::erase_if(r.triangles, [&](const Triple& t) { return t.contains(u); });
        return make_triangle_packing(std::move(k), std::move(r.triangles));
    }
    c.target_uncovered = min_leave_edges_complete(u);
    auto r = complete_with_restarts(k, {}, c);
    return make_triangle_packing(std::move(k), std::move(r.triangles));
}

bool sparsify_edge_bound_holds(const Graph& l, int w) {
    const long long u = l.order();
    const long long lhs = 4 * static_cast<long long>(l.edge_count());
    const long long rhs = 2 * u * (u - 1) - (static_cast<long long>(w) * (u - w + 1) - u - 2);
    return lhs >= rhs;
}

namespace {

// Packing of L under repair; triangles are kept sorted so "lowest" is the
// lexicographically smallest triple.
class RepairState {
public:
    RepairState(const Graph& l, std::vector<Triple> tris) : leave_(l), tris_(std::move(tris)) {
        std::sort(tris_.begin(), tris_.end());
        for (const Triple& t : tris_)
            for (const Edge& e : t.edges()) leave_.remove_edge(e.x, e.y);
    }

    const Graph& leave() const { return leave_; }
    const std::vector<Triple>& triangles() const { return tris_; }

    void remove(const Triple& t) {
        auto it = std::lower_bound(tris_.begin(), tris_.end(), t);
        if (it == tris_.end() || *it != t) throw DefectError("removing a triangle not in the packing");
        tris_.erase(it);
        for (const Edge& e : t.edges()) leave_.add_edge(e.x, e.y);
    }

    void insert(const Triple& t) {
        for (const Edge& e : t.edges())
            if (!leave_.remove_edge(e.x, e.y)) throw DefectError("inserted triangle uses a packed edge");
        tris_.insert(std::lower_bound(tris_.begin(), tris_.end(), t), t);
    }

    // Triangle of the packing containing edge xy, if any.
    const Triple* owner(Vertex x, Vertex y) const {
        for (const Triple& t : tris_)
            if (t.contains(x) && t.contains(y)) return &t;
        return nullptr;
    }

private:
    Graph leave_;
    std::vector<Triple> tris_;
};

std::pair<int, int> degree_profile(const Graph& h) {
    const int d = h.max_degree();
    int count = 0;
    for (Vertex x = 0; x < h.order(); ++x)
        if (h.degree(x) == d) ++count;
    return {d, count};
}

}  // namespace

TrianglePacking sparsify_leave(const Graph& l, int u, int w, const CompletionConfig& cfg, SparsifyStats* stats) {
    if (l.order() != u) throw PreconditionError("L must have order u");
    if (u < 62) throw PreconditionError("sparsify_leave requires u >= 62");
    if (join_parameter(u, w) == 0) throw PreconditionError("w must equal (3u+k)/5 with k in {17,19,21,23}");
    if (const auto adm = is_admissible(l, w); !adm.admissible) throw PreconditionError("(L,w) " + adm.describe());
    if (!sparsify_edge_bound_holds(l, w))
        throw PreconditionError("|E(L)| below C(u,2) - (w(u-w+1)-u-2)/4");
    SparsifyStats local;
    SparsifyStats& st = stats ? *stats : local;
    st = {};

    const auto target = static_cast<std::size_t>(w) * (u - w + 1) / 2;
    const TrianglePacking m = max_packing_complete(u, cfg);
    std::vector<Triple> inside;
    for (const Triple& t : m.triangles) {
        const auto e = t.edges();
        if (std::all_of(e.begin(), e.end(), [&](const Edge& f) { return l.has_edge(f.x, f.y); }))
            inside.push_back(t);
        else
            ++st.dropped;
    }
    RepairState p(l, std::move(inside));
    if (p.leave().edge_count() > target || (target - p.leave().edge_count()) % 3 != 0)
        throw DefectError("restricted packing leave has " + std::to_string(p.leave().edge_count()) +
                          " edges, cannot reach " + std::to_string(target));

    // Grow the leave to the exact size, each time deleting the triangle whose
    // vertices currently have the smallest largest leave degree.
    while (p.leave().edge_count() < target) {
        const Triple* best = nullptr;
        int best_key = 0;
        for (const Triple& t : p.triangles()) {
            int key = 0;
            for (Vertex x : t.v) key = std::max(key, p.leave().degree(x));
            if (!best || key < best_key) {
                best = &t;
                best_key = key;
            }
        }
        if (!best) throw DefectError("ran out of triangles before reaching the leave size");
        p.remove(Triple(*best));
        ++st.deleted;
    }

    const long long s_cap = static_cast<long long>(w) * (u - w + 1);
    while (p.leave().max_degree() > w - 8) {
        const Graph& h = p.leave();
        const auto before = degree_profile(h);
        Vertex a = 0;
        while (h.degree(a) != before.first) ++a;
        const auto nbrs = h.neighbors(a);
        std::vector<char> in_a(u, 0), in_s(u, 0);
        for (Vertex x : nbrs) in_a[x] = 1;
        long long s_size = 0;
        for (Vertex x = 0; x < u; ++x) {
            if (h.degree(x) >= w - 8) {
                in_s[x] = 1;
                ++s_size;
            }
        }
        if (s_size * (w - 8) > s_cap) throw DefectError("high-degree set exceeds the counting bound");
        auto avoids_s = [&](const Triple& t) { return !in_s[t.v[0]] && !in_s[t.v[1]] && !in_s[t.v[2]]; };

        Edge inner{-1, -1};
        for (std::size_t i = 0; i < nbrs.size() && inner.x < 0; ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (h.has_edge(nbrs[i], nbrs[j])) {
                    inner = Edge(nbrs[i], nbrs[j]);
                    break;
                }

        if (inner.x >= 0) {
            const Triple* c = nullptr;
            for (const Triple& t : p.triangles())
                if (avoids_s(t)) {
                    c = &t;
                    break;
                }
            if (!c) throw DefectError("no triangle avoids the high-degree set");
            p.remove(Triple(*c));
            p.insert(Triple(inner.x, inner.y, a));
            ++st.case1;
        } else {
            Triple found;
            bool ok = false;
            for (std::size_t i = 0; i < nbrs.size() && !ok; ++i)
                for (std::size_t j = i + 1; j < nbrs.size() && !ok; ++j) {
                    const Triple* t = p.owner(nbrs[i], nbrs[j]);
                    if (t && avoids_s(*t)) {
                        found = *t;
                        ok = true;
                    }
                }
            if (!ok) throw DefectError("no edge of K_A lies in a triangle avoiding the high-degree set");
            Vertex x = -1, y = -1;
            for (Vertex v : found.v)
                if (in_a[v]) (x < 0 ? x : y) = v;
            p.remove(found);
            p.insert(Triple(x, y, a));
            ++st.case2;
        }
        const auto after = degree_profile(p.leave());
        if (!(after < before)) throw DefectError("repair step did not reduce the degree profile");
    }
    return make_triangle_packing(l, p.triangles());
}

}  // namespace stse
