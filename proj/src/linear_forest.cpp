#include <algorithm>
#include <numeric>

#include "stse/errors.hpp"
#include "stse/graph_tools.hpp"

namespace stse {

namespace {

void check_join_preconditions(const Graph& lstar, int u, int w, int min_u) {
    if (lstar.order() != u) throw PreconditionError("L* must have order u");
    if (u < min_u) throw PreconditionError("u must be at least " + std::to_string(min_u));
    if (join_parameter(u, w) == 0) throw PreconditionError("w must equal (3u+k)/5 with k in {17,19,21,23}");
    if (2 * lstar.edge_count() < static_cast<std::size_t>(w) * (u - w + 1))
        throw PreconditionError("|E(L*)| < w(u-w+1)/2");
    if (lstar.max_degree() > w - 8) throw PreconditionError("max degree of L* exceeds w-8");
}

// A-B edges of L* as a bipartite instance on all of V(L*).
BipartiteInstance cross_instance(const Graph& lstar, const std::vector<char>& in_a) {
    BipartiteInstance inst{Graph(lstar.order()), {}, {}};
    for (Vertex x = 0; x < lstar.order(); ++x) (in_a[x] ? inst.a : inst.b).push_back(x);
    for (const Edge& e : lstar.edges())
        if (in_a[e.x] != in_a[e.y]) inst.h.add_edge(e.x, e.y);
    return inst;
}

// Partition with |A| = size locally minimising the number of L*-edges inside B.
std::vector<char> sparse_partition(const Graph& lstar, int size) {
    const int n = lstar.order();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex x, Vertex y) { return lstar.degree(x) > lstar.degree(y); });
    std::vector<char> in_a(n, 0);
    for (int i = 0; i < size; ++i) in_a[order[i]] = 1;

    std::vector<int> deg_b(n, 0);
    auto recount = [&] {
        for (Vertex x = 0; x < n; ++x) {
            deg_b[x] = 0;
            for (Vertex y : lstar.neighbors(x))
                if (!in_a[y]) ++deg_b[x];
        }
    };
    recount();
    // Each swap lowers e(B) by at least one, so |E| rounds suffice.
    for (std::size_t round = 0; round <= lstar.edge_count(); ++round) {
        Vertex best_y = -1;
        Vertex best_z = -1;
        int best = 0;
        for (Vertex y = 0; y < n; ++y) {
            if (!in_a[y]) continue;
            for (Vertex z = 0; z < n; ++z) {
                if (in_a[z]) continue;
                const int delta = deg_b[y] - (lstar.has_edge(y, z) ? 1 : 0) - deg_b[z];
                if (delta < best) {
                    best = delta;
                    best_y = y;
                    best_z = z;
                }
            }
        }
        if (best_y < 0) return in_a;
        in_a[best_y] = 0;
        in_a[best_z] = 1;
        recount();
    }
    throw DefectError("partition local search did not settle");
}

}  // namespace

bool is_even_linear_forest(const Graph& f, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    const int n = f.order();
    for (Vertex x = 0; x < n; ++x)
        if (f.degree(x) > 2) return fail("vertex " + std::to_string(x) + " has degree " + std::to_string(f.degree(x)));
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s] || f.degree(s) == 0) continue;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        int degree_sum = 0;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            degree_sum += f.degree(x);
            for (Vertex y : f.neighbors(x)) {
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        const int edges = degree_sum / 2;
        if (edges % 2 != 0)
            return fail("component at vertex " + std::to_string(s) + " has odd size " + std::to_string(edges));
    }
    return true;
}

int join_parameter(int u, int w) {
    const int k = 5 * w - 3 * u;
    return (k == 17 || k == 19 || k == 21 || k == 23) ? k : 0;
}

Graph find_even_linear_forest(const Graph& lstar, int u, int w) {
    check_join_preconditions(lstar, u, w, 22);
    const int target = u - w + 1;
    const auto in_a = sparse_partition(lstar, target / 2);
    const auto inst = cross_instance(lstar, in_a);

    // Max flow: every A-vertex carrying two units forms R, and the flow edges
    // at R are the union of two R-saturating matchings.
    const auto probe = two_disjoint_matchings(inst, 0);
    const auto flow =
        probe.success ? probe : two_disjoint_matchings(inst, 2 * static_cast<int>(inst.a.size()) - probe.max_total);
    Graph used(u);
    for (const Edge& e : flow.matchings.m1) used.add_edge(e.x, e.y);
    for (const Edge& e : flow.matchings.m2) used.add_edge(e.x, e.y);
    Graph f(u);
    for (Vertex x : inst.a) {
        if (used.degree(x) != 2) continue;
        for (Vertex y : used.neighbors(x)) f.add_edge(x, y);
    }

    // Grow by a two-edge path z2-z1-z3 at an F-isolated vertex z1 whose
    // partners are F-isolated or path ends; parity of every component stays even.
    while (static_cast<int>(f.edge_count()) < target) {
        bool grown = false;
        for (Vertex z1 = 0; z1 < u && !grown; ++z1) {
            if (f.degree(z1) != 0) continue;
            Vertex z2 = -1;
            for (Vertex y : lstar.neighbors(z1)) {
                if (f.degree(y) > 1) continue;
                if (z2 < 0) {
                    z2 = y;
                } else {
                    f.add_edge(z1, z2);
                    f.add_edge(z1, y);
                    grown = true;
                    break;
                }
            }
        }
        if (!grown) throw DefectError("even linear forest stuck at " + std::to_string(f.edge_count()) + " edges");
    }
    std::string why;
    if (!is_even_linear_forest(f, &why)) throw DefectError("even linear forest check failed: " + why);
    return f;
}

Graph find_even_linear_forest_covering(const Graph& lstar, int u, int w, const VertexSet& a) {
    check_join_preconditions(lstar, u, w, 16);
    const int target = u - w + 1;
    if (2 * static_cast<int>(a.size()) != target) throw PreconditionError("|A| must equal (u-w+1)/2");
    std::vector<char> in_a(u, 0);
    for (Vertex x : a) {
        if (x < 0 || x >= u || in_a[x]) throw PreconditionError("A is not a set of vertices of L*");
        if (lstar.degree(x) < u - w) throw PreconditionError("vertex of A has degree below u-w");
        in_a[x] = 1;
    }
    const auto r = two_disjoint_matchings(cross_instance(lstar, in_a), 0);
    if (!r.success) throw DefectError("covering matchings do not exist despite the degree bound");
    Graph f(u);
    for (const Edge& e : r.matchings.m1) f.add_edge(e.x, e.y);
    for (const Edge& e : r.matchings.m2) f.add_edge(e.x, e.y);
    std::string why;
    if (!is_even_linear_forest(f, &why)) throw DefectError("covering forest check failed: " + why);
    return f;
}

}  // namespace stse
