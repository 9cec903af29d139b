#include <algorithm>

#include "stse/errors.hpp"
#include "stse/graph_tools.hpp"

namespace stse {

namespace {

class EdgeColouring {
public:
    EdgeColouring(int n, int colours)
        : n_(n), k_(colours), at_(static_cast<std::size_t>(n) * colours, -1), colour_(static_cast<std::size_t>(n) * n, -1) {}

    int colour(Vertex x, Vertex y) const { return colour_[static_cast<std::size_t>(x) * n_ + y]; }
    bool is_free(Vertex x, int c) const { return at(x, c) < 0; }
    Vertex at(Vertex x, int c) const { return at_[static_cast<std::size_t>(x) * k_ + c]; }

    int first_free(Vertex x) const {
        for (int c = 0; c < k_; ++c)
            if (is_free(x, c)) return c;
        return -1;
    }

    void set(Vertex x, Vertex y, int c) {
        uncolour(x, y);
        colour_[static_cast<std::size_t>(x) * n_ + y] = c;
        colour_[static_cast<std::size_t>(y) * n_ + x] = c;
        at_[static_cast<std::size_t>(x) * k_ + c] = y;
        at_[static_cast<std::size_t>(y) * k_ + c] = x;
    }

    void uncolour(Vertex x, Vertex y) {
        const int old = colour(x, y);
        if (old < 0) return;
        at_[static_cast<std::size_t>(x) * k_ + old] = -1;
        at_[static_cast<std::size_t>(y) * k_ + old] = -1;
        colour_[static_cast<std::size_t>(x) * n_ + y] = -1;
        colour_[static_cast<std::size_t>(y) * n_ + x] = -1;
    }

    // Swaps colours c and d along the maximal c/d path starting at x with a
    // c-edge.
    void invert_path(Vertex x, int c, int d) {
        std::vector<Vertex> path{x};
        int want = c;
        Vertex cur = x;
        while (true) {
            const Vertex next = at(cur, want);
            if (next < 0) break;
            path.push_back(next);
            cur = next;
            want = want == c ? d : c;
        }
        std::vector<int> old;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) old.push_back(colour(path[i], path[i + 1]));
        for (std::size_t i = 0; i + 1 < path.size(); ++i) uncolour(path[i], path[i + 1]);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) set(path[i], path[i + 1], old[i] == c ? d : c);
    }

private:
    int n_;
    int k_;
    std::vector<Vertex> at_;
    std::vector<int> colour_;
};

}  // namespace

MatchingDecomposition vizing_color(const Graph& g) {
    const int n = g.order();
    const int k = g.max_degree() + 1;
    MatchingDecomposition md;
    if (g.edge_count() == 0) return md;
    EdgeColouring col(n, k);
    for (const Edge& e : g.edges()) {
        const Vertex u = e.x;
        // Maximal fan at u starting with the uncoloured edge uv.
        std::vector<Vertex> fan{e.y};
        std::vector<char> in_fan(n, 0);
        in_fan[e.y] = 1;
        for (bool extended = true; extended;) {
            extended = false;
            for (Vertex y : g.neighbors(u)) {
                if (in_fan[y]) continue;
                const int cy = col.colour(u, y);
                if (cy >= 0 && col.is_free(fan.back(), cy)) {
                    fan.push_back(y);
                    in_fan[y] = 1;
                    extended = true;
                    break;
                }
            }
        }
        const int c = col.first_free(u);
        const int d = col.first_free(fan.back());
        col.invert_path(u, d, c);
        // Shortest prefix of the fan ending at a vertex where d is free.
        std::size_t end = 0;
        for (; end < fan.size(); ++end) {
            if (col.is_free(fan[end], d)) break;
            if (end + 1 < fan.size() && !col.is_free(fan[end], col.colour(u, fan[end + 1]))) {
                end = fan.size();
                break;
            }
        }
        if (end == fan.size()) throw DefectError("Vizing fan rotation found no free vertex");
        for (std::size_t i = 0; i < end; ++i) {
            const int next = col.colour(u, fan[i + 1]);
            col.uncolour(u, fan[i + 1]);
            col.set(u, fan[i], next);
        }
        col.set(u, fan[end], d);
    }
    md.classes.assign(k, {});
    for (const Edge& e : g.edges()) md.classes[col.colour(e.x, e.y)].push_back(e);
    md.classes.erase(std::remove_if(md.classes.begin(), md.classes.end(), [](const auto& m) { return m.empty(); }),
                     md.classes.end());
    return md;
}

bool is_proper_decomposition(const Graph& g, const MatchingDecomposition& md, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    Graph covered(g.order());
    for (std::size_t i = 0; i < md.classes.size(); ++i) {
        std::vector<char> touched(g.order(), 0);
        for (const Edge& e : md.classes[i]) {
            if (e.x < 0 || e.y >= g.order() || !g.has_edge(e.x, e.y))
                return fail("class " + std::to_string(i) + " has non-edge " + to_string(e));
            if (touched[e.x] || touched[e.y])
                return fail("class " + std::to_string(i) + " is not a matching at " + to_string(e));
            touched[e.x] = touched[e.y] = 1;
            if (!covered.add_edge(e.x, e.y)) return fail("edge " + to_string(e) + " in two classes");
        }
    }
    if (covered.edge_count() != g.edge_count()) return fail("classes do not cover every edge");
    return true;
}

}  // namespace stse
