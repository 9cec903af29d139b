#include "stse/graph.hpp"

#include <algorithm>
#include <sstream>

#include "stse/errors.hpp"

namespace stse {

Triple::Triple(Vertex a, Vertex b, Vertex c) : v{a, b, c} {
    std::sort(v.begin(), v.end());
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {
    if (n < 0) throw PreconditionError("graph order must be nonnegative");
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) g.add_edge(x, y);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const Edge& e : edges) {
        if (!g.add_edge(e.x, e.y)) throw PreconditionError("parallel edge " + to_string(e));
    }
    return g;
}

void Graph::check_vertex(Vertex x) const {
    if (x < 0 || x >= n_) throw PreconditionError("vertex " + std::to_string(x) + " out of range");
}

bool Graph::has_edge(Vertex x, Vertex y) const {
    if (x == y) return false;
    return (row(x)[y >> 6] >> (y & 63)) & 1U;
}

bool Graph::add_edge(Vertex x, Vertex y) {
    check_vertex(x);
    check_vertex(y);
    if (x == y) throw PreconditionError("loop at vertex " + std::to_string(x));
    if (has_edge(x, y)) return false;
    bits_[static_cast<std::size_t>(x) * words_ + (y >> 6)] |= std::uint64_t{1} << (y & 63);
    bits_[static_cast<std::size_t>(y) * words_ + (x >> 6)] |= std::uint64_t{1} << (x & 63);
    ++m_;
    return true;
}

bool Graph::remove_edge(Vertex x, Vertex y) {
    check_vertex(x);
    check_vertex(y);
    if (!has_edge(x, y)) return false;
    bits_[static_cast<std::size_t>(x) * words_ + (y >> 6)] &= ~(std::uint64_t{1} << (y & 63));
    bits_[static_cast<std::size_t>(y) * words_ + (x >> 6)] &= ~(std::uint64_t{1} << (x & 63));
    --m_;
    return true;
}

int Graph::degree(Vertex x) const { return popcount_row(row(x), words_); }

int Graph::max_degree() const {
    int d = 0;
    for (Vertex x = 0; x < n_; ++x) d = std::max(d, degree(x));
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex x) const {
    std::vector<Vertex> out;
    for_each_bit(row(x), words_, [&](int y) { out.push_back(y); });
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex x = 0; x < n_; ++x) {
        for_each_bit(row(x), words_, [&](int y) {
            if (y > x) out.emplace_back(x, y);
        });
    }
    return out;
}

Graph Graph::join(int w) const {
    Graph g(n_ + w);
    for (const Edge& e : edges()) g.add_edge(e.x, e.y);
    for (Vertex z = n_; z < n_ + w; ++z)
        for (Vertex x = 0; x < z; ++x) g.add_edge(x, z);
    return g;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (Vertex x = 0; x < n_; ++x)
        for (Vertex y = x + 1; y < n_; ++y)
            if (!has_edge(x, y)) g.add_edge(x, y);
    return g;
}

Graph Graph::minus(const Graph& other) const {
    if (other.order() != n_) throw PreconditionError("graph difference needs equal orders");
    Graph g = *this;
    for (const Edge& e : other.edges()) g.remove_edge(e.x, e.y);
    return g;
}

Graph Graph::induced(const VertexSet& keep) const {
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (has_edge(keep[i], keep[j])) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return g;
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw PreconditionError("relabeling has wrong size");
    Graph g(n_);
    for (const Edge& e : edges()) g.add_edge(perm[e.x], perm[e.y]);
    return g;
}

bool Graph::is_even() const {
    for (Vertex x = 0; x < n_; ++x)
        if (degree(x) % 2 != 0) return false;
    return true;
}

std::string to_string(const Triple& t) {
    std::ostringstream os;
    os << '(' << t.v[0] << ',' << t.v[1] << ',' << t.v[2] << ')';
    return os.str();
}

std::string to_string(const Edge& e) {
    std::ostringstream os;
    os << e.x << '-' << e.y;
    return os.str();
}

}  // namespace stse
