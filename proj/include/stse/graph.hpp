#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace stse {

using Vertex = int;

/// An unordered pair, stored with x < y.
struct Edge {
    Vertex x = 0;
    Vertex y = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : x(a < b ? a : b), y(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// An unordered triple, stored sorted ascending.
struct Triple {
    std::array<Vertex, 3> v{};

    Triple() = default;
    Triple(Vertex a, Vertex b, Vertex c);

    bool contains(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }
    std::array<Edge, 3> edges() const { return {Edge(v[0], v[1]), Edge(v[0], v[2]), Edge(v[1], v[2])}; }

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

using VertexSet = std::vector<Vertex>;

/// Dense simple undirected graph on {0..n-1}.
///
/// Adjacency rows are stored as 64-bit word blocks so that neighbourhood
/// intersections cost O(n/64).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    std::size_t edge_count() const { return m_; }
    int words() const { return words_; }

    bool has_edge(Vertex x, Vertex y) const;
    /// Returns false if the edge was already present.
    bool add_edge(Vertex x, Vertex y);
    /// Returns false if the edge was absent.
    bool remove_edge(Vertex x, Vertex y);

    int degree(Vertex x) const;
    int max_degree() const;
    std::vector<Vertex> neighbors(Vertex x) const;
    std::vector<Edge> edges() const;

    const std::uint64_t* row(Vertex x) const { return bits_.data() + static_cast<std::size_t>(x) * words_; }

    /// G ∨ K_w: appends w vertices adjacent to everything (and each other).
    Graph join(int w) const;
    Graph complement() const;
    /// Edges of this graph not in `other` (same order required).
    Graph minus(const Graph& other) const;
    /// Subgraph induced by `keep`, relabelled 0..|keep|-1 in the given order.
    Graph induced(const VertexSet& keep) const;
    /// Relabel: vertex x becomes perm[x].
    Graph relabeled(const std::vector<Vertex>& perm) const;

    bool is_even() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

private:
    void check_vertex(Vertex x) const;

    int n_ = 0;
    int words_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Calls f(i) for every set bit i of a word block of length `words`.
template <class F>
void for_each_bit(const std::uint64_t* row, int words, F&& f) {
    for (int k = 0; k < words; ++k) {
        std::uint64_t w = row[k];
        while (w != 0) {
            f(k * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
}

inline int popcount_row(const std::uint64_t* row, int words) {
    int c = 0;
    for (int k = 0; k < words; ++k) c += std::popcount(row[k]);
    return c;
}

std::string to_string(const Triple& t);
std::string to_string(const Edge& e);

}  // namespace stse
