#include <gtest/gtest.h>

#include <cmath>
#include <tuple>

#include "oracles.hpp"
#include "stse/embedder.hpp"
#include "stse/errors.hpp"
#include "stse/graph_tools.hpp"

using namespace stse;

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

// L* from a random system with the largest allowed number of triples.
Graph sparse_leave(int u, int w, std::uint64_t seed) {
    const std::size_t t = static_cast<std::size_t>(max_triples(u));
    const Psts p = oracle::random_psts(u, t, seed);
    CompletionConfig cfg;
    cfg.seed = seed;
    return sparsify_leave(leave_of(p), u, w, cfg).leave;
}

}  // namespace

TEST(SplitOrder, Examples) {
    const auto a = split_order(103);
    EXPECT_EQ(a.k, 19);
    EXPECT_EQ(a.u, 62);
    EXPECT_EQ(a.w, 41);
    const auto b = split_order(105);
    EXPECT_EQ(b.k, 21);
    EXPECT_EQ(b.u, 63);
    EXPECT_EQ(b.w, 42);
    const auto c = split_order(109);
    EXPECT_EQ(c.k, 17);
    EXPECT_EQ(c.u, 66);
    EXPECT_EQ(c.w, 43);
    EXPECT_THROW(split_order(104), PreconditionError);
    EXPECT_THROW(split_order(101), PreconditionError);
}

// The k chosen from v mod 8 must agree with the k that w = (3u+k)/5 forces
// from u mod 5.
TEST(SplitOrder, ResidueTablesAgree) {
    const int by_v[8] = {0, 21, 0, 23, 0, 17, 0, 19};
    const int by_u[5] = {0, 17, 19, 21, 23};
    for (int v = 103; v <= 1003; v += 2) {
        if (v % 6 != 1 && v % 6 != 3) continue;
        const auto s = split_order(v);
        EXPECT_EQ(s.u + s.w, v);
        EXPECT_GE(s.u, 62);
        EXPECT_EQ(5 * s.w - 3 * s.u, s.k);
        EXPECT_EQ(s.k, by_v[v % 8]) << v;
        ASSERT_NE(s.u % 5, 0) << v;
        EXPECT_EQ(s.k, by_u[s.u % 5]) << v;
        EXPECT_EQ(join_parameter(s.u, s.w), s.k);
    }
}

TEST(Bounds, TripleBound) {
    EXPECT_EQ(max_triples(62), 68);
    EXPECT_TRUE(triple_bound_holds(62, 68));
    EXPECT_FALSE(triple_bound_holds(62, 69));
    // 62²/50 - 11·62/100 - 116/75 = 68.51...
    const double exact = 62.0 * 62 / 50 - 11.0 * 62 / 100 - 116.0 / 75;
    EXPECT_NEAR(exact, 68.513, 1e-3);
    for (int u = 62; u <= 400; ++u) {
        const double bound = double(u) * u / 50 - 11.0 * u / 100 - 116.0 / 75;
        const double frac = bound - std::floor(bound);
        if (frac < 1e-9 || frac > 1 - 1e-9) continue;
        EXPECT_EQ(max_triples(u), static_cast<long long>(std::floor(bound))) << u;
    }
}

TEST(Bounds, NashWilliamsEdgeBound) {
    // Penalty 3v²/128 - 27v/64 - 409/128 is exactly 25856/128 = 202 at v = 103.
    const long long v = 103;
    EXPECT_EQ(3 * v * v - 54 * v - 409, 25856);
    EXPECT_EQ(25856 % 128, 0);
    EXPECT_EQ(choose2(103) - 202, 5051);
    EXPECT_TRUE(nw_edge_bound_holds(103, 5051));
    EXPECT_FALSE(nw_edge_bound_holds(103, 5050));
}

TEST(Bounds, EmbedEdgeBound) {
    const Graph l = leave_of(oracle::random_psts(62, 68, 1));
    EXPECT_TRUE(embed_edge_bound_holds(l, 41));
    EXPECT_FALSE(embed_edge_bound_holds(leave_of(oracle::random_psts(62, 70, 1)), 41));
}

TEST(Helper, DecompositionAtPipelineOrders) {
    for (auto [u, w, d] : {std::tuple{62, 41, 3}, std::tuple{63, 42, 4}, std::tuple{66, 43, 2}}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const Graph lstar = sparse_leave(u, w, seed + 10);
            const auto hd = helper_decomposition(lstar, u, w);
            EXPECT_EQ(helper_problem(lstar, u, w, hd), "");
            EXPECT_EQ(hd.d.size(), static_cast<std::size_t>(d));
            EXPECT_EQ(static_cast<int>(hd.matchings.size()), w - 7);
            std::size_t total = hd.f.edge_count();
            for (const auto& m : hd.matchings) total += m.size();
            EXPECT_EQ(total, static_cast<std::size_t>(w * (u - w + 1) / 2));
            EXPECT_EQ(hd.f.edge_count(), static_cast<std::size_t>(u - w + 1));
            EXPECT_TRUE(is_even_linear_forest(hd.f));
        }
    }
}

TEST(Helper, Preconditions) {
    EXPECT_THROW(helper_decomposition(Graph::complete(62), 62, 41), PreconditionError);
    EXPECT_THROW(helper_decomposition(Graph(62), 62, 41), PreconditionError);
}

TEST(Stage, InitialPackingAndExtraction) {
    const int u = 62;
    const int w = 41;
    const Graph lstar = sparse_leave(u, w, 3);
    const auto hd = helper_decomposition(lstar, u, w);
    StageState s = build_initial_packing(lstar, hd, u, w);
    EXPECT_EQ(stage_invariant_problem(s), "");
    long long surplus = 0;
    for (Vertex x = 0; x < u; ++x) surplus += s.ext.t_degree(x) - s.tau[x];
    EXPECT_EQ(surplus, 2 * choose2(w - 5));
    EXPECT_EQ(surplus, 1260);

    ExtractionStats stats;
    const StageState done = extraction_loop(s, 1, &stats);
    EXPECT_EQ(done.step, 630);
    EXPECT_EQ(stats.direct + stats.via_nose + stats.via_relocated_edge, 630u);
    for (Vertex x = u; x < done.ext.order(); ++x)
        for (Vertex z = x + 1; z < done.ext.order(); ++z) EXPECT_FALSE(done.ext.packing.in_leave(x, z));
    for (Vertex x = 0; x < u; ++x) EXPECT_EQ(done.ext.t_degree(x), done.tau[x]) << x;

    const auto pre = finish_off_precondition(done);
    EXPECT_TRUE(pre.ok()) << pre.describe();
    EXPECT_EQ(pre.bullets.size(), 4u);
    // The degree profile must account for every leave edge of K_{U,T}.
    long long deg_sum = 0;
    for (Vertex x = 0; x < u; ++x) deg_sum += done.ext.t_degree(x);
    long long g_edges = 0;
    for (const Edge& e : done.ext.packing.leave().edges())
        if ((e.x < u) != (e.y < u)) ++g_edges;
    EXPECT_EQ(deg_sum, g_edges);

    CompletionConfig cfg;
    cfg.seed = 3;
    const auto tris = finish_off(done, cfg);
    EXPECT_EQ(tris.size(), 1271u);
    EXPECT_TRUE(verify_triangle_decomposition(lstar.join(w), tris).ok);
}

TEST(Stage, PreconditionDetectsBrokenState) {
    const int u = 62;
    const int w = 41;
    const Graph lstar = sparse_leave(u, w, 4);
    const auto hd = helper_decomposition(lstar, u, w);
    StageState s = build_initial_packing(lstar, hd, u, w);
    // Before extraction K_T is still in the leave.
    EXPECT_FALSE(finish_off_precondition(s).ok());
    EXPECT_THROW(finish_off(s, {}), PreconditionError);
}

TEST(EmbedGraph, PipelineOrder) {
    const Psts p = oracle::random_psts(62, 68, 77);
    const Graph l = leave_of(p);
    EmbedReport rep;
    const auto tris = embed_graph(l, 62, 41, {}, &rep);
    EXPECT_EQ(tris.size(), (l.edge_count() + 62 * 41 + 820) / 3);
    EXPECT_TRUE(verify_triangle_decomposition(l.join(41), tris).ok);
    EXPECT_EQ(rep.lstar_edges, 451u);
    EXPECT_LE(rep.lstar_max_degree, 33);
    EXPECT_EQ(rep.d_size, 3u);
    EXPECT_TRUE(rep.finish.ok());
}

TEST(EmbedGraph, Preconditions) {
    const Graph l = leave_of(oracle::random_psts(62, 68, 1));
    EXPECT_THROW(embed_graph(l, 62, 42), PreconditionError);
    Graph odd = l;
    odd.remove_edge(odd.edges().front().x, odd.edges().front().y);
    EXPECT_THROW(embed_graph(odd, 62, 41), PreconditionError);
    try {
        embed_graph(leave_of(oracle::random_psts(62, 70, 2)), 62, 41);
        FAIL() << "edge bound not enforced";
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("C(u,2)"), std::string::npos) << e.what();
    }
}

TEST(EmbedPsts, SmallestOrder) {
    const Psts p = oracle::random_psts(62, 68, 5);
    const Psts sts = embed_psts(p, 103);
    EXPECT_EQ(sts.order(), 103);
    EXPECT_EQ(sts.size(), 1751u);
    EXPECT_TRUE(sts.is_complete());
    EXPECT_TRUE(sts.contains_all(p));
    EXPECT_TRUE(verify_triangle_decomposition(Graph::complete(103), sts.triples()).ok);
    EXPECT_EQ(embed_psts(p, 103), sts);
}

TEST(EmbedPsts, Preconditions) {
    const Psts p = oracle::random_psts(62, 68, 5);
    EXPECT_THROW(embed_psts(p, 97), PreconditionError);
    EXPECT_THROW(embed_psts(p, 107), PreconditionError);
    EXPECT_THROW(embed_psts(oracle::random_psts(62, 69, 5), 103), PreconditionError);
    EXPECT_THROW(embed_psts(oracle::random_psts(61, 10, 5), 103), PreconditionError);
}

TEST(DecomposeNw, ConstructedInstance) {
    Rng rng(103);
    VertexSet pool(62);
    for (int i = 0; i < 62; ++i) pool[i] = i;
    const Graph g = oracle::complete_minus_cycles(103, pool, 150, 202, rng);
    ASSERT_GE(g.edge_count(), 5051u);
    ASSERT_EQ(g.edge_count() % 3, 0u);
    const auto tris = decompose_nw(g);
    EXPECT_TRUE(verify_triangle_decomposition(g, tris).ok);
}

TEST(DecomposeNw, Preconditions) {
    EXPECT_THROW(decompose_nw(Graph::complete(104)), PreconditionError);
    Graph g = Graph::complete(103);
    // A 4-cycle keeps degrees even but breaks |E| ≡ 0 (mod 3).
    g.remove_edge(0, 1);
    g.remove_edge(1, 2);
    g.remove_edge(2, 3);
    g.remove_edge(3, 0);
    EXPECT_THROW(decompose_nw(g), PreconditionError);
    // A 60-cycle plus a disjoint triangle keeps parity and divisibility but
    // leaves only 40 full-degree vertices.
    Graph h = Graph::complete(103);
    for (int i = 0; i < 60; ++i) h.remove_edge(i, (i + 1) % 60);
    h.remove_edge(60, 61);
    h.remove_edge(61, 62);
    h.remove_edge(60, 62);
    ASSERT_EQ(h.edge_count() % 3, 0u);
    EXPECT_THROW(decompose_nw(h), PreconditionError);
}
