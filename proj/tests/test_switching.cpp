#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "stse/errors.hpp"
#include "stse/switching.hpp"

using namespace stse;

namespace {

std::set<Edge> edge_set(const Graph& g) {
    const auto e = g.edges();
    return {e.begin(), e.end()};
}

std::set<Edge> sym_diff(const Graph& g, const Graph& h) {
    std::set<Edge> out;
    const auto a = edge_set(g);
    const auto b = edge_set(h);
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

std::multiset<std::size_t> lengths(const CyclePacking& p) {
    std::multiset<std::size_t> out;
    for (const Cycle& c : p.cycles()) out.insert(c.size());
    return out;
}

// Paired cycles agree on S, checked without the library's equivalence test.
bool correspondence_agrees(const CyclePacking& p, const CyclePacking& q, const VertexSet& s,
                           const Correspondence& c) {
    if (c.pairing.size() != p.size() || p.size() != q.size()) return false;
    std::vector<char> in_s(p.order(), 0);
    for (Vertex x : s) in_s[x] = 1;
    std::set<std::size_t> image(c.pairing.begin(), c.pairing.end());
    if (image.size() != p.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!oracle::agree(p.cycle(i), q.cycle(c.pairing[i]), in_s)) return false;
    return true;
}

CyclePacking random_packing(Rng& rng, int n) {
    CyclePacking p(Graph::complete(n));
    for (int k = 0; k < 3 * n; ++k) {
        VertexSet c(n);
        for (int i = 0; i < n; ++i) c[i] = i;
        rng.shuffle(c);
        c.resize(3 + rng.below(3));
        if (p.why_not_addable(c).empty()) p.add(c);
    }
    return p;
}

}  // namespace

TEST(PathSwitch, SharedLeaveNeighbourGivesNoPairs) {
    CyclePacking p(Graph::complete(5));
    p.add({0, 3, 1, 4});
    // N_L(0) = {1, 2}, N_L(1) = {0, 2}: nothing outside the intersection.
    const SwitchPlan plan = path_switch_pairs(p, 0, 1);
    EXPECT_TRUE(plan.pairs.empty());
}

TEST(PathSwitch, RejectsNonTwins) {
    Graph host = Graph::complete(5);
    host.remove_edge(0, 4);
    CyclePacking p(host);
    EXPECT_FALSE(are_twins(host, 0, 1));
    EXPECT_THROW(path_switch_pairs(p, 0, 1), PreconditionError);
}

TEST(PathSwitch, SingleTriangleToggle) {
    // a=0, b=1 with leave {01, 12, 13, 45}: the only pair is {2, 3}, realised
    // by turning (0,2,3) into (1,2,3).
    CyclePacking p(Graph::complete(6));
    p.add({0, 2, 3});
    p.add({1, 4, 2, 5});
    p.add({0, 5, 3, 4});
    const SwitchPlan plan = path_switch_pairs(p, 0, 1);
    ASSERT_EQ(plan.pairs.size(), 1u);
    EXPECT_EQ(std::set<Vertex>({plan.pairs[0].x, plan.pairs[0].y}), std::set<Vertex>({2, 3}));
    const auto leave0 = p.leave();
    for (std::size_t i = 0; i < plan.pairs.size(); ++i) {
        const SwitchPair& pr = plan.pairs[i];
        const CyclePacking q = switched(p, plan, i);
        const std::set<Edge> expected{Edge(0, pr.x), Edge(0, pr.y), Edge(1, pr.x), Edge(1, pr.y)};
        EXPECT_EQ(sym_diff(leave0, q.leave()), expected);
        EXPECT_TRUE(equivalent_on(p, q, {2, 3, 4, 5}, Correspondence::identity(p.size())).ok);
    }
}

// Random packings of K_n: every pair toggles exactly its four edges, keeps
// the packing equivalent off {a, b}, and the pairs partition the symmetric
// difference of the two leave neighbourhoods.
TEST(PathSwitch, RandomPackings) {
    Rng rng(34);
    int switched_pairs = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 6 + static_cast<int>(rng.below(6));
        const CyclePacking p = random_packing(rng, n);
        const Vertex a = static_cast<Vertex>(rng.below(n));
        Vertex b = static_cast<Vertex>(rng.below(n - 1));
        if (b >= a) ++b;
        SwitchPlan plan;
        try {
            plan = path_switch_pairs(p, a, b);
        } catch (const PreconditionError&) {
            continue;
        }
        std::set<Vertex> expected;
        for (Vertex x = 0; x < n; ++x)
            if (x != a && x != b && p.in_leave(a, x) != p.in_leave(b, x)) expected.insert(x);
        std::set<Vertex> got;
        for (const SwitchPair& pr : plan.pairs) {
            EXPECT_TRUE(got.insert(pr.x).second);
            EXPECT_TRUE(got.insert(pr.y).second);
        }
        EXPECT_EQ(got, expected);
        VertexSet rest;
        for (Vertex x = 0; x < n; ++x)
            if (x != a && x != b) rest.push_back(x);
        for (std::size_t i = 0; i < plan.pairs.size(); ++i) {
            const SwitchPair& pr = plan.pairs[i];
            const CyclePacking q = switched(p, plan, i);
            const std::set<Edge> toggled{Edge(a, pr.x), Edge(a, pr.y), Edge(b, pr.x), Edge(b, pr.y)};
            EXPECT_EQ(sym_diff(p.leave(), q.leave()), toggled);
            EXPECT_TRUE(correspondence_agrees(p, q, rest, Correspondence::identity(p.size())));
            EXPECT_EQ(lengths(p), lengths(q));
            ++switched_pairs;
        }
    }
    EXPECT_GT(switched_pairs, 200);
}

TEST(GetNose, AlreadyLeaveIsIdentity) {
    Rng rng(1);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 20; ++trial) {
        auto inst = oracle::random_extraction_state(rng, 10, 6, 60);
        if (!inst) continue;
        const ExtractionState& s = inst->state;
        const CyclePacking& p = s.packing;
        for (Vertex a = s.m; a < s.order(); ++a)
            for (Vertex b = s.m; b < s.order(); ++b)
                for (Vertex c = s.m; c < s.order(); ++c) {
                    if (a == b || b == c || a == c) continue;
                    if (!p.in_leave(a, b) || !p.in_leave(b, c)) continue;
                    for (Vertex d = 0; d < s.m; ++d) {
                        if (!p.in_leave(c, d)) continue;
                        NoseResult r;
                        try {
                            r = get_nose(s, a, b, c, d);
                        } catch (const PreconditionError&) {
                            continue;
                        }
                        EXPECT_EQ(r.kind, NoseCase::AlreadyLeave);
                        EXPECT_EQ(r.packing.cycles(), p.cycles());
                        ++checked;
                    }
                }
    }
    EXPECT_GT(checked, 0);
}

TEST(GetNose, RandomStates) {
    Rng rng(2);
    std::map<NoseCase, int> kinds;
    for (int trial = 0; trial < 400; ++trial) {
        auto inst = oracle::random_extraction_state(rng, 8 + static_cast<int>(rng.below(8)),
                                                    5 + static_cast<int>(rng.below(5)), 70 + static_cast<int>(rng.below(30)));
        if (!inst) continue;
        const ExtractionState& s = inst->state;
        const CyclePacking& p = s.packing;
        VertexSet keep = s.l_vertices();
        for (int attempt = 0; attempt < 20; ++attempt) {
            const Vertex a = s.m + static_cast<Vertex>(rng.below(s.order() - s.m));
            const Vertex b = s.m + static_cast<Vertex>(rng.below(s.order() - s.m));
            const Vertex c = s.m + static_cast<Vertex>(rng.below(s.order() - s.m));
            const Vertex d = static_cast<Vertex>(rng.below(s.m));
            if (a == b || b == c || a == c || !p.in_leave(a, b) || !p.in_leave(c, d)) continue;
            NoseResult r;
            try {
                r = get_nose(s, a, b, c, d);
            } catch (const PreconditionError&) {
                continue;
            }
            ++kinds[r.kind];
            EXPECT_TRUE(r.packing.in_leave(b, c));
            EXPECT_TRUE(r.packing.in_leave(c, d));
            VertexSet s_plus = keep;
            s_plus.push_back(b);
            EXPECT_TRUE(equivalent_on(p, r.packing, s_plus, r.correspondence).ok);
            EXPECT_TRUE(correspondence_agrees(p, r.packing, s_plus, r.correspondence));
            EXPECT_EQ(r.packing.host(), p.host());
            EXPECT_EQ(r.packing.leave().edge_count(), p.leave().edge_count());
            EXPECT_EQ(lengths(r.packing), lengths(p));
            break;
        }
    }
    EXPECT_GT(kinds[NoseCase::AlreadyLeave], 0);
    EXPECT_GT(kinds[NoseCase::Rotation] + kinds[NoseCase::SwitchRotation] + kinds[NoseCase::SwitchTriangle], 0);
    for (const auto& [k, n] : kinds) RecordProperty("nose_case_" + std::to_string(static_cast<int>(k)), n);
}

TEST(GetNose, Preconditions) {
    Rng rng(3);
    std::optional<oracle::ExtractionInstance> inst;
    while (!inst) inst = oracle::random_extraction_state(rng, 8, 5, 80);
    const ExtractionState& s = inst->state;
    EXPECT_THROW(get_nose(s, 0, s.m, s.m + 1, 1), PreconditionError);
    EXPECT_THROW(get_nose(s, s.m, s.m, s.m + 1, 1), PreconditionError);
    EXPECT_THROW(get_nose(s, s.m, s.m + 1, s.m + 2, s.m + 3), PreconditionError);
}

TEST(ExtractTriangle, DirectWhenLeaveTriangleExists) {
    // L = K_3 on {0,1,2}, T = {3,4}; nothing packed, so (3,4,y) is available.
    ExtractionState s{3, CyclePacking(join_host(Graph::complete(3), 2))};
    ASSERT_TRUE(extraction_hypotheses_problem(s, 0).empty());
    const auto r = extract_triangle(s, 0);
    EXPECT_EQ(r.kind, ExtractionCase::Direct);
    EXPECT_EQ(r.triangle, Triple(0, 3, 4));
    EXPECT_EQ(r.packing.cycles(), s.packing.cycles());
}

TEST(ExtractTriangle, RejectsBadHypotheses) {
    ExtractionState s{3, CyclePacking(join_host(Graph::complete(3), 2))};
    EXPECT_FALSE(extraction_hypotheses_problem(s, 3).empty());
    EXPECT_THROW(extract_triangle(s, 3), PreconditionError);
    s.packing.add({3, 4, 1});
    // No leave edge inside K_T any more.
    EXPECT_FALSE(extraction_hypotheses_problem(s, 0).empty());
}

TEST(ExtractTriangle, RandomStates) {
    Rng rng(6);
    std::map<ExtractionCase, int> kinds;
    int runs = 0;
    for (int trial = 0; trial < 3000 && runs < 400; ++trial) {
        auto inst = oracle::random_extraction_state(rng, 8 + static_cast<int>(rng.below(10)),
                                                    4 + static_cast<int>(rng.below(6)), 60 + static_cast<int>(rng.below(41)));
        if (!inst) continue;
        ++runs;
        const ExtractionState& s = inst->state;
        const Vertex y = inst->y;
        const auto r = extract_triangle(s, y);
        ++kinds[r.kind];
        int in_l = 0;
        for (Vertex v : r.triangle.v) in_l += s.in_t(v) ? 0 : 1;
        EXPECT_EQ(in_l, 1);
        EXPECT_TRUE(r.triangle.contains(y));
        EXPECT_TRUE(equivalent_on(s.packing, r.packing, s.l_vertices(), r.correspondence).ok);
        EXPECT_TRUE(correspondence_agrees(s.packing, r.packing, s.l_vertices(), r.correspondence));
        EXPECT_EQ(lengths(r.packing), lengths(s.packing));
        CyclePacking with = r.packing;
        const Cycle c{r.triangle.v[0], r.triangle.v[1], r.triangle.v[2]};
        ASSERT_TRUE(with.why_not_addable(c).empty());
        with.add(c);
        EXPECT_EQ(with.leave().edge_count() + 3, s.packing.leave().edge_count());
        ExtractionState after{s.m, with};
        EXPECT_EQ(after.t_degree(y), s.t_degree(y) - 2);
    }
    EXPECT_GE(runs, 200);
    EXPECT_GT(kinds[ExtractionCase::Direct], 0);
    EXPECT_GT(kinds[ExtractionCase::ViaNose], 0);
    for (const auto& [k, n] : kinds) RecordProperty("extract_case_" + std::to_string(static_cast<int>(k)), n);
}
