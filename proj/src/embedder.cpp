#include "stse/embedder.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stse/errors.hpp"
#include "stse/graph_tools.hpp"
#include "stse/rng.hpp"

namespace stse {

OrderSplit split_order(int v) {
    if (v % 2 == 0) throw PreconditionError("order v must be odd");
    if (v < 103) throw PreconditionError("order v must be at least 103");
    static constexpr int kByResidue[8] = {0, 21, 0, 23, 0, 17, 0, 19};
    OrderSplit s;
    s.v = v;
    s.k = kByResidue[v % 8];
    s.u = (5 * v - s.k) / 8;
    s.w = (3 * v + s.k) / 8;
    if (s.u + s.w != v || 5 * s.w - 3 * s.u != s.k) throw DefectError("order split arithmetic failed");
    return s;
}

bool triple_bound_holds(int u, std::size_t t) {
    const long long uu = u;
    return 300 * static_cast<long long>(t) <= 6 * uu * uu - 33 * uu - 464;
}

long long max_triples(int u) {
    const long long uu = u;
    const long long rhs = 6 * uu * uu - 33 * uu - 464;
    if (rhs < 0) return -1;
    return rhs / 300;
}

bool nw_edge_bound_holds(int v, std::size_t edges) {
    const long long vv = v;
    return 128 * static_cast<long long>(edges) >= 64 * vv * (vv - 1) - (3 * vv * vv - 54 * vv - 409);
}

bool embed_edge_bound_holds(const Graph& l, int w) { return sparsify_edge_bound_holds(l, w); }

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

int d_size(int u, int w) { return (5 * w - 3 * u - 13) / 2; }

std::vector<char> membership(int n, const VertexSet& s) {
    std::vector<char> in(n, 0);
    for (Vertex x : s) in.at(x) = 1;
    return in;
}

bool touches(const std::vector<Edge>& m, Vertex x) {
    return std::any_of(m.begin(), m.end(), [&](const Edge& e) { return e.x == x || e.y == x; });
}

void check_sparse_leave(const Graph& lstar, int u, int w) {
    if (lstar.order() != u) throw PreconditionError("L* must have order u");
    if (u < 32) throw PreconditionError("u must be at least 32");
    if (join_parameter(u, w) == 0) throw PreconditionError("w must equal (3u+k)/5 with k in {17,19,21,23}");
    if (2 * lstar.edge_count() != static_cast<std::size_t>(w) * (u - w + 1))
        throw PreconditionError("|E(L*)| must equal w(u-w+1)/2");
    if (lstar.max_degree() > w - 8) throw PreconditionError("max degree of L* exceeds w-8");
    for (Vertex x = 0; x < u; ++x)
        if ((lstar.degree(x) - (u + 1)) % 2 != 0) throw PreconditionError("degree of L* not congruent to u+1 mod 2");
}

}  // namespace

std::string helper_problem(const Graph& lstar, int u, int w, const HelperDecomposition& hd) {
    std::string why;
    if (hd.f.order() != u) return "F has the wrong order";
    if (static_cast<int>(hd.f.edge_count()) != u - w + 1) return "F does not have u-w+1 edges";
    if (!is_even_linear_forest(hd.f, &why)) return "F: " + why;
    if (static_cast<int>(hd.matchings.size()) != w - 7) return "expected w-7 matchings";
    Graph rest = lstar;
    for (const Edge& e : hd.f.edges())
        if (!rest.remove_edge(e.x, e.y)) return "F edge " + to_string(e) + " not in L*";
    if (!is_proper_decomposition(rest, MatchingDecomposition{hd.matchings}, &why)) return "matchings: " + why;
    const auto s = static_cast<std::size_t>(d_size(u, w));
    if (hd.d.size() != s) return "|D| differs from (5w-3u-13)/2";
    int outside_f = 0;
    for (Vertex x = 0; x < u; ++x)
        if (hd.f.degree(x) == 0) ++outside_f;
    if (static_cast<int>(s) >= outside_f) return "D is not a proper subset of U minus V(F)";
    for (Vertex x : hd.d) {
        if (hd.f.degree(x) != 0) return "D meets V(F)";
        if (lstar.degree(x) > w - 10) return "vertex of D has degree above w-10";
    }
    const auto& last = hd.matchings.back();
    if (touches(last, hd.d[0]) || touches(last, hd.d[1])) return "d1 or d2 lies on F_{w-7}";
    if (hd.a1 == hd.a2 || std::find(hd.d.begin(), hd.d.end(), hd.a1) == hd.d.end() ||
        std::find(hd.d.begin(), hd.d.end(), hd.a2) == hd.d.end())
        return "a1, a2 are not distinct vertices of D";
    return {};
}

HelperDecomposition helper_decomposition(const Graph& lstar, int u, int w) {
    check_sparse_leave(lstar, u, w);
    HelperDecomposition hd;

    std::vector<Vertex> by_degree(u);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex x, Vertex y) { return lstar.degree(x) > lstar.degree(y); });
    const VertexSet m(by_degree.begin(), by_degree.begin() + (u - w + 1) / 2);
    const bool high = std::all_of(m.begin(), m.end(), [&](Vertex x) { return lstar.degree(x) >= u - w; });
    hd.covering = high;
    hd.f = high ? find_even_linear_forest_covering(lstar, u, w, m) : find_even_linear_forest(lstar, u, w);

    auto classes = vizing_color(lstar.minus(hd.f)).classes;
    if (static_cast<int>(classes.size()) > w - 7) throw DefectError("edge colouring uses more than w-7 matchings");
    classes.resize(static_cast<std::size_t>(w - 7));
    hd.matchings = std::move(classes);

    // D': the five lowest-degree vertices outside V(F).
    VertexSet dprime;
    for (auto it = by_degree.rbegin(); it != by_degree.rend() && dprime.size() < 5; ++it)
        if (hd.f.degree(*it) == 0) dprime.push_back(*it);
    std::sort(dprime.begin(), dprime.end(), [&](Vertex x, Vertex y) {
        return lstar.degree(x) != lstar.degree(y) ? lstar.degree(x) < lstar.degree(y) : x < y;
    });
    if (dprime.size() < 5) throw DefectError("fewer than five vertices outside V(F)");

    std::size_t chosen = hd.matchings.size();
    for (std::size_t i = 0; i < hd.matchings.size(); ++i) {
        const auto missing = std::count_if(dprime.begin(), dprime.end(),
                                           [&](Vertex x) { return !touches(hd.matchings[i], x); });
        if (missing >= 2) {
            chosen = i;
            break;
        }
    }
    if (chosen == hd.matchings.size()) throw DefectError("no matching misses two vertices of D'");
    std::swap(hd.matchings[chosen], hd.matchings.back());

    VertexSet missing, rest;
    for (Vertex x : dprime) (touches(hd.matchings.back(), x) ? rest : missing).push_back(x);
    std::sort(missing.begin(), missing.end());
    std::sort(rest.begin(), rest.end());
    missing.insert(missing.end(), rest.begin(), rest.end());
    missing.resize(static_cast<std::size_t>(d_size(u, w)));
    hd.d = std::move(missing);

    VertexSet sorted_d = hd.d;
    std::sort(sorted_d.begin(), sorted_d.end());
    hd.a1 = sorted_d[0];
    hd.a2 = sorted_d[1];

    if (auto why = helper_problem(lstar, u, w, hd); !why.empty()) throw DefectError("helper decomposition: " + why);
    return hd;
}

std::vector<int> tau_profile(int u, const Graph& f, const VertexSet& d, Vertex a1, Vertex a2) {
    std::vector<int> tau(u, 1);
    for (Vertex x : d)
        if (x != a1 && x != a2) tau[x] = 3;
    for (Vertex x = 0; x < u; ++x)
        if (f.degree(x) > 0) tau[x] = f.degree(x) + 1;
    return tau;
}

StageState build_initial_packing(const Graph& lstar, const HelperDecomposition& hd, int u, int w) {
    if (auto why = helper_problem(lstar, u, w, hd); !why.empty()) throw PreconditionError("helper decomposition: " + why);
    StageState s;
    s.u = u;
    s.w = w;
    s.step = 0;
    s.f = hd.f;
    s.d = hd.d;
    s.a1 = hd.a1;
    s.a2 = hd.a2;
    s.tau = tau_profile(u, hd.f, hd.d, hd.a1, hd.a2);
    s.ext.m = u;
    s.ext.packing = CyclePacking(lstar.join(w - 5));
    CyclePacking& p = s.ext.packing;
    for (int i = 1; i <= w - 7; ++i)
        for (const Edge& e : hd.matchings[static_cast<std::size_t>(i - 1)]) p.add(Cycle{e.x, e.y, z_vertex(u, i)});

    const auto& d = hd.d;
    const Vertex z5 = z_vertex(u, w - 5);
    const Vertex z6 = z_vertex(u, w - 6);
    const Vertex z7 = z_vertex(u, w - 7);
    switch (d.size()) {
        case 2: p.add(Cycle{d[0], z5, d[1], z6}); break;
        case 3: p.add(Cycle{d[0], z7, d[1], z6, d[2], z5}); break;
        case 4:
            p.add(Cycle{d[0], z5, d[1], z6});
            p.add(Cycle{d[2], z5, d[3], z6});
            break;
        case 5:
            p.add(Cycle{d[0], z7, d[1], z6, d[2], z5});
            p.add(Cycle{d[3], z5, d[4], z6});
            break;
        default: throw DefectError("|D| outside {2,3,4,5}");
    }
    if (auto why = stage_invariant_problem(s); !why.empty()) throw DefectError("initial packing: " + why);
    return s;
}

std::string stage_invariant_problem(const StageState& s) {
    const CyclePacking& p = s.ext.packing;
    const int u = s.u;
    const int n = p.order();
    const Graph& leave = p.leave();
    for (Vertex x = 0; x < u; ++x)
        for (Vertex y = x + 1; y < u; ++y)
            if (leave.has_edge(x, y) != s.f.has_edge(x, y)) return "leave inside U differs from F at " + to_string(Edge(x, y));
    long long kt = 0;
    for (Vertex x = u; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
            if (leave.has_edge(x, y)) ++kt;
    const long long remaining = choose2(s.w - 5) - s.step;
    if (kt != remaining) return "leave has " + std::to_string(kt) + " edges in K_T, expected " + std::to_string(remaining);
    long long surplus = 0;
    for (Vertex x = 0; x < u; ++x) {
        const int g = s.ext.t_degree(x);
        if (g < s.tau[x] || (g - s.tau[x]) % 2 != 0)
            return "vertex " + std::to_string(x) + " has G-degree " + std::to_string(g) + " against tau " +
                   std::to_string(s.tau[x]);
        surplus += g - s.tau[x];
    }
    if (surplus != 2 * remaining) return "surplus " + std::to_string(surplus) + " differs from 2(C(w-5,2)-i)";
    const auto in_d = membership(u, s.d);
    std::vector<int> long_count(u, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.vacant(i)) continue;
        const Cycle& c = p.cycle(i);
        bool kt_edge = false;
        bool bipartite = true;
        for (const Edge& e : cycle_edges(c)) {
            const bool xt = e.x >= u;
            const bool yt = e.y >= u;
            if (xt && yt) kt_edge = true;
            if (xt == yt) bipartite = false;
        }
        const auto l_count = std::count_if(c.begin(), c.end(), [&](Vertex v) { return v < u; });
        if (kt_edge && (c.size() != 3 || l_count != 1))
            return "cycle " + std::to_string(i) + " uses K_T but is not a triangle with one U-vertex";
        if (c.size() >= 4) {
            if (!bipartite) return "long cycle " + std::to_string(i) + " leaves K_{U,T}";
            for (Vertex v : c)
                if (v < u) ++long_count[v];
        }
    }
    for (Vertex x = 0; x < u; ++x) {
        if (in_d[x] && long_count[x] != 1) return "vertex " + std::to_string(x) + " of D is not in exactly one long cycle";
        if (!in_d[x] && long_count[x] != 0) return "vertex " + std::to_string(x) + " outside D is in a long cycle";
    }
    return {};
}

StageState extraction_loop(StageState s, int check_every, ExtractionStats* stats) {
    if (auto why = stage_invariant_problem(s); !why.empty()) throw PreconditionError("stage state: " + why);
    const long long r = choose2(s.w - 5);
    while (s.step < r) {
        Vertex y = -1;
        for (Vertex x = 0; x < s.u; ++x)
            if (s.ext.t_degree(x) >= s.tau[x] + 2) {
                y = x;
                break;
            }
        if (y < 0) throw DefectError("no vertex with surplus at step " + std::to_string(s.step));
        ExtractionResult res = extract_triangle(s.ext, y);
        if (stats) {
            switch (res.kind) {
                case ExtractionCase::Direct: ++stats->direct; break;
                case ExtractionCase::ViaNose: ++stats->via_nose; break;
                case ExtractionCase::ViaRelocatedEdge: ++stats->via_relocated_edge; break;
            }
        }
        s.ext.packing = std::move(res.packing);
        const Triple& c = res.triangle;
        s.ext.packing.add(Cycle{c.v[0], c.v[1], c.v[2]});
        ++s.step;
        const bool check = s.step == r || (check_every > 0 && s.step % check_every == 0);
        if (check) {
            if (auto why = stage_invariant_problem(s); !why.empty())
                throw DefectError("step " + std::to_string(s.step) + ": " + why);
        }
    }
    return s;
}

bool FinishPrecondition::ok() const {
    return !bullets.empty() && std::all_of(bullets.begin(), bullets.end(), [](const BulletCheck& b) { return b.ok; });
}

std::string FinishPrecondition::describe() const {
    std::ostringstream os;
    for (const auto& b : bullets) os << b.name << ": " << (b.ok ? "PASS" : "FAIL") << (b.detail.empty() ? "" : " (" + b.detail + ")") << "\n";
    return os.str();
}

FinishPrecondition finish_off_precondition(const StageState& s) {
    FinishPrecondition out;
    const CyclePacking& p = s.ext.packing;
    const int u = s.u;
    const int w = s.w;
    const int n = p.order();
    const Graph& leave = p.leave();

    {
        BulletCheck b{"parameters", true, {}};
        Graph lstar = p.host().induced([&] {
            VertexSet vs(u);
            std::iota(vs.begin(), vs.end(), 0);
            return vs;
        }());
        if (n != u + w - 5) {
            b.ok = false;
            b.detail = "|T| differs from w-5";
        } else if (5 * w < 3 * u + 17 || w > u - 1) {
            b.ok = false;
            b.detail = "w outside [(3u+17)/5, u-1]";
        } else if (auto adm = is_admissible(lstar, w); !adm.admissible) {
            b.ok = false;
            b.detail = "(L,w) " + adm.describe();
        }
        out.bullets.push_back(b);
    }

    // Leave = F ∪ G with F an even linear forest in L and G ⊆ K_{V(L),T}.
    Graph f(u);
    {
        BulletCheck b{"leave-shape", true, {}};
        for (Vertex x = 0; x < u; ++x)
            for (Vertex y = x + 1; y < u; ++y)
                if (leave.has_edge(x, y)) f.add_edge(x, y);
        std::string why;
        if (!is_even_linear_forest(f, &why)) {
            b.ok = false;
            b.detail = "F: " + why;
        }
        for (Vertex x = u; x < n && b.ok; ++x)
            for (Vertex y = x + 1; y < n; ++y)
                if (leave.has_edge(x, y)) {
                    b.ok = false;
                    b.detail = "leave edge " + to_string(Edge(x, y)) + " inside T";
                    break;
                }
        out.bullets.push_back(b);
    }

    // Long cycles lie in K_{D,T}, D ⊊ V(L) ∖ V(F), each D-vertex in one.
    VertexSet d;
    {
        BulletCheck b{"long-cycles", true, {}};
        std::vector<int> count(u, 0);
        for (std::size_t i = 0; i < p.size() && b.ok; ++i) {
            if (p.vacant(i) || p.cycle(i).size() < 4) continue;
            for (const Edge& e : cycle_edges(p.cycle(i))) {
                if ((e.x < u) == (e.y < u)) {
                    b.ok = false;
                    b.detail = "cycle " + std::to_string(i) + " has edge " + to_string(e) + " outside K_{V(L),T}";
                    break;
                }
            }
            for (Vertex v : p.cycle(i))
                if (v < u) ++count[v];
        }
        int outside_f = 0;
        for (Vertex x = 0; x < u; ++x) {
            if (f.degree(x) == 0) ++outside_f;
            if (count[x] == 0) continue;
            d.push_back(x);
            if (count[x] != 1 && b.ok) {
                b.ok = false;
                b.detail = "vertex " + std::to_string(x) + " in " + std::to_string(count[x]) + " long cycles";
            }
            if (f.degree(x) != 0 && b.ok) {
                b.ok = false;
                b.detail = "vertex " + std::to_string(x) + " of D lies in V(F)";
            }
        }
        if (b.ok && static_cast<int>(d.size()) != d_size(u, w)) {
            b.ok = false;
            b.detail = "|D| = " + std::to_string(d.size()) + ", expected " + std::to_string(d_size(u, w));
        }
        if (b.ok && static_cast<int>(d.size()) >= outside_f) {
            b.ok = false;
            b.detail = "D is not a proper subset of V(L) minus V(F)";
        }
        out.bullets.push_back(b);
    }

    {
        BulletCheck b{"degree-profile", true, {}};
        const auto in_d = membership(u, d);
        if (s.a1 == s.a2 || s.a1 < 0 || s.a2 < 0 || s.a1 >= u || s.a2 >= u || !in_d[s.a1] || !in_d[s.a2]) {
            b.ok = false;
            b.detail = "a1, a2 are not distinct vertices of D";
        }
        for (Vertex x = 0; x < u && b.ok; ++x) {
            int expected = 1;
            if (f.degree(x) > 0)
                expected = f.degree(x) + 1;
            else if (in_d[x] && x != s.a1 && x != s.a2)
                expected = 3;
            const int g = s.ext.t_degree(x);
            if (g != expected) {
                b.ok = false;
                b.detail = "vertex " + std::to_string(x) + " has G-degree " + std::to_string(g) + ", expected " +
                           std::to_string(expected);
            }
        }
        out.bullets.push_back(b);
    }
    return out;
}

std::vector<Triple> finish_off(const StageState& s, const CompletionConfig& cfg) {
    const FinishPrecondition pre = finish_off_precondition(s);
    if (!pre.ok()) throw PreconditionError("finishing hypotheses fail:\n" + pre.describe());
    VertexSet u_vertices(s.u);
    std::iota(u_vertices.begin(), u_vertices.end(), 0);
    const Graph lstar = s.ext.packing.host().induced(u_vertices);
    const Graph host = lstar.join(s.w);
    std::vector<Triple> warm;
    for (std::size_t i = 0; i < s.ext.packing.size(); ++i) {
        const Cycle& c = s.ext.packing.cycle(i);
        if (c.size() == 3) warm.emplace_back(c[0], c[1], c[2]);
    }
    CompletionConfig c = cfg;
    c.target_uncovered = 0;
    auto result = complete_with_restarts(host, warm, c);
    const auto report = verify_triangle_decomposition(host, result.triangles);
    if (!report.ok) throw DefectError("finishing output does not verify: " + report.first_violation);
    return std::move(result.triangles);
}

std::vector<Triple> embed_graph(const Graph& l, int u, int w, const CompletionConfig& cfg, EmbedReport* report) {
    if (l.order() != u) throw PreconditionError("L must have order u");
    if (u < 62) throw PreconditionError("u must be at least 62");
    if (join_parameter(u, w) == 0) throw PreconditionError("w must equal (3u+k)/5 with k in {17,19,21,23}");
    if (auto adm = is_admissible(l, w); !adm.admissible) throw PreconditionError("(L,w) " + adm.describe());
    if (!embed_edge_bound_holds(l, w)) {
        std::ostringstream os;
        os << "|E(L)| = " << l.edge_count() << " is below C(u,2) - (w(u-w+1)-u-2)/4 = "
           << (2.0 * u * (u - 1) - (static_cast<double>(w) * (u - w + 1) - u - 2)) / 4.0;
        throw PreconditionError(os.str());
    }
    EmbedReport local;
    EmbedReport& rep = report ? *report : local;

    CompletionConfig sparse_cfg = cfg;
    sparse_cfg.seed = derive_seed(cfg.seed, 1);
    const TrianglePacking packing = sparsify_leave(l, u, w, sparse_cfg, &rep.sparsify);
    const Graph& lstar = packing.leave;
    rep.lstar_edges = lstar.edge_count();
    rep.lstar_max_degree = lstar.max_degree();

    const HelperDecomposition hd = helper_decomposition(lstar, u, w);
    rep.helper_covering = hd.covering;
    rep.d_size = hd.d.size();

    StageState s = build_initial_packing(lstar, hd, u, w);
    s = extraction_loop(std::move(s), 1, &rep.extraction);
    rep.finish = finish_off_precondition(s);
    if (!rep.finish.ok()) throw DefectError("stage output fails the finishing hypotheses:\n" + rep.finish.describe());

    CompletionConfig finish_cfg = cfg;
    finish_cfg.seed = derive_seed(cfg.seed, 2);
    std::vector<Triple> out = finish_off(s, finish_cfg);
    out.insert(out.end(), packing.triangles.begin(), packing.triangles.end());
    std::sort(out.begin(), out.end());
    const auto check = verify_triangle_decomposition_parallel(l.join(w), out);
    if (!check.ok) throw DefectError("embedding does not verify: " + check.first_violation);
    return out;
}

Psts embed_psts(const Psts& p, int v, const CompletionConfig& cfg, EmbedReport* report) {
    const int u = p.order();
    if (u < 62) throw PreconditionError("u must be at least 62");
    if (!triple_bound_holds(u, p.size()))
        throw PreconditionError("more than u^2/50 - 11u/100 - 116/75 = " + std::to_string(max_triples(u)) +
                                " (floored) triples");
    if (v % 6 != 1 && v % 6 != 3) throw PreconditionError("order v must be congruent to 1 or 3 mod 6");
    if (5 * v < 8 * u + 17) throw PreconditionError("order v must be at least (8u+17)/5");
    const OrderSplit split = split_order(v);
    if (split.u < u) throw DefectError("split order smaller than u");
    const Graph lprime = leave_of(p).join(split.u - u);
    EmbedReport local;
    EmbedReport& rep = report ? *report : local;
    rep.split = split;
    std::vector<Triple> triples = embed_graph(lprime, split.u, split.w, cfg, &rep);
    triples.insert(triples.end(), p.triples().begin(), p.triples().end());
    Psts out(v, std::move(triples));
    if (!out.is_complete() || !out.contains_all(p)) throw DefectError("embedding is not an STS containing the input");
    return out;
}

std::vector<Triple> decompose_nw(const Graph& g, const CompletionConfig& cfg, EmbedReport* report) {
    const int v = g.order();
    for (Vertex x = 0; x < v; ++x)
        if (g.degree(x) % 2 != 0) throw PreconditionError("G is not even");
    if (g.edge_count() % 3 != 0) throw PreconditionError("|E(G)| is not divisible by 3");
    if (v % 2 == 0) throw PreconditionError("order must be odd (a full-degree vertex of an even graph forces it)");
    if (v < 103) throw PreconditionError("order must be at least 103");
    if (!nw_edge_bound_holds(v, g.edge_count()))
        throw PreconditionError("|E(G)| below C(v,2) - (3v^2/128 - 27v/64 - 409/128)");
    VertexSet full, rest;
    for (Vertex x = 0; x < v; ++x) (g.degree(x) == v - 1 ? full : rest).push_back(x);
    if (8 * static_cast<long long>(full.size()) < 3LL * v + 17)
        throw PreconditionError("fewer than (3v+17)/8 vertices of degree v-1");
    const OrderSplit split = split_order(v);
    // Peel w' full vertices; everything else becomes L'.
    rest.insert(rest.end(), full.begin() + split.w, full.end());
    std::sort(rest.begin(), rest.end());
    VertexSet order = rest;
    order.insert(order.end(), full.begin(), full.begin() + split.w);
    std::vector<Vertex> to_new(v);
    for (int i = 0; i < v; ++i) to_new[order[i]] = i;
    VertexSet first(split.u);
    std::iota(first.begin(), first.end(), 0);
    const Graph lprime = g.relabeled(to_new).induced(first);
    EmbedReport local;
    EmbedReport& rep = report ? *report : local;
    rep.split = split;
    std::vector<Triple> out;
    for (const Triple& t : embed_graph(lprime, split.u, split.w, cfg, &rep))
        out.emplace_back(order[t.v[0]], order[t.v[1]], order[t.v[2]]);
    std::sort(out.begin(), out.end());
    const auto check = verify_triangle_decomposition_parallel(g, out);
    if (!check.ok) throw DefectError("decomposition does not verify: " + check.first_violation);
    return out;
}

}  // namespace stse
