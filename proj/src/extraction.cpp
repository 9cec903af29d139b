#include <algorithm>
#include <optional>

#include "stse/errors.hpp"
#include "stse/switching.hpp"

namespace stse {

namespace {

bool is_l_triangle(const ExtractionState& s, const Cycle& c, Vertex b, Vertex* y) {
    if (c.size() != 3) return false;
    int in_l = 0;
    bool has_b = false;
    for (Vertex v : c) {
        if (v == b) has_b = true;
        if (!s.in_t(v)) {
            ++in_l;
            *y = v;
        }
    }
    return has_b && in_l == 1;
}

void check_nose_hypotheses(const ExtractionState& s, Vertex a, Vertex b, Vertex c, Vertex d) {
    const CyclePacking& p = s.packing;
    if (!s.in_t(a) || !s.in_t(b) || !s.in_t(c)) throw PreconditionError("a, b, c must lie in T");
    if (a == b || b == c || a == c) throw PreconditionError("a, b, c must be distinct");
    if (d < 0 || d >= s.m) throw PreconditionError("d must lie in V(L)");
    if (!p.in_leave(a, b)) throw PreconditionError("ab is not a leave edge");
    if (!p.in_leave(c, d)) throw PreconditionError("cd is not a leave edge");
    for (Vertex z = s.m; z < s.order(); ++z) {
        if (z == b || p.in_leave(b, z)) continue;
        Vertex y = -1;
        const int slot = p.owner(b, z);
        if (slot < 0 || !is_l_triangle(s, p.cycle(static_cast<std::size_t>(slot)), b, &y))
            throw PreconditionError("packed edge " + to_string(Edge(b, z)) + " is not in a (b, V(L), T) triangle");
        if (s.t_degree(y) < 1) throw PreconditionError("vertex " + std::to_string(y) + " has no leave neighbour in T");
    }
}

// Replaces (b, y_i, z_i) by (b, y_i, z_{i+1}) for i = 1..k, where z_{k+1} is
// `last`. Arrays are 1-based; index 0 of z is unused.
void rotate(CyclePacking& p, Vertex b, const std::vector<Vertex>& y, const std::vector<Vertex>& z,
            const std::vector<std::size_t>& slot, int k, Vertex last) {
    for (int i = 1; i <= k; ++i) p.erase(slot[i]);
    for (int i = 1; i <= k; ++i) p.place(slot[i], Cycle{b, y[i], i < k ? z[i + 1] : last});
}

}  // namespace

std::string extraction_hypotheses_problem(const ExtractionState& s, Vertex y) {
    const CyclePacking& p = s.packing;
    if (y < 0 || y >= s.m) return "y is not a vertex of L";
    bool t_edge = false;
    for (Vertex x = s.m; x < s.order() && !t_edge; ++x)
        for (Vertex z = x + 1; z < s.order(); ++z)
            if (p.in_leave(x, z)) {
                t_edge = true;
                break;
            }
    if (!t_edge) return "leave has no edge inside T";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.vacant(i)) continue;
        const Cycle& c = p.cycle(i);
        bool touches_kt = false;
        for (const Edge& e : cycle_edges(c))
            if (s.in_t(e.x) && s.in_t(e.y)) touches_kt = true;
        if (!touches_kt) continue;
        const auto l_count = std::count_if(c.begin(), c.end(), [&](Vertex v) { return !s.in_t(v); });
        if (c.size() != 3 || l_count != 1)
            return "cycle " + std::to_string(i) + " uses an edge of K_T but is not a triangle with one L-vertex";
    }
    for (Vertex x = 0; x < s.m; ++x)
        if (s.t_degree(x) < 1) return "vertex " + std::to_string(x) + " has no leave neighbour in T";
    if (s.t_degree(y) < 2) return "y has fewer than two leave neighbours in T";
    return {};
}

NoseResult get_nose(const ExtractionState& s, Vertex a, Vertex b, Vertex c, Vertex d) {
    check_nose_hypotheses(s, a, b, c, d);
    const CyclePacking& p = s.packing;
    NoseResult out{p, Correspondence::identity(p.size()), NoseCase::AlreadyLeave, 0};
    if (p.in_leave(b, c)) return out;

    // Chain y_0 z_1 y_1 ... z_t y_t z_{t+1}; slot[i] holds (b, y_i, z_i).
    std::vector<Vertex> y{d};
    std::vector<Vertex> z{-1, c};
    std::vector<std::size_t> slot{0};
    int t = 0;
    int s_index = 0;  // nonzero when z_{t+1} repeats z_s
    while (true) {
        const int i = t + 1;
        const int owner = p.owner(b, z[i]);
        Vertex yi = -1;
        if (owner < 0 || !is_l_triangle(s, p.cycle(static_cast<std::size_t>(owner)), b, &yi))
            throw DefectError("chain edge at b is not in a (b, V(L), T) triangle");
        if (yi == d) throw PreconditionError("chain through b returns to d");
        y.push_back(yi);
        slot.push_back(static_cast<std::size_t>(owner));
        t = i;
        // Next z: a leave neighbour of y_i in T, closing ones (adjacent to b
        // in the leave) first, then lowest index.
        Vertex next = -1;
        for (Vertex cand = s.m; cand < s.order(); ++cand) {
            if (!p.in_leave(yi, cand)) continue;
            if (p.in_leave(b, cand)) {
                next = cand;
                break;
            }
            if (next < 0) next = cand;
        }
        if (next < 0) throw DefectError("chain vertex " + std::to_string(yi) + " has no leave neighbour in T");
        z.push_back(next);
        if (p.in_leave(b, next)) break;
        const auto seen = std::find(z.begin() + 1, z.begin() + i + 1, next);
        if (seen != z.begin() + i + 1) {
            s_index = static_cast<int>(seen - z.begin());
            break;
        }
        if (t > s.order()) throw DefectError("chain did not terminate");
    }
    out.chain_length = t;
    CyclePacking& q = out.packing;

    if (s_index == 0) {
        rotate(q, b, y, z, slot, t, z[t + 1]);
        out.kind = NoseCase::Rotation;
    } else {
        const int si = s_index;
        const Vertex zs = z[si];
        q.erase(slot[si]);
        const SwitchPlan plan = path_switch_pairs(q, a, zs);
        int pair = plan.pair_of(y[si - 1]);
        int origin = si - 1;
        if (pair < 0) {
            // Only y_0 = d can be a leave neighbour of both a and z_s: later
            // y_i would have closed the chain at a. Take the s = 1 route.
            if (si != 1) throw DefectError("y_{s-1} is not in the switch partition");
        } else if (plan.pairs[static_cast<std::size_t>(pair)].partner(y[si - 1]) == y[si]) {
            pair = plan.pair_of(y[t]);
            if (pair < 0) throw DefectError("y_t is not in the switch partition");
            origin = t;
        }
        if (si == 1 && origin == 0) {
            const int alt = plan.pair_of(y[1]);
            if (alt >= 0)
                apply_switch(q, plan, plan.pairs[static_cast<std::size_t>(alt)]);
            else if (!q.in_leave(a, y[1]))
                throw DefectError("cannot free a y_1 for the (a, b, y_1) triangle");
            q.place(slot[1], Cycle{a, b, y[1]});
            out.kind = NoseCase::SwitchTriangle;
        } else {
            apply_switch(q, plan, plan.pairs[static_cast<std::size_t>(pair)]);
            q.place(slot[si], Cycle{b, y[si], zs});
            rotate(q, b, y, z, slot, origin, a);
            out.kind = NoseCase::SwitchRotation;
        }
    }

    if (!q.in_leave(b, c) || !q.in_leave(c, d)) throw DefectError("relocation did not free bc and cd");
    VertexSet keep = s.l_vertices();
    keep.push_back(b);
    if (auto eq = equivalent_on(p, q, keep, out.correspondence); !eq.ok)
        throw DefectError("relocation broke equivalence: " + eq.reason);
    return out;
}

namespace {

// Direct triangle or the single-relocation route; nullopt if no vertex of
// N(y) ∩ T has a leave neighbour in T.
std::optional<ExtractionResult> extract_with_t_edge(const ExtractionState& s, Vertex y) {
    const CyclePacking& p = s.packing;
    VertexSet nt;
    for (Vertex z = s.m; z < s.order(); ++z)
        if (p.in_leave(y, z)) nt.push_back(z);
    for (std::size_t i = 0; i < nt.size(); ++i)
        for (std::size_t j = i + 1; j < nt.size(); ++j)
            if (p.in_leave(nt[i], nt[j]))
                return ExtractionResult{p, Triple(nt[i], nt[j], y), Correspondence::identity(p.size()),
                                        ExtractionCase::Direct};
    for (Vertex r : nt) {
        Vertex q = -1;
        for (Vertex z = s.m; z < s.order(); ++z)
            if (z != r && p.in_leave(r, z)) {
                q = z;
                break;
            }
        if (q < 0) continue;
        const Vertex sv = nt[0] == r ? nt[1] : nt[0];
        NoseResult nose = get_nose(s, q, r, sv, y);
        return ExtractionResult{std::move(nose.packing), Triple(r, sv, y), std::move(nose.correspondence),
                                ExtractionCase::ViaNose};
    }
    return std::nullopt;
}

}  // namespace

ExtractionResult extract_triangle(const ExtractionState& s, Vertex y) {
    if (auto why = extraction_hypotheses_problem(s, y); !why.empty()) throw PreconditionError(why);
    auto result = extract_with_t_edge(s, y);
    if (!result) {
        // Any r in N(y) ∩ T and any orientation of any K_T leave edge will
        // do, except when the chain at b runs back into y; try them in order.
        const CyclePacking& p = s.packing;
        VertexSet nt;
        for (Vertex z = s.m; z < s.order(); ++z)
            if (p.in_leave(y, z)) nt.push_back(z);
        for (Vertex x = s.m; x < s.order() && !result; ++x)
            for (Vertex z = s.m; z < s.order() && !result; ++z) {
                if (x == z || !p.in_leave(x, z)) continue;
                for (Vertex r : nt) {
                    std::optional<NoseResult> nose;
                    try {
                        nose = get_nose(s, x, z, r, y);
                    } catch (const PreconditionError&) {
                        continue;
                    }
                    const ExtractionState moved{s.m, std::move(nose->packing)};
                    result = extract_with_t_edge(moved, y);
                    if (!result) throw DefectError("relocated edge did not enable extraction");
                    result->kind = ExtractionCase::ViaRelocatedEdge;
                    break;
                }
            }
        if (!result) throw DefectError("no relocation of a K_T leave edge reaches y");
    }
    const CyclePacking& out = result->packing;
    for (const Edge& e : result->triangle.edges())
        if (!out.in_leave(e.x, e.y)) throw DefectError("extracted triangle uses a packed edge");
    if (auto eq = equivalent_on(s.packing, out, s.l_vertices(), result->correspondence); !eq.ok)
        throw DefectError("extraction broke equivalence on V(L): " + eq.reason);
    return std::move(*result);
}

}  // namespace stse
