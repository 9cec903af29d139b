#include "stse/witness.hpp"

#include <algorithm>

#include "stse/completion.hpp"
#include "stse/errors.hpp"
#include "stse/rng.hpp"

namespace stse {

std::size_t witness_triple_count(int u, int w) {
    const long long base = 3LL * u + static_cast<long long>(w) * w;
    long long num = 0;
    switch (w % 6) {
        case 1:
        case 3: num = base - 4LL * w - 3; break;
        case 5: num = base - 4LL * w + 13; break;
        case 0:
        case 2: num = base - 2LL * w - 3; break;
        default: num = base - 2LL * w + 1; break;
    }
    return static_cast<std::size_t>(num / 6);
}

namespace {

// Leave of a maximum packing of K_n as a cycle (c1, c2, c3, c4), or empty.
std::vector<Vertex> four_cycle(const Graph& leave) {
    if (leave.edge_count() != 4) return {};
    Vertex start = -1;
    for (Vertex x = 0; x < leave.order(); ++x) {
        const int d = leave.degree(x);
        if (d != 0 && d != 2) return {};
        if (d == 2 && start < 0) start = x;
    }
    std::vector<Vertex> c{start};
    Vertex prev = -1;
    Vertex cur = start;
    for (int i = 0; i < 3; ++i) {
        Vertex next = -1;
        for (Vertex y : leave.neighbors(cur))
            if (y != prev) {
                next = y;
                break;
            }
        if (next == start) return {};
        c.push_back(next);
        prev = cur;
        cur = next;
    }
    return leave.has_edge(cur, start) ? c : std::vector<Vertex>{};
}

}  // namespace

std::pair<Psts, WitnessReport> no_embed_witness(int u, int w, std::uint64_t seed) {
    if (w < 1) throw PreconditionError("w must be positive");
    if ((u + w) % 2 == 0) throw PreconditionError("u + w must be odd");
    if (w > u - 5) throw PreconditionError("w must be at most u - 5");

    const Vertex a = 0;
    const int sprime = w % 2 == 1 ? w : w + 1;  // S' = {1..sprime}
    std::vector<Triple> triples;

    for (Vertex m = w + 1; m + 1 < u; m += 2) triples.emplace_back(a, m, m + 1);

    std::vector<Vertex> c;
    if (sprime >= 3) {
        const Graph k = Graph::complete(sprime);
        CompletionConfig cfg;
        cfg.target_uncovered = sprime % 6 == 5 ? 4 : 0;
        std::vector<Triple> packing;
        for (std::uint64_t attempt = 0;; ++attempt) {
            if (attempt == 16) throw BudgetExhausted("no maximum packing of K_" + std::to_string(sprime) + " found");
            cfg.seed = derive_seed(seed, attempt);
            CompletionResult r = complete_with_restarts(k, {}, cfg);
            if (cfg.target_uncovered == 0) {
                packing = std::move(r.triangles);
                break;
            }
            Graph leave = k;
            for (const Triple& t : r.triangles)
                for (const Edge& e : t.edges()) leave.remove_edge(e.x, e.y);
            c = four_cycle(leave);
            if (!c.empty()) {
                packing = std::move(r.triangles);
                break;
            }
        }
        // Packing vertex i is point i+1; for w ≡ 4 the added point w+1 must be c1.
        std::vector<Vertex> label(sprime);
        for (int i = 0; i < sprime; ++i) label[i] = i + 1;
        if (!c.empty()) {
            if (w % 6 == 4) std::swap(label[c[0]], label[sprime - 1]);
            for (Vertex& x : c) x = label[x];
        }
        for (const Triple& t : packing) triples.emplace_back(label[t.v[0]], label[t.v[1]], label[t.v[2]]);
    }

    if (!c.empty()) {
        const Vertex z1 = sprime + 1;
        const Vertex z2 = sprime + 2;
        if (w % 6 == 5) {
            triples.emplace_back(z1, c[0], c[1]);
            triples.emplace_back(z1, c[2], c[3]);
            triples.emplace_back(z2, c[1], c[2]);
            triples.emplace_back(z2, c[0], c[3]);
        } else {
            if (c[0] != w + 1) throw DefectError("c1 is not the added point");
            triples.emplace_back(z1, c[2], c[3]);
            triples.emplace_back(z2, c[1], c[2]);
        }
    }

    Psts p(u, std::move(triples));
    WitnessReport rep;
    rep.u = u;
    rep.w = w;
    rep.a = a;
    rep.triples = p.size();
    rep.expected_triples = witness_triple_count(u, w);
    const Graph leave = leave_of(p);
    rep.neighbourhood = leave.neighbors(a);
    rep.independent = true;
    for (std::size_t i = 0; i < rep.neighbourhood.size(); ++i)
        for (std::size_t j = i + 1; j < rep.neighbourhood.size(); ++j)
            if (leave.has_edge(rep.neighbourhood[i], rep.neighbourhood[j])) rep.independent = false;
    rep.min_embedding_order = u + static_cast<int>(rep.neighbourhood.size());
    if (rep.triples != rep.expected_triples || static_cast<int>(rep.neighbourhood.size()) != w || !rep.independent)
        throw DefectError("witness does not match its certificate");
    return {std::move(p), std::move(rep)};
}

int lb_witness_parameter(int u, long long t) {
    const long long r = 6 * t - 3LL * u;
    int w = 1;
    while (static_cast<long long>(w + 1) * (w + 1) <= r || (u + w) % 2 == 0) ++w;
    return w;
}

std::pair<Psts, WitnessReport> lb_witness(int u, long long t, std::uint64_t seed) {
    if (2 * t < u + 1) throw PreconditionError("t must be at least (u+1)/2");
    if (6 * t >= static_cast<long long>(u) * u - 5LL * u + 16) throw PreconditionError("t must be below (u^2-5u+16)/6");
    auto out = no_embed_witness(u, lb_witness_parameter(u, t), seed);
    if (static_cast<long long>(out.second.triples) > t) throw DefectError("witness exceeds t triples");
    return out;
}

}  // namespace stse
