#include <algorithm>
#include <functional>

#include "stse/completion.hpp"
#include "stse/errors.hpp"
#include "stse/rng.hpp"

namespace stse {

namespace {

class Backtracker {
public:
    explicit Backtracker(const Graph& g) : n_(g.order()), words_(g.words()), leave_(g) {}

    bool run(std::vector<Triple>& out, std::uint64_t& nodes) {
        ++nodes;
        if (leave_.edge_count() == 0) {
            out = chosen_;
            return true;
        }
        // Most constrained uncovered edge: fewest common leave neighbours.
        Edge best;
        int best_count = n_ + 1;
        std::vector<std::uint64_t> mask(words_);
        for (Vertex x = 0; x < n_ && best_count > 0; ++x) {
            const std::uint64_t* rx = leave_.row(x);
            for_each_bit(rx, words_, [&](int y) {
                if (y <= x || best_count == 0) return;
                const std::uint64_t* ry = leave_.row(y);
                int c = 0;
                for (int i = 0; i < words_; ++i) c += std::popcount(rx[i] & ry[i]);
                if (c < best_count) {
                    best_count = c;
                    best = Edge(x, y);
                }
            });
        }
        if (best_count == 0) return false;
        const std::uint64_t* rx = leave_.row(best.x);
        const std::uint64_t* ry = leave_.row(best.y);
        for (int i = 0; i < words_; ++i) mask[i] = rx[i] & ry[i];
        std::vector<Vertex> thirds;
        for_each_bit(mask.data(), words_, [&](int z) { thirds.push_back(z); });
        for (Vertex z : thirds) {
            const Triple t(best.x, best.y, z);
            for (const Edge& e : t.edges()) leave_.remove_edge(e.x, e.y);
            chosen_.push_back(t);
            if (run(out, nodes)) return true;
            chosen_.pop_back();
            for (const Edge& e : t.edges()) leave_.add_edge(e.x, e.y);
        }
        return false;
    }

private:
    int n_;
    int words_;
    Graph leave_;
    std::vector<Triple> chosen_;
};

bool admissible_order(int v) { return v % 6 == 1 || v % 6 == 3; }

// PSTS of order u with at most max_triples triples, triples in increasing
// order and fresh points always the smallest unused labels.
std::vector<Psts> canonical_small_systems(int u, int max_triples) {
    std::vector<Triple> all;
    for (Vertex a = 0; a < u; ++a)
        for (Vertex b = a + 1; b < u; ++b)
            for (Vertex c = b + 1; c < u; ++c) all.emplace_back(a, b, c);
    std::vector<Psts> out;
    std::vector<Triple> current;
    Graph covered(u);
    std::function<void(std::size_t, int)> grow = [&](std::size_t from, int used) {
        out.emplace_back(u, current);
        if (static_cast<int>(current.size()) == max_triples) return;
        for (std::size_t i = from; i < all.size(); ++i) {
            const Triple& t = all[i];
            int next = used;
            bool ok = true;
            for (Vertex x : t.v) {
                if (x < used) continue;
                if (x != next) {
                    ok = false;
                    break;
                }
                ++next;
            }
            if (!ok) continue;
            bool free = true;
            for (const Edge& e : t.edges())
                if (covered.has_edge(e.x, e.y)) free = false;
            if (!free) continue;
            for (const Edge& e : t.edges()) covered.add_edge(e.x, e.y);
            current.push_back(t);
            grow(i + 1, next);
            current.pop_back();
            for (const Edge& e : t.edges()) covered.remove_edge(e.x, e.y);
        }
    };
    grow(0, 0);
    return out;
}

void check_evans_order(int u) {
    if (u > 13) throw PreconditionError("evans_check is exhaustive and limited to u <= 13");
    if (!admissible_order(u)) throw PreconditionError("u must be congruent to 1 or 3 mod 6");
}

}  // namespace

ExhaustiveResult exhaustive_complete(const Graph& g, std::size_t edge_limit) {
    if (g.edge_count() > edge_limit)
        throw PreconditionError("exhaustive search limited to " + std::to_string(edge_limit) + " edges, graph has " +
                                std::to_string(g.edge_count()));
    ExhaustiveResult r;
    if (!decomposition_counts_ok(g)) return r;
    Backtracker bt(g);
    if (bt.run(r.triangles, r.nodes)) {
        r.status = ExhaustiveStatus::Found;
        std::sort(r.triangles.begin(), r.triangles.end());
    }
    return r;
}

SpectrumResult embedding_spectrum(const Psts& p, int v_max, SpectrumMode mode, std::uint64_t seed) {
    const int u = p.order();
    if (mode == SpectrumMode::Exhaustive && (u > 9 || v_max > 15))
        throw PreconditionError("exhaustive spectrum limited to u <= 9 and v_max <= 15");
    SpectrumResult r;
    r.exact = mode == SpectrumMode::Exhaustive;
    const Graph leave = leave_of(p);
    for (int v = std::max(u, 1); v <= v_max; ++v) {
        if (!admissible_order(v)) continue;
        const Graph host = leave.join(v - u);
        if (mode == SpectrumMode::Exhaustive) {
            if (exhaustive_complete(host, host.edge_count()).status == ExhaustiveStatus::Found) r.orders.push_back(v);
        } else {
            CompletionConfig cfg;
            cfg.seed = derive_seed(seed, static_cast<std::uint64_t>(v));
            try {
                complete_with_restarts(host, {}, cfg);
                r.orders.push_back(v);
            } catch (const BudgetExhausted&) {
            }
        }
    }
    return r;
}

std::vector<Psts> evans_check_serial(int u) {
    check_evans_order(u);
    const int limit = (u - 1) / 2 - 1;
    std::vector<Psts> out;
    for (const Psts& p : canonical_small_systems(u, limit)) {
        const Graph leave = leave_of(p);
        if (exhaustive_complete(leave, leave.edge_count()).status != ExhaustiveStatus::Found) out.push_back(p);
    }
    return out;
}

std::vector<Psts> evans_check(int u, int threads) {
    check_evans_order(u);
    const int limit = (u - 1) / 2 - 1;
    const auto candidates = canonical_small_systems(u, limit);
    std::vector<char> fails(candidates.size(), 0);
    const long long count = static_cast<long long>(candidates.size());
    const int nthreads = resolve_threads(threads);
#pragma omp parallel for num_threads(nthreads) schedule(dynamic, 4)
    for (long long i = 0; i < count; ++i) {
        const Graph leave = leave_of(candidates[i]);
        fails[i] = exhaustive_complete(leave, leave.edge_count()).status != ExhaustiveStatus::Found;
    }
    std::vector<Psts> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (fails[i]) out.push_back(candidates[i]);
    return out;
}

std::optional<Correspondence> find_correspondence(const CyclePacking& p, const CyclePacking& q, const VertexSet& s) {
    if (p.size() > 8 || q.size() > 8) throw PreconditionError("correspondence search limited to 8 cycles");
    if (p.size() != q.size() || p.has_vacancies() || q.has_vacancies()) return std::nullopt;
    const std::size_t m = p.size();
    std::vector<std::vector<char>> agree(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) agree[i][j] = cycles_agree_on(p.cycle(i), q.cycle(j), s);
    Correspondence c;
    c.pairing.assign(m, 0);
    std::vector<char> taken(m, 0);
    std::function<bool(std::size_t)> assign = [&](std::size_t i) {
        if (i == m) return true;
        for (std::size_t j = 0; j < m; ++j) {
            if (taken[j] || !agree[i][j]) continue;
            taken[j] = 1;
            c.pairing[i] = j;
            if (assign(i + 1)) return true;
            taken[j] = 0;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return c;
}

}  // namespace stse
