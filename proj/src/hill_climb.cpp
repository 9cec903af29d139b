#include <algorithm>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stse/completion.hpp"
#include "stse/errors.hpp"
#include "stse/rng.hpp"

namespace stse {

namespace {

// Index of the k-th set bit (0-based) of a word block.
int nth_set_bit(const std::uint64_t* mask, int words, int k) {
    for (int i = 0; i < words; ++i) {
        const int c = std::popcount(mask[i]);
        if (k < c) {
            std::uint64_t w = mask[i];
            for (int j = 0; j < k; ++j) w &= w - 1;
            return i * 64 + std::countr_zero(w);
        }
        k -= c;
    }
    return -1;
}

class HillClimber {
public:
    explicit HillClimber(const Graph& g)
        : g_(g),
          n_(g.order()),
          words_(g.words()),
          leave_(static_cast<std::size_t>(n_) * words_, 0),
          mask_(words_, 0),
          owner_(static_cast<std::size_t>(n_) * n_, -1),
          slot_(static_cast<std::size_t>(n_) * n_, -1) {
        for (const Edge& e : g.edges()) uncover(e.x, e.y);
    }

    void place_warm(const std::vector<Triple>& warm) {
        for (const Triple& t : warm) {
            for (const Edge& e : t.edges())
                if (!g_.has_edge(e.x, e.y) || owner(e.x, e.y) >= 0)
                    throw PreconditionError("warm start triangle " + to_string(t) + " does not fit");
            add(t);
        }
    }

    std::size_t uncovered() const { return open_.size(); }

    // One proposal. Returns false if some uncovered edge lies in no host
    // triangle at all, so no decomposition exists.
    bool step(Rng& rng) {
        // Pivot at an endpoint p of an uncovered edge pq: a second uncovered
        // edge pr with qr in the host. Edges where neither end can pivot are
        // redrawn a few times before falling back.
        Vertex p = -1;
        Vertex q = -1;
        for (int draw = 0; draw < kDraws; ++draw) {
            const Edge e = open_[rng.below(open_.size())];
            const bool flip = rng.coin();
            p = flip ? e.y : e.x;
            q = flip ? e.x : e.y;
            for (int side = 0; side < 2; ++side) {
                if (const int count = pivot_mask(p, q); count > 0) {
                    const Vertex r = nth_set_bit(mask_.data(), words_, static_cast<int>(rng.below(count)));
                    if (const int t = owner(q, r); t >= 0) remove(t);
                    add(Triple(p, q, r));
                    return true;
                }
                std::swap(p, q);
            }
        }
        int count = 0;
        const std::uint64_t* hp = g_.row(p);
        const std::uint64_t* hq = g_.row(q);
        for (int i = 0; i < words_; ++i) {
            mask_[i] = hp[i] & hq[i];
            count += std::popcount(mask_[i]);
        }
        if (count == 0) return false;
        const Vertex z = nth_set_bit(mask_.data(), words_, static_cast<int>(rng.below(count)));
        if (const int t = owner(p, z); t >= 0) remove(t);
        if (const int t = owner(q, z); t >= 0) remove(t);
        add(Triple(p, q, z));
        return true;
    }

    std::vector<Triple> triangles() const {
        std::vector<Triple> out;
        for (std::size_t i = 0; i < tris_.size(); ++i)
            if (alive_[i]) out.push_back(tris_[i]);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static constexpr int kDraws = 8;

    int pivot_mask(Vertex p, Vertex q) {
        int count = 0;
        const std::uint64_t* lp = leave_row(p);
        const std::uint64_t* hq = g_.row(q);
        for (int i = 0; i < words_; ++i) {
            mask_[i] = lp[i] & hq[i];
            count += std::popcount(mask_[i]);
        }
        return count;
    }

    std::size_t idx(Vertex x, Vertex y) const { return static_cast<std::size_t>(x) * n_ + y; }
    const std::uint64_t* leave_row(Vertex x) const { return leave_.data() + static_cast<std::size_t>(x) * words_; }
    int owner(Vertex x, Vertex y) const { return owner_[idx(x, y)]; }

    void set_leave_bit(Vertex x, Vertex y, bool on) {
        std::uint64_t& wx = leave_[static_cast<std::size_t>(x) * words_ + (y >> 6)];
        std::uint64_t& wy = leave_[static_cast<std::size_t>(y) * words_ + (x >> 6)];
        const std::uint64_t bx = std::uint64_t{1} << (y & 63);
        const std::uint64_t by = std::uint64_t{1} << (x & 63);
        if (on) {
            wx |= bx;
            wy |= by;
        } else {
            wx &= ~bx;
            wy &= ~by;
        }
    }

    void uncover(Vertex x, Vertex y) {
        set_leave_bit(x, y, true);
        slot_[idx(x, y)] = slot_[idx(y, x)] = static_cast<int>(open_.size());
        open_.emplace_back(x, y);
    }

    void cover(Vertex x, Vertex y, int t) {
        set_leave_bit(x, y, false);
        const int s = slot_[idx(x, y)];
        const Edge last = open_.back();
        open_[s] = last;
        slot_[idx(last.x, last.y)] = slot_[idx(last.y, last.x)] = s;
        open_.pop_back();
        slot_[idx(x, y)] = slot_[idx(y, x)] = -1;
        owner_[idx(x, y)] = owner_[idx(y, x)] = t;
    }

    void add(const Triple& t) {
        int id;
        if (!free_.empty()) {
            id = free_.back();
            free_.pop_back();
            tris_[id] = t;
            alive_[id] = 1;
        } else {
            id = static_cast<int>(tris_.size());
            tris_.push_back(t);
            alive_.push_back(1);
        }
        for (const Edge& e : t.edges()) cover(e.x, e.y, id);
    }

    void remove(int id) {
        for (const Edge& e : tris_[id].edges()) {
            owner_[idx(e.x, e.y)] = owner_[idx(e.y, e.x)] = -1;
            uncover(e.x, e.y);
        }
        alive_[id] = 0;
        free_.push_back(id);
    }

    const Graph& g_;
    int n_;
    int words_;
    std::vector<std::uint64_t> leave_;
    std::vector<std::uint64_t> mask_;
    std::vector<int> owner_;
    std::vector<int> slot_;
    std::vector<Edge> open_;
    std::vector<Triple> tris_;
    std::vector<char> alive_;
    std::vector<int> free_;
};

std::uint64_t effective_budget(const Graph& g, std::uint64_t budget) {
    return budget != 0 ? budget : 200 * static_cast<std::uint64_t>(g.edge_count());
}

BudgetExhausted exhausted(const CompletionConfig& cfg, std::uint64_t budget) {
    return BudgetExhausted("no restart of " + std::to_string(cfg.restarts) + " reached " +
                           std::to_string(cfg.target_uncovered) + " uncovered edges within " + std::to_string(budget) +
                           " proposals");
}

}  // namespace

bool decomposition_counts_ok(const Graph& g) {
    if (g.edge_count() % 3 != 0) return false;
    for (Vertex x = 0; x < g.order(); ++x)
        if (g.degree(x) % 2 != 0) return false;
    return true;
}

std::optional<CompletionResult> hill_climb_run(const Graph& g, const std::vector<Triple>& warm, std::uint64_t seed,
                                               std::uint64_t budget, std::size_t target_uncovered) {
    HillClimber hc(g);
    hc.place_warm(warm);
    Rng rng(seed);
    CompletionResult r;
    while (hc.uncovered() > target_uncovered) {
        if (r.proposals == budget) return std::nullopt;
        ++r.proposals;
        if (!hc.step(rng)) return std::nullopt;
    }
    r.triangles = hc.triangles();
    r.uncovered = hc.uncovered();
    return r;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    int cap = 0;
    if (const char* env = std::getenv("STSE_THREADS")) cap = std::atoi(env);
#ifdef _OPENMP
    const int hw = omp_get_max_threads();
#else
    const int hw = 1;
#endif
    return cap > 0 ? std::min(cap, hw) : hw;
}

CompletionResult complete_with_restarts_serial(const Graph& g, const std::vector<Triple>& warm,
                                               const CompletionConfig& cfg) {
    const std::uint64_t budget = effective_budget(g, cfg.budget);
    for (int i = 0; i < cfg.restarts; ++i) {
        auto r = hill_climb_run(g, warm, derive_seed(cfg.seed, static_cast<std::uint64_t>(i)), budget,
                                cfg.target_uncovered);
        if (r) {
            r->restart = i;
            return *r;
        }
    }
    throw exhausted(cfg, budget);
}

CompletionResult complete_with_restarts(const Graph& g, const std::vector<Triple>& warm, const CompletionConfig& cfg) {
    const std::uint64_t budget = effective_budget(g, cfg.budget);
    const int threads = resolve_threads(cfg.threads);
    if (threads <= 1) return complete_with_restarts_serial(g, warm, cfg);
    // Waves of `threads` restarts; the lowest successful index in the first
    // wave with any success is also what the serial loop would return.
    for (int base = 0; base < cfg.restarts; base += threads) {
        const int wave = std::min(threads, cfg.restarts - base);
        std::vector<std::optional<CompletionResult>> results(wave);
        bool bad_warm = false;
#pragma omp parallel for num_threads(wave) schedule(static, 1)
        for (int j = 0; j < wave; ++j) {
            try {
                results[j] = hill_climb_run(g, warm, derive_seed(cfg.seed, static_cast<std::uint64_t>(base + j)),
                                            budget, cfg.target_uncovered);
            } catch (const PreconditionError&) {
#pragma omp atomic write
                bad_warm = true;
            }
        }
        if (bad_warm) return complete_with_restarts_serial(g, warm, cfg);
        for (int j = 0; j < wave; ++j) {
            if (results[j]) {
                results[j]->restart = base + j;
                return *results[j];
            }
        }
    }
    throw exhausted(cfg, budget);
}

std::vector<Triple> hill_climb_complete(const Graph& g, const CompletionConfig& cfg) {
    if (!decomposition_counts_ok(g))
        throw PreconditionError("graph has an odd-degree vertex or |E| not divisible by 3");
    CompletionConfig c = cfg;
    c.target_uncovered = 0;
    return complete_with_restarts(g, {}, c).triangles;
}

}  // namespace stse
