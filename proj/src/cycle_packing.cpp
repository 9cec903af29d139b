#include "stse/cycle_packing.hpp"

#include <algorithm>

#include "stse/errors.hpp"

namespace stse {

CyclePacking::CyclePacking(Graph host)
    : host_(std::move(host)),
      leave_(host_),
      owner_(static_cast<std::size_t>(host_.order()) * host_.order(), kLeave) {}

std::vector<Edge> cycle_edges(const Cycle& c) {
    std::vector<Edge> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out.emplace_back(c[i], c[(i + 1) % c.size()]);
    return out;
}

std::string CyclePacking::why_not_addable(const Cycle& c) const {
    if (c.size() < 3) return "cycle shorter than 3";
    std::vector<Vertex> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "cycle repeats a vertex";
    for (Vertex x : c)
        if (x < 0 || x >= host_.order()) return "cycle vertex out of range";
    for (const Edge& e : cycle_edges(c)) {
        if (!host_.has_edge(e.x, e.y)) return "cycle uses non-host edge " + to_string(e);
        if (!leave_.has_edge(e.x, e.y)) return "cycle reuses packed edge " + to_string(e);
    }
    return {};
}

void CyclePacking::set_owner(Vertex x, Vertex y, int slot) {
    const auto n = static_cast<std::size_t>(host_.order());
    owner_[static_cast<std::size_t>(x) * n + y] = slot;
    owner_[static_cast<std::size_t>(y) * n + x] = slot;
}

std::size_t CyclePacking::add(Cycle c) {
    if (auto why = why_not_addable(c); !why.empty()) throw PreconditionError(why);
    const std::size_t slot = cycles_.size();
    for (const Edge& e : cycle_edges(c)) {
        leave_.remove_edge(e.x, e.y);
        set_owner(e.x, e.y, static_cast<int>(slot));
    }
    cycles_.push_back(std::move(c));
    return slot;
}

void CyclePacking::erase(std::size_t slot) {
    if (slot >= cycles_.size() || cycles_[slot].empty()) throw PreconditionError("erasing a vacant slot");
    for (const Edge& e : cycle_edges(cycles_[slot])) {
        leave_.add_edge(e.x, e.y);
        set_owner(e.x, e.y, kLeave);
    }
    cycles_[slot].clear();
    ++vacancies_;
}

void CyclePacking::place(std::size_t slot, Cycle c) {
    if (slot >= cycles_.size() || !cycles_[slot].empty()) throw PreconditionError("placing into an occupied slot");
    if (auto why = why_not_addable(c); !why.empty()) throw PreconditionError(why);
    for (const Edge& e : cycle_edges(c)) {
        leave_.remove_edge(e.x, e.y);
        set_owner(e.x, e.y, static_cast<int>(slot));
    }
    cycles_[slot] = std::move(c);
    --vacancies_;
}

Correspondence Correspondence::identity(std::size_t n) {
    Correspondence c;
    c.pairing.resize(n);
    for (std::size_t i = 0; i < n; ++i) c.pairing[i] = i;
    return c;
}

namespace {

struct Footprint {
    std::size_t length = 0;
    std::vector<Vertex> members;
    std::vector<Edge> inner_edges;

    bool operator==(const Footprint&) const = default;
};

Footprint footprint(const Cycle& c, const std::vector<char>& in_s) {
    Footprint f;
    f.length = c.size();
    for (Vertex x : c)
        if (in_s[x]) f.members.push_back(x);
    for (const Edge& e : cycle_edges(c))
        if (in_s[e.x] && in_s[e.y]) f.inner_edges.push_back(e);
    std::sort(f.members.begin(), f.members.end());
    std::sort(f.inner_edges.begin(), f.inner_edges.end());
    return f;
}

}  // namespace

EquivalenceReport equivalent_on(const CyclePacking& p, const CyclePacking& q, const VertexSet& s,
                                const Correspondence& c) {
    EquivalenceReport r;
    if (p.host().order() != q.host().order()) {
        r.reason = "packings over different hosts";
        return r;
    }
    if (p.has_vacancies() || q.has_vacancies()) {
        r.reason = "packing has vacant slots";
        return r;
    }
    if (p.size() != q.size() || c.pairing.size() != p.size()) {
        r.reason = "cycle counts differ";
        return r;
    }
    std::vector<char> seen(q.size(), 0);
    for (std::size_t j : c.pairing) {
        if (j >= q.size() || seen[j]) {
            r.reason = "pairing is not a bijection";
            return r;
        }
        seen[j] = 1;
    }
    std::vector<char> in_s(p.host().order(), 0);
    for (Vertex x : s) in_s.at(x) = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Footprint a = footprint(p.cycle(i), in_s);
        const Footprint b = footprint(q.cycle(c.pairing[i]), in_s);
        if (a.length != b.length) {
            r.reason = "length mismatch at cycle " + std::to_string(i);
            r.cycle = i;
            return r;
        }
        if (a.members != b.members) {
            r.reason = "membership mismatch at cycle " + std::to_string(i);
            r.cycle = i;
            return r;
        }
        if (a.inner_edges != b.inner_edges) {
            r.reason = "inner edge mismatch at cycle " + std::to_string(i);
            r.cycle = i;
            return r;
        }
    }
    r.ok = true;
    return r;
}

bool cycles_agree_on(const Cycle& a, const Cycle& b, const VertexSet& s) {
    Vertex top = 0;
    for (Vertex x : a) top = std::max(top, x);
    for (Vertex x : b) top = std::max(top, x);
    for (Vertex x : s) top = std::max(top, x);
    std::vector<char> in_s(static_cast<std::size_t>(top) + 1, 0);
    for (Vertex x : s) in_s[x] = 1;
    return footprint(a, in_s) == footprint(b, in_s);
}

bool leave_parity_holds(const CyclePacking& p) {
    for (Vertex x = 0; x < p.order(); ++x)
        if ((p.leave().degree(x) - p.host().degree(x)) % 2 != 0) return false;
    return true;
}

}  // namespace stse
