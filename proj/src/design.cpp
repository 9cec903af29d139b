#include "stse/design.hpp"

#include <algorithm>
#include <sstream>

#include "stse/errors.hpp"

namespace stse {

Psts::Psts(int order, std::vector<Triple> triples) : order_(order), triples_(std::move(triples)) {
    if (order < 0) throw PreconditionError("order must be nonnegative");
    Graph covered(order);
    for (const Triple& t : triples_) {
        for (Vertex x : t.v) {
            if (x < 0 || x >= order)
                throw PreconditionError("point " + std::to_string(x) + " out of range in " + to_string(t));
        }
        if (t.v[0] == t.v[1] || t.v[1] == t.v[2])
            throw PreconditionError("degenerate triple " + to_string(t));
        for (const Edge& e : t.edges()) {
            if (!covered.add_edge(e.x, e.y))
                throw PreconditionError("pair " + to_string(e) + " covered twice");
        }
    }
    std::sort(triples_.begin(), triples_.end());
}

bool Psts::is_complete() const {
    return 3 * triples_.size() == static_cast<std::size_t>(order_) * (order_ - 1) / 2;
}

bool Psts::contains_all(const Psts& other) const {
    return std::includes(triples_.begin(), triples_.end(), other.triples_.begin(), other.triples_.end());
}

Graph leave_of(const Psts& p) {
    Graph g = Graph::complete(p.order());
    for (const Triple& t : p.triples())
        for (const Edge& e : t.edges()) g.remove_edge(e.x, e.y);
    return g;
}

std::string AdmissibilityReport::describe() const {
    if (admissible) return "admissible";
    std::ostringstream os;
    os << "inadmissible:";
    for (auto f : failures) {
        switch (f) {
            case AdmissibilityFailure::OrderParity: os << " order-parity(u+w even)"; break;
            case AdmissibilityFailure::DegreeParity: os << " degree-parity"; break;
            case AdmissibilityFailure::EdgeCount: os << " edge-count-mod-3"; break;
        }
    }
    return os.str();
}

AdmissibilityReport is_admissible(const Graph& leave, int w) {
    if (w < 0) throw PreconditionError("w must be nonnegative");
    const long long u = leave.order();
    AdmissibilityReport r;
    if ((u + w) % 2 == 0) r.failures.push_back(AdmissibilityFailure::OrderParity);
    for (Vertex x = 0; x < leave.order(); ++x) {
        if ((leave.degree(x) - (u + 1)) % 2 != 0) {
            r.failures.push_back(AdmissibilityFailure::DegreeParity);
            break;
        }
    }
    const long long total = static_cast<long long>(leave.edge_count()) + u * w + static_cast<long long>(w) * (w - 1) / 2;
    if (total % 3 != 0) r.failures.push_back(AdmissibilityFailure::EdgeCount);
    r.admissible = r.failures.empty();
    return r;
}

namespace {

// Edge-use counts as a dense matrix; shared by the serial and parallel checks.
DecompositionReport summarize(const Graph& host, const std::vector<int>& uses, const std::string& bad_triple) {
    const int n = host.order();
    DecompositionReport r;
    r.first_violation = bad_triple;
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            const int c = uses[static_cast<std::size_t>(x) * n + y];
            if (host.has_edge(x, y)) {
                if (c == 0) {
                    ++r.uncovered;
                    if (r.first_violation.empty()) r.first_violation = "uncovered edge " + to_string(Edge(x, y));
                } else if (c > 1) {
                    ++r.doubly_covered;
                    if (r.first_violation.empty()) r.first_violation = "edge covered twice " + to_string(Edge(x, y));
                }
            }
        }
    }
    r.ok = r.first_violation.empty();
    return r;
}

std::string check_triple(const Graph& host, const Triple& t) {
    for (Vertex x : t.v)
        if (x < 0 || x >= host.order()) return "triple out of range " + to_string(t);
    if (t.v[0] == t.v[1] || t.v[1] == t.v[2]) return "degenerate triple " + to_string(t);
    for (const Edge& e : t.edges())
        if (!host.has_edge(e.x, e.y)) return "triple " + to_string(t) + " uses non-edge " + to_string(e);
    return {};
}

}  // namespace

DecompositionReport verify_triangle_decomposition(const Graph& host, std::span<const Triple> triangles) {
    const int n = host.order();
    std::vector<int> uses(static_cast<std::size_t>(n) * n, 0);
    for (const Triple& t : triangles) {
        if (auto bad = check_triple(host, t); !bad.empty()) return summarize(host, uses, bad);
        for (const Edge& e : t.edges()) ++uses[static_cast<std::size_t>(e.x) * n + e.y];
    }
    return summarize(host, uses, {});
}

DecompositionReport verify_triangle_decomposition_parallel(const Graph& host, std::span<const Triple> triangles) {
    const int n = host.order();
    const auto count = static_cast<long long>(triangles.size());
    std::vector<int> uses(static_cast<std::size_t>(n) * n, 0);
    long long first_bad = count;
#pragma omp parallel for reduction(min : first_bad)
    for (long long i = 0; i < count; ++i) {
        const Triple& t = triangles[static_cast<std::size_t>(i)];
        if (!check_triple(host, t).empty()) {
            first_bad = std::min(first_bad, i);
            continue;
        }
        for (const Edge& e : t.edges()) {
#pragma omp atomic
            ++uses[static_cast<std::size_t>(e.x) * n + e.y];
        }
    }
    if (first_bad < count) {
        // Match the serial report: it stops counting at the first bad triple.
        return verify_triangle_decomposition(host, triangles);
    }
    return summarize(host, uses, {});
}

int lower_bound_independent_nbhd(const Graph& leave) {
    int best = 0;
    for (Vertex a = 0; a < leave.order(); ++a) {
        const auto nb = leave.neighbors(a);
        bool independent = true;
        for (std::size_t i = 0; i < nb.size() && independent; ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (leave.has_edge(nb[i], nb[j])) {
                    independent = false;
                    break;
                }
        if (independent) best = std::max(best, static_cast<int>(nb.size()));
    }
    return best;
}

NecessaryConditionsReport necessary_conditions(const Graph& leave, int w) {
    NecessaryConditionsReport r;
    r.admissibility = is_admissible(leave, w);
    r.independent_bound = lower_bound_independent_nbhd(leave);
    if (!r.admissibility.admissible) {
        r.verdict = Necessity::Fail;
        r.reason = r.admissibility.describe();
    } else if (r.independent_bound > w) {
        r.verdict = Necessity::Fail;
        r.reason = "a vertex with independent leave-neighbourhood has degree " + std::to_string(r.independent_bound) +
                   " > w = " + std::to_string(w);
    } else {
        r.verdict = Necessity::PassNecessary;
        r.reason = "admissible; independent-neighbourhood bound " + std::to_string(r.independent_bound) +
                   " <= w; subgraph condition not decided";
    }
    return r;
}

}  // namespace stse
