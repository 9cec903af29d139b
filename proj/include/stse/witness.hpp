#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "stse/design.hpp"

namespace stse {

/// Certificate that every embedding has order at least u + w: a leave vertex
/// whose neighbourhood has w vertices and spans no leave edge.
struct WitnessReport {
    int u = 0;
    int w = 0;
    Vertex a = -1;
    VertexSet neighbourhood;
    bool independent = false;
    int min_embedding_order = 0;
    std::size_t triples = 0;
    std::size_t expected_triples = 0;
};

/// (3u + w² - 4w - 3)/6, (3u + w² - 4w + 13)/6, (3u + w² - 2w - 3)/6 or
/// (3u + w² - 2w + 1)/6 for w ≡ {1,3}, 5, {0,2}, 4 (mod 6).
std::size_t witness_triple_count(int u, int w);

/// PSTS of order u with a = 0, S = {1..w} an independent leave
/// neighbourhood of a. Requires u + w odd and 1 ≤ w ≤ u - 5.
std::pair<Psts, WitnessReport> no_embed_witness(int u, int w, std::uint64_t seed = 0);

/// Smallest w with (w+1)² > 6t - 3u and u + w odd.
int lb_witness_parameter(int u, long long t);

/// Witness with at most t triples and no embedding of order below u + w.
/// Requires (u+1)/2 ≤ t < (u² - 5u + 16)/6.
std::pair<Psts, WitnessReport> lb_witness(int u, long long t, std::uint64_t seed = 0);

}  // namespace stse
