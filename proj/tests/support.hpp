#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "radsq/quiver.hpp"

namespace radsq::testing {

using Adj = std::vector<std::vector<unsigned>>;

inline Quiver random_connected_quiver(std::mt19937_64& rng, std::size_t n, unsigned max_mult) {
    std::uniform_int_distribution<unsigned> entry(0, max_mult);
    for (;;) {
        std::vector<std::vector<unsigned>> adj(n, std::vector<unsigned>(n));
        for (auto& row : adj)
            for (auto& x : row)
                x = entry(rng);
        Quiver q(adj);
        if (is_connected(q))
            return q;
    }
}

inline Quiver relabel(const Quiver& q, const std::vector<Vertex>& perm) {
    const std::size_t n = q.size();
    std::vector<std::vector<unsigned>> adj(n, std::vector<unsigned>(n));
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            adj[perm[i]][perm[j]] = q.arrows(i, j);
    return Quiver(adj);
}

inline std::vector<std::vector<Vertex>> all_permutations(std::size_t n) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    std::vector<std::vector<Vertex>> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace radsq::testing
