#pragma once

// Seeded random instance generators shared by the property tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "posetcm/perm.hpp"
#include "posetcm/poset.hpp"

namespace posetcm::testing {

inline Permutation random_permutation(std::mt19937& rng, int n) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    std::shuffle(word.begin(), word.end(), rng);
    return Permutation(std::move(word));
}

/// Random poset: random pairs oriented along a random total order (so the
/// cover list is acyclic by construction), then transitively closed.
inline Poset random_poset(std::mt19937& rng, int n, double pair_prob = 0.3) {
    const Permutation order = random_permutation(rng, n);
    std::bernoulli_distribution flip(pair_prob);
    std::vector<std::pair<int, int>> covers;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            if (x != y && order.precedes(x, y) && flip(rng))
                covers.emplace_back(x, y);
    return Poset::from_covers(n, covers);
}

/// Random pure poset of arbitrary dimension: elements are split into layers
/// and covers run only between consecutive layers, with every element of a
/// layer attached both downward and upward. All maximal chains then cross
/// every layer exactly once, so the result is pure with rank = #layers - 1.
inline Poset random_pure_poset(std::mt19937& rng, int n) {
    std::vector<int> elems(static_cast<std::size_t>(n));
    std::iota(elems.begin(), elems.end(), 1);
    std::shuffle(elems.begin(), elems.end(), rng);

    const int layer_count = std::uniform_int_distribution<int>(1, n)(rng);
    std::vector<std::vector<int>> layers(static_cast<std::size_t>(layer_count));
    for (int i = 0; i < layer_count; ++i)  // each layer nonempty
        layers[static_cast<std::size_t>(i)].push_back(elems[static_cast<std::size_t>(i)]);
    for (int i = layer_count; i < n; ++i) {
        const int at = std::uniform_int_distribution<int>(0, layer_count - 1)(rng);
        layers[static_cast<std::size_t>(at)].push_back(elems[static_cast<std::size_t>(i)]);
    }

    std::bernoulli_distribution extra(0.4);
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < layer_count; ++i) {
        const auto& lower = layers[static_cast<std::size_t>(i)];
        const auto& upper = layers[static_cast<std::size_t>(i + 1)];
        std::vector<char> lower_used(lower.size(), 0), upper_used(upper.size(), 0);
        for (std::size_t a = 0; a < lower.size(); ++a)
            for (std::size_t b = 0; b < upper.size(); ++b)
                if (extra(rng)) {
                    covers.emplace_back(lower[a], upper[b]);
                    lower_used[a] = upper_used[b] = 1;
                }
        for (std::size_t a = 0; a < lower.size(); ++a)
            if (!lower_used[a]) {
                const std::size_t b = std::uniform_int_distribution<std::size_t>(0, upper.size() - 1)(rng);
                covers.emplace_back(lower[a], upper[b]);
                upper_used[b] = 1;
            }
        for (std::size_t b = 0; b < upper.size(); ++b)
            if (!upper_used[b]) {
                const std::size_t a = std::uniform_int_distribution<std::size_t>(0, lower.size() - 1)(rng);
                covers.emplace_back(lower[a], upper[b]);
            }
    }
    return Poset::from_covers(n, covers);
}

}  // namespace posetcm::testing
