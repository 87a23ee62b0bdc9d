#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "posetcm/poset.hpp"

namespace posetcm {

/// Elements covering x together with the extremes of that set under the layer
/// order. Within a height layer the layer order reverses the numeric one
/// (x before y iff x > y as integers), so the layer-order minimum is the
/// numerically largest cover and the maximum the numerically smallest. The
/// extremes are meaningful for pure posets, where all covers of x share a layer.
struct UpperCovers {
    std::vector<int> elements;  // ascending numeric order
    std::optional<int> layer_min;
    std::optional<int> layer_max;
};

inline UpperCovers upper_covers(const Poset& p, int x) {
    UpperCovers u;
    u.elements = elements_covering(p, x);
    if (!u.elements.empty()) {
        u.layer_min = u.elements.back();
        u.layer_max = u.elements.front();
    }
    return u;
}

/// Compares two equal-length maximal chains of a pure poset: look at the
/// highest index where they differ and order by the layer order there, i.e.
/// the chain with the numerically larger entry comes first.
inline std::strong_ordering compare_chains(const Chain& a, const Chain& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("compare_chains: chains of unequal length (non-pure input)");
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] == b[i])
            continue;
        return a[i] > b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

/// An ordered facet list with its verification certificate.
struct ChainOrder {
    std::vector<Chain> chains;
    bool verified = false;
    std::optional<std::pair<int, int>> first_violation;  // (i, j) indices, j < i
};

/// Checks the shelling condition on an ordered facet list: for every j < i
/// there must be a v in facet_i \ facet_j and some k < i with
/// facet_i \ facet_k = {v}. Facets must be pairwise distinct and non-nested.
/// On failure reports the lexicographically first violating pair (i, j).
inline std::pair<bool, std::optional<std::pair<int, int>>> verify_shelling(
    const std::vector<Face>& ordered_facets) {
    std::vector<Face> fs = ordered_facets;
    for (auto& f : fs) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    const int m = static_cast<int>(fs.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j)
                continue;
            if (std::includes(fs[static_cast<std::size_t>(i)].begin(), fs[static_cast<std::size_t>(i)].end(),
                              fs[static_cast<std::size_t>(j)].begin(), fs[static_cast<std::size_t>(j)].end()))
                throw std::invalid_argument("verify_shelling: duplicate or nested facets");
        }

    for (int i = 1; i < m; ++i) {
        // elements v witnessed by some earlier facet k with facet_i \ facet_k = {v}
        std::vector<int> singleton_diffs;
        for (int k = 0; k < i; ++k) {
            Face diff;
            std::set_difference(fs[static_cast<std::size_t>(i)].begin(), fs[static_cast<std::size_t>(i)].end(),
                                fs[static_cast<std::size_t>(k)].begin(), fs[static_cast<std::size_t>(k)].end(),
                                std::back_inserter(diff));
            if (diff.size() == 1)
                singleton_diffs.push_back(diff.front());
        }
        std::sort(singleton_diffs.begin(), singleton_diffs.end());
        for (int j = 0; j < i; ++j) {
            Face diff;
            std::set_difference(fs[static_cast<std::size_t>(i)].begin(), fs[static_cast<std::size_t>(i)].end(),
                                fs[static_cast<std::size_t>(j)].begin(), fs[static_cast<std::size_t>(j)].end(),
                                std::back_inserter(diff));
            bool witnessed = false;
            for (int v : diff)
                if (std::binary_search(singleton_diffs.begin(), singleton_diffs.end(), v)) {
                    witnessed = true;
                    break;
                }
            if (!witnessed)
                return {false, std::make_pair(i, j)};
        }
    }
    return {true, std::nullopt};
}

namespace detail {

/// True iff the poset is an intersection of the identity order with a single
/// permutation. Equivalently: every relation ascends numerically, and the
/// tournament that keeps the poset's arcs and points each incomparable pair
/// from its larger element to its smaller one is acyclic. When it is, its
/// unique topological order is that permutation.
inline std::optional<Permutation> single_permutation_form(const Poset& p) {
    const int n = p.size();
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y < x; ++y)
            if (p.less(x, y))
                return std::nullopt;  // a relation descends numerically

    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    auto arc = [&](int a, int b) {  // a -> b in the tournament
        return p.less(a, b) || (!p.comparable(a, b) && a > b);
    };
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            if (x != y && arc(y, x))
                ++indegree[static_cast<std::size_t>(x - 1)];

    std::vector<int> word;
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int source = 0;
        for (int x = 1; x <= n; ++x)
            if (!placed[static_cast<std::size_t>(x - 1)] && indegree[static_cast<std::size_t>(x - 1)] == 0) {
                source = x;
                break;
            }
        if (source == 0)
            return std::nullopt;  // cycle
        placed[static_cast<std::size_t>(source - 1)] = 1;
        word.push_back(source);
        for (int y = 1; y <= n; ++y)
            if (!placed[static_cast<std::size_t>(y - 1)] && arc(source, y))
                --indegree[static_cast<std::size_t>(y - 1)];
    }
    Permutation pi(std::move(word));
    if (poset_of_permutation(pi) != p)
        return std::nullopt;
    return pi;
}

}  // namespace detail

/// Constructive shelling order for a poset that is the intersection of the
/// identity with one permutation and whose consecutive height layers are
/// connected: sort the maximal chains by compare_chains. The result is
/// verified before it is returned. Posets in a different labeling must be
/// normalized through their realizer first (see normalize_realizer).
inline ChainOrder shelling_order(const Poset& p) {
    if (!detail::single_permutation_form(p))
        throw std::invalid_argument(
            "shelling_order: poset is not an identity/permutation intersection "
            "(dimension >= 3, or the realizer was not normalized)");
    const HeightProfile hp = height_profile(p);
    if (!p.is_antichain()) {
        if (!hp.pure)
            throw std::invalid_argument("shelling_order: poset is not pure");
        for (int i = 0; i + 1 <= hp.rank; ++i) {
            std::vector<int> both = hp.layers[static_cast<std::size_t>(i)];
            both.insert(both.end(), hp.layers[static_cast<std::size_t>(i + 1)].begin(),
                        hp.layers[static_cast<std::size_t>(i + 1)].end());
            if (connected_components(induced_subposet(p, both).poset).size() > 1)
                throw std::invalid_argument("shelling_order: consecutive height layers disconnected");
        }
    }

    ChainOrder order;
    order.chains = maximal_chains(p);
    std::sort(order.chains.begin(), order.chains.end(),
              [](const Chain& a, const Chain& b) { return compare_chains(a, b) < 0; });

    std::vector<Face> facets;
    for (auto chain : order.chains) {
        std::sort(chain.begin(), chain.end());
        facets.push_back(std::move(chain));
    }
    auto [ok, violation] = verify_shelling(facets);
    order.verified = ok;
    order.first_violation = violation;
    return order;
}

/// Exhaustive search for some shelling order of a small facet list; absent if
/// none exists. Prefix feasibility is monotone, so the search prunes as soon
/// as a newly placed facet violates the condition against its predecessors.
inline std::optional<std::vector<Face>> brute_force_shelling(const std::vector<Face>& facets) {
    constexpr std::size_t max_facets = 9;
    if (facets.size() > max_facets)
        throw std::invalid_argument("brute_force_shelling: more than 9 facets");
    std::vector<Face> fs = facets;
    for (auto& f : fs)
        std::sort(f.begin(), f.end());
    // reuse the verifier's precondition screening
    verify_shelling(fs);

    const int m = static_cast<int>(fs.size());
    std::vector<int> order;
    std::vector<char> used(static_cast<std::size_t>(m), 0);

    auto placement_ok = [&](int candidate) {
        std::vector<int> singleton_diffs;
        for (int k : order) {
            Face diff;
            std::set_difference(fs[static_cast<std::size_t>(candidate)].begin(),
                                fs[static_cast<std::size_t>(candidate)].end(),
                                fs[static_cast<std::size_t>(k)].begin(), fs[static_cast<std::size_t>(k)].end(),
                                std::back_inserter(diff));
            if (diff.size() == 1)
                singleton_diffs.push_back(diff.front());
        }
        for (int j : order) {
            Face diff;
            std::set_difference(fs[static_cast<std::size_t>(candidate)].begin(),
                                fs[static_cast<std::size_t>(candidate)].end(),
                                fs[static_cast<std::size_t>(j)].begin(), fs[static_cast<std::size_t>(j)].end(),
                                std::back_inserter(diff));
            bool witnessed = false;
            for (int v : diff)
                if (std::find(singleton_diffs.begin(), singleton_diffs.end(), v) != singleton_diffs.end()) {
                    witnessed = true;
                    break;
                }
            if (!witnessed)
                return false;
        }
        return true;
    };

    std::function<bool()> search = [&]() -> bool {
        if (static_cast<int>(order.size()) == m)
            return true;
        for (int c = 0; c < m; ++c) {
            if (used[static_cast<std::size_t>(c)] || !placement_ok(c))
                continue;
            used[static_cast<std::size_t>(c)] = 1;
            order.push_back(c);
            if (search())
                return true;
            order.pop_back();
            used[static_cast<std::size_t>(c)] = 0;
        }
        return false;
    };

    if (!search())
        return std::nullopt;
    std::vector<Face> out;
    for (int idx : order)
        out.push_back(fs[static_cast<std::size_t>(idx)]);
    return out;
}

}  // namespace posetcm
