#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "posetcm/cm.hpp"
#include "posetcm/shelling.hpp"

#include "generators.hpp"
#include "oracles.hpp"

using namespace posetcm;
namespace oracle = posetcm::testing;

namespace {

Poset example5() { return poset_of_permutation(Permutation({2, 1, 3, 5, 4})); }

Poset example8() {
    return Poset::from_covers(
        8, {{3, 4}, {2, 4}, {2, 5}, {3, 5}, {1, 6}, {3, 6}, {4, 7}, {6, 7}, {5, 8}, {6, 8}});
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        fn(Permutation(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace

TEST_CASE("upper covers and their layer-order extremes") {
    const Poset p = example5();
    SECTION("two covers") {
        const UpperCovers u = upper_covers(p, 3);
        REQUIRE(u.elements == std::vector<int>{4, 5});
        REQUIRE(u.layer_min == 5);  // the layer order reverses the numeric one
        REQUIRE(u.layer_max == 4);
    }
    SECTION("single cover") {
        const UpperCovers u = upper_covers(p, 1);
        REQUIRE(u.elements == std::vector<int>{3});
        REQUIRE(u.layer_min == 3);
        REQUIRE(u.layer_max == 3);
    }
    SECTION("maximal element") {
        const UpperCovers u = upper_covers(p, 4);
        REQUIRE(u.elements.empty());
        REQUIRE_FALSE(u.layer_min.has_value());
        REQUIRE_FALSE(u.layer_max.has_value());
    }
    SECTION("out of range") {
        REQUIRE_THROWS_AS(upper_covers(p, 6), std::invalid_argument);
    }
}

TEST_CASE("chain comparison") {
    REQUIRE(compare_chains({2, 3, 5}, {1, 3, 5}) == std::strong_ordering::less);
    REQUIRE(compare_chains({1, 3, 5}, {1, 3, 4}) == std::strong_ordering::less);
    REQUIRE(compare_chains({1, 3, 4}, {1, 3, 4}) == std::strong_ordering::equal);
    REQUIRE(compare_chains({1, 3, 5}, {2, 3, 5}) == std::strong_ordering::greater);
    REQUIRE_THROWS_AS(compare_chains({1, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("shelling_order") {
    SECTION("5-element example, exact order") {
        const ChainOrder order = shelling_order(example5());
        REQUIRE(order.chains ==
                std::vector<Chain>{{2, 3, 5}, {1, 3, 5}, {2, 3, 4}, {1, 3, 4}});
        REQUIRE(order.verified);
        REQUIRE_FALSE(order.first_violation.has_value());
    }
    SECTION("antichain: singletons in layer order") {
        const ChainOrder order = shelling_order(poset_of_permutation(Permutation({3, 2, 1})));
        REQUIRE(order.chains == std::vector<Chain>{{3}, {2}, {1}});
        REQUIRE(order.verified);
    }
    SECTION("total order: one facet") {
        const ChainOrder order = shelling_order(Poset::from_linear_orders({Permutation({1, 2, 3})}));
        REQUIRE(order.chains == std::vector<Chain>{{1, 2, 3}});
        REQUIRE(order.verified);
    }
    SECTION("rejects impure input") {
        REQUIRE_THROWS_AS(shelling_order(poset_of_permutation(Permutation({3, 1, 2}))),
                          std::invalid_argument);
    }
    SECTION("rejects a disconnected layer pair") {
        REQUIRE_THROWS_AS(shelling_order(poset_of_permutation(Permutation({3, 4, 1, 2}))),
                          std::invalid_argument);
    }
    SECTION("rejects dimension three") {
        REQUIRE_THROWS_AS(shelling_order(example8()), std::invalid_argument);
    }
    SECTION("rejects labels that need normalization") {
        REQUIRE_THROWS_AS(shelling_order(Poset::from_covers(2, {{2, 1}})), std::invalid_argument);
        REQUIRE_THROWS_AS(shelling_order(Poset::from_covers(3, {{1, 3}})), std::invalid_argument);
    }
}

TEST_CASE("verify_shelling") {
    SECTION("accepts the constructed order") {
        REQUIRE(verify_shelling({{2, 3, 5}, {1, 3, 5}, {2, 3, 4}, {1, 3, 4}}).first);
    }
    SECTION("rejects disjoint segments and reports the first violation") {
        const auto [ok, violation] = verify_shelling({{1, 2}, {3, 4}});
        REQUIRE_FALSE(ok);
        REQUIRE(violation == std::make_pair(1, 0));
    }
    SECTION("single facet is vacuously a shelling") {
        REQUIRE(verify_shelling({{1, 2, 3}}).first);
    }
    SECTION("any order of an antichain's facets is accepted") {
        REQUIRE(verify_shelling({{2}, {3}, {1}}).first);
    }
    SECTION("precondition screening") {
        REQUIRE_THROWS_AS(verify_shelling({{1, 2}, {1, 2}}), std::invalid_argument);
        REQUIRE_THROWS_AS(verify_shelling({{1, 2, 3}, {1, 2}}), std::invalid_argument);
    }
}

TEST_CASE("brute_force_shelling") {
    SECTION("finds an order for the 5-element example") {
        const auto facets = std::vector<Face>{{1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 3, 5}};
        const auto found = brute_force_shelling(facets);
        REQUIRE(found);
        REQUIRE(verify_shelling(*found).first);
    }
    SECTION("two disjoint segments admit no shelling") {
        REQUIRE_FALSE(brute_force_shelling({{1, 2}, {3, 4}}));
    }
    SECTION("single facet") {
        const auto found = brute_force_shelling({{1, 2}});
        REQUIRE(found == std::vector<Face>{{1, 2}});
    }
    SECTION("facet cap") {
        std::vector<Face> many;
        for (int i = 1; i <= 10; ++i)
            many.push_back({i});
        REQUIRE_THROWS_AS(brute_force_shelling(many), std::invalid_argument);
    }
}

TEST_CASE("constructed orders are shellings for every small permutation poset") {
    for (int n = 1; n <= 7; ++n) {
        long long accepted = 0;
        for_each_permutation(n, [&](const Permutation& pi) {
            const Poset p = poset_of_permutation(pi);
            if (!layer_criterion(p).holds)
                return;
            const ChainOrder order = shelling_order(p);
            REQUIRE(order.verified);
            ++accepted;
        });
        REQUIRE(accepted > 0);
    }
}

TEST_CASE("the comparison order is unchanged by adding global bounds") {
    // Sorting the chains of the poset directly must match sorting the chains
    // of the bounded copy (a new global minimum and maximum spliced into the
    // word) and then stripping the two cone points.
    for (int n = 1; n <= 6; ++n) {
        for_each_permutation(n, [&](const Permutation& pi) {
            const Poset p = poset_of_permutation(pi);
            if (!height_profile(p).pure)
                return;

            auto direct = maximal_chains(p);
            std::sort(direct.begin(), direct.end(),
                      [](const Chain& a, const Chain& b) { return compare_chains(a, b) < 0; });

            std::vector<int> bounded_word{1};
            for (int v : pi.word())
                bounded_word.push_back(v + 1);
            bounded_word.push_back(n + 2);
            auto bounded = maximal_chains(poset_of_permutation(Permutation(bounded_word)));
            std::sort(bounded.begin(), bounded.end(),
                      [](const Chain& a, const Chain& b) { return compare_chains(a, b) < 0; });

            std::vector<Chain> stripped;
            for (const auto& chain : bounded) {
                REQUIRE(chain.front() == 1);
                REQUIRE(chain.back() == n + 2);
                Chain inner;
                for (std::size_t i = 1; i + 1 < chain.size(); ++i)
                    inner.push_back(chain[i] - 1);
                stripped.push_back(std::move(inner));
            }
            REQUIRE(stripped == direct);
        });
    }
}

TEST_CASE("interval chains with layer predecessors admit a splice point") {
    // The step the shelling construction leans on: in a poset satisfying the
    // layer criterion, take an interval [x, y] spanning at least two height
    // steps and a maximal chain x = y_i < y_{i+1} < ... < y_j = y of the
    // interval. When every inner y_k has a layer-order predecessor x_k inside
    // the interval (the numerically smallest interval element of its height
    // exceeding y_k), some index k' satisfies y_{k'-1} < x_{k'} < y_{k'+1}
    // by covers, so the chain can be rerouted below y_{k'}.
    auto check_poset = [](const Poset& p) {
        const HeightProfile hp = height_profile(p);
        const int n = p.size();
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                if (!p.less(x, y) || hp.height(y) - hp.height(x) < 2)
                    continue;
                std::vector<int> interval;
                for (int z = 1; z <= n; ++z)
                    if (z == x || z == y || (p.less(x, z) && p.less(z, y)))
                        interval.push_back(z);
                const InducedSubposet sub = induced_subposet(p, interval);
                for (const auto& local_chain : maximal_chains(sub.poset)) {
                    Chain chain;
                    for (int v : local_chain)
                        chain.push_back(sub.labels[static_cast<std::size_t>(v - 1)]);

                    std::vector<int> predecessor(chain.size(), 0);
                    bool hypothesis = true;
                    for (std::size_t k = 1; k + 1 < chain.size() && hypothesis; ++k) {
                        const int yk = chain[k];
                        int best = 0;
                        for (int w : interval)
                            if (w > yk && hp.height(w) == hp.height(yk) && (best == 0 || w < best))
                                best = w;
                        if (best == 0)
                            hypothesis = false;
                        else
                            predecessor[k] = best;
                    }
                    if (!hypothesis)
                        continue;

                    const auto covers = cover_pairs(p);
                    auto is_cover = [&](int a, int b) {
                        return std::find(covers.begin(), covers.end(), std::make_pair(a, b)) != covers.end();
                    };
                    bool spliced = false;
                    for (std::size_t k = 1; k + 1 < chain.size() && !spliced; ++k)
                        spliced = is_cover(chain[k - 1], predecessor[k]) && is_cover(predecessor[k], chain[k + 1]);
                    REQUIRE(spliced);
                }
            }
    };

    for (int n = 1; n <= 5; ++n)
        for_each_permutation(n, [&](const Permutation& pi) {
            const Poset p = poset_of_permutation(pi);
            if (layer_criterion(p).holds)
                check_poset(p);
        });

    std::mt19937 rng(606060);
    int sampled = 0;
    while (sampled < 120) {
        const Poset p = poset_of_permutation(oracle::random_permutation(rng, 7));
        if (!layer_criterion(p).holds)
            continue;
        check_poset(p);
        ++sampled;
    }
}
