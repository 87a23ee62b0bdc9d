#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "posetcm/perm.hpp"

namespace posetcm {

/// A chain, listed in increasing poset order.
using Chain = std::vector<int>;

/// A set of elements with sorted labels (a simplex, once chains are read as
/// faces of the order complex).
using Face = std::vector<int>;

/// Finite poset on {1..n}. The strict order is kept transitively closed so
/// comparability queries are O(1); the closure is computed once at
/// construction and the three invariants (irreflexive, antisymmetric,
/// transitive) hold for every reachable instance.
class Poset {
public:
    /// Intersection of linear orders: x < y iff x precedes y on every line.
    static Poset from_linear_orders(const std::vector<Permutation>& lines) {
        if (lines.empty())
            throw std::invalid_argument("from_linear_orders: empty list");
        const int n = lines.front().size();
        for (const auto& l : lines)
            if (l.size() != n)
                throw std::invalid_argument("from_linear_orders: size mismatch");
        Poset p(n);
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                if (x == y)
                    continue;
                bool all = true;
                for (const auto& l : lines)
                    if (!l.precedes(x, y)) {
                        all = false;
                        break;
                    }
                p.set_less(x, y, all);
            }
        return p;
    }

    /// Transitive closure of a cover list. Rejects relation cycles (which
    /// would break antisymmetry) and out-of-range labels.
    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
        if (n < 1)
            throw std::invalid_argument("from_covers: ground set must be nonempty");
        Poset p(n);
        for (const auto& [a, b] : covers) {
            if (a < 1 || a > n || b < 1 || b > n)
                throw std::invalid_argument("from_covers: label out of range");
            if (a == b)
                throw std::invalid_argument("from_covers: cycle detected");
            p.set_less(a, b, true);
        }
        // Warshall closure, then a cycle shows up on the diagonal.
        for (int z = 1; z <= n; ++z)
            for (int x = 1; x <= n; ++x)
                if (p.less(x, z))
                    for (int y = 1; y <= n; ++y)
                        if (p.less(z, y))
                            p.set_less(x, y, true);
        for (int x = 1; x <= n; ++x)
            if (p.less(x, x))
                throw std::invalid_argument("from_covers: cycle detected");
        return p;
    }

    int size() const { return n_; }

    bool less(int x, int y) const { return lt_[idx(x, y)] != 0; }
    bool comparable(int x, int y) const { return less(x, y) || less(y, x); }

    bool is_total_order() const {
        for (int x = 1; x <= n_; ++x)
            for (int y = x + 1; y <= n_; ++y)
                if (!comparable(x, y))
                    return false;
        return true;
    }

    bool is_antichain() const {
        for (int x = 1; x <= n_; ++x)
            for (int y = x + 1; y <= n_; ++y)
                if (comparable(x, y))
                    return false;
        return true;
    }

    bool operator==(const Poset& other) const { return n_ == other.n_ && lt_ == other.lt_; }
    bool operator!=(const Poset& other) const { return !(*this == other); }

private:
    explicit Poset(int n) : n_(n), lt_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(y - 1);
    }
    void set_less(int x, int y, bool v) { lt_[idx(x, y)] = v ? 1 : 0; }

    int n_;
    std::vector<char> lt_;
};

/// Cover pairs (x, y) with x covered by y, sorted lexicographically.
inline std::vector<std::pair<int, int>> cover_pairs(const Poset& p) {
    const int n = p.size();
    std::vector<std::pair<int, int>> out;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            if (!p.less(x, y))
                continue;
            bool strict_between = false;
            for (int z = 1; z <= n && !strict_between; ++z)
                strict_between = p.less(x, z) && p.less(z, y);
            if (!strict_between)
                out.emplace_back(x, y);
        }
    return out;
}

/// Elements covering x, in increasing numeric order.
inline std::vector<int> elements_covering(const Poset& p, int x) {
    if (x < 1 || x > p.size())
        throw std::invalid_argument("elements_covering: element out of range");
    std::vector<int> out;
    for (int y = 1; y <= p.size(); ++y) {
        if (!p.less(x, y))
            continue;
        bool strict_between = false;
        for (int z = 1; z <= p.size() && !strict_between; ++z)
            strict_between = p.less(x, z) && p.less(z, y);
        if (!strict_between)
            out.push_back(y);
    }
    return out;
}

/// Per-element heights, rank, purity, and the partition into height layers.
struct HeightProfile {
    std::vector<int> heights;             // heights[x-1]
    int rank = 0;                         // longest chain, counted in edges
    bool pure = false;                    // all maximal chains have length == rank
    std::vector<std::vector<int>> layers; // layers[i] = elements of height i, ascending

    int height(int x) const { return heights[static_cast<std::size_t>(x - 1)]; }
};

inline HeightProfile height_profile(const Poset& p) {
    const int n = p.size();
    HeightProfile hp;
    hp.heights.assign(static_cast<std::size_t>(n), -1);

    // height(x) = longest chain ending at x; memoized recursion over the
    // strictly-smaller elements.
    std::function<int(int)> height_of = [&](int x) -> int {
        int& h = hp.heights[static_cast<std::size_t>(x - 1)];
        if (h >= 0)
            return h;
        int best = 0;
        for (int y = 1; y <= n; ++y)
            if (p.less(y, x))
                best = std::max(best, height_of(y) + 1);
        return h = best;
    };
    for (int x = 1; x <= n; ++x)
        height_of(x);

    hp.rank = *std::max_element(hp.heights.begin(), hp.heights.end());
    hp.layers.assign(static_cast<std::size_t>(hp.rank + 1), {});
    for (int x = 1; x <= n; ++x)
        hp.layers[static_cast<std::size_t>(hp.height(x))].push_back(x);

    // Pure iff every maximal element sits at the top layer and every cover
    // climbs exactly one layer; equivalent to all maximal chains having
    // length rank, without enumerating them.
    hp.pure = true;
    for (int x = 1; x <= n && hp.pure; ++x) {
        bool maximal = true;
        for (int y = 1; y <= n && maximal; ++y)
            maximal = !p.less(x, y);
        if (maximal && hp.height(x) != hp.rank)
            hp.pure = false;
    }
    if (hp.pure)
        for (const auto& [x, y] : cover_pairs(p))
            if (hp.height(y) != hp.height(x) + 1) {
                hp.pure = false;
                break;
            }
    return hp;
}

/// Induced subposet on a subset of elements, relabeled 1..|S| in increasing
/// original-label order. labels[i-1] maps element i back to the parent poset.
struct InducedSubposet {
    Poset poset;
    std::vector<int> labels;
};

inline InducedSubposet induced_subposet(const Poset& p, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty())
        throw std::invalid_argument("induced_subposet: empty element set");
    for (int x : elements)
        if (x < 1 || x > p.size())
            throw std::invalid_argument("induced_subposet: label out of range");

    const int m = static_cast<int>(elements.size());
    std::vector<std::pair<int, int>> relations;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (i != j && p.less(elements[static_cast<std::size_t>(i - 1)],
                                 elements[static_cast<std::size_t>(j - 1)]))
                relations.emplace_back(i, j);
    // Relations of a poset restriction are already transitively closed, so
    // feeding them through from_covers just re-validates the invariants.
    return InducedSubposet{Poset::from_covers(m, relations), std::move(elements)};
}

/// Connected components of the comparability graph, each listed ascending,
/// ordered by smallest member.
inline std::vector<std::vector<int>> connected_components(const Poset& p) {
    const int n = p.size();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int s = 1; s <= n; ++s) {
        if (comp[static_cast<std::size_t>(s - 1)] >= 0)
            continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s - 1)] = next;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 1; y <= n; ++y)
                if (comp[static_cast<std::size_t>(y - 1)] < 0 && p.comparable(x, y)) {
                    comp[static_cast<std::size_t>(y - 1)] = next;
                    stack.push_back(y);
                }
        }
        ++next;
    }
    std::vector<std::vector<int>> out(static_cast<std::size_t>(next));
    for (int x = 1; x <= n; ++x)
        out[static_cast<std::size_t>(comp[static_cast<std::size_t>(x - 1)])].push_back(x);
    return out;
}

/// All inclusion-maximal chains, in lexicographic order of their element
/// sequences. Maximal chains run from a minimal to a maximal element along
/// covers, so a depth-first walk over sorted cover successors emits them in
/// sorted order directly.
inline std::vector<Chain> maximal_chains(const Poset& p) {
    const int n = p.size();
    std::vector<std::vector<int>> covers_up(static_cast<std::size_t>(n));
    for (const auto& [x, y] : cover_pairs(p))
        covers_up[static_cast<std::size_t>(x - 1)].push_back(y);

    std::vector<Chain> out;
    Chain current;
    std::function<void(int)> walk = [&](int x) {
        current.push_back(x);
        const auto& ups = covers_up[static_cast<std::size_t>(x - 1)];
        if (ups.empty())
            out.push_back(current);
        for (int y : ups)
            walk(y);
        current.pop_back();
    };
    for (int x = 1; x <= n; ++x) {
        bool minimal = true;
        for (int y = 1; y <= n && minimal; ++y)
            minimal = !p.less(y, x);
        if (minimal)
            walk(x);
    }
    return out;
}

/// Streams every linear extension as a permutation word; stop early by
/// returning false from the visitor.
inline void for_each_linear_extension(const Poset& p, const std::function<bool(const Permutation&)>& visit) {
    const int n = p.size();
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    bool stopped = false;

    std::function<void()> extend = [&]() {
        if (stopped)
            return;
        if (static_cast<int>(word.size()) == n) {
            if (!visit(Permutation(word)))
                stopped = true;
            return;
        }
        for (int x = 1; x <= n && !stopped; ++x) {
            if (used[static_cast<std::size_t>(x - 1)])
                continue;
            bool ready = true;  // all strictly-smaller elements already placed
            for (int y = 1; y <= n && ready; ++y)
                ready = !(p.less(y, x) && !used[static_cast<std::size_t>(y - 1)]);
            if (!ready)
                continue;
            used[static_cast<std::size_t>(x - 1)] = 1;
            word.push_back(x);
            extend();
            word.pop_back();
            used[static_cast<std::size_t>(x - 1)] = 0;
        }
    };
    extend();
}

inline std::vector<Permutation> linear_extensions(const Poset& p) {
    std::vector<Permutation> out;
    for_each_linear_extension(p, [&](const Permutation& ext) {
        out.push_back(ext);
        return true;
    });
    return out;
}

/// True iff f (given as f[x-1] = image of x) is an order isomorphism P -> Q.
inline bool isomorphism_check(const Poset& p, const Poset& q, const std::vector<int>& f) {
    const int n = p.size();
    if (q.size() != n || static_cast<int>(f.size()) != n)
        throw std::invalid_argument("isomorphism_check: map is not a bijection");
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int v : f) {
        if (v < 1 || v > n || hit[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("isomorphism_check: map is not a bijection");
        hit[static_cast<std::size_t>(v - 1)] = 1;
    }
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            if (x == y)
                continue;
            if (p.less(x, y) != q.less(f[static_cast<std::size_t>(x - 1)],
                                       f[static_cast<std::size_t>(y - 1)]))
                return false;
        }
    return true;
}

/// Intersection of the identity order with pi: x < y iff x < y as integers
/// and x precedes y in pi.
inline Poset poset_of_permutation(const Permutation& pi) {
    return Poset::from_linear_orders({Permutation::identity(pi.size()), pi});
}

}  // namespace posetcm
