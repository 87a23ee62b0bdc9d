#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace posetcm {

/// A permutation of {1..n}, written as a word. Read left to right, the word
/// doubles as a linear order: a precedes b iff a appears to the left of b.
class Permutation {
public:
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        const int n = static_cast<int>(word_.size());
        if (n == 0)
            throw std::invalid_argument("permutation: empty word");
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int v : word_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("permutation: word is not a bijection of {1..n}");
            seen[static_cast<std::size_t>(v - 1)] = 1;
        }
        pos_.resize(static_cast<std::size_t>(n));
        for (int a = 1; a <= n; ++a)
            pos_[static_cast<std::size_t>(word_[static_cast<std::size_t>(a - 1)] - 1)] = a;
    }

    static Permutation identity(int n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int a = 1; a <= n; ++a)
            w[static_cast<std::size_t>(a - 1)] = a;
        return Permutation(std::move(w));
    }

    int size() const { return static_cast<int>(word_.size()); }

    /// Value at 1-indexed position a.
    int operator()(int a) const { return word_[static_cast<std::size_t>(a - 1)]; }

    /// 1-indexed position of a value.
    int position_of(int value) const { return pos_[static_cast<std::size_t>(value - 1)]; }

    /// True iff a appears to the left of b in the word.
    bool precedes(int a, int b) const { return position_of(a) < position_of(b); }

    const std::vector<int>& word() const { return word_; }

    bool operator==(const Permutation& other) const { return word_ == other.word_; }
    bool operator!=(const Permutation& other) const { return !(*this == other); }

private:
    std::vector<int> word_;
    std::vector<int> pos_;
};

inline Permutation inverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int a = 1; a <= n; ++a)
        w[static_cast<std::size_t>(p(a) - 1)] = a;
    return Permutation(std::move(w));
}

/// Composition r with r(a) = s(t(a)).
inline Permutation compose(const Permutation& s, const Permutation& t) {
    if (s.size() != t.size())
        throw std::invalid_argument("compose: size mismatch");
    const int n = s.size();
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int a = 1; a <= n; ++a)
        w[static_cast<std::size_t>(a - 1)] = s(t(a));
    return Permutation(std::move(w));
}

/// Result of rewriting a two-permutation realizer (s, t) over the identity:
/// pi = s^-1 t, and iso maps element j of the normalized poset to s(j) in the
/// original one. The map is an order isomorphism between the two intersection
/// posets; callers may confirm with isomorphism_check.
struct RealizerNormalization {
    Permutation pi;
    std::vector<int> iso;  // iso[j-1] = s(j)
};

inline RealizerNormalization normalize_realizer(const Permutation& s, const Permutation& t) {
    if (s.size() != t.size())
        throw std::invalid_argument("normalize_realizer: size mismatch");
    Permutation pi = compose(inverse(s), t);
    std::vector<int> iso(static_cast<std::size_t>(s.size()));
    for (int j = 1; j <= s.size(); ++j)
        iso[static_cast<std::size_t>(j - 1)] = s(j);
    return RealizerNormalization{std::move(pi), std::move(iso)};
}

/// Simple undirected graph on {1..n}; edges stored as sorted (i, j) pairs, i < j.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    bool has_edge(int a, int b) const {
        if (a > b)
            std::swap(a, b);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
    }
};

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    for (auto& [a, b] : edges) {
        if (a == b)
            throw std::invalid_argument("graph: self-loop");
        if (a < 1 || a > n || b < 1 || b > n)
            throw std::invalid_argument("graph: vertex out of range");
        if (a > b)
            std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph{n, std::move(edges)};
}

/// Intersection graph of a stack of horizontal lines, each labeled by a
/// permutation: {i, j} is an edge iff the curves of i and j cross, i.e. the
/// two values appear in different relative order on some pair of lines. The
/// crossing test is purely order-theoretic; no geometry is involved.
inline Graph diagram_intersection_graph(const std::vector<Permutation>& lines) {
    if (lines.size() < 2)
        throw std::invalid_argument("diagram_intersection_graph: need at least two lines");
    const int n = lines.front().size();
    for (const auto& l : lines)
        if (l.size() != n)
            throw std::invalid_argument("diagram_intersection_graph: size mismatch");

    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            bool before = false, after = false;
            for (const auto& l : lines)
                (l.precedes(i, j) ? before : after) = true;
            if (before && after)
                edges.emplace_back(i, j);
        }
    }
    return make_graph(n, std::move(edges));
}

}  // namespace posetcm
