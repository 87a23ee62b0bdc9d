#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "posetcm/field.hpp"
#include "posetcm/poset.hpp"

namespace posetcm {

/// Finite simplicial complex given by its inclusion-maximal faces. Faces are
/// the downward closure of the facet list; the complex {emptyset} (facet list
/// [{}]) is a legal value and arises as the link of a facet. A complex with
/// no faces at all is void and rejected by the homology routines.
class SimplicialComplex {
public:
    static SimplicialComplex from_faces(std::vector<Face> faces) {
        for (auto& f : faces) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
        }
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        std::vector<Face> maximal;
        for (const auto& f : faces) {
            bool dominated = false;
            for (const auto& g : faces)
                if (&f != &g && f != g && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                    dominated = true;
                    break;
                }
            if (!dominated)
                maximal.push_back(f);
        }
        return SimplicialComplex(std::move(maximal));
    }

    const std::vector<Face>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }

    /// Dimension: largest facet size minus one; -1 for {emptyset}.
    int dimension() const {
        int d = -2;
        for (const auto& f : facets_)
            d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    std::vector<int> vertices() const {
        std::set<int> vs;
        for (const auto& f : facets_)
            vs.insert(f.begin(), f.end());
        return {vs.begin(), vs.end()};
    }

    bool is_face(const Face& s) const {
        Face t = s;
        std::sort(t.begin(), t.end());
        for (const auto& f : facets_)
            if (std::includes(f.begin(), f.end(), t.begin(), t.end()))
                return true;
        return false;
    }

    /// Every face, including the empty one, sorted by (cardinality, lex).
    std::vector<Face> all_faces() const {
        std::set<Face> seen;
        for (const auto& f : facets_) {
            const int k = static_cast<int>(f.size());
            for (unsigned mask = 0; mask < (1u << k); ++mask) {
                Face sub;
                for (int b = 0; b < k; ++b)
                    if (mask & (1u << b))
                        sub.push_back(f[static_cast<std::size_t>(b)]);
                seen.insert(std::move(sub));
            }
        }
        std::vector<Face> out(seen.begin(), seen.end());
        std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
            if (a.size() != b.size())
                return a.size() < b.size();
            return a < b;
        });
        return out;
    }

private:
    explicit SimplicialComplex(std::vector<Face> facets) : facets_(std::move(facets)) {}

    std::vector<Face> facets_;
};

/// Order complex: faces are the chains of the poset, so the facets are its
/// maximal chains.
inline SimplicialComplex order_complex(const Poset& p) {
    std::vector<Face> facets;
    for (auto chain : maximal_chains(p)) {
        std::sort(chain.begin(), chain.end());
        facets.push_back(std::move(chain));
    }
    return SimplicialComplex::from_faces(std::move(facets));
}

/// Link of a face: all faces disjoint from s whose union with s is a face.
/// Generated by the facets containing s, with s removed.
inline SimplicialComplex link(const SimplicialComplex& d, const Face& s) {
    Face t = s;
    std::sort(t.begin(), t.end());
    if (!d.is_face(t))
        throw std::invalid_argument("link: not a face of the complex");
    std::vector<Face> gens;
    for (const auto& f : d.facets())
        if (std::includes(f.begin(), f.end(), t.begin(), t.end())) {
            Face rest;
            std::set_difference(f.begin(), f.end(), t.begin(), t.end(), std::back_inserter(rest));
            gens.push_back(std::move(rest));
        }
    return SimplicialComplex::from_faces(std::move(gens));
}

/// Reduced Betti numbers over a chosen field, for the augmented chain complex
/// (the boundary of a vertex is the empty face). Indices run from -1 up to
/// the dimension of the complex.
struct HomologyProfile {
    FieldDescriptor field;
    std::vector<long long> reduced_betti;  // reduced_betti[i + 1] = betti in degree i

    long long betti(int degree) const {
        const int i = degree + 1;
        if (i < 0 || i >= static_cast<int>(reduced_betti.size()))
            return 0;
        return reduced_betti[static_cast<std::size_t>(i)];
    }
    int top_degree() const { return static_cast<int>(reduced_betti.size()) - 2; }
};

namespace detail {

/// Builds the degree-d boundary matrix (rows: (d-1)-faces, cols: d-faces)
/// and runs the chain-complex bookkeeping generically over the field ops.
template <typename Ops>
std::vector<long long> reduced_betti_impl(const SimplicialComplex& d, const Ops& ops) {
    const int dim = d.dimension();
    std::vector<std::vector<Face>> faces_by_dim(static_cast<std::size_t>(dim + 2));
    for (auto& f : d.all_faces())
        faces_by_dim[f.size()].push_back(std::move(f));

    std::vector<Matrix<Ops>> boundary(static_cast<std::size_t>(dim + 1));
    for (int deg = 0; deg <= dim; ++deg) {
        const auto& domain = faces_by_dim[static_cast<std::size_t>(deg + 1)];
        const auto& codomain = faces_by_dim[static_cast<std::size_t>(deg)];
        std::map<Face, int> row_of;
        for (int r = 0; r < static_cast<int>(codomain.size()); ++r)
            row_of[codomain[static_cast<std::size_t>(r)]] = r;
        Matrix<Ops> m(codomain.size(),
                      std::vector<typename Ops::value_type>(domain.size(), ops.from_int(0)));
        for (int c = 0; c < static_cast<int>(domain.size()); ++c) {
            const Face& f = domain[static_cast<std::size_t>(c)];
            for (int j = 0; j <= deg; ++j) {
                Face sub;
                for (int k = 0; k <= deg; ++k)
                    if (k != j)
                        sub.push_back(f[static_cast<std::size_t>(k)]);
                m[static_cast<std::size_t>(row_of.at(sub))][static_cast<std::size_t>(c)] =
                    ops.from_int(j % 2 == 0 ? 1 : -1);
            }
        }
        boundary[static_cast<std::size_t>(deg)] = std::move(m);
    }

    for (int deg = 0; deg + 1 <= dim; ++deg)
        if (!product_is_zero(boundary[static_cast<std::size_t>(deg)],
                             boundary[static_cast<std::size_t>(deg + 1)], ops))
            throw std::logic_error("homology: boundary of boundary is nonzero");

    std::vector<int> rank(static_cast<std::size_t>(dim + 2), 0);  // rank[deg] = rank of boundary_deg
    for (int deg = 0; deg <= dim; ++deg)
        rank[static_cast<std::size_t>(deg)] = matrix_rank(boundary[static_cast<std::size_t>(deg)], ops);

    std::vector<long long> betti(static_cast<std::size_t>(dim + 2), 0);
    long long euler_faces = -1;  // the empty face contributes -1
    long long euler_betti = 0;
    for (int deg = -1; deg <= dim; ++deg) {
        const long long count = static_cast<long long>(faces_by_dim[static_cast<std::size_t>(deg + 1)].size());
        const long long kernel = deg < 0 ? 1 : count - rank[static_cast<std::size_t>(deg)];
        const long long image_above = rank[static_cast<std::size_t>(deg + 1)];
        const long long b = kernel - image_above;
        if (b < 0)
            throw std::logic_error("homology: negative Betti number");
        betti[static_cast<std::size_t>(deg + 1)] = b;
        const long long sign = (deg % 2 == 0) ? 1 : -1;
        if (deg >= 0)
            euler_faces += sign * count;
        euler_betti += sign * b;
    }
    if (euler_faces != euler_betti)
        throw std::logic_error("homology: Euler identity violated");
    return betti;
}

}  // namespace detail

inline HomologyProfile reduced_betti(const SimplicialComplex& d, const FieldDescriptor& field) {
    if (d.is_void())
        throw std::invalid_argument("reduced_betti: void complex");
    if (field.is_rational())
        return HomologyProfile{field, detail::reduced_betti_impl(d, detail::RationalOps{})};
    return HomologyProfile{field, detail::reduced_betti_impl(d, detail::PrimeFieldOps{field.modulus()})};
}

/// Reisner test: Cohen-Macaulay over the field iff every link (the whole
/// complex included, as the link of the empty face) has vanishing reduced
/// homology below its own dimension. Faces are visited from the largest down
/// and lexicographically within a cardinality, so the reported witness is a
/// most-local obstruction; the empty face is checked last.
struct ReisnerResult {
    bool cohen_macaulay = false;
    std::optional<Face> witness;  // first face whose link fails
};

inline ReisnerResult is_cohen_macaulay(const SimplicialComplex& d, const FieldDescriptor& field) {
    if (d.is_void())
        throw std::invalid_argument("is_cohen_macaulay: void complex");
    auto faces = d.all_faces();  // (cardinality asc, lex asc)
    std::stable_sort(faces.begin(), faces.end(),
                     [](const Face& a, const Face& b) { return a.size() > b.size(); });
    for (const auto& s : faces) {
        const SimplicialComplex lk = link(d, s);
        const int lk_dim = lk.dimension();
        if (lk_dim <= -1)
            continue;  // nothing below dimension -1
        const HomologyProfile h = reduced_betti(lk, field);
        for (int deg = -1; deg < lk_dim; ++deg)
            if (h.betti(deg) != 0)
                return ReisnerResult{false, s};
    }
    return ReisnerResult{true, std::nullopt};
}

/// Strong connectivity of a pure complex: facets form a connected graph under
/// codimension-one adjacency (shared faces of size |facet| - 1). Mixed facet
/// sizes make the notion inapplicable and yield false.
inline bool is_strongly_connected(const SimplicialComplex& d) {
    const auto& fs = d.facets();
    if (fs.empty())
        return false;
    if (fs.size() == 1)
        return true;
    const std::size_t k = fs.front().size();
    for (const auto& f : fs)
        if (f.size() != k)
            return false;

    std::vector<char> visited(fs.size(), 0);
    std::vector<std::size_t> stack{0};
    visited[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < fs.size(); ++j) {
            if (visited[j])
                continue;
            Face common;
            std::set_intersection(fs[i].begin(), fs[i].end(), fs[j].begin(), fs[j].end(),
                                  std::back_inserter(common));
            if (common.size() + 1 == k) {
                visited[j] = 1;
                ++reached;
                stack.push_back(j);
            }
        }
    }
    return reached == fs.size();
}

}  // namespace posetcm
