#ifndef HOPFSIMP_COMPLEX_HPP
#define HOPFSIMP_COMPLEX_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopfsimp/core.hpp"

namespace hopfsimp {

/// A finite abstract simplicial complex on vertices 0..n-1, stored by its
/// facets. Every vertex lies in some facet. The complex with n = 0 has the
/// single facet {} and is the unit of the Hopf algebra.
class SimplicialComplex {
public:
    /// The unit complex.
    SimplicialComplex() : n_(0), facets_{0} {}

    /// Normalizes an arbitrary family of vertex sets: dominated sets are
    /// dropped and uncovered vertices become singleton facets.
    static SimplicialComplex from_masks(int n, std::vector<VertexSet> sets) {
        if (n < 0 || n > kMaxVertices) {
            throw CapacityError("vertex count " + std::to_string(n) + " outside 0.." +
                                std::to_string(kMaxVertices));
        }
        const VertexSet all = full_set(n);
        for (VertexSet s : sets) {
            if ((s & ~all) != 0) {
                throw InputError("facet uses a vertex label >= n = " + std::to_string(n));
            }
        }
        SimplicialComplex c;
        c.n_ = n;
        c.facets_ = maximal_sets(std::move(sets));
        VertexSet covered = 0;
        for (VertexSet s : c.facets_) {
            covered |= s;
        }
        for (int v = 0; v < n; ++v) {
            if (!contains(covered, v)) {
                c.facets_.push_back(VertexSet{1} << v);
            }
        }
        c.facets_.erase(std::remove(c.facets_.begin(), c.facets_.end(), VertexSet{0}),
                        c.facets_.end());
        if (c.facets_.empty()) {
            c.facets_.push_back(0);
        }
        std::sort(c.facets_.begin(), c.facets_.end(), lex_less);
        return c;
    }

    static SimplicialComplex from_facets(int n, std::span<const std::vector<int>> facet_list) {
        std::vector<VertexSet> masks;
        masks.reserve(facet_list.size());
        for (const auto& facet : facet_list) {
            VertexSet m = 0;
            for (int v : facet) {
                if (v < 0 || v >= n) {
                    throw InputError("vertex label " + std::to_string(v) + " outside 0.." +
                                     std::to_string(n - 1));
                }
                m |= VertexSet{1} << v;
            }
            masks.push_back(m);
        }
        return from_masks(n, std::move(masks));
    }

    static SimplicialComplex from_facets(int n, std::initializer_list<std::vector<int>> facet_list) {
        return from_facets(n, std::span<const std::vector<int>>(facet_list.begin(), facet_list.size()));
    }

    int vertex_count() const { return n_; }
    bool is_unit() const { return n_ == 0; }
    VertexSet vertex_set() const { return full_set(n_); }

    /// Facets as bitmasks, sorted lexicographically by vertex list.
    const std::vector<VertexSet>& facet_masks() const { return facets_; }

    std::vector<std::vector<int>> facets() const {
        std::vector<std::vector<int>> out;
        out.reserve(facets_.size());
        for (VertexSet f : facets_) {
            out.push_back(to_vertex_list(f));
        }
        return out;
    }

    bool has_face(VertexSet x) const {
        return std::any_of(facets_.begin(), facets_.end(),
                           [x](VertexSet f) { return (x & ~f) == 0; });
    }

    /// -1 for the unit complex.
    int dimension() const {
        int best = 0;
        for (VertexSet f : facets_) {
            best = std::max(best, popcount(f));
        }
        return best - 1;
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

    /// Vertex count first, then lexicographic on the sorted facet lists.
    friend std::strong_ordering operator<=>(const SimplicialComplex& a, const SimplicialComplex& b) {
        if (a.n_ != b.n_) {
            return a.n_ <=> b.n_;
        }
        return compare_facet_lists(a.facets_, b.facets_);
    }

    static std::strong_ordering compare_facet_lists(const std::vector<VertexSet>& a,
                                                    const std::vector<VertexSet>& b) {
        const std::size_t common = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < common; ++i) {
            if (a[i] != b[i]) {
                return lex_less(a[i], b[i]) ? std::strong_ordering::less
                                            : std::strong_ordering::greater;
            }
        }
        return a.size() <=> b.size();
    }

private:
    static std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets) {
        std::sort(sets.begin(), sets.end(),
                  [](VertexSet a, VertexSet b) { return popcount(a) > popcount(b); });
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        std::vector<VertexSet> kept;
        for (VertexSet s : sets) {
            const bool dominated = std::any_of(kept.begin(), kept.end(), [s](VertexSet k) {
                return (s & ~k) == 0;
            });
            if (!dominated) {
                kept.push_back(s);
            }
        }
        return kept;
    }

    int n_;
    std::vector<VertexSet> facets_;
};

}  // namespace hopfsimp

template <>
struct std::hash<hopfsimp::SimplicialComplex> {
    std::size_t operator()(const hopfsimp::SimplicialComplex& c) const noexcept {
        std::size_t seed = static_cast<std::size_t>(c.vertex_count());
        for (auto f : c.facet_masks()) {
            hopfsimp::hash_combine(seed, f);
        }
        return seed;
    }
};

namespace hopfsimp {

using FVector = std::vector<Integer>;

/// All faces, including the empty face, sorted by size then lexicographically.
inline std::vector<VertexSet> faces(const SimplicialComplex& c) {
    std::set<VertexSet> seen;
    for (VertexSet f : c.facet_masks()) {
        // Enumerate every submask of f, including 0.
        VertexSet sub = f;
        while (true) {
            seen.insert(sub);
            if (sub == 0) {
                break;
            }
            sub = (sub - 1) & f;
        }
    }
    std::vector<VertexSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        if (popcount(a) != popcount(b)) {
            return popcount(a) < popcount(b);
        }
        return lex_less(a, b);
    });
    return out;
}

inline int dimension(const SimplicialComplex& c) { return c.dimension(); }

/// Maximal faces of dimension <= k.
inline SimplicialComplex k_skeleton(const SimplicialComplex& c, int k) {
    if (k < 0) {
        throw InputError("skeleton dimension must be nonnegative");
    }
    const int size = k + 1;
    std::vector<VertexSet> out;
    for (VertexSet f : c.facet_masks()) {
        if (popcount(f) <= size) {
            out.push_back(f);
            continue;
        }
        // All size-element subsets of f.
        const std::vector<int> verts = to_vertex_list(f);
        std::vector<int> pick(static_cast<std::size_t>(size));
        std::iota(pick.begin(), pick.end(), 0);
        const int m = static_cast<int>(verts.size());
        while (true) {
            VertexSet s = 0;
            for (int i : pick) {
                s |= VertexSet{1} << verts[static_cast<std::size_t>(i)];
            }
            out.push_back(s);
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - size + i) {
                --i;
            }
            if (i < 0) {
                break;
            }
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) {
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    return SimplicialComplex::from_masks(c.vertex_count(), std::move(out));
}

/// The complex {X ∩ T}, relabeled order-preservingly onto 0..|T|-1.
inline SimplicialComplex induced(const SimplicialComplex& c, VertexSet subset) {
    if ((subset & ~c.vertex_set()) != 0) {
        throw InputError("induced: subset is not contained in the vertex set");
    }
    std::vector<VertexSet> out;
    out.reserve(c.facet_masks().size());
    for (VertexSet f : c.facet_masks()) {
        out.push_back(compress(f & subset, subset));
    }
    return SimplicialComplex::from_masks(popcount(subset), std::move(out));
}

inline SimplicialComplex induced(const SimplicialComplex& c, std::span<const int> subset) {
    VertexSet m = 0;
    for (int v : subset) {
        if (v < 0 || v >= c.vertex_count()) {
            throw InputError("induced: vertex " + std::to_string(v) + " not in the complex");
        }
        m |= VertexSet{1} << v;
    }
    return induced(c, m);
}

/// Vertices of `b` are shifted past those of `a`.
inline SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    const int shift = a.vertex_count();
    std::vector<VertexSet> out = a.facet_masks();
    for (VertexSet f : b.facet_masks()) {
        out.push_back(f << shift);
    }
    return SimplicialComplex::from_masks(shift + b.vertex_count(), std::move(out));
}

/// Empty for the unit complex.
inline FVector f_vector(const SimplicialComplex& c) {
    FVector out(static_cast<std::size_t>(c.dimension() + 1), Integer(0));
    for (VertexSet x : faces(c)) {
        if (x != 0) {
            out[static_cast<std::size_t>(popcount(x) - 1)] += 1;
        }
    }
    return out;
}

/// perm[v] is the new label of vertex v.
inline SimplicialComplex relabel(const SimplicialComplex& c, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != c.vertex_count()) {
        throw InputError("relabel: permutation size mismatch");
    }
    std::vector<VertexSet> out;
    out.reserve(c.facet_masks().size());
    for (VertexSet f : c.facet_masks()) {
        VertexSet g = 0;
        for (VertexSet s = f; s != 0; s &= s - 1) {
            g |= VertexSet{1} << perm[static_cast<std::size_t>(std::countr_zero(s))];
        }
        out.push_back(g);
    }
    return SimplicialComplex::from_masks(c.vertex_count(), std::move(out));
}

namespace detail {

/// Iterated colour refinement of the vertices. Colours are ranks of
/// isomorphism-invariant signatures, so equal-coloured classes map onto each
/// other under every isomorphism.
inline std::vector<int> refine_vertex_colours(const SimplicialComplex& c) {
    const int n = c.vertex_count();
    const auto& facets = c.facet_masks();
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    int classes = 1;
    for (int round = 0; round <= n; ++round) {
        using Signature = std::pair<int, std::vector<std::vector<int>>>;
        std::vector<Signature> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<std::vector<int>> around;
            for (VertexSet f : facets) {
                if (!contains(f, v)) {
                    continue;
                }
                std::vector<int> row{popcount(f)};
                for (VertexSet s = f & ~(VertexSet{1} << v); s != 0; s &= s - 1) {
                    row.push_back(colour[static_cast<std::size_t>(std::countr_zero(s))]);
                }
                std::sort(row.begin() + 1, row.end());
                around.push_back(std::move(row));
            }
            std::sort(around.begin(), around.end());
            sig[static_cast<std::size_t>(v)] = {colour[static_cast<std::size_t>(v)], std::move(around)};
        }
        std::vector<Signature> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v) {
            colour[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) -
                distinct.begin());
        }
        const int now = static_cast<int>(distinct.size());
        if (now == classes && round > 0) {
            break;
        }
        classes = now;
    }
    return colour;
}

}  // namespace detail

/// Relabeling that sends `c` to its canonical form: the lexicographically
/// least facet list over all relabelings that respect the refined vertex
/// colour order. perm[v] is the new label of v.
inline std::vector<int> canonical_labeling(const SimplicialComplex& c) {
    const int n = c.vertex_count();
    if (n == 0) {
        return {};
    }
    const std::vector<int> colour = detail::refine_vertex_colours(c);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)];
    });
    // Cells of equal colour occupy consecutive target labels.
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && colour[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] ==
                            colour[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]) {
            ++j;
        }
        cells.emplace_back(i, j);
        i = j;
    }

    std::vector<int> slots = order;  // slots[label] = old vertex
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<int> best_perm;
    std::vector<VertexSet> best;
    std::vector<VertexSet> cur(c.facet_masks().size());

    const auto evaluate = [&] {
        for (int label = 0; label < n; ++label) {
            perm[static_cast<std::size_t>(slots[static_cast<std::size_t>(label)])] = label;
        }
        for (std::size_t i = 0; i < cur.size(); ++i) {
            VertexSet g = 0;
            for (VertexSet s = c.facet_masks()[i]; s != 0; s &= s - 1) {
                g |= VertexSet{1} << perm[static_cast<std::size_t>(std::countr_zero(s))];
            }
            cur[i] = g;
        }
        std::sort(cur.begin(), cur.end(), lex_less);
        if (best_perm.empty() || SimplicialComplex::compare_facet_lists(cur, best) < 0) {
            best = cur;
            best_perm = perm;
        }
    };

    // Odometer over the permutations of every cell.
    for (auto [lo, hi] : cells) {
        std::sort(slots.begin() + lo, slots.begin() + hi);
    }
    while (true) {
        evaluate();
        std::size_t k = cells.size();
        bool advanced = false;
        while (k > 0) {
            --k;
            auto [lo, hi] = cells[k];
            if (std::next_permutation(slots.begin() + lo, slots.begin() + hi)) {
                advanced = true;
                break;
            }
            // next_permutation wrapped this cell back to sorted order.
        }
        if (!advanced) {
            break;
        }
    }
    return best_perm;
}

inline SimplicialComplex canonical_form(const SimplicialComplex& c) {
    const std::vector<int> perm = canonical_labeling(c);
    return relabel(c, perm);
}

inline bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count() == b.vertex_count() && canonical_form(a) == canonical_form(b);
}

/// Number of connected components of the 1-skeleton.
inline int component_count(const SimplicialComplex& c) {
    const int n = c.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    int count = n;
    for (VertexSet f : c.facet_masks()) {
        if (f == 0) {
            continue;
        }
        const int root = find(std::countr_zero(f));
        for (VertexSet s = f & (f - 1); s != 0; s &= s - 1) {
            const int r = find(std::countr_zero(s));
            if (r != root) {
                parent[static_cast<std::size_t>(r)] = root;
                --count;
            }
        }
    }
    return count;
}

inline constexpr int kEnumerationLimit = 5;

/// Canonical complexes with full vertex support on n vertices, sorted.
inline std::vector<SimplicialComplex> enumerate_complexes(int n) {
    if (n < 0) {
        throw InputError("vertex count must be nonnegative");
    }
    if (n > kEnumerationLimit) {
        throw CapacityError("complex enumeration is limited to n <= " +
                            std::to_string(kEnumerationLimit));
    }
    if (n == 0) {
        return {SimplicialComplex()};
    }
    // Candidate faces of size >= 2, smallest first, so a face is decided after
    // all of its codimension-one subfaces.
    std::vector<VertexSet> candidates;
    for (VertexSet s = 1; s <= full_set(n); ++s) {
        if (popcount(s) >= 2) {
            candidates.push_back(s);
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](VertexSet a, VertexSet b) { return popcount(a) < popcount(b); });

    std::set<SimplicialComplex> found;
    std::vector<char> chosen(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v) {
        chosen[std::size_t{1} << v] = 1;
    }
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == candidates.size()) {
            std::vector<VertexSet> all;
            for (std::size_t s = 1; s < chosen.size(); ++s) {
                if (chosen[s] != 0) {
                    all.push_back(static_cast<VertexSet>(s));
                }
            }
            found.insert(canonical_form(SimplicialComplex::from_masks(n, std::move(all))));
            return;
        }
        const VertexSet s = candidates[i];
        walk(i + 1);
        bool closed = true;
        for (VertexSet r = s; r != 0 && closed; r &= r - 1) {
            const VertexSet sub = s & ~(r & -r);
            closed = chosen[sub] != 0;
        }
        if (closed) {
            chosen[s] = 1;
            walk(i + 1);
            chosen[s] = 0;
        }
    };
    walk(0);
    return {found.begin(), found.end()};
}

}  // namespace hopfsimp

#endif  // HOPFSIMP_COMPLEX_HPP
