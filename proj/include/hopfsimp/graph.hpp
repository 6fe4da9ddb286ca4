#ifndef HOPFSIMP_GRAPH_HPP
#define HOPFSIMP_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopfsimp/complex.hpp"
#include "hopfsimp/core.hpp"
#include "hopfsimp/polynomial.hpp"

namespace hopfsimp {

using Edge = std::pair<int, int>;

/// Simple undirected graph on 0..n-1 stored as adjacency masks.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(check_size(n)), 0) {}

    /// Repeated edges are merged; loops and out-of-range endpoints are rejected.
    static Graph from_edges(int n, std::span<const Edge> edges) {
        Graph g(n);
        for (auto [u, v] : edges) {
            g.add_edge(u, v);
        }
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
            throw InputError("edge endpoint outside 0.." + std::to_string(vertex_count() - 1));
        }
        if (u == v) {
            throw InputError("loops are not allowed in a simple graph");
        }
        adj_[static_cast<std::size_t>(u)] |= VertexSet{1} << v;
        adj_[static_cast<std::size_t>(v)] |= VertexSet{1} << u;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }

    VertexSet neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool has_edge(int u, int v) const { return contains(adj_[static_cast<std::size_t>(u)], v); }

    int edge_count() const {
        int twice = 0;
        for (VertexSet a : adj_) {
            twice += popcount(a);
        }
        return twice / 2;
    }

    /// Edges (u, v) with u < v, lexicographic.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < vertex_count(); ++u) {
            for (VertexSet s = adj_[static_cast<std::size_t>(u)] >> (u + 1); s != 0; s &= s - 1) {
                out.emplace_back(u, u + 1 + std::countr_zero(s));
            }
        }
        return out;
    }

    /// Whether the vertices of `block` induce a connected subgraph.
    bool is_connected_within(VertexSet block) const {
        if (block == 0) {
            return false;
        }
        VertexSet seen = block & (~block + 1);
        VertexSet frontier = seen;
        while (frontier != 0) {
            VertexSet next = 0;
            for (VertexSet s = frontier; s != 0; s &= s - 1) {
                next |= adj_[static_cast<std::size_t>(std::countr_zero(s))];
            }
            next &= block & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen == block;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static int check_size(int n) {
        if (n < 0 || n > kMaxVertices) {
            throw CapacityError("graph vertex count outside 0.." + std::to_string(kMaxVertices));
        }
        return n;
    }

    std::vector<VertexSet> adj_;
};

inline Graph one_skeleton_graph(const SimplicialComplex& c) {
    Graph g(c.vertex_count());
    for (VertexSet f : c.facet_masks()) {
        for (VertexSet s = f; s != 0; s &= s - 1) {
            const int u = std::countr_zero(s);
            for (VertexSet r = s & (s - 1); r != 0; r &= r - 1) {
                g.add_edge(u, std::countr_zero(r));
            }
        }
    }
    return g;
}

/// The graph as a complex of dimension at most one.
inline SimplicialComplex to_complex(const Graph& g) {
    std::vector<VertexSet> sets;
    for (auto [u, v] : g.edges()) {
        sets.push_back((VertexSet{1} << u) | (VertexSet{1} << v));
    }
    return SimplicialComplex::from_masks(g.vertex_count(), std::move(sets));
}

/// Inverse of to_complex; rejects complexes of dimension above one.
inline Graph to_graph(const SimplicialComplex& c) {
    if (c.dimension() > 1) {
        throw InputError("complex of dimension " + std::to_string(c.dimension()) +
                         " is not a graph");
    }
    return one_skeleton_graph(c);
}

/// A flat of a graph, held as the partition of the vertices into the
/// connected blocks it spans. Blocks are sorted by smallest vertex.
class Flat {
public:
    Flat() = default;

    /// Validates that `blocks` partitions the vertices of `g` into blocks
    /// inducing connected subgraphs.
    static Flat of(const Graph& g, std::vector<VertexSet> blocks) {
        VertexSet seen = 0;
        for (VertexSet b : blocks) {
            if (b == 0 || (b & seen) != 0 || (b & ~full_set(g.vertex_count())) != 0) {
                throw InputError("flat blocks must partition the vertex set");
            }
            if (!g.is_connected_within(b)) {
                throw InputError("flat block does not induce a connected subgraph");
            }
            seen |= b;
        }
        if (seen != full_set(g.vertex_count())) {
            throw InputError("flat blocks must cover every vertex");
        }
        std::sort(blocks.begin(), blocks.end(),
                  [](VertexSet a, VertexSet b) { return std::countr_zero(a) < std::countr_zero(b); });
        Flat f;
        f.blocks_ = std::move(blocks);
        for (auto [u, v] : g.edges()) {
            if (f.block_of(u) == f.block_of(v)) {
                f.edges_.emplace_back(u, v);
            }
        }
        return f;
    }

    /// The flat spanned by an edge subset: its closure must equal the subset.
    static Flat from_edges(const Graph& g, std::span<const Edge> edge_subset) {
        const int n = g.vertex_count();
        std::vector<int> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        const std::function<int(int)> find = [&](int v) {
            return parent[static_cast<std::size_t>(v)] == v
                       ? v
                       : parent[static_cast<std::size_t>(v)] = find(parent[static_cast<std::size_t>(v)]);
        };
        for (auto [u, v] : edge_subset) {
            if (u < 0 || v < 0 || u >= n || v >= n || !g.has_edge(u, v)) {
                throw InputError("flat edge is not an edge of the graph");
            }
            parent[static_cast<std::size_t>(find(u))] = find(v);
        }
        std::vector<VertexSet> blocks(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            blocks[static_cast<std::size_t>(find(v))] |= VertexSet{1} << v;
        }
        blocks.erase(std::remove(blocks.begin(), blocks.end(), VertexSet{0}), blocks.end());
        Flat f = of(g, std::move(blocks));
        std::vector<Edge> given(edge_subset.begin(), edge_subset.end());
        for (auto& [u, v] : given) {
            if (u > v) {
                std::swap(u, v);
            }
        }
        std::sort(given.begin(), given.end());
        given.erase(std::unique(given.begin(), given.end()), given.end());
        if (given != f.edges_) {
            throw InputError("edge subset is not a flat: its components are not induced subgraphs");
        }
        return f;
    }

    const std::vector<VertexSet>& blocks() const { return blocks_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// c(F): number of connected components of the spanning subgraph.
    int component_count() const { return static_cast<int>(blocks_.size()); }

    /// rk(F) = n - c(F).
    int rank() const {
        int n = 0;
        for (VertexSet b : blocks_) {
            n += popcount(b);
        }
        return n - component_count();
    }

    int block_of(int v) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (contains(blocks_[i], v)) {
                return static_cast<int>(i);
            }
        }
        return -1;
    }

    std::vector<std::vector<int>> block_lists() const {
        std::vector<std::vector<int>> out;
        for (VertexSet b : blocks_) {
            out.push_back(to_vertex_list(b));
        }
        return out;
    }

    friend bool operator==(const Flat& a, const Flat& b) { return a.blocks_ == b.blocks_; }

private:
    std::vector<VertexSet> blocks_;
    std::vector<Edge> edges_;
};

/// Every flat of `g`: one per vertex partition whose blocks are connected.
/// Ordered by rank, then lexicographically by block list.
inline std::vector<Flat> flats(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<VertexSet>> partitions;
    std::vector<VertexSet> current;
    const std::function<void(VertexSet)> extend = [&](VertexSet remaining) {
        if (remaining == 0) {
            partitions.push_back(current);
            return;
        }
        const VertexSet lowest = remaining & (~remaining + 1);
        const VertexSet rest = remaining & ~lowest;
        // Blocks through the lowest remaining vertex, over all submasks of the rest.
        VertexSet sub = rest;
        while (true) {
            const VertexSet block = sub | lowest;
            if (g.is_connected_within(block)) {
                current.push_back(block);
                extend(remaining & ~block);
                current.pop_back();
            }
            if (sub == 0) {
                break;
            }
            sub = (sub - 1) & rest;
        }
    };
    extend(full_set(n));

    std::vector<Flat> out;
    out.reserve(partitions.size());
    for (auto& p : partitions) {
        out.push_back(Flat::of(g, std::move(p)));
    }
    std::sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
        if (a.rank() != b.rank()) {
            return a.rank() < b.rank();
        }
        return a.block_lists() < b.block_lists();
    });
    return out;
}

/// Contracts every block of a flat to a single vertex; parallel edges merge.
inline Graph contract(const Graph& g, const Flat& f) {
    // Re-validate: the flat must belong to this graph.
    const Flat checked = Flat::of(g, f.blocks());
    const auto& blocks = checked.blocks();
    Graph out(static_cast<int>(blocks.size()));
    for (auto [u, v] : g.edges()) {
        const int bu = checked.block_of(u);
        const int bv = checked.block_of(v);
        if (bu != bv) {
            out.add_edge(bu, bv);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Chromatic polynomial by memoized deletion-contraction

inline MemoCache<SimplicialComplex, PolyT>& chromatic_cache() {
    static MemoCache<SimplicialComplex, PolyT> cache;
    return cache;
}

/// t(t-1)...(t-n+1).
inline PolyT falling_factorial_poly(int n) {
    PolyT acc(1);
    for (int i = 0; i < n; ++i) {
        acc *= PolyT{Rational(-i), Rational(1)};
    }
    return acc;
}

namespace detail {

inline Graph delete_edge(const Graph& g, int u, int v) {
    Graph out(g.vertex_count());
    for (auto [a, b] : g.edges()) {
        if (!(a == u && b == v)) {
            out.add_edge(a, b);
        }
    }
    return out;
}

/// Merges v into u and drops v; vertices above v shift down by one.
inline Graph contract_edge(const Graph& g, int u, int v) {
    const auto relabel = [&](int x) {
        if (x == v) {
            x = u;
        }
        return x > v ? x - 1 : x;
    };
    Graph out(g.vertex_count() - 1);
    for (auto [a, b] : g.edges()) {
        const int ra = relabel(a);
        const int rb = relabel(b);
        if (ra != rb) {
            out.add_edge(ra, rb);
        }
    }
    return out;
}

}  // namespace detail

inline PolyT chromatic_polynomial(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m == 0) {
        return PolyT::monomial(Rational(1), n);
    }
    if (2 * m == n * (n - 1)) {
        return falling_factorial_poly(n);
    }
    const SimplicialComplex key = canonical_form(to_complex(g));
    if (auto hit = chromatic_cache().find(key)) {
        return *hit;
    }
    const Graph canon = to_graph(key);
    const Edge e = canon.edges().front();
    const PolyT result = chromatic_polynomial(detail::delete_edge(canon, e.first, e.second)) -
                         chromatic_polynomial(detail::contract_edge(canon, e.first, e.second));
    chromatic_cache().insert(key, result);
    return result;
}

/// a(G) = (-1)^n chi_G(-1).
inline Integer acyclic_orientations(const Graph& g) {
    const Rational value = chromatic_polynomial(g).evaluate(Rational(-1)) *
                           Rational(sign_power(g.vertex_count()));
    return boost::multiprecision::numerator(value);
}

/// Faces of the complex lying inside a single block of the flat; equivalently
/// the faces whose 1-skeleton uses only edges of F.
inline SimplicialComplex gamma_VF(const SimplicialComplex& c, const Flat& f) {
    const Graph skeleton = one_skeleton_graph(c);
    const Flat checked = Flat::of(skeleton, f.blocks());
    std::vector<VertexSet> sets;
    for (VertexSet x : c.facet_masks()) {
        for (VertexSet b : checked.blocks()) {
            if ((x & b) != 0) {
                sets.push_back(x & b);
            }
        }
    }
    return SimplicialComplex::from_masks(c.vertex_count(), std::move(sets));
}

// ---------------------------------------------------------------------------
// Builders

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

/// Vertex 0 is the centre.
inline Graph star_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        g.add_edge(0, v);
    }
    return g;
}

inline Graph edgeless_graph(int n) { return Graph(n); }

/// The complete graph K_n as a 1-dimensional complex.
inline SimplicialComplex complete_complex(int n) { return to_complex(complete_graph(n)); }

/// The d-simplex: a single facet on d+1 vertices.
inline SimplicialComplex simplex_complex(int d) {
    if (d < -1) {
        throw InputError("simplex dimension must be >= -1");
    }
    return SimplicialComplex::from_masks(d + 1, {full_set(d + 1)});
}

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 &&
           g.is_connected_within(full_set(g.vertex_count()));
}

}  // namespace hopfsimp

#endif  // HOPFSIMP_GRAPH_HPP
