#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "oracles.hpp"

using namespace hopfsimp;

namespace {

Graph paw_graph() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

PolyT t_poly(std::initializer_list<int> ascending) {
    std::vector<Rational> c;
    for (int x : ascending) {
        c.emplace_back(x);
    }
    return PolyT(c);
}

/// All graphs on n labelled vertices.
std::vector<Graph> all_graphs(int n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::vector<Graph> out;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pairs.size()); ++pick) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((pick >> i) & 1U) {
                g.add_edge(pairs[i].first, pairs[i].second);
            }
        }
        out.push_back(g);
    }
    return out;
}

}  // namespace

TEST_CASE("graph construction rejects loops and bad endpoints") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
    CHECK_THROWS_AS(to_graph(simplex_complex(2)), InputError);
}

TEST_CASE("flat counts") {
    CHECK(flats(paw_graph()).size() == 10);
    CHECK(flats(edgeless_graph(4)).size() == 1);
    CHECK(flats(complete_graph(3)).size() == 5);
    for (int n = 1; n <= 7; ++n) {
        CHECK(flats(path_graph(n)).size() == (std::size_t{1} << (n - 1)));
        CHECK(flats(star_graph(n)).size() == (std::size_t{1} << (n - 1)));
    }
}

TEST_CASE("every enumerated flat is closed and has c + rk = n") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        const int n = 1 + static_cast<int>(rng() % 6);
        Graph g(n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 2 == 0) {
                    g.add_edge(u, v);
                }
            }
        }
        for (const Flat& f : flats(g)) {
            CHECK(f.component_count() + f.rank() == n);
            CHECK_NOTHROW(Flat::from_edges(g, f.edges()));
        }
    }
}

TEST_CASE("flat count equals the number of closed edge subsets") {
    for (int n = 1; n <= 4; ++n) {
        for (const Graph& g : all_graphs(n)) {
            const auto edges = g.edges();
            std::size_t closed = 0;
            for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << edges.size()); ++pick) {
                std::vector<Edge> sub;
                for (std::size_t i = 0; i < edges.size(); ++i) {
                    if ((pick >> i) & 1U) {
                        sub.push_back(edges[i]);
                    }
                }
                try {
                    (void)Flat::from_edges(g, sub);
                    ++closed;
                } catch (const InputError&) {
                }
            }
            CHECK(flats(g).size() == closed);
        }
    }
}

TEST_CASE("contraction") {
    const Graph k3 = complete_graph(3);
    const std::vector<Edge> one{{0, 1}};
    const Flat f = Flat::from_edges(k3, one);
    const Graph c = contract(k3, f);
    CHECK(c.vertex_count() == 2);
    CHECK(c.edge_count() == 1);
    const Flat empty = Flat::from_edges(paw_graph(), std::vector<Edge>{});
    CHECK(contract(paw_graph(), empty).edges() == paw_graph().edges());
    const std::vector<Edge> two{{0, 1}, {2, 3}};
    CHECK(acyclic_orientations(contract(paw_graph(), Flat::from_edges(paw_graph(), two))) == 2);
    const std::vector<Edge> tri{{0, 1}, {0, 2}, {1, 2}};
    CHECK(acyclic_orientations(contract(paw_graph(), Flat::from_edges(paw_graph(), tri))) == 2);
}

TEST_CASE("non-closed edge sets are rejected as flats") {
    const std::vector<Edge> open{{0, 1}, {0, 2}};
    CHECK_THROWS_AS(Flat::from_edges(paw_graph(), open), InputError);
}

TEST_CASE("acyclic orientations") {
    CHECK(acyclic_orientations(paw_graph()) == 12);
    CHECK(acyclic_orientations(complete_graph(2)) == 2);
    CHECK(acyclic_orientations(complete_graph(4)) == 24);
}

TEST_CASE("acyclic orientations match direct enumeration for graphs up to six vertices") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : all_graphs(n)) {
            const Integer a = acyclic_orientations(g);
            CHECK(a == oracle::acyclic_orientations(g));
            CHECK(a > 0);
        }
    }
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
        Graph g(6);
        for (int u = 0; u < 6; ++u) {
            for (int v = u + 1; v < 6; ++v) {
                if (rng() % 2 == 0) {
                    g.add_edge(u, v);
                }
            }
        }
        CHECK(acyclic_orientations(g) == oracle::acyclic_orientations(g));
    }
}

TEST_CASE("a(G/F) is invariant under relabelling") {
    std::mt19937_64 rng(29);
    const Graph g = paw_graph();
    const SimplicialComplex c = to_complex(g);
    for (int i = 0; i < 10; ++i) {
        std::vector<int> perm{0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = to_graph(relabel(c, perm));
        std::multiset<Integer> a, b;
        for (const Flat& f : flats(g)) {
            a.insert(acyclic_orientations(contract(g, f)));
        }
        for (const Flat& f : flats(h)) {
            b.insert(acyclic_orientations(contract(h, f)));
        }
        CHECK(a == b);
    }
}

TEST_CASE("chromatic polynomials") {
    CHECK(chromatic_polynomial(complete_graph(3)) == t_poly({0, 2, -3, 1}));
    CHECK(chromatic_polynomial(edgeless_graph(3)) == PolyT::monomial(Rational(1), 3));
    // t(t−1)²(t−2)
    const PolyT paw = chromatic_polynomial(paw_graph());
    CHECK(paw == t_poly({0, -2, 5, -4, 1}));
    CHECK(paw.evaluate(Rational(-1)) == 12);
}

TEST_CASE("chromatic polynomial matches brute-force proper colourings") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : all_graphs(n)) {
            const PolyT p = chromatic_polynomial(g);
            const SimplicialComplex c = to_complex(g);
            for (int t = 1; t <= 3; ++t) {
                CHECK(p.evaluate(Rational(t)) == Rational(oracle::colourings(c, 1, t)));
            }
        }
    }
}

TEST_CASE("gamma_VF") {
    const SimplicialComplex paw = SimplicialComplex::from_facets(4, {{0, 1, 2}, {2, 3}});
    const Graph g = one_skeleton_graph(paw);
    const std::vector<Edge> tri{{0, 1}, {0, 2}, {1, 2}};
    CHECK(gamma_VF(paw, Flat::from_edges(g, tri)) == SimplicialComplex::from_facets(4, {{0, 1, 2}, {3}}));
    CHECK(gamma_VF(paw, Flat::from_edges(g, std::vector<Edge>{})) == SimplicialComplex::from_facets(4, {}));
    const SimplicialComplex s3 = simplex_complex(3);
    const Graph k4 = one_skeleton_graph(s3);
    CHECK(gamma_VF(s3, Flat::from_edges(k4, k4.edges())) == s3);
}

TEST_CASE("builders") {
    const Graph star = star_graph(4);
    CHECK(star.edge_count() == 3);
    CHECK(std::popcount(star.neighbours(0)) == 3);
    for (int v = 1; v < 4; ++v) {
        CHECK(std::popcount(star.neighbours(v)) == 1);
    }
    CHECK(one_skeleton_graph(simplex_complex(2)).edges() == complete_graph(3).edges());
    for (int s = 0; s <= 5; ++s) {
        CHECK(simplex_complex(s).dimension() == s);
    }
    CHECK(is_tree(path_graph(5)));
    CHECK(!is_tree(complete_graph(3)));
}
