// Slow, independent reference implementations used only by the tests.
#ifndef HOPFSIMP_TESTS_ORACLES_HPP
#define HOPFSIMP_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hopfsimp/hopfsimp.hpp"

namespace oracle {

using namespace hopfsimp;

/// All faces of c as a sorted mask list, found by testing every subset.
inline std::vector<VertexSet> face_masks(const SimplicialComplex& c) {
    std::vector<VertexSet> out;
    for (VertexSet x = 0; x < (VertexSet{1} << c.vertex_count()); ++x) {
        for (VertexSet f : c.facet_masks()) {
            if ((x & ~f) == 0) {
                out.push_back(x);
                break;
            }
        }
    }
    return out;
}

inline VertexSet permute_mask(VertexSet x, const std::vector<int>& perm) {
    VertexSet y = 0;
    for (std::size_t v = 0; v < perm.size(); ++v) {
        if (contains(x, static_cast<int>(v))) {
            y |= VertexSet{1} << perm[v];
        }
    }
    return y;
}

/// Smallest sorted face list over all n! relabellings.
inline std::vector<VertexSet> brute_invariant(const SimplicialComplex& c) {
    std::vector<int> perm(static_cast<std::size_t>(c.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    const std::vector<VertexSet> faces = face_masks(c);
    std::vector<VertexSet> best;
    do {
        std::vector<VertexSet> image;
        image.reserve(faces.size());
        for (VertexSet f : faces) {
            image.push_back(permute_mask(f, perm));
        }
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) {
            best = std::move(image);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool brute_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count() == b.vertex_count() && brute_invariant(a) == brute_invariant(b);
}

/// Every labelled complex on n vertices in which all singletons are faces.
inline std::vector<SimplicialComplex> labelled_complexes(int n) {
    std::vector<VertexSet> big;
    for (VertexSet x = 1; x < (VertexSet{1} << n); ++x) {
        if (popcount(x) >= 2) {
            big.push_back(x);
        }
    }
    std::vector<SimplicialComplex> out;
    const std::uint64_t total = std::uint64_t{1} << big.size();
    for (std::uint64_t pick = 0; pick < total; ++pick) {
        std::set<VertexSet> family;
        for (std::size_t i = 0; i < big.size(); ++i) {
            if ((pick >> i) & 1U) {
                family.insert(big[i]);
            }
        }
        bool closed = true;
        for (VertexSet x : family) {
            for (int v = 0; v < n && closed; ++v) {
                const VertexSet sub = x & ~(VertexSet{1} << v);
                if (contains(x, v) && popcount(sub) >= 2 && family.count(sub) == 0) {
                    closed = false;
                }
            }
        }
        if (!closed) {
            continue;
        }
        std::vector<VertexSet> sets(family.begin(), family.end());
        for (int v = 0; v < n; ++v) {
            sets.push_back(VertexSet{1} << v);
        }
        out.push_back(SimplicialComplex::from_masks(n, sets));
    }
    return out;
}

inline std::size_t class_count(int n) {
    std::set<std::vector<VertexSet>> seen;
    for (const SimplicialComplex& c : labelled_complexes(n)) {
        seen.insert(brute_invariant(c));
    }
    return seen.size();
}

/// Orientations of g with no directed cycle, by trying all 2^m of them.
inline Integer acyclic_orientations(const Graph& g) {
    const std::vector<Edge> edges = g.edges();
    const int n = g.vertex_count();
    Integer count = 0;
    for (std::uint64_t o = 0; o < (std::uint64_t{1} << edges.size()); ++o) {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
        std::vector<int> indeg(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if ((o >> i) & 1U) {
                std::swap(u, v);
            }
            out[static_cast<std::size_t>(u)].push_back(v);
            ++indeg[static_cast<std::size_t>(v)];
        }
        std::vector<int> ready;
        for (int v = 0; v < n; ++v) {
            if (indeg[static_cast<std::size_t>(v)] == 0) {
                ready.push_back(v);
            }
        }
        int removed = 0;
        while (!ready.empty()) {
            const int v = ready.back();
            ready.pop_back();
            ++removed;
            for (int w : out[static_cast<std::size_t>(v)]) {
                if (--indeg[static_cast<std::size_t>(w)] == 0) {
                    ready.push_back(w);
                }
            }
        }
        if (removed == n) {
            ++count;
        }
    }
    return count;
}

/// Colourings with t colours such that no face has more than s vertices of
/// a single colour. Checks every face, not only facets.
inline Integer colourings(const SimplicialComplex& c, int s, int t) {
    const int n = c.vertex_count();
    const std::vector<VertexSet> faces = face_masks(c);
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    Integer count = 0;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(t);
    }
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t r = code;
        for (int i = 0; i < n; ++i) {
            colour[static_cast<std::size_t>(i)] = static_cast<int>(r % static_cast<std::uint64_t>(t));
            r /= static_cast<std::uint64_t>(t);
        }
        bool ok = true;
        for (VertexSet f : faces) {
            for (int k = 0; k < t && ok; ++k) {
                int same = 0;
                for (int v = 0; v < n; ++v) {
                    same += (contains(f, v) && colour[static_cast<std::size_t>(v)] == k) ? 1 : 0;
                }
                ok = same <= s;
            }
            if (!ok) {
                break;
            }
        }
        count += ok ? 1 : 0;
    }
    return count;
}

/// Lagrange interpolation of the chromatic polynomial through t = 0..n.
inline PolyT interpolated_chromatic(const SimplicialComplex& c, int s) {
    const int n = c.vertex_count();
    PolyT total;
    for (int i = 0; i <= n; ++i) {
        PolyT basis(Rational(1));
        for (int j = 0; j <= n; ++j) {
            if (j != i) {
                basis *= PolyT{Rational(-j), Rational(1)};
                basis *= PolyT(Rational(1) / Rational(i - j));
            }
        }
        total += basis * PolyT(Rational(colourings(c, s, i)));
    }
    return total;
}

/// Takeuchi's formula: S(Γ) = Σ_k (−1)^k Σ over ordered set partitions
/// (B_1..B_k) of V of Γ_{B_1}···Γ_{B_k}.
inline LinComb takeuchi_antipode(const SimplicialComplex& c) {
    LinComb out;
    const VertexSet all = c.vertex_set();
    if (all == 0) {
        return LinComb::unit();
    }
    std::vector<VertexSet> blocks;
    const auto rec = [&](auto&& self, VertexSet rest) -> void {
        if (rest == 0) {
            std::vector<VertexSet> sets;
            for (VertexSet f : c.facet_masks()) {
                for (VertexSet b : blocks) {
                    if ((f & b) != 0) {
                        sets.push_back(f & b);
                    }
                }
            }
            out.add(SimplicialComplex::from_masks(c.vertex_count(), sets),
                    Rational(sign_power(static_cast<int>(blocks.size()))));
            return;
        }
        for (VertexSet b = rest; b != 0; b = (b - 1) & rest) {
            blocks.push_back(b);
            self(self, rest & ~b);
            blocks.pop_back();
        }
    };
    rec(rec, all);
    return out;
}

/// Sparse polynomial in `vars` commuting variables, keyed by exponent vector.
using Monomials = std::map<std::vector<int>, Integer>;

/// m_λ in `vars` variables: every distinct arrangement of λ padded with zeros.
inline Monomials expand_m(const Partition& lambda, int vars) {
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    for (int i = 0; i < lambda.length(); ++i) {
        e[static_cast<std::size_t>(i)] = lambda.part(i);
    }
    std::sort(e.begin(), e.end());
    Monomials out;
    do {
        out[e] = 1;
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

/// Coefficient of m_μ in m_λ·m_ν, read off the product polynomial in
/// λ-length + ν-length variables.
inline Integer m_product_coefficient(const Partition& lambda, const Partition& nu, const Partition& mu) {
    const int vars = std::max(1, lambda.length() + nu.length());
    if (mu.length() > vars) {
        return 0;
    }
    const Monomials a = expand_m(lambda, vars);
    const Monomials b = expand_m(nu, vars);
    std::vector<int> target(static_cast<std::size_t>(vars), 0);
    for (int i = 0; i < mu.length(); ++i) {
        target[static_cast<std::size_t>(i)] = mu.part(i);
    }
    Integer total = 0;
    for (const auto& [ea, ca] : a) {
        std::vector<int> need(target.size());
        bool ok = true;
        for (std::size_t i = 0; i < target.size() && ok; ++i) {
            need[i] = target[i] - ea[i];
            ok = need[i] >= 0;
        }
        if (ok) {
            if (auto it = b.find(need); it != b.end()) {
                total += ca * it->second;
            }
        }
    }
    return total;
}

/// Uniformly random labelled complex on n vertices: random subsets closed
/// downwards.
inline SimplicialComplex random_complex(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<VertexSet> pick(1, (VertexSet{1} << n) - 1);
    std::uniform_int_distribution<int> howmany(0, 2 * n);
    std::vector<VertexSet> sets;
    for (int v = 0; v < n; ++v) {
        sets.push_back(VertexSet{1} << v);
    }
    const int k = howmany(rng);
    for (int i = 0; i < k; ++i) {
        sets.push_back(pick(rng));
    }
    return SimplicialComplex::from_masks(n, sets);
}

}  // namespace oracle

#endif  // HOPFSIMP_TESTS_ORACLES_HPP
