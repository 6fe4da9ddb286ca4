#ifndef HOPFSIMP_VERIFY_HPP
#define HOPFSIMP_VERIFY_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfsimp/characters.hpp"
#include "hopfsimp/complex.hpp"
#include "hopfsimp/graph.hpp"
#include "hopfsimp/hopf.hpp"
#include "hopfsimp/io.hpp"
#include "hopfsimp/symfunc.hpp"

namespace hopfsimp {

/// Both sides of one identity instance, computed exactly.
struct VerificationReport {
    std::string identity;
    json parameters = json::object();
    std::string lhs;
    std::string rhs;
    bool equal = false;

    json to_json() const {
        return json{{"identity", identity}, {"parameters", parameters}, {"lhs", lhs}, {"rhs", rhs}, {"equal", equal}};
    }

    std::string to_line() const {
        return std::string(equal ? "EQUAL    " : "NOT EQUAL") + "  " + identity + " " + parameters.dump() +
               "  lhs=" + lhs + "  rhs=" + rhs;
    }
};

/// ps¹(Ψ_φ(Γ))(−1).
inline PolyQ specialization_at_minus_one(const SimplicialComplex& c, const Character& phi) {
    return evaluate(psi(c, phi), Integer(-1));
}

/// (−1)^{|V|} Σ_F a(Γ^{(1)}/F) ζ_{s,q}(Γ_{V,F}): the flat-side expansion of
/// ps¹(Ψ_{ζ_{s,−q}}(Γ))(−1).
inline PolyQ negq_specialization_via_flats(const SimplicialComplex& c, int s) {
    const Character zq = Character::zeta_q(s);
    PolyQ total;
    for (const AntipodeRow& row : antipode_table(c)) {
        total += zq(row.complex) * PolyQ(Rational(row.acyclic));
    }
    return total * PolyQ(sign_power(c.vertex_count()));
}

/// ps¹(Ψ_{ζ_{s,−q}}(K_n))(−1) = (−1)^n A_n(q+1) = (−1)^n Σ_α binom(n;α) q^{n−l(α)}.
inline VerificationReport verify_kn_identity(int n, int s) {
    if (s <= 1) {
        throw InputError("the complete-graph identity needs s > 1");
    }
    if (n < 1) {
        throw InputError("the complete-graph identity needs n >= 1");
    }
    const SimplicialComplex kn = complete_complex(n);
    const PolyQ lhs = specialization_at_minus_one(kn, Character::zeta_negq(s));
    const PolyQ sign(sign_power(n));
    const PolyQ eulerian = eulerian_polynomial(n).compose(PolyQ{Rational(1), Rational(1)}) * sign;
    PolyQ composition_sum;
    for (const Composition& a : compositions(n)) {
        composition_sum += PolyQ::monomial(Rational(multinomial(a.parts())), n - a.length());
    }
    composition_sum *= sign;
    const PolyQ flat_side = negq_specialization_via_flats(kn, s);
    VerificationReport r;
    r.identity = "kn_eulerian";
    r.parameters = json{{"n", n}, {"s", s}};
    r.lhs = lhs.to_string();
    r.rhs = eulerian.to_string();
    r.equal = lhs == eulerian && eulerian == composition_sum && lhs == flat_side;
    return r;
}

/// ps¹(Ψ_{ζ_{s,−q}}(T))(−1) = (−1)^n (q+2)^{n−1} for a tree T on n vertices.
inline VerificationReport verify_tree_identity(const SimplicialComplex& tree, int s) {
    if (s <= 1) {
        throw InputError("the tree identity needs s > 1");
    }
    if (tree.dimension() > 1 || !is_tree(to_graph(tree))) {
        throw InputError("verify_tree_identity: input is not a tree");
    }
    const int n = tree.vertex_count();
    const PolyQ lhs = specialization_at_minus_one(tree, Character::zeta_negq(s));
    PolyQ rhs(sign_power(n));
    for (int i = 0; i < n - 1; ++i) {
        rhs *= PolyQ{Rational(2), Rational(1)};
    }
    VerificationReport r;
    r.identity = "tree";
    r.parameters = json{{"n", n}, {"s", s}, {"tree", to_text(tree)}};
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.equal = lhs == rhs && negq_specialization_via_flats(tree, s) == rhs;
    return r;
}

/// (−1)^{n−1} Σ_j (−1)^j S(k,j) (n)_j = Σ_α (−1)^{l(α)} binom(n;α) Σ_i α_i^k.
inline VerificationReport verify_star_identity(int n, int k) {
    if (n < 1 || k < 1) {
        throw InputError("the star identity needs n >= 1 and k >= 1");
    }
    Integer lhs = 0;
    for (int j = 1; j <= k; ++j) {
        lhs += stirling2(k, j) * falling_factorial(Integer(n), j) * sign_power(j);
    }
    lhs *= sign_power(n - 1);
    Integer rhs = 0;
    for (const Composition& a : compositions(n)) {
        Integer power_sum = 0;
        for (int part : a.parts()) {
            power_sum += boost::multiprecision::pow(Integer(part), static_cast<unsigned>(k));
        }
        rhs += multinomial(a.parts()) * power_sum * sign_power(a.length());
    }
    VerificationReport r;
    r.identity = "star_stirling";
    r.parameters = json{{"n", n}, {"k", k}};
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    r.equal = lhs == rhs;
    return r;
}

/// Flat-restricted sum against χ_s(Γ; −1).
inline VerificationReport verify_theorem45(const SimplicialComplex& c, int s) {
    const Integer lhs = chrom_minus1_via_flats(c, s);
    const Rational rhs = chromatic_poly_s(c, s).evaluate(Rational(-1));
    VerificationReport r;
    r.identity = "chromatic_minus_one";
    r.parameters = json{{"complex", to_text(c)}, {"s", s}};
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    r.equal = Rational(lhs) == rhs;
    return r;
}

inline VerificationReport verify_normalized_flat_sum(const Graph& g) {
    const Integer lhs = normalized_flat_sum(g);
    VerificationReport r;
    r.identity = "flat_sum_normalized";
    r.parameters = json{{"graph", to_text(to_complex(g))}};
    r.lhs = lhs.str();
    r.rhs = "1";
    r.equal = lhs == 1;
    return r;
}

inline VerificationReport verify_trace(int n) {
    const Integer lhs = trace_antipode(n);
    const Integer rhs = trace_mult_basis(n);
    VerificationReport r;
    r.identity = "trace";
    r.parameters = json{{"n", n}};
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    r.equal = lhs == rhs;
    return r;
}

/// Σ_λ f^λ K_{λ,μ} = binom(n; μ).
inline VerificationReport verify_kostka_identity(const Partition& mu) {
    Integer lhs = 0;
    for (const Partition& lambda : partitions(mu.weight())) {
        lhs += num_SYT(lambda) * kostka(lambda, mu);
    }
    const Integer rhs = multinomial(mu.parts());
    VerificationReport r;
    r.identity = "kostka";
    r.parameters = json{{"mu", mu.parts()}};
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    r.equal = lhs == rhs;
    return r;
}

inline VerificationReport verify_hopf(const SimplicialComplex& c) {
    const HopfAxiomReport axioms = verify_hopf_axioms(c);
    json flags = json::object();
    int passed = 0;
    for (const AxiomCheck& a : axioms.checks) {
        flags[a.axiom] = a.passed;
        passed += a.passed ? 1 : 0;
    }
    const LinComb flat = antipode_flat(c);
    const bool oracle = flat == antipode_recursive(c);
    const bool sum_law = flat.coefficient_sum() == Rational(sign_power(c.vertex_count()));
    flags["flat_equals_recursive"] = oracle;
    flags["coefficient_sum"] = sum_law;
    VerificationReport r;
    r.identity = "hopf_axioms";
    r.parameters = json{{"complex", to_text(c)}, {"checks", flags}};
    r.lhs = std::to_string(passed + (oracle ? 1 : 0) + (sum_law ? 1 : 0));
    r.rhs = std::to_string(axioms.checks.size() + 2);
    r.equal = r.lhs == r.rhs;
    return r;
}

/// Uniformly random labelled tree on n vertices from a Prüfer sequence.
inline Graph random_tree(int n, std::mt19937_64& rng) {
    Graph g(n);
    if (n <= 1) {
        return g;
    }
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (int& x : code) {
        x = pick(rng);
    }
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : code) {
        ++degree[static_cast<std::size_t>(x)];
    }
    for (int x : code) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[static_cast<std::size_t>(leaf)] == 1) {
                g.add_edge(leaf, x);
                --degree[static_cast<std::size_t>(leaf)];
                --degree[static_cast<std::size_t>(x)];
                break;
            }
        }
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) {
            if (u < 0) {
                u = v;
            } else {
                g.add_edge(u, v);
                break;
            }
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Suites behind `verify <name>`

struct SuiteOptions {
    int max_n = 4;
    std::uint64_t seed = 20150901;
};

inline std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& opt = {}) {
    const int max_n = std::min(opt.max_n, kEnumerationLimit);
    std::vector<VerificationReport> out;
    const bool all = name == "all";
    bool known = all;
    if (all || name == "hopf") {
        known = true;
        for (int n = 0; n <= max_n; ++n) {
            for (const SimplicialComplex& c : enumerate_complexes(n)) {
                out.push_back(verify_hopf(c));
            }
        }
    }
    if (all || name == "kn") {
        known = true;
        for (int n = 1; n <= 6; ++n) {
            out.push_back(verify_kn_identity(n, 2));
        }
    }
    if (all || name == "tree") {
        known = true;
        for (int n = 1; n <= 7; ++n) {
            out.push_back(verify_tree_identity(to_complex(path_graph(n)), 2));
            out.push_back(verify_tree_identity(to_complex(star_graph(n)), 2));
        }
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<int> size(2, 7);
        for (int i = 0; i < 20; ++i) {
            out.push_back(verify_tree_identity(to_complex(random_tree(size(rng), rng)), 2));
        }
    }
    if (all || name == "star") {
        known = true;
        for (int n = 1; n <= 7; ++n) {
            for (int k = 1; k <= 4; ++k) {
                out.push_back(verify_star_identity(n, k));
            }
        }
    }
    if (all || name == "theorem45") {
        known = true;
        for (int n = 1; n <= max_n; ++n) {
            for (const SimplicialComplex& c : enumerate_complexes(n)) {
                for (int s = 1; s <= 3; ++s) {
                    out.push_back(verify_theorem45(c, s));
                }
                if (c.dimension() <= 1) {
                    out.push_back(verify_normalized_flat_sum(to_graph(c)));
                }
            }
        }
    }
    if (all || name == "trace") {
        known = true;
        for (int n = 1; n <= max_n; ++n) {
            out.push_back(verify_trace(n));
        }
    }
    if (all || name == "kostka") {
        known = true;
        for (int n = 1; n <= 6; ++n) {
            for (const Partition& mu : partitions(n)) {
                out.push_back(verify_kostka_identity(mu));
            }
        }
    }
    if (!known) {
        throw InputError("unknown verification suite '" + name + "'");
    }
    return out;
}

}  // namespace hopfsimp

#endif  // HOPFSIMP_VERIFY_HPP
