#ifndef HOPFSIMP_HOPF_HPP
#define HOPFSIMP_HOPF_HPP

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfsimp/complex.hpp"
#include "hopfsimp/core.hpp"
#include "hopfsimp/graph.hpp"

namespace hopfsimp {

/// Finite formal combination of isomorphism classes with rational
/// coefficients. Keys are canonical forms; zero coefficients are never stored.
class LinComb {
public:
    using Terms = std::map<SimplicialComplex, Rational>;

    LinComb() = default;

    static LinComb basis(const SimplicialComplex& c, const Rational& coeff = Rational(1)) {
        LinComb r;
        r.add(c, coeff);
        return r;
    }

    static LinComb unit() { return basis(SimplicialComplex()); }

    /// Adds coeff * [c]; `c` need not be canonical.
    void add(const SimplicialComplex& c, const Rational& coeff) {
        add_canonical(canonical_form(c), coeff);
    }

    void add_canonical(const SimplicialComplex& c, const Rational& coeff) {
        if (coeff == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(c, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const SimplicialComplex& c) const {
        auto it = terms_.find(canonical_form(c));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient_sum() const {
        Rational s = 0;
        for (const auto& [c, k] : terms_) {
            s += k;
        }
        return s;
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [c, k] : o.terms_) {
            add_canonical(c, k);
        }
        return *this;
    }

    LinComb& operator-=(const LinComb& o) {
        for (const auto& [c, k] : o.terms_) {
            add_canonical(c, -k);
        }
        return *this;
    }

    LinComb& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [c, k] : terms_) {
            k *= s;
        }
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
    friend bool operator==(const LinComb&, const LinComb&) = default;

private:
    Terms terms_;
};

/// Element of A ⊗ A keyed by pairs of canonical complexes.
class TensorLinComb {
public:
    using Key = std::pair<SimplicialComplex, SimplicialComplex>;
    using Terms = std::map<Key, Rational>;

    void add_canonical(const SimplicialComplex& left, const SimplicialComplex& right,
                       const Rational& coeff) {
        if (coeff == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(Key{left, right}, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    void add(const SimplicialComplex& left, const SimplicialComplex& right, const Rational& coeff) {
        add_canonical(canonical_form(left), canonical_form(right), coeff);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// The tensor with its two factors exchanged.
    TensorLinComb swapped() const {
        TensorLinComb r;
        for (const auto& [k, c] : terms_) {
            r.add_canonical(k.second, k.first, c);
        }
        return r;
    }

    friend bool operator==(const TensorLinComb&, const TensorLinComb&) = default;

private:
    Terms terms_;
};

/// Element of A ⊗ A ⊗ A, used for the coassociativity check.
using TripleKey = std::tuple<SimplicialComplex, SimplicialComplex, SimplicialComplex>;
using TripleTensor = std::map<TripleKey, Rational>;

inline void add_term(TripleTensor& t, TripleKey key, const Rational& coeff) {
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = t.try_emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            t.erase(it);
        }
    }
}

/// Bilinear extension of disjoint union.
inline LinComb product(const LinComb& a, const LinComb& b) {
    LinComb r;
    for (const auto& [x, cx] : a.terms()) {
        for (const auto& [y, cy] : b.terms()) {
            r.add(disjoint_union(x, y), cx * cy);
        }
    }
    return r;
}

/// Δ(Γ) = Σ_T Γ_T ⊗ Γ_{V−T}.
inline TensorLinComb coproduct(const SimplicialComplex& c) {
    TensorLinComb r;
    const VertexSet all = c.vertex_set();
    VertexSet t = all;
    while (true) {
        r.add(induced(c, t), induced(c, all & ~t), Rational(1));
        if (t == 0) {
            break;
        }
        t = (t - 1) & all;
    }
    return r;
}

inline TensorLinComb coproduct(const LinComb& a) {
    TensorLinComb r;
    for (const auto& [c, k] : a.terms()) {
        const TensorLinComb dc = coproduct(c);
        for (const auto& [key, v] : dc.terms()) {
            r.add_canonical(key.first, key.second, k * v);
        }
    }
    return r;
}

/// ε(Γ) = 1 for the unit complex, 0 otherwise.
inline Rational counit(const SimplicialComplex& c) { return c.is_unit() ? Rational(1) : Rational(0); }

inline Rational counit(const LinComb& a) {
    Rational r = 0;
    for (const auto& [c, k] : a.terms()) {
        r += k * counit(c);
    }
    return r;
}

/// φ_k applied termwise.
inline LinComb skeleton_map(const LinComb& a, int k) {
    LinComb r;
    for (const auto& [c, coeff] : a.terms()) {
        r.add(k_skeleton(c, k), coeff);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Antipode

/// One summand of the flat formula for S(Γ).
struct AntipodeRow {
    Flat flat;
    int sign;                      // (-1)^{c(F)}
    Integer acyclic;               // a(Γ^{(1)}/F)
    SimplicialComplex complex;     // Γ_{V,F}, in the original labels
};

/// Uncollected flat-formula rows, ordered as flats(): by rank, then block list.
inline std::vector<AntipodeRow> antipode_table(const SimplicialComplex& c) {
    if (c.is_unit()) {
        throw InputError("antipode table requires at least one vertex");
    }
    const Graph skeleton = one_skeleton_graph(c);
    std::vector<Flat> fl = flats(skeleton);
    std::vector<AntipodeRow> rows(fl.size());
    parallel_for(fl.size(), [&](std::size_t i) {
        const Flat& f = fl[i];
        rows[i] = AntipodeRow{f, sign_power(f.component_count()),
                              acyclic_orientations(contract(skeleton, f)), gamma_VF(c, f)};
    });
    return rows;
}

/// S(Γ) = Σ_F (−1)^{c(F)} a(Γ^{(1)}/F) Γ_{V,F}, collected by isomorphism class.
inline LinComb antipode_flat(const SimplicialComplex& c) {
    if (c.is_unit()) {
        return LinComb::unit();
    }
    LinComb r;
    for (const AntipodeRow& row : antipode_table(c)) {
        r.add(row.complex, Rational(row.acyclic * row.sign));
    }
    return r;
}

inline LinComb antipode_flat(const LinComb& a) {
    LinComb r;
    for (const auto& [c, k] : a.terms()) {
        r += antipode_flat(c) * k;
    }
    return r;
}

inline MemoCache<SimplicialComplex, LinComb>& recursive_antipode_cache() {
    static MemoCache<SimplicialComplex, LinComb> cache;
    return cache;
}

/// Oracle: S(Γ) = −Γ − Σ_{∅ ⊊ T ⊊ V} S(Γ_T)·Γ_{V−T}, memoized by class.
inline LinComb antipode_recursive(const SimplicialComplex& c) {
    if (c.is_unit()) {
        return LinComb::unit();
    }
    const SimplicialComplex key = canonical_form(c);
    if (auto hit = recursive_antipode_cache().find(key)) {
        return *hit;
    }
    LinComb r = -LinComb::basis(key);
    const VertexSet all = key.vertex_set();
    for (VertexSet t = (all - 1) & all; t != 0; t = (t - 1) & all) {
        const LinComb left = antipode_recursive(induced(key, t));
        r -= product(left, LinComb::basis(induced(key, all & ~t)));
    }
    recursive_antipode_cache().insert(key, r);
    return r;
}

inline LinComb antipode_recursive(const LinComb& a) {
    LinComb r;
    for (const auto& [c, k] : a.terms()) {
        r += antipode_recursive(c) * k;
    }
    return r;
}

/// True when every table row landing on the same isomorphism class carries
/// the same sign, so collecting the rows never cancels anything.
inline bool antipode_is_cancellation_free(const SimplicialComplex& c) {
    std::map<SimplicialComplex, int> sign_of;
    for (const AntipodeRow& row : antipode_table(c)) {
        const int sign = row.acyclic * row.sign > 0 ? 1 : -1;
        auto [it, inserted] = sign_of.try_emplace(canonical_form(row.complex), sign);
        if (!inserted && it->second != sign) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Axiom checks

struct AxiomCheck {
    std::string axiom;
    bool passed;
};

struct HopfAxiomReport {
    SimplicialComplex complex;
    std::vector<AxiomCheck> checks;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& a) { return a.passed; });
    }
};

/// m∘(S⊗Id)∘Δ = u∘ε and its mirror, coassociativity, both counit laws and
/// cocommutativity, each evaluated on the basis element Γ.
inline HopfAxiomReport verify_hopf_axioms(const SimplicialComplex& c) {
    HopfAxiomReport report{canonical_form(c), {}};
    const TensorLinComb delta = coproduct(c);
    const LinComb expected = LinComb::unit() * counit(c);

    LinComb left;
    LinComb right;
    for (const auto& [key, k] : delta.terms()) {
        left += product(antipode_flat(key.first), LinComb::basis(key.second)) * k;
        right += product(LinComb::basis(key.first), antipode_flat(key.second)) * k;
    }
    report.checks.push_back({"antipode_left", left == expected});
    report.checks.push_back({"antipode_right", right == expected});

    TripleTensor outer_left;
    TripleTensor outer_right;
    for (const auto& [key, k] : delta.terms()) {
        const TensorLinComb d1 = coproduct(key.first);
        for (const auto& [inner, v] : d1.terms()) {
            add_term(outer_left, {inner.first, inner.second, key.second}, k * v);
        }
        const TensorLinComb d2 = coproduct(key.second);
        for (const auto& [inner, v] : d2.terms()) {
            add_term(outer_right, {key.first, inner.first, inner.second}, k * v);
        }
    }
    report.checks.push_back({"coassociativity", outer_left == outer_right});

    LinComb counit_left;
    LinComb counit_right;
    for (const auto& [key, k] : delta.terms()) {
        counit_left.add_canonical(key.second, k * counit(key.first));
        counit_right.add_canonical(key.first, k * counit(key.second));
    }
    const LinComb self = LinComb::basis(c);
    report.checks.push_back({"counit_left", counit_left == self});
    report.checks.push_back({"counit_right", counit_right == self});
    report.checks.push_back({"cocommutativity", delta.swapped() == delta});
    return report;
}

// ---------------------------------------------------------------------------
// Traces of S on the graded pieces

/// Σ over classes Γ on n vertices of (−1)^{c(Γ)}, c = components of Γ^{(1)}.
inline Integer trace_antipode(int n) {
    Integer total = 0;
    for (const SimplicialComplex& c : enumerate_complexes(n)) {
        total += sign_power(component_count(c));
    }
    return total;
}

/// Multiset counts mult(k, n): coefficient of y^k x^n in
/// ∏_{c connected} (1 − y x^{|V(c)|})^{−1}. Row k, column n.
inline std::vector<std::vector<Integer>> multiplicative_basis_counts(int n) {
    if (n > kEnumerationLimit) {
        throw CapacityError("trace computation is limited to n <= " +
                            std::to_string(kEnumerationLimit));
    }
    std::vector<Integer> connected(static_cast<std::size_t>(n) + 1, 0);
    for (int d = 1; d <= n; ++d) {
        for (const SimplicialComplex& c : enumerate_complexes(d)) {
            if (component_count(c) == 1) {
                connected[static_cast<std::size_t>(d)] += 1;
            }
        }
    }
    const auto size = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<Integer>> g(size, std::vector<Integer>(size, 0));
    g[0][0] = 1;
    // Each connected class of degree d contributes a factor 1/(1 − y x^d).
    for (int d = 1; d <= n; ++d) {
        for (Integer copies = 0; copies < connected[static_cast<std::size_t>(d)]; ++copies) {
            for (int k = 1; k <= n; ++k) {
                for (int m = d; m <= n; ++m) {
                    g[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] +=
                        g[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - d)];
                }
            }
        }
    }
    return g;
}

/// Σ_k (−1)^k mult(k, n).
inline Integer trace_mult_basis(int n) {
    const auto g = multiplicative_basis_counts(n);
    Integer total = 0;
    for (int k = 0; k <= n; ++k) {
        total += g[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] * sign_power(k);
    }
    return total;
}

}  // namespace hopfsimp

#endif  // HOPFSIMP_HOPF_HPP
