#ifndef HOPFSIMP_CHARACTERS_HPP
#define HOPFSIMP_CHARACTERS_HPP

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfsimp/complex.hpp"
#include "hopfsimp/core.hpp"
#include "hopfsimp/graph.hpp"
#include "hopfsimp/hopf.hpp"
#include "hopfsimp/polynomial.hpp"
#include "hopfsimp/symfunc.hpp"

namespace hopfsimp {

/// Linear functional A → ℚ[q] given by its values on basis complexes.
class Character {
public:
    enum class Kind { zeta_s, zeta_sq, zeta_bar_s, zeta_bar_sq, composite };
    using Rule = std::function<PolyQ(const SimplicialComplex&)>;

    Character(Kind kind, int s, std::string name, Rule rule)
        : kind_(kind), s_(s), name_(std::move(name)), rule_(std::move(rule)) {}

    /// ζ_s(Γ) = 1 if dim Γ < s, else 0.
    static Character zeta(int s) {
        check_s(s);
        return {Kind::zeta_s, s, "zeta_" + std::to_string(s), [s](const SimplicialComplex& c) {
                    return PolyQ(c.dimension() < s ? 1 : 0);
                }};
    }

    /// ζ_{s,q}(Γ) = q^{rk Γ^{(1)}} ζ_s(Γ).
    static Character zeta_q(int s) {
        check_s(s);
        return {Kind::zeta_sq, s, "zeta_" + std::to_string(s) + ",q", [s](const SimplicialComplex& c) {
                    if (c.dimension() >= s) {
                        return PolyQ();
                    }
                    const int rank = c.vertex_count() - component_count(c);
                    return PolyQ::monomial(Rational(1), rank);
                }};
    }

    /// ζ_{s,−q}: q replaced by −q.
    static Character zeta_negq(int s) {
        const Character base = zeta_q(s);
        return {Kind::composite, s, "zeta_" + std::to_string(s) + ",-q",
                [base](const SimplicialComplex& c) { return negate_variable(base(c)); }};
    }

    /// φ̄(Γ) = (−1)^{|V(Γ)|} φ(Γ).
    static Character bar(const Character& phi) {
        Kind k = Kind::composite;
        if (phi.kind_ == Kind::zeta_s) {
            k = Kind::zeta_bar_s;
        } else if (phi.kind_ == Kind::zeta_sq) {
            k = Kind::zeta_bar_sq;
        }
        return {k, phi.s_, "bar(" + phi.name_ + ")", [phi](const SimplicialComplex& c) {
                    return phi(c) * PolyQ(sign_power(c.vertex_count()));
                }};
    }

    /// Convolution inverse φ⁻¹ = φ∘S, using the flat antipode.
    static Character inverse(const Character& phi) {
        return {Kind::composite, phi.s_, "inverse(" + phi.name_ + ")",
                [phi](const SimplicialComplex& c) { return phi(antipode_flat(c)); }};
    }

    static Character custom(std::string name, Rule rule) {
        return {Kind::composite, 0, std::move(name), std::move(rule)};
    }

    PolyQ operator()(const SimplicialComplex& c) const { return rule_(c); }

    PolyQ operator()(const LinComb& a) const {
        PolyQ r;
        for (const auto& [c, k] : a.terms()) {
            r += rule_(c) * PolyQ(k);
        }
        return r;
    }

    Kind kind() const { return kind_; }
    int s() const { return s_; }
    const std::string& name() const { return name_; }

private:
    static void check_s(int s) {
        if (s < 1) {
            throw InputError("character parameter s must be >= 1");
        }
    }

    Kind kind_;
    int s_;
    std::string name_;
    Rule rule_;
};

inline PolyQ zeta_s(const SimplicialComplex& c, int s) { return Character::zeta(s)(c); }
inline PolyQ zeta_sq(const SimplicialComplex& c, int s) { return Character::zeta_q(s)(c); }

/// (φ ψ)(Γ) = Σ_T φ(Γ_T) ψ(Γ_{V−T}).
inline PolyQ convolve(const Character& phi, const Character& psi, const SimplicialComplex& c) {
    PolyQ total;
    const VertexSet all = c.vertex_set();
    VertexSet t = all;
    while (true) {
        total += phi(induced(c, t)) * psi(induced(c, all & ~t));
        if (t == 0) {
            break;
        }
        t = (t - 1) & all;
    }
    return total;
}

/// φ⁻¹(Γ) = φ(S(Γ)).
inline PolyQ char_inverse(const Character& phi, const SimplicialComplex& c) {
    return phi(antipode_flat(c));
}

namespace detail {

/// φ(Γ_B) for every vertex subset B, indexed by mask.
inline std::vector<PolyQ> subset_values(const SimplicialComplex& c, const Character& phi) {
    const std::size_t count = std::size_t{1} << c.vertex_count();
    std::vector<PolyQ> vals(count);
    parallel_for(count, [&](std::size_t mask) {
        vals[mask] = phi(induced(c, static_cast<VertexSet>(mask)));
    });
    return vals;
}

/// Σ over ordered set partitions (B_1..B_l) with |B_i| = parts[i] of ∏ vals[B_i].
inline PolyQ ordered_partition_sum(int n, const std::vector<int>& parts, const std::vector<PolyQ>& vals) {
    std::vector<int> prefix(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        prefix[i + 1] = prefix[i] + parts[i];
    }
    std::vector<std::optional<PolyQ>> memo(std::size_t{1} << n);
    // The remaining set's size pins down which block comes next.
    const std::function<PolyQ(VertexSet)> rec = [&](VertexSet remaining) -> PolyQ {
        if (remaining == 0) {
            return PolyQ(1);
        }
        auto& slot = memo[remaining];
        if (slot) {
            return *slot;
        }
        const int used = n - popcount(remaining);
        const auto idx = static_cast<std::size_t>(
            std::lower_bound(prefix.begin(), prefix.end(), used) - prefix.begin());
        const int size = parts[idx];
        PolyQ total;
        for (VertexSet sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
            if (popcount(sub) != size || vals[sub].is_zero()) {
                continue;
            }
            total += vals[sub] * rec(remaining & ~sub);
        }
        slot = total;
        return total;
    };
    return rec(full_set(n));
}

}  // namespace detail

/// Coefficient of M_α in Ψ_φ(Γ).
inline PolyQ psi_coefficient(const SimplicialComplex& c, const Character& phi, const Composition& alpha) {
    if (alpha.weight() != c.vertex_count()) {
        throw InputError("composition weight differs from the vertex count");
    }
    return detail::ordered_partition_sum(c.vertex_count(), alpha.parts(), detail::subset_values(c, phi));
}

/// Ψ_φ(Γ) in the m basis. The coefficient of m_λ is the M_λ coefficient,
/// taken over ordered set partitions whose block sizes follow λ.
inline SymPoly psi(const SimplicialComplex& c, const Character& phi) {
    const int n = c.vertex_count();
    const std::vector<PolyQ> vals = detail::subset_values(c, phi);
    const std::vector<Partition> lambdas = partitions(n);
    std::vector<PolyQ> coeffs(lambdas.size());
    parallel_for(lambdas.size(), [&](std::size_t i) {
        coeffs[i] = detail::ordered_partition_sum(n, lambdas[i].parts(), vals);
    });
    SymPoly out(n);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        out.add(lambdas[i], coeffs[i]);
    }
    return out;
}

/// χ_s(Γ; t) = ps¹(Ψ_{ζ_s}(Γ))(t).
inline PolyT chromatic_poly_s(const SimplicialComplex& c, int s) {
    return constant_in_q(principal_specialization(psi(c, Character::zeta(s))));
}

inline constexpr double kBruteForceColouringLimit = 1e8;

/// Counts colourings V → {1..t} in which no face holds more than s vertices
/// of one colour, by trying all t^n of them.
inline Integer brute_force_chromatic(const SimplicialComplex& c, int s, int t) {
    const int n = c.vertex_count();
    if (t < 0) {
        throw InputError("colour count must be nonnegative");
    }
    if (std::pow(static_cast<double>(t), n) > kBruteForceColouringLimit) {
        throw CapacityError("brute-force colouring limited to t^n <= 1e8");
    }
    if (n == 0) {
        return 1;
    }
    if (t == 0) {
        return 0;
    }
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    std::vector<int> tally(static_cast<std::size_t>(t), 0);
    Integer count = 0;
    while (true) {
        bool ok = true;
        for (VertexSet f : c.facet_masks()) {
            if (popcount(f) <= s) {
                continue;
            }
            std::fill(tally.begin(), tally.end(), 0);
            for (VertexSet r = f; r != 0 && ok; r &= r - 1) {
                ok = ++tally[static_cast<std::size_t>(colour[static_cast<std::size_t>(std::countr_zero(r))])] <= s;
            }
            if (!ok) {
                break;
            }
        }
        if (ok) {
            ++count;
        }
        int i = 0;
        while (i < n && ++colour[static_cast<std::size_t>(i)] == t) {
            colour[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == n) {
            break;
        }
    }
    return count;
}

/// Σ over flats F of Γ^{(1)} with dim Γ_{V,F} < s of (−1)^{c(F)} a(Γ^{(1)}/F).
inline Integer chrom_minus1_via_flats(const SimplicialComplex& c, int s) {
    if (s < 1) {
        throw InputError("s must be >= 1");
    }
    if (c.is_unit()) {
        return 1;
    }
    Integer total = 0;
    for (const AntipodeRow& row : antipode_table(c)) {
        if (row.complex.dimension() < s) {
            total += row.acyclic * row.sign;
        }
    }
    return total;
}

/// Σ_F (−1)^{rk F} a(G/F); equals 1 for every graph.
inline Integer normalized_flat_sum(const Graph& g) {
    Integer total = 0;
    for (const Flat& f : flats(g)) {
        total += acyclic_orientations(contract(g, f)) * sign_power(f.rank());
    }
    return total;
}

/// Recovers (f_0, ..., f_d) from (n−i)! f_{i−1} = [m_{(i,1^{n−i})}](Ψ_{ζ_i} − Ψ_{ζ_{i−1}}),
/// with Ψ_{ζ_0} = 1.
inline FVector f_vector_via_psi(const SimplicialComplex& c) {
    const int n = c.vertex_count();
    FVector out;
    if (n == 0) {
        return out;
    }
    const auto hook = [n](int i) {
        std::vector<int> parts{i};
        parts.insert(parts.end(), static_cast<std::size_t>(n - i), 1);
        return Composition(parts);
    };
    for (int i = 1; i <= n; ++i) {
        const Composition shape = hook(i);
        PolyQ diff = psi_coefficient(c, Character::zeta(i), shape);
        if (i > 1) {
            diff -= psi_coefficient(c, Character::zeta(i - 1), shape);
        }
        const Rational f = diff.coefficient(0) / Rational(factorial(n - i));
        if (f == 0) {
            break;  // faces are downward closed: no larger faces either
        }
        out.push_back(boost::multiprecision::numerator(f));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Euler character and the even / odd subalgebras

/// (ζ̄ ζ)(Γ) = Σ_{A ⊎ B = V} (−1)^{|A|} ζ(Γ_A) ζ(Γ_B).
inline PolyQ euler_character(const SimplicialComplex& c, const Character& zeta) {
    return convolve(Character::bar(zeta), zeta, c);
}

inline PolyQ euler_character(const SimplicialComplex& c, int s) {
    return euler_character(c, Character::zeta(s));
}

/// ζ̄ζ(Γ_A) = ε(Γ_A) for every A ⊆ V.
inline bool is_eulerian(const SimplicialComplex& c, int s) {
    const Character zeta = Character::zeta(s);
    const VertexSet all = c.vertex_set();
    VertexSet a = all;
    while (true) {
        const SimplicialComplex sub = induced(c, a);
        if (euler_character(sub, zeta) != PolyQ(counit(sub))) {
            return false;
        }
        if (a == 0) {
            break;
        }
        a = (a - 1) & all;
    }
    return true;
}

/// (Id ⊗ middle ⊗ Id)∘Δ^{(2)}(Γ), with Δ^{(2)} = (Δ ⊗ Id)∘Δ. The middle
/// character is applied before collecting, so the triple tensor never exists.
inline std::map<std::pair<SimplicialComplex, SimplicialComplex>, PolyQ>
middle_slot_tensor(const SimplicialComplex& c, const Character& middle) {
    const int n = c.vertex_count();
    const std::vector<PolyQ> mid = detail::subset_values(c, middle);
    std::vector<SimplicialComplex> canon(std::size_t{1} << n);
    for (std::size_t m = 0; m < canon.size(); ++m) {
        canon[m] = canonical_form(induced(c, static_cast<VertexSet>(m)));
    }
    std::map<std::pair<SimplicialComplex, SimplicialComplex>, PolyQ> out;
    const VertexSet all = c.vertex_set();
    // Δ(Γ) = Σ_T Γ_T ⊗ Γ_{V−T}; then Δ(Γ_T) = Σ_{A ⊆ T} Γ_A ⊗ Γ_{T−A}.
    VertexSet t = all;
    while (true) {
        VertexSet a = t;
        while (true) {
            const PolyQ& value = mid[t & ~a];
            if (!value.is_zero()) {
                auto key = std::make_pair(canon[a], canon[all & ~t]);
                auto [it, inserted] = out.try_emplace(key, value);
                if (!inserted) {
                    it->second += value;
                    if (it->second.is_zero()) {
                        out.erase(it);
                    }
                }
            }
            if (a == 0) {
                break;
            }
            a = (a - 1) & t;
        }
        if (t == 0) {
            break;
        }
        t = (t - 1) & all;
    }
    return out;
}

/// Membership of Γ in the even subalgebra: (Id ⊗ (ζ̄ − ζ) ⊗ Id)∘Δ^{(2)}(Γ) = 0.
inline bool in_even(const SimplicialComplex& c, int s) {
    const Character zeta = Character::zeta(s);
    const Character bar = Character::bar(zeta);
    const Character diff = Character::custom("bar - zeta", [zeta, bar](const SimplicialComplex& x) {
        return bar(x) - zeta(x);
    });
    return middle_slot_tensor(c, diff).empty();
}

/// Membership of Γ in the odd subalgebra: (Id ⊗ (ζ̄ − ζ⁻¹) ⊗ Id)∘Δ^{(2)}(Γ) = 0.
inline bool in_odd(const SimplicialComplex& c, int s) {
    const Character zeta = Character::zeta(s);
    const Character bar = Character::bar(zeta);
    const Character inv = Character::inverse(zeta);
    const Character diff = Character::custom("bar - inverse", [inv, bar](const SimplicialComplex& x) {
        return bar(x) - inv(x);
    });
    return middle_slot_tensor(c, diff).empty();
}

}  // namespace hopfsimp

#endif  // HOPFSIMP_CHARACTERS_HPP
