#ifndef HOPFSIMP_SYMFUNC_HPP
#define HOPFSIMP_SYMFUNC_HPP

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfsimp/core.hpp"
#include "hopfsimp/polynomial.hpp"

namespace hopfsimp {

/// Ordered list of positive parts.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) {
            if (p <= 0) {
                throw InputError("composition parts must be positive");
            }
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    friend auto operator<=>(const Composition&, const Composition&) = default;
    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

/// Weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
                throw InputError("partition parts must be positive and weakly decreasing");
            }
        }
    }

    /// Sorts the parts of a composition.
    static Partition sorted(const Composition& a) {
        std::vector<int> p = a.parts();
        std::sort(p.begin(), p.end(), std::greater<>());
        return Partition(std::move(p));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    Composition as_composition() const { return Composition(parts_); }

    /// Number of distinct compositions rearranging to this partition.
    Integer rearrangement_count() const {
        Integer r = factorial(length());
        for (std::size_t i = 0; i < parts_.size();) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) {
                ++j;
            }
            r /= factorial(static_cast<int>(j - i));
            i = j;
        }
        return r;
    }

    /// λ ⊵ μ in dominance order (equal weights assumed).
    bool dominates(const Partition& mu) const {
        int a = 0;
        int b = 0;
        for (int i = 0; i < std::max(length(), mu.length()); ++i) {
            a += part(i);
            b += mu.part(i);
            if (a < b) {
                return false;
            }
        }
        return true;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n, lexicographically decreasing ((n) first).
inline std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    const std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// All 2^{n-1} compositions of n (one, the empty composition, for n = 0).
inline std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    std::vector<int> cur;
    const std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            cur.push_back(p);
            rec(remaining - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

/// Distinct rearrangements of a partition's parts.
inline std::vector<Composition> rearrangements(const Partition& lambda) {
    std::vector<int> p = lambda.parts();
    std::sort(p.begin(), p.end());
    std::vector<Composition> out;
    do {
        out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Quasi-shuffle product in the monomial basis of QSym

/// M_α · M_β expanded in the M basis.
inline std::map<Composition, Integer> quasi_shuffle_M(const Composition& alpha, const Composition& beta) {
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::vector<int>, Integer>> memo;
    const auto& a = alpha.parts();
    const auto& b = beta.parts();
    // Expansion of the suffix products a[i..] ⋆ b[j..].
    const std::function<const std::map<std::vector<int>, Integer>&(std::size_t, std::size_t)> rec =
        [&](std::size_t i, std::size_t j) -> const std::map<std::vector<int>, Integer>& {
        auto key = std::make_pair(i, j);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        std::map<std::vector<int>, Integer> out;
        if (i == a.size()) {
            out[std::vector<int>(b.begin() + static_cast<std::ptrdiff_t>(j), b.end())] = 1;
        } else if (j == b.size()) {
            out[std::vector<int>(a.begin() + static_cast<std::ptrdiff_t>(i), a.end())] = 1;
        } else {
            const auto prepend = [&out](int head, const std::map<std::vector<int>, Integer>& tail) {
                for (const auto& [w, k] : tail) {
                    std::vector<int> v{head};
                    v.insert(v.end(), w.begin(), w.end());
                    out[v] += k;
                }
            };
            prepend(a[i], rec(i + 1, j));
            prepend(b[j], rec(i, j + 1));
            prepend(a[i] + b[j], rec(i + 1, j + 1));
        }
        return memo.emplace(key, std::move(out)).first->second;
    };
    std::map<Composition, Integer> result;
    for (const auto& [w, k] : rec(0, 0)) {
        result.emplace(Composition(w), k);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Symmetric functions in the monomial basis

/// Symmetric function of homogeneous weight in the m_λ basis, with
/// coefficients in ℚ[q]. Terms iterate lexicographically decreasing.
class SymPoly {
public:
    using Terms = std::map<Partition, PolyQ, std::greater<>>;

    explicit SymPoly(int weight = 0) : weight_(weight) {}

    /// The constant symmetric function 1 (weight 0).
    static SymPoly one() {
        SymPoly s(0);
        s.add(Partition{}, PolyQ(1));
        return s;
    }

    int weight() const { return weight_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Partition& lambda, const PolyQ& coeff) {
        if (lambda.weight() != weight_) {
            throw InputError("partition weight does not match the symmetric function weight");
        }
        if (coeff.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(lambda, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    PolyQ coefficient(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? PolyQ() : it->second;
    }

    SymPoly& operator+=(const SymPoly& o) {
        check_weight(o);
        for (const auto& [l, c] : o.terms_) {
            add(l, c);
        }
        return *this;
    }

    SymPoly& operator-=(const SymPoly& o) {
        check_weight(o);
        for (const auto& [l, c] : o.terms_) {
            add(l, -c);
        }
        return *this;
    }

    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend bool operator==(const SymPoly&, const SymPoly&) = default;

    /// Applies `fn` to every coefficient (e.g. evaluating q).
    template <class Fn>
    SymPoly map_coefficients(Fn&& fn) const {
        SymPoly r(weight_);
        for (const auto& [l, c] : terms_) {
            r.add(l, fn(c));
        }
        return r;
    }

    /// "6*m[2,2] + 12*m[2,1,1] + 24*m[1,1,1,1]".
    std::string to_string(char basis = 'm') const {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto& [l, c] : terms_) {
            std::string body = c.to_string();
            bool negative = false;
            if (c.degree() == 0 && body.front() == '-') {
                negative = true;
                body.erase(0, 1);
            } else if (c.degree() > 0) {
                body = "(" + body + ")";
            }
            os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
            first = false;
            if (body != "1") {
                os << body << "*";
            }
            os << basis << "[";
            for (std::size_t i = 0; i < l.parts().size(); ++i) {
                os << (i ? "," : "") << l.parts()[i];
            }
            os << "]";
        }
        return os.str();
    }

private:
    void check_weight(const SymPoly& o) const {
        if (o.weight_ != weight_) {
            throw InputError("cannot add symmetric functions of different weight");
        }
    }

    int weight_;
    Terms terms_;
};

/// Coefficient of m_ν in m_λ · m_μ: read off M_ν in the quasi-shuffle
/// expansion of Σ_{α~λ} Σ_{β~μ} M_α M_β.
inline SymPoly multiply_sym(const SymPoly& f, const SymPoly& g) {
    SymPoly out(f.weight() + g.weight());
    std::map<std::pair<Partition, Partition>, std::map<Partition, Integer>> memo;
    for (const auto& [lambda, cf] : f.terms()) {
        for (const auto& [mu, cg] : g.terms()) {
            auto& expansion = memo[{lambda, mu}];
            if (expansion.empty()) {
                for (const Composition& a : rearrangements(lambda)) {
                    for (const Composition& b : rearrangements(mu)) {
                        for (const auto& [w, k] : quasi_shuffle_M(a, b)) {
                            if (std::is_sorted(w.parts().begin(), w.parts().end(), std::greater<>())) {
                                expansion[Partition(w.parts())] += k;
                            }
                        }
                    }
                }
            }
            const PolyQ scale = cf * cg;
            for (const auto& [nu, k] : expansion) {
                out.add(nu, scale * PolyQ(Rational(k)));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kostka numbers and the Schur basis

/// K_{λ,μ}: semistandard tableaux of shape λ and content μ, counted by
/// adding μ_i boxes labelled i as successive horizontal strips.
inline Integer kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) {
        throw InputError("kostka: partitions of different weight");
    }
    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
    const std::size_t rows = static_cast<std::size_t>(lambda.length());
    const std::function<Integer(std::size_t, std::vector<int>)> fill =
        [&](std::size_t letter, std::vector<int> shape) -> Integer {
        if (letter == mu.parts().size()) {
            return shape == lambda.parts() ? Integer(1) : Integer(0);
        }
        auto key = std::make_pair(letter, shape);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        Integer total = 0;
        std::vector<int> next = shape;
        // Distribute mu[letter] boxes over rows; row r may grow up to the old
        // length of row r-1 (horizontal strip) and up to lambda's row length.
        const std::function<void(std::size_t, int)> place = [&](std::size_t r, int left) {
            if (left == 0) {
                total += fill(letter + 1, next);
                return;
            }
            if (r == rows) {
                return;
            }
            const int cap_above = r == 0 ? lambda.parts()[0] : shape[r - 1];
            const int cap = std::min(cap_above, lambda.parts()[r]) - shape[r];
            for (int k = std::min(cap, left); k >= 0; --k) {
                next[r] = shape[r] + k;
                place(r + 1, left - k);
            }
            next[r] = shape[r];
        };
        place(0, mu.parts()[letter]);
        memo.emplace(key, total);
        return total;
    };
    return fill(0, std::vector<int>(rows, 0));
}

/// f^λ by the hook-length formula.
inline Integer num_SYT(const Partition& lambda) {
    const int n = lambda.weight();
    Integer hooks = 1;
    std::vector<int> cols(static_cast<std::size_t>(lambda.part(0)), 0);
    for (int r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda.part(r); ++c) {
            ++cols[static_cast<std::size_t>(c)];
        }
    }
    for (int r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda.part(r); ++c) {
            const int arm = lambda.part(r) - c - 1;
            const int leg = cols[static_cast<std::size_t>(c)] - r - 1;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(n) / hooks;
}

using SchurExpansion = std::map<Partition, PolyQ, std::greater<>>;

/// Σ d_λ s_λ → m-basis via s_λ = Σ_μ K_{λ,μ} m_μ.
inline SymPoly schur_to_m(int weight, const SchurExpansion& schur) {
    SymPoly out(weight);
    for (const auto& [lambda, d] : schur) {
        for (const Partition& mu : partitions(weight)) {
            const Integer k = kostka(lambda, mu);
            if (k != 0) {
                out.add(mu, d * PolyQ(Rational(k)));
            }
        }
    }
    return out;
}

/// Inverts the unitriangular Kostka system. Lexicographic order refines
/// dominance, so walking partitions from (n) downwards only ever needs
/// Schur coefficients already determined.
inline SchurExpansion m_to_schur(const SymPoly& f) {
    SchurExpansion d;
    for (const Partition& lambda : partitions(f.weight())) {
        PolyQ c = f.coefficient(lambda);
        for (const auto& [kappa, dk] : d) {
            const Integer k = kostka(kappa, lambda);
            if (k != 0) {
                c -= dk * PolyQ(Rational(k));
            }
        }
        if (!c.is_zero()) {
            d.emplace(lambda, c);
        }
    }
    return d;
}

inline std::string schur_to_string(const SchurExpansion& s) {
    SymPoly tmp(s.empty() ? 0 : s.begin()->first.weight());
    for (const auto& [l, c] : s) {
        tmp.add(l, c);
    }
    return tmp.to_string('s');
}

// ---------------------------------------------------------------------------
// Principal specialization

/// ps¹(f)(t): m_λ ↦ (rearrangements of λ)·binomial(t, l(λ)).
inline PolyTQ principal_specialization(const SymPoly& f) {
    PolyTQ out;
    for (const auto& [lambda, c] : f.terms()) {
        const PolyT b = binomial_poly(lambda.length()) * PolyT(Rational(lambda.rearrangement_count()));
        std::vector<PolyQ> lifted;
        for (const Rational& r : b.coefficients()) {
            lifted.push_back(c * PolyQ(r));
        }
        out += PolyTQ(std::move(lifted));
    }
    return out;
}

inline PolyQ evaluate(const SymPoly& f, const Integer& t) {
    return principal_specialization(f).evaluate(PolyQ(Rational(t)));
}

/// Drops q from a specialization whose coefficients are all constants.
inline PolyT constant_in_q(const PolyTQ& p) {
    std::vector<Rational> c;
    for (const PolyQ& x : p.coefficients()) {
        if (x.degree() > 0) {
            throw InputError("specialization still depends on q");
        }
        c.push_back(x.coefficient(0));
    }
    return PolyT(std::move(c));
}

// ---------------------------------------------------------------------------
// Number-theoretic helpers

/// S(k, j), Stirling numbers of the second kind.
inline Integer stirling2(int k, int j) {
    if (k < 0 || j < 0) {
        return 0;
    }
    std::vector<std::vector<Integer>> s(static_cast<std::size_t>(k) + 1,
                                        std::vector<Integer>(static_cast<std::size_t>(j) + 1, 0));
    s[0][0] = 1;
    for (int a = 1; a <= k; ++a) {
        for (int b = 1; b <= j; ++b) {
            s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                s[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
                b * s[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
        }
    }
    return s[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
}

/// (n)_j = n(n-1)...(n-j+1).
inline Integer falling_factorial(const Integer& n, int j) {
    Integer r = 1;
    for (int i = 0; i < j; ++i) {
        r *= n - i;
    }
    return r;
}

/// A_n(q) = Σ_ω q^{des ω}, exponent is the plain descent count.
/// Permutations are enumerated up to n = 8, the Eulerian recurrence beyond.
inline PolyQ eulerian_polynomial(int n) {
    if (n < 0) {
        throw InputError("eulerian_polynomial: n must be nonnegative");
    }
    if (n <= 8) {
        std::vector<Rational> counts(static_cast<std::size_t>(std::max(n, 1)), Rational(0));
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 0);
        do {
            int des = 0;
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                des += w[i] > w[i + 1] ? 1 : 0;
            }
            counts[static_cast<std::size_t>(des)] += 1;
        } while (std::next_permutation(w.begin(), w.end()));
        return PolyQ(std::move(counts));
    }
    // A(m, k) = (k+1) A(m-1, k) + (m-k) A(m-1, k-1).
    std::vector<Integer> row{1};
    for (int m = 2; m <= n; ++m) {
        std::vector<Integer> next(static_cast<std::size_t>(m), 0);
        for (int k = 0; k < m; ++k) {
            if (k < m - 1) {
                next[static_cast<std::size_t>(k)] += (k + 1) * row[static_cast<std::size_t>(k)];
            }
            if (k > 0) {
                next[static_cast<std::size_t>(k)] += (m - k) * row[static_cast<std::size_t>(k - 1)];
            }
        }
        row = std::move(next);
    }
    std::vector<Rational> c;
    for (const Integer& x : row) {
        c.emplace_back(x);
    }
    return PolyQ(std::move(c));
}

}  // namespace hopfsimp

#endif  // HOPFSIMP_SYMFUNC_HPP
