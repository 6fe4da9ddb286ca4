#ifndef HOPFSIMP_POLYNOMIAL_HPP
#define HOPFSIMP_POLYNOMIAL_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfsimp/core.hpp"

namespace hopfsimp {

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Integer& i) { return i.str(); }

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer den(text.substr(slash + 1));
        if (den == 0) {
            throw InputError("zero denominator in rational '" + text + "'");
        }
        return Rational(Integer(text.substr(0, slash))) / Rational(den);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("malformed rational '" + text + "'");
    }
}

/// Dense univariate polynomial, coefficients ascending by degree. `Var` is
/// only the printed name of the indeterminate, and keeps q- and t-polynomials
/// from mixing by accident.
template <class Coeff, char Var>
class Polynomial {
public:
    using coefficient_type = Coeff;
    static constexpr char variable_name = Var;

    Polynomial() = default;
    Polynomial(const Coeff& constant) : coeffs_{constant} { trim(); }  // NOLINT(implicit)
    Polynomial(int constant) : Polynomial(Coeff(constant)) {}          // NOLINT(implicit)
    Polynomial(std::initializer_list<Coeff> ascending) : coeffs_(ascending) { trim(); }
    explicit Polynomial(std::vector<Coeff> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static Polynomial variable() { return monomial(Coeff(1), 1); }

    static Polynomial monomial(const Coeff& c, int degree) {
        std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1, Coeff(0));
        v.back() = c;
        return Polynomial(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Coeff>& coefficients() const { return coeffs_; }

    Coeff coefficient(int i) const {
        if (i < 0 || i > degree()) {
            return Coeff(0);
        }
        return coeffs_[static_cast<std::size_t>(i)];
    }

    Coeff leading() const { return is_zero() ? Coeff(0) : coeffs_.back(); }

    template <class X>
    X evaluate(const X& x) const {
        X acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + X(*it);
        }
        return acc;
    }

    Coeff operator()(const Coeff& x) const { return evaluate(x); }

    /// p(inner): substitutes another polynomial in the same variable.
    Polynomial compose(const Polynomial& inner) const {
        Polynomial acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * inner + Polynomial(*it);
        }
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) {
            c = -c;
        }
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), Coeff(0));
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

    Polynomial& operator*=(const Polynomial& o) {
        *this = *this * o;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (is_zero_coeff(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.to_string();
    }

    /// Human-readable form, highest degree first: "t^3 - 3*t^2 + 2*t".
    std::string to_string() const {
        if (is_zero()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Coeff& c = coeffs_[static_cast<std::size_t>(i)];
            if (is_zero_coeff(c)) {
                continue;
            }
            std::string body = format_coeff(c);
            bool negative = false;
            if (!body.empty() && body.front() == '-' && simple_coeff(c)) {
                negative = true;
                body.erase(0, 1);
            }
            if (first) {
                os << (negative ? "-" : "");
            } else {
                os << (negative ? " - " : " + ");
            }
            first = false;
            if (i == 0) {
                os << body;
                continue;
            }
            if (body != "1") {
                os << body << "*";
            }
            os << Var;
            if (i > 1) {
                os << "^" << i;
            }
        }
        return os.str();
    }

private:
    static bool is_zero_coeff(const Coeff& c) { return c == Coeff(0); }

    static bool simple_coeff(const Coeff&) {
        if constexpr (std::is_same_v<Coeff, Rational> || std::is_same_v<Coeff, Integer>) {
            return true;
        } else {
            return false;
        }
    }

    static std::string format_coeff(const Coeff& c) {
        if constexpr (std::is_same_v<Coeff, Rational> || std::is_same_v<Coeff, Integer>) {
            return c.str();
        } else {
            // Nested polynomial coefficient: parenthesize unless it is a bare constant.
            if (c.degree() <= 0) {
                return c.to_string();
            }
            return "(" + c.to_string() + ")";
        }
    }

    void trim() {
        while (!coeffs_.empty() && is_zero_coeff(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    std::vector<Coeff> coeffs_;
};

/// Polynomial in q with rational coefficients (character values, m-coefficients).
using PolyQ = Polynomial<Rational, 'q'>;
/// Polynomial in t with rational coefficients (chromatic polynomials).
using PolyT = Polynomial<Rational, 't'>;
/// Polynomial in t whose coefficients are q-polynomials (q-analog specializations).
using PolyTQ = Polynomial<PolyQ, 't'>;

/// Coefficient strings "p/q", ascending degree.
template <class P>
std::vector<std::string> coefficient_strings(const P& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coefficients()) {
        out.push_back(c.str());
    }
    return out;
}

inline PolyQ polyq_from_strings(const std::vector<std::string>& ascending) {
    std::vector<Rational> c;
    c.reserve(ascending.size());
    for (const auto& s : ascending) {
        c.push_back(parse_rational(s));
    }
    return PolyQ(std::move(c));
}

/// t(t-1)...(t-l+1)/l!, i.e. binomial(t, l) as a polynomial in t.
inline PolyT binomial_poly(int l) {
    PolyT acc(1);
    for (int i = 0; i < l; ++i) {
        acc *= PolyT{Rational(-i), Rational(1)};
    }
    return acc * PolyT(Rational(1, 1) / Rational(factorial(l)));
}

/// Replaces q by -q.
inline PolyQ negate_variable(const PolyQ& p) {
    std::vector<Rational> c = p.coefficients();
    for (std::size_t i = 1; i < c.size(); i += 2) {
        c[i] = -c[i];
    }
    return PolyQ(std::move(c));
}

}  // namespace hopfsimp

#endif  // HOPFSIMP_POLYNOMIAL_HPP
