#pragma once

// Exact rational polynomials: univariate (UniPoly), bivariate in the formal
// variables P and C (BiPoly), and truncated power series in t with BiPoly
// coefficients (Series).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tqft/cyclotomic.hpp"

namespace tqft {

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    Rational operator()(const Rational& x) const;

    /// f(a x + b)
    UniPoly compose_linear(const Rational& a, const Rational& b) const;

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& s);
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Newton interpolation through (xs[k], ys[k]); xs distinct.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// sum_k c_{ij} P^i C^j; zero coefficients are never stored.
class BiPoly {
public:
    using Key = std::pair<int, int>;  // (P degree, C degree)

    BiPoly() = default;
    static BiPoly constant(const Rational& c);
    static BiPoly P();
    static BiPoly C();
    static BiPoly monomial(const Rational& c, int p_degree, int c_degree);
    /// sum_k f_k(P) C^k
    static BiPoly from_c_coefficients(const std::vector<UniPoly>& per_c_power);
    /// sum_k f_k C^k with constant f_k
    static BiPoly from_univariate_in_C(const UniPoly& f);
    static BiPoly from_univariate_in_P(const UniPoly& f);

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int p_degree, int c_degree) const;

    /// -1 for zero.
    int total_degree() const;
    int degree_in_P() const;
    int degree_in_C() const;

    /// Homogeneous component of the given total degree.
    BiPoly homogeneous_part(int degree) const;
    /// Coefficient of P^k as a polynomial in C.
    UniPoly coefficient_of_P(int k) const;
    /// Coefficient of C^k as a polynomial in P.
    UniPoly coefficient_of_C(int k) const;
    /// Substitute C = value, leaving a polynomial in P.
    UniPoly at_C(const Rational& value) const;

    Rational evaluate(const Rational& p, const Rational& c) const;

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const Rational& s);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
    friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator-() const;
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    /// `(1/24)P^3 + (-1/4)C^2P + ...`, sorted by (total degree desc, P degree desc).
    std::string to_text() const;
    /// {"monomials": [{"p":3,"c":0,"num":1,"den":24}, ...]} in to_text order.
    std::string to_json() const;

private:
    void add_term(const Key& key, const Rational& value);
    std::map<Key, Rational> terms_;
};

BiPoly pow(const BiPoly& base, unsigned exponent);

/// Truncated power series sum_{k=0}^{order} a_k t^k over BiPoly.
class Series {
public:
    explicit Series(int order);
    Series(int order, std::vector<BiPoly> coeffs);

    int order() const { return order_; }
    const BiPoly& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    BiPoly& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    friend Series operator*(const Series& a, const Series& b);
    /// Requires a nonzero rational constant term.
    Series inverse() const;
    Series pow(unsigned exponent) const;

private:
    int order_;
    std::vector<BiPoly> coeffs_;
};

}  // namespace tqft
