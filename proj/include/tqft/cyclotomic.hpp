#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_p) for odd primes p >= 5.
//
// Elements are stored densely over the power basis 1, z, ..., z^(p-2), where
// z = zeta_p. Any z^(p-1) is eliminated with z^(p-1) = -(1 + z + ... + z^(p-2)),
// so equal elements have identical coefficient vectors. Over this basis the
// ring of integers Z[zeta_p] is exactly the set of elements with integer
// coordinates.

#include <gmpxx.h>

#include <limits>
#include <span>
#include <string>
#include <vector>

namespace tqft {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(long n);

/// Throws std::invalid_argument unless p is a prime >= 5.
void require_odd_prime(long p);

/// Marker returned by h_valuation(0).
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

class CycNum {
public:
    /// The zero element of Q(zeta_p).
    explicit CycNum(int p);

    static CycNum from_rational(int p, const Rational& r);
    /// zeta_p^k for any integer k (negative allowed).
    static CycNum zeta_power(int p, long k);
    /// sum_k buffer[k] * zeta_p^k for a buffer of length p.
    static CycNum from_exponents(int p, std::vector<Rational> buffer);

    int prime() const { return p_; }
    std::span<const Rational> coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_integral() const;
    bool is_rational() const;
    /// Throws std::domain_error if the element is not rational.
    Rational to_rational() const;

    CycNum inverse() const;

    CycNum& operator+=(const CycNum& rhs);
    CycNum& operator-=(const CycNum& rhs);
    CycNum& operator*=(const CycNum& rhs);
    CycNum& operator*=(const Rational& rhs);
    CycNum& operator/=(const CycNum& rhs) { return *this *= rhs.inverse(); }

    friend CycNum operator+(CycNum lhs, const CycNum& rhs) { return lhs += rhs; }
    friend CycNum operator-(CycNum lhs, const CycNum& rhs) { return lhs -= rhs; }
    friend CycNum operator*(CycNum lhs, const CycNum& rhs) { return lhs *= rhs; }
    friend CycNum operator*(CycNum lhs, const Rational& rhs) { return lhs *= rhs; }
    friend CycNum operator*(const Rational& lhs, CycNum rhs) { return rhs *= lhs; }
    friend CycNum operator/(CycNum lhs, const CycNum& rhs) { return lhs /= rhs; }
    CycNum operator-() const;

    friend bool operator==(const CycNum& a, const CycNum& b);

    /// Human-readable form such as "1 + (-2)*z^3".
    std::string to_string() const;

private:
    static CycNum from_buffer(int p, const std::vector<Rational>& buffer);
    void check_same_field(const CycNum& other) const;

    int p_;
    std::vector<Rational> coeffs_;
};

CycNum pow(CycNum base, unsigned exponent);

/// Galois automorphism z -> z^j. Throws if j is divisible by p.
CycNum galois(const CycNum& x, long j);

/// Product of all p-1 Galois conjugates.
Rational norm(const CycNum& x);

/// Sum of all p-1 Galois conjugates.
Rational trace(const CycNum& x);

/// Quantum integer [n] = (q^n - q^-n) / (q - q^-1) with q = zeta_p.
CycNum quantum_int(int p, long n);

/// The prime element h = 1 - zeta_p.
CycNum h_element(int p);

/// Exact quotient x / h. Requires x integral and divisible by h.
CycNum divide_by_h(const CycNum& x);

/// Largest k with h^k | x in Z[zeta_p]; kInfiniteValuation for x = 0.
int h_valuation(const CycNum& x);

}  // namespace tqft
