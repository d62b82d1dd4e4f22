#pragma once

// Dimension polynomials in the formal variables P (the prime) and C (the
// trunk half color): interpolation from exact tables, the residue formula for
// D, a symbolic power-sum recursion for delta, Bernoulli machinery, and the
// degree / leading-coefficient checks.

#include <string>
#include <vector>

#include "tqft/bipoly.hpp"
#include "tqft/recursion.hpp"

namespace tqft {

/// B_k with t/(e^t - 1) = sum B_n t^n / n!, so B_1 = -1/2.
Rational bernoulli(int k);
/// (1/2) (-1)^{n+1} B_{2n} / (2n)!, n >= 1.
Rational tilde_bernoulli(int n);

Rational factorial(int n);
Rational binomial(int n, int k);

/// sum_{k=0}^{2g+2} 2^k (2^k - 1) binom(2g+2, k) B_k == 0, with B_k from
/// `table` (must hold indices 0..2g+2).
bool bern_identity_check(int g, const std::vector<Rational>& table);
bool bern_identity_check(int g);

/// S_k(N) = sum_{n=0}^{N-1} n^k as a polynomial in N.
UniPoly power_sum(int k);

/// Smallest `count` primes >= max(5, min_prime), increasing.
std::vector<int> select_primes(int min_prime, int count);

struct InterpolationGrid {
    std::vector<int> fit_primes;
    std::vector<int> holdout_primes;
};

/// degree + 1 fit primes starting at max(5, 2 degree + 5), so each admits at
/// least degree + 2 values of c, plus the next prime held out.
InterpolationGrid default_grid(int degree);

enum class DimKind { delta, D, fe, fo };

const char* to_string(DimKind kind);

/// Fits the exact polynomial of the given total degree through table values,
/// first in C per prime, then each C coefficient across primes in P. All
/// sample points not used in the fit (at least 5) are checked afterwards;
/// mismatch or an insufficient grid throws std::runtime_error.
BiPoly interpolate_dimension(DimKind kind, int g, int degree, const InterpolationGrid& grid,
                             DimTableCache& cache);

/// Total degree 2g-1; empty `primes` selects primes >= max(5, 4g+3).
BiPoly interpolate_delta(int g, const std::vector<int>& primes, DimTableCache& cache);
/// Total degree 3g-2; empty `primes` selects primes >= max(5, 6g+1).
BiPoly interpolate_D(int g, const std::vector<int>& primes, DimTableCache& cache);

/// delta_g as a polynomial built symbolically from delta_1 = (P-1)/2 - C and
/// the split-sum recursion, with power sums standing in for the a-sums.
BiPoly symbolic_delta(int g);

/// D_g from the residue formula (g >= 2; throws std::invalid_argument otherwise).
BiPoly residue_D_poly(int g);

/// (-1)^{g-1} sum_{k=1}^{2g} 2 (2^k - 1) (B_k / k!) (C^{2g-k} / (2g-k)!) P^{k-1}
BiPoly leading_form_delta(int g);

/// ((-1)^g / 4) sum_{k=0}^{2g-2} (B_k / k!) (C^{2g-2-k} / (2g-2-k)!) (1 + 2C / (2g-1-k)) P^{g-1+k}
BiPoly leading_form_even_odd(int g);

struct ClaimCheck {
    std::string claim;
    bool passed = false;
    std::string detail;
};

struct DimensionPolys {
    int g = 0;
    BiPoly delta, D, fe, fo;
};

/// delta and D interpolated; fe = (D + delta)/2 and fo = (D - delta)/2.
DimensionPolys dimension_polys(int g, DimTableCache& cache);

/// Degree and leading-term claims for genus g >= 2.
std::vector<ClaimCheck> leading_checks(const DimensionPolys& polys);

struct ConjectureScan {
    int g = 0;
    bool even_p_powers_vanish = false;  // no C^n P^m with m even and m > 0
    bool divisible_by_delta2 = false;   // delta_g(P, 0) divisible by P(P^2-1)/24
};

ConjectureScan conjecture_scan(const BiPoly& delta, int g);

}  // namespace tqft
