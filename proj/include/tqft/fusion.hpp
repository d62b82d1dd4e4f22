#pragma once

// The Verlinde algebra V_p = K[z] / (e_d - e_{d-1}), d = (p-1)/2, where e_n
// are the Chebyshev polynomials e_0 = 1, e_1 = z, e_{n+1} = z e_n - e_{n-1}.
//
// Elements are coordinate vectors over the standard basis e_0, ..., e_{d-1}.
// Multiplication matrices M(x) are taken in the even basis e_0, e_2, ...,
// e_{2d-2} with the column convention x e_{2i} = sum_j M(x)_{ji} e_{2j}.

#include <vector>

#include "tqft/cyclotomic.hpp"
#include "tqft/matrix.hpp"

namespace tqft {

struct FusionElement {
    int p = 5;
    std::vector<Rational> coords;  // standard basis, size d

    FusionElement() = default;
    explicit FusionElement(int p);

    int d() const { return (p - 1) / 2; }
    static FusionElement unit(int p, int index);

    /// Coordinates over e_0, e_2, ..., e_{2d-2}.
    std::vector<Rational> even_coords() const;
    static FusionElement from_even_coords(int p, const std::vector<Rational>& even);

    friend bool operator==(const FusionElement&, const FusionElement&) = default;
};

FusionElement operator+(const FusionElement& x, const FusionElement& y);
FusionElement operator*(const FusionElement& x, const FusionElement& y);
FusionElement pow(const FusionElement& x, unsigned exponent);

/// Multiplication by z in the standard basis, with the fold e_d -> e_{d-1}.
std::vector<Rational> mul_by_z(int p, const std::vector<Rational>& v);

/// Coordinates of e_n in V_p.
FusionElement cheb_vector(int p, long n);

/// pi(j) = standard-basis index of e_{2j}.
std::vector<int> even_basis_permutation(int p);

Matrix<Rational> mul_matrix_standard(const FusionElement& x);
Matrix<Rational> mul_matrix_even(const FusionElement& x);

/// sum_n (-1)^n (d-n) e_{2n}
FusionElement hatK(int p);
/// sum_n (d-n) e_{2n}
FusionElement Kcal(int p);

/// (-1)^c M(hatK^g)_{c,0}, by g matrix-vector products.
Integer delta_via_matrix(int p, int g, int c);
/// M(Kcal^g)_{c,0}
Integer D_via_matrix(int p, int g, int c);

/// S_ij = q^{(2i+1)(2j+1)} - q^{-(2i+1)(2j+1)}, q = zeta_p.
Matrix<CycNum> smatrix(int p);
/// diag(-q^{2j+1} - q^{-2j-1})
Matrix<CycNum> qmatrix(int p);
/// Lift of a rational matrix into Q(zeta_p).
Matrix<CycNum> to_cyclotomic(int p, const Matrix<Rational>& m);

/// ceil(d/2) + sum_{k=1}^{d-1} (-1)^k ceil((d-k)/2) (q^{2k} + q^{-2k})
CycNum lambda_elem(int p);
/// hatK evaluated at z = -q - q^{-1} through e_{2n}(z) = [2n+1].
CycNum lambda_by_substitution(int p);
/// Kcal evaluated at z = -q - q^{-1}; equals -p / (q - q^{-1})^2.
CycNum kcal_eigenvalue(int p);

/// det(M - lambda I) over Q(zeta_p).
CycNum shifted_determinant(const Matrix<CycNum>& m, const CycNum& lambda);

/// (-1)^c (-1/p) sum_{j=1}^{d} G_j((q^{2c+1} - q^{-2c-1})(q - q^{-1}) Lambda^g)
Integer galois_sum_delta(int p, int g, int c);
/// Same sum with Lambda replaced by -p / (q - q^{-1})^2 and no sign twist.
Integer galois_sum_D(int p, int g, int c);

/// H_ij = (-1)^j [j+1] mu_j^i with twist eigenvalues mu_j = zeta^{(d+1) j (j+2)}.
Matrix<CycNum> hopf_vandermonde(int p);

struct HopfReport {
    int p = 0;
    int valuation = 0;
    int expected_valuation = 0;  // d(d-1)/2
    Rational unit_norm;          // norm(det H / h^valuation)
    bool unit_certified = false; // unit_norm is +1 or -1
};

HopfReport hopf_det_valuation(int p);

}  // namespace tqft
