#include "tqft/fusion.hpp"

#include <stdexcept>
#include <string>

namespace tqft {

namespace {

int half_rank(int p) {
    require_odd_prime(p);
    return (p - 1) / 2;
}

std::vector<Rational> add_scaled(std::vector<Rational> acc, const std::vector<Rational>& v, const Rational& s) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += s * v[i];
    return acc;
}

Integer to_integer(const Rational& r, const char* what) {
    if (r.get_den() != 1) throw std::logic_error(std::string(what) + " is not an integer");
    return r.get_num();
}

CycNum q_minus_qinv(int p, long k) {
    return CycNum::zeta_power(p, k) - CycNum::zeta_power(p, -k);
}

}  // namespace

FusionElement::FusionElement(int p_) : p(p_), coords(static_cast<std::size_t>(half_rank(p_))) {}

FusionElement FusionElement::unit(int p, int index) {
    FusionElement x(p);
    x.coords.at(static_cast<std::size_t>(index)) = 1;
    return x;
}

std::vector<Rational> FusionElement::even_coords() const {
    const auto perm = even_basis_permutation(p);
    std::vector<Rational> out(coords.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = coords[static_cast<std::size_t>(perm[j])];
    return out;
}

FusionElement FusionElement::from_even_coords(int p, const std::vector<Rational>& even) {
    FusionElement x(p);
    if (even.size() != x.coords.size()) throw std::invalid_argument("even coordinate vector has wrong size");
    const auto perm = even_basis_permutation(p);
    for (std::size_t j = 0; j < even.size(); ++j) x.coords[static_cast<std::size_t>(perm[j])] = even[j];
    return x;
}

std::vector<Rational> mul_by_z(int p, const std::vector<Rational>& v) {
    const int d = half_rank(p);
    if (v.size() != static_cast<std::size_t>(d)) throw std::invalid_argument("fusion vector has wrong size");
    std::vector<Rational> r(v.size());
    for (int n = 0; n < d; ++n) {
        if (v[n] == 0) continue;
        // z e_n = e_{n+1} + e_{n-1}, e_0 has no lower neighbour, e_d = e_{d-1}.
        r[n + 1 < d ? n + 1 : d - 1] += v[n];
        if (n > 0) r[n - 1] += v[n];
    }
    return r;
}

FusionElement operator+(const FusionElement& x, const FusionElement& y) {
    if (x.p != y.p) throw std::invalid_argument("fusion operands over different primes");
    FusionElement r(x);
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += y.coords[i];
    return r;
}

FusionElement operator*(const FusionElement& x, const FusionElement& y) {
    if (x.p != y.p) throw std::invalid_argument("fusion operands over different primes");
    // x * y = sum_n x_n e_n(z) y, with e_n(z) applied by the Chebyshev recursion.
    std::vector<Rational> prev = y.coords;
    std::vector<Rational> cur = mul_by_z(x.p, prev);
    std::vector<Rational> acc(y.coords.size());
    acc = add_scaled(std::move(acc), prev, x.coords[0]);
    for (std::size_t n = 1; n < x.coords.size(); ++n) {
        acc = add_scaled(std::move(acc), cur, x.coords[n]);
        std::vector<Rational> next = mul_by_z(x.p, cur);
        for (std::size_t i = 0; i < next.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    FusionElement r(x.p);
    r.coords = std::move(acc);
    return r;
}

FusionElement pow(const FusionElement& x, unsigned exponent) {
    FusionElement r = FusionElement::unit(x.p, 0);
    for (unsigned k = 0; k < exponent; ++k) r = r * x;
    return r;
}

FusionElement cheb_vector(int p, long n) {
    if (n < 0) throw std::invalid_argument("Chebyshev index must be non-negative");
    FusionElement prev = FusionElement::unit(p, 0);
    if (n == 0) return prev;
    FusionElement cur(p);
    cur.coords = mul_by_z(p, prev.coords);
    for (long k = 1; k < n; ++k) {
        std::vector<Rational> next = mul_by_z(p, cur.coords);
        for (std::size_t i = 0; i < next.size(); ++i) next[i] -= prev.coords[i];
        prev = std::move(cur);
        cur = FusionElement(p);
        cur.coords = std::move(next);
    }
    return cur;
}

std::vector<int> even_basis_permutation(int p) {
    const int d = half_rank(p);
    std::vector<int> perm(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        perm[j] = 2 * j <= d - 1 ? 2 * j : 2 * d - 1 - 2 * j;
        if (!(cheb_vector(p, 2 * j) == FusionElement::unit(p, perm[j])))
            throw std::logic_error("e_" + std::to_string(2 * j) + " is not a standard basis vector");
    }
    return perm;
}

Matrix<Rational> mul_matrix_standard(const FusionElement& x) {
    const int d = x.d();
    Matrix<Rational> m(static_cast<std::size_t>(d), Rational(0));
    for (int i = 0; i < d; ++i) {
        const FusionElement col = x * FusionElement::unit(x.p, i);
        for (int j = 0; j < d; ++j) m(j, i) = col.coords[j];
    }
    return m;
}

Matrix<Rational> mul_matrix_even(const FusionElement& x) {
    const Matrix<Rational> standard = mul_matrix_standard(x);
    const auto perm = even_basis_permutation(x.p);
    Matrix<Rational> m(standard.size(), Rational(0));
    for (std::size_t j = 0; j < m.size(); ++j)
        for (std::size_t i = 0; i < m.size(); ++i) m(j, i) = standard(perm[j], perm[i]);
    return m;
}

FusionElement hatK(int p) {
    const int d = half_rank(p);
    std::vector<Rational> even(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) even[n] = (n % 2 == 0 ? 1 : -1) * (d - n);
    return FusionElement::from_even_coords(p, even);
}

FusionElement Kcal(int p) {
    const int d = half_rank(p);
    std::vector<Rational> even(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) even[n] = d - n;
    return FusionElement::from_even_coords(p, even);
}

namespace {

Rational column_zero_power_entry(const FusionElement& x, int g, int c) {
    if (g < 0) throw std::invalid_argument("genus must be non-negative");
    if (c < 0 || c >= x.d()) throw std::invalid_argument("c out of range");
    const Matrix<Rational> m = mul_matrix_even(x);
    std::vector<Rational> v(m.size());
    v[0] = 1;
    for (int k = 0; k < g; ++k) v = m.apply(v);
    return v[c];
}

}  // namespace

Integer delta_via_matrix(int p, int g, int c) {
    const Rational entry = column_zero_power_entry(hatK(p), g, c);
    const Integer value = to_integer(entry, "M(hatK^g)_{c,0}");
    return c % 2 == 0 ? value : Integer(-value);
}

Integer D_via_matrix(int p, int g, int c) {
    return to_integer(column_zero_power_entry(Kcal(p), g, c), "M(Kcal^g)_{c,0}");
}

Matrix<CycNum> smatrix(int p) {
    const int d = half_rank(p);
    Matrix<CycNum> s(static_cast<std::size_t>(d), CycNum(p));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) s(i, j) = q_minus_qinv(p, static_cast<long>(2 * i + 1) * (2 * j + 1));
    return s;
}

Matrix<CycNum> qmatrix(int p) {
    const int d = half_rank(p);
    Matrix<CycNum> q(static_cast<std::size_t>(d), CycNum(p));
    for (int j = 0; j < d; ++j) q(j, j) = -(CycNum::zeta_power(p, 2 * j + 1) + CycNum::zeta_power(p, -(2 * j + 1)));
    return q;
}

Matrix<CycNum> to_cyclotomic(int p, const Matrix<Rational>& m) {
    Matrix<CycNum> r(m.size(), CycNum(p));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = CycNum::from_rational(p, m(i, j));
    return r;
}

CycNum lambda_elem(int p) {
    const int d = half_rank(p);
    CycNum r = CycNum::from_rational(p, (d + 1) / 2);
    for (int k = 1; k < d; ++k) {
        const int weight = (k % 2 == 0 ? 1 : -1) * ((d - k + 1) / 2);
        r += (CycNum::zeta_power(p, 2 * k) + CycNum::zeta_power(p, -2 * k)) * Rational(weight);
    }
    return r;
}

CycNum lambda_by_substitution(int p) {
    const int d = half_rank(p);
    CycNum r(p);
    for (int n = 0; n < d; ++n) r += quantum_int(p, 2 * n + 1) * Rational((n % 2 == 0 ? 1 : -1) * (d - n));
    return r;
}

CycNum kcal_eigenvalue(int p) {
    const int d = half_rank(p);
    CycNum r(p);
    for (int n = 0; n < d; ++n) r += quantum_int(p, 2 * n + 1) * Rational(d - n);
    return r;
}

CycNum shifted_determinant(const Matrix<CycNum>& m, const CycNum& lambda) {
    const int p = lambda.prime();
    const CycNum one = CycNum::from_rational(p, 1);
    Matrix<CycNum> shifted = m - Matrix<CycNum>::identity(m.size(), CycNum(p), one).scaled(lambda);
    return bareiss_determinant(std::move(shifted), one);
}

namespace {

Integer real_galois_sum(int p, int c, const CycNum& eigen_power) {
    const int d = half_rank(p);
    if (c < 0 || c >= d) throw std::invalid_argument("c out of range");
    const CycNum x = q_minus_qinv(p, 2 * c + 1) * q_minus_qinv(p, 1) * eigen_power;
    CycNum sum(p);
    for (int j = 1; j <= d; ++j) sum += galois(x, j);
    const Rational value = -sum.to_rational() / p;
    return to_integer(value, "Galois sum");
}

}  // namespace

Integer galois_sum_delta(int p, int g, int c) {
    if (g < 0) throw std::invalid_argument("genus must be non-negative");
    const Integer value = real_galois_sum(p, c, pow(lambda_elem(p), static_cast<unsigned>(g)));
    return c % 2 == 0 ? value : Integer(-value);
}

Integer galois_sum_D(int p, int g, int c) {
    if (g < 0) throw std::invalid_argument("genus must be non-negative");
    const CycNum u = q_minus_qinv(p, 1);
    const CycNum eigen = CycNum::from_rational(p, -p) * (u * u).inverse();
    return real_galois_sum(p, c, pow(eigen, static_cast<unsigned>(g)));
}

Matrix<CycNum> hopf_vandermonde(int p) {
    const int d = half_rank(p);
    Matrix<CycNum> h(static_cast<std::size_t>(d), CycNum(p));
    for (int j = 0; j < d; ++j) {
        const CycNum column_unit = quantum_int(p, j + 1) * Rational(j % 2 == 0 ? 1 : -1);
        const long twist = static_cast<long>(d + 1) * j * (j + 2);
        for (int i = 0; i < d; ++i) h(i, j) = column_unit * CycNum::zeta_power(p, twist * i);
    }
    return h;
}

HopfReport hopf_det_valuation(int p) {
    const int d = half_rank(p);
    HopfReport report;
    report.p = p;
    report.expected_valuation = d * (d - 1) / 2;
    const CycNum det = bareiss_determinant(hopf_vandermonde(p), CycNum::from_rational(p, 1));
    report.valuation = h_valuation(det);
    if (report.valuation == kInfiniteValuation) return report;
    CycNum unit = det;
    for (int k = 0; k < report.valuation; ++k) unit = divide_by_h(unit);
    report.unit_norm = norm(unit);
    report.unit_certified = report.unit_norm == 1 || report.unit_norm == -1;
    return report;
}

}  // namespace tqft
