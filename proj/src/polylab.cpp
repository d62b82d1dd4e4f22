#include "tqft/polylab.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace tqft {

namespace {

std::vector<Rational> bernoulli_table(int n) {
    // sum_{k=0}^{m} binom(m+1, k) B_k = 0 for m >= 1.
    static std::mutex mutex;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard<std::mutex> lock(mutex);
    for (int m = static_cast<int>(table.size()); m <= n; ++m) {
        Rational acc = 0;
        for (int k = 0; k < m; ++k) acc += binomial(m + 1, k) * table[static_cast<std::size_t>(k)];
        table.push_back(-acc / (m + 1));
    }
    return {table.begin(), table.begin() + n + 1};
}

Rational power_of_two(int k) {
    Integer r = 1;
    r <<= static_cast<unsigned>(k);
    return Rational(r);
}

Integer table_value(const DimTable& table, DimKind kind, int g, int c) {
    switch (kind) {
        case DimKind::delta: return table.delta(g, c);
        case DimKind::D: return table.D(g, c);
        case DimKind::fe: return table.fe(g, c);
        case DimKind::fo: return table.fo(g, c);
    }
    throw std::logic_error("unknown DimKind");
}

int next_prime(int n) {
    int k = std::max(n, 5);
    while (!is_prime(k)) ++k;
    return k;
}

}  // namespace

Rational factorial(int n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational bernoulli(int k) {
    if (k < 0) throw std::invalid_argument("Bernoulli index must be non-negative");
    return bernoulli_table(k).back();
}

Rational tilde_bernoulli(int n) {
    if (n < 1) throw std::invalid_argument("tilde Bernoulli index must be >= 1");
    const Rational sign = n % 2 == 1 ? 1 : -1;
    return sign * bernoulli(2 * n) / (2 * factorial(2 * n));
}

bool bern_identity_check(int g, const std::vector<Rational>& table) {
    const int top = 2 * g + 2;
    if (static_cast<int>(table.size()) <= top) throw std::invalid_argument("Bernoulli table too short");
    Rational sum = 0;
    for (int k = 0; k <= top; ++k) {
        const Rational two_k = power_of_two(k);
        sum += two_k * (two_k - 1) * binomial(top, k) * table[static_cast<std::size_t>(k)];
    }
    return sum == 0;
}

bool bern_identity_check(int g) { return bern_identity_check(g, bernoulli_table(2 * g + 2)); }

UniPoly power_sum(int k) {
    // S_k(N) = (1/(k+1)) sum_{j=0}^{k} binom(k+1, j) B_j N^{k+1-j}
    const auto b = bernoulli_table(k);
    std::vector<Rational> coeffs(static_cast<std::size_t>(k + 2));
    for (int j = 0; j <= k; ++j) coeffs[static_cast<std::size_t>(k + 1 - j)] = binomial(k + 1, j) * b[j] / (k + 1);
    return UniPoly(std::move(coeffs));
}

std::vector<int> select_primes(int min_prime, int count) {
    std::vector<int> out;
    int candidate = std::max(5, min_prime);
    while (static_cast<int>(out.size()) < count) {
        candidate = next_prime(candidate);
        out.push_back(candidate);
        ++candidate;
    }
    return out;
}

InterpolationGrid default_grid(int degree) {
    InterpolationGrid grid;
    grid.fit_primes = select_primes(2 * degree + 5, degree + 1);
    grid.holdout_primes = {next_prime(grid.fit_primes.back() + 1)};
    return grid;
}

const char* to_string(DimKind kind) {
    switch (kind) {
        case DimKind::delta: return "delta";
        case DimKind::D: return "D";
        case DimKind::fe: return "fe";
        case DimKind::fo: return "fo";
    }
    return "?";
}

BiPoly interpolate_dimension(DimKind kind, int g, int degree, const InterpolationGrid& grid, DimTableCache& cache) {
    const auto n_points = static_cast<std::size_t>(degree + 1);
    if (grid.fit_primes.size() < n_points)
        throw std::runtime_error("interpolation needs " + std::to_string(n_points) + " fit primes, got " +
                                 std::to_string(grid.fit_primes.size()));
    std::vector<int> fit(grid.fit_primes.begin(), grid.fit_primes.begin() + static_cast<long>(n_points));
    std::vector<int> holdout = grid.holdout_primes;
    holdout.insert(holdout.end(), grid.fit_primes.begin() + static_cast<long>(n_points), grid.fit_primes.end());

    // Per prime: polynomial in C through c = 0..degree.
    std::vector<UniPoly> per_prime;
    for (int p : fit) {
        require_odd_prime(p);
        const int d = (p - 1) / 2;
        if (d < degree + 1)
            throw std::runtime_error("prime " + std::to_string(p) + " admits only " + std::to_string(d) +
                                     " values of c; need " + std::to_string(degree + 1));
        const auto table = cache.get(p, g);
        std::vector<Rational> xs, ys;
        for (int c = 0; c <= degree; ++c) {
            xs.emplace_back(c);
            ys.emplace_back(table_value(*table, kind, g, c));
        }
        per_prime.push_back(interpolate(xs, ys));
    }
    // Each C coefficient across primes, as a polynomial in P.
    std::vector<UniPoly> per_c_power;
    std::vector<Rational> ps;
    for (int p : fit) ps.emplace_back(p);
    for (int j = 0; j <= degree; ++j) {
        std::vector<Rational> ys;
        for (const auto& f : per_prime) ys.push_back(f.coeff(j));
        per_c_power.push_back(interpolate(ps, ys));
    }
    const BiPoly poly = BiPoly::from_c_coefficients(per_c_power);

    // Hold-out validation: unused c values at fit primes plus all hold-out primes.
    std::size_t checked = 0;
    auto check = [&](int p, int c_from) {
        const auto table = cache.get(p, g);
        for (int c = c_from; c < table->d(); ++c) {
            const Integer expected = table_value(*table, kind, g, c);
            if (poly.evaluate(p, c) != Rational(expected))
                throw std::runtime_error(std::string("interpolated ") + to_string(kind) + "_" + std::to_string(g) +
                                         " fails hold-out point p=" + std::to_string(p) + " c=" + std::to_string(c));
            ++checked;
        }
    };
    for (int p : fit) check(p, degree + 1);
    for (int p : holdout) {
        require_odd_prime(p);
        check(p, 0);
    }
    if (checked < 5)
        throw std::runtime_error("interpolation grid leaves only " + std::to_string(checked) + " hold-out points");
    return poly;
}

namespace {

InterpolationGrid grid_from(const std::vector<int>& primes, int degree) {
    if (primes.empty()) return default_grid(degree);
    InterpolationGrid grid;
    grid.fit_primes = primes;
    if (static_cast<int>(primes.size()) <= degree + 1)
        grid.holdout_primes = {next_prime(*std::max_element(primes.begin(), primes.end()) + 1)};
    return grid;
}

}  // namespace

BiPoly interpolate_delta(int g, const std::vector<int>& primes, DimTableCache& cache) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    const int degree = 2 * g - 1;
    return interpolate_dimension(DimKind::delta, g, degree, grid_from(primes, degree), cache);
}

BiPoly interpolate_D(int g, const std::vector<int>& primes, DimTableCache& cache) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    const int degree = 3 * g - 2;
    return interpolate_dimension(DimKind::D, g, degree, grid_from(primes, degree), cache);
}

BiPoly symbolic_delta(int g) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    // delta_1 = (P - 1)/2 - C
    BiPoly delta = BiPoly::P() * Rational(1, 2) - BiPoly::constant(Rational(1, 2)) - BiPoly::C();
    for (int step = 1; step < g; ++step) {
        BiPoly next;
        const int top = delta.degree_in_C();
        for (int j = 0; j <= top; ++j) {
            const BiPoly f = BiPoly::from_univariate_in_P(delta.coefficient_of_C(j));
            if (f.is_zero()) continue;
            const UniPoly sj = power_sum(j), sj1 = power_sum(j + 1);
            const UniPoly n_var({Rational(0), Rational(1)});
            // sum_{a=0}^{d-1} (d - a) a^j with d = (P - 1)/2
            const UniPoly full = (n_var * sj - sj1).compose_linear(Rational(1, 2), Rational(-1, 2));
            // sum_{a=0}^{C-1} (a - C) a^j
            const UniPoly partial = sj1 - n_var * sj;
            next += f * (BiPoly::from_univariate_in_P(full) + BiPoly::from_univariate_in_C(partial));
        }
        delta = next;
    }
    return delta;
}

namespace {

// Coefficient of t^{2g-2} in 2Pt/(e^{2Pt}-1) * s((2C+1)t) / s(t)^{2g-1}.
BiPoly residue_coefficient(int g, int order) {
    const auto b = bernoulli_table(order);
    Series bern(order), scaled_sinh(order), sinh_series(order);
    const BiPoly two_c_plus_one = BiPoly::C() * Rational(2) + BiPoly::constant(1);
    for (int n = 0; n <= order; ++n) {
        bern[n] = BiPoly::monomial(b[n] * power_of_two(n) / factorial(n), n, 0);
        if (n % 2 == 0) {
            sinh_series[n] = BiPoly::constant(1 / factorial(n + 1));
            scaled_sinh[n] = pow(two_c_plus_one, static_cast<unsigned>(n)) * (1 / factorial(n + 1));
        }
    }
    const Series integrand = bern * scaled_sinh * sinh_series.inverse().pow(static_cast<unsigned>(2 * g - 1));
    return integrand[2 * g - 2];
}

}  // namespace

BiPoly residue_D_poly(int g) {
    if (g < 2) throw std::invalid_argument("residue formula requires g >= 2");
    const int order = 2 * g - 2;
    const BiPoly residue = residue_coefficient(g, order + 4);
    if (!(residue == residue_coefficient(g, order)))
        throw std::logic_error("residue coefficient depends on series truncation");
    // binom(C+g-1, 2g-2) as a falling factorial in C
    BiPoly binom = BiPoly::constant(1 / factorial(2 * g - 2));
    for (int i = 0; i <= 2 * g - 3; ++i) binom = binom * (BiPoly::C() + BiPoly::constant(g - 1 - i));
    const BiPoly two_c_plus_one = BiPoly::C() * Rational(2) + BiPoly::constant(1);
    const Rational four_pow = 1 / Rational(power_of_two(2 * g - 2));
    const BiPoly residue_term = two_c_plus_one * pow(BiPoly::P(), static_cast<unsigned>(g - 1)) * residue * four_pow;
    const BiPoly binom_term = pow(BiPoly::P(), static_cast<unsigned>(g)) * binom;
    const Rational sign = g % 2 == 0 ? Rational(1, 2) : Rational(-1, 2);
    return (residue_term - binom_term) * sign;
}

BiPoly leading_form_delta(int g) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    BiPoly r;
    for (int k = 1; k <= 2 * g; ++k) {
        const Rational coeff = 2 * (power_of_two(k) - 1) * bernoulli(k) / factorial(k) / factorial(2 * g - k);
        r += BiPoly::monomial(coeff, k - 1, 2 * g - k);
    }
    return g % 2 == 1 ? r : -r;
}

BiPoly leading_form_even_odd(int g) {
    if (g < 2) throw std::invalid_argument("genus must be >= 2");
    BiPoly r;
    for (int k = 0; k <= 2 * g - 2; ++k) {
        const Rational base = bernoulli(k) / factorial(k) / factorial(2 * g - 2 - k);
        r += BiPoly::monomial(base, g - 1 + k, 2 * g - 2 - k);
        r += BiPoly::monomial(base * 2 / (2 * g - 1 - k), g - 1 + k, 2 * g - 1 - k);
    }
    return r * (g % 2 == 0 ? Rational(1, 4) : Rational(-1, 4));
}

DimensionPolys dimension_polys(int g, DimTableCache& cache) {
    DimensionPolys out;
    out.g = g;
    out.delta = interpolate_delta(g, {}, cache);
    out.D = interpolate_D(g, {}, cache);
    out.fe = (out.D + out.delta) * Rational(1, 2);
    out.fo = (out.D - out.delta) * Rational(1, 2);
    return out;
}

namespace {

ClaimCheck claim(std::string name, bool ok, std::string detail = {}) {
    return {std::move(name), ok, std::move(detail)};
}

std::string degree_detail(int got, int want) {
    return "got " + std::to_string(got) + ", want " + std::to_string(want);
}

}  // namespace

std::vector<ClaimCheck> leading_checks(const DimensionPolys& polys) {
    const int g = polys.g;
    if (g < 2) throw std::invalid_argument("leading checks require g >= 2");
    const std::string tag = " (g=" + std::to_string(g) + ")";
    std::vector<ClaimCheck> out;

    const int top = 3 * g - 2;
    out.push_back(claim("total degree of delta is 2g-1" + tag, polys.delta.total_degree() == 2 * g - 1,
                        degree_detail(polys.delta.total_degree(), 2 * g - 1)));
    out.push_back(claim("total degree of D is 3g-2" + tag, polys.D.total_degree() == top,
                        degree_detail(polys.D.total_degree(), top)));
    out.push_back(claim("total degree of fe is 3g-2" + tag, polys.fe.total_degree() == top,
                        degree_detail(polys.fe.total_degree(), top)));
    out.push_back(claim("total degree of fo is 3g-2" + tag, polys.fo.total_degree() == top,
                        degree_detail(polys.fo.total_degree(), top)));

    const BiPoly lead = leading_form_delta(g);
    out.push_back(claim("top homogeneous part of delta matches the Bernoulli form" + tag,
                        polys.delta.homogeneous_part(2 * g - 1) == lead, lead.to_text()));

    const UniPoly delta_lead = polys.delta.coefficient_of_P(2 * g - 1);
    const Rational want_delta_lead = 4 * (power_of_two(2 * g) - 1) * tilde_bernoulli(g);
    out.push_back(claim("P-leading coefficient of delta is 4(2^{2g}-1) tilde_B_g" + tag,
                        polys.delta.degree_in_P() == 2 * g - 1 && delta_lead == UniPoly::constant(want_delta_lead),
                        "want " + want_delta_lead.get_str()));

    if (g >= 3) {
        const BiPoly rhs = leading_form_even_odd(g);
        auto top_two = [&](const BiPoly& f) { return f.homogeneous_part(top) + f.homogeneous_part(top - 1); };
        out.push_back(claim("top two degrees of fe match the Bernoulli form" + tag, top_two(polys.fe) == rhs));
        out.push_back(claim("top two degrees of fo match the Bernoulli form" + tag, top_two(polys.fo) == rhs));

        const UniPoly want = UniPoly({Rational(1, 2), Rational(1)}) * tilde_bernoulli(g - 1);
        out.push_back(claim("fe has P-degree 3g-3 with leading coefficient (C+1/2) tilde_B_{g-1}" + tag,
                            polys.fe.degree_in_P() == 3 * g - 3 && polys.fe.coefficient_of_P(3 * g - 3) == want));
        out.push_back(claim("fo has P-degree 3g-3 with leading coefficient (C+1/2) tilde_B_{g-1}" + tag,
                            polys.fo.degree_in_P() == 3 * g - 3 && polys.fo.coefficient_of_P(3 * g - 3) == want));
    } else {
        const UniPoly want_fe({Rational(1, 24), Rational(1, 24)});
        const UniPoly want_fo({Rational(0), Rational(1, 24)});
        out.push_back(claim("fe_2 has P^3 coefficient (C+1)/24", polys.fe.degree_in_P() == 3 &&
                                                                     polys.fe.coefficient_of_P(3) == want_fe));
        out.push_back(claim("fo_2 has P^3 coefficient C/24", polys.fo.degree_in_P() == 3 &&
                                                                 polys.fo.coefficient_of_P(3) == want_fo));
    }
    return out;
}

ConjectureScan conjecture_scan(const BiPoly& delta, int g) {
    ConjectureScan scan;
    scan.g = g;
    scan.even_p_powers_vanish = true;
    for (const auto& [key, value] : delta.terms())
        if (key.first > 0 && key.first % 2 == 0) scan.even_p_powers_vanish = false;
    const UniPoly delta2({Rational(0), Rational(-1, 24), Rational(0), Rational(1, 24)});
    scan.divisible_by_delta2 = delta.at_C(0).divmod(delta2).second.degree() < 0;
    return scan;
}

}  // namespace tqft
