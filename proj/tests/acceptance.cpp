// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// gating criterion fails. Criterion 8 is reported as INFO only.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tqft/census.hpp"
#include "tqft/cli.hpp"
#include "tqft/fusion.hpp"
#include "tqft/polylab.hpp"
#include "tqft/recursion.hpp"

using namespace tqft;

namespace {

const std::vector<int> kPrimes{5, 7, 11, 13};

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) note = what;
        ok = ok && condition;
    }
};

std::string where(int p, int g, int c) {
    return "p=" + std::to_string(p) + " g=" + std::to_string(g) + " c=" + std::to_string(c);
}

Outcome dimension_agreement(DimTableCache& cache) {
    Outcome o;
    for (int p : kPrimes) {
        const auto t = cache.get(p, 8);
        for (int g = 1; g <= 8; ++g)
            for (int c = 0; c < t->d(); ++c) {
                if (g <= 4) {
                    const ParityCounts counts = count_parities(LollipopTree(p, g, c));
                    o.require(t->fe(g, c) == static_cast<unsigned long>(counts.even) &&
                                  t->fo(g, c) == static_cast<unsigned long>(counts.odd),
                              "census vs recursion at " + where(p, g, c));
                }
                o.require(delta_via_matrix(p, g, c) == t->delta(g, c) && galois_sum_delta(p, g, c) == t->delta(g, c),
                          "delta routes at " + where(p, g, c));
                o.require(D_via_matrix(p, g, c) == t->D(g, c) && galois_sum_D(p, g, c) == t->D(g, c),
                          "D routes at " + where(p, g, c));
            }
    }
    return o;
}

BiPoly terms(std::initializer_list<std::tuple<long, int, int>> monomials, long den) {
    BiPoly r;
    for (const auto& [num, pd, cd] : monomials) {
        Rational q(num, den);
        q.canonicalize();
        r += BiPoly::monomial(q, pd, cd);
    }
    return r;
}

UniPoly product(std::initializer_list<long> roots, const std::vector<UniPoly>& extra, const Rational& scale) {
    UniPoly r = UniPoly::constant(scale);
    for (long root : roots) r = r * UniPoly({-root, 1});
    for (const auto& f : extra) r = r * f;
    return r;
}

Outcome closed_constants(DimTableCache& cache) {
    Outcome o;
    const DimensionPolys g2 = dimension_polys(2, cache);
    o.require(g2.delta == terms({{1, 3, 0}, {-6, 1, 2}, {-6, 1, 1}, {-1, 1, 0}, {4, 0, 3}, {6, 0, 2}, {2, 0, 1}}, 24),
              "delta_2");
    o.require(g2.fe == terms({{1, 3, 1}, {1, 3, 0}, {-3, 2, 2}, {-3, 2, 1}, {2, 1, 3}, {-3, 1, 1}, {-1, 1, 0},
                              {2, 0, 3}, {3, 0, 2}, {1, 0, 1}},
                             24),
              "fe_2");
    o.require(g2.fo == terms({{1, 3, 1}, {-3, 2, 2}, {-3, 2, 1}, {2, 1, 3}, {6, 1, 2}, {3, 1, 1}, {-2, 0, 3},
                              {-3, 0, 2}, {-1, 0, 1}},
                             24),
              "fo_2");
    o.require(g2.D.at_C(0) == product({-1, 0, 1}, {}, Rational(1, 24)), "D_2 at C=0");

    const DimensionPolys g3 = dimension_polys(3, cache);
    o.require(g3.delta.at_C(0) == product({-1, 0, 1}, {UniPoly({1, 0, 1})}, Rational(1, 240)), "delta_3");
    o.require(g3.fo.at_C(0) == product({3, 2, 1, 1, 0, -1}, {}, Rational(1, 2880)), "fo_3");
    o.require(g3.fe.at_C(0) == product({1, 0, -1, -1, -2, -3}, {}, Rational(1, 2880)), "fe_3");
    o.require(interpolate_delta(4, {}, cache).at_C(0) ==
                  product({-1, 0, 1}, {UniPoly({24, 0, 31, 0, 17})}, Rational(1, 40320)),
              "delta_4");
    o.require(interpolate_delta(5, {}, cache).at_C(0) ==
                  product({-1, 0, 1}, {UniPoly({72, 0, 103, 0, 82, 0, 31})}, Rational(1, 725760)),
              "delta_5");
    return o;
}

Outcome structural_identities() {
    Outcome o;
    for (int p : kPrimes) {
        const int d = (p - 1) / 2;
        const auto s = smatrix(p);
        o.require(s * s == Matrix<CycNum>::identity(s.size(), CycNum(p), CycNum::from_rational(p, -p)),
                  "S^2 at p=" + std::to_string(p));
        o.require(to_cyclotomic(p, mul_matrix_even(FusionElement::unit(p, 1))) ==
                      (s * qmatrix(p) * s).scaled(Rational(-1, p)),
                  "M(z) at p=" + std::to_string(p));
        for (int i = 0; i < d; ++i)
            o.require(cheb_vector(p, d + i) == cheb_vector(p, d - 1 - i), "fold at p=" + std::to_string(p));
        if (p > 11) continue;
        const auto mk = to_cyclotomic(p, mul_matrix_even(hatK(p)));
        const CycNum lambda = lambda_elem(p);
        for (int j = 0; j < d; ++j)
            o.require(shifted_determinant(mk, galois(lambda, 2 * j + 1)).is_zero(),
                      "eigenvalue j=" + std::to_string(j) + " at p=" + std::to_string(p));
    }
    return o;
}

Outcome hopf() {
    Outcome o;
    for (int p : kPrimes) {
        for (int n = 1; n < p; ++n) {
            const Rational nm = norm(quantum_int(p, n));
            o.require(nm == 1 || nm == -1, "[" + std::to_string(n) + "] at p=" + std::to_string(p));
        }
        if (p > 11) continue;
        const HopfReport r = hopf_det_valuation(p);
        const int d = (p - 1) / 2;
        o.require(r.valuation == d * (d - 1) / 2, "valuation at p=" + std::to_string(p));
        o.require(r.unit_certified, "unit at p=" + std::to_string(p));
    }
    return o;
}

Outcome polynomial_structure(DimTableCache& cache) {
    Outcome o;
    for (int g = 2; g <= 4; ++g) {
        const DimensionPolys polys = dimension_polys(g, cache);
        for (const auto& check : leading_checks(polys)) o.require(check.passed, check.claim);
        o.require(residue_D_poly(g) == polys.D, "residue D at g=" + std::to_string(g));
    }
    return o;
}

Outcome bernoulli_identity() {
    Outcome o;
    for (int g = 0; g <= 10; ++g) o.require(bern_identity_check(g), "g=" + std::to_string(g));
    return o;
}

Outcome quadruple_table(DimTableCache& cache) {
    Outcome o;
    const char* argv[] = {"tqftdims", "quadruple", "--p", "5", "--gmin", "4", "--gmax", "8", "--format", "csv"};
    std::ostringstream out, err;
    o.require(run_cli(10, argv, out, err) == kExitOk, "quadruple command failed");
    const auto t = cache.get(5, 8);
    std::ostringstream expected;
    expected << "p,g,fe0,fe2,fo2,fo0\n";
    for (int g = 4; g <= 8; ++g)
        expected << "5," << g << ',' << t->fe(g, 0) << ',' << t->fe(g, 1) << ',' << t->fo(g, 1) << ','
                 << t->fo(g, 0) << '\n';
    o.require(out.str() == expected.str(), "quadruple differs from the table");
    for (int c = 0; c < 2; ++c) {
        const ParityCounts counts = count_parities(LollipopTree(5, 4, c));
        o.require(t->fe(4, c) == static_cast<unsigned long>(counts.even) &&
                      t->fo(4, c) == static_cast<unsigned long>(counts.odd),
                  "census at g=4");
    }
    std::cout << out.str();
    return o;
}

}  // namespace

int main() {
    DimTableCache cache;
    bool all_ok = true;
    auto report = [&](int id, const std::string& title, const std::function<Outcome()>& body) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << title;
        if (!o.ok) std::cout << " -- first failure: " << o.note;
        std::cout << " (" << secs << " s)" << std::endl;
        all_ok = all_ok && o.ok;
    };

    report(1, "census = recursion (g<=4) and recursion = matrix = Galois sum (g<=8), p in {5,7,11,13}",
           [&] { return dimension_agreement(cache); });
    report(2, "closed low-genus polynomials reproduced exactly", [&] { return closed_constants(cache); });
    report(3, "S^2 = -pI, M(z) = -(1/p)SQS, fold property, eigenvalues of M(hatK)", [] { return structural_identities(); });
    report(4, "Hopf determinant valuation d(d-1)/2 with unit quotient; quantum integers are units", [] { return hopf(); });
    report(5, "degrees, leading terms and residue formula for g in {2,3,4}", [&] { return polynomial_structure(cache); });
    report(6, "Bernoulli identity for 0 <= g <= 10", [] { return bernoulli_identity(); });
    report(7, "p=5 quadruple (fe0, fe2, fo2, fo0) for 4 <= g <= 8", [&] { return quadruple_table(cache); });

    for (int g = 2; g <= 8; ++g) {
        const ConjectureScan scan = conjecture_scan(interpolate_delta(g, {}, cache), g);
        std::cout << "INFO [8] g=" << g << " even-P-powers-vanish=" << (scan.even_p_powers_vanish ? "yes" : "no")
                  << " divisible-by-delta2=" << (scan.divisible_by_delta2 ? "yes" : "no") << '\n';
    }
    return all_ok ? 0 : 1;
}
