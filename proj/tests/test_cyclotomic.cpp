#include <doctest.h>

#include <random>
#include <stdexcept>

#include "tqft/cyclotomic.hpp"

using namespace tqft;

namespace {

const int kPrimes[] = {5, 7, 11, 13};

CycNum random_element(int p, std::mt19937& rng, bool integral = false) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    std::vector<Rational> buf(static_cast<std::size_t>(p));
    for (auto& x : buf) {
        x = integral ? Rational(num(rng)) : Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return CycNum::from_exponents(p, buf);
}

CycNum nonzero_element(int p, std::mt19937& rng, bool integral = false) {
    for (;;) {
        CycNum x = random_element(p, rng, integral);
        if (!x.is_zero()) return x;
    }
}

}  // namespace

TEST_CASE("zeta satisfies the cyclotomic relations") {
    const CycNum z = CycNum::zeta_power(5, 1);
    CHECK(pow(z, 5) == CycNum::from_rational(5, 1));
    CHECK(z + pow(z, 2) + pow(z, 3) + pow(z, 4) == CycNum::from_rational(5, -1));
    CHECK_FALSE(z == CycNum::from_rational(5, 1));
    CHECK(CycNum::zeta_power(5, -1) == pow(z, 4));
    CHECK(CycNum::zeta_power(7, 6).coeffs()[0] == -1);
}

TEST_CASE("bad primes are rejected") {
    CHECK_THROWS_AS(CycNum::zeta_power(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(CycNum(3), std::invalid_argument);
    CHECK_THROWS_AS(require_odd_prime(9), std::invalid_argument);
    CHECK_NOTHROW(require_odd_prime(13));
}

TEST_CASE("products and inverses") {
    for (int p : kPrimes) {
        const CycNum z = CycNum::zeta_power(p, 1);
        const CycNum one = CycNum::from_rational(p, 1);
        CHECK(z * CycNum::zeta_power(p, p - 1) == one);
        const CycNum h = one - z;
        CHECK(h.inverse() * h == one);
    }
    const CycNum a = CycNum::zeta_power(5, 1) + CycNum::zeta_power(5, 4);
    const CycNum b = CycNum::zeta_power(5, 2) + CycNum::zeta_power(5, 3);
    CHECK(a * b == CycNum::from_rational(5, -1));
    CHECK_THROWS(CycNum(5).inverse());
    CHECK_THROWS_AS(CycNum(5) + CycNum(7), std::invalid_argument);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(20240501);
    for (int p : kPrimes) {
        const CycNum one = CycNum::from_rational(p, 1);
        for (int trial = 0; trial < 8; ++trial) {
            const CycNum x = random_element(p, rng), y = random_element(p, rng), w = random_element(p, rng);
            CHECK((x * y) * w == x * (y * w));
            CHECK(x * (y + w) == x * y + x * w);
            CHECK(x * y == y * x);
            CHECK(x - x == CycNum(p));
            const CycNum nz = nonzero_element(p, rng);
            CHECK(nz * nz.inverse() == one);
            CHECK((x / nz) * nz == x);
        }
    }
}

TEST_CASE("canonical form is unique") {
    std::mt19937 rng(7);
    for (int p : kPrimes) {
        const CycNum x = random_element(p, rng);
        std::vector<Rational> buf(x.coeffs().begin(), x.coeffs().end());
        buf.push_back(0);
        CHECK(CycNum::from_exponents(p, buf) == x);
        // adding a multiple of 1 + z + ... + z^(p-1) changes nothing
        for (auto& c : buf) c += 3;
        CHECK(CycNum::from_exponents(p, buf) == x);
    }
}

TEST_CASE("galois automorphisms") {
    const CycNum a = CycNum::zeta_power(5, 1) + CycNum::zeta_power(5, 4);
    CHECK(galois(a, 2) == CycNum::zeta_power(5, 2) + CycNum::zeta_power(5, 3));
    CHECK_THROWS(galois(a, 5));
    std::mt19937 rng(99);
    for (int p : kPrimes) {
        const CycNum x = random_element(p, rng), y = random_element(p, rng);
        CHECK(galois(x, 1) == x);
        for (int j = 1; j < p; ++j) {
            CHECK(galois(x * y, j) == galois(x, j) * galois(y, j));
            CHECK(galois(x + y, j) == galois(x, j) + galois(y, j));
            CHECK(galois(galois(x, j), 3) == galois(x, (3 * j) % p));
        }
    }
}

TEST_CASE("norm and trace") {
    for (int p : kPrimes) {
        CHECK(norm(CycNum::from_rational(p, 1)) == 1);
        CHECK(norm(h_element(p)) == p);
        CHECK(trace(CycNum::from_rational(p, 1)) == p - 1);
        CHECK(trace(CycNum::zeta_power(p, 1)) == -1);
    }
    std::mt19937 rng(3);
    for (int p : kPrimes) {
        const CycNum x = random_element(p, rng), y = random_element(p, rng);
        CHECK(norm(x * y) == norm(x) * norm(y));
        // real integral elements have integer trace
        const CycNum xi = random_element(p, rng, true);
        const CycNum real = xi + galois(xi, p - 1);
        const Rational t = trace(real);
        CHECK(t.get_den() == 1);
    }
}

TEST_CASE("quantum integers") {
    for (int p : kPrimes) {
        const CycNum q = CycNum::zeta_power(p, 1);
        CHECK(quantum_int(p, 0).is_zero());
        CHECK(quantum_int(p, 1) == CycNum::from_rational(p, 1));
        CHECK(quantum_int(p, 2) == q + q.inverse());
        CHECK(quantum_int(p, p).is_zero());
        for (int n = 1; n < p; ++n) {
            const CycNum qn = quantum_int(p, n);
            CHECK(qn.is_integral());
            const Rational nm = norm(qn);
            CHECK((nm == 1 || nm == -1));
        }
    }
}

TEST_CASE("h-adic valuation") {
    for (int p : kPrimes) {
        const CycNum h = h_element(p);
        CHECK(h_valuation(h) == 1);
        CHECK(h_valuation(CycNum::from_rational(p, p)) == p - 1);
        CHECK(h_valuation(CycNum::from_rational(p, 1)) == 0);
        CHECK(h_valuation(CycNum(p)) == kInfiniteValuation);
        CHECK(divide_by_h(h * h) == h);
        CHECK_THROWS(h_valuation(CycNum::from_rational(p, Rational(1, 2))));
    }
    std::mt19937 rng(11);
    for (int p : kPrimes) {
        for (int trial = 0; trial < 5; ++trial) {
            const CycNum x = nonzero_element(p, rng, true) * pow(h_element(p), static_cast<unsigned>(trial));
            const CycNum y = nonzero_element(p, rng, true);
            CHECK(h_valuation(x * y) == h_valuation(x) + h_valuation(y));
            CHECK(h_valuation(x) >= trial);
        }
    }
}
