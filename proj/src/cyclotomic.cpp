#include "tqft/cyclotomic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tqft {

namespace {

// Dense polynomials over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Returns (quotient, remainder) of a / b; b nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    if (a.size() < b.size()) return {Poly{}, a};
    Poly q(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational f = a[k + b.size() - 1] / lead;
        q[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= f * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

void require_odd_prime(long p) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("p must be a prime >= 5 (got " + std::to_string(p) + ")");
}

CycNum::CycNum(int p) : p_(p), coeffs_(static_cast<std::size_t>(p - 1)) {
    require_odd_prime(p);
}

CycNum CycNum::from_rational(int p, const Rational& r) {
    CycNum x(p);
    x.coeffs_[0] = r;
    return x;
}

CycNum CycNum::zeta_power(int p, long k) {
    std::vector<Rational> buf(static_cast<std::size_t>(p));
    long e = k % p;
    if (e < 0) e += p;
    buf[static_cast<std::size_t>(e)] = 1;
    return from_buffer(p, buf);
}

CycNum CycNum::from_exponents(int p, std::vector<Rational> buffer) {
    if (buffer.size() != static_cast<std::size_t>(p))
        throw std::invalid_argument("from_exponents: buffer length must equal p");
    return from_buffer(p, buffer);
}

// Reduces a length-p buffer indexed by exponent mod p into canonical form.
CycNum CycNum::from_buffer(int p, const std::vector<Rational>& buffer) {
    CycNum x(p);
    const Rational top = buffer[static_cast<std::size_t>(p - 1)];
    for (int i = 0; i < p - 1; ++i) x.coeffs_[i] = buffer[i] - top;
    return x;
}

void CycNum::check_same_field(const CycNum& other) const {
    if (p_ != other.p_)
        throw std::invalid_argument("cyclotomic operands over different primes");
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_integral() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycNum::to_rational() const {
    if (!is_rational()) throw std::domain_error("cyclotomic element is not rational: " + to_string());
    return coeffs_[0];
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
    check_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
    check_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& rhs) {
    check_same_field(rhs);
    const std::size_t p = static_cast<std::size_t>(p_);
    std::vector<Rational> buf(p);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= p) k -= p;
            buf[k] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    *this = from_buffer(p_, buf);
    return *this;
}

CycNum& CycNum::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

CycNum CycNum::operator-() const {
    CycNum r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta_p)");
    // Extended Euclid: find s with s * x == 1 mod Phi_p.
    Poly phi(static_cast<std::size_t>(p_), Rational(1));
    Poly a(coeffs_.begin(), coeffs_.end());
    trim(a);
    Poly r0 = phi, r1 = a;
    Poly s0, s1{Rational(1)};  // coefficients of a
    while (r1.size() > 1) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // Phi_p is irreducible, so the last nonzero remainder is a constant.
    if (r1.empty()) throw std::logic_error("cyclotomic inverse: non-coprime operand");
    const Rational unit = r1[0];
    auto [ignored, s] = poly_divmod(s1, phi);
    std::vector<Rational> buf(static_cast<std::size_t>(p_));
    for (std::size_t i = 0; i < s.size(); ++i) buf[i] = s[i] / unit;
    return from_buffer(p_, buf);
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << coeffs_[i];
        } else {
            if (coeffs_[i] != 1) os << "(" << coeffs_[i] << ")*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

CycNum pow(CycNum base, unsigned exponent) {
    CycNum result = CycNum::from_rational(base.prime(), 1);
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

CycNum galois(const CycNum& x, long j) {
    const long p = x.prime();
    long m = j % p;
    if (m < 0) m += p;
    if (m == 0) throw std::invalid_argument("Galois index must be prime to p");
    std::vector<Rational> buf(static_cast<std::size_t>(p));
    auto c = x.coeffs();
    for (long i = 0; i < static_cast<long>(c.size()); ++i) {
        if (c[i] == 0) continue;
        buf[static_cast<std::size_t>((i * m) % p)] += c[i];
    }
    return CycNum::from_exponents(x.prime(), std::move(buf));
}

Rational norm(const CycNum& x) {
    CycNum prod = x;
    for (long j = 2; j < x.prime(); ++j) prod *= galois(x, j);
    return prod.to_rational();
}

Rational trace(const CycNum& x) {
    CycNum sum = x;
    for (long j = 2; j < x.prime(); ++j) sum += galois(x, j);
    return sum.to_rational();
}

CycNum quantum_int(int p, long n) {
    if (n < 0) return -quantum_int(p, -n);
    CycNum r(p);
    for (long k = 0; k < n; ++k) r += CycNum::zeta_power(p, n - 1 - 2 * k);
    return r;
}

CycNum h_element(int p) {
    return CycNum::from_rational(p, 1) - CycNum::zeta_power(p, 1);
}

CycNum divide_by_h(const CycNum& x) {
    if (!x.is_integral()) throw std::invalid_argument("divide_by_h: non-integral operand");
    const int p = x.prime();
    auto c = x.coeffs();
    Integer sum = 0;
    for (const auto& v : c) sum += v.get_num();
    if (sum % p != 0) throw std::domain_error("divide_by_h: operand not divisible by h");
    const Integer k = sum / p;
    // r(z) = x(z) - k * Phi_p(z) vanishes at z = 1, so r = (1 - z) * y with
    // y_i = r_0 + ... + r_i.
    std::vector<Rational> buf(static_cast<std::size_t>(p));
    Rational running = 0;
    for (int i = 0; i < p - 1; ++i) {
        running += c[i] - Rational(k);
        buf[i] = running;
    }
    return CycNum::from_exponents(p, std::move(buf));
}

int h_valuation(const CycNum& x) {
    if (!x.is_integral()) throw std::invalid_argument("h_valuation: non-integral operand");
    if (x.is_zero()) return kInfiniteValuation;
    const int p = x.prime();
    int v = 0;
    CycNum y = x;
    for (;;) {
        Integer sum = 0;
        for (const auto& c : y.coeffs()) sum += c.get_num();
        if (sum % p != 0) return v;
        y = divide_by_h(y);
        ++v;
    }
}

}  // namespace tqft
