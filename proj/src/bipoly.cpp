#include "tqft/bipoly.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tqft {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree + 1));
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::compose_linear(const Rational& a, const Rational& b) const {
    const UniPoly inner({b, a});
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(r));
}

UniPoly operator*(UniPoly a, const Rational& s) {
    for (auto& c : a.coeffs_) c *= s;
    a.trim();
    return a;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.coeffs_.empty()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    const std::size_t m = divisor.coeffs_.size();
    if (rem.size() < m) return {UniPoly{}, *this};
    std::vector<Rational> quo(rem.size() - m + 1);
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Rational f = rem[k + m - 1] / divisor.coeffs_.back();
        quo[k] = f;
        for (std::size_t j = 0; j < m; ++j) rem[k + j] -= f * divisor.coeffs_[j];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("interpolate: bad sample sizes");
    const std::size_t n = xs.size();
    // Divided differences in place.
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            const Rational span = xs[i] - xs[i - level];
            if (span == 0) throw std::invalid_argument("interpolate: repeated abscissa");
            dd[i] = (dd[i] - dd[i - 1]) / span;
        }
    UniPoly acc = UniPoly::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) acc = acc * UniPoly({-xs[i], Rational(1)}) + UniPoly::constant(dd[i]);
    return acc;
}

// ---------------------------------------------------------------- BiPoly

BiPoly BiPoly::constant(const Rational& c) { return monomial(c, 0, 0); }
BiPoly BiPoly::P() { return monomial(1, 1, 0); }
BiPoly BiPoly::C() { return monomial(1, 0, 1); }

BiPoly BiPoly::monomial(const Rational& c, int p_degree, int c_degree) {
    BiPoly r;
    r.add_term({p_degree, c_degree}, c);
    return r;
}

BiPoly BiPoly::from_c_coefficients(const std::vector<UniPoly>& per_c_power) {
    BiPoly r;
    for (std::size_t j = 0; j < per_c_power.size(); ++j) {
        const auto& f = per_c_power[j].coeffs();
        for (std::size_t i = 0; i < f.size(); ++i) r.add_term({static_cast<int>(i), static_cast<int>(j)}, f[i]);
    }
    return r;
}

BiPoly BiPoly::from_univariate_in_C(const UniPoly& f) {
    BiPoly r;
    for (std::size_t j = 0; j < f.coeffs().size(); ++j) r.add_term({0, static_cast<int>(j)}, f.coeffs()[j]);
    return r;
}

BiPoly BiPoly::from_univariate_in_P(const UniPoly& f) {
    BiPoly r;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) r.add_term({static_cast<int>(i), 0}, f.coeffs()[i]);
    return r;
}

void BiPoly::add_term(const Key& key, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, value);
    if (inserted) return;
    it->second += value;
    if (it->second == 0) terms_.erase(it);
}

Rational BiPoly::coeff(int p_degree, int c_degree) const {
    auto it = terms_.find({p_degree, c_degree});
    return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [key, value] : terms_) deg = std::max(deg, key.first + key.second);
    return deg;
}

int BiPoly::degree_in_P() const {
    int deg = -1;
    for (const auto& [key, value] : terms_) deg = std::max(deg, key.first);
    return deg;
}

int BiPoly::degree_in_C() const {
    int deg = -1;
    for (const auto& [key, value] : terms_) deg = std::max(deg, key.second);
    return deg;
}

BiPoly BiPoly::homogeneous_part(int degree) const {
    BiPoly r;
    for (const auto& [key, value] : terms_)
        if (key.first + key.second == degree) r.terms_.emplace(key, value);
    return r;
}

UniPoly BiPoly::coefficient_of_P(int k) const {
    std::vector<Rational> v(static_cast<std::size_t>(std::max(degree_in_C(), 0) + 1));
    for (const auto& [key, value] : terms_)
        if (key.first == k) v[static_cast<std::size_t>(key.second)] = value;
    return UniPoly(std::move(v));
}

UniPoly BiPoly::coefficient_of_C(int k) const {
    std::vector<Rational> v(static_cast<std::size_t>(std::max(degree_in_P(), 0) + 1));
    for (const auto& [key, value] : terms_)
        if (key.second == k) v[static_cast<std::size_t>(key.first)] = value;
    return UniPoly(std::move(v));
}

UniPoly BiPoly::at_C(const Rational& value) const {
    std::vector<Rational> v(static_cast<std::size_t>(std::max(degree_in_P(), 0) + 1));
    for (const auto& [key, coeff] : terms_) {
        Rational term = coeff;
        for (int k = 0; k < key.second; ++k) term *= value;
        v[static_cast<std::size_t>(key.first)] += term;
    }
    return UniPoly(std::move(v));
}

Rational BiPoly::evaluate(const Rational& p, const Rational& c) const {
    Rational acc = 0;
    for (const auto& [key, coeff] : terms_) {
        Rational term = coeff;
        for (int k = 0; k < key.first; ++k) term *= p;
        for (int k = 0; k < key.second; ++k) term *= c;
        acc += term;
    }
    return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [key, value] : rhs.terms_) add_term(key, value);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    for (const auto& [key, value] : rhs.terms_) add_term(key, -value);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, value] : terms_) value *= s;
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, va] : a.terms_)
        for (const auto& [kb, vb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, va * vb);
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r(*this);
    for (auto& [key, value] : r.terms_) value = -value;
    return r;
}

namespace {

// (total degree desc, P degree desc)
std::vector<std::pair<BiPoly::Key, Rational>> canonical_order(const std::map<BiPoly::Key, Rational>& terms) {
    std::vector<std::pair<BiPoly::Key, Rational>> v(terms.begin(), terms.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
        const int tx = x.first.first + x.first.second, ty = y.first.first + y.first.second;
        if (tx != ty) return tx > ty;
        return x.first.first > y.first.first;
    });
    return v;
}

nlohmann::ordered_json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

}  // namespace

std::string BiPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, value] : canonical_order(terms_)) {
        if (!first) os << " + ";
        first = false;
        os << '(' << value << ')';
        if (key.second > 0) {
            os << 'C';
            if (key.second > 1) os << '^' << key.second;
        }
        if (key.first > 0) {
            os << 'P';
            if (key.first > 1) os << '^' << key.first;
        }
    }
    return os.str();
}

std::string BiPoly::to_json() const {
    nlohmann::ordered_json monomials = nlohmann::ordered_json::array();
    for (const auto& [key, value] : canonical_order(terms_)) {
        monomials.push_back({{"p", key.first},
                             {"c", key.second},
                             {"num", integer_json(value.get_num())},
                             {"den", integer_json(value.get_den())}});
    }
    return nlohmann::ordered_json{{"monomials", monomials}}.dump();
}

BiPoly pow(const BiPoly& base, unsigned exponent) {
    BiPoly r = BiPoly::constant(1);
    for (unsigned k = 0; k < exponent; ++k) r = r * base;
    return r;
}

// ---------------------------------------------------------------- Series

Series::Series(int order) : order_(order), coeffs_(static_cast<std::size_t>(order + 1)) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

Series::Series(int order, std::vector<BiPoly> coeffs) : Series(order) {
    for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
}

Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order_, b.order_);
    Series r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Series Series::inverse() const {
    const BiPoly& c0 = coeffs_[0];
    if (c0.total_degree() != 0) throw std::domain_error("series inverse needs a nonzero rational constant term");
    const Rational inv0 = 1 / c0.coeff(0, 0);
    Series r(order_);
    r[0] = BiPoly::constant(inv0);
    for (int k = 1; k <= order_; ++k) {
        BiPoly acc;
        for (int j = 1; j <= k; ++j) acc += coeffs_[static_cast<std::size_t>(j)] * r[k - j];
        r[k] = -acc * inv0;
    }
    return r;
}

Series Series::pow(unsigned exponent) const {
    Series r(order_);
    r[0] = BiPoly::constant(1);
    for (unsigned k = 0; k < exponent; ++k) r = r * *this;
    return r;
}

}  // namespace tqft
