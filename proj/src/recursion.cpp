#include "tqft/recursion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tqft/census.hpp"

namespace tqft {

DimTable::DimTable(int p, int gmax) : p_(p), gmax_(gmax) {
    require_odd_prime(p);
    if (gmax < 1) throw std::invalid_argument("gmax must be >= 1");
    const int d = this->d();
    fe_.resize(static_cast<std::size_t>(gmax * d));
    fo_.resize(fe_.size());
    for (int c = 0; c < d; ++c) {
        fe_[index(1, c)] = d - c;
        fo_[index(1, c)] = 0;
    }
    std::vector<BetaEta> kernel(static_cast<std::size_t>(d * d));
    for (int a = 0; a < d; ++a)
        for (int c = 0; c < d; ++c) kernel[static_cast<std::size_t>(a * d + c)] = beta_eta_closed(p, a, c);
    for (int g = 1; g < gmax; ++g) {
        for (int c = 0; c < d; ++c) {
            Integer even = 0, odd = 0;
            for (int a = 0; a < d; ++a) {
                const BetaEta& k = kernel[static_cast<std::size_t>(a * d + c)];
                const Integer& e = fe_[index(g, a)];
                const Integer& o = fo_[index(g, a)];
                even += e * k.beta + o * k.eta;
                odd += o * k.beta + e * k.eta;
            }
            fe_[index(g + 1, c)] = even;
            fo_[index(g + 1, c)] = odd;
        }
    }
}

std::size_t DimTable::index(int g, int c) const {
    if (g < 1 || g > gmax_ || c < 0 || c >= d())
        throw std::out_of_range("DimTable index (g=" + std::to_string(g) + ", c=" + std::to_string(c) +
                                ") out of range");
    return static_cast<std::size_t>((g - 1) * d() + c);
}

const Integer& DimTable::fe(int g, int c) const { return fe_[index(g, c)]; }
const Integer& DimTable::fo(int g, int c) const { return fo_[index(g, c)]; }

DimTable build_table(int p, int gmax) { return DimTable(p, gmax); }

std::vector<std::vector<Integer>> delta_by_max_kernel(int p, int gmax) {
    require_odd_prime(p);
    const int d = (p - 1) / 2;
    std::vector<std::vector<Integer>> t(static_cast<std::size_t>(gmax + 1), std::vector<Integer>(d));
    for (int c = 0; c < d; ++c) t[1][c] = d - c;
    for (int g = 1; g < gmax; ++g)
        for (int c = 0; c < d; ++c) {
            Integer s = 0;
            for (int a = 0; a < d; ++a) s += (d - std::max(a, c)) * t[g][a];
            t[g + 1][c] = s;
        }
    return t;
}

std::vector<std::vector<Integer>> delta_by_split_sum(int p, int gmax) {
    require_odd_prime(p);
    const int d = (p - 1) / 2;
    std::vector<std::vector<Integer>> t(static_cast<std::size_t>(gmax + 1), std::vector<Integer>(d));
    for (int c = 0; c < d; ++c) t[1][c] = d - c;
    for (int g = 1; g < gmax; ++g) {
        Integer base = 0;
        for (int a = 0; a < d; ++a) base += (d - a) * t[g][a];
        for (int c = 0; c < d; ++c) {
            Integer s = base;
            for (int a = 0; a < c; ++a) s += (a - c) * t[g][a];
            t[g + 1][c] = s;
        }
    }
    return t;
}

void verify_delta_paths(const DimTable& table) {
    const auto by_max = delta_by_max_kernel(table.prime(), table.gmax());
    const auto by_split = delta_by_split_sum(table.prime(), table.gmax());
    for (int g = 1; g <= table.gmax(); ++g)
        for (int c = 0; c < table.d(); ++c) {
            const Integer direct = table.delta(g, c);
            if (direct != by_max[g][c] || direct != by_split[g][c])
                throw std::logic_error("delta paths disagree at p=" + std::to_string(table.prime()) +
                                       " g=" + std::to_string(g) + " c=" + std::to_string(c));
        }
}

std::shared_ptr<const DimTable> DimTableCache::get(int p, int gmax) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = tables_.find(p);
    if (it != tables_.end() && it->second->gmax() >= gmax) return it->second;
    auto table = std::make_shared<const DimTable>(p, gmax);
    tables_[p] = table;
    return table;
}

}  // namespace tqft
