#pragma once

// Dimension tables fe (even colorings) and fo (odd colorings) of the lollipop
// tree for fixed p, filled bottom-up by gluing one genus-one two-point piece at
// a time.

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "tqft/cyclotomic.hpp"

namespace tqft {

class DimTable {
public:
    DimTable(int p, int gmax);

    int prime() const { return p_; }
    int gmax() const { return gmax_; }
    int d() const { return (p_ - 1) / 2; }

    const Integer& fe(int g, int c) const;
    const Integer& fo(int g, int c) const;
    Integer D(int g, int c) const { return fe(g, c) + fo(g, c); }
    Integer delta(int g, int c) const { return fe(g, c) - fo(g, c); }

private:
    std::size_t index(int g, int c) const;

    int p_;
    int gmax_;
    std::vector<Integer> fe_;
    std::vector<Integer> fo_;
};

DimTable build_table(int p, int gmax);

/// delta_g^(2c) for 1 <= g <= gmax, computed directly from
/// delta_{g+1}^(2c) = sum_a (d - max(a, c)) delta_g^(2a).
/// Indexed [g][c]; row 0 is unused.
std::vector<std::vector<Integer>> delta_by_max_kernel(int p, int gmax);

/// Same table via
/// delta_{g+1}^(2c) = sum_a (d - a) delta_g^(2a) + sum_{a<c} (a - c) delta_g^(2a).
std::vector<std::vector<Integer>> delta_by_split_sum(int p, int gmax);

/// Throws std::logic_error naming (p, g, c) if the three delta routes disagree.
void verify_delta_paths(const DimTable& table);

/// Thread-safe memo of tables keyed by prime; a cached table is reused for any
/// request with gmax not exceeding its own.
class DimTableCache {
public:
    std::shared_ptr<const DimTable> get(int p, int gmax);

private:
    std::mutex mutex_;
    std::map<int, std::shared_ptr<const DimTable>> tables_;
};

}  // namespace tqft
