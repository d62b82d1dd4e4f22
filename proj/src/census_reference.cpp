#include "tqft/census_reference.hpp"

#include <vector>

namespace tqft::reference {

namespace {

// Advances a mixed-radix counter; false once it wraps around.
bool next_tuple(std::vector<int>& digits, int radix) {
    for (auto& digit : digits) {
        if (++digit < radix) return true;
        digit = 0;
    }
    return false;
}

}  // namespace

ParityCounts count_parities_serial(const LollipopTree& tree) {
    const auto g = static_cast<std::size_t>(tree.g);
    const int d = tree.d();
    // digits: a_1..a_g, b_1..b_g, e_1..e_{g-1}
    std::vector<int> digits(3 * g - 1, 0);
    Coloring col;
    ParityCounts counts;
    do {
        col.a.assign(digits.begin(), digits.begin() + g);
        col.b.assign(digits.begin() + g, digits.begin() + 2 * g);
        col.e.assign(digits.begin() + 2 * g, digits.end());
        if (!is_small_admissible(tree, col)) continue;
        if (parity(col, tree.g, tree.c) == Parity::even)
            ++counts.even;
        else
            ++counts.odd;
    } while (next_tuple(digits, d));
    return counts;
}

UnprunedCensus count_unpruned(const LollipopTree& tree, TrunkEnd trunk) {
    const int p = tree.p;
    const auto g = static_cast<std::size_t>(tree.g);
    // digits: stick colors, loop colors, chain colors; all raw in [0, p-2].
    std::vector<int> digits(3 * g - 1, 0);
    UnprunedCensus result;
    do {
        const int* stick = digits.data();
        const int* loop = digits.data() + g;
        const int* chain = digits.data() + 2 * g;
        bool ok = true;
        for (std::size_t i = 0; ok && i < g; ++i) {
            if (loop[i] > (p - 3) / 2) ok = false;
            else if (!admissible_triple(p, stick[i], loop[i], loop[i])) ok = false;
            else {
                int left = i == 0 ? 0 : chain[i - 1];
                int right = i + 1 == g ? 0 : chain[i];
                if (trunk == TrunkEnd::first && i == 0) left = 2 * tree.c;
                if (trunk == TrunkEnd::last && i + 1 == g) right = 2 * tree.c;
                if (!admissible_triple(p, left, right, stick[i])) ok = false;
            }
        }
        if (!ok) continue;
        long sum = tree.c;
        for (std::size_t i = 0; i < g; ++i) sum += stick[i] / 2;
        for (std::size_t i = 0; i + 1 < g; ++i)
            if (chain[i] % 2 != 0) result.odd_chain_color_seen = true;
        const bool even = (tree.g == 2 && tree.c == 0) || sum % 2 == 0;
        if (even)
            ++result.counts.even;
        else
            ++result.counts.odd;
    } while (next_tuple(digits, p - 1));
    return result;
}

}  // namespace tqft::reference
