#include "tqft/census.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "tqft/cyclotomic.hpp"

namespace tqft {

namespace {

// Stick-vertex admissibility in half colors (all three edges even).
inline bool stick_vertex_ok(int p, int x, int y, int a) {
    return std::abs(x - y) <= a && a <= x + y && x + y + a <= p - 2;
}

struct Prefix {
    int a, b, e;
};

class Walker {
public:
    explicit Walker(const LollipopTree& tree) : tree_(tree), d_(tree.d()) {
        col_.a.assign(static_cast<std::size_t>(tree.g), 0);
        col_.b.assign(static_cast<std::size_t>(tree.g), 0);
        col_.e.assign(static_cast<std::size_t>(tree.g - 1), 0);
    }

    Coloring& coloring() { return col_; }

    // Visits every completion of the sticks i, i+1, ... in lexicographic
    // order; `left` is the half color entering u_i from the trunk side.
    template <class Visit>
    void walk(int i, int left, Visit& visit) {
        const bool last = i == tree_.g - 1;
        for (int a = 0; a < d_; ++a) {
            col_.a[i] = a;
            for (int b = 0; b < d_ - a; ++b) {
                col_.b[i] = b;
                if (last) {
                    if (stick_vertex_ok(tree_.p, left, 0, a)) visit(col_);
                    continue;
                }
                for (int e = 0; e < d_; ++e) {
                    if (!stick_vertex_ok(tree_.p, left, e, a)) continue;
                    col_.e[i] = e;
                    walk(i + 1, e, visit);
                }
            }
        }
    }

    // Continues a walk whose first stick is fixed by `prefix`.
    template <class Visit>
    void walk_from(const Prefix& prefix, Visit& visit) {
        col_.a[0] = prefix.a;
        col_.b[0] = prefix.b;
        if (tree_.g == 1) {
            visit(col_);
            return;
        }
        col_.e[0] = prefix.e;
        walk(1, prefix.e, visit);
    }

private:
    const LollipopTree& tree_;
    int d_;
    Coloring col_;
};

// Valid choices for the first stick, in enumeration order.
std::vector<Prefix> first_stick_prefixes(const LollipopTree& tree) {
    std::vector<Prefix> out;
    const int d = tree.d();
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d - a; ++b) {
            if (tree.g == 1) {
                if (stick_vertex_ok(tree.p, tree.c, 0, a)) out.push_back({a, b, 0});
                continue;
            }
            for (int e = 0; e < d; ++e)
                if (stick_vertex_ok(tree.p, tree.c, e, a)) out.push_back({a, b, e});
        }
    return out;
}

}  // namespace

LollipopTree::LollipopTree(int p_, int g_, int c_) : p(p_), g(g_), c(c_) {
    require_odd_prime(p);
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    if (c < 0 || c > d() - 1)
        throw std::invalid_argument("trunk half color c must lie in [0, (p-3)/2]");
}

const char* to_string(Parity parity) {
    return parity == Parity::even ? "even" : "odd";
}

bool admissible_triple(int p, int x, int y, int z) {
    return (x + y + z) % 2 == 0 && std::abs(x - y) <= z && z <= x + y && x + y + z <= 2 * p - 4;
}

bool is_small_admissible(const LollipopTree& tree, const Coloring& col) {
    const auto g = static_cast<std::size_t>(tree.g);
    if (col.a.size() != g || col.b.size() != g || col.e.size() != g - 1) return false;
    const int p = tree.p;
    auto in_range = [p](int color) { return color >= 0 && color <= p - 2; };
    for (std::size_t i = 0; i < g; ++i) {
        const int stick = 2 * col.a[i];
        const int loop = col.a[i] + col.b[i];
        if (col.a[i] < 0 || col.b[i] < 0) return false;
        if (!in_range(stick) || !in_range(loop)) return false;
        if (loop > (p - 3) / 2) return false;
        if (!admissible_triple(p, stick, loop, loop)) return false;
        const int left = i == 0 ? 2 * tree.c : 2 * col.e[i - 1];
        const int right = i + 1 == g ? 0 : 2 * col.e[i];
        if (!in_range(left) || !in_range(right)) return false;
        if (!admissible_triple(p, left, right, stick)) return false;
    }
    return true;
}

Parity parity(const Coloring& coloring, int g, int c) {
    if (g == 2 && c == 0) return Parity::even;
    long sum = c;
    for (int a : coloring.a) sum += a;
    return sum % 2 == 0 ? Parity::even : Parity::odd;
}

void for_each_coloring(const LollipopTree& tree, const std::function<void(const Coloring&)>& visit) {
    Walker walker(tree);
    for (const Prefix& prefix : first_stick_prefixes(tree)) walker.walk_from(prefix, visit);
}

std::vector<Coloring> enumerate(const LollipopTree& tree) {
    const std::vector<Prefix> prefixes = first_stick_prefixes(tree);
    std::vector<std::vector<Coloring>> parts(prefixes.size());
    const long n = static_cast<long>(prefixes.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) {
        Walker walker(tree);
        auto& sink = parts[static_cast<std::size_t>(k)];
        auto visit = [&sink](const Coloring& col) { sink.push_back(col); };
        walker.walk_from(prefixes[static_cast<std::size_t>(k)], visit);
    }
    std::vector<Coloring> out;
    for (auto& part : parts)
        for (auto& col : part) out.push_back(std::move(col));
    return out;
}

ParityCounts count_parities(const LollipopTree& tree) {
    const std::vector<Prefix> prefixes = first_stick_prefixes(tree);
    const long n = static_cast<long>(prefixes.size());
    const bool forced_even = tree.g == 2 && tree.c == 0;
    std::uint64_t even = 0, odd = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : even, odd)
    for (long k = 0; k < n; ++k) {
        Walker walker(tree);
        std::uint64_t local_even = 0, local_odd = 0;
        auto visit = [&](const Coloring& col) {
            long sum = tree.c;
            for (int a : col.a) sum += a;
            if (forced_even || sum % 2 == 0)
                ++local_even;
            else
                ++local_odd;
        };
        walker.walk_from(prefixes[static_cast<std::size_t>(k)], visit);
        even += local_even;
        odd += local_odd;
    }
    return {even, odd};
}

double search_space_estimate(const LollipopTree& tree) {
    return std::pow(static_cast<double>(tree.d()), 3.0 * tree.g - 1.0);
}

std::string to_csv_record(const LollipopTree& tree, const Coloring& col) {
    std::ostringstream os;
    os << tree.g << ';' << tree.c << ';';
    for (std::size_t i = 0; i < col.a.size(); ++i) {
        if (i) os << ',';
        os << col.a[i] << ',' << col.b[i];
    }
    os << ';';
    for (std::size_t i = 0; i < col.e.size(); ++i) {
        if (i) os << ',';
        os << col.e[i];
    }
    os << ';' << to_string(parity(col, tree.g, tree.c));
    return os.str();
}

BetaEta beta_eta_bruteforce(int p, int c1, int c2) {
    require_odd_prime(p);
    const int d = (p - 1) / 2;
    if (c1 < 0 || c2 < 0 || c1 >= d || c2 >= d)
        throw std::invalid_argument("beta/eta colors must lie in [0, (p-3)/2]");
    BetaEta r;
    for (int a = 0; a < d; ++a)
        for (int b = 0; a + b <= (p - 3) / 2; ++b) {
            if (!admissible_triple(p, 2 * c1, 2 * c2, 2 * a)) continue;
            if (!admissible_triple(p, 2 * a, a + b, a + b)) continue;
            if ((a + c1 + c2) % 2 == 0)
                ++r.beta;
            else
                ++r.eta;
        }
    return r;
}

BetaEta beta_eta_closed(int p, int c1, int c2) {
    require_odd_prime(p);
    const int d = (p - 1) / 2;
    if (c1 < 0 || c2 < 0 || c1 >= d || c2 >= d)
        throw std::invalid_argument("beta/eta colors must lie in [0, (p-3)/2]");
    const std::int64_t hi = std::max(c1, c2), lo = std::min(c1, c2);
    return {(lo + 1) * (d - hi), lo * (d - hi)};
}

}  // namespace tqft
