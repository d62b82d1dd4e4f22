#pragma once

// Brute-force census of small admissible colorings of the lollipop tree.
//
// Tree geometry (caterpillar): stick vertices u_1, ..., u_g lie on a path.
// The trunk edge (color 2c) meets u_1, the chain edge t_i (color 2 e_i) joins
// u_i to u_{i+1}, and the stick edge s_i (color 2 a_i) joins u_i to the loop
// vertex w_i whose loop edge has color a_i + b_i. The far end u_g carries a
// phantom edge of color 0, which forces a_g = e_{g-1} (a_1 = c when g = 1).
//
// Chain colors are stored as half colors: parity at the stick vertices with
// an even trunk and even sticks rules out odd chain colors.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace tqft {

struct LollipopTree {
    int p = 5;
    int g = 1;
    int c = 0;

    LollipopTree() = default;
    /// Throws std::invalid_argument on a bad prime, g < 1 or c outside [0, d-1].
    LollipopTree(int p, int g, int c);

    int d() const { return (p - 1) / 2; }
};

struct Coloring {
    std::vector<int> a;  // stick half colors, size g
    std::vector<int> b;  // loop offsets (loop color a_i + b_i), size g
    std::vector<int> e;  // chain half colors, size g - 1

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

enum class Parity { even, odd };

const char* to_string(Parity parity);

struct ParityCounts {
    std::uint64_t even = 0;
    std::uint64_t odd = 0;

    std::uint64_t total() const { return even + odd; }
    friend bool operator==(const ParityCounts&, const ParityCounts&) = default;
};

/// Admissibility at a vertex carrying colors (x, y, z).
bool admissible_triple(int p, int x, int y, int z);

/// Full check of every vertex condition of the tree, in raw colors.
bool is_small_admissible(const LollipopTree& tree, const Coloring& coloring);

Parity parity(const Coloring& coloring, int g, int c);

/// Every small admissible coloring, in lexicographic order of
/// (a_1, b_1, e_1, a_2, b_2, e_2, ..., a_g, b_g).
std::vector<Coloring> enumerate(const LollipopTree& tree);

/// Streaming form of enumerate(); same order.
void for_each_coloring(const LollipopTree& tree, const std::function<void(const Coloring&)>& visit);

/// Parity census; the OpenMP kernel partitions the first stick's choices.
ParityCounts count_parities(const LollipopTree& tree);

/// Size of the unpruned search space, d^(3g-1); used by the CLI size guard.
double search_space_estimate(const LollipopTree& tree);

/// `g;c;a_1,b_1,...,a_g,b_g;e_1,...,e_{g-1};parity`
std::string to_csv_record(const LollipopTree& tree, const Coloring& coloring);

struct BetaEta {
    std::int64_t beta = 0;  // balanced at the stick vertex
    std::int64_t eta = 0;   // unbalanced at the stick vertex

    friend bool operator==(const BetaEta&, const BetaEta&) = default;
};

/// Colorings of the genus-one tree with two colored points 2c1, 2c2,
/// split by balance at the stick vertex.
BetaEta beta_eta_bruteforce(int p, int c1, int c2);

/// ((m+1)(d-M), m(d-M)) with M = max(c1, c2), m = min(c1, c2).
BetaEta beta_eta_closed(int p, int c1, int c2);

}  // namespace tqft
