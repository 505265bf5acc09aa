#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace mckayq {

/* Diagonal of the Smith normal form (d1 | d2 | ...), zeros dropped. */
std::vector<long> smith_diagonal(std::vector<std::vector<long>> m);

/* Finite abelian group on indices 0..n-1 (0 the identity), written with a
 * greedily chosen generating set and a triangular relation matrix. */
struct AbelianPresentation {
    std::vector<int> generators;
    std::vector<long> rel_orders;                // e_i: least e with g_i^e in <g_1..g_{i-1}>
    std::vector<std::vector<long>> relations;    // row i: e_i at i, minus earlier coordinates
    std::vector<std::vector<long>> coords;       // element -> exponents, 0 <= x_i < e_i
};

AbelianPresentation abelian_presentation(std::size_t n, std::function<int(int, int)> const& mul);

/* Invariant factors of the group, trivial factors dropped (empty = trivial group). */
std::vector<long> invariant_factors(AbelianPresentation const& p);

}  // namespace mckayq
