#include "mckayq/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace mckayq {

std::vector<long> smith_diagonal(std::vector<std::vector<long>> m)
{
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<long> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        std::size_t pr = rows, pc = cols;
        long best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || std::labs(m[i][j]) < best)) {
                    best = std::labs(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0) break;
        std::swap(m[t], m[pr]);
        for (auto& row : m) std::swap(row[t], row[pc]);
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            long q = m[i][t] / m[t][t];
            if (q)
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
            if (m[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            long q = m[t][j] / m[t][t];
            if (q)
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue;
        // divisibility: fold any entry not divisible by the pivot into row t
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
            for (std::size_t j = t + 1; j < cols; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
                    divides = false;
                    break;
                }
        if (!divides) continue;
        diag.push_back(std::labs(m[t][t]));
        ++t;
    }
    return diag;
}

AbelianPresentation abelian_presentation(std::size_t n, std::function<int(int, int)> const& mul)
{
    AbelianPresentation p;
    std::vector<int> in_sub(n, -1);  // element -> position in subgroup list
    std::vector<int> sub{0};
    std::vector<std::vector<long>> sub_coords{{}};
    in_sub[0] = 0;

    auto elem_order = [&](int x) {
        long o = 1;
        int y = x;
        while (y != 0) {
            y = mul(y, x);
            ++o;
        }
        return o;
    };

    while (sub.size() < n) {
        int pick = -1;
        long best = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if (in_sub[x] >= 0) continue;
            long o = elem_order((int)x);
            if (o > best) {
                best = o;
                pick = (int)x;
            }
        }
        // relative order of pick over the current subgroup
        long e = 1;
        int y = pick;
        while (in_sub[y] < 0) {
            y = mul(y, pick);
            ++e;
        }
        std::size_t r = p.generators.size();
        std::vector<long> rel(r + 1, 0);
        rel[r] = e;
        for (std::size_t j = 0; j < r; ++j) rel[j] = -sub_coords[in_sub[y]][j];
        for (auto& row : p.relations) row.push_back(0);
        p.relations.push_back(rel);
        p.generators.push_back(pick);
        p.rel_orders.push_back(e);

        std::vector<int> nsub;
        std::vector<std::vector<long>> ncoords;
        int power = 0;  // pick^k
        for (long k = 0; k < e; ++k) {
            for (std::size_t s = 0; s < sub.size(); ++s) {
                int z = mul(sub[s], power);
                auto c = sub_coords[s];
                c.push_back(k);
                nsub.push_back(z);
                ncoords.push_back(std::move(c));
            }
            power = mul(power, pick);
        }
        sub = std::move(nsub);
        sub_coords = std::move(ncoords);
        for (std::size_t s = 0; s < sub.size(); ++s) in_sub[sub[s]] = (int)s;
    }
    p.coords.assign(n, {});
    for (std::size_t s = 0; s < sub.size(); ++s) {
        auto c = sub_coords[s];
        c.resize(p.generators.size(), 0);
        p.coords[sub[s]] = std::move(c);
    }
    return p;
}

std::vector<long> invariant_factors(AbelianPresentation const& p)
{
    std::vector<long> out;
    if (p.relations.empty()) return out;
    for (long d : smith_diagonal(p.relations))
        if (d != 1) out.push_back(d);
    return out;
}

}  // namespace mckayq
