#pragma once

#include "mckayq/catalog.hpp"
#include "mckayq/selftest.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace mckayq;

inline Report const& cached(std::string const& name)
{
    static std::map<std::string, Report> memo;
    auto it = memo.find(name);
    if (it == memo.end()) it = memo.emplace(name, analyze(catalog_entry(name).job)).first;
    return it->second;
}

inline GroupElement element(Field const& f, std::vector<std::vector<std::string>> const& rows, long aut = -1)
{
    GroupElement g;
    g.aut = aut < 0 ? f.aut_identity() : aut;
    g.matrix = mat_identity(f, (int)rows.size());
    for (int i = 0; i < (int)rows.size(); ++i)
        for (int j = 0; j < (int)rows.size(); ++j) g.matrix(i, j) = f.parse(rows[i][j]);
    return g;
}

struct Built {
    FieldPtr field;
    FiniteGroup G;
    Kernel K;
};

inline Built build(FieldPtr f, std::vector<GroupElement> const& gens, std::vector<long> galois = {})
{
    if (galois.empty()) galois = {f->aut_identity()};
    FiniteGroup G = FiniteGroup::generate(f, (int)gens[0].matrix.n, gens);
    Kernel K = kernel_and_cosets(G, galois);
    return {f, std::move(G), std::move(K)};
}

/* Index of the irreducible whose value at H element h (a G index) is v; linear characters only. */
inline int irr_with_value(CharacterTable const& T, Kernel const& K, int g, FieldElement const& v)
{
    int cls = K.class_of[K.local[g]];
    int found = -1;
    for (std::size_t i = 0; i < T.size(); ++i)
        if (T.degree(i) == 1 && T.irr[i][cls] == v) {
            if (found >= 0) return -2;
            found = (int)i;
        }
    return found;
}

/* Orbit (quiver vertex) containing the linear character W_j, W_j(h) = zeta_N^j. */
inline int vertex_of(Report const& r, int h, long j, long N)
{
    CharacterTable const& T = *r.table;
    FieldElement v = T.cf->gen_pow(j * (T.conductor / N));
    int w = irr_with_value(T, *r.kernel, h, v);
    return w < 0 ? w : r.skew->orbit_of[w];
}

inline std::mt19937_64& rng()
{
    static std::mt19937_64 g(20240611);
    return g;
}

inline FieldElement random_element(Field const& f, int lo = -5, int hi = 5)
{
    std::uniform_int_distribution<int> coef(lo, hi), den(1, 4);
    FieldElement x = f.zero();
    for (int i = 0; i < f.dim(); ++i) {
        mpq_class q(coef(rng()), f.kind() == FieldKind::Finite ? 1 : den(rng()));
        q.canonicalize();
        x = f.add(x, f.mul(f.from_rational(q), f.gen_pow(i)));
    }
    return x;
}

}  // namespace testing
