#include "mckayq/skewsolve.hpp"

#include "mckayq/smith.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace mckayq {

bool SkewData::ambiguous() const
{
    for (auto const& o : orbits)
        if (!o.solved()) return true;
    return false;
}

std::vector<std::vector<int>> twist_permutations(FiniteGroup const& G, Kernel const& K,
                                                 CharacterTable const& T)
{
    std::vector<std::vector<int>> perms;
    for (int c : K.cosets) {
        std::vector<int> p(T.size());
        for (std::size_t i = 0; i < T.size(); ++i) {
            p[i] = irreducible_index(T, galois_twist(G, K, T, T.irr[i], c));
            if (p[i] < 0) throw std::logic_error("Galois twist of an irreducible is not irreducible");
        }
        perms.push_back(std::move(p));
    }
    return perms;
}

SkewData compute_orbits(FiniteGroup const& G, Kernel const& K, CharacterTable const& T)
{
    SkewData S;
    S.degree = (long)K.galois.size();
    S.twist = twist_permutations(G, K, T);
    S.orbit_of.assign(T.size(), -1);
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (S.orbit_of[i] >= 0) continue;
        OrbitDatum o;
        std::set<int> mem;
        for (auto const& p : S.twist) mem.insert(p[i]);
        o.members.assign(mem.begin(), mem.end());
        o.t = (int)o.members.size();
        o.dim_w = T.degree(i);
        for (int m : o.members) {
            if (S.orbit_of[m] >= 0) throw std::logic_error("twist orbits overlap");
            if (T.degree(m) != o.dim_w) throw std::logic_error("orbit members differ in degree");
            S.orbit_of[m] = (int)S.orbits.size();
        }
        std::ostringstream lab;
        lab << "V" << o.members[0];
        if (o.t > 1) {
            lab << "{";
            for (std::size_t k = 0; k < o.members.size(); ++k) lab << (k ? "," : "") << o.members[k];
            lab << "}";
        }
        o.label = lab.str();
        S.orbits.push_back(std::move(o));
    }
    return S;
}

std::vector<long> orbit_coefficients(SkewData const& S, CharacterTable const& T,
                                     Character const& chi)
{
    std::vector<long> m = decompose(T, chi);
    std::vector<long> c(S.orbits.size());
    for (std::size_t i = 0; i < S.orbits.size(); ++i) {
        auto const& o = S.orbits[i];
        c[i] = m[o.members[0]];
        for (int w : o.members)
            if (m[w] != c[i])
                throw OrbitInconsistent("multiplicities differ across orbit " + o.label +
                                        "; the character is not a restriction of a G-module");
    }
    return c;
}

std::vector<long> gmodule_multiplicities(SkewData const& S, CharacterTable const& T,
                                         Character const& res_x)
{
    std::vector<long> c = orbit_coefficients(S, T, res_x);
    for (std::size_t i = 0; i < c.size(); ++i) {
        long a = S.orbits[i].a;
        if (a <= 0) throw InconsistentConstraints("orbit " + S.orbits[i].label + " is unresolved");
        if (c[i] % a != 0)
            throw NonDivisible("coefficient " + std::to_string(c[i]) + " on orbit " +
                               S.orbits[i].label + " is not divisible by a = " + std::to_string(a));
        c[i] /= a;
    }
    return c;
}

Character restriction_character(SkewData const& S, CharacterTable const& T, int orbit)
{
    auto const& o = S.orbits[orbit];
    Character chi = zero_character(T);
    for (int w : o.members) chi = add_char(T, chi, T.irr[w]);
    return scale_char(T, chi, o.a);
}

namespace {

std::vector<long> divisors(long n)
{
    std::vector<long> d;
    for (long k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

long char_degree(CharacterTable const& T, Character const& chi)
{
    return T.cf->rational_value(chi[0])->get_num().get_si();
}

bool resolved_by(std::vector<OrbitDatum> const& orbits, std::vector<long> const& g)
{
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (orbits[i].solved()) continue;
        long n = 0;
        for (long a : orbits[i].candidates)
            if (g[i] == 0 || g[i] % a == 0) ++n;
        if (n > 1) return false;
    }
    return true;
}

/* gcd of orbit coefficients over the tensor closure of U, its exterior powers and duals. */
std::vector<long> saturate(SkewData& S, FiniteGroup const& G, Kernel const& K,
                           CharacterTable const& T, SkewOptions const& opt)
{
    std::vector<Character> base;
    std::set<Character> seen;
    auto push_base = [&](Character const& c) {
        if (seen.insert(c).second) base.push_back(c);
    };
    for (int p = 1; p <= G.d(); ++p) {
        Character w = wedge_power_of_standard(G, K, T, p);
        push_base(w);
        push_base(dual_char(T, w));
    }
    std::vector<long> g(S.orbits.size(), 0);
    auto absorb = [&](Character const& chi) {
        auto c = orbit_coefficients(S, T, chi);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] > 0) g[i] = gcd_l(g[i], c[i]);
    };
    for (auto const& c : base) absorb(c);
    std::vector<Character> frontier = base;
    int steps = 0;
    while (!frontier.empty() && steps < opt.saturation_iterations && !resolved_by(S.orbits, g)) {
        std::vector<Character> next;
        for (auto const& x : frontier) {
            long dx = char_degree(T, x);
            for (auto const& b : base) {
                if (dx * char_degree(T, b) > opt.saturation_degree) continue;
                Character y = tensor_char(T, x, b);
                if (!seen.insert(y).second) continue;
                absorb(y);
                next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
        ++steps;
    }
    S.saturation_steps = steps;
    S.saturation_characters = seen.size();
    return g;
}

/* Linear G-stable character, cyclic Galois group: extension exists iff chi(g^r) is a norm. */
NormAnswer cyclic_extension(FiniteGroup const& G, Kernel const& K, CharacterTable const& T,
                            int irr, long bound, std::string& why)
{
    Field const& f = G.field();
    long r = (long)K.galois.size();
    for (std::size_t c = 0; c < K.cosets.size(); ++c) {
        if ((long)f.aut_group({K.coset_auts[c]}).size() != r) continue;
        int g = K.cosets[c];
        int gr = G.pow(g, r);
        int h = K.local[gr];
        if (h < 0) throw std::logic_error("g^r is not in H");
        FieldElement v = T.irr[irr][K.class_of[h]];
        std::ostringstream os;
        os << "chi(g^" << r << ") = " << T.cf->to_string(v) << " with g of automorphism "
           << K.coset_auts[c];
        if (f.kind() == FieldKind::Finite) {
            why = os.str() + "; norms of finite fields are surjective";
            return NormAnswer::Yes;
        }
        NormAnswer ans = f.is_norm(v, K.galois, bound);
        why = os.str() + "; is_norm -> " + to_string(ans);
        return ans;
    }
    why = "Galois group is not cyclic";
    return NormAnswer::Unknown;
}

}  // namespace

long count_root_of_unity_extensions(FiniteGroup const& G, Kernel const& K, CharacterTable const& T,
                                    int irreducible, bool first_only, long cap)
{
    Field const& f = G.field();
    if (f.kind() != FieldKind::Cyclotomic)
        throw std::invalid_argument("root-of-unity extension search needs a cyclotomic field");
    if (T.degree(irreducible) != 1) throw std::invalid_argument("character is not linear");
    long n = f.conductor();
    // mu(l) = <zeta_n>, or <-zeta_n> for odd n
    std::vector<FieldElement> roots;
    for (long k = 0; k < n; ++k) {
        roots.push_back(f.gen_pow(k));
        if (n % 2 == 1) roots.push_back(f.neg(f.gen_pow(k)));
    }
    std::size_t m = K.cosets.size();
    // c_i c_j = h c_k
    std::vector<std::vector<int>> prod_coset(m, std::vector<int>(m));
    std::vector<std::vector<FieldElement>> prod_val(m, std::vector<FieldElement>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            int x = G.mul(K.cosets[i], K.cosets[j]);
            long aut = G.element(x).aut;
            std::size_t k = std::find(K.coset_auts.begin(), K.coset_auts.end(), aut) -
                            K.coset_auts.begin();
            int h = K.local[G.mul(x, G.inv(K.cosets[k]))];
            prod_coset[i][j] = (int)k;
            prod_val[i][j] = T.irr[irreducible][K.class_of[h]];
        }
    std::vector<FieldElement> lam(m, f.one());
    long found = 0, visited = 0;
    auto consistent = [&](std::size_t upto) {
        for (std::size_t i = 0; i <= upto; ++i)
            for (std::size_t j = 0; j <= upto; ++j) {
                std::size_t k = prod_coset[i][j];
                if (k > upto) continue;
                FieldElement lhs = f.mul(lam[i], f.apply_aut(K.coset_auts[i], lam[j]));
                if (lhs != f.mul(prod_val[i][j], lam[k])) return false;
            }
        return true;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) {
        if (++visited > cap) return true;
        if (pos == m) {
            ++found;
            return first_only;
        }
        for (auto const& r : roots) {
            lam[pos] = r;
            if (consistent(pos) && rec(pos + 1)) return true;
        }
        return false;
    };
    if (consistent(0)) rec(1);
    return found;
}

void solve_multiplicities(SkewData& S, FiniteGroup const& G, Kernel const& K,
                          CharacterTable const& T, SkewOptions const& opt)
{
    for (auto& o : S.orbits) {
        if (S.degree % o.t != 0) throw InconsistentConstraints("orbit size does not divide [l:k]");
        o.candidates = divisors(S.degree / o.t);
        o.a = 0;
        o.provenance.clear();
        o.trace.clear();
        std::ostringstream os;
        os << "L2: a*b = [l:k]/t = " << S.degree / o.t << ", candidates";
        for (long a : o.candidates) os << " " << a;
        o.trace.push_back(os.str());
    }
    auto fix = [&](OrbitDatum& o, long a, char const* layer) {
        o.a = a;
        o.candidates = {a};
        o.provenance = layer;
    };

    // L0
    int triv = irreducible_index(T, trivial_character(T));
    auto& o0 = S.orbits[S.orbit_of[triv]];
    fix(o0, 1, "L0");
    o0.trace.push_back("L0: trivial orbit, a = 1");
    for (auto& o : S.orbits)
        if (!o.solved() && o.candidates.size() == 1) fix(o, o.candidates[0], "L2");

    // L1
    bool open = false;
    for (auto const& o : S.orbits) open = open || !o.solved();
    if (open) {
        std::vector<long> g = saturate(S, G, K, T, opt);
        for (std::size_t i = 0; i < S.orbits.size(); ++i) {
            auto& o = S.orbits[i];
            if (g[i] > 0 && o.solved() && g[i] % o.a != 0)
                throw InconsistentConstraints("saturation gcd " + std::to_string(g[i]) +
                                              " contradicts a = " + std::to_string(o.a) +
                                              " on " + o.label);
            if (o.solved()) continue;
            std::ostringstream os;
            os << "L1: gcd of coefficients = " << g[i] << " over " << S.saturation_characters
               << " characters";
            o.trace.push_back(os.str());
            if (g[i] == 0) continue;
            std::vector<long> keep;
            for (long a : o.candidates)
                if (g[i] % a == 0) keep.push_back(a);
            if (keep.empty()) throw InconsistentConstraints("no value of a fits " + o.label);
            o.candidates = keep;
            if (keep.size() == 1) fix(o, keep[0], "L1");
        }
    }

    // L3
    for (auto& o : S.orbits) {
        if (o.solved() || o.t != 1 || o.dim_w != 1) continue;
        if (std::find(o.candidates.begin(), o.candidates.end(), 1L) == o.candidates.end()) continue;
        std::string why;
        NormAnswer ans = cyclic_extension(G, K, T, o.members[0], opt.norm_search_bound, why);
        if (ans == NormAnswer::Unknown && G.field().kind() == FieldKind::Cyclotomic &&
            count_root_of_unity_extensions(G, K, T, o.members[0], true, opt.extension_search_cap) > 0) {
            ans = NormAnswer::Yes;
            why += "; root-of-unity extension found";
        }
        o.trace.push_back("L3: " + why);
        if (ans == NormAnswer::Yes) {
            fix(o, 1, "L3");
        } else if (ans == NormAnswer::No) {
            o.candidates.erase(std::remove(o.candidates.begin(), o.candidates.end(), 1L),
                               o.candidates.end());
            if (o.candidates.empty()) throw InconsistentConstraints("no value of a fits " + o.label);
            if (o.candidates.size() == 1) fix(o, o.candidates[0], "L3");
        }
    }

    // L4
    for (auto& o : S.orbits) {
        if (o.solved()) {
            o.b = S.degree / (o.t * o.a);
            continue;
        }
        o.provenance = "L4";
        o.b = 0;
        std::ostringstream os;
        os << "L4: ambiguous, candidates";
        for (long a : o.candidates) os << " " << a;
        o.trace.push_back(os.str());
    }
}

std::string ClassGroup::describe() const
{
    if (invariant_factors.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < invariant_factors.size(); ++i)
        os << (i ? " x " : "") << "C" << invariant_factors[i];
    return os.str();
}

ClassGroup class_group(SkewData const& S, CharacterTable const& T)
{
    ClassGroup C;
    std::vector<int> pos(S.orbits.size(), -1);
    for (std::size_t i = 0; i < S.orbits.size(); ++i) {
        auto const& o = S.orbits[i];
        if (o.t == 1 && o.a == 1 && o.dim_w == 1) {
            pos[i] = (int)C.elements.size();
            C.elements.push_back((int)i);
        }
    }
    int triv = S.orbit_of[irreducible_index(T, trivial_character(T))];
    if (C.elements.empty() || C.elements[0] != triv)
        throw std::logic_error("trivial orbit missing from the class group");
    std::size_t n = C.elements.size();
    C.table.assign(n, std::vector<int>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Character p = tensor_char(T, T.irr[S.orbits[C.elements[x]].members[0]],
                                      T.irr[S.orbits[C.elements[y]].members[0]]);
            int irr = irreducible_index(T, p);
            int z = irr < 0 ? -1 : pos[S.orbit_of[irr]];
            if (z < 0) throw std::logic_error("class group is not closed under tensor products");
            C.table[x][y] = z;
        }
    AbelianPresentation P =
        abelian_presentation(n, [&](int a, int b) { return C.table[a][b]; });
    C.invariant_factors = invariant_factors(P);
    return C;
}

bool res_ind_identity(SkewData const& S, FiniteGroup const& G, Kernel const& K,
                      CharacterTable const& T, int orbit)
{
    auto const& o = S.orbits[orbit];
    if (!o.solved()) return false;
    Character lhs = zero_character(T);
    for (int c : K.cosets) lhs = add_char(T, lhs, galois_twist(G, K, T, T.irr[o.members[0]], c));
    Character rhs = zero_character(T);
    for (int w : o.members) rhs = add_char(T, rhs, T.irr[w]);
    rhs = scale_char(T, rhs, o.a * o.b);
    return lhs == rhs;
}

}  // namespace mckayq
