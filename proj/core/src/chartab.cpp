#include "mckayq/chartab.hpp"

#include "mckayq/smith.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace mckayq {

long CharacterTable::degree(std::size_t i) const
{
    return cf->rational_value(irr[i][0])->get_num().get_si();
}

namespace {

long multiplicative_order_mod(long p, long e)
{
    if (e == 1) return 1;
    long o = 1, x = mod_l(p, e);
    while (x != 1) {
        x = x * p % e;
        ++o;
    }
    return o;
}

/* class data shared by both table methods */
void fill_class_data(Kernel const& K, CharacterTable& T)
{
    std::size_t r = K.classes.size();
    T.class_size.resize(r);
    T.class_rep.resize(r);
    T.class_inv.resize(r);
    T.class_order.resize(r);
    for (std::size_t c = 0; c < r; ++c) {
        T.class_size[c] = (int)K.classes[c].size();
        T.class_rep[c] = K.classes[c][0];
        T.class_inv[c] = K.class_of[K.inv[T.class_rep[c]]];
        T.class_order[c] = K.order[T.class_rep[c]];
    }
}

int hpow(Kernel const& K, int x, long e)
{
    int r = 0;
    for (long i = 0; i < e; ++i) r = K.hmul(r, x);
    return r;
}

void canonical_sort(CharacterTable& T)
{
    Field const& cf = *T.cf;
    auto trivial = [&](Character const& c) {
        for (auto const& v : c)
            if (!cf.is_one(v)) return false;
        return true;
    };
    std::sort(T.irr.begin(), T.irr.end(), [&](Character const& a, Character const& b) {
        mpq_class da = *cf.rational_value(a[0]), db = *cf.rational_value(b[0]);
        if (da != db) return da < db;
        bool ta = trivial(a), tb = trivial(b);
        if (ta != tb) return ta;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
}

CharacterTable abelian_table(Kernel const& K, FieldPtr cf, long N)
{
    CharacterTable T;
    T.cf = cf;
    T.conductor = N;
    T.order = (long)K.size();
    T.method = "abelian";
    fill_class_data(K, T);
    AbelianPresentation P =
        abelian_presentation(K.size(), [&](int a, int b) { return K.hmul(a, b); });
    std::size_t r = P.generators.size();
    std::vector<long> y(r, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == r) {
            Character chi;
            chi.reserve(T.num_classes());
            for (std::size_t c = 0; c < T.num_classes(); ++c) {
                auto const& x = P.coords[T.class_rep[c]];
                long s = 0;
                for (std::size_t j = 0; j < r; ++j) s = mod_l(s + x[j] * y[j], N);
                chi.push_back(cf->gen_pow(s));
            }
            T.irr.push_back(std::move(chi));
            return;
        }
        long e = P.rel_orders[i];
        long s = 0;
        for (std::size_t j = 0; j < i; ++j) s = mod_l(s - P.relations[i][j] * y[j], N);
        if (s % e != 0) throw std::logic_error("abelian character relation not solvable");
        for (long k = 0; k < e; ++k) {
            y[i] = mod_l(s / e + k * (N / e), N);
            rec(i + 1);
        }
    };
    rec(0);
    canonical_sort(T);
    return T;
}

long primitive_root(long q)
{
    auto fs = prime_factors(q - 1);
    for (long g = 2; g < q; ++g) {
        bool ok = true;
        for (long f : fs)
            if (powmod_l(g, (q - 1) / f, q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    return 1;
}

using ModMat = std::vector<std::vector<long>>;

/* Null space of an r x c matrix over F_q, as column vectors. */
std::vector<std::vector<long>> nullspace_mod(ModMat m, long q)
{
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<int> pivcol;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        long iv = inverse_mod(m[rank][c], q);
        for (auto& v : m[rank]) v = v * iv % q;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            long f = m[i][c];
            for (std::size_t k = 0; k < cols; ++k) m[i][k] = mod_l(m[i][k] - f * m[rank][k], q);
        }
        pivcol.push_back((int)c);
        ++rank;
    }
    std::vector<std::vector<long>> basis;
    std::vector<bool> is_piv(cols, false);
    for (int c : pivcol) is_piv[c] = true;
    for (std::size_t fcol = 0; fcol < cols; ++fcol) {
        if (is_piv[fcol]) continue;
        std::vector<long> v(cols, 0);
        v[fcol] = 1;
        for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = mod_l(-m[i][fcol], q);
        basis.push_back(std::move(v));
    }
    return basis;
}

CharacterTable dixon_table(Kernel const& K, FieldPtr cf, long N)
{
    CharacterTable T;
    T.cf = cf;
    T.conductor = N;
    T.order = (long)K.size();
    T.method = "dixon";
    fill_class_data(K, T);
    std::size_t r = T.num_classes();
    long h = T.order;

    long q = N + 1;
    while (q <= 2 * h || !is_prime_l(q)) q += N;
    long root = primitive_root(q);
    long z = powmod_l(root, (q - 1) / N, q);

    // class multiplication coefficients: A_j[k][l] = #{x in C_j : x^{-1} z_l in C_k}
    std::vector<ModMat> A(r, ModMat(r, std::vector<long>(r, 0)));
    for (std::size_t l = 0; l < r; ++l) {
        int zl = T.class_rep[l];
        for (std::size_t x = 0; x < K.size(); ++x) {
            int j = K.class_of[x];
            int k = K.class_of[K.hmul(K.inv[x], zl)];
            A[j][k][l] += 1;
        }
    }

    // simultaneous eigenspaces
    std::vector<std::vector<std::vector<long>>> spaces;  // each: list of basis vectors
    {
        std::vector<std::vector<long>> id(r, std::vector<long>(r, 0));
        for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
        spaces.push_back(id);
    }
    for (std::size_t j = 1; j < r; ++j) {
        bool done = true;
        for (auto const& s : spaces) done = done && s.size() == 1;
        if (done) break;
        std::vector<std::vector<std::vector<long>>> next;
        for (auto const& W : spaces) {
            if (W.size() == 1) {
                next.push_back(W);
                continue;
            }
            // (A_j - lambda) applied to the basis of W
            ModMat AB(r, std::vector<long>(W.size(), 0));
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t b = 0; b < W.size(); ++b) {
                    long s = 0;
                    for (std::size_t l = 0; l < r; ++l) s = (s + A[j][k][l] * W[b][l]) % q;
                    AB[k][b] = s;
                }
            std::size_t found = 0;
            for (long lam = 0; lam < q && found < W.size(); ++lam) {
                ModMat M = AB;
                for (std::size_t k = 0; k < r; ++k)
                    for (std::size_t b = 0; b < W.size(); ++b)
                        M[k][b] = mod_l(M[k][b] - lam * W[b][k], q);
                auto ns = nullspace_mod(M, q);
                if (ns.empty()) continue;
                std::vector<std::vector<long>> sub;
                for (auto const& c : ns) {
                    std::vector<long> v(r, 0);
                    for (std::size_t b = 0; b < W.size(); ++b)
                        for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + c[b] * W[b][k]) % q;
                    sub.push_back(std::move(v));
                }
                found += sub.size();
                next.push_back(std::move(sub));
            }
            if (found != W.size()) throw std::logic_error("class matrix not diagonalizable mod q");
        }
        spaces = std::move(next);
    }
    for (auto const& s : spaces)
        if (s.size() != 1) throw std::logic_error("class sums do not separate characters");

    for (auto const& s : spaces) {
        std::vector<long> w = s[0];
        long iv = inverse_mod(w[0], q);
        for (auto& v : w) v = v * iv % q;
        long sum = 0;
        for (std::size_t c = 0; c < r; ++c)
            sum = (sum + w[c] * w[T.class_inv[c]] % q * inverse_mod(T.class_size[c], q)) % q;
        long d2 = mod_l(h % q * inverse_mod(sum, q), q);
        long deg = 0;
        for (long dd = 1; dd * dd <= h; ++dd)
            if (dd * dd % q == d2) {
                deg = dd;
                break;
            }
        if (deg == 0) throw std::logic_error("no degree matches in Dixon lift");
        std::vector<long> chi(r);
        for (std::size_t c = 0; c < r; ++c)
            chi[c] = w[c] * deg % q * inverse_mod(T.class_size[c], q) % q;

        Character out;
        for (std::size_t c = 0; c < r; ++c) {
            long o = T.class_order[c];
            long zo = powmod_l(z, N / o, q);
            long io = inverse_mod(o, q);
            FieldElement val = cf->zero();
            long total = 0;
            for (long s2 = 0; s2 < o; ++s2) {
                long m = 0;
                for (long t = 0; t < o; ++t) {
                    int cls = K.class_of[hpow(K, T.class_rep[c], t)];
                    m = (m + chi[cls] * powmod_l(zo, mod_l(-s2 * t, o), q)) % q;
                }
                m = m * io % q;
                if (m > deg) throw std::logic_error("eigenvalue multiplicity out of range");
                total += m;
                if (m) val = cf->add(val, cf->scale(cf->gen_pow(s2 * (N / o)), mpq_class(m)));
            }
            if (total != deg) throw std::logic_error("eigenvalue multiplicities do not sum to degree");
            out.push_back(val);
        }
        T.irr.push_back(std::move(out));
    }
    canonical_sort(T);
    return T;
}

/* Value of the Brauer lift of a matrix over a finite field of finite order dividing N. */
FieldElement brauer_lift(Field const& f, Field const& cf, Matrix const& M, long N)
{
    FieldElement omega = f.pow(f.primitive_element(), (f.size() - 1) / N);
    FieldElement val = cf.zero();
    int total = 0;
    FieldElement lam = f.one();
    for (long s = 0; s < N; ++s) {
        int mult = M.n - mat_rank(f, mat_sub(f, M, mat_scalar(f, M.n, lam)));
        if (mult) {
            total += mult;
            val = cf.add(val, cf.scale(cf.gen_pow(s), mpq_class(mult)));
        }
        lam = f.mul(lam, omega);
    }
    if (total != M.n) throw std::logic_error("matrix not diagonalizable over the base field");
    return val;
}

}  // namespace

long character_conductor(FiniteGroup const& G, Kernel const& K)
{
    Field const& f = G.field();
    long e = K.exponent();
    if (f.kind() == FieldKind::Cyclotomic) {
        long n = f.conductor();
        if (n % e != 0) {
            long s = lcm_l(n, e);
            throw SplitFieldTooSmall("l = " + f.describe() + " does not split H (exponent " +
                                         std::to_string(e) + "); use Q(zeta_" +
                                         std::to_string(s) + ")",
                                     e, s);
        }
        return n;
    }
    if ((f.size() - 1) % e != 0) {
        long s = lcm_l(f.spec().m, multiplicative_order_mod(f.characteristic(), e));
        throw SplitFieldTooSmall("l = " + f.describe() + " does not split H (exponent " +
                                     std::to_string(e) + "); use F_" +
                                     std::to_string(f.characteristic()) + "^" + std::to_string(s),
                                 e, s);
    }
    return e;
}

CharacterTable character_table(FiniteGroup const& G, Kernel const& K, TableMethod method)
{
    long N = character_conductor(G, K);
    FieldPtr cf = G.field().kind() == FieldKind::Cyclotomic ? G.field_ptr() : Field::cyclotomic(N);
    if (method == TableMethod::Auto) method = K.is_abelian() ? TableMethod::Abelian : TableMethod::Dixon;
    if (method == TableMethod::Abelian) {
        if (!K.is_abelian()) throw std::invalid_argument("abelian table requested for non-abelian H");
        return abelian_table(K, cf, N);
    }
    return dixon_table(K, cf, N);
}

long character_field_aut(FiniteGroup const& G, CharacterTable const& T, long l_aut)
{
    Field const& f = G.field();
    if (f.kind() == FieldKind::Cyclotomic) return l_aut;
    long N = T.conductor;
    if (N <= 2) return 1;
    return powmod_l(f.characteristic(), f.aut_normalize(l_aut), N);
}

Character wedge_power_of_standard(FiniteGroup const& G, Kernel const& K, CharacterTable const& T,
                                  int p)
{
    Field const& f = G.field();
    Character chi;
    for (std::size_t c = 0; c < T.num_classes(); ++c) {
        Matrix const& A = G.element(K.elems[T.class_rep[c]]).matrix;
        Matrix C = p == 1 ? A : mat_compound(f, A, p);
        if (f.kind() == FieldKind::Cyclotomic)
            chi.push_back(mat_trace(f, C));
        else
            chi.push_back(brauer_lift(f, *T.cf, C, T.conductor));
    }
    return chi;
}

Character standard_character(FiniteGroup const& G, Kernel const& K, CharacterTable const& T)
{
    return wedge_power_of_standard(G, K, T, 1);
}

Character zero_character(CharacterTable const& T)
{
    return Character(T.num_classes(), T.cf->zero());
}

Character trivial_character(CharacterTable const& T)
{
    return Character(T.num_classes(), T.cf->one());
}

Character regular_character(CharacterTable const& T)
{
    Character chi = zero_character(T);
    chi[0] = T.cf->from_int(T.order);
    return chi;
}

Character tensor_char(CharacterTable const& T, Character const& a, Character const& b)
{
    Character r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = T.cf->mul(a[i], b[i]);
    return r;
}

Character add_char(CharacterTable const& T, Character const& a, Character const& b)
{
    Character r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = T.cf->add(a[i], b[i]);
    return r;
}

Character scale_char(CharacterTable const& T, Character const& a, long k)
{
    Character r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = T.cf->scale(a[i], mpq_class(k));
    return r;
}

Character dual_char(CharacterTable const& T, Character const& a)
{
    Character r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[T.class_inv[i]];
    return r;
}

mpq_class inner_product_value(CharacterTable const& T, Character const& a, Character const& b)
{
    Field const& cf = *T.cf;
    FieldElement s = cf.zero();
    for (std::size_t c = 0; c < T.num_classes(); ++c) {
        FieldElement term = cf.mul(a[c], b[T.class_inv[c]]);
        s = cf.add(s, cf.scale(term, mpq_class(T.class_size[c])));
    }
    auto v = cf.rational_value(s);
    if (!v) throw NonIntegralMultiplicity("inner product is not rational");
    return *v / T.order;
}

long inner_product(CharacterTable const& T, Character const& a, Character const& b)
{
    mpq_class v = inner_product_value(T, a, b);
    if (v.get_den() != 1 || v < 0)
        throw NonIntegralMultiplicity("inner product " + v.get_str() + " is not a nonnegative integer");
    return v.get_num().get_si();
}

std::vector<long> decompose(CharacterTable const& T, Character const& chi)
{
    std::vector<long> m(T.size());
    Character rebuilt = zero_character(T);
    for (std::size_t i = 0; i < T.size(); ++i) {
        m[i] = inner_product(T, chi, T.irr[i]);
        if (m[i]) rebuilt = add_char(T, rebuilt, scale_char(T, T.irr[i], m[i]));
    }
    if (rebuilt != chi) throw NonIntegralMultiplicity("character is not a combination of irreducibles");
    return m;
}

int irreducible_index(CharacterTable const& T, Character const& chi)
{
    for (std::size_t i = 0; i < T.size(); ++i)
        if (T.irr[i] == chi) return (int)i;
    return -1;
}

Character galois_twist(FiniteGroup const& G, Kernel const& K, CharacterTable const& T,
                       Character const& chi, int g)
{
    long a = character_field_aut(G, T, G.element(g).aut);
    int gi = G.inv(g);
    Character r(chi.size());
    for (std::size_t c = 0; c < T.num_classes(); ++c) {
        int h = K.elems[T.class_rep[c]];
        int conj = G.mul(G.mul(gi, h), g);
        int cls = K.class_of[K.local[conj]];
        r[c] = T.cf->apply_aut(a, chi[cls]);
    }
    return r;
}

std::vector<std::string> character_strings(CharacterTable const& T, Character const& chi)
{
    std::vector<std::string> out;
    for (auto const& v : chi) out.push_back(T.cf->to_string(v));
    return out;
}

}  // namespace mckayq
