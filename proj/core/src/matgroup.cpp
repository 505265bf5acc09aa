#include "mckayq/matgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace mckayq {

Matrix mat_identity(Field const& f, int n)
{
    return mat_scalar(f, n, f.one());
}

Matrix mat_scalar(Field const& f, int n, FieldElement const& x)
{
    Matrix m{n, std::vector<FieldElement>(std::size_t(n) * n, f.zero())};
    for (int i = 0; i < n; ++i) m(i, i) = x;
    return m;
}

Matrix mat_mul(Field const& f, Matrix const& a, Matrix const& b)
{
    int n = a.n;
    Matrix r{n, std::vector<FieldElement>(std::size_t(n) * n, f.zero())};
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (f.is_zero(a(i, k))) continue;
            for (int j = 0; j < n; ++j) {
                if (f.is_zero(b(k, j))) continue;
                r(i, j) = f.add(r(i, j), f.mul(a(i, k), b(k, j)));
            }
        }
    return r;
}

Matrix mat_sub(Field const& f, Matrix const& a, Matrix const& b)
{
    Matrix r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = f.sub(a.e[i], b.e[i]);
    return r;
}

Matrix mat_apply_aut(Field const& f, long a, Matrix const& m)
{
    if (f.aut_normalize(a) == f.aut_identity()) return m;
    Matrix r = m;
    for (auto& x : r.e) x = f.apply_aut(a, x);
    return r;
}

namespace {

/* Row echelon form in place; returns rank and the determinant sign/scale. */
int eliminate(Field const& f, Matrix& m, FieldElement* det)
{
    int n = m.n, rank = 0;
    if (det) *det = f.one();
    for (int c = 0; c < n && rank < n; ++c) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (!f.is_zero(m(r, c))) {
                piv = r;
                break;
            }
        if (piv < 0) {
            if (det) *det = f.zero();
            continue;
        }
        if (piv != rank) {
            for (int k = 0; k < n; ++k) std::swap(m(piv, k), m(rank, k));
            if (det) *det = f.neg(*det);
        }
        FieldElement p = m(rank, c);
        if (det) *det = f.mul(*det, p);
        FieldElement ip = f.inv(p);
        for (int r = rank + 1; r < n; ++r) {
            if (f.is_zero(m(r, c))) continue;
            FieldElement factor = f.mul(m(r, c), ip);
            for (int k = c; k < n; ++k) m(r, k) = f.sub(m(r, k), f.mul(factor, m(rank, k)));
        }
        ++rank;
    }
    if (det && rank < n) *det = f.zero();
    return rank;
}

}  // namespace

int mat_rank(Field const& f, Matrix m)
{
    return eliminate(f, m, nullptr);
}

FieldElement mat_det(Field const& f, Matrix const& m)
{
    Matrix w = m;
    FieldElement d;
    eliminate(f, w, &d);
    return d;
}

FieldElement mat_trace(Field const& f, Matrix const& m)
{
    FieldElement t = f.zero();
    for (int i = 0; i < m.n; ++i) t = f.add(t, m(i, i));
    return t;
}

Matrix mat_inverse(Field const& f, Matrix const& m)
{
    int n = m.n;
    Matrix a = m, r = mat_identity(f, n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!f.is_zero(a(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) throw GroupError("singular matrix");
        for (int k = 0; k < n; ++k) {
            std::swap(a(piv, k), a(c, k));
            std::swap(r(piv, k), r(c, k));
        }
        FieldElement ip = f.inv(a(c, c));
        for (int k = 0; k < n; ++k) {
            a(c, k) = f.mul(a(c, k), ip);
            r(c, k) = f.mul(r(c, k), ip);
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || f.is_zero(a(i, c))) continue;
            FieldElement factor = a(i, c);
            for (int k = 0; k < n; ++k) {
                a(i, k) = f.sub(a(i, k), f.mul(factor, a(c, k)));
                r(i, k) = f.sub(r(i, k), f.mul(factor, r(c, k)));
            }
        }
    }
    return r;
}

namespace {

void subsets(int n, int p, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if ((int)cur.size() == p) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, p, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Matrix mat_compound(Field const& f, Matrix const& m, int p)
{
    std::vector<std::vector<int>> idx;
    std::vector<int> cur;
    subsets(m.n, p, 0, cur, idx);
    int s = (int)idx.size();
    Matrix r{s, std::vector<FieldElement>(std::size_t(s) * s, f.zero())};
    if (p == 0) {
        r(0, 0) = f.one();
        return r;
    }
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) {
            Matrix minor{p, {}};
            minor.e.reserve(std::size_t(p) * p);
            for (int i : idx[a])
                for (int j : idx[b]) minor.e.push_back(m(i, j));
            r(a, b) = mat_det(f, minor);
        }
    return r;
}

std::string mat_to_string(Field const& f, Matrix const& m)
{
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < m.n; ++i) {
        out << (i ? ", [" : "[");
        for (int j = 0; j < m.n; ++j) out << (j ? ", " : "") << f.to_string(m(i, j));
        out << "]";
    }
    out << "]";
    return out.str();
}

std::string FiniteGroup::key(GroupElement const& g) const
{
    std::string s = std::to_string(g.aut) + "|";
    for (auto const& x : g.matrix.e) {
        s += field_->key(x);
        s += ';';
    }
    return s;
}

GroupElement FiniteGroup::multiply(GroupElement const& x, GroupElement const& y) const
{
    Field const& f = *field_;
    return {mat_mul(f, x.matrix, mat_apply_aut(f, x.aut, y.matrix)), f.aut_compose(x.aut, y.aut)};
}

FiniteGroup FiniteGroup::generate(FieldPtr field, int d, std::vector<GroupElement> const& gens,
                                  std::size_t cap)
{
    Field const& f = *field;
    FiniteGroup G;
    G.field_ = field;
    G.d_ = d;
    std::vector<GroupElement> gs;
    for (auto const& g : gens) {
        if (g.matrix.n != d) throw GroupError("generator matrix has wrong size");
        if (!f.valid_aut(g.aut)) throw InvalidAutomorphism(g.aut);
        if (f.is_zero(mat_det(f, g.matrix))) throw GroupError("generator matrix is singular");
        gs.push_back({g.matrix, f.aut_normalize(g.aut)});
    }
    std::size_t ng = gs.size();
    G.right_.assign(ng, {});
    G.elems_.push_back({mat_identity(f, d), f.aut_identity()});
    G.word_.push_back({});
    G.index_.emplace(G.key(G.elems_[0]), 0);
    for (std::size_t x = 0; x < G.elems_.size(); ++x) {
        for (std::size_t g = 0; g < ng; ++g) {
            GroupElement y = G.multiply(G.elems_[x], gs[g]);
            std::string k = G.key(y);
            auto it = G.index_.find(k);
            int yi;
            if (it == G.index_.end()) {
                if (G.elems_.size() >= cap) throw CapExceeded(cap);
                yi = (int)G.elems_.size();
                G.index_.emplace(std::move(k), yi);
                G.elems_.push_back(std::move(y));
                auto w = G.word_[x];
                w.push_back((int)g);
                G.word_.push_back(std::move(w));
            } else {
                yi = it->second;
            }
            if (G.right_[g].size() <= x) G.right_[g].resize(x + 1, -1);
            G.right_[g][x] = yi;
        }
    }
    std::size_t n = G.elems_.size();
    if (f.kind() == FieldKind::Finite && n % f.characteristic() == 0)
        throw CharDividesOrder(f.characteristic(), n);
    G.right_inv_.assign(ng, std::vector<int>(n, -1));
    for (std::size_t g = 0; g < ng; ++g) {
        G.right_[g].resize(n, -1);
        for (std::size_t x = 0; x < n; ++x) G.right_inv_[g][G.right_[g][x]] = (int)x;
    }
    for (std::size_t g = 0; g < ng; ++g) G.gen_idx_.push_back(G.right_[g][0]);
    G.inv_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int x = 0;
        auto const& w = G.word_[i];
        for (auto it = w.rbegin(); it != w.rend(); ++it) x = G.right_inv_[*it][x];
        G.inv_[i] = x;
    }
    if (n <= 2048) {
        G.table_.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                int x = (int)i;
                for (int g : G.word_[j]) x = G.right_[g][x];
                G.table_[i * n + j] = x;
            }
    }
    return G;
}

int FiniteGroup::mul(int i, int j) const
{
    if (!table_.empty()) return table_[std::size_t(i) * elems_.size() + j];
    int x = i;
    for (int g : word_[j]) x = right_[g][x];
    return x;
}

int FiniteGroup::inv(int i) const
{
    return inv_[i];
}

int FiniteGroup::pow(int i, long e) const
{
    if (e < 0) {
        i = inv(i);
        e = -e;
    }
    int r = 0, b = i;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

int FiniteGroup::order(int i) const
{
    int o = 1, x = i;
    while (x != 0) {
        x = mul(x, i);
        ++o;
    }
    return o;
}

int FiniteGroup::index_of(GroupElement const& g) const
{
    auto it = index_.find(key(g));
    return it == index_.end() ? -1 : it->second;
}

long Kernel::exponent() const
{
    long e = 1;
    for (int o : order) e = lcm_l(e, o);
    return e;
}

bool Kernel::is_abelian() const
{
    std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (hmul((int)a, (int)b) != hmul((int)b, (int)a)) return false;
    return true;
}

Kernel kernel_and_cosets(FiniteGroup const& G, std::vector<long> const& galois_gens)
{
    Field const& f = G.field();
    Kernel K;
    K.galois = f.aut_group(galois_gens);
    std::map<long, int> first;
    std::size_t n = G.size();
    K.local.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        long a = G.element((int)i).aut;
        first.emplace(a, (int)i);
        if (a == f.aut_identity()) {
            K.local[i] = (int)K.elems.size();
            K.elems.push_back((int)i);
        }
    }
    std::vector<long> image;
    for (auto const& [a, idx] : first) image.push_back(a);
    if (image != K.galois) {
        std::ostringstream msg;
        msg << "image of G in Gal(l/k) is {";
        for (std::size_t i = 0; i < image.size(); ++i) msg << (i ? "," : "") << image[i];
        msg << "} but the declared Galois group is {";
        for (std::size_t i = 0; i < K.galois.size(); ++i) msg << (i ? "," : "") << K.galois[i];
        msg << "}; k is not the fixed field of G";
        throw NotSurjectiveOntoGalois(msg.str());
    }
    for (auto const& [a, idx] : first) K.cosets.push_back(idx);
    std::sort(K.cosets.begin(), K.cosets.end());
    for (int c : K.cosets) K.coset_auts.push_back(G.element(c).aut);

    std::size_t h = K.elems.size();
    K.mul.assign(h * h, 0);
    for (std::size_t a = 0; a < h; ++a)
        for (std::size_t b = 0; b < h; ++b) K.mul[a * h + b] = K.local[G.mul(K.elems[a], K.elems[b])];
    K.inv.assign(h, 0);
    K.order.assign(h, 1);
    for (std::size_t a = 0; a < h; ++a) {
        K.inv[a] = K.local[G.inv(K.elems[a])];
        K.order[a] = G.order(K.elems[a]);
    }
    K.class_of.assign(h, -1);
    for (std::size_t a = 0; a < h; ++a) {
        if (K.class_of[a] >= 0) continue;
        int c = (int)K.classes.size();
        std::vector<int> cls;
        for (std::size_t x = 0; x < h; ++x) {
            int y = K.hmul(K.hmul(K.inv[x], (int)a), (int)x);
            if (K.class_of[y] < 0) {
                K.class_of[y] = c;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        K.classes.push_back(std::move(cls));
    }
    return K;
}

bool is_pseudo_reflection(Field const& f, Matrix const& a)
{
    return mat_rank(f, mat_sub(f, a, mat_identity(f, a.n))) <= 1;
}

int find_pseudo_reflection(FiniteGroup const& G, Kernel const& K)
{
    for (std::size_t i = 1; i < K.size(); ++i)
        if (is_pseudo_reflection(G.field(), G.element(K.elems[i]).matrix)) return (int)i;
    return -1;
}

bool is_small(FiniteGroup const& G, Kernel const& K)
{
    return find_pseudo_reflection(G, K) < 0;
}

bool gorenstein_flag(FiniteGroup const& G, Kernel const& K)
{
    Field const& f = G.field();
    for (int e : K.elems)
        if (!f.is_one(mat_det(f, G.element(e).matrix))) return false;
    return true;
}

bool isolated_flag(FiniteGroup const& G, Kernel const& K)
{
    Field const& f = G.field();
    for (std::size_t i = 1; i < K.size(); ++i) {
        Matrix const& a = G.element(K.elems[i]).matrix;
        if (f.is_zero(mat_det(f, mat_sub(f, a, mat_identity(f, a.n))))) return false;
    }
    return true;
}

}  // namespace mckayq
