#include "mckayq/arquiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace mckayq {

std::vector<Arrow> ValuedQuiver::arrows() const
{
    std::vector<Arrow> out;
    for (std::size_t x = 0; x < size(); ++x)
        for (std::size_t y = 0; y < size(); ++y) {
            auto [d, dp] = val[x][y];
            if (d != 0 || dp != 0) out.push_back({(int)x, (int)y, d, dp});
        }
    return out;
}

bool ValuedQuiver::nu_is_identity() const
{
    for (std::size_t i = 0; i < nu.size(); ++i)
        if (nu[i] != (int)i) return false;
    return true;
}

namespace {

int det_twist_index(CharacterTable const& T, Character const& det, int w)
{
    int r = irreducible_index(T, tensor_char(T, det, T.irr[w]));
    if (r < 0) throw std::logic_error("det (x) W is not irreducible");
    return r;
}

}  // namespace

ValuedQuiver mckay_H(FiniteGroup const& G, Kernel const& K, CharacterTable const& T)
{
    int d = G.d();
    std::size_t r = T.size();
    Character u = standard_character(G, K, T);
    Character det = wedge_power_of_standard(G, K, T, d);
    Character det_inv = dual_char(T, det);
    Character wedge = wedge_power_of_standard(G, K, T, d - 1);

    ValuedQuiver q;
    q.val.assign(r, std::vector<std::pair<long, long>>(r, {0, 0}));
    for (std::size_t y = 0; y < r; ++y) {
        auto m = decompose(T, tensor_char(T, u, T.irr[y]));
        for (std::size_t x = 0; x < r; ++x) q.val[x][y].first = m[x];
    }
    for (std::size_t x = 0; x < r; ++x) {
        int w2 = det_twist_index(T, det_inv, (int)x);
        auto m = decompose(T, tensor_char(T, wedge, T.irr[w2]));
        for (std::size_t y = 0; y < r; ++y) q.val[x][y].second = m[y];
    }
    int triv = irreducible_index(T, trivial_character(T));
    for (std::size_t x = 0; x < r; ++x) {
        QuiverVertex v;
        v.label = "W" + std::to_string(x);
        v.rank = T.degree(x);
        v.is_r = v.is_projective = (int)x == triv;
        q.vertices.push_back(v);
        q.nu.push_back(det_twist_index(T, det, (int)x));
    }
    q.r = triv;
    q.omega = q.nu[triv];
    q.vertices[q.omega].is_omega = true;
    return q;
}

std::vector<int> nakayama(FiniteGroup const& G, Kernel const& K, CharacterTable const& T,
                          SkewData const& S)
{
    Character det = wedge_power_of_standard(G, K, T, G.d());
    std::vector<int> nu;
    for (auto const& o : S.orbits) nu.push_back(S.orbit_of[det_twist_index(T, det, o.members[0])]);
    std::vector<int> seen(nu.size(), 0);
    for (int v : nu)
        if (seen[v]++) throw std::logic_error("Nakayama map is not a bijection");
    return nu;
}

ValuedQuiver mckay_G(FiniteGroup const& G, Kernel const& K, CharacterTable const& T,
                     SkewData const& S, ValuedQuiver const& qH)
{
    std::size_t n = S.orbits.size();
    ValuedQuiver q;
    q.val.assign(n, std::vector<std::pair<long, long>>(n, {0, 0}));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            auto const& oi = S.orbits[i];
            auto const& ok = S.orbits[k];
            if (!oi.solved() || !ok.solved())
                throw ValuationNonIntegral("orbit multiplicities are unresolved");
            // d: fixed source member, summed over target members
            long s = -1;
            for (int wj : oi.members) {
                long sj = 0;
                for (int wk : ok.members) sj += qH.val[wj][wk].first;
                if (s >= 0 && sj != s) throw std::logic_error("d_H orbit sum depends on the member");
                s = sj;
            }
            // d': fixed target member, summed over source members
            long sp = -1;
            for (int wk : ok.members) {
                long sk = 0;
                for (int wj : oi.members) sk += qH.val[wj][wk].second;
                if (sp >= 0 && sk != sp) throw std::logic_error("d'_H orbit sum depends on the member");
                sp = sk;
            }
            if ((ok.a * s) % oi.a != 0 || (oi.a * sp) % ok.a != 0)
                throw ValuationNonIntegral("valuation between " + oi.label + " and " + ok.label +
                                           " is not integral");
            q.val[i][k] = {ok.a * s / oi.a, oi.a * sp / ok.a};
        }
    q.r = S.orbit_of[irreducible_index(T, trivial_character(T))];
    q.nu = nakayama(G, K, T, S);
    q.omega = q.nu[q.r];
    for (std::size_t i = 0; i < n; ++i) {
        QuiverVertex v;
        v.label = S.orbits[i].label;
        v.rank = S.orbits[i].rank();
        v.is_r = v.is_projective = (int)i == q.r;
        v.is_omega = (int)i == q.omega;
        q.vertices.push_back(v);
    }
    for (std::size_t i = 0; i < n; ++i) {
        bool any = false;
        for (std::size_t k = 0; k < n; ++k) {
            any = any || q.val[i][k] != std::pair<long, long>{0, 0};
            any = any || q.val[k][i] != std::pair<long, long>{0, 0};
        }
        if (!any) throw std::logic_error("vertex " + q.vertices[i].label + " has no arrows");
    }
    return q;
}

void cross_check_valuations(FiniteGroup const& G, Kernel const& K, CharacterTable const& T,
                            SkewData const& S, ValuedQuiver const& q)
{
    int d = G.d();
    Character u = standard_character(G, K, T);
    Character det_inv = dual_char(T, wedge_power_of_standard(G, K, T, d));
    Character wedge = wedge_power_of_standard(G, K, T, d - 1);
    std::size_t n = S.orbits.size();
    for (std::size_t k = 0; k < n; ++k) {
        auto m = gmodule_multiplicities(S, T, tensor_char(T, u, restriction_character(S, T, (int)k)));
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] != q.val[i][k].first)
                throw ValuationMismatch("d(" + q.vertices[i].label + "," + q.vertices[k].label +
                                        ") disagrees with the G-module computation");
    }
    for (std::size_t i = 0; i < n; ++i) {
        Character x = tensor_char(T, wedge, tensor_char(T, det_inv, restriction_character(S, T, (int)i)));
        auto m = gmodule_multiplicities(S, T, x);
        for (std::size_t k = 0; k < n; ++k)
            if (m[k] != q.val[i][k].second)
                throw ValuationMismatch("d'(" + q.vertices[i].label + "," + q.vertices[k].label +
                                        ") disagrees with the G-module computation");
    }
}

std::vector<AlmostSplitSequence> almost_split_sequences(FiniteGroup const& G, Kernel const& K,
                                                        CharacterTable const& T,
                                                        SkewData const& S)
{
    int d = G.d();
    std::vector<Character> wedges;
    for (int p = 0; p <= d; ++p)
        wedges.push_back(p == 0 ? trivial_character(T) : wedge_power_of_standard(G, K, T, p));
    std::vector<int> nu = nakayama(G, K, T, S);
    int triv = S.orbit_of[irreducible_index(T, trivial_character(T))];
    std::vector<AlmostSplitSequence> out;
    for (std::size_t i = 0; i < S.orbits.size(); ++i) {
        AlmostSplitSequence s;
        s.target = (int)i;
        s.fundamental = (int)i == triv;
        Character res = restriction_character(S, T, (int)i);
        for (int p = 0; p <= d; ++p)
            s.terms.push_back(gmodule_multiplicities(S, T, tensor_char(T, wedges[p], res)));
        for (std::size_t x = 0; x < S.orbits.size(); ++x) {
            if (s.terms[0][x] != (x == i ? 1 : 0))
                throw std::logic_error("sequence does not end at its target");
            if (s.terms[d][x] != ((int)x == nu[i] ? 1 : 0))
                throw std::logic_error("sequence does not start at nu of its target");
        }
        out.push_back(std::move(s));
    }
    return out;
}

long alternating_rank_sum(SkewData const& S, AlmostSplitSequence const& s)
{
    long total = 0;
    for (std::size_t p = 0; p < s.terms.size(); ++p) {
        long r = 0;
        for (std::size_t x = 0; x < s.terms[p].size(); ++x) r += s.terms[p][x] * S.orbits[x].rank();
        total += p % 2 ? -r : r;
    }
    return total;
}

std::string term_string(ValuedQuiver const& q, std::vector<long> const& mult)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t x = 0; x < mult.size(); ++x) {
        if (mult[x] == 0) continue;
        os << (first ? "" : " + ") << q.vertices[x].label;
        if (mult[x] > 1) os << "^" << mult[x];
        first = false;
    }
    return first ? "0" : os.str();
}

std::string sequence_string(ValuedQuiver const& q, AlmostSplitSequence const& s)
{
    std::ostringstream os;
    for (std::size_t p = s.terms.size(); p-- > 0;) {
        os << term_string(q, s.terms[p]);
        if (p) os << " -> ";
    }
    return os.str();
}

// ---- extended Dynkin recognition ----

namespace {

struct Template {
    std::string family;
    int n = 0;
    int size = 0;
    std::map<std::pair<int, int>, std::pair<long, long>> val;

    void edge(int x, int y, long a = 1, long b = 1)
    {
        val[{x, y}] = {a, b};
        val[{y, x}] = {b, a};
    }
    void loop(int x, long a, long b) { val[{x, x}] = {a, b}; }
    std::pair<long, long> at(int x, int y) const
    {
        auto it = val.find({x, y});
        return it == val.end() ? std::pair<long, long>{0, 0} : it->second;
    }
};

Template make(std::string family, int n, int size)
{
    Template t;
    t.family = std::move(family);
    t.n = n;
    t.size = size;
    return t;
}

/* path 0..n with middle edges (1,1) */
Template path(std::string family, int n, std::pair<long, long> first, std::pair<long, long> last)
{
    Template t = make(std::move(family), n, n + 1);
    for (int i = 0; i < n; ++i) t.edge(i, i + 1);
    t.edge(0, 1, first.first, first.second);
    t.edge(n - 1, n, last.first, last.second);
    return t;
}

/* R (0) and o (1) on b_1; path b_1..b_k; then the tail */
Template fork_start(std::string family, int n, int k, int size)
{
    Template t = make(std::move(family), n, size);
    t.edge(0, 2);
    t.edge(1, 2);
    for (int i = 0; i + 1 < k; ++i) t.edge(2 + i, 3 + i);
    return t;
}

/* star with arms of the given lengths; R at the end of the first arm */
Template star(std::string family, std::vector<int> arms)
{
    int size = 1;
    for (int a : arms) size += a;
    Template t = make(std::move(family), 0, size);
    // R = 0 .. arm0 end, center last index
    int center = size - 1;
    int next = 0;
    for (int a : arms) {
        int prev = center;
        std::vector<int> ids;
        for (int i = 0; i < a; ++i) ids.push_back(next++);
        // arm listed from the end towards the center
        for (int i = a - 1; i >= 0; --i) {
            t.edge(prev, ids[i]);
            prev = ids[i];
        }
    }
    return t;
}

std::vector<Template> templates_for(int v)
{
    std::vector<Template> out;
    if (v == 1) {
        Template t = make("A0~", 0, 1);
        t.loop(0, 2, 2);
        out.push_back(t);
    }
    if (v == 2) {
        Template a = make("A11~", 0, 2);
        a.edge(0, 1, 4, 1);
        out.push_back(a);
        Template b = make("A12~", 0, 2);
        b.edge(0, 1, 2, 2);
        out.push_back(b);
    }
    int n = v - 1;
    if (n >= 2) {
        Template t = make("An~", n, v);
        for (int i = 0; i < v; ++i) t.edge(i, (i + 1) % v);
        out.push_back(t);
        out.push_back(path("Cn~", n, {2, 1}, {1, 2}));
        out.push_back(path("BCn~", n, {2, 1}, {2, 1}));
        out.push_back(path("Bn~", n, {1, 2}, {2, 1}));
    }
    if (n >= 1) {
        Template t = make("CLn~", n, v);
        for (int i = 0; i < n; ++i) t.edge(i, i + 1);
        t.edge(0, 1, 2, 1);
        t.loop(n, 1, 1);
        out.push_back(t);
    }
    if (n >= 3) {
        int k = n - 2;
        Template bd = fork_start("BDn~", n, k, v);
        bd.edge(1 + k, 2 + k, 2, 1);
        out.push_back(bd);
        Template cd = fork_start("CDn~", n, k, v);
        cd.edge(1 + k, 2 + k, 1, 2);
        out.push_back(cd);
    }
    if (n >= 4) {
        int k = n - 3;
        Template t = fork_start("Dn~", n, k, v);
        t.edge(1 + k, 2 + k);
        t.edge(1 + k, 3 + k);
        out.push_back(t);
    }
    if (v == 7) out.push_back(star("E6~", {2, 2, 2}));
    if (v == 8) out.push_back(star("E7~", {3, 3, 1}));
    if (v == 9) out.push_back(star("E8~", {5, 2, 1}));
    if (v == 5) {
        for (auto [name, a, b] : {std::tuple{"F42~", 2L, 1L}, std::tuple{"F41~", 1L, 2L}}) {
            Template t = make(name, 0, 5);
            t.edge(0, 1);
            t.edge(1, 2);
            t.edge(2, 3, a, b);
            t.edge(3, 4);
            out.push_back(t);
        }
    }
    if (v == 3) {
        for (auto [name, a, b] : {std::tuple{"G22~", 3L, 1L}, std::tuple{"G21~", 1L, 3L}}) {
            Template t = make(name, 0, 3);
            t.edge(0, 1);
            t.edge(1, 2, a, b);
            out.push_back(t);
        }
    }
    return out;
}

bool matches(ValuedQuiver const& q, Template const& t)
{
    int n = (int)q.size();
    if (t.size != n) return false;
    std::vector<int> map(n, -1), used(n, 0);
    map[0] = q.r;
    used[q.r] = 1;
    auto ok_upto = [&](int k) {
        for (int x = 0; x <= k; ++x) {
            if (t.at(x, k) != q.val[map[x]][map[k]]) return false;
            if (t.at(k, x) != q.val[map[k]][map[x]]) return false;
        }
        return true;
    };
    std::function<bool(int)> rec = [&](int k) {
        if (k == n) return true;
        for (int c = 0; c < n; ++c) {
            if (used[c]) continue;
            map[k] = c;
            used[c] = 1;
            if (ok_upto(k) && rec(k + 1)) return true;
            used[c] = 0;
        }
        map[k] = -1;
        return false;
    };
    return ok_upto(0) && rec(1);
}

}  // namespace

std::string DynkinType::name() const
{
    if (family == "unknown") return family;
    if (family.find('n') == std::string::npos) return family;
    return family + "(" + std::to_string(n) + ")";
}

std::vector<std::string> dynkin_families()
{
    return {"A0~", "A11~", "A12~", "An~",  "Cn~",  "BCn~", "BDn~", "Dn~", "E6~",
            "E7~", "E8~",  "F42~", "G22~", "CLn~", "Bn~",  "CDn~", "F41~", "G21~"};
}

DynkinType recognize_type(ValuedQuiver const& q, int d, bool gorenstein)
{
    DynkinType out;
    if (d != 2) {
        out.reason = "only two-dimensional quivers are classified";
        return out;
    }
    if (!gorenstein) {
        out.reason = "only Gorenstein quivers are classified";
        return out;
    }
    std::vector<Template> hits;
    for (auto const& t : templates_for((int)q.size()))
        if (matches(q, t)) hits.push_back(t);
    if (hits.empty()) {
        out.reason = "no extended Dynkin template matches";
        return out;
    }
    if (hits.size() > 1) {
        out.reason = "several templates match";
        return out;
    }
    out.family = hits[0].family;
    out.n = hits[0].n;
    return out;
}

std::string emit_dot(ValuedQuiver const& q, bool show_nu)
{
    std::ostringstream os;
    os << "digraph mckay {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < q.size(); ++i) {
        auto const& v = q.vertices[i];
        os << "  v" << i << " [label=\"" << v.label << "\"";
        if (v.is_r) os << ", shape=doublecircle";
        if (v.is_omega) os << ", xlabel=\"omega\"";
        os << "];\n";
    }
    for (auto const& a : q.arrows()) {
        os << "  v" << a.src << " -> v" << a.dst;
        if (a.d != 1 || a.dp != 1) os << " [label=\"(" << a.d << "," << a.dp << ")\"]";
        os << ";\n";
    }
    if (show_nu || !q.nu_is_identity())
        for (std::size_t i = 0; i < q.size(); ++i)
            if (!q.vertices[i].is_projective)
                os << "  v" << i << " -> v" << q.nu[i] << " [style=dashed];\n";
    os << "}\n";
    return os.str();
}

}  // namespace mckayq
