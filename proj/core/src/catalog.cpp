#include "mckayq/catalog.hpp"

#include <numeric>

namespace mckayq {

namespace {

using Rows = std::vector<std::vector<std::string>>;

/* zeta_n^k as an expression in z */
std::string zp(long k, long n)
{
    k = mod_l(k, n);
    if (k == 0) return "1";
    if (k == 1) return "z";
    return "z^" + std::to_string(k);
}

std::string tp(long k)
{
    if (k == 0) return "1";
    if (k == 1) return "t";
    return "t^" + std::to_string(k);
}

Rows diag(std::vector<std::string> const& d)
{
    Rows m(d.size(), std::vector<std::string>(d.size(), "0"));
    for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
    return m;
}

Rows identity(int d)
{
    return diag(std::vector<std::string>(d, "1"));
}

JobSpec cyclotomic_job(std::string name, long n, std::vector<long> galois, int d)
{
    JobSpec j;
    j.name = std::move(name);
    j.field.kind = FieldKind::Cyclotomic;
    j.field.n = n;
    j.galois = std::move(galois);
    j.d = d;
    return j;
}

void gen(JobSpec& j, std::string name, Rows m, long aut = -1)
{
    j.generators.push_back({std::move(name), std::move(m), aut});
}

std::string cname(long n)
{
    return "C" + std::to_string(n);
}

/* Klein's generators for the binary polyhedral and cyclic subgroups of SL_2. */
struct Klein {
    long n;  // conductor of l
    std::vector<std::pair<std::string, Rows>> gens;
};

Klein klein_a(int n)
{
    long N = std::max(n + 1, 2);
    if (n + 1 == 2) N = 4;  // carry i so that [l:k] = 2 is available
    long m = n + 1;
    return {N, {{"alpha", diag({zp(N / m, N), zp(-N / m, N)})}}};
}

Klein klein_d(int n)
{
    long m = 2 * n - 4;
    long N = lcm_l(m, 4);
    std::string i = zp(N / 4, N);
    return {N,
            {{"alpha", diag({zp(N / m, N), zp(-N / m, N)})}, {"beta", Rows{{"0", i}, {i, "0"}}}}};
}

Klein klein_e6()
{
    long N = 24;
    std::string s2 = "(z^3 + z^21)";
    return {N,
            {{"alpha", diag({"z^6", "z^18"})},
             {"beta", Rows{{"0", "z^6"}, {"z^6", "0"}}},
             {"gamma", Rows{{"z^3/" + s2, "z^9/" + s2}, {"z^3/" + s2, "z^21/" + s2}}}}};
}

Klein klein_e7()
{
    Klein k = klein_e6();
    k.gens.push_back({"delta", diag({"z^9", "z^15"})});
    return k;
}

Klein klein_e8()
{
    // zeta_5 = z^12 in Q(zeta_60); sqrt5 = zeta5 + zeta5^4 - zeta5^2 - zeta5^3
    std::string s5 = "(z^12 + z^48 - z^24 - z^36)";
    auto q = [&](std::string const& e) { return "(" + e + ")/" + s5; };
    return {60,
            {{"alpha", Rows{{q("z^48 - z^12"), q("z^24 - z^36")}, {q("z^24 - z^36"), q("z^12 - z^48")}}},
             {"beta", Rows{{q("z^24 - z^48"), q("z^48 - 1")}, {q("1 - z^12"), q("z^36 - z^12")}}}}};
}

std::vector<CatalogEntry> build()
{
    std::vector<CatalogEntry> out;

    for (int n = 1; n <= 4; ++n) {
        long N = 2 * n + 1;
        JobSpec j = cyclotomic_job("typeCL-n" + std::to_string(n), N, {N - 1}, 2);
        gen(j, "alpha", diag({zp(1, N), zp(-1, N)}));
        gen(j, "beta", Rows{{"0", "1"}, {"1", "0"}}, N - 1);
        ExpectedFragment e;
        e.dynkin = "CLn~(" + std::to_string(n) + ")";
        e.class_group = "1";
        e.gorenstein = true;
        e.vertices = n + 1;
        e.group_order = 2 * N;
        e.kernel_order = N;
        out.push_back({j.name, "C~L_n over Q(zeta_" + std::to_string(N) + ") over its real subfield", j, e});
    }
    for (int n = 2; n <= 4; ++n) {
        long N = 2 * n;
        JobSpec j = cyclotomic_job("typeC-n" + std::to_string(n), N, {N - 1}, 2);
        gen(j, "alpha", diag({zp(1, N), zp(-1, N)}));
        gen(j, "beta", Rows{{"0", "1"}, {"1", "0"}}, N - 1);
        ExpectedFragment e;
        e.dynkin = "Cn~(" + std::to_string(n) + ")";
        e.class_group = "C2";
        e.gorenstein = true;
        e.vertices = n + 1;
        e.group_order = 2 * N;
        e.kernel_order = N;
        out.push_back({j.name, "C~_n over Q(zeta_" + std::to_string(N) + ") over its real subfield", j, e});
    }
    for (int n = 1; n <= 4; ++n) {
        // 2n = 2^e N with N odd; beta carries zeta_{2^e}
        long two_e = 1;
        while ((2 * n) % (two_e * 2) == 0) two_e *= 2;
        long L = n == 1 ? 4 : 2 * n;
        JobSpec j = cyclotomic_job("typeBC-n" + std::to_string(n), L, {L - 1}, 2);
        gen(j, "alpha", diag({zp(L / (2 * n), L), zp(-L / (2 * n), L)}));
        gen(j, "beta", Rows{{"0", zp(L / two_e, L)}, {"1", "0"}}, L - 1);
        ExpectedFragment e;
        e.dynkin = n == 1 ? "A11~" : "BCn~(" + std::to_string(n) + ")";
        e.class_group = "1";
        e.gorenstein = true;
        e.vertices = n + 1;
        e.kernel_order = 2 * n;
        out.push_back({j.name, "A~11 / B~C_n, -1 is not a norm from l", j, e});
    }
    {
        // F_{5^6} over F_{5^2}: zeta_24 = t^651, i = zeta^6, sqrt2 = zeta^3 + zeta^21
        JobSpec j;
        j.name = "typeG22";
        j.field.kind = FieldKind::Finite;
        j.field.p = 5;
        j.field.m = 6;
        j.galois = {2};
        j.d = 2;
        std::string i = tp(6 * 651);
        std::string s2 = "(" + tp(3 * 651) + " + " + tp(21 * 651) + ")";
        gen(j, "alpha", diag({i, "-" + i}));
        gen(j, "beta", Rows{{"0", "1"}, {"-1", "0"}});
        gen(j, "gamma",
            Rows{{tp(7 * 651) + "/" + s2, tp(7 * 651) + "/" + s2},
                 {tp(13 * 651) + "/" + s2, tp(651) + "/" + s2}},
            2);
        ExpectedFragment e;
        e.dynkin = "G22~";
        e.class_group = "1";
        e.gorenstein = true;
        e.vertices = 3;
        e.group_order = 24;
        e.kernel_order = 8;
        out.push_back({j.name, "G~22 over F_{5^6}/F_{5^2}", j, e});
    }
    {
        JobSpec j = cyclotomic_job("typeG22-q72", 72, {25}, 2);
        std::string s2 = "(z^9 + z^63)";
        gen(j, "alpha", diag({"z^18", "-z^18"}));
        gen(j, "beta", Rows{{"0", "1"}, {"-1", "0"}});
        gen(j, "gamma", Rows{{"z^21/" + s2, "z^21/" + s2}, {"z^39/" + s2, "z^3/" + s2}}, 25);
        ExpectedFragment e;
        e.dynkin = "G22~";
        e.class_group = "1";
        e.gorenstein = true;
        e.vertices = 3;
        e.group_order = 24;
        e.kernel_order = 8;
        out.push_back({j.name, "G~22 over Q(zeta_72)/Q(zeta_24)", j, e});
    }
    {
        JobSpec j = cyclotomic_job("nongor", 8, {3, 5}, 2);
        gen(j, "alpha", Rows{{"0", "z"}, {"1", "0"}}, 3);
        gen(j, "beta", Rows{{"0", "z^7"}, {"z", "0"}}, 5);
        ExpectedFragment e;
        e.class_group = "C2";
        e.gorenstein = false;
        e.vertices = 5;
        e.group_order = 32;
        e.kernel_order = 8;
        out.push_back({j.name, "non-Gorenstein, Q(zeta_8)/Q", j, e});
    }
    {
        JobSpec j = cyclotomic_job("d3-gorenstein-n2", 7, {2}, 3);
        gen(j, "alpha", diag({"z", "z^2", "z^4"}));
        gen(j, "beta", Rows{{"0", "0", "1"}, {"1", "0", "0"}, {"0", "1", "0"}}, 2);
        ExpectedFragment e;
        e.class_group = "1";
        e.gorenstein = true;
        e.isolated = true;
        e.vertices = 3;
        e.group_order = 21;
        e.kernel_order = 7;
        out.push_back({j.name, "d = 3 Gorenstein isolated, Q(zeta_7)/Q(sqrt(-7))", j, e});
    }
    for (int n = 2; n <= 4; ++n) {
        long N = 2 * n;
        JobSpec j = cyclotomic_job("d3-nonisolated-n" + std::to_string(n), N, {N - 1}, 3);
        gen(j, "alpha", diag({zp(1, N), "-1", zp(-1, N)}));
        gen(j, "beta", Rows{{"0", "0", "1"}, {"0", "1", "0"}, {"1", "0", "0"}}, N - 1);
        ExpectedFragment e;
        e.class_group = "C2";
        e.gorenstein = false;
        e.isolated = false;
        e.vertices = n + 1;
        e.group_order = 2 * N;
        e.kernel_order = N;
        out.push_back({j.name, "d = 3 non-Gorenstein non-isolated", j, e});
    }
    for (int n = 2; n <= 4; ++n) {
        long N = 4 * n;
        JobSpec j = cyclotomic_job("typeBD-n" + std::to_string(n), N, {2 * n - 1}, 2);
        gen(j, "alpha", Rows{{"0", "1"}, {"-1", "0"}});
        gen(j, "beta", Rows{{"0", "-" + zp(3, N)}, {"z", "0"}}, 2 * n - 1);
        ExpectedFragment e;
        e.dynkin = "BDn~(" + std::to_string(n + 1) + ")";
        e.class_group = "C2";
        e.gorenstein = true;
        e.vertices = n + 2;
        out.push_back({j.name, "B~D_{n+1}, sigma(zeta) = -zeta^-1", j, e});
    }
    {
        JobSpec j = cyclotomic_job("trivial-H", 4, {3}, 2);
        gen(j, "sigma", identity(2), 3);
        ExpectedFragment e;
        e.dynkin = "A0~";
        e.class_group = "1";
        e.gorenstein = true;
        e.vertices = 1;
        e.group_order = 2;
        e.kernel_order = 1;
        out.push_back({j.name, "A~0: H trivial, Q(i)/Q", j, e});
    }

    // Klein's ADE list over l with trivial Galois group, then with complex conjugation
    struct Ade {
        std::string name;
        Klein k;
        long order;
        std::string type;
        std::string cl;
        std::string real_type;
        std::string real_cl;
    };
    std::vector<Ade> ade;
    for (int n = 1; n <= 5; ++n)
        ade.push_back({"A" + std::to_string(n), klein_a(n), n + 1,
                       n == 1 ? "A12~" : "An~(" + std::to_string(n) + ")", cname(n + 1),
                       n == 1 ? "A12~" : "An~(" + std::to_string(n) + ")", cname(n + 1)});
    for (int n = 4; n <= 7; ++n)
        ade.push_back({"D" + std::to_string(n), klein_d(n), 4L * (n - 2),
                       "Dn~(" + std::to_string(n) + ")", n % 2 ? "C4" : "C2 x C2",
                       n % 2 ? "BDn~(" + std::to_string(n - 1) + ")" : "Dn~(" + std::to_string(n) + ")",
                       n % 2 ? "C2" : "C2 x C2"});
    ade.push_back({"E6", klein_e6(), 24, "E6~", "C3", "F42~", "1"});
    ade.push_back({"E7", klein_e7(), 48, "E7~", "C2", "E7~", "C2"});
    ade.push_back({"E8", klein_e8(), 120, "E8~", "1", "E8~", "1"});
    for (auto const& a : ade) {
        JobSpec j = cyclotomic_job("ade-" + a.name, a.k.n, {}, 2);
        for (auto const& [gname, m] : a.k.gens) gen(j, gname, m);
        ExpectedFragment e;
        e.dynkin = a.type;
        e.class_group = a.cl;
        e.gorenstein = true;
        e.isolated = true;
        e.group_order = a.order;
        e.kernel_order = a.order;
        out.push_back({j.name, "Klein " + a.name + " in SL_2, trivial Galois group", j, e});
    }
    for (auto const& a : ade) {
        long N = a.k.n;
        JobSpec j = cyclotomic_job("real-" + a.name, N, {N - 1}, 2);
        for (auto const& [gname, m] : a.k.gens) gen(j, gname, m);
        // real structure on D_n: beta conjugated into SL_2 of the real subfield
        if (a.name[0] == 'D') j.generators[1].matrix = Rows{{"0", "1"}, {"-1", "0"}};
        gen(j, "conj", identity(2), N - 1);
        ExpectedFragment e;
        e.dynkin = a.real_type;
        e.class_group = a.real_cl;
        e.gorenstein = true;
        e.group_order = 2 * a.order;
        e.kernel_order = a.order;
        e.surrogate = true;
        out.push_back({j.name, "Klein " + a.name + " with complex conjugation (C/R surrogate)", j, e});
    }
    return out;
}

}  // namespace

std::vector<CatalogEntry> const& catalog()
{
    static std::vector<CatalogEntry> const entries = build();
    return entries;
}

CatalogEntry const& catalog_entry(std::string const& name)
{
    for (auto const& e : catalog())
        if (e.name == name) return e;
    throw UnknownEntry(name);
}

std::vector<std::string> compare_expected(Report const& r, ExpectedFragment const& e)
{
    std::vector<std::string> bad;
    auto check = [&](bool ok, std::string const& what) {
        if (!ok) bad.push_back(what);
    };
    if (!e.dynkin.empty()) check(r.dynkin.name() == e.dynkin, "type " + r.dynkin.name() + " != " + e.dynkin);
    if (!e.class_group.empty()) {
        std::string got = r.class_group ? r.class_group->describe() : "none";
        check(got == e.class_group, "class group " + got + " != " + e.class_group);
    }
    if (e.gorenstein) check(r.gorenstein == *e.gorenstein, "gorenstein flag differs");
    if (e.isolated) check(r.isolated == *e.isolated, "isolated flag differs");
    if (e.vertices >= 0) {
        int got = r.quiver ? (int)r.quiver->size() : -1;
        check(got == e.vertices,
              "vertex count " + std::to_string(got) + " != " + std::to_string(e.vertices));
    }
    if (e.group_order >= 0) {
        long got = r.group ? (long)r.group->size() : -1;
        check(got == e.group_order, "|G| = " + std::to_string(got) + " != " + std::to_string(e.group_order));
    }
    if (e.kernel_order >= 0) {
        long got = r.kernel ? (long)r.kernel->size() : -1;
        check(got == e.kernel_order, "|H| = " + std::to_string(got) + " != " + std::to_string(e.kernel_order));
    }
    check(!r.ambiguous(), "multiplicities are ambiguous");
    return bad;
}

}  // namespace mckayq
