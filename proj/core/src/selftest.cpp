#include "mckayq/selftest.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mckayq {

namespace {

CheckResult result(std::string name, bool ok, std::string detail = {})
{
    return {std::move(name), ok, std::move(detail)};
}

FiniteGroup diagonal_group(long n, std::vector<std::vector<long>> const& exps)
{
    FieldPtr f = Field::cyclotomic(n);
    int d = (int)exps[0].size();
    std::vector<GroupElement> gens;
    for (auto const& e : exps) {
        GroupElement g;
        g.aut = f->aut_identity();
        g.matrix = mat_identity(*f, d);
        for (int i = 0; i < d; ++i) g.matrix(i, i) = f->gen_pow(e[i]);
        gens.push_back(std::move(g));
    }
    return FiniteGroup::generate(f, d, gens, 100000);
}

CheckResult compare_tables(std::string name, FiniteGroup const& G)
{
    Kernel K = kernel_and_cosets(G, {G.field().aut_identity()});
    CharacterTable a = character_table(G, K, TableMethod::Abelian);
    CharacterTable b = character_table(G, K, TableMethod::Dixon);
    bool ok = a.conductor == b.conductor && a.irr == b.irr;
    std::ostringstream os;
    os << a.size() << " characters";
    if (!ok) os << "; dual-group and Dixon tables differ";
    return result(std::move(name), ok, os.str());
}

}  // namespace

std::vector<CheckResult> property_checks(Report const& r)
{
    std::vector<CheckResult> out;
    std::string tag = r.job.name + ": ";
    if (!r.skew || !r.group || !r.kernel || !r.table) {
        out.push_back(result(tag + "report complete", false, "pipeline stopped early"));
        return out;
    }
    SkewData const& S = *r.skew;
    FiniteGroup const& G = *r.group;
    Kernel const& K = *r.kernel;
    CharacterTable const& T = *r.table;

    bool tab = true, resind = true;
    std::string tab_bad, resind_bad;
    for (std::size_t i = 0; i < S.orbits.size(); ++i) {
        auto const& o = S.orbits[i];
        if (!o.solved()) continue;
        if (o.t * o.a * o.b != S.degree) {
            tab = false;
            tab_bad += " " + o.label;
        }
        if (!res_ind_identity(S, G, K, T, (int)i)) {
            resind = false;
            resind_bad += " " + o.label;
        }
    }
    out.push_back(result(tag + "t*a*b = [l:k]", tab, tab ? "" : "fails on" + tab_bad));
    out.push_back(result(tag + "Res-Ind identity", resind, resind ? "" : "fails on" + resind_bad));

    if (!r.quiver || !r.quiver_h) return out;
    ValuedQuiver const& q = *r.quiver;
    ValuedQuiver const& qh = *r.quiver_h;

    bool integral = true;
    std::string integral_bad;
    for (std::size_t i = 0; i < S.orbits.size(); ++i)
        for (std::size_t k = 0; k < S.orbits.size(); ++k) {
            auto const& oi = S.orbits[i];
            auto const& ok = S.orbits[k];
            long s = 0, sp = 0;
            for (int wk : ok.members) s += qh.val[oi.members[0]][wk].first;
            for (int wi : oi.members) sp += qh.val[wi][ok.members[0]].second;
            if (oi.a * q.val[i][k].first != ok.a * s || ok.a * q.val[i][k].second != oi.a * sp) {
                integral = false;
                integral_bad += " " + oi.label + "->" + ok.label;
            }
        }
    out.push_back(result(tag + "a_i d_G = a_k d_H", integral, integral ? "" : "fails on" + integral_bad));

    std::vector<int> perm = q.nu;
    std::sort(perm.begin(), perm.end());
    bool bijective = true;
    for (std::size_t i = 0; i < perm.size(); ++i) bijective &= perm[i] == (int)i;
    bool id_ok = q.nu_is_identity() == r.gorenstein;
    out.push_back(result(tag + "nu bijective", bijective && perm.size() == q.size()));
    out.push_back(result(tag + "nu = id iff Gorenstein", id_ok,
                         id_ok ? "" : std::string("nu is ") + (q.nu_is_identity() ? "" : "not ") +
                                          "the identity"));

    bool ranks = q.vertices[q.omega].rank == 1;
    for (std::size_t i = 0; i < q.size(); ++i) ranks &= q.vertices[q.nu[i]].rank == q.vertices[i].rank;
    out.push_back(result(tag + "nu preserves rank, rank omega = 1", ranks));

    // sink duality: the degree-1 term at V lists the in-arrows of V with their d-valuations
    bool sink = true;
    std::string sink_bad;
    for (auto const& s : r.sequences)
        for (std::size_t x = 0; x < q.size(); ++x)
            if (s.terms.size() > 1 && s.terms[1][x] != q.val[x][s.target].first) {
                sink = false;
                sink_bad += " " + q.vertices[s.target].label;
                break;
            }
    out.push_back(result(tag + "middle terms match in-arrows", sink, sink ? "" : "fails on" + sink_bad));

    bool alt = true;
    std::string alt_bad;
    for (auto const& s : r.sequences)
        if (alternating_rank_sum(S, s) != 0) {
            alt = false;
            alt_bad += " " + q.vertices[s.target].label;
        }
    out.push_back(result(tag + "alternating rank sums vanish", alt, alt ? "" : "fails on" + alt_bad));
    return out;
}

std::vector<CheckResult> abelian_oracle_checks(int max_m)
{
    std::vector<CheckResult> out;
    for (int m = 1; m <= max_m; ++m)
        out.push_back(compare_tables("Dixon = dual group on C" + std::to_string(m),
                                     diagonal_group(m, {{1, 0}})));
    out.push_back(compare_tables("Dixon = dual group on C2 x C4", diagonal_group(4, {{2, 0}, {0, 1}})));
    return out;
}

CheckResult corrupted_multiplicity_check(Report const& r)
{
    std::string name = r.job.name + ": corrupted a raises NonDivisible";
    if (!r.skew || !r.table) return result(name, false, "no orbit data");
    SkewData S = *r.skew;
    CharacterTable const& T = *r.table;
    // Res of V_0 has coefficient a_0 on orbit 0; a divisor larger than it cannot divide it
    Character res = restriction_character(S, T, 0);
    long c = orbit_coefficients(S, T, res)[0];
    S.orbits[0].a = c + 1;
    try {
        gmodule_multiplicities(S, T, res);
    } catch (NonDivisible const& e) {
        return result(name, true, e.what());
    } catch (std::exception const& e) {
        return result(name, false, std::string("wrong error: ") + e.what());
    }
    return result(name, false, "no error raised");
}

std::size_t SelftestSummary::failures() const
{
    return (std::size_t)std::count_if(results.begin(), results.end(),
                                      [](CheckResult const& c) { return !c.passed; });
}

SelftestSummary selftest(SelftestOptions const& opt)
{
    SelftestSummary sum;
    auto emit = [&](CheckResult c) {
        if (opt.on_result) opt.on_result(c);
        sum.results.push_back(std::move(c));
    };
    std::vector<CatalogEntry const*> entries;
    if (opt.subset) {
        for (auto const& n : opt.entries) entries.push_back(&catalog_entry(n));
    } else {
        for (auto const& e : catalog()) entries.push_back(&e);
    }
    for (auto const* e : entries) {
        try {
            Report r = analyze(e->job);
            auto bad = compare_expected(r, e->expected);
            std::string detail;
            for (auto const& b : bad) detail += (detail.empty() ? "" : "; ") + b;
            emit(result(e->name + ": expected fragment", bad.empty(), detail));
            if (opt.properties) {
                for (auto& c : property_checks(r)) emit(std::move(c));
                emit(corrupted_multiplicity_check(r));
            }
        } catch (std::exception const& ex) {
            emit(result(e->name + ": expected fragment", false, ex.what()));
        }
    }
    if (opt.oracle && !(opt.subset && opt.entries.empty()))
        for (auto& c : abelian_oracle_checks()) emit(std::move(c));
    return sum;
}

}  // namespace mckayq
