#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <future>
#include <numeric>

using namespace mckayq;
using namespace testing;

namespace {

ValuedQuiver permuted(ValuedQuiver const& q, std::vector<int> const& p)
{
    // p maps old index -> new index
    ValuedQuiver out;
    std::size_t n = q.size();
    out.vertices.resize(n);
    out.val.assign(n, std::vector<std::pair<long, long>>(n));
    out.nu.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.vertices[p[i]] = q.vertices[i];
        out.nu[p[i]] = p[q.nu[i]];
        for (std::size_t k = 0; k < n; ++k) out.val[p[i]][p[k]] = q.val[i][k];
    }
    out.r = p[q.r];
    out.omega = p[q.omega];
    return out;
}

std::vector<long> at(std::size_t n, std::vector<std::pair<int, long>> const& entries)
{
    std::vector<long> v(n, 0);
    for (auto [i, m] : entries) v[i] += m;
    return v;
}

AlmostSplitSequence const& sequence_at(Report const& r, int target)
{
    for (auto const& s : r.sequences)
        if (s.target == target) return s;
    throw std::logic_error("no sequence");
}

}  // namespace

TEST_SUITE("arquiver")
{
    TEST_CASE("McKay quiver of C5 in SL2 is a cycle")
    {
        auto const& r = cached("ade-A4");
        auto const& qh = *r.quiver_h;
        int alpha = r.group->generator_indices()[0];
        auto W = [&](long j) { return irr_with_value(*r.table, *r.kernel, alpha, r.table->cf->gen_pow(mod_l(j, 5))); };
        for (long j = 0; j < 5; ++j)
            for (long k = 0; k < 5; ++k) {
                bool adj = mod_l(j - k, 5) == 1 || mod_l(k - j, 5) == 1;
                CHECK(qh.val[W(j)][W(k)] == (adj ? std::pair<long, long>{1, 1} : std::pair<long, long>{0, 0}));
            }
    }

    TEST_CASE("McKay quiver of C8 = <diag(z, z^3)> is the octagon pattern")
    {
        auto const& r = cached("nongor");
        auto const& G = *r.group;
        auto const& qh = *r.quiver_h;
        int a2 = G.mul(G.generator_indices()[0], G.generator_indices()[0]);
        auto W = [&](long j) { return irr_with_value(*r.table, *r.kernel, a2, r.table->cf->gen_pow(mod_l(j, 8))); };
        for (long j = 0; j < 8; ++j)
            for (long k = 0; k < 8; ++k) {
                long expect = (mod_l(j - 1, 8) == k || mod_l(j - 3, 8) == k) ? 1 : 0;
                CHECK(qh.val[W(j)][W(k)].first == expect);
            }
    }

    TEST_CASE("trivial H: one vertex with a (2,2) loop")
    {
        auto const& r = cached("trivial-H");
        REQUIRE(r.quiver_h->size() == 1);
        CHECK(r.quiver_h->val[0][0] == std::pair<long, long>{2, 2});
        CHECK(r.quiver->val[0][0] == std::pair<long, long>{2, 2});
        CHECK(r.dynkin.name() == "A0~");
    }

    TEST_CASE("valued quiver examples")
    {
        auto const& c = cached("typeC-n2");
        int alpha = c.group->generator_indices()[0];
        int v0 = vertex_of(c, alpha, 0, 4), v1 = vertex_of(c, alpha, 1, 4), v2 = vertex_of(c, alpha, 2, 4);
        auto const& q = *c.quiver;
        CHECK(q.val[v0][v1] == std::pair<long, long>{2, 1});
        CHECK(q.val[v1][v0] == std::pair<long, long>{1, 2});
        CHECK(q.val[v1][v2] == std::pair<long, long>{1, 2});
        CHECK(q.val[v2][v1] == std::pair<long, long>{2, 1});
        CHECK(q.val[v0][v2] == std::pair<long, long>{0, 0});

        auto const& g = cached("typeG22");
        auto const& gq = *g.quiver;
        REQUIRE(gq.size() == 3);
        int m0 = gq.r, mp = -1, m1 = -1;
        for (int i = 0; i < 3; ++i) {
            if (g.skew->orbits[i].dim_w == 2) mp = i;
            else if (i != m0) m1 = i;
        }
        REQUIRE(mp >= 0);
        REQUIRE(m1 >= 0);
        CHECK(g.skew->orbits[m1].t == 3);
        CHECK(gq.val[m0][mp] == std::pair<long, long>{1, 1});
        CHECK(gq.val[mp][m0] == std::pair<long, long>{1, 1});
        CHECK(gq.val[mp][m1] == std::pair<long, long>{3, 1});
        CHECK(gq.val[m1][mp] == std::pair<long, long>{1, 3});
    }

    TEST_CASE("trivial Galois group leaves the H quiver unchanged")
    {
        for (std::string name : {"ade-E6", "ade-D5", "ade-A3"}) {
            auto const& r = cached(name);
            auto const& S = *r.skew;
            for (std::size_t i = 0; i < S.orbits.size(); ++i)
                for (std::size_t k = 0; k < S.orbits.size(); ++k)
                    CHECK(r.quiver->val[i][k] == r.quiver_h->val[S.orbits[i].members[0]][S.orbits[k].members[0]]);
        }
    }

    TEST_CASE("valuations cross-check through G-module characters")
    {
        auto const& r = cached("typeBC-n3");
        ValuedQuiver q = *r.quiver;
        CHECK_NOTHROW(cross_check_valuations(*r.group, *r.kernel, *r.table, *r.skew, q));
        q.val[0][1].first += 1;
        CHECK_THROWS_AS(cross_check_valuations(*r.group, *r.kernel, *r.table, *r.skew, q), ValuationMismatch);
    }

    TEST_CASE("Nakayama permutation")
    {
        for (auto const& e : catalog()) {
            auto const& r = cached(e.name);
            if (!r.gorenstein) continue;
            CHECK(r.quiver->nu_is_identity());
            CHECK(r.quiver->omega == r.quiver->r);
        }
        auto const& ng = cached("nongor");
        auto const& G = *ng.group;
        int a2 = G.mul(G.generator_indices()[0], G.generator_indices()[0]);
        auto V = [&](long j) { return vertex_of(ng, a2, j, 8); };
        auto const& nu = ng.quiver->nu;
        CHECK(nu[V(0)] == V(4));
        CHECK(nu[V(4)] == V(0));
        CHECK(nu[V(1)] == V(5));
        CHECK(nu[V(5)] == V(1));
        CHECK(nu[V(2)] == V(2));
        CHECK(ng.quiver->omega == V(4));
    }

    TEST_CASE("sequence examples")
    {
        {
            auto const& c = cached("typeC-n2");
            int alpha = c.group->generator_indices()[0];
            int v0 = vertex_of(c, alpha, 0, 4), v1 = vertex_of(c, alpha, 1, 4), v2 = vertex_of(c, alpha, 2, 4);
            auto const& s = sequence_at(c, v1);
            CHECK(s.terms[1] == at(3, {{v0, 2}, {v2, 2}}));
            CHECK(s.terms[2] == at(3, {{v1, 1}}));
            CHECK(sequence_at(c, v0).fundamental);
        }
        {
            auto const& ng = cached("nongor");
            auto const& G = *ng.group;
            int a2 = G.mul(G.generator_indices()[0], G.generator_indices()[0]);
            auto V = [&](long j) { return vertex_of(ng, a2, j, 8); };
            auto const& s = sequence_at(ng, V(1));
            CHECK(s.terms[2] == at(5, {{V(5), 1}}));
            CHECK(s.terms[1] == at(5, {{V(4), 2}, {V(2), 1}}));
            CHECK(s.terms[0] == at(5, {{V(1), 1}}));
        }
        {
            // n = 3: rows for M_n come from the resolution of W_n
            auto const& r = cached("d3-nonisolated-n3");
            int alpha = r.group->generator_indices()[0];
            auto V = [&](long j) { return vertex_of(r, alpha, mod_l(j, 6), 6); };
            auto const& s = sequence_at(r, V(3));
            CHECK(s.terms[3] == at(r.quiver->size(), {{V(0), 1}}));
            CHECK(s.terms[2] == at(r.quiver->size(), {{V(1), 1}, {V(3), 1}}));
            CHECK(s.terms[1] == at(r.quiver->size(), {{V(0), 1}, {V(2), 1}}));
            CHECK(s.terms[0] == at(r.quiver->size(), {{V(3), 1}}));
        }
    }

    TEST_CASE("recognition examples")
    {
        for (int n = 1; n <= 4; ++n) CHECK(cached("typeCL-n" + std::to_string(n)).dynkin.name() == "CLn~(" + std::to_string(n) + ")");
        CHECK(cached("typeBC-n1").dynkin.name() == "A11~");
        ValuedQuiver loop;
        loop.vertices.push_back({"V0", 1, true, true, true});
        loop.val = {{{2, 2}}};
        loop.nu = {0};
        CHECK(recognize_type(loop, 2, true).name() == "A0~");
        CHECK(recognize_type(loop, 3, true).family == "unknown");
        CHECK(recognize_type(loop, 2, false).family == "unknown");
    }

    TEST_CASE("recognition is stable under vertex reordering")
    {
        for (std::string name : {"typeBC-n4", "ade-E8", "real-E6", "typeBD-n3", "typeG22", "ade-D6", "typeCL-n3"}) {
            auto const& r = cached(name);
            std::vector<int> p(r.quiver->size());
            std::iota(p.begin(), p.end(), 0);
            for (int it = 0; it < 5; ++it) {
                std::shuffle(p.begin(), p.end(), rng());
                CHECK(recognize_type(permuted(*r.quiver, p), 2, true).name() == r.dynkin.name());
            }
        }
    }

    TEST_CASE("every vertex has an incident arrow")
    {
        for (auto const& e : catalog()) {
            auto const& q = *cached(e.name).quiver;
            for (std::size_t i = 0; i < q.size(); ++i) {
                bool any = false;
                for (std::size_t k = 0; k < q.size(); ++k) any |= q.val[i][k].first > 0 || q.val[k][i].first > 0;
                CHECK(any);
            }
        }
    }

    TEST_CASE("DOT output")
    {
        std::string a0 = emit_dot(*cached("trivial-H").quiver);
        CHECK(a0 ==
              "digraph mckay {\n"
              "  node [shape=circle];\n"
              "  v0 [label=\"V0\", shape=doublecircle, xlabel=\"omega\"];\n"
              "  v0 -> v0 [label=\"(2,2)\"];\n"
              "}\n");
        std::string g = emit_dot(*cached("typeG22").quiver);
        CHECK(std::count(g.begin(), g.end(), '\n') == 3 + 3 + 4);
        CHECK(g.find("(3,1)") != std::string::npos);
        CHECK(g.find("(1,3)") != std::string::npos);
        CHECK(g.find("dashed") == std::string::npos);
        CHECK(emit_dot(*cached("typeG22").quiver, true).find("dashed") != std::string::npos);
        CHECK(emit_dot(*cached("nongor").quiver).find("dashed") != std::string::npos);
    }

    TEST_CASE("reports are byte-identical across runs and threads")
    {
        std::vector<std::string> names = {"typeG22", "nongor", "d3-gorenstein-n2", "ade-E7", "real-D5"};
        std::vector<std::string> json, dot;
        for (auto const& n : names) {
            Report r = analyze(catalog_entry(n).job);
            json.push_back(report_json(r));
            dot.push_back(emit_dot(*r.quiver, true));
        }
        std::vector<std::future<std::pair<std::string, std::string>>> jobs;
        for (int rep = 0; rep < 2; ++rep)
            for (auto const& n : names)
                jobs.push_back(std::async(std::launch::async, [n] {
                    Report r = analyze(catalog_entry(n).job);
                    return std::make_pair(report_json(r), emit_dot(*r.quiver, true));
                }));
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            auto [j, d] = jobs[i].get();
            CHECK(j == json[i % names.size()]);
            CHECK(d == dot[i % names.size()]);
        }
    }
}
