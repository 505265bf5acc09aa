#include "support.hpp"

#include <doctest.h>

using namespace mckayq;
using namespace testing;

namespace {

using Poly = std::vector<mpq_class>;  // low-to-high

Poly trim(Poly p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Poly pmul(Poly const& a, Poly const& b)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(r);
}

/* quotient and remainder by a monic divisor */
std::pair<Poly, Poly> pdivmod(Poly a, Poly const& m)
{
    a = trim(a);
    Poly q(a.size() >= m.size() ? a.size() - m.size() + 1 : 0, 0);
    while (a.size() >= m.size()) {
        mpq_class c = a.back();
        std::size_t s = a.size() - m.size();
        q[s] = c;
        for (std::size_t i = 0; i < m.size(); ++i) a[s + i] -= c * m[i];
        a = trim(a);
    }
    return {trim(q), a};
}

Poly phi(long n)
{
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) p = pdivmod(p, phi(d)).first;
    return p;
}

Poly coords(FieldElement const& x)
{
    return trim(Poly(x.c.begin(), x.c.end()));
}

std::vector<long> gfp_mulmod(std::vector<long> const& a, std::vector<long> const& b,
                             std::vector<long> const& m, long p)
{
    std::vector<long> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    std::size_t deg = m.size() - 1;
    for (std::size_t k = r.size(); k-- > deg;) {
        long c = r[k];
        if (!c) continue;
        for (std::size_t i = 0; i <= deg; ++i) r[k - deg + i] = ((r[k - deg + i] - c * m[i]) % p + p) % p;
    }
    r.resize(deg);
    return r;
}

std::vector<long> gf_coords(Field const& f, FieldElement const& x)
{
    std::vector<long> v;
    for (auto const& c : x.c) {
        mpz_class z = c.get_num() % f.characteristic();
        if (z < 0) z += f.characteristic();
        v.push_back(z.get_si());
    }
    v.resize(f.dim(), 0);
    return v;
}

}  // namespace

TEST_SUITE("exactfield")
{
    TEST_CASE("field arithmetic examples")
    {
        auto q4 = Field::cyclotomic(4);
        CHECK(q4->mul(q4->gen(), q4->gen()) == q4->from_int(-1));
        auto q8 = Field::cyclotomic(8);
        CHECK(q8->pow(q8->gen(), 4) == q8->from_int(-1));
        auto f8 = Field::finite(2, 3, {1, 1, 0, 1});
        CHECK(f8->mul(f8->gen(), f8->gen_pow(2)) == f8->parse("t + 1"));
        CHECK_THROWS_AS(q8->div(q8->one(), q8->zero()), DivisionByZero);
    }

    TEST_CASE("automorphism examples")
    {
        auto q8 = Field::cyclotomic(8);
        CHECK(q8->apply_aut(3, q8->gen()) == q8->gen_pow(3));
        auto q4 = Field::cyclotomic(4);
        CHECK(q4->apply_aut(3, q4->gen()) == q4->neg(q4->gen()));
        auto f8 = Field::finite(2, 3, {1, 1, 0, 1});
        CHECK(f8->apply_aut(1, f8->gen()) == f8->gen_pow(2));
        CHECK_FALSE(q8->valid_aut(2));
    }

    TEST_CASE("is_fixed examples")
    {
        auto q8 = Field::cyclotomic(8);
        CHECK(q8->is_fixed(q8->parse("z + z^7"), {7}));
        CHECK_FALSE(q8->is_fixed(q8->gen(), {7}));
        auto q5 = Field::cyclotomic(5);
        CHECK(q5->is_fixed(q5->parse("(z + z^4)/2"), {4}));
    }

    TEST_CASE("norm examples")
    {
        auto q4 = Field::cyclotomic(4);
        auto c = q4->aut_group({3});
        CHECK(q4->norm(q4->parse("1 + z"), c) == q4->from_int(2));
        auto x = q4->from_rational(mpq_class(3, 7));
        CHECK(q4->norm(x, c) == q4->pow(x, 2));
        auto f8 = Field::finite(2, 3, {1, 1, 0, 1});
        CHECK(f8->norm(f8->gen(), f8->aut_group({1})) == f8->one());
    }

    TEST_CASE("is_norm examples")
    {
        auto q4 = Field::cyclotomic(4);
        auto c = q4->aut_group({3});
        CHECK(q4->is_norm(q4->from_int(-1), c) == NormAnswer::No);
        CHECK(q4->is_norm(q4->from_int(2), c) == NormAnswer::Yes);
        auto f = Field::finite(5, 6);
        auto c2 = f->aut_group({2});
        for (int i = 0; i < 20; ++i) {
            auto x = random_element(*f);
            if (f->is_zero(x)) continue;
            auto t = f->norm(x, c2);
            CHECK(f->is_norm(t, c2) == NormAnswer::Yes);
        }
    }

    TEST_CASE("automorphisms are multiplicative and compose")
    {
        for (long n : {5L, 8L, 12L, 15L}) {
            auto f = Field::cyclotomic(n);
            std::vector<long> units;
            for (long a = 1; a < n; ++a)
                if (gcd_l(a, n) == 1) units.push_back(a);
            for (int it = 0; it < 40; ++it) {
                auto x = random_element(*f), y = random_element(*f);
                long a = units[rng()() % units.size()], b = units[rng()() % units.size()];
                CHECK(f->apply_aut(a, f->mul(x, y)) == f->mul(f->apply_aut(a, x), f->apply_aut(a, y)));
                CHECK(f->apply_aut(f->aut_identity(), x) == x);
                CHECK(f->apply_aut(a, f->apply_aut(b, x)) == f->apply_aut(f->aut_compose(a, b), x));
                CHECK(f->aut_compose(a, b) == mod_l(a * b, n));
            }
        }
    }

    TEST_CASE("norms are fixed and recognized as norms (200 samples)")
    {
        struct Case {
            long n;
            std::vector<long> gens;
        };
        std::vector<Case> cases = {{4, {3}}, {3, {2}}, {8, {7}}, {5, {4}}, {12, {11}}};
        int checked = 0;
        for (int i = 0; i < 200; ++i) {
            auto const& cs = cases[i % cases.size()];
            auto f = Field::cyclotomic(cs.n);
            auto c = f->aut_group(cs.gens);
            // integer coordinates in [-2,2] keep the preimage inside a search box of bound 2
            FieldElement x = f->zero();
            std::uniform_int_distribution<int> coef(-2, 2);
            for (int k = 0; k < f->dim(); ++k) x = f->add(x, f->mul(f->from_int(coef(rng())), f->gen_pow(k)));
            if (f->is_zero(x)) x = f->one();
            auto t = f->norm(x, c);
            CHECK(f->is_fixed(t, c));
            CHECK(f->is_norm(t, c, 2) == NormAnswer::Yes);
            ++checked;
        }
        CHECK(checked == 200);
    }

    TEST_CASE("cyclotomic arithmetic matches a polynomial-ring oracle (500 pairs)")
    {
        std::vector<long> ns = {3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24, 60};
        for (int i = 0; i < 500; ++i) {
            long n = ns[i % ns.size()];
            auto f = Field::cyclotomic(n);
            Poly m = phi(n);
            REQUIRE((long)m.size() - 1 == f->dim());
            auto x = random_element(*f), y = random_element(*f);
            Poly expect = pdivmod(pmul(coords(x), coords(y)), m).second;
            CHECK(coords(f->mul(x, y)) == expect);
            Poly sum = coords(x);
            Poly cy = coords(y);
            sum.resize(std::max(sum.size(), cy.size()), 0);
            for (std::size_t k = 0; k < cy.size(); ++k) sum[k] += cy[k];
            CHECK(coords(f->add(x, y)) == trim(sum));
            if (!f->is_zero(y)) CHECK(f->mul(f->div(x, y), y) == x);
        }
    }

    TEST_CASE("finite field arithmetic matches an F_p[t] oracle")
    {
        for (auto [p, m] : std::vector<std::pair<long, int>>{{2, 3}, {5, 6}, {3, 4}, {7, 2}}) {
            auto f = Field::finite(p, m);
            std::vector<long> mod;
            for (auto const& c : f->modulus()) mod.push_back(c.get_si());
            for (int i = 0; i < 50; ++i) {
                auto x = random_element(*f, 0, (int)p - 1), y = random_element(*f, 0, (int)p - 1);
                CHECK(gf_coords(*f, f->mul(x, y)) == gfp_mulmod(gf_coords(*f, x), gf_coords(*f, y), mod, p));
            }
            auto g = f->primitive_element();
            CHECK(f->multiplicative_order(g) == f->size() - 1);
        }
    }

    TEST_CASE("expression grammar")
    {
        auto f = Field::cyclotomic(8);
        auto x = f->parse("1/2*z^3 - z");
        CHECK(x == f->sub(f->scale(f->gen_pow(3), mpq_class(1, 2)), f->gen()));
        CHECK(f->parse(f->to_string(x)) == x);
        CHECK(f->parse("(z + z^7)^2") == f->from_int(2));
        CHECK(f->parse("z^-1") == f->gen_pow(7));
        try {
            f->parse("z^^2");
            FAIL("expected a parse error");
        } catch (ExprParseError const& e) {
            CHECK(e.pos == 2);
        }
        CHECK_THROWS_AS(f->parse("t"), ExprParseError);
        auto g = Field::finite(5, 2);
        CHECK(g->parse("t^24") == g->one());
    }
}
