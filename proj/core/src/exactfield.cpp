#include "mckayq/exactfield.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_set>

namespace mckayq {

long gcd_l(long a, long b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm_l(long a, long b)
{
    if (a == 0 || b == 0) return 0;
    return a / gcd_l(a, b) * b;
}

long mod_l(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

long euler_phi(long n)
{
    long r = n;
    for (long p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

std::vector<long> prime_factors(long n)
{
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

long powmod_l(long b, long e, long m)
{
    __int128 r = 1 % m, x = mod_l(b, m);
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return (long)r;
}

long inverse_mod(long a, long m)
{
    long old_r = m, r = mod_l(a, m), old_s = 0, s = 1;
    while (r != 0) {
        long q = old_r / r;
        long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw FieldError("no inverse modulo " + std::to_string(m));
    return mod_l(old_s, m);
}

bool is_prime_l(long n)
{
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

namespace {

using Poly = std::vector<mpz_class>;

Poly poly_mul(Poly const& a, Poly const& b)
{
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

/* exact division by a monic polynomial */
Poly poly_divexact(Poly a, Poly const& b)
{
    std::size_t db = b.size() - 1;
    Poly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        mpz_class c = a[i];
        q[i - db] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return q;
}

int mobius(long n)
{
    int r = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    }
    if (n > 1) r = -r;
    return r;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(long n)
{
    Poly num{1}, den{1};
    for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = mobius(n / d);
        if (mu == 0) continue;
        Poly f(d + 1, 0);
        f[0] = -1;
        f[d] = 1;
        if (mu > 0)
            num = poly_mul(num, f);
        else
            den = poly_mul(den, f);
    }
    return poly_divexact(num, den);
}

char const* to_string(NormAnswer a)
{
    switch (a) {
    case NormAnswer::Yes: return "yes";
    case NormAnswer::No: return "no";
    default: return "unknown";
    }
}

bool FieldElement::operator<(FieldElement const& o) const
{
    return std::lexicographical_compare(c.begin(), c.end(), o.c.begin(), o.c.end());
}

Field::Field(FieldSpec const& spec) : spec_(spec)
{
    if (spec_.kind == FieldKind::Cyclotomic) {
        if (spec_.n < 1) throw FieldError("cyclotomic conductor must be >= 1");
        init_cyclotomic();
    } else {
        if (!is_prime_l(spec_.p)) throw FieldError("characteristic must be prime");
        if (spec_.m < 1) throw FieldError("extension degree must be >= 1");
        init_finite();
    }
}

std::shared_ptr<const Field> Field::cyclotomic(long n)
{
    FieldSpec s;
    s.kind = FieldKind::Cyclotomic;
    s.n = n;
    return std::make_shared<const Field>(s);
}

std::shared_ptr<const Field> Field::finite(long p, int m, std::vector<long> modulus)
{
    FieldSpec s;
    s.kind = FieldKind::Finite;
    s.p = p;
    s.m = m;
    s.modulus = std::move(modulus);
    return std::make_shared<const Field>(s);
}

void Field::init_cyclotomic()
{
    mod_ = cyclotomic_polynomial(spec_.n);
    dim_ = (int)mod_.size() - 1;
    zpow_.reserve(spec_.n);
    FieldElement z = one();
    for (long j = 0; j < spec_.n; ++j) {
        zpow_.push_back(z);
        std::vector<mpq_class> shifted(z.c.size() + 1, 0);
        for (std::size_t i = 0; i < z.c.size(); ++i) shifted[i + 1] = z.c[i];
        z = reduce(std::move(shifted));
    }
}

void Field::init_finite()
{
    long p = spec_.p;
    int m = spec_.m;
    dim_ = m;
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, m);
    if (q > 1000000000L) throw FieldError("finite field too large");
    size_ = q.get_si();

    auto try_modulus = [&](std::vector<long> const& low) {
        mod_.assign(m + 1, 0);
        for (int i = 0; i < m; ++i) mod_[i] = mod_l(low[i], p);
        mod_[m] = 1;
        primitive_.reset();
        FieldElement t = gen();
        return !is_zero(t) && multiplicative_order(t) == size_ - 1;
    };

    if (!spec_.modulus.empty()) {
        std::vector<long> const& f = spec_.modulus;
        if ((int)f.size() != m + 1 || mod_l(f[m], p) != 1)
            throw FieldError("modulus must be monic of degree m");
        mod_.assign(m + 1, 0);
        for (int i = 0; i <= m; ++i) mod_[i] = mod_l(f[i], p);
        // irreducibility: some element must have order size-1
        primitive_ = primitive_element();
        return;
    }
    std::vector<long> low(m, 0);
    for (long code = 0; code < size_; ++code) {
        long c = code;
        for (int i = 0; i < m; ++i) {
            low[i] = c % p;
            c /= p;
        }
        if (try_modulus(low)) {
            spec_.modulus.assign(low.begin(), low.end());
            spec_.modulus.push_back(1);
            primitive_ = gen();
            return;
        }
    }
    throw FieldError("no primitive modulus found");
}

std::string Field::describe() const
{
    if (kind() == FieldKind::Cyclotomic) return "Q(zeta_" + std::to_string(spec_.n) + ")";
    return "F_" + std::to_string(spec_.p) + "^" + std::to_string(spec_.m);
}

FieldElement Field::zero() const
{
    return FieldElement{std::vector<mpq_class>(dim_, 0)};
}

FieldElement Field::one() const
{
    FieldElement r = zero();
    r.c[0] = 1;
    return r;
}

FieldElement Field::gen() const
{
    return reduce({0, 1});
}

FieldElement Field::from_int(long v) const
{
    return from_rational(mpq_class(v));
}

FieldElement Field::from_rational(mpq_class const& q) const
{
    FieldElement r = zero();
    if (kind() == FieldKind::Finite) {
        mpz_class pm = spec_.p;
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class dm;
        mpz_fdiv_r(dm.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t());
        if (dm == 0) throw DivisionByZero();
        mpz_class di;
        mpz_invert(di.get_mpz_t(), dm.get_mpz_t(), pm.get_mpz_t());
        mpz_class v = num * di;
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), pm.get_mpz_t());
        r.c[0] = v;
    } else {
        r.c[0] = q;
    }
    return r;
}

FieldElement Field::gen_pow(long k) const
{
    if (kind() == FieldKind::Cyclotomic) return zpow_[mod_l(k, spec_.n)];
    return pow(gen(), k);
}

FieldElement Field::reduce(std::vector<mpq_class> prod) const
{
    std::size_t d = dim_;
    for (std::size_t i = prod.size(); i-- > d;) {
        if (prod[i] == 0) continue;
        mpq_class c = prod[i];
        prod[i] = 0;
        for (std::size_t j = 0; j < d; ++j)
            if (mod_[j] != 0) prod[i - d + j] -= c * mod_[j];
    }
    prod.resize(d, 0);
    if (kind() == FieldKind::Finite) {
        mpz_class pm = spec_.p;
        for (auto& c : prod) {
            mpz_class v = c.get_num();
            mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), pm.get_mpz_t());
            c = v;
        }
    }
    return FieldElement{std::move(prod)};
}

FieldElement Field::add(FieldElement const& x, FieldElement const& y) const
{
    FieldElement r = x;
    for (int i = 0; i < dim_; ++i) r.c[i] += y.c[i];
    if (kind() == FieldKind::Finite)
        for (auto& c : r.c)
            if (c >= spec_.p) c -= spec_.p;
    return r;
}

FieldElement Field::sub(FieldElement const& x, FieldElement const& y) const
{
    FieldElement r = x;
    for (int i = 0; i < dim_; ++i) r.c[i] -= y.c[i];
    if (kind() == FieldKind::Finite)
        for (auto& c : r.c)
            if (c < 0) c += spec_.p;
    return r;
}

FieldElement Field::neg(FieldElement const& x) const
{
    return sub(zero(), x);
}

FieldElement Field::mul(FieldElement const& x, FieldElement const& y) const
{
    std::vector<mpq_class> prod(2 * dim_ - 1, 0);
    for (int i = 0; i < dim_; ++i) {
        if (x.c[i] == 0) continue;
        for (int j = 0; j < dim_; ++j)
            if (y.c[j] != 0) prod[i + j] += x.c[i] * y.c[j];
    }
    return reduce(std::move(prod));
}

FieldElement Field::scale(FieldElement const& x, mpq_class const& q) const
{
    return mul(x, from_rational(q));
}

FieldElement Field::inv_cyclotomic(FieldElement const& x) const
{
    int n = dim_;
    // columns: x * zeta^j
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1, 0));
    FieldElement col = x;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) a[i][j] = col.c[i];
        std::vector<mpq_class> shifted(n + 1, 0);
        for (int i = 0; i < n; ++i) shifted[i + 1] = col.c[i];
        col = reduce(std::move(shifted));
    }
    a[0][n] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw DivisionByZero();
        std::swap(a[piv], a[c]);
        mpq_class iv = 1 / a[c][c];
        for (int k = c; k <= n; ++k) a[c][k] *= iv;
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            mpq_class f = a[r][c];
            for (int k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    FieldElement r = zero();
    for (int i = 0; i < n; ++i) r.c[i] = a[i][n];
    return r;
}

FieldElement Field::inv(FieldElement const& x) const
{
    if (is_zero(x)) throw DivisionByZero();
    if (kind() == FieldKind::Cyclotomic) return inv_cyclotomic(x);
    return pow(x, size_ - 2);
}

FieldElement Field::div(FieldElement const& x, FieldElement const& y) const
{
    return mul(x, inv(y));
}

FieldElement Field::pow(FieldElement const& x, long e) const
{
    if (e < 0) return pow(inv(x), -e);
    FieldElement r = one(), b = x;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

bool Field::is_zero(FieldElement const& x) const
{
    for (auto const& c : x.c)
        if (c != 0) return false;
    return true;
}

bool Field::is_one(FieldElement const& x) const
{
    return x == one();
}

std::optional<mpq_class> Field::rational_value(FieldElement const& x) const
{
    for (int i = 1; i < dim_; ++i)
        if (x.c[i] != 0) return std::nullopt;
    return x.c[0];
}

long Field::aut_normalize(long a) const
{
    if (kind() == FieldKind::Finite) return mod_l(a, spec_.m);
    if (spec_.n <= 2) return 1;
    return mod_l(a, spec_.n);
}

bool Field::valid_aut(long a) const
{
    if (kind() == FieldKind::Finite) return true;
    if (spec_.n <= 2) return mod_l(a, 2) == 1 || spec_.n == 1;
    return gcd_l(mod_l(a, spec_.n), spec_.n) == 1;
}

long Field::aut_identity() const
{
    return kind() == FieldKind::Finite ? 0 : 1;
}

long Field::aut_compose(long a, long b) const
{
    if (kind() == FieldKind::Finite) return mod_l(a + b, spec_.m);
    if (spec_.n <= 2) return 1;
    return mod_l(a * b, spec_.n);
}

long Field::aut_inverse(long a) const
{
    if (kind() == FieldKind::Finite) return mod_l(-a, spec_.m);
    if (spec_.n <= 2) return 1;
    return inverse_mod(a, spec_.n);
}

FieldElement Field::apply_aut(long a, FieldElement const& x) const
{
    if (!valid_aut(a)) throw InvalidAutomorphism(a);
    a = aut_normalize(a);
    if (a == aut_identity()) return x;
    if (kind() == FieldKind::Finite) {
        long e = 1;
        for (long i = 0; i < a; ++i) e *= spec_.p;
        return pow(x, e);
    }
    std::vector<mpq_class> acc(dim_, 0);
    for (int k = 0; k < dim_; ++k) {
        if (x.c[k] == 0) continue;
        FieldElement const& z = zpow_[mod_l(a * k, spec_.n)];
        for (int i = 0; i < dim_; ++i)
            if (z.c[i] != 0) acc[i] += x.c[k] * z.c[i];
    }
    return FieldElement{std::move(acc)};
}

std::vector<long> Field::aut_group(std::vector<long> const& gens) const
{
    std::set<long> seen{aut_identity()};
    std::vector<long> frontier{aut_identity()};
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long x : frontier)
            for (long g : gens) {
                if (!valid_aut(g)) throw InvalidAutomorphism(g);
                long y = aut_compose(x, aut_normalize(g));
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

bool Field::is_fixed(FieldElement const& x, std::vector<long> const& gens) const
{
    for (long g : gens)
        if (apply_aut(g, x) != x) return false;
    return true;
}

FieldElement Field::norm(FieldElement const& x, std::vector<long> const& group) const
{
    FieldElement r = one();
    for (long a : group) r = mul(r, apply_aut(a, x));
    return r;
}

namespace {

bool perfect_power(mpz_class const& v, unsigned long r)
{
    if (v < 0) {
        if (r % 2 == 0) return false;
        return perfect_power(-v, r);
    }
    return mpz_root(mpz_class().get_mpz_t(), v.get_mpz_t(), r) != 0;
}

}  // namespace

NormAnswer Field::is_norm(FieldElement const& target, std::vector<long> const& group,
                          long bound, long max_candidates) const
{
    if (is_zero(target)) return NormAnswer::Yes;
    if (kind() == FieldKind::Finite) return NormAnswer::Yes;
    long r = (long)group.size();
    if (r <= 1) return NormAnswer::Yes;
    if (!is_fixed(target, group)) return NormAnswer::No;

    if (auto q = rational_value(target)) {
        if (*q == 1) return NormAnswer::Yes;
        if (perfect_power(q->get_num(), r) && perfect_power(q->get_den(), r)) return NormAnswer::Yes;
        bool has_conj = spec_.n > 2 &&
                        std::find(group.begin(), group.end(), spec_.n - 1) != group.end();
        // with complex conjugation in the group every norm is a product of |.|^2
        if (has_conj && *q < 0) return NormAnswer::No;
    }

    long b = bound;
    auto count = [&](long bb) {
        double c = 1;
        for (int i = 0; i < dim_; ++i) c *= double(2 * bb + 1);
        return c;
    };
    while (b > 0 && count(b) > double(max_candidates)) --b;
    if (b == 0) return NormAnswer::Unknown;

    std::unordered_set<std::string> norms;
    std::vector<long> v(dim_, -b);
    while (true) {
        bool nz = false;
        for (long x : v) nz = nz || x != 0;
        if (nz) {
            FieldElement x = zero();
            for (int i = 0; i < dim_; ++i) x.c[i] = v[i];
            norms.insert(key(norm(x, group)));
        }
        int i = 0;
        while (i < dim_ && v[i] == b) v[i++] = -b;
        if (i == dim_) break;
        ++v[i];
    }
    for (long m = 1; m <= bound; ++m) {
        mpz_class mr;
        mpz_ui_pow_ui(mr.get_mpz_t(), m, r);
        if (norms.count(key(scale(target, mpq_class(mr))))) return NormAnswer::Yes;
    }
    return NormAnswer::Unknown;
}

long Field::multiplicative_order(FieldElement const& x) const
{
    if (kind() != FieldKind::Finite) throw FieldError("multiplicative order needs a finite field");
    if (is_zero(x)) throw DivisionByZero();
    long n = size_ - 1;
    if (!is_one(pow(x, n))) return 0;  // only possible when the modulus is reducible
    long ord = n;
    for (long q : prime_factors(n))
        while (ord % q == 0 && is_one(pow(x, ord / q))) ord /= q;
    return ord;
}

FieldElement Field::primitive_element() const
{
    if (primitive_) return *primitive_;
    if (kind() != FieldKind::Finite) throw FieldError("primitive element needs a finite field");
    long p = spec_.p;
    for (long code = 1; code < size_; ++code) {
        FieldElement x = zero();
        long c = code;
        for (int i = 0; i < dim_; ++i) {
            x.c[i] = c % p;
            c /= p;
        }
        if (multiplicative_order(x) == size_ - 1) return x;
    }
    throw FieldError("modulus is not irreducible");
}

std::string Field::to_string(FieldElement const& x) const
{
    char sym = kind() == FieldKind::Finite ? 't' : 'z';
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < dim_; ++k) {
        mpq_class c = x.c[k];
        if (c == 0) continue;
        bool negative = c < 0;
        mpq_class a = negative ? mpq_class(-c) : c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (k == 0) {
            out << a.get_str();
            continue;
        }
        if (a != 1) out << a.get_str() << "*";
        out << sym;
        if (k > 1) out << "^" << k;
    }
    if (first) return "0";
    return out.str();
}

std::string Field::key(FieldElement const& x) const
{
    std::string s;
    for (auto const& c : x.c) {
        s += c.get_str();
        s += ',';
    }
    return s;
}

namespace {

class ExprParser {
public:
    ExprParser(Field const& f, std::string const& s) : f_(f), s_(s) {}

    FieldElement run()
    {
        FieldElement v = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected character '" + std::string(1, s_[i_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(std::string const& msg) { throw ExprParseError(msg, i_); }

    void skip()
    {
        while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
    }

    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    FieldElement expr()
    {
        FieldElement v = term();
        while (true) {
            if (eat('+'))
                v = f_.add(v, term());
            else if (eat('-'))
                v = f_.sub(v, term());
            else
                return v;
        }
    }

    FieldElement term()
    {
        FieldElement v = unary();
        while (true) {
            if (eat('*')) {
                v = f_.mul(v, unary());
            } else if (eat('/')) {
                std::size_t at = i_;
                FieldElement d = unary();
                if (f_.is_zero(d)) throw ExprParseError("division by zero", at);
                v = f_.div(v, d);
            } else {
                return v;
            }
        }
    }

    FieldElement unary()
    {
        if (eat('-')) return f_.neg(unary());
        if (eat('+')) return unary();
        return power();
    }

    FieldElement power()
    {
        FieldElement base = atom();
        if (!eat('^')) return base;
        skip();
        bool negative = false;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
            negative = s_[i_] == '-';
            ++i_;
        }
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) ++i_;
        if (start == i_) fail("expected integer exponent");
        long e = std::stol(s_.substr(start, i_ - start));
        if (negative) {
            if (f_.is_zero(base)) throw ExprParseError("division by zero", start);
            e = -e;
        }
        return f_.pow(base, e);
    }

    FieldElement atom()
    {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            FieldElement v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'z' || c == 't') {
            char want = f_.kind() == FieldKind::Finite ? 't' : 'z';
            if (c != want) fail(std::string("symbol '") + c + "' not valid for " + f_.describe());
            ++i_;
            return f_.gen();
        }
        if (std::isdigit((unsigned char)c)) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) ++i_;
            mpz_class v(s_.substr(start, i_ - start));
            return f_.from_rational(mpq_class(v));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    Field const& f_;
    std::string const& s_;
    std::size_t i_ = 0;
};

}  // namespace

FieldElement Field::parse(std::string const& text) const
{
    return ExprParser(*this, text).run();
}

}  // namespace mckayq
