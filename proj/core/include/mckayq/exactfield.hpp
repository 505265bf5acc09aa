#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mckayq {

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public FieldError {
public:
    DivisionByZero() : FieldError("division by zero") {}
};

class InvalidAutomorphism : public FieldError {
public:
    explicit InvalidAutomorphism(long a)
        : FieldError("invalid automorphism index " + std::to_string(a)) {}
};

class ExprParseError : public FieldError {
public:
    ExprParseError(std::string const& msg, std::size_t pos)
        : FieldError(msg + " at position " + std::to_string(pos)), pos(pos) {}
    std::size_t pos;
};

enum class FieldKind { Cyclotomic, Finite };

struct FieldSpec {
    FieldKind kind = FieldKind::Cyclotomic;
    long n = 1;               // conductor (cyclotomic)
    long p = 0;               // characteristic (finite)
    int m = 1;                // degree over F_p (finite)
    std::vector<long> modulus; // optional, low-to-high, monic of degree m
};

/* Coordinates in the power basis: zeta_n^0..zeta_n^(phi(n)-1), or
 * t^0..t^(m-1) with integer entries in [0, p). */
struct FieldElement {
    std::vector<mpq_class> c;

    bool operator==(FieldElement const& o) const { return c == o.c; }
    bool operator!=(FieldElement const& o) const { return !(c == o.c); }
    bool operator<(FieldElement const& o) const;
};

enum class NormAnswer { Yes, No, Unknown };

char const* to_string(NormAnswer a);

class Field {
public:
    explicit Field(FieldSpec const& spec);

    static std::shared_ptr<const Field> cyclotomic(long n);
    static std::shared_ptr<const Field> finite(long p, int m, std::vector<long> modulus = {});

    FieldKind kind() const { return spec_.kind; }
    FieldSpec const& spec() const { return spec_; }
    long conductor() const { return spec_.n; }
    long characteristic() const { return kind() == FieldKind::Finite ? spec_.p : 0; }
    int dim() const { return dim_; }
    /* Number of elements of a finite field, 0 otherwise. */
    long size() const { return size_; }
    std::vector<mpz_class> const& modulus() const { return mod_; }
    std::string describe() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement gen() const;
    FieldElement from_int(long v) const;
    FieldElement from_rational(mpq_class const& q) const;
    /* zeta_n^k for cyclotomic fields, t^k for finite fields (k may be negative). */
    FieldElement gen_pow(long k) const;

    FieldElement add(FieldElement const& x, FieldElement const& y) const;
    FieldElement sub(FieldElement const& x, FieldElement const& y) const;
    FieldElement neg(FieldElement const& x) const;
    FieldElement mul(FieldElement const& x, FieldElement const& y) const;
    FieldElement inv(FieldElement const& x) const;
    FieldElement div(FieldElement const& x, FieldElement const& y) const;
    FieldElement pow(FieldElement const& x, long e) const;
    FieldElement scale(FieldElement const& x, mpq_class const& q) const;

    bool is_zero(FieldElement const& x) const;
    bool is_one(FieldElement const& x) const;
    std::optional<mpq_class> rational_value(FieldElement const& x) const;

    bool valid_aut(long a) const;
    long aut_identity() const;
    long aut_compose(long a, long b) const;
    long aut_inverse(long a) const;
    long aut_normalize(long a) const;
    FieldElement apply_aut(long a, FieldElement const& x) const;
    /* Closure of the generators; sorted, identity included. */
    std::vector<long> aut_group(std::vector<long> const& gens) const;

    bool is_fixed(FieldElement const& x, std::vector<long> const& gens) const;
    FieldElement norm(FieldElement const& x, std::vector<long> const& group) const;
    NormAnswer is_norm(FieldElement const& target, std::vector<long> const& group,
                       long bound = 8, long max_candidates = 200000) const;

    /* A generator of the multiplicative group (finite fields only). */
    FieldElement primitive_element() const;
    long multiplicative_order(FieldElement const& x) const;

    std::string to_string(FieldElement const& x) const;
    FieldElement parse(std::string const& text) const;
    std::string key(FieldElement const& x) const;

private:
    void init_cyclotomic();
    void init_finite();
    FieldElement reduce(std::vector<mpq_class> prod) const;
    FieldElement inv_cyclotomic(FieldElement const& x) const;

    FieldSpec spec_;
    int dim_ = 1;
    long size_ = 0;
    std::vector<mpz_class> mod_;                   // monic modulus, low-to-high, length dim+1
    std::vector<std::vector<mpq_class>> high_;      // x^(dim+k) reduced, k = 0..dim-2
    std::vector<FieldElement> zpow_;                // zeta^j for j in [0, n) (cyclotomic)
    std::optional<FieldElement> primitive_;
};

using FieldPtr = std::shared_ptr<const Field>;

/* Plain integer helpers shared by the modules. */
long gcd_l(long a, long b);
long lcm_l(long a, long b);
long mod_l(long a, long m);
long euler_phi(long n);
std::vector<long> prime_factors(long n);
long powmod_l(long b, long e, long m);
long inverse_mod(long a, long m);
bool is_prime_l(long n);

std::vector<mpz_class> cyclotomic_polynomial(long n);

}  // namespace mckayq
