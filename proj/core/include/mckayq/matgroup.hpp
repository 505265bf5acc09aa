#pragma once

#include "mckayq/exactfield.hpp"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace mckayq {

struct Matrix {
    int n = 0;
    std::vector<FieldElement> e;  // row-major

    FieldElement& operator()(int i, int j) { return e[std::size_t(i) * n + j]; }
    FieldElement const& operator()(int i, int j) const { return e[std::size_t(i) * n + j]; }
    bool operator==(Matrix const& o) const { return n == o.n && e == o.e; }
};

Matrix mat_identity(Field const& f, int n);
Matrix mat_scalar(Field const& f, int n, FieldElement const& x);
Matrix mat_mul(Field const& f, Matrix const& a, Matrix const& b);
Matrix mat_sub(Field const& f, Matrix const& a, Matrix const& b);
Matrix mat_apply_aut(Field const& f, long a, Matrix const& m);
Matrix mat_inverse(Field const& f, Matrix const& m);
FieldElement mat_det(Field const& f, Matrix const& m);
FieldElement mat_trace(Field const& f, Matrix const& m);
int mat_rank(Field const& f, Matrix m);
/* p-th compound matrix: p x p minors indexed by sorted p-subsets. */
Matrix mat_compound(Field const& f, Matrix const& m, int p);
std::string mat_to_string(Field const& f, Matrix const& m);

struct GroupElement {
    Matrix matrix;
    long aut = 1;
};

class GroupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CapExceeded : public GroupError {
public:
    explicit CapExceeded(std::size_t cap)
        : GroupError("group closure exceeds cap of " + std::to_string(cap) + " elements") {}
};

class CharDividesOrder : public GroupError {
public:
    CharDividesOrder(long p, std::size_t order)
        : GroupError("characteristic " + std::to_string(p) + " divides |G| = " +
                     std::to_string(order)) {}
};

class NotSurjectiveOntoGalois : public GroupError {
public:
    using GroupError::GroupError;
};

class FiniteGroup {
public:
    /* Breadth-first closure from the identity, generators in input order. */
    static FiniteGroup generate(FieldPtr field, int d, std::vector<GroupElement> const& gens,
                                std::size_t cap = 100000);

    std::size_t size() const { return elems_.size(); }
    int d() const { return d_; }
    Field const& field() const { return *field_; }
    FieldPtr field_ptr() const { return field_; }
    GroupElement const& element(int i) const { return elems_[i]; }
    std::vector<int> const& generator_indices() const { return gen_idx_; }

    GroupElement multiply(GroupElement const& x, GroupElement const& y) const;

    int mul(int i, int j) const;
    int inv(int i) const;
    int pow(int i, long e) const;
    int order(int i) const;
    int index_of(GroupElement const& g) const;

private:
    std::string key(GroupElement const& g) const;

    FieldPtr field_;
    int d_ = 0;
    std::vector<GroupElement> elems_;
    std::vector<int> gen_idx_;
    std::vector<std::vector<int>> right_;      // right_[g][x] = x * gen_g
    std::vector<std::vector<int>> right_inv_;  // right_inv_[g][x] = x * gen_g^{-1}
    std::vector<std::vector<int>> word_;
    std::vector<int> table_;                   // full Cayley table when small
    std::vector<int> inv_;
    std::unordered_map<std::string, int> index_;
};

/* H = G cap GL_d(l), its conjugacy classes, and G/H coset representatives. */
struct Kernel {
    std::vector<int> elems;                 // G indices, BFS order
    std::vector<int> local;                 // G index -> H index or -1
    std::vector<int> cosets;                // G indices, identity first
    std::vector<long> coset_auts;
    std::vector<long> galois;               // declared Galois group, sorted
    std::vector<std::vector<int>> classes;  // H indices, ordered by least member
    std::vector<int> class_of;              // H index -> class
    std::vector<int> mul;                   // |H| x |H| table on H indices
    std::vector<int> inv;
    std::vector<int> order;

    std::size_t size() const { return elems.size(); }
    int hmul(int a, int b) const { return mul[std::size_t(a) * elems.size() + b]; }
    long exponent() const;
    bool is_abelian() const;
};

Kernel kernel_and_cosets(FiniteGroup const& G, std::vector<long> const& galois_gens);

bool is_pseudo_reflection(Field const& f, Matrix const& a);
/* Index (into K.elems) of a non-identity pseudo-reflection, or -1 if H is small. */
int find_pseudo_reflection(FiniteGroup const& G, Kernel const& K);
bool is_small(FiniteGroup const& G, Kernel const& K);
bool gorenstein_flag(FiniteGroup const& G, Kernel const& K);
bool isolated_flag(FiniteGroup const& G, Kernel const& K);

}  // namespace mckayq
