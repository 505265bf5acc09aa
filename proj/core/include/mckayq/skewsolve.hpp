#pragma once

#include "mckayq/chartab.hpp"

#include <string>
#include <vector>

namespace mckayq {

class OrbitInconsistent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonDivisible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InconsistentConstraints : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* One Galois orbit of simp lH, i.e. one simple l*G-module V. */
struct OrbitDatum {
    std::vector<int> members;  // irreducible indices, ascending
    int t = 1;
    long dim_w = 1;
    long a = 0;                // 0 while unresolved
    long b = 0;
    std::vector<long> candidates;  // remaining values of a
    std::string provenance;        // solver layer that fixed a
    std::vector<std::string> trace;
    std::string label;

    bool solved() const { return a > 0; }
    long rank() const { return t * a * dim_w; }
};

struct SkewOptions {
    int saturation_iterations = 32;
    long saturation_degree = 4096;
    long norm_search_bound = 8;
    long extension_search_cap = 1000000;
};

struct SkewData {
    long degree = 1;                         // [l:k]
    std::vector<OrbitDatum> orbits;
    std::vector<int> orbit_of;               // irreducible -> orbit
    std::vector<std::vector<int>> twist;     // coset -> permutation of irreducibles
    int saturation_steps = 0;
    std::size_t saturation_characters = 0;

    bool ambiguous() const;
};

/* Irreducible permutation induced by each coset representative. */
std::vector<std::vector<int>> twist_permutations(FiniteGroup const& G, Kernel const& K,
                                                 CharacterTable const& T);

/* Orbits of the twist action, ordered by least member; t and dim only. */
SkewData compute_orbits(FiniteGroup const& G, Kernel const& K, CharacterTable const& T);

/* Layered determination of the restriction multiplicities a (and b = [l:k]/(t a)). */
void solve_multiplicities(SkewData& S, FiniteGroup const& G, Kernel const& K,
                          CharacterTable const& T, SkewOptions const& opt = {});

/* Per-orbit coefficients of a character, checked to be constant on orbits. */
std::vector<long> orbit_coefficients(SkewData const& S, CharacterTable const& T,
                                     Character const& chi);

/* Multiplicity of each V_i in a G-module X from the character of Res X. */
std::vector<long> gmodule_multiplicities(SkewData const& S, CharacterTable const& T,
                                         Character const& res_x);

/* Character of Res V_i. */
Character restriction_character(SkewData const& S, CharacterTable const& T, int orbit);

/* Semilinear extensions of a linear G-stable character, searched over roots of
 * unity in l. Returns the number found (stops at the first when first_only). */
long count_root_of_unity_extensions(FiniteGroup const& G, Kernel const& K, CharacterTable const& T,
                                    int irreducible, bool first_only, long cap);

struct ClassGroup {
    std::vector<int> elements;               // orbit indices, identity first
    std::vector<std::vector<int>> table;     // positions into elements
    std::vector<long> invariant_factors;     // empty = trivial group
    std::string describe() const;
};

ClassGroup class_group(SkewData const& S, CharacterTable const& T);

/* Res Ind W = sum over cosets of g.W, compared with (a b) times the orbit sum. */
bool res_ind_identity(SkewData const& S, FiniteGroup const& G, Kernel const& K,
                      CharacterTable const& T, int orbit);

}  // namespace mckayq
