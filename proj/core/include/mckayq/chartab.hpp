#pragma once

#include "mckayq/matgroup.hpp"

#include <string>
#include <vector>

namespace mckayq {

/* One value per conjugacy class of H. */
using Character = std::vector<FieldElement>;

class SplitFieldTooSmall : public std::runtime_error {
public:
    SplitFieldTooSmall(std::string const& msg, long exponent, long suggestion)
        : std::runtime_error(msg), exponent(exponent), suggestion(suggestion) {}
    long exponent;
    long suggestion;  // minimal conductor n' (cyclotomic) or degree m' (finite)
};

class NonIntegralMultiplicity : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class TableMethod { Auto, Abelian, Dixon };

struct CharacterTable {
    FieldPtr cf;            // values live in Q(zeta_N)
    long conductor = 1;     // N
    long order = 1;         // |H|
    std::vector<int> class_size;
    std::vector<int> class_rep;    // H index
    std::vector<int> class_inv;
    std::vector<int> class_order;
    std::vector<Character> irr;
    std::string method;

    std::size_t num_classes() const { return class_size.size(); }
    std::size_t size() const { return irr.size(); }
    long degree(std::size_t i) const;
};

/* Conductor N of the character field; throws SplitFieldTooSmall when l does not split H. */
long character_conductor(FiniteGroup const& G, Kernel const& K);

CharacterTable character_table(FiniteGroup const& G, Kernel const& K,
                               TableMethod method = TableMethod::Auto);

/* The automorphism of the character field induced by an automorphism of l. */
long character_field_aut(FiniteGroup const& G, CharacterTable const& T, long l_aut);

Character wedge_power_of_standard(FiniteGroup const& G, Kernel const& K, CharacterTable const& T,
                                  int p);
Character standard_character(FiniteGroup const& G, Kernel const& K, CharacterTable const& T);

Character zero_character(CharacterTable const& T);
Character trivial_character(CharacterTable const& T);
Character regular_character(CharacterTable const& T);
Character tensor_char(CharacterTable const& T, Character const& a, Character const& b);
Character add_char(CharacterTable const& T, Character const& a, Character const& b);
Character scale_char(CharacterTable const& T, Character const& a, long k);
Character dual_char(CharacterTable const& T, Character const& a);

mpq_class inner_product_value(CharacterTable const& T, Character const& a, Character const& b);
/* <a, b>, required to be a nonnegative integer. */
long inner_product(CharacterTable const& T, Character const& a, Character const& b);
/* Multiplicity of each irreducible; the reconstruction is checked. */
std::vector<long> decompose(CharacterTable const& T, Character const& chi);
int irreducible_index(CharacterTable const& T, Character const& chi);

/* (g.chi)(h) = sigma_{aut g}(chi(g^{-1} h g)) for g a G index. */
Character galois_twist(FiniteGroup const& G, Kernel const& K, CharacterTable const& T,
                       Character const& chi, int g);

std::vector<std::string> character_strings(CharacterTable const& T, Character const& chi);

}  // namespace mckayq
