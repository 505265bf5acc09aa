#pragma once

#include "mckayq/skewsolve.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mckayq {

class ValuationNonIntegral : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValuationMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuiverVertex {
    std::string label;
    long rank = 1;
    bool is_r = false;
    bool is_omega = false;
    bool is_projective = false;
};

struct Arrow {
    int src = 0;
    int dst = 0;
    long d = 0;
    long dp = 0;
};

struct ValuedQuiver {
    std::vector<QuiverVertex> vertices;
    std::vector<std::vector<std::pair<long, long>>> val;  // val[x][y] = (d, d') of x -> y
    std::vector<int> nu;
    int r = 0;
    int omega = 0;

    std::size_t size() const { return vertices.size(); }
    std::vector<Arrow> arrows() const;
    bool nu_is_identity() const;
};

/* McKay quiver of lH: d(W,W') = <W, U W'>, d'(W,W') = [W' : wedge^{d-1}U (det^{-1} W)]. */
ValuedQuiver mckay_H(FiniteGroup const& G, Kernel const& K, CharacterTable const& T);

/* Quotient quiver over the orbits with the a-weighted valuations; also sets nu and omega. */
ValuedQuiver mckay_G(FiniteGroup const& G, Kernel const& K, CharacterTable const& T,
                     SkewData const& S, ValuedQuiver const& qH);

/* Recomputes every valuation from G-module characters and throws ValuationMismatch on
 * disagreement with the quotient formula. */
void cross_check_valuations(FiniteGroup const& G, Kernel const& K, CharacterTable const& T,
                            SkewData const& S, ValuedQuiver const& q);

/* nu(V) = orbit of det(U) (x) V. */
std::vector<int> nakayama(FiniteGroup const& G, Kernel const& K, CharacterTable const& T,
                          SkewData const& S);

struct AlmostSplitSequence {
    int target = 0;
    std::vector<std::vector<long>> terms;  // terms[p] = multiplicities of wedge^p U (x) V
    bool fundamental = false;
};

std::vector<AlmostSplitSequence> almost_split_sequences(FiniteGroup const& G, Kernel const& K,
                                                        CharacterTable const& T,
                                                        SkewData const& S);

long alternating_rank_sum(SkewData const& S, AlmostSplitSequence const& s);

/* Text of one term, e.g. "V0^2 + V3". */
std::string term_string(ValuedQuiver const& q, std::vector<long> const& mult);
/* Terms from C_d down to C_0, as the quiver figures list them. */
std::string sequence_string(ValuedQuiver const& q, AlmostSplitSequence const& s);

struct DynkinType {
    std::string family = "unknown";  // e.g. "Cn~"
    int n = 0;
    std::string reason;

    std::string name() const;
};

DynkinType recognize_type(ValuedQuiver const& q, int d, bool gorenstein);

/* Families known to the recognizer, including those that never occur. */
std::vector<std::string> dynkin_families();

std::string emit_dot(ValuedQuiver const& q, bool show_nu = false);

}  // namespace mckayq
