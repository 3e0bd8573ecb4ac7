#pragma once

// Weight-graded model of U_v^-(g): free algebra on the f_i modulo the
// radical of the Kashiwara form. Needs only a symmetric pairing, so it
// also serves plain (theta-free) Cartan data for oracle checks.

#include "symcry/cartan.hpp"
#include "symcry/linalg.hpp"

#include <map>
#include <vector>

namespace symcry {

using FreeWord = std::vector<int>;                       // f_{i_1} ... f_{i_k}
using FreeComb = std::map<FreeWord, RationalFunction>;   // finite Q(v)-combination

using PairingMatrix = std::vector<std::vector<long>>;

void comb_add(FreeComb& into, const FreeWord& w, const RationalFunction& c);

// e_i'(f_j u) = delta_ij u + v^{-(alpha_i,alpha_j)} f_j e_i'(u); e_i'(1) = 0
FreeComb e_prime(int i, const FreeComb& x, const PairingMatrix& p);

class KashiwaraCache {
public:
    explicit KashiwaraCache(const PairingMatrix& p) : p_(p) {}
    // (1,1)=1, (f_i x, y) = (x, e_i' y); zero across unequal weights
    RationalFunction form(const FreeWord& x, const FreeWord& y);
    RationalFunction form(const FreeComb& x, const FreeComb& y);

private:
    const PairingMatrix& p_;
    std::map<std::pair<FreeWord, FreeWord>, RationalFunction> memo_;
};

// all words with the given letter counts, lexicographic in declared index order
std::vector<FreeWord> words_of_weight(const Weight& w);

struct HalfWeightSpace {
    Weight weight;
    std::vector<FreeWord> words;
    Mat gram;
    std::vector<size_t> pivots;  // indices into words
    size_t dim = 0;              // rank of gram
};

HalfWeightSpace half_weight_space(const Weight& w, const PairingMatrix& p);

// checks sum_k (-1)^k f_i^{(k)} f_j f_i^{(b-k)}, b = 1-(alpha_i,alpha_j),
// pairs to zero against every word of its weight
bool serre_in_radical(int i, int j, const PairingMatrix& p);

// dims of (U_v^- slice of total depth n) / sum U_v^-(f_i - f_{theta i}),
// for n = 0 .. depth
std::vector<long> quotient_by_folding_ideal(long depth, const CartanDatum& d);

// plain dims of U_v^- weight spaces up to total height `depth`
std::map<Weight, long> half_dims_up_to(long depth, const PairingMatrix& p, int nindices);

}  // namespace symcry
