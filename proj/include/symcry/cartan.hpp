#pragma once

// Symmetric Cartan data with a fixed-point-free diagram involution,
// root-lattice weights, and the theta-symmetrized grading.

#include "symcry/rational.hpp"

#include <string>
#include <vector>

namespace symcry {

struct CartanDatum {
    std::vector<std::string> names;           // declared index order
    std::vector<std::vector<long>> pairing;   // (alpha_i, alpha_j)
    std::vector<int> theta;                   // involution on indices
    std::vector<long> lambda;                 // lambda(alpha_i); empty means 0

    // derived by finalize()
    std::vector<int> orbit;      // index -> orbit id, ordered by first occurrence
    std::vector<int> orbit_rep;  // orbit id -> smallest index in the orbit

    int n() const { return static_cast<int>(names.size()); }
    int num_orbits() const { return static_cast<int>(orbit_rep.size()); }
    int index_of(const std::string& name) const;
    long lam(int i) const { return lambda.empty() ? 0 : lambda[static_cast<size_t>(i)]; }

    // empty report = all axioms hold
    std::vector<std::string> validate() const;
    // computes orbits; throws if theta is not a fixed-point-free involution
    void finalize();
};

struct Weight {
    std::vector<long> coords;  // per index
    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;
    long height() const;
};

struct SymWeight {
    std::vector<long> coords;  // per theta-orbit
    bool operator==(const SymWeight&) const = default;
    auto operator<=>(const SymWeight&) const = default;
    long depth() const;
};

SymWeight symmetrize(const Weight& w, const CartanDatum& d);
SymWeight sym_zero(const CartanDatum& d);
SymWeight sym_alpha(int i, const CartanDatum& d);  // symmetrize(alpha_i)
SymWeight sym_add(const SymWeight& a, const SymWeight& b);
// a - b when nonnegative, else nullopt semantics via bool
bool sym_sub(const SymWeight& a, const SymWeight& b, SymWeight& out);

// scalar by which T_j acts on F_{i_1}...F_{i_k} phi_lambda:
// v^{(alpha_j,lambda) - sum_m (alpha_j + alpha_{theta j}, alpha_{i_m})}
RationalFunction t_eigenvalue(int j, const std::vector<int>& word, const CartanDatum& d);
// same, as a function of the symweight (well defined since the pairing is theta-invariant)
RationalFunction t_eigenvalue_sw(int j, const SymWeight& sw, const CartanDatum& d);

}  // namespace symcry
