#pragma once

// Bar involution on V_theta(0), the lower global basis {G(b)} via exact
// bounded-degree linear solving over Q, balancedness verification, and
// the leading-term/remainder estimate checks.

#include "symcry/crystal.hpp"

#include <map>

namespace symcry {

// coefficient-wise bar in pivot-word coordinates (F-words are bar-fixed)
Vec bar_vector(const Vec& u);

struct GlobalBasisTable {
    std::map<int, Vec> G;       // vertex id -> pivot-word coordinates
    std::map<int, long> usedD;  // vertex id -> solving degree bound
    ExpansionTable expansions;  // filled by compute_expansions
};

// unique bar-invariant u in L with Laurent coefficients of support [-D,D]
// and residue b mod vL; D escalates by +2 from depth(b) up to dmax
Vec solve_global(const ModuleModel& m, const CrystalData& c, const CrystalVertex& b, long dmax,
                 long* used_D = nullptr);

GlobalBasisTable solve_global_all(const ModuleModel& m, const CrystalData& c, long dmax);

// E_i G(b), F_i G(b) expanded over {G(b')} (only where the target level exists)
void compute_expansions(const ModuleModel& m, const CrystalData& c, GlobalBasisTable& t);

// leading terms [eps+1]_v / v^{1-eps} and remainder bounds with bar symmetry
CheckReport verify_estimates(const CrystalGraph& g, const ExpansionTable& t);

// G(b) in L, bar(L), A-span; residues a basis of L/vL; A0-invertible transition
CheckReport verify_balanced(const ModuleModel& m, const CrystalData& c,
                            const GlobalBasisTable& t);

struct AdaptedPath {
    std::vector<std::pair<int, long>> steps;  // (index, divided power), outermost first
    SymWeight sw;
    Vec vec;  // F_{i_1}^{(a_1)} ... F_{i_m}^{(a_m)} phi in pivot coordinates
};

AdaptedPath adapted_monomial(const ModuleModel& m, const CrystalGraph& g, int vertex);

// adapted monomials: leading quantum-binomial coefficient, integral remainder
// on eps-larger vertices, and per-weight spanning
CheckReport verify_adapted(const ModuleModel& m, const CrystalData& c, const GlobalBasisTable& t);

}  // namespace symcry
