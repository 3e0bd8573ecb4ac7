#pragma once

// i-string decompositions, modified root operators, the crystal lattice
// L_theta(lambda) over A0, the crystal graph B_theta(lambda), and the
// six-condition criterion checker.

#include "symcry/theta_module.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace symcry {

struct StringDecomposition {
    int i;
    SymWeight sw;            // weight of the decomposed vector
    std::vector<Vec> parts;  // parts[n] = u_n in the space sw - n*gamma_i, E_i u_n = 0
};

StringDecomposition string_decompose(const ModuleModel& m, int i, const SymWeight& sw,
                                     const Vec& u);
// F-tilde is total; target is sw + gamma_i (must be built)
std::pair<SymWeight, Vec> tilde_F(const ModuleModel& m, int i, const SymWeight& sw, const Vec& u);
// E-tilde may vanish
std::optional<std::pair<SymWeight, Vec>> tilde_E(const ModuleModel& m, int i, const SymWeight& sw,
                                                 const Vec& u);

// A0-submodule of each weight space, kept as an A0-basis that is linearly
// independent over Q(v); membership = exact solve + ord >= 0 coordinates
class Lattice {
public:
    enum class Insert { InSpan, NewGenerator, Exchanged };

    Insert insert(const SymWeight& sw, const Vec& u);
    bool contains(const SymWeight& sw, const Vec& u) const;
    // coordinates of u in the A0-basis, if u lies in the Q(v)-span
    std::optional<Vec> span_coords(const SymWeight& sw, const Vec& u) const;
    const std::vector<Vec>& generators(const SymWeight& sw) const;
    bool has(const SymWeight& sw) const { return gens_.count(sw) > 0; }

    // u in v*L ?
    bool contains_in_vL(const SymWeight& sw, const Vec& u) const;

private:
    std::map<SymWeight, std::vector<Vec>> gens_;
};

struct CrystalVertex {
    int id = -1;
    SymWeight sw;
    Vec rep;                  // a representative lattice vector
    std::map<int, long> eps;  // per index
};

struct CrystalEdge {
    int src;
    int index;
    int dst;
};

struct CrystalGraph {
    std::vector<CrystalVertex> vertices;
    std::vector<CrystalEdge> edges;

    // -1 when absent
    int ftilde_vertex(int src, int index) const;
    int etilde_vertex(int dst_of, int index) const;  // inverse edge
    std::vector<int> vertices_at(const SymWeight& sw) const;
};

struct CrystalData {
    CrystalGraph graph;
    Lattice lattice;
    CheckReport anomalies;  // inconsistent residue classes etc., never merged silently
};

CrystalData build_crystal(const ModuleModel& m);

// crystal axioms + conjecture checks: EF=id, FE=id where defined, lattice
// stability of the root operators, residues form a basis of L/vL
CheckReport verify_crystal_axioms(const ModuleModel& m, const CrystalData& c);

// expansion coefficients of E_i G(b), F_i G(b) over {G(b')}
struct ExpansionTable {
    // [index i][vertex b][vertex b'] -> coefficient
    std::map<int, std::map<int, std::map<int, RationalFunction>>> E, F;
};

// the six criterion conditions, with witnesses
CheckReport criterion_check(const CrystalGraph& g, const ExpansionTable& t);

}  // namespace symcry
