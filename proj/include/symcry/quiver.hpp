#pragma once

// Theta-quiver combinatorics: validation, orientations, sinks, flag types,
// and the closed-form dimension/shift formulas.

#include <string>
#include <utility>
#include <vector>

namespace symcry {

struct Arrow {
    std::string id;
    int out = -1;
    int in = -1;
};

struct ThetaQuiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<int> bar;      // arrow -> arrow
    std::vector<int> theta_v;  // vertex -> vertex
    std::vector<int> theta_h;  // arrow -> arrow

    int vertex_of(const std::string& name) const;
    int arrow_of(const std::string& id) const;

    // empty = all axioms hold; includes the underlying-quiver axioms
    std::vector<std::string> validate() const;
    // pairing matrix of the underlying symmetric Cartan datum
    std::vector<std::vector<long>> derive_pairing() const;
};

struct Orientation {
    std::vector<int> arrows;  // subset of arrow indices
    bool contains(int h) const;
};

std::vector<std::string> validate_orientation(const ThetaQuiver& q, const Orientation& om);
bool is_sink(const ThetaQuiver& q, const Orientation& om, int vertex);

using DimVector = std::vector<long>;  // per vertex; theta-symmetric

std::vector<std::string> validate_dimvector(const ThetaQuiver& q, const DimVector& d);

// dim thetaE_{V,Omega} = 1/2 sum_{Omega_1} d_out d_in + sum_{Omega_0} d(d-1)/2
long dim_rep_space(const ThetaQuiver& q, const Orientation& om, const DimVector& d);

long shift_F(const ThetaQuiver& q, const Orientation& om, const DimVector& dW, int i);
long shift_E(const ThetaQuiver& q, const Orientation& om, const DimVector& dW, int i);
// divided-power shift d_a
long shift_div(const ThetaQuiver& q, const Orientation& om, const DimVector& dW, int i, long a);

struct FlagType {
    std::vector<int> i;   // 2m indices with theta(i_l) = i_{2m+1-l}
    std::vector<long> a;  // 2m nonneg entries with a_{2m+1-l} = a_l
    std::vector<std::string> validate(const ThetaQuiver& q) const;
};

// M_k for position k (0-based), requires ft.i[k] == i and a_l > 0 wherever i_l == i
long m_k(const ThetaQuiver& q, const Orientation& om, const FlagType& ft, size_t k);
// all restriction terms (modified flag type, shift -2 M_k) for target index i
std::vector<std::pair<FlagType, long>> res_terms(const ThetaQuiver& q, const Orientation& om,
                                                 const FlagType& ft, int i);
// prepend (i,a), append (theta i, a)
FlagType ind_type(const ThetaQuiver& q, const FlagType& ft, int i, long a);

}  // namespace symcry
