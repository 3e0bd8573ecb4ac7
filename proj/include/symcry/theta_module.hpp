#pragma once

// V_theta(lambda): free F-word module with the B_theta straightening rule,
// contravariant form, radical quotient, weight-space bases and operator
// matrices, divided powers, relation/highest-weight verification.

#include "symcry/cartan.hpp"
#include "symcry/half_quantum.hpp"
#include "symcry/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symcry {

// E_i applied to the F-word F_{w_0}...F_{w_k} phi, as a free combination
FreeComb apply_E_free(int i, const FreeWord& word, const CartanDatum& d);

class ContravariantCache {
public:
    explicit ContravariantCache(const CartanDatum& d) : d_(d) {}
    RationalFunction form(const FreeWord& x, const FreeWord& y);
    const FreeComb& e_img(int i, const FreeWord& w);

private:
    const CartanDatum& d_;
    std::map<std::pair<FreeWord, FreeWord>, RationalFunction> fmemo_;
    std::map<std::pair<int, FreeWord>, FreeComb> ememo_;
};

RationalFunction contravariant_form(const FreeWord& x, const FreeWord& y, const CartanDatum& d);

// all F-words of the given symweight, lexicographic in declared index order
std::vector<FreeWord> words_of_symweight(const SymWeight& sw, const CartanDatum& d);

struct ThetaWeightSpace {
    SymWeight sw;
    std::vector<FreeWord> words;
    Mat gram;                    // full word Gram
    std::vector<size_t> pivots;  // leftmost independent columns
    size_t dim = 0;
    Mat pivot_gram;                        // pivots x pivots
    std::map<FreeWord, Vec> word_coords;   // word -> pivot coordinates mod radical
    std::map<int, Mat> matF;               // i -> dim(sw+gamma_i) x dim
    std::map<int, Mat> matE;               // i -> dim(sw-gamma_i) x dim

    Vec coords_of(const FreeComb& comb) const;
};

struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

class ModuleModel {
public:
    ModuleModel(CartanDatum d, long depth, int jobs = 1);

    const CartanDatum& datum() const { return d_; }
    long depth() const { return depth_; }
    const std::map<SymWeight, ThetaWeightSpace>& spaces() const { return spaces_; }
    bool has_space(const SymWeight& sw) const { return spaces_.count(sw) > 0; }
    const ThetaWeightSpace& space(const SymWeight& sw) const;
    long dim_at_depth(long n) const;

    std::optional<SymWeight> sym_after_F(int i, const SymWeight& sw) const;  // sw + gamma_i, if built
    std::optional<SymWeight> sym_after_E(int i, const SymWeight& sw) const;  // sw - gamma_i, if valid

    // operators on pivot-coordinate vectors; E into an invalid weight is zero
    // (returned as a vector in the zero space, size 0, flagged by the optional)
    Vec apply_F(int i, const SymWeight& sw, const Vec& u) const;
    Vec apply_E(int i, const SymWeight& sw, const Vec& u) const;
    Vec divided_F(int i, long a, const SymWeight& sw, const Vec& u) const;

    // allows injecting corrupted matrices for negative-control tests
    ThetaWeightSpace& mutable_space(const SymWeight& sw);

private:
    CartanDatum d_;
    long depth_;
    std::map<SymWeight, ThetaWeightSpace> spaces_;
    void build(int jobs);
};

// exact matrix-identity checks of the B_theta defining relations on every
// expressible weight-space instance
CheckReport verify_relations(const ModuleModel& m);
// joint kernel of all E_i trivial in every positive-depth space
CheckReport highest_weight_check(const ModuleModel& m);
// F_i F_i^{(a)} = [a+1]_v F_i^{(a+1)} as matrices, a <= amax
CheckReport verify_divided_power(const ModuleModel& m, long amax = 3);
// (E_i u, w) = (u, F_i w) as a matrix identity on every adjacent pair
CheckReport verify_adjointness(const ModuleModel& m);

}  // namespace symcry
