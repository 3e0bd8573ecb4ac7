#include "symcry/cartan.hpp"

#include <numeric>
#include <stdexcept>

namespace symcry {

int CartanDatum::index_of(const std::string& name) const {
    for (int i = 0; i < n(); ++i)
        if (names[static_cast<size_t>(i)] == name) return i;
    throw std::invalid_argument("unknown index: " + name);
}

std::vector<std::string> CartanDatum::validate() const {
    std::vector<std::string> bad;
    int m = n();
    auto name = [&](int i) { return names[static_cast<size_t>(i)]; };
    if (pairing.size() != static_cast<size_t>(m)) {
        bad.push_back("pairing matrix has wrong shape");
        return bad;
    }
    for (const auto& row : pairing)
        if (row.size() != static_cast<size_t>(m)) {
            bad.push_back("pairing matrix has wrong shape");
            return bad;
        }
    if (theta.size() != static_cast<size_t>(m)) {
        bad.push_back("theta has wrong shape");
        return bad;
    }
    for (int i = 0; i < m; ++i) {
        if (pairing[i][i] != 2) bad.push_back("(alpha_i,alpha_i)=2 violated at " + name(i));
        for (int j = 0; j < m; ++j) {
            if (pairing[i][j] != pairing[j][i])
                bad.push_back("pairing not symmetric at (" + name(i) + "," + name(j) + ")");
            if (i != j && pairing[i][j] > 0)
                bad.push_back("off-diagonal pairing positive at (" + name(i) + "," + name(j) + ")");
        }
    }
    for (int i = 0; i < m; ++i) {
        int ti = theta[static_cast<size_t>(i)];
        if (ti < 0 || ti >= m) {
            bad.push_back("theta out of range at " + name(i));
            continue;
        }
        if (theta[static_cast<size_t>(ti)] != i) bad.push_back("theta^2=id violated at " + name(i));
        if (ti == i) bad.push_back("theta has a fixed point at " + name(i));
        for (int j = 0; j < m; ++j) {
            int tj = theta[static_cast<size_t>(j)];
            if (tj < 0 || tj >= m) continue;
            if (pairing[ti][tj] != pairing[i][j])
                bad.push_back("pairing not theta-invariant at (" + name(i) + "," + name(j) + ")");
        }
    }
    if (!lambda.empty()) {
        if (lambda.size() != static_cast<size_t>(m)) {
            bad.push_back("lambda has wrong shape");
        } else {
            for (int i = 0; i < m; ++i) {
                if (lambda[static_cast<size_t>(i)] < 0)
                    bad.push_back("lambda not dominant at " + name(i));
                int ti = theta[static_cast<size_t>(i)];
                if (ti >= 0 && ti < m && lambda[static_cast<size_t>(ti)] != lambda[static_cast<size_t>(i)])
                    bad.push_back("lambda not theta-fixed at " + name(i));
            }
        }
    }
    return bad;
}

void CartanDatum::finalize() {
    int m = n();
    for (int i = 0; i < m; ++i) {
        int ti = theta.at(static_cast<size_t>(i));
        if (ti < 0 || ti >= m || theta[static_cast<size_t>(ti)] != i || ti == i)
            throw std::invalid_argument("theta is not a fixed-point-free involution");
    }
    orbit.assign(static_cast<size_t>(m), -1);
    orbit_rep.clear();
    for (int i = 0; i < m; ++i) {
        if (orbit[static_cast<size_t>(i)] >= 0) continue;
        int id = static_cast<int>(orbit_rep.size());
        orbit[static_cast<size_t>(i)] = id;
        orbit[static_cast<size_t>(theta[static_cast<size_t>(i)])] = id;
        orbit_rep.push_back(i);
    }
}

long Weight::height() const {
    return std::accumulate(coords.begin(), coords.end(), 0L);
}

long SymWeight::depth() const {
    return std::accumulate(coords.begin(), coords.end(), 0L);
}

SymWeight symmetrize(const Weight& w, const CartanDatum& d) {
    SymWeight s;
    s.coords.assign(static_cast<size_t>(d.num_orbits()), 0);
    for (size_t i = 0; i < w.coords.size(); ++i)
        s.coords[static_cast<size_t>(d.orbit[i])] += w.coords[i];
    return s;
}

SymWeight sym_zero(const CartanDatum& d) {
    SymWeight s;
    s.coords.assign(static_cast<size_t>(d.num_orbits()), 0);
    return s;
}

SymWeight sym_alpha(int i, const CartanDatum& d) {
    SymWeight s = sym_zero(d);
    s.coords[static_cast<size_t>(d.orbit[static_cast<size_t>(i)])] = 1;
    return s;
}

SymWeight sym_add(const SymWeight& a, const SymWeight& b) {
    SymWeight s = a;
    for (size_t i = 0; i < s.coords.size(); ++i) s.coords[i] += b.coords[i];
    return s;
}

bool sym_sub(const SymWeight& a, const SymWeight& b, SymWeight& out) {
    out = a;
    for (size_t i = 0; i < out.coords.size(); ++i) {
        out.coords[i] -= b.coords[i];
        if (out.coords[i] < 0) return false;
    }
    return true;
}

RationalFunction t_eigenvalue(int j, const std::vector<int>& word, const CartanDatum& d) {
    long e = d.lam(j);
    int tj = d.theta[static_cast<size_t>(j)];
    for (int i : word) {
        if (i < 0 || i >= d.n()) throw std::invalid_argument("t_eigenvalue: unknown index");
        e -= d.pairing[static_cast<size_t>(j)][static_cast<size_t>(i)] +
             d.pairing[static_cast<size_t>(tj)][static_cast<size_t>(i)];
    }
    return RationalFunction::monomial(e);
}

RationalFunction t_eigenvalue_sw(int j, const SymWeight& sw, const CartanDatum& d) {
    long e = d.lam(j);
    int tj = d.theta[static_cast<size_t>(j)];
    for (size_t o = 0; o < sw.coords.size(); ++o) {
        int r = d.orbit_rep[o];
        e -= sw.coords[o] * (d.pairing[static_cast<size_t>(j)][static_cast<size_t>(r)] +
                             d.pairing[static_cast<size_t>(tj)][static_cast<size_t>(r)]);
    }
    return RationalFunction::monomial(e);
}

}  // namespace symcry
