#include "symcry/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace symcry {

int ThetaQuiver::vertex_of(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown vertex: " + name);
}

int ThetaQuiver::arrow_of(const std::string& id) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id == id) return static_cast<int>(i);
    throw std::invalid_argument("unknown arrow: " + id);
}

std::vector<std::string> ThetaQuiver::validate() const {
    std::vector<std::string> bad;
    int nv = static_cast<int>(vertices.size());
    int nh = static_cast<int>(arrows.size());
    auto vname = [&](int v) { return vertices[static_cast<size_t>(v)]; };
    auto ok_v = [&](int v) { return v >= 0 && v < nv; };
    auto ok_h = [&](int h) { return h >= 0 && h < nh; };
    if (bar.size() != static_cast<size_t>(nh) || theta_h.size() != static_cast<size_t>(nh) ||
        theta_v.size() != static_cast<size_t>(nv)) {
        bad.push_back("bar/theta maps have wrong shape");
        return bad;
    }
    for (int h = 0; h < nh; ++h) {
        const Arrow& ar = arrows[static_cast<size_t>(h)];
        if (!ok_v(ar.out) || !ok_v(ar.in)) {
            bad.push_back("arrow " + ar.id + " has an unknown endpoint");
            continue;
        }
        if (ar.out == ar.in) bad.push_back("loop at " + vname(ar.out) + " (out=in forbidden)");
        int hb = bar[static_cast<size_t>(h)];
        if (!ok_h(hb)) {
            bad.push_back("bar out of range at " + ar.id);
            continue;
        }
        const Arrow& ab = arrows[static_cast<size_t>(hb)];
        if (bar[static_cast<size_t>(hb)] != h) bad.push_back("bar^2=id violated at " + ar.id);
        if (hb == h) bad.push_back("bar-fixed arrow " + ar.id);
        if (ab.out != ar.in || ab.in != ar.out)
            bad.push_back("bar does not reverse arrow " + ar.id);
    }
    for (int v = 0; v < nv; ++v) {
        int tv = theta_v[static_cast<size_t>(v)];
        if (!ok_v(tv)) {
            bad.push_back("theta_v out of range at " + vname(v));
            continue;
        }
        if (theta_v[static_cast<size_t>(tv)] != v) bad.push_back("theta_v^2=id violated at " + vname(v));
        if (tv == v) bad.push_back("theta-fixed vertex " + vname(v));
    }
    for (int h = 0; h < nh; ++h) {
        const Arrow& ar = arrows[static_cast<size_t>(h)];
        if (!ok_v(ar.out) || !ok_v(ar.in)) continue;
        int th = theta_h[static_cast<size_t>(h)];
        if (!ok_h(th)) {
            bad.push_back("theta_h out of range at " + ar.id);
            continue;
        }
        const Arrow& at = arrows[static_cast<size_t>(th)];
        if (theta_h[static_cast<size_t>(th)] != h) bad.push_back("theta_h^2=id violated at " + ar.id);
        // (a): out(theta h) = theta(in h), in(theta h) = theta(out h)
        if (at.out != theta_v[static_cast<size_t>(ar.in)] ||
            at.in != theta_v[static_cast<size_t>(ar.out)])
            bad.push_back("theta_h incompatible with theta_v at " + ar.id);
        // (b): theta(out h) = in h forces theta h = h
        if (theta_v[static_cast<size_t>(ar.out)] == ar.in && th != h)
            bad.push_back("arrow " + ar.id + " must be theta-fixed (theta(out)=in)");
        // (c): theta(bar h) = bar(theta h)
        if (theta_h[static_cast<size_t>(bar[static_cast<size_t>(h)])] !=
            bar[static_cast<size_t>(th)])
            bad.push_back("theta_h does not commute with bar at " + ar.id);
    }
    return bad;
}

std::vector<std::vector<long>> ThetaQuiver::derive_pairing() const {
    size_t nv = vertices.size();
    std::vector<std::vector<long>> p(nv, std::vector<long>(nv, 0));
    for (size_t i = 0; i < nv; ++i) p[i][i] = 2;
    for (const Arrow& ar : arrows)
        if (ar.out != ar.in)
            p[static_cast<size_t>(ar.out)][static_cast<size_t>(ar.in)] -= 1;
    return p;
}

bool Orientation::contains(int h) const {
    return std::find(arrows.begin(), arrows.end(), h) != arrows.end();
}

std::vector<std::string> validate_orientation(const ThetaQuiver& q, const Orientation& om) {
    std::vector<std::string> bad;
    std::vector<int> mark(q.arrows.size(), 0);
    for (int h : om.arrows) {
        if (h < 0 || h >= static_cast<int>(q.arrows.size())) {
            bad.push_back("orientation references unknown arrow");
            return bad;
        }
        if (mark[static_cast<size_t>(h)]++) bad.push_back("duplicate arrow in orientation");
    }
    for (size_t h = 0; h < q.arrows.size(); ++h) {
        bool in_om = mark[h] > 0;
        bool bar_in = mark[static_cast<size_t>(q.bar[h])] > 0;
        if (in_om && bar_in) bad.push_back("Omega meets bar(Omega) at " + q.arrows[h].id);
        if (!in_om && !bar_in) bad.push_back("Omega union bar(Omega) misses " + q.arrows[h].id);
        if (in_om && !mark[static_cast<size_t>(q.theta_h[h])])
            bad.push_back("Omega not theta-stable at " + q.arrows[h].id);
    }
    return bad;
}

bool is_sink(const ThetaQuiver& q, const Orientation& om, int vertex) {
    for (int h : om.arrows)
        if (q.arrows[static_cast<size_t>(h)].out == vertex) return false;
    return true;
}

std::vector<std::string> validate_dimvector(const ThetaQuiver& q, const DimVector& d) {
    std::vector<std::string> bad;
    if (d.size() != q.vertices.size()) {
        bad.push_back("dimension vector has wrong shape");
        return bad;
    }
    for (size_t v = 0; v < d.size(); ++v) {
        if (d[v] < 0) bad.push_back("negative dimension at " + q.vertices[v]);
        if (d[v] != d[static_cast<size_t>(q.theta_v[v])])
            bad.push_back("dimension not theta-symmetric at " + q.vertices[v]);
    }
    return bad;
}

long dim_rep_space(const ThetaQuiver& q, const Orientation& om, const DimVector& d) {
    long twice_omega1 = 0;  // sum over Omega_1 comes in theta-pairs
    long fixed = 0;
    for (int h : om.arrows) {
        const Arrow& ar = q.arrows[static_cast<size_t>(h)];
        long prod = d[static_cast<size_t>(ar.out)] * d[static_cast<size_t>(ar.in)];
        if (q.theta_h[static_cast<size_t>(h)] == h)
            fixed += d[static_cast<size_t>(ar.out)] * (d[static_cast<size_t>(ar.out)] - 1) / 2;
        else
            twice_omega1 += prod;
    }
    if (twice_omega1 % 2 != 0) throw std::logic_error("Omega_1 contribution not even");
    return twice_omega1 / 2 + fixed;
}

long shift_F(const ThetaQuiver& q, const Orientation& om, const DimVector& dW, int i) {
    long s = dW[static_cast<size_t>(i)];
    for (int h : om.arrows) {
        const Arrow& ar = q.arrows[static_cast<size_t>(h)];
        if (ar.out == i) s += dW[static_cast<size_t>(ar.in)];
    }
    return s;
}

long shift_E(const ThetaQuiver& q, const Orientation& om, const DimVector& dW, int i) {
    return shift_F(q, om, dW, i) - 2 * dW[static_cast<size_t>(i)];
}

long shift_div(const ThetaQuiver& q, const Orientation& om, const DimVector& dW, int i, long a) {
    if (a < 0) throw std::invalid_argument("shift_div: a >= 0 required");
    long base = dW[static_cast<size_t>(i)];
    long to_theta = 0;
    int ti = q.theta_v[static_cast<size_t>(i)];
    for (int h : om.arrows) {
        const Arrow& ar = q.arrows[static_cast<size_t>(h)];
        if (ar.out == i) {
            base += dW[static_cast<size_t>(ar.in)];
            if (ar.in == ti) ++to_theta;
        }
    }
    return a * base + a * (a - 1) / 2 * to_theta;
}

std::vector<std::string> FlagType::validate(const ThetaQuiver& q) const {
    std::vector<std::string> bad;
    size_t len = i.size();
    if (a.size() != len || len % 2 != 0) {
        bad.push_back("flag type has wrong shape");
        return bad;
    }
    for (size_t l = 0; l < len; ++l) {
        if (i[l] < 0 || i[l] >= static_cast<int>(q.vertices.size())) {
            bad.push_back("flag type references unknown vertex");
            return bad;
        }
        if (a[l] < 0) bad.push_back("negative multiplicity in flag type");
        if (q.theta_v[static_cast<size_t>(i[l])] != i[len - 1 - l])
            bad.push_back("flag type indices not theta-symmetric");
        if (a[l] != a[len - 1 - l]) bad.push_back("flag type multiplicities not symmetric");
    }
    return bad;
}

namespace {

std::vector<long> a_mod(const FlagType& ft, size_t k) {
    std::vector<long> am = ft.a;
    size_t len = ft.a.size();
    am[k] -= 1;
    am[len - 1 - k] -= 1;  // for the middle pair k = len-1-k this subtracts twice, but
                           // that case cannot occur: theta(i_k) = i_{len-1-k} = i_k is
                           // excluded by the fixed-point-free vertex involution
    return am;
}

long arrow_count(const ThetaQuiver& q, const Orientation& om, int from, int to) {
    long c = 0;
    for (int h : om.arrows) {
        const Arrow& ar = q.arrows[static_cast<size_t>(h)];
        if (ar.out == from && ar.in == to) ++c;
    }
    return c;
}

}  // namespace

long m_k(const ThetaQuiver& q, const Orientation& om, const FlagType& ft, size_t k) {
    if (k >= ft.i.size()) throw std::invalid_argument("m_k: position out of range");
    int i = ft.i[k];
    for (size_t l = 0; l < ft.i.size(); ++l)
        if (ft.i[l] == i && ft.a[l] <= 0)
            throw std::invalid_argument("m_k: requires a_l > 0 wherever i_l = i");
    std::vector<long> am = a_mod(ft, k);
    long m = 0;
    for (size_t l = 0; l < k; ++l)
        if (ft.i[l] == i) m += am[l];
    for (size_t l = k + 1; l < ft.i.size(); ++l)
        m += arrow_count(q, om, i, ft.i[l]) * am[l];
    return m;
}

std::vector<std::pair<FlagType, long>> res_terms(const ThetaQuiver& q, const Orientation& om,
                                                 const FlagType& ft, int i) {
    std::vector<std::pair<FlagType, long>> out;
    for (size_t k = 0; k < ft.i.size(); ++k) {
        if (ft.i[k] != i) continue;
        FlagType t{ft.i, a_mod(ft, k)};
        out.emplace_back(std::move(t), -2 * m_k(q, om, ft, k));
    }
    return out;
}

FlagType ind_type(const ThetaQuiver& q, const FlagType& ft, int i, long a) {
    FlagType t;
    t.i.reserve(ft.i.size() + 2);
    t.a.reserve(ft.a.size() + 2);
    t.i.push_back(i);
    t.i.insert(t.i.end(), ft.i.begin(), ft.i.end());
    t.i.push_back(q.theta_v[static_cast<size_t>(i)]);
    t.a.push_back(a);
    t.a.insert(t.a.end(), ft.a.begin(), ft.a.end());
    t.a.push_back(a);
    return t;
}

}  // namespace symcry
