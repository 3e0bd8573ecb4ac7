#include "symcry/crystal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symcry {

namespace {

std::string sw_str(const SymWeight& sw) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < sw.coords.size(); ++i) os << (i ? "," : "") << sw.coords[i];
    os << ")";
    return os.str();
}

Vec scale_vec(const RationalFunction& c, const Vec& u) {
    Vec r = u;
    for (auto& x : r) x *= c;
    return r;
}

Vec sub_vec(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

bool is_zero_vec(const Vec& u) {
    for (const auto& x : u)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

StringDecomposition string_decompose(const ModuleModel& m, int i, const SymWeight& sw,
                                     const Vec& u) {
    const CartanDatum& d = m.datum();
    size_t dim = m.space(sw).dim;
    if (u.size() != dim) throw std::invalid_argument("string_decompose: bad vector size");
    long nmax = sw.coords[static_cast<size_t>(d.orbit[static_cast<size_t>(i)])];
    // candidate family: F_i^{(n)} applied to a kernel basis of E_i at sw - n*gamma_i
    std::vector<std::vector<Vec>> kernels;  // per n
    Mat columns;                            // collected as rows, transposed later
    std::vector<std::pair<long, size_t>> which;
    for (long n = 0; n <= nmax; ++n) {
        SymWeight base = sw;
        for (long t = 0; t < n; ++t) {
            SymWeight next;
            sym_sub(base, sym_alpha(i, d), next);
            base = next;
        }
        const ThetaWeightSpace& bsp = m.space(base);
        std::vector<Vec> ker;
        auto it = bsp.matE.find(i);
        if (it == bsp.matE.end()) {
            for (size_t t = 0; t < bsp.dim; ++t) {
                Vec e(bsp.dim, RationalFunction());
                e[t] = RationalFunction(1);
                ker.push_back(std::move(e));
            }
        } else {
            ker = kernel(it->second);
        }
        for (size_t t = 0; t < ker.size(); ++t) {
            columns.push_back(m.divided_F(i, n, base, ker[t]));
            which.emplace_back(n, t);
        }
        kernels.push_back(std::move(ker));
    }
    if (columns.size() != dim)
        throw std::runtime_error("string_decompose: candidate family is not a basis at " +
                                 sw_str(sw));
    Vec coeffs = solve_square(mat_transpose(columns), u);
    StringDecomposition sd;
    sd.i = i;
    sd.sw = sw;
    sd.parts.assign(static_cast<size_t>(nmax + 1), Vec());
    for (long n = 0; n <= nmax; ++n) {
        SymWeight base = sw;
        for (long t = 0; t < n; ++t) {
            SymWeight next;
            sym_sub(base, sym_alpha(i, d), next);
            base = next;
        }
        sd.parts[static_cast<size_t>(n)].assign(m.space(base).dim, RationalFunction());
    }
    for (size_t c = 0; c < which.size(); ++c) {
        auto [n, t] = which[c];
        if (coeffs[c].is_zero()) continue;
        const Vec& k = kernels[static_cast<size_t>(n)][t];
        Vec& part = sd.parts[static_cast<size_t>(n)];
        for (size_t r = 0; r < k.size(); ++r) part[r] += coeffs[c] * k[r];
    }
    return sd;
}

std::pair<SymWeight, Vec> tilde_F(const ModuleModel& m, int i, const SymWeight& sw, const Vec& u) {
    const CartanDatum& d = m.datum();
    StringDecomposition sd = string_decompose(m, i, sw, u);
    SymWeight up = sym_add(sw, sym_alpha(i, d));
    Vec out(m.space(up).dim, RationalFunction());
    for (size_t n = 0; n < sd.parts.size(); ++n) {
        if (is_zero_vec(sd.parts[n])) continue;
        SymWeight base = sw;
        for (size_t t = 0; t < n; ++t) {
            SymWeight next;
            sym_sub(base, sym_alpha(i, d), next);
            base = next;
        }
        Vec img = m.divided_F(i, static_cast<long>(n) + 1, base, sd.parts[n]);
        for (size_t r = 0; r < out.size(); ++r) out[r] += img[r];
    }
    return {up, out};
}

std::optional<std::pair<SymWeight, Vec>> tilde_E(const ModuleModel& m, int i, const SymWeight& sw,
                                                 const Vec& u) {
    const CartanDatum& d = m.datum();
    SymWeight down;
    if (!sym_sub(sw, sym_alpha(i, d), down)) return std::nullopt;
    StringDecomposition sd = string_decompose(m, i, sw, u);
    Vec out(m.space(down).dim, RationalFunction());
    bool any = false;
    for (size_t n = 1; n < sd.parts.size(); ++n) {
        if (is_zero_vec(sd.parts[n])) continue;
        SymWeight base = sw;
        for (size_t t = 0; t < n; ++t) {
            SymWeight next;
            sym_sub(base, sym_alpha(i, d), next);
            base = next;
        }
        Vec img = m.divided_F(i, static_cast<long>(n) - 1, base, sd.parts[n]);
        for (size_t r = 0; r < out.size(); ++r) out[r] += img[r];
        any = true;
    }
    if (!any || is_zero_vec(out)) return std::nullopt;
    return std::make_pair(down, out);
}

// ---------- Lattice ----------

std::optional<Vec> Lattice::span_coords(const SymWeight& sw, const Vec& u) const {
    auto it = gens_.find(sw);
    size_t k = (it == gens_.end()) ? 0 : it->second.size();
    if (k == 0) return is_zero_vec(u) ? std::optional<Vec>(Vec{}) : std::nullopt;
    const std::vector<Vec>& g = it->second;
    size_t dim = u.size();
    // solve sum a_m g_m = u: dim equations, k unknowns
    Mat aug(dim, Vec(k + 1, RationalFunction()));
    for (size_t r = 0; r < dim; ++r) {
        for (size_t c = 0; c < k; ++c) aug[r][c] = g[c][r];
        aug[r][k] = u[r];
    }
    // gaussian elimination
    size_t row = 0;
    std::vector<long> pivot_row(k, -1);
    for (size_t c = 0; c < k && row < dim; ++c) {
        size_t p = row;
        while (p < dim && aug[p][c].is_zero()) ++p;
        if (p == dim) continue;
        std::swap(aug[p], aug[row]);
        RationalFunction inv = aug[row][c].inverse();
        for (size_t j = c; j <= k; ++j) aug[row][j] *= inv;
        for (size_t r2 = 0; r2 < dim; ++r2) {
            if (r2 == row || aug[r2][c].is_zero()) continue;
            RationalFunction f = aug[r2][c];
            for (size_t j = c; j <= k; ++j) aug[r2][j] -= f * aug[row][j];
        }
        pivot_row[c] = static_cast<long>(row);
        ++row;
    }
    for (size_t r = row; r < dim; ++r)
        if (!aug[r][k].is_zero()) return std::nullopt;
    Vec coords(k, RationalFunction());
    for (size_t c = 0; c < k; ++c)
        if (pivot_row[c] >= 0) coords[c] = aug[static_cast<size_t>(pivot_row[c])][k];
    // generators are independent over Q(v) by construction, so every column pivots;
    // guard anyway
    for (size_t c = 0; c < k; ++c)
        if (pivot_row[c] < 0 && !coords[c].is_zero())
            throw std::logic_error("lattice basis dependent");
    return coords;
}

bool Lattice::contains(const SymWeight& sw, const Vec& u) const {
    auto coords = span_coords(sw, u);
    if (!coords) return false;
    for (const auto& c : *coords) {
        auto o = c.ord();
        if (o.has_value() && *o < 0) return false;
    }
    return true;
}

bool Lattice::contains_in_vL(const SymWeight& sw, const Vec& u) const {
    return contains(sw, scale_vec(RationalFunction::monomial(-1), u));
}

Lattice::Insert Lattice::insert(const SymWeight& sw, const Vec& u) {
    if (is_zero_vec(u)) return Insert::InSpan;
    auto coords = span_coords(sw, u);
    if (!coords) {
        gens_[sw].push_back(u);
        return Insert::NewGenerator;
    }
    long best = 0;
    size_t best_m = 0;
    bool found = false;
    for (size_t mth = 0; mth < coords->size(); ++mth) {
        auto o = (*coords)[mth].ord();
        if (o.has_value() && *o < 0 && (!found || *o < best)) {
            best = *o;
            best_m = mth;
            found = true;
        }
    }
    if (!found) return Insert::InSpan;
    // basis exchange: u replaces the generator with the most negative coordinate ord
    gens_[sw][best_m] = u;
    return Insert::Exchanged;
}

const std::vector<Vec>& Lattice::generators(const SymWeight& sw) const {
    static const std::vector<Vec> empty;
    auto it = gens_.find(sw);
    return it == gens_.end() ? empty : it->second;
}

// ---------- crystal graph ----------

int CrystalGraph::ftilde_vertex(int src, int index) const {
    for (const auto& e : edges)
        if (e.src == src && e.index == index) return e.dst;
    return -1;
}

int CrystalGraph::etilde_vertex(int dst_of, int index) const {
    for (const auto& e : edges)
        if (e.dst == dst_of && e.index == index) return e.src;
    return -1;
}

std::vector<int> CrystalGraph::vertices_at(const SymWeight& sw) const {
    std::vector<int> out;
    for (const auto& v : vertices)
        if (v.sw == sw) out.push_back(v.id);
    return out;
}

CrystalData build_crystal(const ModuleModel& m) {
    const CartanDatum& d = m.datum();
    CrystalData cd;
    struct LevelVec {
        SymWeight sw;
        Vec v;
        int vertex;
    };
    SymWeight sw0 = sym_zero(d);
    Vec phi{RationalFunction(1)};
    cd.lattice.insert(sw0, phi);
    CrystalVertex v0;
    v0.id = 0;
    v0.sw = sw0;
    v0.rep = phi;
    cd.graph.vertices.push_back(v0);
    std::vector<LevelVec> level{{sw0, phi, 0}};

    std::map<std::pair<int, int>, int> edge_of;  // (src vertex, index) -> dst
    for (long n = 1; n <= m.depth(); ++n) {
        struct Image {
            SymWeight sw;
            Vec v;
            int parent;
            int index;
        };
        std::vector<Image> images;
        for (const LevelVec& lv : level)
            for (int i = 0; i < d.n(); ++i) {
                auto [up, w] = tilde_F(m, i, lv.sw, lv.v);
                images.push_back({up, std::move(w), lv.vertex, i});
            }
        // all F-tilde words of this depth generate the lattice at their weights
        for (const Image& im : images) {
            auto r = cd.lattice.insert(im.sw, im.v);
            (void)r;
        }
        // group modulo vL, in deterministic order
        std::vector<LevelVec> next;
        for (const Image& im : images) {
            int vid = -1;
            for (const CrystalVertex& cv : cd.graph.vertices) {
                if (cv.sw != im.sw || cv.sw.depth() != n) continue;
                if (cd.lattice.contains_in_vL(im.sw, sub_vec(im.v, cv.rep))) {
                    vid = cv.id;
                    break;
                }
            }
            if (vid < 0) {
                CrystalVertex cv;
                cv.id = static_cast<int>(cd.graph.vertices.size());
                cv.sw = im.sw;
                cv.rep = im.v;
                cd.graph.vertices.push_back(cv);
                vid = cv.id;
            }
            auto key = std::make_pair(im.parent, im.index);
            auto it = edge_of.find(key);
            if (it == edge_of.end()) {
                edge_of[key] = vid;
                cd.graph.edges.push_back({im.parent, im.index, vid});
            } else if (it->second != vid) {
                cd.anomalies.fail("inconsistent residue class for F-tilde edge from vertex " +
                                  std::to_string(im.parent) + " index " +
                                  d.names[static_cast<size_t>(im.index)]);
            }
            bool dup = false;
            for (const LevelVec& lv : next)
                if (lv.sw == im.sw && lv.v == im.v) {
                    dup = true;
                    break;
                }
            if (!dup) next.push_back({im.sw, im.v, vid});
        }
        level = std::move(next);
    }
    // epsilon by iterating E-tilde
    for (CrystalVertex& cv : cd.graph.vertices) {
        for (int i = 0; i < d.n(); ++i) {
            long count = 0;
            SymWeight sw = cv.sw;
            Vec u = cv.rep;
            while (true) {
                auto r = tilde_E(m, i, sw, u);
                // zero in the crystal means zero in L/vL
                if (!r || cd.lattice.contains_in_vL(r->first, r->second)) break;
                sw = r->first;
                u = std::move(r->second);
                ++count;
            }
            cv.eps[i] = count;
        }
    }
    return cd;
}

CheckReport verify_crystal_axioms(const ModuleModel& m, const CrystalData& c) {
    CheckReport rep;
    const CartanDatum& d = m.datum();
    const Lattice& L = c.lattice;
    for (const CrystalVertex& cv : c.graph.vertices) {
        for (int i = 0; i < d.n(); ++i) {
            if (cv.sw.depth() < m.depth()) {
                // E-tilde F-tilde = id mod vL (checked exactly on representatives
                // where possible, else as residue classes)
                auto [up, fu] = tilde_F(m, i, cv.sw, cv.rep);
                if (!L.contains(up, fu))
                    rep.fail("F-tilde leaves the lattice at vertex " + std::to_string(cv.id));
                auto back = tilde_E(m, i, up, fu);
                if (!back) {
                    rep.fail("E-tilde F-tilde = 0 at vertex " + std::to_string(cv.id));
                } else {
                    if (!(back->first == cv.sw) ||
                        !L.contains_in_vL(cv.sw, sub_vec(back->second, cv.rep)))
                        rep.fail("E-tilde F-tilde != id at vertex " + std::to_string(cv.id));
                }
            }
            auto eu = tilde_E(m, i, cv.sw, cv.rep);
            if (eu && !L.contains(eu->first, eu->second))
                rep.fail("E-tilde leaves the lattice at vertex " + std::to_string(cv.id));
            // E-tilde b = 0 in the crystal means the image lies in vL
            if (eu && L.contains_in_vL(eu->first, eu->second)) eu.reset();
            if (eu) {
                if (eu->first.depth() + 1 <= m.depth()) {
                    auto [back_sw, back_v] = tilde_F(m, i, eu->first, eu->second);
                    if (!(back_sw == cv.sw) ||
                        !L.contains_in_vL(cv.sw, sub_vec(back_v, cv.rep)))
                        rep.fail("F-tilde E-tilde b != b at vertex " + std::to_string(cv.id));
                }
                if (cv.eps.at(i) < 1)
                    rep.fail("eps inconsistent with E-tilde at vertex " + std::to_string(cv.id));
            } else if (cv.eps.at(i) != 0) {
                rep.fail("eps inconsistent at vertex " + std::to_string(cv.id));
            }
        }
    }
    // residues of vertices form a basis of L/vL, and count = dim of the weight space
    std::map<SymWeight, std::vector<int>> by_sw;
    for (const CrystalVertex& cv : c.graph.vertices) by_sw[cv.sw].push_back(cv.id);
    for (const auto& [sw, ids] : by_sw) {
        size_t dim = m.space(sw).dim;
        size_t k = L.generators(sw).size();
        if (ids.size() != dim)
            rep.fail("vertex count != weight-space dim at " + sw_str(sw));
        if (k != dim) rep.fail("lattice rank != weight-space dim at " + sw_str(sw));
        // residue vectors: A0-coordinates of each representative, evaluated at v=0
        QMat residues;
        for (int id : ids) {
            auto coords = L.span_coords(sw, c.graph.vertices[static_cast<size_t>(id)].rep);
            if (!coords) {
                rep.fail("vertex representative outside lattice span at " + sw_str(sw));
                continue;
            }
            QVec row;
            for (const auto& rf : *coords) {
                auto o = rf.ord();
                if (o.has_value() && *o < 0) {
                    rep.fail("vertex representative outside lattice at " + sw_str(sw));
                    row.push_back(0);
                } else {
                    row.push_back(rf.series(0, 0)[0]);
                }
            }
            residues.push_back(std::move(row));
        }
        // rank over Q
        size_t rank = 0;
        QMat a = residues;
        size_t rows = a.size(), cols = rows ? a[0].size() : 0;
        size_t r = 0;
        for (size_t col = 0; col < cols && r < rows; ++col) {
            size_t p = r;
            while (p < rows && a[p][col] == 0) ++p;
            if (p == rows) continue;
            std::swap(a[p], a[r]);
            for (size_t r2 = 0; r2 < rows; ++r2) {
                if (r2 == r || a[r2][col] == 0) continue;
                Rational f = a[r2][col] / a[r][col];
                for (size_t j = col; j < cols; ++j) a[r2][j] -= f * a[r][j];
            }
            ++r;
        }
        rank = r;
        if (rank != ids.size())
            rep.fail("vertex residues dependent in L/vL at " + sw_str(sw));
    }
    if (!c.anomalies.ok)
        for (const auto& f : c.anomalies.failures) rep.fail(f);
    return rep;
}

CheckReport criterion_check(const CrystalGraph& g, const ExpansionTable& t) {
    CheckReport rep;
    rep.notes.push_back(
        "condition (2.4) is evaluated on the coefficient of G(etilde b): the source text "
        "names ftilde b, but weight bookkeeping forces the raised vertex");
    auto eps_of = [&](int b, int i) { return g.vertices[static_cast<size_t>(b)].eps.at(i); };
    for (const auto& [i, table] : t.F) {
        for (const auto& [b, row] : table) {
            long l = eps_of(b, i);
            int fb = g.ftilde_vertex(b, i);
            for (const auto& [bp, coef] : row) {
                if (coef.is_zero()) continue;
                long lp = eps_of(bp, i);
                long o = *coef.ord();
                if (o < 1 - lp)
                    rep.fail("(2.1) ord(F_{b,b'}) >= 1-l' fails at b=" + std::to_string(b) +
                             " b'=" + std::to_string(bp) + " i=" + std::to_string(i) +
                             " [ord=" + std::to_string(o) + "]");
                if (l < lp && bp != fb && o <= 1 - lp)
                    rep.fail("(2.5) strict F bound fails at b=" + std::to_string(b) +
                             " b'=" + std::to_string(bp));
            }
            if (fb >= 0) {
                auto it = row.find(fb);
                RationalFunction lead = (it == row.end()) ? RationalFunction() : it->second;
                if (!lead.in_one_plus_vA0(-l) || lead.is_zero())
                    rep.fail("(2.3) F_{b,ftilde b} not in v^{-l}(1+vA0) at b=" +
                             std::to_string(b) + " i=" + std::to_string(i));
            }
        }
    }
    for (const auto& [i, table] : t.E) {
        for (const auto& [b, row] : table) {
            long l = eps_of(b, i);
            int eb = g.etilde_vertex(b, i);
            for (const auto& [bp, coef] : row) {
                if (coef.is_zero()) continue;
                long lp = eps_of(bp, i);
                long o = *coef.ord();
                if (o < -lp)
                    rep.fail("(2.2) ord(E_{b,b'}) >= -l' fails at b=" + std::to_string(b) +
                             " b'=" + std::to_string(bp) + " i=" + std::to_string(i) +
                             " [ord=" + std::to_string(o) + "]");
                if (l < lp + 1 && bp != eb && o <= -lp)
                    rep.fail("(2.6) strict E bound fails at b=" + std::to_string(b) +
                             " b'=" + std::to_string(bp));
            }
            if (l > 0) {
                if (eb < 0) {
                    rep.fail("etilde vertex missing with eps > 0 at b=" + std::to_string(b));
                    continue;
                }
                auto it = row.find(eb);
                RationalFunction lead = (it == row.end()) ? RationalFunction() : it->second;
                if (lead.is_zero() || !lead.in_one_plus_vA0(1 - l))
                    rep.fail("(2.4) E_{b,etilde b} not in v^{1-l}(1+vA0) at b=" +
                             std::to_string(b) + " i=" + std::to_string(i));
            }
        }
    }
    return rep;
}

}  // namespace symcry
