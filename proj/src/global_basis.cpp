#include "symcry/global_basis.hpp"

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

bool is_zero_vec(const Vec& u) {
    for (const auto& x : u)
        if (!x.is_zero()) return false;
    return true;
}

Mat invert(const Mat& a) {
    size_t n = a.size();
    Mat inv(n, Vec(n, RationalFunction()));
    for (size_t j = 0; j < n; ++j) {
        Vec e(n, RationalFunction());
        e[j] = RationalFunction(1);
        Vec col = solve_square(a, e);
        for (size_t r = 0; r < n; ++r) inv[r][j] = col[r];
    }
    return inv;
}

// columns = lattice generators
Mat gen_matrix(const Lattice& L, const SymWeight& sw, size_t dim) {
    const auto& gens = L.generators(sw);
    Mat g(dim, Vec(gens.size(), RationalFunction()));
    for (size_t c = 0; c < gens.size(); ++c)
        for (size_t r = 0; r < dim; ++r) g[r][c] = gens[c][r];
    return g;
}

// denominator bound used by the integrality report: any element of the
// Z[v,v^-1]-span of divided-power monomials has pivot coordinates in
// (1/Q) Z[v,v^-1] with Q = prod_orbits [mult]_v!; Q is bar-symmetric
RationalFunction coord_denominator(const SymWeight& sw) {
    LaurentPoly q = LaurentPoly::one();
    for (long mult : sw.coords) q = q * qfact(mult);
    return RationalFunction(q);
}

// product of [len]_v! over maximal runs: the word divided by this scalar is the
// corresponding divided-power monomial
LaurentPoly run_scale(const FreeWord& w) {
    LaurentPoly q = LaurentPoly::one();
    size_t t = 0;
    while (t < w.size()) {
        size_t s = t;
        while (t < w.size() && w[t] == w[s]) ++t;
        q = q * qfact(static_cast<long>(t - s));
    }
    return q;
}

// ---- dense polynomials over Q with nonzero constant term allowed at [0] ----
using DPoly = std::vector<Rational>;

void dtrim(DPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

DPoly dmul(const DPoly& a, const DPoly& b) {
    if (a.empty() || b.empty()) return {};
    DPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// division with remainder in Q[v]
std::pair<DPoly, DPoly> ddivmod(DPoly a, const DPoly& b) {
    if (b.empty()) throw std::invalid_argument("ddivmod: division by zero");
    DPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        dtrim(a);
        if (a.empty()) break;
        while (a.size() >= b.size() && a.back() == 0) a.pop_back();
    }
    return {q, a};
}

DPoly dgcd(DPoly a, DPoly b) {
    dtrim(a);
    dtrim(b);
    while (!b.empty()) {
        DPoly r = ddivmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;  // monic
    }
    return a;
}

DPoly dlcm(const DPoly& a, const DPoly& b) {
    if (a.empty() || b.empty()) return {};
    auto [q, r] = ddivmod(dmul(a, b), dgcd(a, b));
    if (!r.empty()) throw std::logic_error("dlcm: gcd does not divide product");
    Rational lead = q.back();
    for (auto& c : q) c /= lead;
    return q;
}

LaurentPoly dp_to_lp(const DPoly& p) {
    LaurentPoly r;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) r.set_coeff(static_cast<long>(i), p[i]);
    return r;
}

// A Q[v,v^-1]-basis of the A-span of divided-power monomials at sw, expressed
// in pivot-word coordinates. Columns are delta * (coordinates of basis
// vectors), all Laurent; the actual basis vectors are cols/delta.
struct ASpan {
    std::vector<std::vector<LaurentPoly>> cols;
    LaurentPoly delta;
};

long lp_norm(const LaurentPoly& p) { return p.max_exp() - p.min_exp(); }

ASpan a_span_basis(const ModuleModel& m, const SymWeight& sw) {
    const ThetaWeightSpace& sp = m.space(sw);
    size_t dim = sp.dim;
    // divided-monomial coordinates over pivot words, one column per word
    std::vector<Vec> raw;
    raw.reserve(sp.words.size());
    for (const FreeWord& w : sp.words) {
        RationalFunction scale(run_scale(w));
        Vec col = sp.word_coords.at(w);
        for (auto& x : col) x /= scale;
        raw.push_back(std::move(col));
    }
    // common denominator (monic, nonzero constant term by canonical form)
    DPoly delta{Rational(1)};
    for (const Vec& col : raw)
        for (const auto& x : col)
            if (!x.is_zero()) delta = dlcm(delta, x.den());
    LaurentPoly delta_lp = dp_to_lp(delta);
    RationalFunction delta_rf(delta_lp);
    std::vector<std::vector<LaurentPoly>> cols;
    for (const Vec& col : raw) {
        std::vector<LaurentPoly> c(dim);
        bool nonzero = false;
        for (size_t p = 0; p < dim; ++p) {
            RationalFunction x = col[p] * delta_rf;
            if (!x.is_laurent()) throw std::logic_error("a_span_basis: denominator escape");
            c[p] = x.to_laurent();
            nonzero = nonzero || !c[p].is_zero();
        }
        if (nonzero) cols.push_back(std::move(c));
    }
    // column-style Hermite reduction over Q[v,v^-1] (Euclidean in the exponent
    // span since v is a unit): staircase basis of the column span
    ASpan out;
    out.delta = delta_lp;
    std::vector<size_t> active(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) active[i] = i;
    for (size_t row = 0; row < dim; ++row) {
        while (true) {
            std::vector<size_t> nz;
            for (size_t idx : active)
                if (!cols[idx][row].is_zero()) nz.push_back(idx);
            if (nz.size() <= 1) {
                if (nz.size() == 1) {
                    out.cols.push_back(cols[nz[0]]);
                    active.erase(std::find(active.begin(), active.end(), nz[0]));
                }
                break;
            }
            // reduce the entry of largest span by the one of smallest span
            size_t bi = nz[0];
            for (size_t idx : nz)
                if (lp_norm(cols[idx][row]) < lp_norm(cols[bi][row])) bi = idx;
            for (size_t idx : nz) {
                if (idx == bi) continue;
                while (!cols[idx][row].is_zero() &&
                       lp_norm(cols[idx][row]) >= lp_norm(cols[bi][row])) {
                    const LaurentPoly& a = cols[idx][row];
                    const LaurentPoly& b = cols[bi][row];
                    LaurentPoly q = LaurentPoly::monomial(a.max_exp() - b.max_exp(),
                                                          a.coeff(a.max_exp()) /
                                                              b.coeff(b.max_exp()));
                    for (size_t p = 0; p < dim; ++p) cols[idx][p] -= q * cols[bi][p];
                }
            }
        }
    }
    if (out.cols.size() != dim)
        throw std::logic_error("a_span_basis: rank deficient A-span at " + sw_str(sw));
    return out;
}

}  // namespace

Vec bar_vector(const Vec& u) {
    Vec r = u;
    for (auto& x : r) x = x.bar();
    return r;
}

Vec solve_global(const ModuleModel& m, const CrystalData& c, const CrystalVertex& b, long dmax,
                 long* used_D) {
    const SymWeight& sw = b.sw;
    size_t dim = m.space(sw).dim;
    if (dim == 0) throw std::runtime_error("solve_global: empty weight space");
    const auto& gens = c.lattice.generators(sw);
    if (gens.size() != dim)
        throw std::runtime_error("solve_global: lattice rank != dim at " + sw_str(sw));
    Mat B = invert(gen_matrix(c.lattice, sw, dim));
    Vec r = mat_vec(B, b.rep);  // A0-coordinates of the representative
    // The unknown u = sum_j c_j h_j runs over a Q[v,v^-1]-basis {h_j} of the
    // A-span of divided-power monomials, with Laurent coefficients c_j.
    // Constraints: u in L and u = b mod vL (v-adic series rows through the
    // lattice coordinates) and bar(u) = u (exact Laurent identity rows).
    // Balancedness makes the solution unique once the degree window D is wide
    // enough; escalate D until the system is consistent.
    ASpan A = a_span_basis(m, sw);
    RationalFunction delta_rf(A.delta);
    Mat H(dim, Vec(dim, RationalFunction()));  // pivot coords of the basis
    for (size_t p = 0; p < dim; ++p)
        for (size_t j = 0; j < dim; ++j)
            H[p][j] = RationalFunction(A.cols[j][p]) / delta_rf;
    Mat C = mat_mul(B, H);  // lattice coordinates of the basis
    // bar rows multiply bar(u) - u by delta*bar(delta), a Laurent identity:
    // sum_{j,s} x_{j,s} (Abar_{pj} v^{-s} - Abr_{pj} v^{s}) = 0 per pivot row p
    std::vector<std::vector<LaurentPoly>> Abar(dim, std::vector<LaurentPoly>(dim));
    std::vector<std::vector<LaurentPoly>> Abr(dim, std::vector<LaurentPoly>(dim));
    LaurentPoly delta_bar = A.delta.bar();
    for (size_t p = 0; p < dim; ++p)
        for (size_t j = 0; j < dim; ++j) {
            Abar[p][j] = A.delta * A.cols[j][p].bar();
            Abr[p][j] = delta_bar * A.cols[j][p];
        }

    for (long D = sw.depth(); D <= dmax; D += 2) {
        long width = 2 * D + 1;
        size_t nunk = dim * static_cast<size_t>(width);
        auto uidx = [&](size_t j, long s) {
            return j * static_cast<size_t>(width) + static_cast<size_t>(s + D);
        };
        QMat rows;
        QVec rhs;
        // lattice membership and residue rows
        for (size_t mr = 0; mr < dim; ++mr) {
            long tmin = 0;
            bool any = false;
            for (size_t j = 0; j < dim; ++j) {
                auto o = C[mr][j].ord();
                if (o.has_value()) {
                    tmin = std::min(tmin, *o - D);
                    any = true;
                }
            }
            auto ro = r[mr].ord();
            if (ro.has_value()) {
                tmin = std::min(tmin, *ro);
                any = true;
            }
            if (!any) continue;
            std::vector<std::vector<Rational>> cser(dim);
            for (size_t j = 0; j < dim; ++j) cser[j] = C[mr][j].series(tmin - D, D);
            std::vector<Rational> rser = r[mr].series(tmin, 0);
            // every v-degree t <= 0 of sum_j C_{mr,j} c_j - r_mr must vanish
            for (long t = tmin; t <= 0; ++t) {
                QVec row(nunk, Rational(0));
                for (size_t j = 0; j < dim; ++j)
                    for (long s = -D; s <= D; ++s)
                        row[uidx(j, s)] = cser[j][static_cast<size_t>(t - s - (tmin - D))];
                rows.push_back(std::move(row));
                rhs.push_back(rser[static_cast<size_t>(t - tmin)]);
            }
        }
        // bar-invariance rows
        for (size_t p = 0; p < dim; ++p) {
            long tlo = 0, thi = 0;
            bool any = false;
            for (size_t j = 0; j < dim; ++j)
                for (const LaurentPoly* lp : {&Abar[p][j], &Abr[p][j]}) {
                    if (lp->is_zero()) continue;
                    long lo = lp->min_exp() - D, hi = lp->max_exp() + D;
                    tlo = any ? std::min(tlo, lo) : lo;
                    thi = any ? std::max(thi, hi) : hi;
                    any = true;
                }
            if (!any) continue;
            for (long t = tlo; t <= thi; ++t) {
                QVec row(nunk, Rational(0));
                bool nontrivial = false;
                for (size_t j = 0; j < dim; ++j)
                    for (long s = -D; s <= D; ++s) {
                        Rational coef = Abar[p][j].coeff(t + s) - Abr[p][j].coeff(t - s);
                        if (coef != 0) nontrivial = true;
                        row[uidx(j, s)] = coef;
                    }
                if (!nontrivial) continue;
                rows.push_back(std::move(row));
                rhs.push_back(Rational(0));
            }
        }
        QSolveResult sol = qsolve(rows, rhs);
        if (!sol.consistent) continue;
        if (sol.nullity > 0)
            throw std::runtime_error("solve_global: solution not unique at " + sw_str(sw) +
                                     " (balancedness violated?)");
        Vec u(dim, RationalFunction());
        for (size_t j = 0; j < dim; ++j) {
            LaurentPoly cj;
            for (long s = -D; s <= D; ++s) {
                const Rational& x = sol.solution[uidx(j, s)];
                if (x != 0) cj.set_coeff(s, x);
            }
            if (cj.is_zero()) continue;
            RationalFunction cjr(cj);
            for (size_t p = 0; p < dim; ++p) u[p] += cjr * H[p][j];
        }
        if (used_D) *used_D = D;
        return u;
    }
    throw std::runtime_error("solve_global: no solution up to D_max at " + sw_str(sw));
}

GlobalBasisTable solve_global_all(const ModuleModel& m, const CrystalData& c, long dmax) {
    GlobalBasisTable t;
    for (const CrystalVertex& b : c.graph.vertices) {
        long used = 0;
        t.G[b.id] = solve_global(m, c, b, dmax, &used);
        t.usedD[b.id] = used;
    }
    return t;
}

void compute_expansions(const ModuleModel& m, const CrystalData& c, GlobalBasisTable& t) {
    const CartanDatum& d = m.datum();
    // G-columns per symweight
    std::map<SymWeight, std::pair<std::vector<int>, Mat>> gmat;
    for (const CrystalVertex& b : c.graph.vertices) {
        auto& [ids, cols] = gmat[b.sw];
        const Vec& g = t.G.at(b.id);
        if (cols.empty()) cols.assign(g.size(), Vec());
        for (size_t r = 0; r < g.size(); ++r) cols[r].push_back(g[r]);
        ids.push_back(b.id);
    }
    auto expand = [&](const SymWeight& sw, const Vec& u) {
        const auto& [ids, cols] = gmat.at(sw);
        Vec coef = solve_square(cols, u);
        std::map<int, RationalFunction> row;
        for (size_t j = 0; j < ids.size(); ++j)
            if (!coef[j].is_zero()) row[ids[j]] = coef[j];
        return row;
    };
    for (const CrystalVertex& b : c.graph.vertices) {
        const Vec& g = t.G.at(b.id);
        for (int i = 0; i < d.n(); ++i) {
            if (auto up = m.sym_after_F(i, b.sw)) {
                Vec fu = m.apply_F(i, b.sw, g);
                t.expansions.F[i][b.id] = expand(*up, fu);
            }
            if (auto down = m.sym_after_E(i, b.sw)) {
                Vec eu = m.apply_E(i, b.sw, g);
                t.expansions.E[i][b.id] =
                    (eu.empty() || is_zero_vec(eu)) ? std::map<int, RationalFunction>{}
                                                    : expand(*down, eu);
            } else {
                t.expansions.E[i][b.id] = {};
            }
        }
    }
}

CheckReport verify_estimates(const CrystalGraph& g, const ExpansionTable& t) {
    CheckReport rep;
    auto eps_of = [&](int b, int i) { return g.vertices[static_cast<size_t>(b)].eps.at(i); };
    for (const auto& [i, table] : t.F) {
        for (const auto& [b, row] : table) {
            long l = eps_of(b, i);
            int fb = g.ftilde_vertex(b, i);
            if (fb < 0) {
                rep.fail("missing ftilde edge at vertex " + std::to_string(b));
                continue;
            }
            for (const auto& [bp, coef] : row) {
                if (coef.is_zero()) continue;
                if (bp == fb) {
                    if (coef != RationalFunction(qint(l + 1)))
                        rep.fail("F leading coefficient != [eps+1]_v at b=" + std::to_string(b) +
                                 " i=" + std::to_string(i) + " (got " + coef.str() + ")");
                    continue;
                }
                long lp = eps_of(bp, i);
                if (lp <= l + 1)
                    rep.fail("F remainder not eps-deeper at b=" + std::to_string(b) +
                             " b'=" + std::to_string(bp));
                if (!coef.is_laurent() || !coef.to_laurent().is_integral())
                    rep.fail("F remainder coefficient not in Z[v,v^-1] at b=" +
                             std::to_string(b) + " b'=" + std::to_string(bp));
                else {
                    LaurentPoly a = coef.to_laurent();
                    if (a.min_exp() < 2 - lp)
                        rep.fail("F remainder below v^{2-eps} at b=" + std::to_string(b) +
                                 " b'=" + std::to_string(bp));
                    if (a != a.bar())
                        rep.fail("F remainder not bar-symmetric at b=" + std::to_string(b) +
                                 " b'=" + std::to_string(bp));
                }
            }
            if (row.find(fb) == row.end())
                rep.fail("F leading term missing at b=" + std::to_string(b) +
                         " i=" + std::to_string(i));
        }
    }
    for (const auto& [i, table] : t.E) {
        for (const auto& [b, row] : table) {
            long l = eps_of(b, i);
            // with eps = 0 there is no leading term, but remainder terms obey
            // the same bounds (eps(b') > eps(b) - 1 is then vacuous)
            int eb = l > 0 ? g.etilde_vertex(b, i) : -1;
            if (l > 0 && eb < 0) {
                rep.fail("missing etilde edge with eps > 0 at vertex " + std::to_string(b));
                continue;
            }
            for (const auto& [bp, coef] : row) {
                if (coef.is_zero()) continue;
                if (l > 0 && bp == eb) {
                    if (coef != RationalFunction::monomial(1 - l))
                        rep.fail("E leading coefficient != v^{1-eps} at b=" + std::to_string(b) +
                                 " i=" + std::to_string(i) + " (got " + coef.str() + ")");
                    continue;
                }
                long lp = eps_of(bp, i);
                if (lp <= l - 1)
                    rep.fail("E remainder not eps-deeper at b=" + std::to_string(b) +
                             " b'=" + std::to_string(bp));
                if (!coef.is_laurent() || !coef.to_laurent().is_integral())
                    rep.fail("E remainder coefficient not in Z[v,v^-1] at b=" +
                             std::to_string(b) + " b'=" + std::to_string(bp));
                else if (coef.to_laurent().min_exp() < 1 - lp)
                    rep.fail("E remainder below v^{1-eps} at b=" + std::to_string(b) +
                             " b'=" + std::to_string(bp));
            }
            if (l > 0 && row.find(eb) == row.end())
                rep.fail("E leading term missing at b=" + std::to_string(b) +
                         " i=" + std::to_string(i));
        }
    }
    return rep;
}

CheckReport verify_balanced(const ModuleModel& m, const CrystalData& c,
                            const GlobalBasisTable& t) {
    CheckReport rep;
    const Lattice& L = c.lattice;
    std::map<SymWeight, std::vector<int>> by_sw;
    for (const CrystalVertex& b : c.graph.vertices) by_sw[b.sw].push_back(b.id);
    for (const auto& [sw, ids] : by_sw) {
        size_t dim = m.space(sw).dim;
        if (ids.size() != dim) {
            rep.fail("vertex count != dim at " + sw_str(sw));
            continue;
        }
        QMat residues;
        RationalFunction q = coord_denominator(sw);
        for (int id : ids) {
            const Vec& g = t.G.at(id);
            const CrystalVertex& b = c.graph.vertices[static_cast<size_t>(id)];
            // integrality over the A-span: pivot coordinates lie in (1/Q) Z[v,v^-1]
            for (size_t j = 0; j < g.size(); ++j) {
                RationalFunction x = g[j] * q;
                if (!x.is_laurent() || !x.to_laurent().is_integral()) {
                    rep.fail("G(b) coefficient not in Z[v,v^-1]-span at vertex " +
                             std::to_string(id));
                    break;
                }
            }
            if (!(bar_vector(g) == g))
                rep.fail("G(b) not bar-invariant at vertex " + std::to_string(id));
            if (!L.contains(sw, g))
                rep.fail("G(b) outside the lattice at vertex " + std::to_string(id));
            Vec diff = g;
            for (size_t r = 0; r < diff.size(); ++r) diff[r] -= b.rep[r];
            if (!L.contains_in_vL(sw, diff))
                rep.fail("G(b) residue != b mod vL at vertex " + std::to_string(id));
            // A0-coordinates evaluated at v = 0
            auto coords = L.span_coords(sw, g);
            if (!coords) {
                rep.fail("G(b) outside lattice span at vertex " + std::to_string(id));
                continue;
            }
            QVec row;
            for (const auto& rf : *coords) {
                auto o = rf.ord();
                row.push_back((o.has_value() && *o < 0) ? Rational(0) : rf.series(0, 0)[0]);
            }
            residues.push_back(std::move(row));
        }
        if (residues.size() != ids.size()) continue;
        // rank over Q of the v=0 transition; full rank <=> transition invertible over A0
        QMat a = residues;
        size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
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
        if (r != ids.size())
            rep.fail("G-residues do not form a basis of L/vL at " + sw_str(sw));
    }
    return rep;
}

AdaptedPath adapted_monomial(const ModuleModel& m, const CrystalGraph& g, int vertex) {
    const CartanDatum& d = m.datum();
    AdaptedPath path;
    int cur = vertex;
    while (g.vertices[static_cast<size_t>(cur)].sw.depth() > 0) {
        const CrystalVertex& cv = g.vertices[static_cast<size_t>(cur)];
        int pick = -1;
        for (int i = 0; i < d.n(); ++i)
            if (cv.eps.at(i) > 0) {
                pick = i;
                break;
            }
        if (pick < 0) throw std::runtime_error("adapted_monomial: stuck above the vacuum");
        long a = cv.eps.at(pick);
        path.steps.emplace_back(pick, a);
        for (long t = 0; t < a; ++t) {
            cur = g.etilde_vertex(cur, pick);
            if (cur < 0) throw std::runtime_error("adapted_monomial: missing etilde edge");
        }
    }
    SymWeight sw = sym_zero(d);
    Vec u{RationalFunction(1)};
    for (auto it = path.steps.rbegin(); it != path.steps.rend(); ++it) {
        u = m.divided_F(it->first, it->second, sw, u);
        for (long t = 0; t < it->second; ++t) sw = sym_add(sw, sym_alpha(it->first, d));
    }
    path.sw = sw;
    path.vec = u;
    return path;
}

CheckReport verify_adapted(const ModuleModel& m, const CrystalData& c,
                           const GlobalBasisTable& t) {
    CheckReport rep;
    std::map<SymWeight, std::pair<std::vector<int>, Mat>> gmat;
    for (const CrystalVertex& b : c.graph.vertices) {
        auto& [ids, cols] = gmat[b.sw];
        const Vec& g = t.G.at(b.id);
        if (cols.empty()) cols.assign(g.size(), Vec());
        for (size_t r = 0; r < g.size(); ++r) cols[r].push_back(g[r]);
        ids.push_back(b.id);
    }
    std::map<SymWeight, Mat> monomials;
    for (const CrystalVertex& b : c.graph.vertices) {
        AdaptedPath p = adapted_monomial(m, c.graph, b.id);
        if (!(p.sw == b.sw)) {
            rep.fail("adapted monomial lands at the wrong weight for vertex " +
                     std::to_string(b.id));
            continue;
        }
        monomials[b.sw].push_back(p.vec);
        if (b.sw.depth() == 0) continue;
        const auto& [ids, cols] = gmat.at(b.sw);
        Vec coef = solve_square(cols, p.vec);
        int i1 = p.steps.front().first;
        long a1 = p.steps.front().second;
        long l = b.eps.at(i1);
        // vertex reached after peeling the first maximal string
        int mid = b.id;
        for (long s = 0; s < a1; ++s) mid = c.graph.etilde_vertex(mid, i1);
        long emid = c.graph.vertices[static_cast<size_t>(mid)].eps.at(i1);
        LaurentPoly expect = qbinom(emid + a1, a1);
        for (size_t j = 0; j < ids.size(); ++j) {
            if (coef[j].is_zero()) continue;
            if (ids[j] == b.id) {
                if (coef[j] != RationalFunction(expect))
                    rep.fail("adapted monomial leading coefficient not [eps+a choose a]_v at "
                             "vertex " + std::to_string(b.id));
                continue;
            }
            long lp = c.graph.vertices[static_cast<size_t>(ids[j])].eps.at(i1);
            if (lp <= l)
                rep.fail("adapted monomial remainder not eps-larger at vertex " +
                         std::to_string(b.id) + " term " + std::to_string(ids[j]));
            if (!coef[j].is_laurent() || !coef[j].to_laurent().is_integral())
                rep.fail("adapted monomial remainder not in Z[v,v^-1] at vertex " +
                         std::to_string(b.id));
        }
        if (coef[static_cast<size_t>(std::find(ids.begin(), ids.end(), b.id) - ids.begin())]
                .is_zero())
            rep.fail("adapted monomial misses its own vertex " + std::to_string(b.id));
    }
    for (const auto& [sw, cols] : monomials) {
        size_t dim = m.space(sw).dim;
        if (cols.size() != dim || mat_rank(cols) != dim)
            rep.fail("adapted monomials do not span the weight space at " + sw_str(sw));
    }
    return rep;
}

}  // namespace symcry
