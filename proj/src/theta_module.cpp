#include "symcry/theta_module.hpp"

#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>

namespace symcry {

FreeComb apply_E_free(int i, const FreeWord& word, const CartanDatum& d) {
    ContravariantCache cache(d);
    return cache.e_img(i, word);
}

const FreeComb& ContravariantCache::e_img(int i, const FreeWord& w) {
    auto key = std::make_pair(i, w);
    auto it = ememo_.find(key);
    if (it != ememo_.end()) return it->second;
    FreeComb out;
    if (!w.empty()) {
        int j = w.front();
        FreeWord rest(w.begin() + 1, w.end());
        if (i == j) comb_add(out, rest, RationalFunction(1));
        if (d_.theta[static_cast<size_t>(i)] == j)
            comb_add(out, rest, t_eigenvalue(i, rest, d_));
        RationalFunction scale = RationalFunction::monomial(
            -d_.pairing[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        for (const auto& [u, c] : e_img(i, rest)) {
            FreeWord ju;
            ju.reserve(u.size() + 1);
            ju.push_back(j);
            ju.insert(ju.end(), u.begin(), u.end());
            comb_add(out, ju, scale * c);
        }
    }
    return ememo_[key] = std::move(out);
}

RationalFunction ContravariantCache::form(const FreeWord& x, const FreeWord& y) {
    if (x.size() != y.size()) return {};
    if (x.empty()) return RationalFunction(1);
    auto key = std::make_pair(x, y);
    auto it = fmemo_.find(key);
    if (it != fmemo_.end()) return it->second;
    int j = x.front();
    FreeWord rest(x.begin() + 1, x.end());
    RationalFunction acc;
    for (const auto& [w, c] : e_img(j, y)) acc += c * form(rest, w);
    return fmemo_[key] = acc;
}

RationalFunction contravariant_form(const FreeWord& x, const FreeWord& y, const CartanDatum& d) {
    ContravariantCache cache(d);
    return cache.form(x, y);
}

std::vector<FreeWord> words_of_symweight(const SymWeight& sw, const CartanDatum& d) {
    std::vector<FreeWord> out;
    std::vector<long> budget = sw.coords;
    FreeWord cur;
    long total = sw.depth();
    std::function<void(long)> rec = [&](long remaining) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int i = 0; i < d.n(); ++i) {
            size_t o = static_cast<size_t>(d.orbit[static_cast<size_t>(i)]);
            if (budget[o] == 0) continue;
            --budget[o];
            cur.push_back(i);
            rec(remaining - 1);
            cur.pop_back();
            ++budget[o];
        }
    };
    rec(total);
    return out;
}

Vec ThetaWeightSpace::coords_of(const FreeComb& comb) const {
    Vec out(dim, RationalFunction());
    for (const auto& [w, c] : comb) {
        const Vec& wc = word_coords.at(w);
        for (size_t t = 0; t < dim; ++t) out[t] += c * wc[t];
    }
    return out;
}

namespace {

std::vector<SymWeight> symweights_at_depth(long n, const CartanDatum& d) {
    std::vector<SymWeight> out;
    int no = d.num_orbits();
    SymWeight cur;
    cur.coords.assign(static_cast<size_t>(no), 0);
    std::function<void(int, long)> rec = [&](int o, long remaining) {
        if (o == no - 1) {
            cur.coords[static_cast<size_t>(o)] = remaining;
            out.push_back(cur);
            return;
        }
        for (long c = 0; c <= remaining; ++c) {
            cur.coords[static_cast<size_t>(o)] = c;
            rec(o + 1, remaining - c);
        }
    };
    rec(0, n);
    return out;
}

ThetaWeightSpace build_space(const SymWeight& sw, const CartanDatum& d) {
    ThetaWeightSpace sp;
    sp.sw = sw;
    sp.words = words_of_symweight(sw, d);
    ContravariantCache cache(d);
    size_t n = sp.words.size();
    sp.gram.assign(n, Vec(n, RationalFunction()));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b) {
            sp.gram[a][b] = cache.form(sp.words[a], sp.words[b]);
            sp.gram[b][a] = sp.gram[a][b];
        }
    sp.pivots = independent_columns(sp.gram);
    sp.dim = sp.pivots.size();
    size_t k = sp.dim;
    sp.pivot_gram.assign(k, Vec(k));
    for (size_t r = 0; r < k; ++r)
        for (size_t c = 0; c < k; ++c) sp.pivot_gram[r][c] = sp.gram[sp.pivots[r]][sp.pivots[c]];
    for (size_t wi = 0; wi < n; ++wi) {
        Vec rhs(k);
        for (size_t r = 0; r < k; ++r) rhs[r] = sp.gram[wi][sp.pivots[r]];
        sp.word_coords[sp.words[wi]] = k ? solve_square(sp.pivot_gram, rhs) : Vec{};
    }
    return sp;
}

}  // namespace

ModuleModel::ModuleModel(CartanDatum d, long depth, int jobs) : d_(std::move(d)), depth_(depth) {
    if (depth_ < 0) throw std::invalid_argument("depth must be nonnegative");
    if (d_.orbit.empty()) d_.finalize();
    build(jobs < 1 ? 1 : jobs);
}

void ModuleModel::build(int jobs) {
    for (long n = 0; n <= depth_; ++n) {
        std::vector<SymWeight> level = symweights_at_depth(n, d_);
        if (jobs > 1 && level.size() > 1) {
            std::vector<std::future<ThetaWeightSpace>> futs;
            futs.reserve(level.size());
            for (const SymWeight& sw : level)
                futs.push_back(std::async(std::launch::async,
                                          [this, sw] { return build_space(sw, d_); }));
            for (size_t t = 0; t < level.size(); ++t) spaces_[level[t]] = futs[t].get();
        } else {
            for (const SymWeight& sw : level) spaces_[sw] = build_space(sw, d_);
        }
        // E matrices for this level (targets one level down)
        ContravariantCache cache(d_);
        for (const SymWeight& sw : level) {
            ThetaWeightSpace& sp = spaces_[sw];
            for (int i = 0; i < d_.n(); ++i) {
                SymWeight down;
                if (!sym_sub(sw, sym_alpha(i, d_), down)) continue;
                const ThetaWeightSpace& tgt = spaces_.at(down);
                Mat m(tgt.dim, Vec(sp.dim, RationalFunction()));
                for (size_t c = 0; c < sp.dim; ++c) {
                    Vec col = tgt.coords_of(cache.e_img(i, sp.words[sp.pivots[c]]));
                    for (size_t r = 0; r < tgt.dim; ++r) m[r][c] = col[r];
                }
                sp.matE[i] = std::move(m);
            }
        }
        // F matrices for the previous level (targets at this level)
        if (n == 0) continue;
        for (const SymWeight& prev : symweights_at_depth(n - 1, d_)) {
            ThetaWeightSpace& sp = spaces_.at(prev);
            for (int i = 0; i < d_.n(); ++i) {
                SymWeight up = sym_add(prev, sym_alpha(i, d_));
                const ThetaWeightSpace& tgt = spaces_.at(up);
                Mat m(tgt.dim, Vec(sp.dim, RationalFunction()));
                for (size_t c = 0; c < sp.dim; ++c) {
                    FreeWord w;
                    w.reserve(sp.words[sp.pivots[c]].size() + 1);
                    w.push_back(i);
                    w.insert(w.end(), sp.words[sp.pivots[c]].begin(),
                             sp.words[sp.pivots[c]].end());
                    const Vec& col = tgt.word_coords.at(w);
                    for (size_t r = 0; r < tgt.dim; ++r) m[r][c] = col[r];
                }
                sp.matF[i] = std::move(m);
            }
        }
    }
}

const ThetaWeightSpace& ModuleModel::space(const SymWeight& sw) const {
    auto it = spaces_.find(sw);
    if (it == spaces_.end()) throw std::out_of_range("weight space not built");
    return it->second;
}

ThetaWeightSpace& ModuleModel::mutable_space(const SymWeight& sw) {
    auto it = spaces_.find(sw);
    if (it == spaces_.end()) throw std::out_of_range("weight space not built");
    return it->second;
}

long ModuleModel::dim_at_depth(long n) const {
    long total = 0;
    for (const auto& [sw, sp] : spaces_)
        if (sw.depth() == n) total += static_cast<long>(sp.dim);
    return total;
}

std::optional<SymWeight> ModuleModel::sym_after_F(int i, const SymWeight& sw) const {
    SymWeight up = sym_add(sw, sym_alpha(i, d_));
    if (!has_space(up)) return std::nullopt;
    return up;
}

std::optional<SymWeight> ModuleModel::sym_after_E(int i, const SymWeight& sw) const {
    SymWeight down;
    if (!sym_sub(sw, sym_alpha(i, d_), down)) return std::nullopt;
    return down;
}

Vec ModuleModel::apply_F(int i, const SymWeight& sw, const Vec& u) const {
    const ThetaWeightSpace& sp = space(sw);
    auto it = sp.matF.find(i);
    if (it == sp.matF.end()) throw std::out_of_range("F target space not built");
    return mat_vec(it->second, u);
}

Vec ModuleModel::apply_E(int i, const SymWeight& sw, const Vec& u) const {
    const ThetaWeightSpace& sp = space(sw);
    auto it = sp.matE.find(i);
    if (it == sp.matE.end()) return {};  // E_i kills the whole space
    return mat_vec(it->second, u);
}

Vec ModuleModel::divided_F(int i, long a, const SymWeight& sw, const Vec& u) const {
    Vec v = u;
    SymWeight cur = sw;
    for (long t = 0; t < a; ++t) {
        v = apply_F(i, cur, v);
        cur = sym_add(cur, sym_alpha(i, d_));
    }
    if (a >= 2) {
        RationalFunction inv = RationalFunction(qfact(a)).inverse();
        for (auto& x : v) x *= inv;
    }
    return v;
}

namespace {

std::string sw_str(const SymWeight& sw) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < sw.coords.size(); ++i) os << (i ? "," : "") << sw.coords[i];
    os << ")";
    return os.str();
}

// matrix of F_i^{(a)} from sw; requires targets built
Mat divided_F_mat(const ModuleModel& m, int i, long a, const SymWeight& sw) {
    const CartanDatum& d = m.datum();
    Mat acc = identity_mat(m.space(sw).dim);
    SymWeight cur = sw;
    for (long t = 0; t < a; ++t) {
        acc = mat_mul(m.space(cur).matF.at(i), acc);
        cur = sym_add(cur, sym_alpha(i, d));
    }
    if (a >= 2) acc = mat_scale(RationalFunction(qfact(a)).inverse(), acc);
    return acc;
}

// matrix of E_i^{(a)} from sw; zero map when a step leaves the weight cone
Mat divided_E_mat(const ModuleModel& m, int i, long a, const SymWeight& sw, const SymWeight& tgt) {
    const CartanDatum& d = m.datum();
    Mat acc = identity_mat(m.space(sw).dim);
    SymWeight cur = sw;
    for (long t = 0; t < a; ++t) {
        const auto& sp = m.space(cur);
        auto it = sp.matE.find(i);
        if (it == sp.matE.end()) return Mat(m.space(tgt).dim, Vec(sp.dim, RationalFunction()));
        acc = mat_mul(it->second, acc);
        SymWeight down;
        sym_sub(cur, sym_alpha(i, d), down);
        cur = down;
    }
    if (a >= 2) acc = mat_scale(RationalFunction(qfact(a)).inverse(), acc);
    return acc;
}

}  // namespace

CheckReport verify_relations(const ModuleModel& m) {
    CheckReport rep;
    const CartanDatum& d = m.datum();
    int ni = d.n();
    for (const auto& [sw, sp] : m.spaces()) {
        // T relations: T_{theta i} = T_i; T_i F_j T_i^{-1} = v^{-(a_i+a_{theta i}, a_j)} F_j
        for (int i = 0; i < ni; ++i) {
            if (t_eigenvalue_sw(i, sw, d) != t_eigenvalue_sw(d.theta[static_cast<size_t>(i)], sw, d))
                rep.fail("T_theta(i) != T_i at " + sw_str(sw));
            for (int j = 0; j < ni; ++j) {
                SymWeight up = sym_add(sw, sym_alpha(j, d));
                if (!m.has_space(up)) continue;
                long e = -(d.pairing[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                           d.pairing[static_cast<size_t>(d.theta[static_cast<size_t>(i)])]
                                    [static_cast<size_t>(j)]);
                if (t_eigenvalue_sw(i, up, d) !=
                    t_eigenvalue_sw(i, sw, d) * RationalFunction::monomial(e))
                    rep.fail("T-conjugation fails at " + sw_str(sw));
            }
        }
        // commutation E_i F_j - v^{-(a_i,a_j)} F_j E_i = delta_ij + delta_{theta i,j} T_i
        for (int i = 0; i < ni; ++i) {
            for (int j = 0; j < ni; ++j) {
                SymWeight up = sym_add(sw, sym_alpha(j, d));
                if (!m.has_space(up)) continue;
                SymWeight x;
                if (!sym_sub(up, sym_alpha(i, d), x)) continue;
                const ThetaWeightSpace& upsp = m.space(up);
                Mat a = mat_mul(upsp.matE.at(i), sp.matF.at(j));
                Mat b;
                SymWeight down;
                if (sym_sub(sw, sym_alpha(i, d), down))
                    b = mat_mul(m.space(down).matF.at(j), sp.matE.at(i));
                else
                    b = Mat(m.space(x).dim, Vec(sp.dim, RationalFunction()));
                RationalFunction scale = RationalFunction::monomial(
                    -d.pairing[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                Mat lhs = mat_sub(a, mat_scale(scale, b));
                Mat rhs(m.space(x).dim, Vec(sp.dim, RationalFunction()));
                if (i == j)
                    rhs = mat_add(rhs, identity_mat(sp.dim));
                if (d.theta[static_cast<size_t>(i)] == j)
                    rhs = mat_add(rhs, mat_scale(t_eigenvalue_sw(i, sw, d), identity_mat(sp.dim)));
                if (!mat_is_zero(mat_sub(lhs, rhs)))
                    rep.fail("commutation (E_i F_j) fails for i=" + d.names[static_cast<size_t>(i)] +
                             " j=" + d.names[static_cast<size_t>(j)] + " at " + sw_str(sw));
            }
        }
        // v-Serre
        for (int i = 0; i < ni; ++i) {
            for (int j = 0; j < ni; ++j) {
                if (i == j) continue;
                long b = 1 - d.pairing[static_cast<size_t>(i)][static_cast<size_t>(j)];
                // F-Serre: sum_k (-1)^k F_i^{(k)} F_j F_i^{(b-k)} = 0, degree b+1 up
                if (sw.depth() + b + 1 <= m.depth()) {
                    SymWeight tgt = sw;
                    for (long t = 0; t < b; ++t) tgt = sym_add(tgt, sym_alpha(i, d));
                    tgt = sym_add(tgt, sym_alpha(j, d));
                    Mat acc(m.space(tgt).dim, Vec(sp.dim, RationalFunction()));
                    for (long k = 0; k <= b; ++k) {
                        Mat t1 = divided_F_mat(m, i, b - k, sw);
                        SymWeight mid = sw;
                        for (long t = 0; t < b - k; ++t) mid = sym_add(mid, sym_alpha(i, d));
                        Mat t2 = mat_mul(m.space(mid).matF.at(j), t1);
                        SymWeight mid2 = sym_add(mid, sym_alpha(j, d));
                        Mat t3 = mat_mul(divided_F_mat(m, i, k, mid2), t2);
                        acc = (k % 2) ? mat_sub(acc, t3) : mat_add(acc, t3);
                    }
                    if (!mat_is_zero(acc))
                        rep.fail("F-Serre fails for i=" + d.names[static_cast<size_t>(i)] +
                                 " j=" + d.names[static_cast<size_t>(j)] + " at " + sw_str(sw));
                }
                // E-Serre: same shape, degree b+1 down
                SymWeight tgt = sw;
                bool valid = true;
                for (long t = 0; t < b && valid; ++t) {
                    SymWeight next;
                    valid = sym_sub(tgt, sym_alpha(i, d), next);
                    if (valid) tgt = next;
                }
                if (valid) {
                    SymWeight next;
                    valid = sym_sub(tgt, sym_alpha(j, d), next);
                    if (valid) tgt = next;
                }
                if (valid) {
                    Mat acc(m.space(tgt).dim, Vec(sp.dim, RationalFunction()));
                    for (long k = 0; k <= b; ++k) {
                        SymWeight mid = sw;
                        for (long t = 0; t < b - k; ++t) {
                            SymWeight next;
                            sym_sub(mid, sym_alpha(i, d), next);
                            mid = next;
                        }
                        Mat t1 = divided_E_mat(m, i, b - k, sw, mid);
                        SymWeight mid2;
                        sym_sub(mid, sym_alpha(j, d), mid2);
                        Mat t2 = mat_mul(m.space(mid).matE.at(j), t1);
                        Mat t3 = mat_mul(divided_E_mat(m, i, k, mid2, tgt), t2);
                        acc = (k % 2) ? mat_sub(acc, t3) : mat_add(acc, t3);
                    }
                    if (!mat_is_zero(acc))
                        rep.fail("E-Serre fails for i=" + d.names[static_cast<size_t>(i)] +
                                 " j=" + d.names[static_cast<size_t>(j)] + " at " + sw_str(sw));
                }
            }
        }
    }
    return rep;
}

CheckReport highest_weight_check(const ModuleModel& m) {
    CheckReport rep;
    for (const auto& [sw, sp] : m.spaces()) {
        if (sw.depth() == 0) {
            if (sp.dim != 1) rep.fail("vacuum space has dim != 1");
            continue;
        }
        Mat stacked;
        for (const auto& [i, e] : sp.matE)
            for (const auto& row : e) stacked.push_back(row);
        size_t r = stacked.empty() ? 0 : mat_rank(stacked);
        if (r != sp.dim)
            rep.fail("joint E-kernel nontrivial at " + sw_str(sw) + " (rank " +
                     std::to_string(r) + " of " + std::to_string(sp.dim) + ")");
    }
    return rep;
}

CheckReport verify_divided_power(const ModuleModel& m, long amax) {
    CheckReport rep;
    const CartanDatum& d = m.datum();
    for (const auto& [sw, sp] : m.spaces()) {
        for (int i = 0; i < d.n(); ++i) {
            for (long a = 0; a <= amax; ++a) {
                if (sw.depth() + a + 1 > m.depth()) continue;
                SymWeight top = sw;
                for (long t = 0; t < a; ++t) top = sym_add(top, sym_alpha(i, d));
                Mat lhs = mat_mul(m.space(top).matF.at(i), divided_F_mat(m, i, a, sw));
                Mat rhs = mat_scale(RationalFunction(qint(a + 1)), divided_F_mat(m, i, a + 1, sw));
                if (!mat_is_zero(mat_sub(lhs, rhs)))
                    rep.fail("F_i F_i^{(a)} = [a+1] F_i^{(a+1)} fails for i=" +
                             d.names[static_cast<size_t>(i)] + " a=" + std::to_string(a) +
                             " at " + sw_str(sw));
            }
        }
    }
    return rep;
}

CheckReport verify_adjointness(const ModuleModel& m) {
    CheckReport rep;
    const CartanDatum& d = m.datum();
    for (const auto& [sw, sp] : m.spaces()) {
        for (const auto& [i, e] : sp.matE) {
            SymWeight down;
            sym_sub(sw, sym_alpha(i, d), down);
            const ThetaWeightSpace& tgt = m.space(down);
            Mat lhs = mat_mul(mat_transpose(e), tgt.pivot_gram);
            Mat rhs = mat_mul(sp.pivot_gram, tgt.matF.at(i));
            if (!mat_is_zero(mat_sub(lhs, rhs)))
                rep.fail("adjointness (E_i u, w) = (u, F_i w) fails at " + sw_str(sw));
        }
    }
    return rep;
}

}  // namespace symcry
