#include "symcry/half_quantum.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace symcry {

void comb_add(FreeComb& into, const FreeWord& w, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto it = into.find(w);
    if (it == into.end()) {
        into[w] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

namespace {

FreeComb e_prime_word(int i, const FreeWord& u, const PairingMatrix& p,
                      std::map<std::pair<int, FreeWord>, FreeComb>& memo) {
    if (u.empty()) return {};
    auto key = std::make_pair(i, u);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int j = u.front();
    FreeWord rest(u.begin() + 1, u.end());
    FreeComb out;
    if (i == j) comb_add(out, rest, RationalFunction(1));
    RationalFunction scale =
        RationalFunction::monomial(-p[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    for (const auto& [w, c] : e_prime_word(i, rest, p, memo)) {
        FreeWord jw;
        jw.reserve(w.size() + 1);
        jw.push_back(j);
        jw.insert(jw.end(), w.begin(), w.end());
        comb_add(out, jw, scale * c);
    }
    memo[key] = out;
    return out;
}

// memo must be keyed by the pairing matrix too: one process may work with
// several Cartan data
thread_local std::map<PairingMatrix, std::map<std::pair<int, FreeWord>, FreeComb>> g_eprime_memo;

}  // namespace

FreeComb e_prime(int i, const FreeComb& x, const PairingMatrix& p) {
    auto& memo = g_eprime_memo[p];
    FreeComb out;
    for (const auto& [w, c] : x)
        for (const auto& [w2, c2] : e_prime_word(i, w, p, memo))
            comb_add(out, w2, c * c2);
    return out;
}

RationalFunction KashiwaraCache::form(const FreeWord& x, const FreeWord& y) {
    if (x.size() != y.size()) return {};
    if (x.empty()) return RationalFunction(1);
    auto key = std::make_pair(x, y);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int i = x.front();
    FreeWord rest(x.begin() + 1, x.end());
    RationalFunction acc;
    FreeComb one;
    one[y] = RationalFunction(1);
    for (const auto& [w, c] : e_prime(i, one, p_)) acc += c * form(rest, w);
    memo_[key] = acc;
    return acc;
}

RationalFunction KashiwaraCache::form(const FreeComb& x, const FreeComb& y) {
    RationalFunction acc;
    for (const auto& [wx, cx] : x)
        for (const auto& [wy, cy] : y) acc += cx * cy * form(wx, wy);
    return acc;
}

std::vector<FreeWord> words_of_weight(const Weight& w) {
    std::vector<FreeWord> out;
    FreeWord cur;
    std::vector<long> left = w.coords;
    long total = 0;
    for (long c : left) {
        if (c < 0) throw std::invalid_argument("words_of_weight: negative weight");
        total += c;
    }
    std::function<void(long)> rec = [&](long remaining) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (size_t i = 0; i < left.size(); ++i) {
            if (left[i] == 0) continue;
            --left[i];
            cur.push_back(static_cast<int>(i));
            rec(remaining - 1);
            cur.pop_back();
            ++left[i];
        }
    };
    rec(total);
    return out;
}

HalfWeightSpace half_weight_space(const Weight& w, const PairingMatrix& p) {
    HalfWeightSpace hs;
    hs.weight = w;
    hs.words = words_of_weight(w);
    KashiwaraCache cache(p);
    size_t n = hs.words.size();
    hs.gram.assign(n, Vec(n, RationalFunction()));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) hs.gram[a][b] = cache.form(hs.words[a], hs.words[b]);
    hs.pivots = independent_columns(hs.gram);
    hs.dim = hs.pivots.size();
    return hs;
}

bool serre_in_radical(int i, int j, const PairingMatrix& p) {
    if (i == j) throw std::invalid_argument("serre_in_radical: need i != j");
    long b = 1 - p[static_cast<size_t>(i)][static_cast<size_t>(j)];
    FreeComb elt;
    for (long k = 0; k <= b; ++k) {
        FreeWord w;
        for (long t = 0; t < k; ++t) w.push_back(i);
        w.push_back(j);
        for (long t = 0; t < b - k; ++t) w.push_back(i);
        RationalFunction coeff =
            RationalFunction(1) / (RationalFunction(qfact(k)) * RationalFunction(qfact(b - k)));
        if (k % 2) coeff = -coeff;
        comb_add(elt, w, coeff);
    }
    Weight w;
    w.coords.assign(p.size(), 0);
    w.coords[static_cast<size_t>(i)] = b;
    w.coords[static_cast<size_t>(j)] = 1;
    KashiwaraCache cache(p);
    for (const FreeWord& test : words_of_weight(w)) {
        RationalFunction acc;
        for (const auto& [word, c] : elt) acc += c * cache.form(word, test);
        if (!acc.is_zero()) return false;
    }
    return true;
}

namespace {

std::vector<Weight> weights_of_height(long n, int nindices) {
    std::vector<Weight> out;
    Weight cur;
    cur.coords.assign(static_cast<size_t>(nindices), 0);
    std::function<void(int, long)> rec = [&](int idx, long remaining) {
        if (idx == nindices - 1) {
            cur.coords[static_cast<size_t>(idx)] = remaining;
            out.push_back(cur);
            return;
        }
        for (long c = 0; c <= remaining; ++c) {
            cur.coords[static_cast<size_t>(idx)] = c;
            rec(idx + 1, remaining - c);
        }
    };
    if (nindices == 0) {
        if (n == 0) out.push_back(cur);
        return out;
    }
    rec(0, n);
    return out;
}

}  // namespace

std::map<Weight, long> half_dims_up_to(long depth, const PairingMatrix& p, int nindices) {
    std::map<Weight, long> dims;
    for (long n = 0; n <= depth; ++n)
        for (const Weight& w : weights_of_height(n, nindices))
            dims[w] = static_cast<long>(half_weight_space(w, p).dim);
    return dims;
}

std::vector<long> quotient_by_folding_ideal(long depth, const CartanDatum& d) {
    const PairingMatrix& p = d.pairing;
    int ni = d.n();
    std::vector<long> out;
    for (long n = 0; n <= depth; ++n) {
        // the depth-n slice of U_v^- as a direct sum of weight spaces
        std::vector<HalfWeightSpace> spaces;
        std::map<Weight, size_t> which;
        std::vector<size_t> offset;
        size_t total = 0;
        for (const Weight& w : weights_of_height(n, ni)) {
            HalfWeightSpace hs = half_weight_space(w, p);
            which[w] = spaces.size();
            offset.push_back(total);
            total += hs.dim;
            spaces.push_back(std::move(hs));
        }
        if (n == 0) {
            out.push_back(static_cast<long>(total));
            continue;
        }
        // coordinates of a free word inside its weight block
        auto word_coords = [&](const FreeWord& word) -> std::pair<size_t, Vec> {
            Weight w;
            w.coords.assign(static_cast<size_t>(ni), 0);
            for (int l : word) ++w.coords[static_cast<size_t>(l)];
            size_t si = which.at(w);
            const HalfWeightSpace& hs = spaces[si];
            KashiwaraCache cache(p);
            size_t k = hs.pivots.size();
            Mat pg(k, Vec(k));
            Vec rhs(k);
            size_t wi = static_cast<size_t>(
                std::find(hs.words.begin(), hs.words.end(), word) - hs.words.begin());
            for (size_t r = 0; r < k; ++r) {
                for (size_t c = 0; c < k; ++c) pg[r][c] = hs.gram[hs.pivots[r]][hs.pivots[c]];
                rhs[r] = hs.gram[wi][hs.pivots[r]];
            }
            return {si, k ? solve_square(pg, rhs) : Vec{}};
        };
        // generators x (f_i - f_{theta i}) over all depth n-1 words x and orbit pairs
        Mat gens;
        for (const Weight& w : weights_of_height(n - 1, ni)) {
            for (const FreeWord& x : words_of_weight(w)) {
                for (int i = 0; i < ni; ++i) {
                    int ti = d.theta[static_cast<size_t>(i)];
                    if (ti <= i) continue;
                    FreeWord wa = x, wb = x;
                    wa.push_back(i);
                    wb.push_back(ti);
                    Vec g(total, RationalFunction());
                    auto [sa, ca] = word_coords(wa);
                    auto [sb, cb] = word_coords(wb);
                    for (size_t t = 0; t < ca.size(); ++t) g[offset[sa] + t] += ca[t];
                    for (size_t t = 0; t < cb.size(); ++t) g[offset[sb] + t] -= cb[t];
                    gens.push_back(std::move(g));
                }
            }
        }
        size_t r = gens.empty() ? 0 : mat_rank(gens);
        out.push_back(static_cast<long>(total - r));
    }
    return out;
}

}  // namespace symcry
