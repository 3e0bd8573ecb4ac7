#include "symcry/geometry_model.hpp"

#include <map>
#include <string>

namespace symcry {

int ReferenceCrystal::id_of(long n, long r) const {
    for (size_t k = 0; k < vertices.size(); ++k)
        if (vertices[k].n == n && vertices[k].r == r) return static_cast<int>(k);
    return -1;
}

std::vector<int> ReferenceCrystal::level(long n) const {
    std::vector<int> out;
    for (size_t k = 0; k < vertices.size(); ++k)
        if (vertices[k].n == n) out.push_back(static_cast<int>(k));
    return out;
}

int ReferenceCrystal::edge_target(int src, int label) const {
    for (const RefEdge& e : edges)
        if (e.src == src && e.label == label) return e.dst;
    return -1;
}

ReferenceCrystal reference_graph(long n_max) {
    ReferenceCrystal g;
    for (long n = 0; n <= n_max; ++n)
        for (long r = 0; 2 * r <= n; ++r) g.vertices.push_back({n, r});
    for (size_t k = 0; k < g.vertices.size(); ++k) {
        const ICVertex& v = g.vertices[k];
        if (v.n == n_max) continue;
        int plus = g.id_of(v.n + 1, v.r);
        int minus = g.id_of(v.n + 1, v.n % 2 == 0 ? v.r : v.r + 1);
        g.edges.push_back({static_cast<int>(k), +1, plus});
        g.edges.push_back({static_cast<int>(k), -1, minus});
    }
    return g;
}

long reference_eps1(const ICVertex& v) { return v.n - 2 * v.r; }

CheckReport reference_figure_check() {
    CheckReport rep;
    ReferenceCrystal g = reference_graph(5);
    // vertex counts per level
    const long counts[] = {1, 1, 2, 2, 3, 3};
    for (long n = 0; n <= 5; ++n)
        if (static_cast<long>(g.level(n).size()) != counts[n])
            rep.fail("level " + std::to_string(n) + " has " +
                     std::to_string(g.level(n).size()) + " vertices, expected " +
                     std::to_string(counts[n]));
    // the picture, as (n, r, label, n', r') tuples; double arrows are the
    // label pairs with a common target
    struct Row {
        long n, r;
        int label;
        long n2, r2;
    };
    const Row figure[] = {
        {0, 0, +1, 1, 0}, {0, 0, -1, 1, 0},  // vacuum double edge
        {1, 0, +1, 2, 0}, {1, 0, -1, 2, 1},
        {2, 0, +1, 3, 0}, {2, 0, -1, 3, 0},
        {2, 1, +1, 3, 1}, {2, 1, -1, 3, 1},
        {3, 0, +1, 4, 0}, {3, 0, -1, 4, 1},
        {3, 1, +1, 4, 1}, {3, 1, -1, 4, 2},
        {4, 0, +1, 5, 0}, {4, 0, -1, 5, 0},
        {4, 1, +1, 5, 1}, {4, 1, -1, 5, 1},
        {4, 2, +1, 5, 2}, {4, 2, -1, 5, 2},
    };
    size_t matched = 0;
    for (const Row& row : figure) {
        int src = g.id_of(row.n, row.r);
        int dst = g.edge_target(src, row.label);
        if (src < 0 || dst < 0 || g.id_of(row.n2, row.r2) != dst)
            rep.fail("edge IC_" + std::to_string(row.r) + "^" + std::to_string(row.n) +
                     " --(" + std::to_string(row.label) + ")--> IC_" + std::to_string(row.r2) +
                     "^" + std::to_string(row.n2) + " missing from the generated graph");
        else
            ++matched;
    }
    if (matched != g.edges.size())
        rep.fail("generated graph has extra edges beyond the figure");
    return rep;
}

CheckReport check_isomorphism(const CrystalGraph& g, const ReferenceCrystal& ref, int idx_plus,
                              int idx_minus) {
    CheckReport rep;
    if (g.vertices.empty()) {
        rep.fail("computed graph is empty");
        return rep;
    }
    // vacuum = the unique depth-0 vertex
    int vac = -1;
    for (const CrystalVertex& v : g.vertices)
        if (v.sw.depth() == 0) {
            if (vac >= 0) rep.fail("two depth-0 vertices");
            vac = v.id;
        }
    if (vac < 0) {
        rep.fail("no depth-0 vertex");
        return rep;
    }
    int ref_vac = ref.id_of(0, 0);
    std::map<int, int> image{{vac, ref_vac}};  // computed id -> reference id
    std::map<int, int> preimage{{ref_vac, vac}};
    // propagate along edges in id order (ids are assigned level by level)
    for (const CrystalVertex& v : g.vertices) {
        auto it = image.find(v.id);
        if (it == image.end()) {
            rep.fail("vertex " + std::to_string(v.id) + " unreachable from the vacuum");
            continue;
        }
        for (auto [idx, label] : {std::pair{idx_plus, +1}, std::pair{idx_minus, -1}}) {
            int dst = g.ftilde_vertex(v.id, idx);
            int rdst = ref.edge_target(it->second, label);
            if ((dst < 0) != (rdst < 0)) {
                rep.fail("edge (" + std::to_string(label) + ") out of vertex " +
                         std::to_string(v.id) + " exists in only one graph");
                continue;
            }
            if (dst < 0) continue;
            auto [pos, inserted] = image.emplace(dst, rdst);
            if (!inserted && pos->second != rdst) {
                rep.fail("edge targets disagree at vertex " + std::to_string(v.id) +
                         " label " + std::to_string(label));
                continue;
            }
            auto [ppos, pinserted] = preimage.emplace(rdst, dst);
            if (!pinserted && ppos->second != dst)
                rep.fail("map not injective at reference vertex IC_" +
                         std::to_string(ref.vertices[static_cast<size_t>(rdst)].r) + "^" +
                         std::to_string(ref.vertices[static_cast<size_t>(rdst)].n));
        }
    }
    if (image.size() != g.vertices.size() || preimage.size() != ref.vertices.size())
        rep.fail("vertex sets do not biject: " + std::to_string(g.vertices.size()) + " vs " +
                 std::to_string(ref.vertices.size()));
    return rep;
}

}  // namespace symcry
