#include "symcry/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace symcry {

namespace {

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::runtime_error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string key_of(const SymWeight& sw) {
    std::ostringstream os;
    for (size_t i = 0; i < sw.coords.size(); ++i) os << (i ? "," : "") << sw.coords[i];
    return os.str();
}

[[noreturn]] void fail_validation(const std::string& what,
                                  const std::vector<std::string>& errors) {
    std::string msg = what + ":";
    for (const auto& e : errors) msg += "\n  " + e;
    throw std::runtime_error(msg);
}

}  // namespace

Json laurent_to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (const auto& [exp, c] : p.terms()) j[std::to_string(exp)] = c.get_str();
    return j;
}

LaurentPoly laurent_from_json(const Json& j) {
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it)
        p.set_coeff(std::stol(it.key()), rational_from_string(it.value().get<std::string>()));
    return p;
}

Json ratfun_to_json(const RationalFunction& f) {
    Json num = Json::array(), den = Json::array();
    for (const auto& c : f.num()) num.push_back(c.get_str());
    for (const auto& c : f.den()) den.push_back(c.get_str());
    return Json{{"ord", f.ordv()}, {"num", num}, {"den", den}};
}

RationalFunction ratfun_from_json(const Json& j) {
    LaurentPoly num, den;
    long k = 0;
    for (const auto& c : j.at("num")) num.set_coeff(k++, rational_from_string(c.get<std::string>()));
    k = 0;
    for (const auto& c : j.at("den")) den.set_coeff(k++, rational_from_string(c.get<std::string>()));
    return RationalFunction::monomial(j.at("ord").get<long>()) *
           RationalFunction::fraction(num, den);
}

Json vec_to_json(const Vec& u) {
    Json j = Json::array();
    for (const auto& x : u) j.push_back(ratfun_to_json(x));
    return j;
}

Vec vec_from_json(const Json& j) {
    Vec u;
    for (const auto& x : j) u.push_back(ratfun_from_json(x));
    return u;
}

Json mat_to_json(const Mat& a) {
    Json j = Json::array();
    for (const auto& row : a) j.push_back(vec_to_json(row));
    return j;
}

Mat mat_from_json(const Json& j) {
    Mat a;
    for (const auto& row : j) a.push_back(vec_from_json(row));
    return a;
}

Json cartan_to_json(const CartanDatum& d) {
    Json theta = Json::object(), lambda = Json::object();
    for (int i = 0; i < d.n(); ++i) {
        theta[d.names[static_cast<size_t>(i)]] = d.names[static_cast<size_t>(d.theta[static_cast<size_t>(i)])];
        if (d.lam(i) != 0) lambda[d.names[static_cast<size_t>(i)]] = d.lam(i);
    }
    Json j{{"indices", d.names}, {"pairing", d.pairing}, {"theta", theta}};
    if (!lambda.empty()) j["lambda"] = lambda;
    return j;
}

CartanDatum cartan_from_json(const Json& j) {
    CartanDatum d;
    d.names = j.at("indices").get<std::vector<std::string>>();
    d.pairing = j.at("pairing").get<std::vector<std::vector<long>>>();
    d.theta.resize(d.names.size(), -1);
    for (auto it = j.at("theta").begin(); it != j.at("theta").end(); ++it) {
        int src = d.index_of(it.key());
        int dst = d.index_of(it.value().get<std::string>());
        if (src < 0 || dst < 0) throw std::runtime_error("theta names an unknown index");
        d.theta[static_cast<size_t>(src)] = dst;
    }
    if (j.contains("lambda")) {
        d.lambda.assign(d.names.size(), 0);
        for (auto it = j.at("lambda").begin(); it != j.at("lambda").end(); ++it) {
            int i = d.index_of(it.key());
            if (i < 0) throw std::runtime_error("lambda names an unknown index");
            d.lambda[static_cast<size_t>(i)] = it.value().get<long>();
        }
    }
    auto errors = d.validate();
    if (!errors.empty()) fail_validation("invalid Cartan config", errors);
    d.finalize();
    return d;
}

CartanDatum load_cartan(const std::string& path) { return cartan_from_json(load_json(path)); }

QuiverFile quiver_from_json(const Json& j) {
    QuiverFile qf;
    ThetaQuiver& q = qf.quiver;
    q.vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const auto& a : j.at("arrows"))
        q.arrows.push_back({a.at("id").get<std::string>(),
                            q.vertex_of(a.at("out").get<std::string>()),
                            q.vertex_of(a.at("in").get<std::string>())});
    auto arrow_map = [&](const char* field, std::vector<int>& out) {
        out.assign(q.arrows.size(), -1);
        for (auto it = j.at(field).begin(); it != j.at(field).end(); ++it) {
            int src = q.arrow_of(it.key()), dst = q.arrow_of(it.value().get<std::string>());
            if (src < 0 || dst < 0)
                throw std::runtime_error(std::string(field) + " names an unknown arrow");
            out[static_cast<size_t>(src)] = dst;
        }
    };
    arrow_map("bar", q.bar);
    arrow_map("theta_h", q.theta_h);
    q.theta_v.assign(q.vertices.size(), -1);
    for (auto it = j.at("theta_v").begin(); it != j.at("theta_v").end(); ++it) {
        int src = q.vertex_of(it.key()), dst = q.vertex_of(it.value().get<std::string>());
        if (src < 0 || dst < 0) throw std::runtime_error("theta_v names an unknown vertex");
        q.theta_v[static_cast<size_t>(src)] = dst;
    }
    auto errors = q.validate();
    if (!errors.empty()) fail_validation("invalid quiver config", errors);
    if (j.contains("omega")) {
        qf.has_omega = true;
        for (const auto& id : j.at("omega")) {
            int h = q.arrow_of(id.get<std::string>());
            if (h < 0) throw std::runtime_error("omega names an unknown arrow");
            qf.omega.arrows.push_back(h);
        }
        errors = validate_orientation(q, qf.omega);
        if (!errors.empty()) fail_validation("invalid orientation", errors);
    }
    return qf;
}

QuiverFile load_quiver(const std::string& path) { return quiver_from_json(load_json(path)); }

Json weight_space_to_json(const ThetaWeightSpace& ws, const CartanDatum& d) {
    Json words = Json::array();
    for (const auto& w : ws.words) {
        Json jw = Json::array();
        for (int i : w) jw.push_back(d.names[static_cast<size_t>(i)]);
        words.push_back(jw);
    }
    Json matF = Json::object(), matE = Json::object();
    for (const auto& [i, m] : ws.matF) matF[d.names[static_cast<size_t>(i)]] = mat_to_json(m);
    for (const auto& [i, m] : ws.matE) matE[d.names[static_cast<size_t>(i)]] = mat_to_json(m);
    return Json{{"weight", ws.sw.coords}, {"words", words},   {"gram", mat_to_json(ws.gram)},
                {"pivots", ws.pivots},    {"dim", ws.dim},    {"matF", matF},
                {"matE", matE}};
}

Json model_to_json(const ModuleModel& m) {
    Json spaces = Json::object();
    for (const auto& [sw, ws] : m.spaces()) spaces[key_of(sw)] = weight_space_to_json(ws, m.datum());
    return Json{{"depth", m.depth()}, {"spaces", spaces}};
}

Json graph_to_json(const CrystalGraph& g, const CartanDatum& d) {
    Json vertices = Json::array(), edges = Json::array();
    for (const auto& v : g.vertices) {
        Json eps = Json::object();
        for (const auto& [i, e] : v.eps) eps[d.names[static_cast<size_t>(i)]] = e;
        vertices.push_back(Json{{"id", v.id}, {"weight", v.sw.coords}, {"eps", eps}});
    }
    for (const auto& e : g.edges)
        edges.push_back(Json{{"src", e.src},
                             {"index", d.names[static_cast<size_t>(e.index)]},
                             {"dst", e.dst}});
    return Json{{"vertices", vertices}, {"edges", edges}};
}

std::string graph_to_dot(const CrystalGraph& g, const CartanDatum& d) {
    std::ostringstream os;
    os << "digraph crystal {\n  rankdir=TB;\n  node [shape=record];\n";
    for (const auto& v : g.vertices) {
        os << "  b" << v.id << " [label=\"b" << v.id << "|wt=" << v.sw.depth();
        for (const auto& [i, e] : v.eps)
            os << "|eps_" << d.names[static_cast<size_t>(i)] << "=" << e;
        os << "\"];\n";
    }
    for (const auto& e : g.edges)
        os << "  b" << e.src << " -> b" << e.dst << " [label=\""
           << d.names[static_cast<size_t>(e.index)] << "\"];\n";
    os << "}\n";
    return os.str();
}

Json global_table_to_json(const GlobalBasisTable& t) {
    Json g = Json::object(), usedD = Json::object();
    for (const auto& [id, u] : t.G) g[std::to_string(id)] = vec_to_json(u);
    for (const auto& [id, dd] : t.usedD) usedD[std::to_string(id)] = dd;
    auto table = [&](const std::map<int, std::map<int, std::map<int, RationalFunction>>>& src) {
        Json out = Json::object();
        for (const auto& [i, by_b] : src) {
            Json jb = Json::object();
            for (const auto& [b, row] : by_b) {
                Json jr = Json::object();
                for (const auto& [bp, coef] : row) jr[std::to_string(bp)] = ratfun_to_json(coef);
                jb[std::to_string(b)] = jr;
            }
            out[std::to_string(i)] = jb;
        }
        return out;
    };
    return Json{{"G", g},
                {"usedD", usedD},
                {"expansions", Json{{"E", table(t.expansions.E)}, {"F", table(t.expansions.F)}}}};
}

Json report_to_json(const std::string& name, const CheckReport& rep) {
    return Json{{"check", name}, {"ok", rep.ok}, {"failures", rep.failures}, {"notes", rep.notes}};
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return Json::parse(in);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string content_hash(const Json& j) {
    std::string s = canonical_dump(j);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace symcry
