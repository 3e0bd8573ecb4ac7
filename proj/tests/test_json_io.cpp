#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symcry/json_io.hpp"
#include "test_data.hpp"

using namespace symcry;
using namespace symcry::testdata;

TEST_CASE("laurent round trip") {
    LaurentPoly p = LaurentPoly::monomial(-3, Rational(5, 2)) + LaurentPoly::monomial(0, 1) +
                    LaurentPoly::monomial(7, Rational(-1, 3));
    CHECK(laurent_from_json(laurent_to_json(p)) == p);
    CHECK(laurent_from_json(laurent_to_json(LaurentPoly::zero())) == LaurentPoly::zero());
}

TEST_CASE("rational function round trip") {
    RationalFunction f = RationalFunction::fraction(
        LaurentPoly::monomial(-2, 1) + LaurentPoly::one(),
        LaurentPoly::one() + LaurentPoly::monomial(1, Rational(1, 2)));
    CHECK(ratfun_from_json(ratfun_to_json(f)) == f);
    CHECK(ratfun_from_json(ratfun_to_json(RationalFunction())) == RationalFunction());
    Vec u{f, RationalFunction(3), RationalFunction::monomial(-1)};
    CHECK(vec_from_json(vec_to_json(u)) == u);
    Mat m{u, u};
    CHECK(mat_from_json(mat_to_json(m)) == m);
}

TEST_CASE("cartan config round trip") {
    for (CartanDatum d : {sl3(), a4chain(), a1affine()}) {
        CartanDatum back = cartan_from_json(cartan_to_json(d));
        CHECK(back.names == d.names);
        CHECK(back.pairing == d.pairing);
        CHECK(back.theta == d.theta);
        CHECK(back.orbit == d.orbit);
    }
    CartanDatum l = sl3();
    l.lambda = {2, 2};
    CartanDatum back = cartan_from_json(cartan_to_json(l));
    CHECK(back.lam(0) == 2);
    CHECK(back.lam(1) == 2);
}

TEST_CASE("invalid configs are rejected with a message") {
    Json j{{"indices", {"1", "-1"}},
           {"pairing", {{2, -1}, {-1, 2}}},
           {"theta", {{"1", "1"}, {"-1", "-1"}}}};  // fixed points
    CHECK_THROWS(cartan_from_json(j));
}

TEST_CASE("quiver config parsing") {
    Json j{{"vertices", {"1", "-1"}},
           {"arrows",
            {Json{{"id", "h"}, {"out", "1"}, {"in", "-1"}},
             Json{{"id", "hb"}, {"out", "-1"}, {"in", "1"}}}},
           {"bar", {{"h", "hb"}, {"hb", "h"}}},
           {"theta_v", {{"1", "-1"}, {"-1", "1"}}},
           {"theta_h", {{"h", "h"}, {"hb", "hb"}}},
           {"omega", {"h"}}};
    QuiverFile qf = quiver_from_json(j);
    CHECK(qf.quiver.vertices.size() == 2);
    CHECK(qf.has_omega);
    CHECK(validate_orientation(qf.quiver, qf.omega).empty());
    CHECK(qf.quiver.derive_pairing() == sl3().pairing);
    // broken bar rejected
    Json bad = j;
    bad["bar"] = Json{{"h", "h"}, {"hb", "hb"}};
    CHECK_THROWS(quiver_from_json(bad));
}

TEST_CASE("canonical dump is deterministic and hash is stable") {
    Json a{{"b", 1}, {"a", 2}};
    Json b{{"a", 2}, {"b", 1}};
    CHECK(canonical_dump(a) == canonical_dump(b));
    CHECK(content_hash(a) == content_hash(b));
    Json c{{"a", 2}, {"b", 3}};
    CHECK(content_hash(a) != content_hash(c));
}

TEST_CASE("graph serialization") {
    CartanDatum d = sl3();
    ModuleModel m(d, 3);
    CrystalData c = build_crystal(m);
    Json g = graph_to_json(c.graph, d);
    CHECK(g.at("vertices").size() == c.graph.vertices.size());
    CHECK(g.at("edges").size() == c.graph.edges.size());
    std::string dot = graph_to_dot(c.graph, d);
    CHECK(dot.find("digraph crystal") != std::string::npos);
    CHECK(dot.find("b0") != std::string::npos);
    CHECK(dot.find("eps_1=") != std::string::npos);
    // emitting twice is bit-identical
    CHECK(dot == graph_to_dot(c.graph, d));
    CHECK(canonical_dump(g) == canonical_dump(graph_to_json(c.graph, d)));
}

TEST_CASE("model and weight-space serialization") {
    CartanDatum d = sl3();
    ModuleModel m(d, 2);
    Json j = model_to_json(m);
    CHECK(j.at("depth") == 2);
    CHECK(j.at("spaces").size() == m.spaces().size());
    for (const auto& [key, ws] : j.at("spaces").items()) {
        CHECK(ws.contains("gram"));
        CHECK(ws.contains("pivots"));
        CHECK(ws.contains("dim"));
        // operator matrices survive a round trip entrywise
        for (const auto& [name, mat] : ws.at("matF").items())
            CHECK(mat_to_json(mat_from_json(mat)) == mat);
    }
}
