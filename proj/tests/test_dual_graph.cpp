#include <doctest.h>

#include <numeric>
#include <regex>

#include <json.hpp>

#include "support.hpp"

using namespace logenr;
using namespace testing_support;

namespace {

DualGraph z2_chain() {
    DualGraph g;
    g.add_vertex(curve("e1", -3, Q("3/7")))
        .add_vertex(curve("e2", -2, Q("2/7")))
        .add_vertex(curve("e3", -2, Q("1/7")))
        .add_vertex(curve("o", -1, 0, CurveKind::Circle))
        .add_vertex(boundary("C", 0));
    g.add_edge("e1", "e2").add_edge("e2", "e3").add_edge("e3", "o").add_edge("o", "C");
    return g;
}

std::size_t count(const std::string& text, const std::regex& re) {
    return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                                                  std::sregex_iterator()));
}

const std::regex kNodeStmt(R"(^  "[^"]+" \[)", std::regex::multiline);
const std::regex kEdgeStmt(R"(^  "[^"]+" -- "[^"]+";)", std::regex::multiline);

}  // namespace

TEST_SUITE("dual_graph") {
    TEST_CASE("construction and queries") {
        DualGraph g = z2_chain();
        CHECK(g.size() == 5);
        CHECK(g.multiplicity("e3", "o") == 1);
        CHECK(g.multiplicity("o", "e3") == 1);
        CHECK(g.multiplicity("e1", "C") == 0);
        CHECK(g.degree("o") == 2);
        CHECK(g.is_connected());
        CHECK(g.fresh_id("e") == "e4");
        g.add_edge("e1", "e2");
        CHECK(g.multiplicity("e1", "e2") == 2);
        CHECK(error_code([&] { g.add_edge("e1", "e1"); }) == Errc::InvalidArgument);
        CHECK(error_code([&] { g.add_vertex(curve("e1", -2)); }) == Errc::InvalidArgument);
        CHECK(error_code([&] { (void)g.index_of("nope"); }) == Errc::UnknownVertex);
        g.remove_vertex("o");
        CHECK_FALSE(g.is_connected());
        CHECK(g.edges().size() == 2);
    }

    TEST_CASE("intersection_matrix examples") {
        DualGraph g;
        g.add_vertex(curve("a", -2)).add_vertex(curve("b", -2)).add_edge("a", "b", 2);
        CHECK(intersection_matrix(g, {"a", "b"}) == SymMatrix{{-2, 2}, {2, -2}});

        DualGraph o;
        o.add_vertex(curve("o", -1, 0, CurveKind::Circle));
        CHECK(intersection_matrix(o, {"o"}) == SymMatrix{{-1}});

        CHECK(error_code([&] { intersection_matrix(g, {"a", "zz"}); }) == Errc::UnknownVertex);
        CHECK(error_code([&] { intersection_matrix(g, {"a", "a"}); }) == Errc::InvalidArgument);
    }

    TEST_CASE("nodes never enter the matrix") {
        DualGraph g;
        g.add_vertex(boundary("C", 6, Q("6/7"), 1));
        CHECK(intersection_matrix(g, {"C"}) == SymMatrix{{6}});
    }

    TEST_CASE("golden intersection matrix has the figure diagonal") {
        const DualGraph g = golden_graph(ModelCase::A26).graph;
        const auto ids = g.ids();
        const SymMatrix m = intersection_matrix(g, ids);
        REQUIRE(m.order() == 47);
        for (std::size_t i = 0; i < ids.size(); ++i) CHECK(m(i, i) == g.vertex(ids[i]).self_int);
        CHECK(g.ids_of_kind(CurveKind::Exceptional).size() == 30);
        CHECK(g.ids_of_kind(CurveKind::Circle).size() == 15);
        CHECK(g.ids_of_kind(CurveKind::Boundary).size() == 2);
        const IntMatrix im = integer_intersection_matrix(g, ids);
        CHECK(im.to_rational() == m);
    }

    TEST_CASE("reordering the subset conjugates the matrix") {
        std::mt19937_64 rng(21);
        for (int trial = 0; trial < 50; ++trial) {
            const DualGraph g = random_graph(rng, 3 + trial % 10);
            auto ids = g.ids();
            const SymMatrix m = intersection_matrix(g, ids);
            std::vector<std::size_t> p(ids.size());
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            std::vector<std::string> shuffled;
            for (auto i : p) shuffled.push_back(ids[i]);
            CHECK(intersection_matrix(g, shuffled) == m.principal(p));
        }
    }
}

TEST_SUITE("isomorphism") {
    TEST_CASE("reflexive on the embedded graphs") {
        for (auto c : {ModelCase::A26, ModelCase::I22}) {
            CHECK(is_isomorphic(golden_graph(c).graph, golden_graph(c).graph));
            CHECK(is_isomorphic(minimal_resolution_graph(c).graph, minimal_resolution_graph(c).graph));
        }
    }

    TEST_CASE("the two golden graphs differ") {
        CHECK_FALSE(is_isomorphic(golden_graph(ModelCase::A26).graph, golden_graph(ModelCase::I22).graph));
    }

    TEST_CASE("circle involution is realised by an automorphism") {
        for (auto c : {ModelCase::A26, ModelCase::I22}) {
            const DualGraph g = golden_graph(c).graph;
            bool found = false;
            for (const auto& map : isomorphisms(g, g)) {
                bool ok = true;
                for (int k = 1; k <= 15; ++k) {
                    const auto from = g.index_of(*g.find_label(std::to_string(k)));
                    const auto to = g.index_of(*g.find_label(std::to_string(circle_involution(c, k))));
                    if (map[from] != to) ok = false;
                }
                found = found || ok;
            }
            CHECK(found);
        }
        CHECK(circle_involution(ModelCase::A26, 10) == 15);
        CHECK(circle_involution(ModelCase::A26, 12) == 13);
        CHECK(circle_involution(ModelCase::A26, 9) == 9);
        CHECK(circle_involution(ModelCase::I22, 4) == 10);
        CHECK(circle_involution(ModelCase::I22, 15) == 9);
        CHECK(circle_involution(ModelCase::I22, 2) == 2);
    }

    TEST_CASE("random graphs: reflexive, symmetric, relabel invariant") {
        std::mt19937_64 rng(22);
        for (int trial = 0; trial < 100; ++trial) {
            const DualGraph g = random_graph(rng, 2 + trial % 20);
            const DualGraph h = relabel(g, rng);
            CHECK(is_isomorphic(g, g));
            CHECK(is_isomorphic(g, h));
            CHECK(is_isomorphic(h, g));
            for (const auto& map : isomorphisms(g, h, 4)) {
                for (std::size_t i = 0; i < g.size(); ++i) {
                    const auto& a = g.vertices()[i];
                    const auto& b = h.vertices()[map[i]];
                    CHECK(a.self_int == b.self_int);
                    CHECK(a.coeff == b.coeff);
                }
            }
            DualGraph broken = h;
            broken.vertex(broken.vertices().front().id).self_int += 1;
            CHECK_FALSE(is_isomorphic(g, broken));
        }
    }

    TEST_CASE("multiplicities and nodes matter, labels do not") {
        DualGraph a, b;
        a.add_vertex(curve("x", -2)).add_vertex(curve("y", -2)).add_edge("x", "y", 2);
        b.add_vertex(curve("x", -2)).add_vertex(curve("y", -2)).add_edge("x", "y", 1);
        CHECK_FALSE(is_isomorphic(a, b));
        DualGraph c = a;
        c.vertex("x").label = "C1";
        CHECK(is_isomorphic(a, c));
        c.vertex("x").nodes = 1;
        CHECK_FALSE(is_isomorphic(a, c));
    }
}

TEST_SUITE("serialization") {
    TEST_CASE("round trip of the Z2 chain") {
        const DualGraph g = z2_chain();
        CHECK(deserialize(serialize(g)) == g);
        CHECK(deserialize(graph_doc_from_json(to_json_text(serialize(g)))) == g);
    }

    TEST_CASE("round trip of the golden graphs keeps ids and labels") {
        for (auto c : {ModelCase::A26, ModelCase::I22}) {
            const DualGraph g = golden_graph(c).graph;
            const std::string text = to_json_text(serialize(g));
            const DualGraph back = deserialize(graph_doc_from_json(text));
            CHECK(back == g);
            CHECK(back.size() == 47);
            for (int k = 1; k <= 15; ++k) CHECK(back.find_label(std::to_string(k)) == g.find_label(std::to_string(k)));
            CHECK(to_json_text(serialize(back)) == text);
        }
    }

    TEST_CASE("random graphs round trip") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 50; ++trial) {
            const DualGraph g = random_graph(rng, 1 + trial % 15);
            CHECK(deserialize(graph_doc_from_json(to_json_text(serialize(g)))) == g);
        }
    }

    TEST_CASE("document format") {
        DualGraph g;
        g.add_vertex(boundary("C", Q("-14"), Q("6/7"), 1)).add_vertex(curve("o", -1, 0, CurveKind::Circle));
        g.vertex("o").label = "3";
        g.add_edge("C", "o", 2);
        const auto j = nlohmann::json::parse(to_json_text(serialize(g)));
        CHECK(j["vertices"][0]["self_int"] == "-14");
        CHECK(j["vertices"][0]["coeff"] == "6/7");
        CHECK(j["vertices"][0]["kind"] == "boundary");
        CHECK(j["vertices"][0]["label"].is_null());
        CHECK(j["vertices"][0]["nodes"] == 1);
        CHECK(j["vertices"][1]["label"] == "3");
        CHECK(j["edges"][0]["mult"] == 2);
    }

    TEST_CASE("malformed documents") {
        const GraphDoc good = serialize(z2_chain());
        auto rejects = [](GraphDoc d) { return error_code([&] { deserialize(d); }) == Errc::MalformedDocument; };
        GraphDoc d = good;
        d.edges.push_back({"e1", "ghost", 1});
        CHECK(rejects(d));
        d = good;
        d.vertices[0].coeff = "6/14";
        CHECK(rejects(d));
        d = good;
        d.vertices[0].self_int = "minus three";
        CHECK(rejects(d));
        d = good;
        d.vertices[0].kind = "line";
        CHECK(rejects(d));
        d = good;
        d.vertices[1].id = d.vertices[0].id;
        CHECK(rejects(d));
        d = good;
        d.edges[0].mult = 0;
        CHECK(rejects(d));
        d = good;
        d.edges.push_back(d.edges[0]);
        CHECK(rejects(d));
        d = good;
        d.vertices[0].label = "16";
        CHECK(rejects(d));
        d = good;
        d.vertices[3].coeff = "1/7";  // a circle must have coefficient 0
        CHECK(rejects(d));
        d = good;
        d.vertices[0].nodes = -1;
        CHECK(rejects(d));

        CHECK(error_code([] { graph_doc_from_json("{"); }) == Errc::MalformedDocument);
        CHECK(error_code([] { graph_doc_from_json(R"({"vertices":[]})"); }) == Errc::MalformedDocument);
        CHECK(error_code([] {
                  graph_doc_from_json(R"({"vertices":[{"id":"a","self_int":-2,"coeff":"0","kind":"exceptional",)"
                                      R"("label":null,"nodes":0}],"edges":[]})");
              }) == Errc::MalformedDocument);
    }
}

TEST_SUITE("to_dot") {
    TEST_CASE("single vertex") {
        DualGraph g;
        g.add_vertex(curve("a", -2, Q("3/7")));
        const std::string dot = to_dot(g);
        CHECK(dot.rfind("graph \"dual_graph\" {", 0) == 0);
        CHECK(count(dot, kNodeStmt) == 1);
        CHECK(count(dot, kEdgeStmt) == 0);
        CHECK(dot.find("-2 | 3/7") != std::string::npos);
        CHECK(dot.back() == '\n');
    }

    TEST_CASE("Z2 chain: five nodes, four edges, one hollow circle") {
        const std::string dot = to_dot(z2_chain());
        CHECK(count(dot, kNodeStmt) == 5);
        CHECK(count(dot, kEdgeStmt) == 4);
        CHECK(count(dot, std::regex("style=solid")) == 1);
        CHECK(count(dot, std::regex("shape=box")) == 1);
        CHECK(count(dot, std::regex("style=filled")) == 3);
    }

    TEST_CASE("multiplicity 2 gives two parallel edges") {
        DualGraph g;
        g.add_vertex(curve("a", -2)).add_vertex(curve("b", -2)).add_edge("a", "b", 2);
        CHECK(count(to_dot(g), kEdgeStmt) == 2);
    }
}
