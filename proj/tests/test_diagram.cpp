#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace vkd;

namespace {

const std::vector<std::string> ab = {"a", "b"};
Word W(const std::string& s) { return parse_word(s, ab); }
const CyclicProducts trivial2 = uniform_cyclic(2, ExponentSet::exactly(1));
const CyclicProducts exact2{ab, {ExponentSet::exactly(2), ExponentSet::zero()}};
const Letter a{1, 1}, A{1, -1};

// Two faces a^2 and a^-2 sharing one edge; boundary a a^-1.
Diagram theta() {
    DiagramBuilder b{Presentation{exact2}};
    int e1 = b.edge(a), e2 = b.edge(a), e3 = b.edge(A);
    b.face({e1, e2});
    b.face({b.inv(e2), e3});
    return b.finish({b.inv(e3), b.inv(e1)});
}

// Monogons a and a^-1 meeting at one vertex.
Diagram mirror_pair() {
    DiagramBuilder b{Presentation{trivial2}};
    int x = b.edge(a), y = b.edge(A);
    b.face({x});
    b.face({y});
    return b.finish({b.inv(x), b.inv(y)});
}

Diagram monogon() {
    DiagramBuilder b{Presentation{trivial2}};
    int x = b.edge(A);
    b.face({x});
    return b.finish({b.inv(x)});
}

Diagram tree() {
    DiagramBuilder b{Presentation{trivial2}};
    int x = b.edge(a);
    return b.finish({x, b.inv(x)});
}

} // namespace

TEST_CASE("hand-built diagrams validate", "[diagram]") {
    CHECK(validate(theta(), exact2).empty());
    CHECK(validate(mirror_pair(), trivial2).empty());
    CHECK(validate(monogon(), trivial2).empty());
    CHECK(validate(tree(), trivial2).empty());
    CHECK(validate(Diagram{}, trivial2).empty());
}

TEST_CASE("boundary words", "[diagram]") {
    CHECK(boundary_word(monogon()) == W("a"));
    CHECK(boundary_word(tree()) == W("a A"));
    CHECK(boundary_word(tree(), 1) == W("A a"));
    CHECK(boundary_word(theta()) == W("a A"));
    CHECK_THROWS_AS(boundary_word(tree(), 7), Error);
    CHECK(boundary_word(Diagram{}).empty());
}

TEST_CASE("property A", "[diagram]") {
    CHECK_FALSE(check_property_A(theta()));
    CHECK(check_property_A(mirror_pair()));
    CHECK(check_property_A(tree()));
    CHECK(check_property_A(minimal_diagram_cyclic(W("a b A B"), trivial2)));
}

TEST_CASE("reduced diagrams", "[diagram]") {
    CHECK_FALSE(check_reduced(mirror_pair()));
    CHECK(check_reduced(tree()));
    CHECK(check_reduced(monogon()));
    CHECK(check_reduced(minimal_diagram_cyclic(W("a b A B"), trivial2)));
    CHECK(check_reduced(minimal_diagram_bs(parse_word("a2 a2 a1 A2 A2 a1^-4", baumslag_solitar(1, 2)), baumslag_solitar(1, 2))));
}

TEST_CASE("validate reports violations", "[diagram]") {
    DiagramBuilder b{Presentation{CyclicProducts{{"a"}, {ExponentSet::exactly(3)}}}};
    auto bd = polygon(b, a, 2);
    Diagram d = b.finish(bd);
    CHECK(validate(d, CyclicProducts{{"a"}, {ExponentSet::exactly(3)}}) == std::vector<std::string>{"bad-face-label"});
    CHECK(validate(d, CyclicProducts{{"a"}, {ExponentSet::exactly(2)}}).empty());

    Diagram broken = monogon();
    broken.darts[1].label = A;
    CHECK(validate(broken, trivial2) == std::vector<std::string>{"label-involution"});
    broken = monogon();
    broken.darts[0].inv = 0;
    CHECK(validate(broken, trivial2) == std::vector<std::string>{"label-involution"});

    Diagram lost = theta();
    lost.boundary.pop_back();
    CHECK(validate(lost, exact2) == std::vector<std::string>{"dart-cover"});

    CHECK(validate(monogon(), uniform_cyclic(2, ExponentSet::exactly(2))) == std::vector<std::string>{"bad-face-label"});
    CHECK(validate(monogon(), uniform_cyclic(0, ExponentSet::exactly(1))) == std::vector<std::string>{"label-outside-alphabet"});
}

TEST_CASE("statistics", "[diagram]") {
    auto p = baumslag_solitar(1, 2);
    Diagram d3 = minimal_diagram_bs(parse_word("a2 a2 a1 A2 A2 a1^-4", p), p);
    CHECK(statistics(d3, parse_tau("faces", {"a1", "a2"})).tau == std::vector<long long>{3});
    CHECK(statistics(monogon(), parse_tau("faces,len:1:1", ab)).tau == std::vector<long long>{1, 1});
    Diagram d2 = minimal_diagram_cyclic(W("a b A B"), trivial2);
    // exponent sums force both faces onto the same generator
    CHECK(statistics(d2, parse_tau("faces,label:a", ab)).tau == std::vector<long long>{2, 2});
    CHECK(statistics(d2, parse_tau("faces,-label:b,label:a:2", ab)).tau == std::vector<long long>{2, 0, 0});
    CHECK(mu2_lex(W("a b A B"), trivial2, parse_tau("faces,label:a", ab)).first == std::vector<long long>{2, 0});
    CHECK(mu2_lex(W("a b A B"), trivial2, parse_tau("faces,-label:b", ab)).first == std::vector<long long>{2, -2});
    auto st = statistics(tree(), parse_tau("faces", ab));
    CHECK(st.vertex_degree == std::map<int, int>{{1, 2}});
    CHECK(st.vertex_face_degree == std::map<int, int>{{0, 2}});
}

TEST_CASE("a2 bands", "[diagram]") {
    auto p = baumslag_solitar(1, 2);
    Diagram one = minimal_diagram_bs(parse_word("a2 a1 A2 A1 A1", p), p);
    auto bands = a2_bands(one);
    REQUIRE(bands.size() == 1);
    CHECK(bands[0].faces.size() == 1);
    CHECK(band_labels_ok(one, bands[0]));
    CHECK(a2_bands(minimal_diagram_bs(parse_word("a1 A1", p), p)).empty());
    CHECK_THROWS_AS(a2_bands(monogon()), Error);
}

TEST_CASE("property A bounds face counts", "[diagram]") {
    std::mt19937_64 rng(71);
    auto pm = uniform_cyclic(2, ExponentSet::multiples(2));
    for (int t = 0; t < 100; ++t) {
        Word w = oracle::random_trivial_word(pm, rng, 16);
        Diagram d = minimal_diagram_cyclic(w, pm);
        REQUIRE(check_property_A(d));
        long long perim = 0;
        for (const auto& f : d.faces) perim += static_cast<long long>(f.size());
        CHECK(d.face_count() <= static_cast<int>(w.size()));
        CHECK(perim <= static_cast<long long>(w.size()));
    }
}

TEST_CASE("JSON export and import", "[diagram]") {
    std::mt19937_64 rng(73);
    std::vector<Diagram> corpus = {theta(), mirror_pair(), monogon(), tree()};
    for (int t = 0; t < 20; ++t) corpus.push_back(minimal_diagram_cyclic(oracle::random_trivial_word(trivial2, rng, 12), trivial2));
    auto p = baumslag_solitar(1, 2);
    for (int t = 0; t < 20; ++t) corpus.push_back(minimal_diagram_bs(oracle::random_trivial_word(p, rng, 12), p));
    for (const auto& d : corpus) {
        std::string text = export_json(d);
        Diagram back = import_json(text, d.pres);
        CHECK(export_json(back) == text);
        CHECK(boundary_word(back) == boundary_word(d));
        CHECK(validate(back, d.pres) == validate(d, d.pres));
    }
    auto j = nlohmann::json::parse(export_json(tree()));
    CHECK(j["faces"].empty());
    CHECK(j["boundary"].size() == 2);
    CHECK_THROWS_AS(import_json("{\"schema\":2}", Presentation{trivial2}), Error);
    CHECK_THROWS_AS(import_json("not json", Presentation{trivial2}), Error);
}

TEST_CASE("import honors the basepoint", "[diagram]") {
    auto j = nlohmann::json::parse(export_json(tree()));
    j["basepoint"] = 1;
    CHECK(boundary_word(import_json(j.dump(), Presentation{trivial2})) == W("A a"));
    j["basepoint"] = 5;
    CHECK_THROWS_AS(import_json(j.dump(), Presentation{trivial2}), Error);
}

TEST_CASE("Dot export", "[diagram]") {
    std::string dot = export_dot(monogon());
    CHECK(dot.find("v0 -- v0") != std::string::npos);
    CHECK(dot.rfind("graph diagram {", 0) == 0);
    std::string t = export_dot(tree());
    CHECK(t.find("v0 -- v1") != std::string::npos);
}
