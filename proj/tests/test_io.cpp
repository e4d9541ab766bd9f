#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "tancat/io.hpp"

using namespace tancat;

namespace {

PolyMap QM(int src, const std::vector<std::string>& comps) {
    return testgen::poly_map(Rig::RAT, src, comps);
}

}  // namespace

TEST_CASE("algebra documents round-trip") {
    PresentedAlgebra b3 = testgen::rational_algebra({"t"}, {"t^3"});
    Json doc = algebra_to_json(b3);
    CHECK(doc.dump() == R"({"rig":"Q","generators":["t"],"relations":["t^3"]})");
    CHECK(algebra_from_json(doc) == b3);

    for (const auto& b : testgen::zariski_corpus())
        CHECK(algebra_from_json(algebra_to_json(b)) == b);
    WeilObject w2 = weil_generate(2);
    CHECK(algebra_from_json(algebra_to_json(w2.realized())) == w2.realized());
    CHECK(algebra_to_json(w2.realized()).at("rig") == "N");

    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"generators":[]})")), TancatError);
    CHECK_THROWS_AS(
        algebra_from_json(Json::parse(R"({"rig":"R","generators":[],"relations":[]})")),
        TancatError);
    CHECK_THROWS_AS(
        algebra_from_json(Json::parse(R"({"rig":"Q","generators":"t","relations":[]})")),
        TancatError);
    CHECK_THROWS_AS(
        algebra_from_json(
            Json::parse(R"({"rig":"N","generators":["t"],"relations":["-t"]})")),
        TancatError);
}

TEST_CASE("polynomial map documents round-trip") {
    PolyMap f = QM(2, {"x1 + 2*x2", "x2"});
    Json doc = polymap_to_json(f);
    CHECK(doc.dump() ==
          R"({"rig":"Q","src":2,"dst":2,"components":["x1 + 2*x2","x2"]})");
    CHECK(polymap_from_json(doc) == f);

    Rng rng(7);
    for (int i = 0; i < 25; ++i) {
        PolyMap g = random_polymap(rng, i % 2 ? Rig::RAT : Rig::NAT, 1 + i % 3,
                                   1 + i % 2, 3, 4);
        CHECK(polymap_from_json(polymap_to_json(g)) == g);
    }

    CHECK_THROWS_AS(polymap_from_json(Json::parse(
                        R"({"rig":"Q","src":1,"dst":2,"components":["x1"]})")),
                    TancatError);
    CHECK_THROWS_AS(polymap_from_json(Json::parse(
                        R"({"rig":"Q","src":1,"dst":1,"components":["x2"]})")),
                    TancatError);
    CHECK_THROWS_AS(polymap_from_json(Json::parse(
                        R"({"rig":"Q","src":"1","dst":1,"components":["x1"]})")),
                    TancatError);
}

TEST_CASE("derivative documents print the y-block") {
    Json doc = derivative_to_json(cdc_D(QM(1, {"x1^2"})));
    CHECK(doc.dump() == R"({"rig":"Q","src":2,"dst":1,"components":["2*x1*y1"]})");

    Json lin = derivative_to_json(cdc_D(QM(2, {"x1 + 2*x2", "x2"})));
    CHECK(lin.at("src") == 4);
    CHECK(lin.at("components") == Json::array({"y1 + 2*y2", "y2"}));

    CHECK_THROWS_AS(derivative_to_json(QM(1, {"x1", "x1"})), TancatError);
}

TEST_CASE("diagram documents round-trip all bases") {
    IndObject sq = testgen::two_apoly(QM(1, {"x1^2"}));
    Json doc = ind_to_json(sq);
    CHECK(doc.dump() ==
          R"({"index":{"objects":["0","1"],"arrows":[{"name":"f","src":"0","dst":"1"}],)"
          R"("relations":[]},"base":"APoly","objects":{"0":{"rig":"Q","arity":1},)"
          R"("1":{"rig":"Q","arity":1}},"arrows":{"f":{"rig":"Q","src":1,"dst":1,)"
          R"("components":["x1^2"]}}})");
    CHECK(ind_from_json(doc) == sq);

    for (const auto& x : testgen::ind_corpus())
        CHECK(ind_from_json(ind_to_json(x)) == x);
    IndObject cov = testgen::truncation_alg_chain();
    CHECK(ind_from_json(ind_to_json(cov)) == cov);

    // Path relations serialize as semicolon-joined pairs and rebuild the
    // same composition table.
    Json eq = ind_to_json(testgen::equalizer_apoly());
    CHECK(eq.at("index").at("relations") == Json::parse(R"([["b;w","a;w"]])"));

    // Scheme towers keep the algebra-direction images.
    FormalSpf spf = formal_spf(2);
    Json tower = ind_to_json(spf.scheme);
    CHECK(tower.at("base") == "AlgOp");
    CHECK(tower.at("objects").at("1") ==
          Json::parse(R"({"rig":"Q","generators":["t"],"relations":["t"]})"));
    CHECK(tower.at("arrows").at("u1") == Json::parse(R"({"images":{"t":"t"}})"));
    CHECK(ind_from_json(tower) == spf.scheme);
    CHECK(ind_from_json(ind_to_json(spf.tangent)) == spf.tangent);

    Json bad_base = doc;
    bad_base["base"] = "Poly";
    CHECK_THROWS_AS(ind_from_json(bad_base), TancatError);
    Json bad_rel = doc;
    bad_rel["index"]["relations"] = Json::parse(R"([["f"]])");
    CHECK_THROWS_AS(ind_from_json(bad_rel), TancatError);
    Json mixed = doc;
    mixed["objects"]["1"]["rig"] = "N";
    CHECK_THROWS_AS(ind_from_json(mixed), TancatError);
    Json no_images = tower;
    no_images["arrows"]["u1"] = Json::parse(R"({"t":"t"})");
    CHECK_THROWS_AS(ind_from_json(no_images), TancatError);
    Json wrong_gen = tower;
    wrong_gen["arrows"]["u1"] = Json::parse(R"({"images":{"s":"t"}})");
    CHECK_THROWS_AS(ind_from_json(wrong_gen), TancatError);
}

TEST_CASE("check records and inline rendering") {
    CHECK(report_record({"Axiom 2: section", true, ""}).dump() ==
          R"({"name":"Axiom 2: section","status":"PASS","witness":""})");
    CHECK(report_record({"naturality: q (hom 1)", false, "t"}).dump() ==
          R"j({"name":"naturality: q (hom 1)","status":"FAIL","witness":"t"})j");

    CHECK(render_algebra_inline(testgen::rational_algebra({"t"}, {"t^2"})) ==
          "Q[t]/(t^2)");
    CHECK(render_algebra_inline(testgen::rational_algebra({"t"}, {})) == "Q[t]");
    CHECK(render_algebra_inline(weil_generate(0).realized()) == "N[]");
    CHECK(render_algebra_inline(weil_generate(2).realized()) ==
          "N[x1, x2]/(x1^2, x1*x2, x2^2)");

    CHECK(render_spf(formal_spf(2)) ==
          "level 1: ring Q[t]/(t), tangent Q[t, d_t]/(t, d_t)\n"
          "level 2: ring Q[t]/(t^2), tangent Q[t, d_t]/(t^2, 2*d_t*t)\n");
}
