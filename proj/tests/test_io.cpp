#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "eghforge/io.hpp"
#include "helpers.hpp"

using namespace eghforge;
using eghforge::testing::make_ideal;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/eghforge_io_" + name) {
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("ideal JSON round trip") {
    MonomialIdeal I = make_ideal(3, {"x1^2*x3", "x2*x3"});
    Json j = to_json(I);
    CHECK(j["vars"] == 3);
    CHECK(ideal_from_json(j) == I);
}

TEST_CASE("ideal file loading: JSON and plain-text sugar") {
    TempFile json_file("ideal.json", R"({"vars": 3, "gens": ["x1*x2", "x1*x3", "x2*x3"]})");
    CHECK(load_ideal(json_file.path) == make_ideal(3, {"x1*x2", "x1*x3", "x2*x3"}));

    TempFile text_file("ideal.txt", "vars: 3\nx1*x2\nx1*x3\n# comment\n\nx2*x3\n");
    CHECK(load_ideal(text_file.path) == make_ideal(3, {"x1*x2", "x1*x3", "x2*x3"}));

    TempFile crlf("ideal_crlf.txt", "vars: 2\r\nx1^2\r\nx2\r\n");
    CHECK(load_ideal(crlf.path) == make_ideal(2, {"x1^2", "x2"}));

    TempFile bad("bad.txt", "x1*x2\n");
    CHECK_THROWS(load_ideal(bad.path));
    CHECK_THROWS(load_ideal("/tmp/eghforge_io_no_such_file"));
}

TEST_CASE("series JSON uses decimal strings") {
    HilbertSeries s = hilbert_series(make_ideal(3, {"x1*x2", "x1*x3", "x2*x3"}));
    Json j = to_json(s);
    CHECK(j["numerator"] == Json::array({"1", "0", "-3", "2"}));
    CHECK(j["denom_power"] == 3);
}

TEST_CASE("cap vector JSON round trip") {
    CapVector ring = make_cap_vector(4, {2, 3});
    Json j = to_json(ring);
    CapVector back = cap_vector_from_json(j);
    CHECK(back == ring);
    CHECK_THROWS(cap_vector_from_json(Json::parse(R"({"vars": 2, "caps": [3, 2]})")));
}

TEST_CASE("complex JSON round trip") {
    Json j = Json::parse(R"({"vertices": ["1","2","3"], "facets": [["1","2"],["1","3"],["2","3"]]})");
    SimplicialComplex c = complex_from_json(j);
    CHECK(c.vertex_count() == 3);
    CHECK(c.facets.size() == 3);
    Json back = to_json(c);
    CHECK(complex_from_json(back).facets == c.facets);
    CHECK_THROWS(complex_from_json(Json::parse(R"({"vertices": ["1"], "facets": [["2"]]})")));
}

TEST_CASE("partition JSON round trip") {
    VertexPartition p{{{"1", "2"}, {"3"}}, {1, 1}};
    VertexPartition back = partition_from_json(to_json(p));
    CHECK(back.blocks == p.blocks);
    CHECK(back.bounds == p.bounds);
}

TEST_CASE("products parse from a bare list or an object") {
    Json list = Json::parse(R"(["x1;x2", "x3;x1+x2"])");
    std::vector<ProductOfLinearForms> fs = products_from_json(list, std::nullopt);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].vars() == 3);  // inferred from the largest index
    CHECK(fs[0].degree() == 2);

    Json obj = Json::parse(R"({"vars": 4, "products": ["x1;x2"]})");
    std::vector<ProductOfLinearForms> gs = products_from_json(obj, std::nullopt);
    CHECK(gs[0].vars() == 4);

    std::vector<ProductOfLinearForms> hs = products_from_json(list, 5);
    CHECK(hs[0].vars() == 5);
}

TEST_CASE("witness result serialization carries the report fields") {
    MonomialIdeal I = make_ideal(3, {"x1*x2", "x1*x3", "x2*x3"});
    WitnessResult w = egh_witness(I, make_cap_vector(3, {2, 2}));
    Json j = to_json(w);
    CHECK(j.contains("witness"));
    CHECK(j["caps"] == Json::array({2, 2}));
    CHECK(j["certified"] == true);
    CHECK(j["horizon"].get<int>() >= 8);
    CHECK(j["per_degree"].is_array());
    CHECK(j["per_degree"][2]["segment"] == "1");
}
