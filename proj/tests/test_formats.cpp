#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "toricnc/formats.hpp"

using namespace toricnc;

TEST_SUITE("formats") {

TEST_CASE("partition text round trip") {
    const auto pi = make_nc_partition(6, {{1, 3, 6}, {2}, {4}, {5}});
    CHECK(partition_text(pi) == "(136)(2)(4)(5)");
    CHECK(parse_partition("(136)(2)(4)(5)") == pi);
    CHECK(parse_partition(" (136) (2)(4)(5) ") == pi);
    CHECK(parse_partition("(1,3,6)(2)(4)(5)") == pi);

    const auto wide = make_nc_partition(11, {{1, 10, 11}, {2, 9}, {3, 4, 5, 6, 7, 8}});
    CHECK(partition_text(wide) == "(1,10,11)(2,9)(3,4,5,6,7,8)");
    CHECK(parse_partition(partition_text(wide)) == wide);
}

TEST_CASE("partition parse rejects") {
    CHECK_THROWS_WITH_AS((void)parse_partition(""), "cannot parse partition",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_partition("(12"), "cannot parse partition",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_partition("(1)()"), "cannot parse partition",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_partition("(102)"), "cannot parse partition",
                         std::invalid_argument);
    // digits form but elements exceed the ground set
    CHECK_THROWS_WITH_AS((void)parse_partition("(13)"), "not a partition",
                         std::invalid_argument);
    // crossing blocks survive parsing but fail validation
    CHECK_THROWS_AS((void)parse_partition("(13)(24)"), std::invalid_argument);
}

TEST_CASE("family text round trip") {
    const IntervalFamily s(6, {{2, 3}, {4, 4}, {6, 1}});
    CHECK(family_text(s) == "{[2,3],[4],[6,1]}");
    CHECK(parse_family(6, "{[2,3],[4],[6,1]}") == s);
    CHECK(parse_family(6, "{ [6,1] , [2,3], [4] }") == s);
    CHECK(family_text(IntervalFamily::empty(4)) == "{}");
    CHECK(parse_family(4, "{}") == IntervalFamily::empty(4));
    CHECK(family_text(IntervalFamily::full_star(6)) == "{[1,6]*}");
    CHECK(parse_family(6, "{[1,6]*}") == IntervalFamily::full_star(6));
}

TEST_CASE("family parse rejects") {
    CHECK_THROWS_WITH_AS((void)parse_family(6, "[2,3]"), "cannot parse interval family",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_family(6, "{[2,3][4]}"), "cannot parse interval family",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_family(6, "{[2,3,4]}"), "cannot parse interval family",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_family(6, "{*}"), "cannot parse interval family",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_family(6, "{[2,7]}"), "interval endpoint out of range",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_family(6, "{[2,4],[3]}"), "overlapping intervals",
                         std::invalid_argument);
    CHECK_THROWS_AS((void)parse_family(6, "{[2,3]*}"), std::invalid_argument);
}

TEST_CASE("f-vector text") {
    const FVector fv = make_fvector({8, 12, 6});
    CHECK(fvector_text(fv) == "8,12,6");
    CHECK(parse_fvector("8,12,6") == fv);
    CHECK(parse_fvector(" 8, 12, 6 ") == fv);
    CHECK_THROWS_WITH_AS((void)parse_fvector(""), "cannot parse f-vector",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_fvector("8,,6"), "cannot parse f-vector",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_fvector("8,-12,6"), "cannot parse f-vector",
                         std::invalid_argument);
}

TEST_CASE("c-vector files") {
    std::istringstream in(
        "# square boundary, d = 1\n"
        "0 0 1\n"
        "1 0 2   # two middle edges\n"
        "\n"
        "0 1 1\n");
    const CVector c = parse_cvector_file(1, in);
    CHECK(c.count({0, 0}) == 1);
    CHECK(c.count({1, 0}) == 2);
    CHECK(c.count({0, 1}) == 1);

    std::istringstream bad("0 0\n");
    CHECK_THROWS_WITH_AS((void)parse_cvector_file(1, bad), "cannot parse c-vector line",
                         std::invalid_argument);
    std::istringstream extra("0 0 1 9\n");
    CHECK_THROWS_WITH_AS((void)parse_cvector_file(1, extra), "cannot parse c-vector line",
                         std::invalid_argument);
    std::istringstream invalid("2 0 1\n");
    CHECK_THROWS_WITH_AS((void)parse_cvector_file(1, invalid),
                         "invalid shelling component type", std::invalid_argument);
}

TEST_CASE("polynomial serializations") {
    const Poly p = Poly::from_ints({1, 11, 2});
    CHECK(poly_csv(p) == "1,11,2");
    CHECK(poly_csv(Poly()) == "0");
    CHECK(poly_csv(Poly({Rat(0), Rat(1, 2)})) == "0,1/2");
    CHECK(poly_json(p).dump() == "[1,11,2]");
    CHECK(poly_json(Poly({Rat(1, 2)})).dump() == "[\"1/2\"]");
}

TEST_CASE("json scalars widen past 64 bits as strings") {
    CHECK(int_json(Int(42)).dump() == "42");
    CHECK(int_json(-Int(42)).dump() == "-42");
    const Int wide = pow2(80) + 1;
    CHECK(int_json(wide).dump() == "\"" + wide.str() + "\"");
    CHECK(rat_json(Rat(3, 4)).dump() == "\"3/4\"");
    CHECK(rat_json(Rat(8, 4)).dump() == "2");
}

TEST_CASE("qtable json shape") {
    const json j = qtable_json(q_table(1));
    CHECK(j["d"] == 1);
    CHECK(j["q"].dump() == "[[0,0,1],[0,2],[1]]");
}

TEST_CASE("complex json round trip") {
    const FaceComplex p = cube_boundary_complex(2);
    const FaceComplex q = parse_complex_json(complex_json(p));
    CHECK(q.d == p.d);
    REQUIRE(q.faces.size() == p.faces.size());
    for (size_t t = 0; t < p.faces.size(); ++t) {
        CHECK(q.faces[t].dim == p.faces[t].dim);
        CHECK(q.faces[t].subfaces == p.faces[t].subfaces);
    }
    CHECK(toric_f(q) == toric_f(p));
    CHECK_THROWS_WITH_AS((void)parse_complex_json(json::parse("{\"d\": 1}")),
                         "cannot parse face complex", std::invalid_argument);
}

}  // TEST_SUITE
