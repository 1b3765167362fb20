#include <gtest/gtest.h>

#include "support/worked_example.hpp"

using namespace fockcb;

TEST(Io, LaurentJsonRoundTrip) {
    const auto p = LaurentPoly::from_pairs({{-2, 3}, {0, -1}, {5, 7}});
    const Json j = to_json(p);
    EXPECT_EQ(j.dump(), "[[-2,3],[0,-1],[5,7]]");
    EXPECT_EQ(laurent_from_json(j), p);
    EXPECT_EQ(to_json(LaurentPoly()).dump(), "[]");
}

TEST(Io, BigCoefficientsAreStrings) {
    // 25! does not fit in 64 bits
    const auto p = LaurentPoly(1) + LaurentPoly::monomial(BigInt("15511210043330985984000000"), 3);
    const Json j = to_json(p);
    EXPECT_TRUE(j.back()[1].is_string());
    EXPECT_EQ(j.back()[1].get<std::string>(), "15511210043330985984000000");
    EXPECT_EQ(laurent_from_json(j), p);
}

TEST(Io, LaurentJsonErrors) {
    EXPECT_THROW(laurent_from_json(Json::object()), ParseError);
    EXPECT_THROW(laurent_from_json(Json::parse("[[1]]")), ParseError);
    EXPECT_THROW(laurent_from_json(Json::parse("[[1, 2.5]]")), ParseError);
}

TEST(Io, MatrixJsonRoundTrip) {
    const auto m = example::de();
    EXPECT_EQ(matrix_from_json(to_json(m)), m);
    EXPECT_EQ(matrix_from_json(Json::parse(to_json(m).dump())), m);
    EXPECT_THROW(matrix_from_json(Json::parse(R"({"rows":["1|-"],"cols":["1|-"],"entries":[]})")), ParseError);
    EXPECT_THROW(matrix_from_json(Json::parse(R"({"rows":[]})")), ParseError);
}

TEST(Io, MatrixCsvRoundTrip) {
    const auto m = example::drel();
    const std::string csv = to_csv(m);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "label,-|3,1|2,-|2.1");
    EXPECT_NE(csv.find("\n1|1.1,v^1,v^2,.\n"), std::string::npos);
    EXPECT_EQ(matrix_from_csv(csv), m);
    EXPECT_THROW(matrix_from_csv("label,1|-\n1|-,1,2\n"), ParseError);
}

TEST(Io, TextTableUsesDisplayLabels) {
    const std::string t = to_text(example::drel());
    EXPECT_NE(t.find("(∅,(3))"), std::string::npos);
    EXPECT_NE(t.find("v^2"), std::string::npos);
}

TEST(Io, Latex) {
    EXPECT_EQ(latex_label(parse_multipartition("-|2.1")), "(\\emptyset,(2.1))");
    EXPECT_EQ(latex_poly(LaurentPoly::from_pairs({{0, 1}, {2, -3}})), "-3v^{2}+1");
    EXPECT_EQ(latex_poly(LaurentPoly::v_pow(1)), "v");
    const std::string tex = to_latex(example::drel());
    EXPECT_EQ(tex.rfind("\\begin{array}{c|ccc}", 0), 0u);
    EXPECT_NE(tex.find("\\emptyset"), std::string::npos);
    EXPECT_NE(tex.find("\\end{array}"), std::string::npos);
}

TEST(Io, OtherJsonShapes) {
    const auto g = generate_component(Modulus::finite(2), Multicharge{0, 0}, 2);
    const Json jg = to_json(g);
    EXPECT_EQ(jg["e"], "2");
    EXPECT_EQ(jg["vertices"].size(), g.size());

    const auto a = tau_inverse(parse_multipartition("1.1|1.1|1"), Multicharge{0, 0, -1}, 2, 7);
    const Json ja = to_json(a);
    EXPECT_EQ(ja["zeta"].get<std::vector<int>>(), (std::vector<int>{0, -2, -3, 1, 0, 1, 0}));

    const auto rep = verify(example::de(), example::dinf(), example::drel(), Multicharge{0, 0});
    const Json jr = to_json(rep);
    ASSERT_EQ(jr.size(), 5u);
    for (const auto& item : jr) EXPECT_TRUE(item["pass"].get<bool>());
    EXPECT_NE(to_text(rep).find("PASS product"), std::string::npos);
}
