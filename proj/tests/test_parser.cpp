#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/parser.hpp"

using namespace cayley;

namespace {
SchurBundle single(const FormalComplex& x) {
    auto s = x.single_bundle();
    REQUIRE(s.has_value());
    return *s;
}
}  // namespace

TEST_CASE("basic atoms") {
    CHECK(single(parse_expression("O")) == make_bundle(3, 7, {0, 0, 0}));
    CHECK(single(parse_expression("U*")) == make_bundle(3, 7, {1, 0, 0}));
    CHECK(single(parse_expression("U")) == make_bundle(3, 7, {0, 0, -1}));
    CHECK(single(parse_expression("Uperp")) ==
          make_bundle(3, 7, {0, 0, 0}, {1, 0, 0, 0}));
    CHECK(single(parse_expression("Q")) ==
          make_bundle(3, 7, {0, 0, 0}, {0, 0, 0, -1}));
}

TEST_CASE("schur, wedge and symmetric powers") {
    CHECK(single(parse_expression("S{2,1}U*")) == make_bundle(3, 7, {2, 1, 0}));
    CHECK(single(parse_expression("S{0,0,-3}U*")) == make_bundle(3, 7, {0, 0, -3}));
    CHECK(single(parse_expression("W2U*")) == make_bundle(3, 7, {1, 1, 0}));
    CHECK(single(parse_expression("W2(U*)(1)")) == make_bundle(3, 7, {2, 2, 1}));
    CHECK(single(parse_expression("Sym2U*")) == make_bundle(3, 7, {2, 0, 0}));
    // powers of a dual base re-express over the stored bundles
    CHECK(single(parse_expression("S{2,1}U")) == make_bundle(3, 7, {0, -1, -2}));
    CHECK(single(parse_expression("W2Q")) ==
          make_bundle(3, 7, {0, 0, 0}, {0, 0, -1, -1}));
    CHECK(single(parse_expression("Sym2Uperp")) ==
          make_bundle(3, 7, {0, 0, 0}, {2, 0, 0, 0}));
    CHECK(single(parse_expression("W0U")) == make_bundle(3, 7, {0, 0, 0}));
}

TEST_CASE("twists and precedence") {
    CHECK(single(parse_expression("O(-1)")) == make_bundle(3, 7, {-1, -1, -1}));
    CHECK(single(parse_expression("U*(2)")) == make_bundle(3, 7, {3, 2, 2}));
    // product binds tighter than sum
    auto x = parse_expression("O + U* * U*");
    REQUIRE(x.terms.size() == 1);
    const auto& sum = x.terms.at(0);
    CHECK(sum.at(make_bundle(3, 7, {0, 0, 0})) == 1);
    CHECK(sum.at(make_bundle(3, 7, {2, 0, 0})) == 1);
    CHECK(sum.at(make_bundle(3, 7, {1, 1, 0})) == 1);
    // a mixed product is a single irreducible bundle
    CHECK(single(parse_expression("U* * Q")) ==
          make_bundle(3, 7, {1, 0, 0}, {0, 0, 0, -1}));
    // twist distributes over a parenthesized sum
    auto y = parse_expression("(O + U*)(1)");
    CHECK(y.terms.at(0).count(make_bundle(3, 7, {1, 1, 1})) == 1);
    CHECK(y.terms.at(0).count(make_bundle(3, 7, {2, 1, 1})) == 1);
}

TEST_CASE("shifts") {
    auto x = parse_expression("O[2]");
    REQUIRE(x.terms.size() == 1);
    CHECK(x.terms.count(-2) == 1);
    CHECK(x.terms.at(-2).at(make_bundle(3, 7, {0, 0, 0})) == 1);
    auto y = parse_expression("O + U*[-1]");
    CHECK(y.terms.at(0).count(make_bundle(3, 7, {0, 0, 0})) == 1);
    CHECK(y.terms.at(1).count(make_bundle(3, 7, {1, 0, 0})) == 1);
    CHECK_THROWS_AS(parse_expression("O[1]", /*allow_shift=*/false), ParseError);
}

TEST_CASE("presets expand to the derived-category objects") {
    CHECK(parse_expression("R") == presets::R());
    CHECK(parse_expression("K") == presets::K());
    CHECK(parse_expression("E10") == presets::E10());
    CHECK(parse_expression("E16") == presets::E16());
    CHECK(parse_expression("R(1)") == presets::R(1));
    CHECK(parse_expression("E16(-1)") == presets::E16(-1));
}

TEST_CASE("rejections carry positions") {
    CHECK_THROWS_AS(parse_expression("S{2,2}X"), ParseError);
    CHECK_THROWS_AS(parse_expression("S{1,2}U*"), ParseError);   // increasing
    CHECK_THROWS_AS(parse_expression("S{-1}U*"), ParseError);    // pad breaks order
    CHECK_THROWS_AS(parse_expression("S{1,1,1,1}U*"), ParseError);
    CHECK_THROWS_AS(parse_expression("W4U*"), ParseError);
    CHECK_THROWS_AS(parse_expression("O +"), ParseError);
    CHECK_THROWS_AS(parse_expression("O O"), ParseError);
    CHECK_THROWS_AS(parse_expression("(O"), ParseError);
    CHECK_THROWS_AS(parse_expression(""), ParseError);
    CHECK_THROWS_AS(parse_expression("R * O"), ParseError);  // complex in product
    try {
        parse_expression("O + S{2,2}X");
    } catch (const ParseError& e) {
        CHECK(e.position >= 4);
    }
}

TEST_CASE("print and parse round-trip") {
    std::vector<std::string> sources = {
        "O",          "U*",          "S{2,1}U*",  "W2U*(1)",      "Q",
        "Uperp(2)",   "U* * Q",      "O + U*",    "O[3] + U*",    "R",
        "K(1)",       "E10",         "E16(-1)",   "S{0,0,-3}U*",  "W2Q(-2)"};
    for (const auto& src : sources) {
        auto x = parse_expression(src);
        auto printed = print_complex(x);
        CHECK(parse_expression(printed) == x);
    }
    for (const auto& obj : cg15_collection()) {
        CHECK(parse_expression(print_complex(obj)) == obj);
    }
}

TEST_CASE("collection files with block separators") {
    std::string text =
        "# rectangular part, first block\n"
        "O\n"
        "U*\n"
        "--- block\n"
        "O(1)\n"
        "U*(1)\n"
        "---\n"
        "O(2)\n";
    auto spec = parse_collection_text(text);
    REQUIRE(spec.objects.size() == 5);
    CHECK(spec.names[0] == "O");
    CHECK(spec.names[3] == "U*(1)");
    CHECK(spec.theta == std::vector<int>{2, 2, 1});
    CHECK(*spec.objects[4].single_bundle() == make_bundle(3, 7, {2, 2, 2}));
    CHECK_THROWS_AS(parse_collection_text("O\nS{2,2}X\n"), ParseError);
}
