#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/weights.hpp"

using namespace cayley;

TEST_CASE("rho") {
    CHECK(rho(7) == Weight{7, 6, 5, 4, 3, 2, 1});
    CHECK(rho(1) == Weight{1});
}

TEST_CASE("sort_to_dominant basics") {
    auto r = sort_to_dominant({3, 1, 2});
    CHECK(!r.has_repeat);
    CHECK(r.dominant == Weight{3, 2, 1});
    CHECK(r.inversions == 1);

    r = sort_to_dominant({1, 2, 3});
    CHECK(r.inversions == 3);

    r = sort_to_dominant({5, 4, 3});
    CHECK(r.inversions == 0);

    r = sort_to_dominant({2, 2, 1});
    CHECK(r.has_repeat);
}

TEST_CASE("inversions equal pair count out of order") {
    // brute-force pair counting as an independent oracle
    std::vector<Weight> samples = {
        {1, 5, 2, 9, 0, -3, 4}, {7, 6, 5, 4, 3, 2, 1}, {-1, -2, 0, 8, 3, 2, 5}};
    for (auto& a : samples) {
        int pairs = 0;
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = i + 1; j < a.size(); ++j)
                if (a[i] < a[j]) ++pairs;
        CHECK(sort_to_dominant(a).inversions == pairs);
    }
}

TEST_CASE("gl_dimension standard representations") {
    CHECK(gl_dimension({}, 7) == 1);
    CHECK(gl_dimension({1}, 7) == 7);
    CHECK(gl_dimension({1, 1}, 7) == 21);
    CHECK(gl_dimension({2}, 7) == 28);
    CHECK(gl_dimension({1, 1, 1, 1, 1, 1, 1}, 7) == 1);
    CHECK(gl_dimension({2, 1}, 3) == 8);  // adjoint of sl3 plus trace part removed
    CHECK(gl_dimension({1, 0, -1}, 3) == 8);
    // negative entries: dual weights have the same dimension
    CHECK(gl_dimension({0, -1, -2}, 3) == gl_dimension({2, 1, 0}, 3));
}

TEST_CASE("gl_dimension agrees with semistandard tableau count") {
    std::vector<Weight> shapes = {{1},      {2},      {1, 1},    {2, 1},
                                  {3, 1},   {2, 2},   {2, 1, 1}, {3, 2, 1},
                                  {4, 2},   {2, 2, 2}, {5},      {3, 3, 1}};
    for (int n : {2, 3, 4, 7}) {
        for (auto& s : shapes) {
            if ((int)s.size() > n) continue;
            CHECK(gl_dimension(s, n) == ssyt_count(s, n));
        }
    }
}

TEST_CASE("graded rep bookkeeping") {
    GradedRep g;
    CHECK(g.is_zero());
    g.add(2, {1, 0, 0}, 1);
    g.add(2, {1, 0, 0}, 2);
    CHECK(g.dimension(2, 3) == 9);
    g.add(2, {1, 0, 0}, -3);
    CHECK(g.is_zero());
}
