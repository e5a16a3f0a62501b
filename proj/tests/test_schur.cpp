#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "cayley/schur.hpp"

using namespace cayley;

namespace {
Int decomposition_dimension(const std::map<Weight, long long>& dec, int m) {
    Int d = 0;
    for (auto& [w, mult] : dec) {
        Weight ww = w;
        int sh = std::min(0, ww.empty() ? 0 : ww.back());
        for (auto& v : ww) v -= sh;
        d += gl_dimension(ww, m) * mult;
    }
    return d;
}

Int weight_dimension(const Weight& w, int m) {
    Weight ww = w;
    ww.resize(m, 0);
    int sh = std::min(0, ww.back());
    for (auto& v : ww) v -= sh;
    return gl_dimension(ww, m);
}
}  // namespace

TEST_CASE("lr_tensor Pieri rule examples") {
    // s_(1) * s_(1) = s_(2) + s_(1,1)
    auto d = lr_tensor({1}, {1}, 3);
    CHECK(d.size() == 2);
    CHECK(d[{2, 0, 0}] == 1);
    CHECK(d[{1, 1, 0}] == 1);

    // GL(2) truncation drops three-row shapes
    d = lr_tensor({1, 1}, {1}, 2);
    CHECK(d.size() == 1);
    CHECK(d[{2, 1}] == 1);
}

TEST_CASE("lr_tensor with multiplicity") {
    // s_(2,1) * s_(2,1) for GL(3) contains s_(3,2,1) with multiplicity 2
    auto d = lr_tensor({2, 1}, {2, 1}, 3);
    CHECK(d[{3, 2, 1}] == 2);
    CHECK(d[{4, 2, 0}] == 1);
    CHECK(d[{2, 2, 2}] == 1);
    CHECK(decomposition_dimension(d, 3) == 64);
}

TEST_CASE("lr_tensor dimension conservation sweep") {
    std::vector<Weight> ws = {{1, 0, 0},  {1, 1, 0},  {2, 0, 0},   {2, 1, 0},
                              {2, 1, -1}, {0, -1, -2}, {3, 1, 0},  {1, 0, -1},
                              {2, 2, -3}, {0, 0, -1}};
    for (int m : {3, 4}) {
        for (auto& a : ws)
            for (auto& b : ws) {
                Weight aa = a, bb = b;
                aa.resize(m, aa.back() < 0 ? aa.back() : 0);
                bb.resize(m, bb.back() < 0 ? bb.back() : 0);
                // keep dominant after padding
                while (!is_dominant(aa)) aa.back() = aa[aa.size() - 2];
                while (!is_dominant(bb)) bb.back() = bb[bb.size() - 2];
                auto d = lr_tensor(aa, bb, m);
                CHECK(decomposition_dimension(d, m) ==
                      weight_dimension(aa, m) * weight_dimension(bb, m));
            }
    }
}

TEST_CASE("lr_tensor twist equivariance") {
    auto base = lr_tensor({2, 1, 0}, {1, 1, 0}, 3);
    auto shifted = lr_tensor({4, 3, 2}, {1, 1, 0}, 3);
    for (auto& [w, mult] : base) {
        Weight ws = w;
        for (auto& v : ws) v += 2;
        CHECK(shifted[ws] == mult);
    }
    CHECK(base.size() == shifted.size());
}

TEST_CASE("endomorphism decomposition of the weight-(2,1) functor on rank 3") {
    // Sigma^{2,1}U (x) Sigma^{2,1}U-dual decomposes with five distinct summands
    auto d = lr_tensor({0, -1, -2}, {2, 1, 0}, 3);
    CHECK(d[{0, 0, 0}] == 1);
    CHECK(d[{1, 0, -1}] == 2);
    CHECK(d[{2, -1, -1}] == 1);
    CHECK(d[{2, 0, -2}] == 1);
    CHECK(d[{1, 1, -2}] == 1);
    CHECK(d.size() == 5);
    CHECK(decomposition_dimension(d, 3) == 64);
}

TEST_CASE("bundle algebra") {
    auto Udual = make_bundle(3, 7, {1, 0, 0});
    auto U = dualize(Udual);
    CHECK(U.b == Weight{0, 0, -1});
    CHECK(bundle_dimension(U) == 3);
    auto O1 = make_bundle(3, 7, {1, 1, 1});
    CHECK(bundle_dimension(O1) == 1);
    CHECK(twist(U, 1).b == Weight{1, 1, 0});

    auto Q = make_bundle(3, 7, {}, {0, 0, 0, -1});
    auto Uperp = dualize(Q);
    CHECK(Uperp.c == Weight{1, 0, 0, 0});
    CHECK(bundle_dimension(Q) == 4);

    auto t = tensor(BundleSum{{Udual, 1}}, BundleSum{{Q, 2}});
    CHECK(bundle_dimension(t) == 24);
}

TEST_CASE("characters form a ring homomorphism") {
    auto U = dualize(make_bundle(3, 7, {1, 0, 0}));
    auto Q = make_bundle(3, 7, {}, {0, 0, 0, -1});
    auto cU = character(U);
    auto cQ = character(Q);
    // char(U) = x1+x2+x3
    CHECK(cU.size() == 3);
    CHECK(cU[{1, 0, 0, 0, 0, 0, 0}] == 1);
    CHECK(cQ[{0, 0, 0, 1, 0, 0, 0}] == 1);
    // tautological sequence: char(U) + char(Q) = char(V (x) O)
    auto total = char_add(cU, cQ);
    CHECK(total.size() == 7);
    for (auto& [mono, c] : total) {
        CHECK(c == 1);
        CHECK(std::accumulate(mono.begin(), mono.end(), 0) == 1);
    }
    // multiplicativity: char(U (x) Q) = char(U) char(Q)
    auto prod = tensor(BundleSum{{U, 1}}, BundleSum{{Q, 1}});
    CHECK(character(prod) == char_mul(cU, cQ));
}

TEST_CASE("character of a Schur bundle evaluates to its dimension at 1") {
    std::vector<SchurBundle> samples = {
        make_bundle(3, 7, {2, 1, 0}), make_bundle(3, 7, {1, 1, 0}, {0, 0, -1, -1}),
        make_bundle(3, 7, {0, -1, -3}, {1, 0, 0, -2})};
    for (auto& s : samples) {
        Int total = 0;
        for (auto& [mono, c] : character(s)) total += c;
        CHECK(total == bundle_dimension(s));
    }
}

TEST_CASE("dualize inverts the character") {
    auto s = make_bundle(3, 7, {2, 0, -1}, {1, 0, 0, -1});
    auto c = character(s);
    auto cd = character(dualize(s));
    Character expect;
    for (auto& [mono, coef] : c) {
        Monomial m = mono;
        for (auto& v : m) v = -v;
        expect[m] = coef;
    }
    CHECK(cd == expect);
}
