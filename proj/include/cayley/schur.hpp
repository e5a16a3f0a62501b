#pragma once

#include "cayley/weights.hpp"

namespace cayley {

// Equivariant bundle Sigma^b(U-dual) (x) Sigma^c(U-perp) on Gr(k,n).
// b has k entries, c has n-k entries; both weakly decreasing (may be negative).
struct SchurBundle {
    int k = 3;
    int n = 7;
    Weight b;  // size k
    Weight c;  // size n-k

    auto operator<=>(const SchurBundle&) const = default;
};

// Formal non-negative combination of SchurBundles.
using BundleSum = std::map<SchurBundle, long long>;

SchurBundle make_bundle(int k, int n, Weight b, Weight c = {});

// Littlewood-Richardson decomposition of Sigma^a (x) Sigma^b for GL(m).
// a and b are arbitrary dominant weights (negative entries allowed);
// constituents with more than m rows are discarded per GL(m) truncation.
std::map<Weight, long long> lr_tensor(const Weight& a, const Weight& b, int m);

SchurBundle dualize(const SchurBundle& s);
BundleSum dualize(const BundleSum& s);
SchurBundle twist(const SchurBundle& s, int t);  // tensor by O(t) = det(U-dual)^t
BundleSum twist(const BundleSum& s, int t);

BundleSum tensor(const SchurBundle& a, const SchurBundle& b);
BundleSum tensor(const BundleSum& a, const BundleSum& b);
BundleSum add(const BundleSum& a, const BundleSum& b);
BundleSum scale(const BundleSum& a, long long m);

Int bundle_dimension(const SchurBundle& s);
Int bundle_dimension(const BundleSum& s);

// Sparse Laurent polynomial in x_1..x_k, y_1..y_{n-k}; exponent vector of size n.
using Monomial = std::vector<int>;
using Character = std::map<Monomial, Int>;

// character(U) = x_1+..+x_k, character(Q) = y_1+..+y_{n-k}; hence
// character(Sigma^b U-dual (x) Sigma^c U-perp) is evaluated at inverse variables.
Character character(const SchurBundle& s);
Character character(const BundleSum& s);
Character char_add(const Character& a, const Character& b);
Character char_sub(const Character& a, const Character& b);
Character char_mul(const Character& a, const Character& b);
Character char_scale(const Character& a, const Int& m);

// Schur Laurent polynomial s_w(x_1..x_m) of a dominant weight w.
Character schur_polynomial(const Weight& w, int m);

}  // namespace cayley
