#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cayley {

using Int = boost::multiprecision::cpp_int;

// A GL(n) weight in the standard epsilon basis, weakly decreasing when dominant.
using Weight = std::vector<int>;

bool is_dominant(const Weight& w);

// rho(n) = (n, n-1, ..., 1)
Weight rho(int n);

struct SortResult {
    bool has_repeat = false;   // two equal entries, i.e. singular for the dotted action
    Weight dominant;           // entries sorted strictly decreasing (valid iff !has_repeat)
    int inversions = 0;        // length of the sorting permutation
};

// Sort a weight with pairwise distinct target; counts inversions of the unique
// permutation making it strictly decreasing.
SortResult sort_to_dominant(const Weight& a);

// Dimension of the irreducible GL(n) representation with highest weight lambda
// (Weyl dimension formula, exact).
Int gl_dimension(const Weight& lambda, int n);

// Number of semistandard Young tableaux of shape lambda (a partition) with
// entries in 1..n. Independent of the Weyl formula; used as an arbiter.
Int ssyt_count(const Weight& lambda, int n);

// Graded multiplicity-space: cohomological degree -> dominant weight -> multiplicity.
struct GradedRep {
    std::map<int, std::map<Weight, long long>> terms;

    bool is_zero() const { return terms.empty(); }
    void add(int degree, const Weight& w, long long mult);
    Int dimension(int degree, int n) const;
    Int total_dimension(int n) const;
    std::vector<int> degrees() const;
    bool operator==(const GradedRep&) const = default;
};

std::string to_string(const Weight& w);

}  // namespace cayley
