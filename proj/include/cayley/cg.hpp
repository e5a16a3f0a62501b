#pragma once

#include <array>
#include <optional>
#include <string>

#include "cayley/bbw.hpp"

namespace cayley {

// The Cayley Grassmannian: Fano 8-fold in Gr(3,7) cut out by a general
// 4-form invariant section, with omega = O(-4).
struct VarietySpec {
    int dim = 8;
    int canonical_twist = -4;
};

struct E1Entry {
    std::map<Weight, long long> reps;  // GL(7) dominant weights w/ multiplicity
    Int dimension() const;
};

// First page of the Koszul-resolution spectral sequence. Keys are (l, t):
// column -l (l = 0..4 the Koszul depth), row t the ambient cohomological degree.
struct E1Page {
    std::map<std::pair<int, int>, E1Entry> entries;

    Int euler() const;  // alternating sum (-1)^{t-l} dim, an E_r invariant
    std::string describe() const;
};

struct CohomologyResult {
    bool determined = false;
    GradedRep cohomology;  // meaningful iff determined
    E1Page page;           // always the direct-route page
    std::string route;     // "direct" | "serre" | caller-designated
    std::vector<std::string> blockers;  // linked-pair diagnostics

    Int euler() const { return page.euler(); }
    Int dimension(int degree) const { return cohomology.dimension(degree, 7); }
};

// The five Koszul twists F (x) Wedge^l Q (-l), l = 0..4.
std::array<BundleSum, 5> koszul_terms(const BundleSum& F);

// Sheaf cohomology on the Cayley Grassmannian. Each direct summand of F gets
// its own page; a pair of nonzero entries (l,t), (l',t') with l > l' is linked
// when t - t' = l - l' - 1 (a potential d_r hits it). Cohomology is additive,
// so the result is Determined when no summand carries a linked pair.
CohomologyResult cg_cohomology(const BundleSum& F);
CohomologyResult cg_cohomology(const SchurBundle& s);

// Ext*(A,B) = H*(A-dual (x) B); falls back once to Serre duality
// Ext^i(A,B) = Ext^{8-i}(B, A(-4))-dual when the direct route is blocked.
CohomologyResult cg_ext(const BundleSum& A, const BundleSum& B);

Int euler_char(const BundleSum& A, const BundleSum& B);

// Exactness certificate at Euler-characteristic level: for every probe T the
// alternating sum of chi(T, term_i) must vanish.
std::vector<BundleSum> chi_probe_battery();
bool chi_sequence_check(const std::vector<BundleSum>& terms);

BundleSum wedge_q(int l, int k = 3, int n = 7);  // Wedge^l Q as a bundle

}  // namespace cayley
