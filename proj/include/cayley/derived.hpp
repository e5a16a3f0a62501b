#pragma once

#include <optional>

#include "cayley/cg.hpp"

namespace cayley {

// Z^2-free formal class: integer combination of irreducible bundles.
using VirtualSum = std::map<SchurBundle, long long>;

VirtualSum v_add(const VirtualSum& a, const VirtualSum& b);
VirtualSum v_scale(const VirtualSum& a, long long m);
VirtualSum v_twist(const VirtualSum& a, int t);
Int euler_pairing(const VirtualSum& a, const VirtualSum& b);

// Bounded complex of bundle sums with no recorded differentials; Ext data is
// extracted through the positional double-complex analysis.
struct FormalComplex {
    std::map<int, BundleSum> terms;

    // provenance: this complex is the two-term presentation [G -> E] of the
    // right mutation R_E(G) (the kernel of the evaluation surjection)
    struct KernelCert {
        SchurBundle E, G;
        auto operator<=>(const KernelCert&) const = default;
    };
    std::optional<KernelCert> kernel_cert;

    static FormalComplex bundle(const BundleSum& s, int degree = 0);
    static FormalComplex bundle(const SchurBundle& s, int degree = 0);
    std::optional<SchurBundle> single_bundle() const;
    bool operator==(const FormalComplex& o) const { return terms == o.terms; }
};

FormalComplex twist(const FormalComplex& x, int t);
FormalComplex shift(const FormalComplex& x, int s);  // X[s]^n = X^{n+s}
VirtualSum k_class(const FormalComplex& x);
Int complex_euler(const FormalComplex& x, const FormalComplex& y);

struct ExtResult {
    bool determined = false;
    std::map<int, Int> dims;  // degree -> dimension, when determined
    std::string route;        // "grid" | "serre" | "mutation" | "transport"
    std::vector<std::string> blockers;

    bool is_zero() const { return determined && dims.empty(); }
    bool is_k_in_degree(int d) const {
        return determined && dims.size() == 1 && dims.count(d) && dims.at(d) == 1;
    }
};

// Ext*(X,Y) between formal complexes. Route ladder: exceptional-pair
// certificates for mutation-presented objects, then the positional double
// complex, then its Serre-dual grid.
ExtResult complex_ext(const FormalComplex& X, const FormalComplex& Y);

// Mutations at graded-dimension level; throw if the needed Ext is blocked.
FormalComplex mutate_left(const FormalComplex& E, const FormalComplex& G);
FormalComplex mutate_right(const FormalComplex& E, const FormalComplex& G);

// K-class of a left mutation: K(L_E G) = K(G) - chi(E,G) K(E), iterated left
// to right over the block.
VirtualSum mutate_left_class(const std::vector<VirtualSum>& block, VirtualSum g);

struct ExtTable {
    enum class Verdict { Exceptional, Failed, Unresolved };
    struct Cell {
        int i, j;
        std::string requirement;  // "diagonal" | "zero" | "free"
        ExtResult ext;
        Int chi;
        bool ok;
    };
    Verdict verdict;
    std::vector<Cell> cells;
    std::vector<std::string> unresolved;  // required cells that stayed blocked
    std::vector<std::string> failures;

    const Cell& at(int i, int j) const;
};

ExtTable check_exceptional_collection(const std::vector<FormalComplex>& objects,
                                      const std::vector<std::string>& names);

// Rectangular Lefschetz shape check: block sizes theta, block i must consist
// of the first theta_i objects of block 0 twisted by O(i).
struct LefschetzReport {
    bool valid = false;
    std::string detail;
};
LefschetzReport lefschetz_validate(const std::vector<FormalComplex>& objects,
                                   const std::vector<int>& theta);

namespace presets {
FormalComplex O(int t = 0);
FormalComplex U_dual(int t = 0);
FormalComplex wedge2_u_dual(int t = 0);
FormalComplex sigma21_u_dual(int t = 0);
FormalComplex wedge2_q(int t = 0);
FormalComplex R(int t = 0);    // kernel of Wedge2 Q ->> Wedge2 U-dual
FormalComplex K(int t = 0);    // kernel of V-dual (x) Wedge2 U-dual ->> Sigma21 U-dual
FormalComplex E10(int t = 0);  // extension class Sym2 U + U-perp
FormalComplex E16(int t = 0);  // extension class U-perp (x) W2U-dual + W2U-dual + O(1)
}  // namespace presets

std::vector<FormalComplex> cg15_collection();
std::vector<std::string> cg15_names();

// residual category after the rectangular part: the three objects
// A = L_<O,U-dual,W2U-dual> R, B = Sigma21 U-dual(-1), C = R(-1)
struct ResidualReport {
    struct CellReport {
        std::string name;      // e.g. "(A,B)"
        std::string expected;  // "k" or "0"
        std::string status;    // "determined" | "indeterminate"
        std::string route;
        bool ok = false;
        std::string detail;
    };
    std::vector<CellReport> cells;   // all 9 ordered pairs
    std::vector<std::vector<Int>> chi;  // 3x3 Euler pairings
    bool chi_orthogonal = false;     // the six off-diagonal pairings vanish
    int determined_required = 0;     // determined-and-correct cells
    bool tau_fixes_b = false;        // tau(B) has the class of B
    bool tau_swaps_a_c = false;      // tau(C) ~ A and tau(A) ~ C up to sign
    std::string notes;
};
ResidualReport residual_check();

}  // namespace cayley
