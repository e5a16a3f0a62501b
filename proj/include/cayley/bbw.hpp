#pragma once

#include "cayley/schur.hpp"

namespace cayley {

// Cohomology of an irreducible equivariant bundle on Gr(k,n) via the dotted
// Weyl action: a = (b,c) + rho(n); a repeat kills all cohomology, otherwise
// the unique sorting permutation gives the degree and the GL(n) weight.
GradedRep bbw_cohomology(const SchurBundle& s);

// Additive extension to formal sums.
GradedRep bulk_cohomology(const BundleSum& s);

}  // namespace cayley
