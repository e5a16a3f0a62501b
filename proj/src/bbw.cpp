#include "cayley/bbw.hpp"

namespace cayley {

GradedRep bbw_cohomology(const SchurBundle& s) {
    Weight a = s.b;
    a.insert(a.end(), s.c.begin(), s.c.end());
    Weight r = rho(s.n);
    for (size_t i = 0; i < a.size(); ++i) a[i] += r[i];
    auto sorted = sort_to_dominant(a);
    GradedRep out;
    if (sorted.has_repeat) return out;
    Weight w = sorted.dominant;
    for (size_t i = 0; i < w.size(); ++i) w[i] -= r[i];
    out.add(sorted.inversions, w, 1);
    return out;
}

GradedRep bulk_cohomology(const BundleSum& s) {
    GradedRep out;
    for (auto& [bd, mult] : s) {
        auto h = bbw_cohomology(bd);
        for (auto& [deg, reps] : h.terms)
            for (auto& [w, m] : reps) out.add(deg, w, m * mult);
    }
    return out;
}

}  // namespace cayley
