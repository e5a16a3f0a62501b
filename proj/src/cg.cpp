#include "cayley/cg.hpp"

#include <sstream>

namespace cayley {

Int E1Entry::dimension() const {
    Int d = 0;
    for (auto& [w, m] : reps) d += gl_dimension(w, 7) * m;
    return d;
}

Int E1Page::euler() const {
    Int chi = 0;
    for (auto& [key, e] : entries) {
        auto [l, t] = key;
        Int d = e.dimension();
        chi += ((t - l) % 2 == 0) ? d : -d;
    }
    return chi;
}

std::string E1Page::describe() const {
    std::ostringstream os;
    for (auto& [key, e] : entries) {
        auto [l, t] = key;
        os << "(-" << l << "," << t << "): dim " << e.dimension() << "; ";
    }
    return os.str();
}

BundleSum wedge_q(int l, int k, int n) {
    Weight c(n - k, 0);
    for (int i = 0; i < l; ++i) c[n - k - 1 - i] = -1;
    return BundleSum{{make_bundle(k, n, Weight(k, 0), c), 1}};
}

std::array<BundleSum, 5> koszul_terms(const BundleSum& F) {
    std::array<BundleSum, 5> out;
    for (int l = 0; l <= 4; ++l) out[l] = tensor(F, twist(wedge_q(l), -l));
    return out;
}

namespace {

// page of a single summand with multiplicity one; entries keyed (l, t)
const E1Page& atom_page_cached(const SchurBundle& s) {
    static std::map<SchurBundle, E1Page> cache;
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;
    E1Page page;
    auto terms = koszul_terms(BundleSum{{s, 1}});
    for (int l = 0; l <= 4; ++l) {
        auto h = bulk_cohomology(terms[l]);
        for (auto& [t, reps] : h.terms)
            for (auto& [w, m] : reps) page.entries[{l, t}].reps[w] += m;
    }
    return cache.emplace(s, std::move(page)).first->second;
}

E1Page atom_page(const SchurBundle& s, long long mult) {
    E1Page page = atom_page_cached(s);
    if (mult != 1)
        for (auto& [key, e] : page.entries)
            for (auto& [w, m] : e.reps) m *= mult;
    return page;
}

// a potential differential d_r: (-l,t) -> (-l+r, t-r+1) connects the pair
bool page_has_linked_pair(const E1Page& page, std::string* diag) {
    for (auto it = page.entries.begin(); it != page.entries.end(); ++it)
        for (auto jt = std::next(it); jt != page.entries.end(); ++jt) {
            auto [l1, t1] = it->first;
            auto [l2, t2] = jt->first;
            int l = std::max(l1, l2), lp = std::min(l1, l2);
            int t = (l1 > l2) ? t1 : t2, tp = (l1 > l2) ? t2 : t1;
            if (l != lp && t - tp == l - lp - 1) {
                if (diag) {
                    std::ostringstream os;
                    os << "linked entries (-" << l << "," << t << ") and (-" << lp
                       << "," << tp << ")";
                    *diag = os.str();
                }
                return true;
            }
        }
    return false;
}

void merge_page(E1Page& into, const E1Page& from) {
    for (auto& [key, e] : from.entries)
        for (auto& [w, m] : e.reps) into.entries[key].reps[w] += m;
}

}  // namespace

CohomologyResult cg_cohomology(const BundleSum& F) {
    CohomologyResult res;
    res.route = "direct";
    res.determined = true;
    for (auto& [s, mult] : F) {
        E1Page p = atom_page(s, mult);
        std::string diag;
        if (page_has_linked_pair(p, &diag)) {
            res.determined = false;
            std::ostringstream os;
            os << "summand Sigma^" << to_string(s.b) << "|" << to_string(s.c)
               << ": " << diag;
            res.blockers.push_back(os.str());
        }
        merge_page(res.page, p);
    }
    if (res.determined) {
        for (auto& [key, e] : res.page.entries) {
            auto [l, t] = key;
            for (auto& [w, m] : e.reps) res.cohomology.add(t - l, w, m);
        }
    }
    return res;
}

CohomologyResult cg_cohomology(const SchurBundle& s) {
    return cg_cohomology(BundleSum{{s, 1}});
}

CohomologyResult cg_ext(const BundleSum& A, const BundleSum& B) {
    auto direct = cg_cohomology(tensor(dualize(A), B));
    if (direct.determined) return direct;

    // Serre duality: Ext^i(A,B) = Ext^{8-i}(B, A(-4))-dual
    auto serre = cg_cohomology(tensor(dualize(B), twist(A, -4)));
    if (serre.determined) {
        CohomologyResult res;
        res.determined = true;
        res.route = "serre";
        res.page = direct.page;
        for (auto& [deg, reps] : serre.cohomology.terms)
            for (auto& [w, m] : reps) {
                Weight dual(w.rbegin(), w.rend());
                for (auto& v : dual) v = -v;
                res.cohomology.add(8 - deg, dual, m);
            }
        return res;
    }
    direct.blockers.insert(direct.blockers.end(), serre.blockers.begin(),
                           serre.blockers.end());
    return direct;
}

Int euler_char(const BundleSum& A, const BundleSum& B) {
    return cg_cohomology(tensor(dualize(A), B)).euler();
}

std::vector<BundleSum> chi_probe_battery() {
    std::vector<BundleSum> probes;
    std::vector<Weight> bs = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {2, 0, 0}, {2, 1, 0}};
    for (int t : {0, 1})
        for (auto& b : bs) {
            Weight w = b;
            for (auto& v : w) v += t;
            probes.push_back({{make_bundle(3, 7, w), 1}});
        }
    return probes;
}

bool chi_sequence_check(const std::vector<BundleSum>& terms) {
    for (auto& probe : chi_probe_battery()) {
        Int total = 0;
        for (size_t i = 0; i < terms.size(); ++i) {
            Int chi = euler_char(probe, terms[i]);
            total += (i % 2 == 0) ? chi : -chi;
        }
        if (total != 0) return false;
    }
    return true;
}

}  // namespace cayley
