#include "cayley/derived.hpp"

#include <sstream>
#include <stdexcept>

namespace cayley {

VirtualSum v_add(const VirtualSum& a, const VirtualSum& b) {
    VirtualSum out = a;
    for (auto& [s, m] : b) {
        out[s] += m;
        if (out[s] == 0) out.erase(s);
    }
    return out;
}

VirtualSum v_scale(const VirtualSum& a, long long m) {
    VirtualSum out;
    if (m == 0) return out;
    for (auto& [s, mm] : a) out[s] = mm * m;
    return out;
}

VirtualSum v_twist(const VirtualSum& a, int t) {
    VirtualSum out;
    for (auto& [s, m] : a) out[twist(s, t)] += m;
    return out;
}

namespace {
Int atom_chi(const SchurBundle& a, const SchurBundle& b) {
    static std::map<std::pair<SchurBundle, SchurBundle>, Int> cache;
    auto key = std::make_pair(a, b);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Int chi = euler_char({{a, 1}}, {{b, 1}});
    cache.emplace(key, chi);
    return chi;
}
}  // namespace

Int euler_pairing(const VirtualSum& a, const VirtualSum& b) {
    Int chi = 0;
    for (auto& [sa, ma] : a)
        for (auto& [sb, mb] : b) chi += atom_chi(sa, sb) * ma * mb;
    return chi;
}

FormalComplex FormalComplex::bundle(const BundleSum& s, int degree) {
    FormalComplex x;
    if (!s.empty()) x.terms[degree] = s;
    return x;
}

FormalComplex FormalComplex::bundle(const SchurBundle& s, int degree) {
    return bundle(BundleSum{{s, 1}}, degree);
}

std::optional<SchurBundle> FormalComplex::single_bundle() const {
    if (terms.size() != 1) return std::nullopt;
    auto& [deg, sum] = *terms.begin();
    if (deg != 0 || sum.size() != 1 || sum.begin()->second != 1)
        return std::nullopt;
    return sum.begin()->first;
}

FormalComplex twist(const FormalComplex& x, int t) {
    FormalComplex out;
    for (auto& [deg, sum] : x.terms) out.terms[deg] = twist(sum, t);
    if (x.kernel_cert)
        out.kernel_cert = FormalComplex::KernelCert{twist(x.kernel_cert->E, t),
                                                    twist(x.kernel_cert->G, t)};
    return out;
}

FormalComplex shift(const FormalComplex& x, int s) {
    FormalComplex out;
    for (auto& [deg, sum] : x.terms) out.terms[deg - s] = sum;
    return out;
}

VirtualSum k_class(const FormalComplex& x) {
    VirtualSum out;
    for (auto& [deg, sum] : x.terms) {
        long long sign = (deg % 2 == 0) ? 1 : -1;
        for (auto& [s, m] : sum) {
            out[s] += sign * m;
            if (out[s] == 0) out.erase(s);
        }
    }
    return out;
}

Int complex_euler(const FormalComplex& x, const FormalComplex& y) {
    return euler_pairing(k_class(x), k_class(y));
}

namespace {

// exceptional-pair premises behind the kernel-presentation certificates
bool verify_pair(const SchurBundle& E, const SchurBundle& G) {
    static std::map<std::pair<SchurBundle, SchurBundle>, bool> cache;
    auto key = std::make_pair(E, G);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    BundleSum e{{E, 1}}, g{{G, 1}};
    auto ee = cg_ext(e, e);
    auto gg = cg_ext(g, g);
    auto eg = cg_ext(e, g);
    auto ge = cg_ext(g, e);
    auto is_k0 = [](const CohomologyResult& r) {
        return r.determined && r.cohomology.degrees() == std::vector<int>{0} &&
               r.dimension(0) == 1;
    };
    bool ok = is_k0(ee) && is_k0(gg) && eg.determined &&
              eg.cohomology.is_zero() && is_k0(ge);
    cache.emplace(key, ok);
    return ok;
}

struct Grid {
    bool cells_ok = true;
    std::map<std::pair<int, int>, Int> entries;  // (p,q) -> dim
    std::vector<std::string> blockers;
};

Grid ext_grid(const FormalComplex& X, const FormalComplex& Y) {
    Grid grid;
    for (auto& [a, xs] : X.terms)
        for (auto& [b, ys] : Y.terms) {
            auto r = cg_ext(xs, ys);
            if (!r.determined) {
                grid.cells_ok = false;
                std::ostringstream os;
                os << "cell X^" << a << " vs Y^" << b << " blocked: ";
                for (auto& s : r.blockers) os << s << "; ";
                grid.blockers.push_back(os.str());
                continue;
            }
            for (int q : r.cohomology.degrees()) {
                Int d = r.dimension(q);
                if (d != 0) grid.entries[{b - a, q}] += d;
            }
        }
    for (auto it = grid.entries.begin(); it != grid.entries.end();)
        it = (it->second == 0) ? grid.entries.erase(it) : std::next(it);
    return grid;
}

ExtResult collapse_grid(const Grid& grid) {
    ExtResult res;
    if (!grid.cells_ok) {
        res.blockers = grid.blockers;
        return res;
    }
    // potential d_r: (p,q) -> (p+r, q-r+1), r >= 1
    for (auto it = grid.entries.begin(); it != grid.entries.end(); ++it)
        for (auto jt = std::next(it); jt != grid.entries.end(); ++jt) {
            auto [p1, q1] = it->first;
            auto [p2, q2] = jt->first;
            int p = std::max(p1, p2), pp = std::min(p1, p2);
            int q = (p1 > p2) ? q1 : q2, qq = (p1 > p2) ? q2 : q1;
            if (p != pp && qq - q == p - pp - 1) {
                std::ostringstream os;
                os << "linked grid entries (" << pp << "," << qq << ") and ("
                   << p << "," << q << ")";
                res.blockers.push_back(os.str());
            }
        }
    if (!res.blockers.empty()) return res;
    res.determined = true;
    res.route = "grid";
    for (auto& [key, d] : grid.entries) res.dims[key.first + key.second] += d;
    return res;
}

}  // namespace

ExtResult complex_ext(const FormalComplex& X, const FormalComplex& Y) {
    // certificates for mutation-presented kernels
    if (X.kernel_cert) {
        auto& cert = *X.kernel_cert;
        if (Y.kernel_cert && *Y.kernel_cert == cert && X == Y &&
            verify_pair(cert.E, cert.G)) {
            ExtResult res;
            res.determined = true;
            res.route = "mutation";
            res.dims[0] = 1;
            return res;
        }
        if (auto sb = Y.single_bundle(); sb && *sb == cert.E &&
                                         verify_pair(cert.E, cert.G)) {
            // Ext(R_E G, E) = 0 for the mutated exceptional pair
            ExtResult res;
            res.determined = true;
            res.route = "mutation";
            return res;
        }
    }

    auto direct = collapse_grid(ext_grid(X, Y));
    if (direct.determined) return direct;

    // Serre duality at the grid level: Ext^i(X,Y) = Ext^{8-i}(Y, X(-4))-dual
    auto serre = collapse_grid(ext_grid(Y, twist(X, -4)));
    if (serre.determined) {
        ExtResult res;
        res.determined = true;
        res.route = "serre";
        for (auto& [n, d] : serre.dims) res.dims[8 - n] += d;
        return res;
    }
    direct.blockers.insert(direct.blockers.end(), serre.blockers.begin(),
                           serre.blockers.end());
    return direct;
}

FormalComplex mutate_left(const FormalComplex& E, const FormalComplex& G) {
    // inverse mutation collapses the kernel presentation: L_E(R_E(G0)) = G0
    if (G.kernel_cert) {
        if (auto sb = E.single_bundle();
            sb && *sb == G.kernel_cert->E && verify_pair(G.kernel_cert->E, G.kernel_cert->G))
            return FormalComplex::bundle(G.kernel_cert->G);
    }
    auto ext = complex_ext(E, G);
    if (!ext.determined) {
        std::string msg = "mutate_left: Ext(E,G) blocked";
        for (auto& b : ext.blockers) msg += "; " + b;
        throw std::runtime_error(msg);
    }
    // Cone(Ext*(E,G) (x) E -> G): term n = (sum_i dims[i] E^{n+1-i}) + G^n
    FormalComplex out;
    out.terms = G.terms;
    for (auto& [i, d] : ext.dims)
        for (auto& [deg, sum] : E.terms) {
            auto scaled = scale(sum, (long long)d);
            out.terms[deg + i - 1] = add(out.terms[deg + i - 1], scaled);
        }
    return out;
}

FormalComplex mutate_right(const FormalComplex& E, const FormalComplex& G) {
    auto ext = complex_ext(G, E);
    if (!ext.determined) {
        std::string msg = "mutate_right: Ext(G,E) blocked";
        for (auto& b : ext.blockers) msg += "; " + b;
        throw std::runtime_error(msg);
    }
    // Cone(G -> Ext*(G,E)-dual (x) E)[-1]: term n = G^n + sum_i dims[i] E^{n-1+i}
    FormalComplex out;
    out.terms = G.terms;
    for (auto& [i, d] : ext.dims)
        for (auto& [deg, sum] : E.terms) {
            auto scaled = scale(sum, (long long)d);
            out.terms[deg + 1 - i] = add(out.terms[deg + 1 - i], scaled);
        }
    // kernel presentation [G -> E] if Hom(G,E) = k and both are irreducible
    auto se = E.single_bundle();
    auto sg = G.single_bundle();
    if (se && sg && ext.is_k_in_degree(0))
        out.kernel_cert = FormalComplex::KernelCert{*se, *sg};
    return out;
}

VirtualSum mutate_left_class(const std::vector<VirtualSum>& block, VirtualSum g) {
    for (auto it = block.rbegin(); it != block.rend(); ++it) {
        Int chi = euler_pairing(*it, g);
        long long c = (long long)chi;
        g = v_add(g, v_scale(*it, -c));
    }
    return g;
}

const ExtTable::Cell& ExtTable::at(int i, int j) const {
    for (auto& c : cells)
        if (c.i == i && c.j == j) return c;
    throw std::out_of_range("ExtTable::at");
}

ExtTable check_exceptional_collection(const std::vector<FormalComplex>& objects,
                                      const std::vector<std::string>& names) {
    ExtTable table;
    table.verdict = ExtTable::Verdict::Exceptional;
    int n = (int)objects.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ExtTable::Cell cell;
            cell.i = i;
            cell.j = j;
            cell.requirement = (i == j) ? "diagonal" : (i > j ? "zero" : "free");
            cell.ext = complex_ext(objects[i], objects[j]);
            cell.chi = complex_euler(objects[i], objects[j]);
            std::string label = names[i] + " -> " + names[j];
            if (cell.requirement == "free") {
                cell.ok = true;
            } else if (!cell.ext.determined) {
                cell.ok = false;
                table.unresolved.push_back(label);
            } else if (cell.requirement == "diagonal") {
                cell.ok = cell.ext.is_k_in_degree(0);
                if (!cell.ok) table.failures.push_back(label);
            } else {
                cell.ok = cell.ext.is_zero();
                if (!cell.ok) table.failures.push_back(label);
            }
            table.cells.push_back(std::move(cell));
        }
    if (!table.failures.empty())
        table.verdict = ExtTable::Verdict::Failed;
    else if (!table.unresolved.empty())
        table.verdict = ExtTable::Verdict::Unresolved;
    return table;
}

LefschetzReport lefschetz_validate(const std::vector<FormalComplex>& objects,
                                   const std::vector<int>& theta) {
    LefschetzReport rep;
    size_t total = 0;
    for (int t : theta) total += t;
    if (total != objects.size()) {
        rep.detail = "block sizes do not sum to the collection length";
        return rep;
    }
    for (size_t i = 1; i < theta.size(); ++i)
        if (theta[i] > theta[i - 1]) {
            rep.detail = "block sizes must be non-increasing";
            return rep;
        }
    size_t pos = theta.empty() ? 0 : theta[0];
    for (size_t blk = 1; blk < theta.size(); ++blk) {
        for (int j = 0; j < theta[blk]; ++j, ++pos) {
            if (!(twist(objects[j], (int)blk) == objects[pos])) {
                std::ostringstream os;
                os << "object " << pos << " is not object " << j << " twisted by O("
                   << blk << ")";
                rep.detail = os.str();
                return rep;
            }
        }
    }
    rep.valid = true;
    rep.detail = "rectangular Lefschetz shape confirmed";
    return rep;
}

namespace presets {

FormalComplex O(int t) {
    return FormalComplex::bundle(make_bundle(3, 7, Weight{t, t, t}));
}

FormalComplex U_dual(int t) {
    return FormalComplex::bundle(make_bundle(3, 7, Weight{t + 1, t, t}));
}

FormalComplex wedge2_u_dual(int t) {
    return FormalComplex::bundle(make_bundle(3, 7, Weight{t + 1, t + 1, t}));
}

FormalComplex sigma21_u_dual(int t) {
    return FormalComplex::bundle(make_bundle(3, 7, Weight{t + 2, t + 1, t}));
}

FormalComplex wedge2_q(int t) {
    return FormalComplex::bundle(make_bundle(3, 7, Weight{t, t, t}, {0, 0, -1, -1}));
}

FormalComplex R(int t) {
    FormalComplex out;
    SchurBundle G = make_bundle(3, 7, Weight{t, t, t}, {0, 0, -1, -1});
    SchurBundle E = make_bundle(3, 7, Weight{t + 1, t + 1, t});
    out.terms[0] = {{G, 1}};
    out.terms[1] = {{E, 1}};
    out.kernel_cert = FormalComplex::KernelCert{E, G};
    return out;
}

FormalComplex K(int t) {
    FormalComplex out;
    out.terms[0] = {{make_bundle(3, 7, Weight{t + 1, t + 1, t}), 7}};
    out.terms[1] = {{make_bundle(3, 7, Weight{t + 2, t + 1, t}), 1}};
    return out;
}

FormalComplex E10(int t) {
    BundleSum s;
    s[make_bundle(3, 7, Weight{t, t, t - 2})] = 1;            // Sym2 U (t)
    s[make_bundle(3, 7, Weight{t, t, t}, {1, 0, 0, 0})] = 1;  // U-perp (t)
    return FormalComplex::bundle(s);
}

FormalComplex E16(int t) {
    BundleSum s = tensor(BundleSum{{make_bundle(3, 7, Weight{0, 0, 0}, {1, 0, 0, 0}), 1}},
                         BundleSum{{make_bundle(3, 7, Weight{1, 1, 0}), 1}});
    s = twist(s, t);
    s[make_bundle(3, 7, Weight{t + 1, t + 1, t})] += 1;
    s[make_bundle(3, 7, Weight{t + 1, t + 1, t + 1})] += 1;  // O(t+1)
    return FormalComplex::bundle(s);
}

}  // namespace presets

std::vector<FormalComplex> cg15_collection() {
    using namespace presets;
    return {O(0), U_dual(0), wedge2_u_dual(0), R(0), sigma21_u_dual(0),
            O(1), U_dual(1), wedge2_u_dual(1), R(1),
            O(2), U_dual(2), wedge2_u_dual(2),
            O(3), U_dual(3), wedge2_u_dual(3)};
}

std::vector<std::string> cg15_names() {
    return {"O",    "U*",    "W2U*",    "R",    "S21U*",
            "O(1)", "U*(1)", "W2U*(1)", "R(1)",
            "O(2)", "U*(2)", "W2U*(2)",
            "O(3)", "U*(3)", "W2U*(3)"};
}

ResidualReport residual_check() {
    using namespace presets;
    ResidualReport rep;
    FormalComplex B = sigma21_u_dual(-1);
    FormalComplex C = R(-1);
    std::vector<FormalComplex> frame = {O(0), U_dual(0), wedge2_u_dual(0)};

    // K-classes; A = L_<frame> R exists only as a class here, since the cone
    // over the frame is positionally blocked (reported below)
    std::vector<VirtualSum> frame_cls;
    for (auto& f : frame) frame_cls.push_back(k_class(f));
    VirtualSum clsR = k_class(R(0));
    VirtualSum clsA = mutate_left_class(frame_cls, clsR);
    VirtualSum clsB = k_class(B);
    VirtualSum clsC = k_class(C);
    std::vector<VirtualSum> cls = {clsA, clsB, clsC};

    rep.chi.assign(3, std::vector<Int>(3, 0));
    rep.chi_orthogonal = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            rep.chi[i][j] = euler_pairing(cls[i], cls[j]);
            if (i != j && rep.chi[i][j] != 0) rep.chi_orthogonal = false;
        }

    // frame-transport premises: X in frame-orthogonal means Ext(F_i, X) = 0,
    // and then Ext(L_frame R, X) = Ext(R, X)
    auto in_right_orthogonal = [&](const FormalComplex& X) {
        for (auto& f : frame) {
            auto e = complex_ext(f, X);
            if (!e.determined || !e.is_zero()) return false;
        }
        return true;
    };

    auto record = [&](std::string name, std::string expected, ExtResult e,
                      std::string route_override = "") {
        ResidualReport::CellReport c;
        c.name = std::move(name);
        c.expected = std::move(expected);
        c.status = e.determined ? "determined" : "indeterminate";
        c.route = route_override.empty() ? e.route : route_override;
        if (e.determined)
            c.ok = (c.expected == "k") ? e.is_k_in_degree(0) : e.is_zero();
        if (!e.determined)
            for (auto& b : e.blockers) c.detail += b + "; ";
        rep.cells.push_back(c);
        if (c.ok) ++rep.determined_required;
    };

    // (A,A): mutation through the verified exceptional sub-collection
    std::vector<FormalComplex> initial = {O(0), U_dual(0), wedge2_u_dual(0), R(0)};
    auto initial_tbl = check_exceptional_collection(
        initial, {"O", "U*", "W2U*", "R"});
    {
        ExtResult e;
        if (initial_tbl.verdict == ExtTable::Verdict::Exceptional) {
            e.determined = true;
            e.route = "mutation";
            e.dims[0] = 1;
        } else {
            e.blockers.push_back("frame + R not verified exceptional");
        }
        record("(A,A)", "k", e);
    }
    // (A,B), (A,C): transport across the frame
    for (auto& [other, label] :
         std::vector<std::pair<FormalComplex*, std::string>>{{&B, "(A,B)"},
                                                             {&C, "(A,C)"}}) {
        ExtResult e;
        if (in_right_orthogonal(*other)) {
            e = complex_ext(R(0), *other);
            record(label, "0", e, e.determined ? "transport+" + e.route : e.route);
        } else {
            e.blockers.push_back("transport premise failed: target not frame-orthogonal");
            record(label, "0", e);
        }
    }
    // (B,A), (C,A): would need the cone complex over the frame; attempt the
    // construction and report the blockage honestly
    for (auto& label : std::vector<std::string>{"(B,A)", "(C,A)"}) {
        ExtResult e;
        try {
            FormalComplex A = R(0);
            for (auto it = frame.rbegin(); it != frame.rend(); ++it)
                A = mutate_left(*it, A);
            FormalComplex& src = (label == "(B,A)") ? B : C;
            e = complex_ext(src, A);
        } catch (const std::exception& ex) {
            e.blockers.push_back(ex.what());
        }
        record(label, "0", e);
    }
    // (B,B), (B,C), (C,B), (C,C)
    record("(B,B)", "k", complex_ext(B, B));
    record("(B,C)", "0", complex_ext(B, C));
    record("(C,B)", "0", complex_ext(C, B));
    record("(C,C)", "k", complex_ext(C, C));

    // tau = L_frame ( - (x) O(1)) on K-classes
    auto tau = [&](const VirtualSum& v) {
        return mutate_left_class(frame_cls, v_twist(v, 1));
    };
    auto neg = [](const VirtualSum& v) { return v_scale(v, -1); };
    // class equality in K-theory: pair the difference against the 15 basis
    // classes (unimodular Gram matrix, hence a faithful test)
    auto class_equal = [](const VirtualSum& x, const VirtualSum& y) {
        VirtualSum diff = v_add(x, v_scale(y, -1));
        for (auto& p : cg15_collection())
            if (euler_pairing(k_class(p), diff) != 0) return false;
        return true;
    };
    rep.tau_fixes_b = class_equal(tau(clsB), clsB);
    rep.tau_swaps_a_c =
        (class_equal(tau(clsC), clsA) || class_equal(tau(clsC), neg(clsA))) &&
        (class_equal(tau(clsA), clsC) || class_equal(tau(clsA), neg(clsC)));
    return rep;
}

}  // namespace cayley
