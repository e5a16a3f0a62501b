#include "cayley/schur.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cayley {

SchurBundle make_bundle(int k, int n, Weight b, Weight c) {
    b.resize(k, 0);
    c.resize(n - k, 0);
    if (!is_dominant(b) || !is_dominant(c))
        throw std::invalid_argument("make_bundle: weight not weakly decreasing");
    return SchurBundle{k, n, std::move(b), std::move(c)};
}

namespace {

// Count Littlewood-Richardson skew tableaux of shape nu/lambda with content mu.
// Cells are visited in reverse reading order (each row right to left, top to
// bottom); the lattice-word condition becomes a prefix condition on counts.
long long lr_fillings(const Weight& lambda, const Weight& mu, const Weight& nu) {
    int rows = (int)nu.size();
    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r) grid[r].assign(nu[r], 0);
    std::vector<long long> cnt(mu.size() + 1, 0);

    struct Cell { int r, c; };
    std::vector<Cell> order;
    for (int r = 0; r < rows; ++r) {
        int lam = r < (int)lambda.size() ? lambda[r] : 0;
        for (int c = nu[r] - 1; c >= lam; --c) order.push_back({r, c});
    }

    long long total = 0;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == order.size()) {
            ++total;
            return;
        }
        auto [r, c] = order[idx];
        int lam_above = r > 0 ? (r - 1 < (int)lambda.size() ? lambda[r - 1] : 0) : 0;
        int above = (r > 0 && c < (int)grid[r - 1].size() && c >= lam_above)
                        ? grid[r - 1][c]
                        : 0;
        int right = (c + 1 < nu[r]) ? grid[r][c + 1] : (int)mu.size();
        for (int v = above + 1; v <= right; ++v) {
            if (cnt[v] >= mu[v - 1]) continue;                 // content bound
            if (v > 1 && cnt[v] + 1 > cnt[v - 1]) continue;    // lattice word
            ++cnt[v];
            grid[r][c] = v;
            self(self, idx + 1);
            --cnt[v];
        }
    };
    rec(rec, 0);
    return total;
}

// all partitions nu containing lambda with |nu| = |lambda| + |mu|, <= max_rows rows
// (lambda is assumed trimmed of trailing zeros)
void candidate_shapes(const Weight& lambda, const Weight& mu, int max_rows,
                      std::vector<Weight>& out) {
    int extra = std::accumulate(mu.begin(), mu.end(), 0);
    int L = (int)lambda.size();
    Weight nu;
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (remaining == 0) {
            Weight full = nu;
            for (int r = row; r < L; ++r) full.push_back(lambda[r]);
            out.push_back(std::move(full));
            return;
        }
        if (row == max_rows) return;
        int lam = row < L ? lambda[row] : 0;
        int hi = lam + remaining;
        if (row == 0) hi = std::min(hi, lam + mu[0]);  // first skew row holds only 1s
        if (row > 0) hi = std::min(hi, nu[row - 1]);
        for (int v = hi; v >= std::max(lam, 1); --v) {
            nu.push_back(v);
            self(self, row + 1, remaining - (v - lam));
            nu.pop_back();
        }
    };
    rec(rec, 0, extra);
}

std::map<Weight, long long> lr_partitions(const Weight& lambda, const Weight& mu,
                                          int max_rows) {
    std::map<Weight, long long> out;
    if (mu.empty() || std::accumulate(mu.begin(), mu.end(), 0) == 0) {
        Weight l = lambda;
        while (!l.empty() && l.back() == 0) l.pop_back();
        if ((int)l.size() <= max_rows) out[l] = 1;
        return out;
    }
    Weight lam_trim = lambda;
    while (!lam_trim.empty() && lam_trim.back() == 0) lam_trim.pop_back();
    std::vector<Weight> shapes;
    candidate_shapes(lam_trim, mu, max_rows, shapes);
    for (auto& nu : shapes) {
        long long c = lr_fillings(lambda, mu, nu);
        if (c > 0) out[nu] += c;
    }
    return out;
}

}  // namespace

std::map<Weight, long long> lr_tensor(const Weight& a, const Weight& b, int m) {
    Weight aa(a), bb(b);
    aa.resize(m, 0);
    bb.resize(m, 0);
    if ((int)a.size() > m || (int)b.size() > m)
        throw std::invalid_argument("lr_tensor: weight longer than rank");
    if (!is_dominant(aa) || !is_dominant(bb))
        throw std::invalid_argument("lr_tensor: weight not dominant");
    int sa = std::min(0, aa.back());
    int sb = std::min(0, bb.back());
    for (auto& v : aa) v -= sa;
    for (auto& v : bb) v -= sb;
    // smaller mu makes the tableau enumeration cheaper
    Weight lam = aa, mu = bb;
    if (std::accumulate(mu.begin(), mu.end(), 0) >
        std::accumulate(lam.begin(), lam.end(), 0))
        std::swap(lam, mu);
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    auto parts = lr_partitions(lam, mu, m);
    std::map<Weight, long long> out;
    for (auto& [nu, coeff] : parts) {
        Weight w = nu;
        w.resize(m, 0);
        for (auto& v : w) v += sa + sb;
        out[w] += coeff;
    }
    return out;
}

namespace {
Weight negate_reverse(const Weight& w) {
    Weight out(w.rbegin(), w.rend());
    for (auto& v : out) v = -v;
    return out;
}
}  // namespace

SchurBundle dualize(const SchurBundle& s) {
    return SchurBundle{s.k, s.n, negate_reverse(s.b), negate_reverse(s.c)};
}

BundleSum dualize(const BundleSum& s) {
    BundleSum out;
    for (auto& [bd, m] : s) out[dualize(bd)] += m;
    return out;
}

SchurBundle twist(const SchurBundle& s, int t) {
    SchurBundle out = s;
    for (auto& v : out.b) v += t;
    return out;
}

BundleSum twist(const BundleSum& s, int t) {
    BundleSum out;
    for (auto& [bd, m] : s) out[twist(bd, t)] += m;
    return out;
}

BundleSum tensor(const SchurBundle& a, const SchurBundle& b) {
    if (a.k != b.k || a.n != b.n)
        throw std::invalid_argument("tensor: incompatible Grassmannians");
    auto bs = lr_tensor(a.b, b.b, a.k);
    auto cs = lr_tensor(a.c, b.c, a.n - a.k);
    BundleSum out;
    for (auto& [wb, mb] : bs)
        for (auto& [wc, mc] : cs)
            out[SchurBundle{a.k, a.n, wb, wc}] += mb * mc;
    return out;
}

BundleSum tensor(const BundleSum& a, const BundleSum& b) {
    BundleSum out;
    for (auto& [ba, ma] : a)
        for (auto& [bb, mb] : b)
            for (auto& [bd, m] : tensor(ba, bb)) out[bd] += ma * mb * m;
    return out;
}

BundleSum add(const BundleSum& a, const BundleSum& b) {
    BundleSum out = a;
    for (auto& [bd, m] : b) {
        out[bd] += m;
        if (out[bd] == 0) out.erase(bd);
    }
    return out;
}

BundleSum scale(const BundleSum& a, long long m) {
    BundleSum out;
    if (m == 0) return out;
    for (auto& [bd, mm] : a) out[bd] = mm * m;
    return out;
}

Int bundle_dimension(const SchurBundle& s) {
    Weight b = s.b, c = s.c;
    int tb = std::min(0, b.empty() ? 0 : b.back());
    int tc = std::min(0, c.empty() ? 0 : c.back());
    for (auto& v : b) v -= tb;
    for (auto& v : c) v -= tc;
    return gl_dimension(b, s.k) * gl_dimension(c, s.n - s.k);
}

Int bundle_dimension(const BundleSum& s) {
    Int d = 0;
    for (auto& [bd, m] : s) d += bundle_dimension(bd) * m;
    return d;
}

Character schur_polynomial(const Weight& w, int m) {
    Weight lam(w);
    lam.resize(m, 0);
    if (!is_dominant(lam)) throw std::invalid_argument("schur_polynomial: not dominant");
    int shift = std::min(0, lam.back());
    for (auto& v : lam) v -= shift;
    while (!lam.empty() && lam.back() == 0) lam.pop_back();

    // sum of x^content over semistandard tableaux of the shifted shape
    Character out;
    std::vector<int> content(m, shift);  // the det^shift prefactor
    std::vector<std::vector<int>> grid(lam.size());
    auto rec = [&](auto&& self, int row, int pos) -> void {
        if (row == (int)lam.size()) {
            Monomial mono(content.begin(), content.end());
            out[mono] += 1;
            return;
        }
        if (pos == lam[row]) {
            self(self, row + 1, 0);
            return;
        }
        int lo = pos > 0 ? grid[row][pos - 1] : 1;
        if (row > 0) lo = std::max(lo, grid[row - 1][pos] + 1);
        for (int v = lo; v <= m; ++v) {
            grid[row][pos] = v;
            ++content[v - 1];
            self(self, row, pos + 1);
            --content[v - 1];
        }
    };
    for (size_t r = 0; r < lam.size(); ++r) grid[r].assign(lam[r], 0);
    if (lam.empty()) {
        out[Monomial(content.begin(), content.end())] = 1;
    } else {
        rec(rec, 0, 0);
    }
    return out;
}

Character char_add(const Character& a, const Character& b) {
    Character out = a;
    for (auto& [mono, c] : b) {
        out[mono] += c;
        if (out[mono] == 0) out.erase(mono);
    }
    return out;
}

Character char_sub(const Character& a, const Character& b) {
    Character out = a;
    for (auto& [mono, c] : b) {
        out[mono] -= c;
        if (out[mono] == 0) out.erase(mono);
    }
    return out;
}

Character char_mul(const Character& a, const Character& b) {
    Character out;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) {
            Monomial m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out[m] += ca * cb;
            if (out[m] == 0) out.erase(m);
        }
    return out;
}

Character char_scale(const Character& a, const Int& m) {
    Character out;
    if (m == 0) return out;
    for (auto& [mono, c] : a) out[mono] = c * m;
    return out;
}

Character character(const SchurBundle& s) {
    // char(U) = x_1..x_k, char(Q) = y_1..y_{n-k}; dual bundles get inverse
    // variables, realized by the dual weight in plain variables.
    Character cb = schur_polynomial(negate_reverse(s.b), s.k);
    Character cc = schur_polynomial(negate_reverse(s.c), s.n - s.k);
    Character out;
    for (auto& [mb, vb] : cb)
        for (auto& [mc, vc] : cc) {
            Monomial m = mb;
            m.insert(m.end(), mc.begin(), mc.end());
            out[m] += vb * vc;
        }
    return out;
}

Character character(const BundleSum& s) {
    Character out;
    for (auto& [bd, m] : s) out = char_add(out, char_scale(character(bd), m));
    return out;
}

}  // namespace cayley
