#include "cayley/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cayley {

bool is_dominant(const Weight& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] < w[i]) return false;
    return true;
}

Weight rho(int n) {
    Weight r(n);
    for (int i = 0; i < n; ++i) r[i] = n - i;
    return r;
}

SortResult sort_to_dominant(const Weight& a) {
    SortResult res;
    res.dominant = a;
    // insertion sort, counting performed swaps = inversion number
    for (size_t i = 1; i < res.dominant.size(); ++i) {
        size_t j = i;
        while (j > 0 && res.dominant[j - 1] < res.dominant[j]) {
            std::swap(res.dominant[j - 1], res.dominant[j]);
            --j;
            ++res.inversions;
        }
    }
    for (size_t i = 1; i < res.dominant.size(); ++i)
        if (res.dominant[i - 1] == res.dominant[i]) res.has_repeat = true;
    return res;
}

Int gl_dimension(const Weight& lambda, int n) {
    if ((int)lambda.size() > n)
        throw std::invalid_argument("gl_dimension: weight longer than rank");
    if (!is_dominant(lambda))
        throw std::invalid_argument("gl_dimension: weight not dominant");
    Weight lam(lambda);
    lam.resize(n, 0);
    Int num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= lam[i] - lam[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

namespace {
Int count_rows(const Weight& shape, int row, const std::vector<int>& above, int n);

Int fill_row(const Weight& shape, int row, int pos, std::vector<int>& cur,
             const std::vector<int>& above, int n) {
    if (pos == shape[row]) return count_rows(shape, row + 1, cur, n);
    int lo = pos > 0 ? cur[pos - 1] : 1;                 // weakly increasing rows
    if (row > 0) lo = std::max(lo, above[pos] + 1);      // strictly increasing columns
    Int total = 0;
    for (int v = lo; v <= n; ++v) {
        cur[pos] = v;
        total += fill_row(shape, row, pos + 1, cur, above, n);
    }
    return total;
}

Int count_rows(const Weight& shape, int row, const std::vector<int>& above, int n) {
    if (row == (int)shape.size()) return 1;
    std::vector<int> cur(shape[row]);
    return fill_row(shape, row, 0, cur, above, n);
}
}  // namespace

Int ssyt_count(const Weight& shape, int n) {
    for (int s : shape)
        if (s < 0) throw std::invalid_argument("ssyt_count: negative part");
    if (!is_dominant(shape)) throw std::invalid_argument("ssyt_count: not a partition");
    Weight sh(shape);
    while (!sh.empty() && sh.back() == 0) sh.pop_back();
    if ((int)sh.size() > n) return 0;
    if (sh.empty()) return 1;
    return count_rows(sh, 0, {}, n);
}

void GradedRep::add(int degree, const Weight& w, long long mult) {
    if (mult == 0) return;
    auto& m = terms[degree];
    m[w] += mult;
    if (m[w] == 0) m.erase(w);
    if (m.empty()) terms.erase(degree);
}

Int GradedRep::dimension(int degree, int n) const {
    auto it = terms.find(degree);
    if (it == terms.end()) return 0;
    Int d = 0;
    for (auto& [w, mult] : it->second) d += gl_dimension(w, n) * mult;
    return d;
}

Int GradedRep::total_dimension(int n) const {
    Int d = 0;
    for (auto& [deg, m] : terms) d += dimension(deg, n);
    return d;
}

std::vector<int> GradedRep::degrees() const {
    std::vector<int> out;
    for (auto& [deg, m] : terms) out.push_back(deg);
    return out;
}

std::string to_string(const Weight& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

}  // namespace cayley
