#include "toricgm/exact_linalg.hpp"

#include <map>

namespace toricgm {

namespace {

// Forward elimination in place; returns the rank and flips `sign` on swaps.
std::size_t eliminate(DenseMatrix& m, int* sign = nullptr) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(m[p], m[r]);
            if (sign) *sign = -*sign;
        }
        for (std::size_t q = r + 1; q < rows; ++q) {
            if (m[q][c] == 0) continue;
            Rational f = m[q][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[q][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank(DenseMatrix m) { return eliminate(m); }

std::size_t rank(const IntMatrix& m) {
    DenseMatrix d;
    d.reserve(m.size());
    for (const auto& row : m) {
        std::vector<Rational> r;
        r.reserve(row.size());
        for (long long x : row) r.emplace_back(static_cast<long>(x));
        d.push_back(std::move(r));
    }
    return eliminate(d);
}

Rational determinant(DenseMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    if (eliminate(m, &sign) < n) return 0;
    Rational det = sign;
    for (std::size_t i = 0; i < n; ++i) det *= m[i][i];
    return det;
}

std::optional<DenseMatrix> inverse(const DenseMatrix& m) {
    const std::size_t n = m.size();
    DenseMatrix a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        Rational inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (std::size_t q = 0; q < n; ++q) {
            if (q == c || a[q][c] == 0) continue;
            Rational f = a[q][c];
            for (std::size_t k = c; k < 2 * n; ++k) a[q][k] -= f * a[c][k];
        }
    }
    DenseMatrix out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

SparseVector EchelonBasis::reduce(const SparseVector& v) const {
    std::map<std::size_t, Rational> work(v.begin(), v.end());
    auto it = work.begin();
    while (it != work.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        const Rational f = it->second;
        const std::size_t pivot = it->first;
        for (const auto& [idx, val] : row->second) {
            auto [w, inserted] = work.try_emplace(idx, 0);
            w->second -= f * val;
            if (w->second == 0 && idx != pivot) work.erase(w);
        }
        // Rows only touch columns >= their pivot, so the sweep can resume there.
        it = work.erase(work.find(pivot));
    }
    return SparseVector(work.begin(), work.end());
}

bool EchelonBasis::insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    Rational inv = 1 / r.front().second;
    for (auto& entry : r) entry.second *= inv;
    const std::size_t pivot = r.front().first;
    rows_.emplace(pivot, std::move(r));
    return true;
}

}  // namespace toricgm
