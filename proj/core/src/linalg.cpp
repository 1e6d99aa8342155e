#include "rblie/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace rblie {

namespace {

std::size_t first_nonzero(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return v.size();
}

}  // namespace

Subspace Subspace::span(std::size_t ambient_dim, const Mat& spanning_rows) {
    Subspace s(ambient_dim);
    for (const auto& r : spanning_rows) {
        if (r.size() != ambient_dim)
            throw std::invalid_argument("spanning row has wrong length");
        s.extend(r);
    }
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) s.extend(unit_vec(ambient_dim, i));
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    Vec r = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = r[pivots_[k]];
        if (c != 0) sub_assign(r, scaled(rows_[k], c));
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return rblie::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& r : other.rows_)
        if (!contains(r)) return false;
    return true;
}

bool Subspace::extend(const Vec& v) {
    Vec r = reduce(v);
    std::size_t p = first_nonzero(r);
    if (p == r.size()) return false;
    scale_assign(r, Scalar(1) / r[p]);
    // back-substitute into the existing rows to keep the basis reduced
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = rows_[k][p];
        if (c != 0) sub_assign(rows_[k], scaled(r, c));
    }
    // keep rows sorted by pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(r));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

std::optional<Vec> solve_in_span(const Mat& rows, const Vec& target) {
    // Gaussian elimination on the transpose system: find c with c^T rows = target.
    std::size_t k = rows.size();
    if (k == 0) return is_zero(target) ? std::optional<Vec>(Vec{}) : std::nullopt;
    std::size_t n = rows[0].size();
    // augmented rows: [row | e_i] to track coefficients
    Mat work;
    work.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        Vec w = rows[i];
        w.resize(n + k, Scalar(0));
        w[n + i] = 1;
        work.push_back(std::move(w));
    }
    Vec t = target;
    t.resize(n + k, Scalar(0));
    // echelon-reduce work, then reduce target against it
    std::vector<std::size_t> pivots;
    Mat basis;
    for (auto& w : work) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const Scalar& c = w[pivots[j]];
            if (c != 0) sub_assign(w, scaled(basis[j], c));
        }
        std::size_t p = 0;
        while (p < n && w[p] == 0) ++p;
        if (p == n) continue;  // dependent row; its tracking part is not needed
        scale_assign(w, Scalar(1) / w[p]);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const Scalar& c = basis[j][p];
            if (c != 0) sub_assign(basis[j], scaled(w, c));
        }
        pivots.push_back(p);
        basis.push_back(std::move(w));
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const Scalar& c = t[pivots[j]];
        if (c != 0) sub_assign(t, scaled(basis[j], c));
    }
    for (std::size_t i = 0; i < n; ++i)
        if (t[i] != 0) return std::nullopt;
    Vec coeffs(k, Scalar(0));
    for (std::size_t i = 0; i < k; ++i) coeffs[i] = -t[n + i];
    return coeffs;
}

Vec mat_apply(const Mat& m, const Vec& v) {
    Vec out(m.size(), Scalar(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
    return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), m = b[0].size(), k = b.size();
    Mat out(n, Vec(m, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l] != 0)
                for (std::size_t j = 0; j < m; ++j)
                    if (b[l][j] != 0) out[i][j] += a[i][l] * b[l][j];
    return out;
}

Mat mat_identity(std::size_t n) {
    Mat m(n, Vec(n, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

std::optional<Mat> mat_inverse(const Mat& m) {
    std::size_t n = m.size();
    Mat work = m;
    Mat inv = mat_identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && work[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(work[piv], work[col]);
        std::swap(inv[piv], inv[col]);
        Scalar d = work[col][col];
        scale_assign(work[col], Scalar(1) / d);
        scale_assign(inv[col], Scalar(1) / d);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Scalar c = work[r][col];
            if (c != 0) {
                sub_assign(work[r], scaled(work[col], c));
                sub_assign(inv[r], scaled(inv[col], c));
            }
        }
    }
    return inv;
}

}  // namespace rblie
