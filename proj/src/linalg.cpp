#include "darboux/linalg.hpp"

namespace darboux {

std::vector<size_t> row_reduce(Matrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Scalar inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::optional<std::vector<Scalar>> solve(const Matrix& a,
                                         const std::vector<Scalar>& b) {
    if (a.empty()) {
        for (const auto& x : b)
            if (!x.is_zero()) return std::nullopt;
        return std::vector<Scalar>{};
    }
    size_t rows = a.size(), cols = a[0].size();
    Matrix aug = a;
    for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    auto pivots = row_reduce(aug);
    std::vector<Scalar> x(cols, Scalar(0));
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols) return std::nullopt;  // pivot in rhs column
        x[pivots[i]] = aug[i][cols];
    }
    // check consistency of zero rows handled by pivot-in-rhs test above
    return x;
}

bool in_row_span(const Matrix& m, const std::vector<Scalar>& w) {
    if (m.empty()) {
        for (const auto& x : w)
            if (!x.is_zero()) return false;
        return true;
    }
    // transpose: solve m^T c = w
    size_t rows = m.size(), cols = m[0].size();
    Matrix t(cols, std::vector<Scalar>(rows, Scalar(0)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return solve(t, w).has_value();
}

Scalar det(Matrix m) {
    size_t n = m.size();
    Scalar d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t sel = c;
        while (sel < n && m[sel][c].is_zero()) ++sel;
        if (sel == n) return Scalar(0);
        if (sel != c) {
            std::swap(m[c], m[sel]);
            d = -d;
        }
        d *= m[c][c];
        Scalar inv = m[c][c].inverse();
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            Scalar f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

}  // namespace darboux
