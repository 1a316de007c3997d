#pragma once

#include <vector>

#include "core/matrix.hpp"

namespace arrowsmith::testing {

// Independent rank oracle: the largest k with a nonzero k x k minor,
// determinants by Laplace expansion.  Only for small matrices.
inline Scalar det_expand(const Matrix& m) {
    const Field& f = m.field();
    if (m.rows() == 0) return f.one();
    Scalar acc = f.zero();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (Field::is_zero(m.at(i, 0))) continue;
        Matrix minor(f, m.rows() - 1, m.cols() - 1);
        for (std::size_t r = 0, rr = 0; r < m.rows(); ++r) {
            if (r == i) continue;
            for (std::size_t c = 1; c < m.cols(); ++c) minor.set(rr, c - 1, m.at(r, c));
            ++rr;
        }
        Scalar term = f.mul(m.at(i, 0), det_expand(minor));
        acc = (i % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
    }
    return acc;
}

inline std::size_t rank_by_minors(const Matrix& m) {
    std::size_t best = 0;
    std::vector<std::size_t> rows_sel, cols_sel;
    // enumerate all square submatrices up to min(rows, cols)
    std::size_t cap = std::min(m.rows(), m.cols());
    for (std::size_t k = cap; k >= 1; --k) {
        std::vector<std::size_t> ridx(k), cidx(k);
        // iterate combinations of rows and columns
        std::vector<std::size_t> rcomb(k), ccomb(k);
        for (std::size_t i = 0; i < k; ++i) rcomb[i] = i;
        bool rows_done = false;
        while (!rows_done) {
            for (std::size_t i = 0; i < k; ++i) ccomb[i] = i;
            bool cols_done = false;
            while (!cols_done) {
                Matrix sub(m.field(), k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub.set(i, j, m.at(rcomb[i], ccomb[j]));
                if (!Field::is_zero(det_expand(sub))) return k;
                // next column combination
                std::size_t t = k;
                while (t > 0 && ccomb[t - 1] == m.cols() - k + t - 1) --t;
                if (t == 0)
                    cols_done = true;
                else {
                    ++ccomb[t - 1];
                    for (std::size_t s = t; s < k; ++s) ccomb[s] = ccomb[s - 1] + 1;
                }
            }
            std::size_t t = k;
            while (t > 0 && rcomb[t - 1] == m.rows() - k + t - 1) --t;
            if (t == 0)
                rows_done = true;
            else {
                ++rcomb[t - 1];
                for (std::size_t s = t; s < k; ++s) rcomb[s] = rcomb[s - 1] + 1;
            }
        }
        if (best > 0) break;
    }
    return best;
}

inline bool same_column_span(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) return false;
    return rank(a) == rank(b) && rank(hcat(a, b)) == rank(a);
}

}  // namespace arrowsmith::testing
