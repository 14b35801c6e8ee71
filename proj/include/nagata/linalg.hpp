#pragma once

// Exact integer row reduction. Rows are combined fraction-free
// (r <- p*r - c*pivot_row) and divided by their content after every step, so
// entries stay small and no rational arithmetic is needed.

#include "rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nagata::linalg {

using IntRow = std::vector<Integer>;
using IntMatrix = std::vector<IntRow>;

/// Scales a rational vector by the lcm of its denominators.
inline IntRow clear_denominators(const std::vector<Rational>& row) {
    Integer l = 1;
    for (const auto& q : row) l = lcm(l, Integer(q.get_den()));
    IntRow out;
    out.reserve(row.size());
    for (const auto& q : row) out.push_back(Integer(q.get_num() * (l / q.get_den())));
    return out;
}

/// Divides by the gcd of the entries and makes the first nonzero positive.
inline void make_primitive(IntRow& row) {
    Integer g = 0;
    for (const auto& v : row) g = gcd(g, v);
    if (g == 0) return;
    for (auto& v : row)
        if (v != 0) {
            if (v < 0) g = -g;
            break;
        }
    for (auto& v : row) v /= g;
}

struct ReducedForm {
    IntMatrix rows;                         // nonzero rows only, fully reduced
    std::vector<std::size_t> pivot_columns; // one per row, increasing
    std::size_t columns = 0;

    std::size_t rank() const { return rows.size(); }
};

/// Reduced row echelon form up to positive row scaling: each pivot column is
/// zero outside its pivot row.
inline ReducedForm reduce(IntMatrix m, std::size_t columns) {
    for (const auto& r : m)
        if (r.size() != columns) throw std::invalid_argument("ragged matrix");
    ReducedForm out;
    out.columns = columns;
    std::size_t next = 0;
    for (std::size_t col = 0; col < columns && next < m.size(); ++col) {
        std::size_t piv = next;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[next], m[piv]);
        make_primitive(m[next]);
        const Integer p = m[next][col];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == next || m[r][col] == 0) continue;
            const Integer c = m[r][col];
            for (std::size_t k = 0; k < columns; ++k) m[r][k] = p * m[r][k] - c * m[next][k];
            make_primitive(m[r]);
        }
        out.pivot_columns.push_back(col);
        ++next;
    }
    m.resize(next);
    out.rows = std::move(m);
    return out;
}

inline std::size_t rank(const IntMatrix& m, std::size_t columns) { return reduce(m, columns).rank(); }

/// Primitive integer basis of {v : m v = 0}, one vector per free column.
inline IntMatrix kernel_basis(const IntMatrix& m, std::size_t columns) {
    const auto red = reduce(m, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : red.pivot_columns) is_pivot[c] = true;

    Integer l = 1;
    for (std::size_t i = 0; i < red.rank(); ++i) l = lcm(l, Integer(red.rows[i][red.pivot_columns[i]]));

    IntMatrix basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        IntRow v(columns, 0);
        v[free] = l;
        for (std::size_t i = 0; i < red.rank(); ++i) {
            const auto pc = red.pivot_columns[i];
            v[pc] = -(l / red.rows[i][pc]) * red.rows[i][free];
        }
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace nagata::linalg
