#include "hopf/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace hopf {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    assert(cols_ == rhs.rows());
    RationalMatrix out(rows_, rhs.cols());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    assert(rows_ == rhs.rows() && cols_ == rhs.cols());
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(i, j) = at(i, j) - rhs.at(i, j);
    return out;
}

namespace {

Int coeff_size(const Rat& r) {
    Int n = abs(numerator(r));
    Int d = denominator(r);
    return n > d ? n : d;
}

} // namespace

std::size_t rref(RationalMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        // pivot: nonzero entry of smallest coefficient size in this column
        std::size_t pivot = rows;
        for (std::size_t r = lead; r < rows; ++r) {
            if (m.at(r, col) == 0)
                continue;
            if (pivot == rows || coeff_size(m.at(r, col)) < coeff_size(m.at(pivot, col)))
                pivot = r;
        }
        if (pivot == rows)
            continue;
        if (pivot != lead)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m.at(pivot, j), m.at(lead, j));
        Rat inv = Rat(1) / m.at(lead, col);
        for (std::size_t j = col; j < cols; ++j)
            m.at(lead, j) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m.at(r, col) == 0)
                continue;
            Rat f = m.at(r, col);
            for (std::size_t j = col; j < cols; ++j)
                m.at(r, j) -= f * m.at(lead, j);
        }
        ++lead;
    }
    return lead;
}

std::size_t rank(const RationalMatrix& m) {
    RationalMatrix copy = m;
    return rref(copy);
}

namespace {

RationalSubspace canonicalize_rows(RationalMatrix rows) {
    std::size_t r = rref(rows);
    RationalMatrix basis(r, rows.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j)
            basis.at(i, j) = rows.at(i, j);
    return RationalSubspace{std::move(basis)};
}

} // namespace

RationalSubspace kernel(const RationalMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();

    // Clear denominators per row, then run fraction-free (Bareiss) forward
    // elimination over the integers.
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < cols; ++j)
            lcm = boost::multiprecision::lcm(lcm, denominator(m.at(i, j)));
        for (std::size_t j = 0; j < cols; ++j) {
            const Rat scaled = m.at(i, j) * Rat(lcm);
            assert(is_integer(scaled));
            a[i][j] = numerator(scaled);
        }
    }

    std::vector<std::size_t> pivot_col;
    Int prev_pivot = 1;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = lead; r < rows; ++r) {
            if (a[r][col] == 0)
                continue;
            if (pivot == rows || abs(a[r][col]) < abs(a[pivot][col]))
                pivot = r;
        }
        if (pivot == rows)
            continue;
        if (pivot != lead)
            std::swap(a[pivot], a[lead]);
        for (std::size_t r = lead + 1; r < rows; ++r) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Int t = a[lead][col] * a[r][j] - a[r][col] * a[lead][j];
                assert(t % prev_pivot == 0);
                a[r][j] = t / prev_pivot;
            }
            a[r][col] = 0;
        }
        prev_pivot = a[lead][col];
        pivot_col.push_back(col);
        ++lead;
    }

    // Back-substitute for one kernel vector per free column.
    const std::size_t rk = pivot_col.size();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col)
        is_pivot[c] = true;

    std::vector<std::vector<Rat>> vectors;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<Rat> v(cols);
        v[free_col] = 1;
        for (std::size_t k = rk; k-- > 0;) {
            Rat s = 0;
            for (std::size_t j = pivot_col[k] + 1; j < cols; ++j)
                s += Rat(a[k][j]) * v[j];
            v[pivot_col[k]] = -s / Rat(a[k][pivot_col[k]]);
        }
        vectors.push_back(std::move(v));
    }

    RationalMatrix basis_rows(vectors.size(), cols);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            basis_rows.at(i, j) = vectors[i][j];
    return canonicalize_rows(std::move(basis_rows));
}

RationalSubspace column_space(const RationalMatrix& m) {
    RationalMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t.at(j, i) = m.at(i, j);
    return canonicalize_rows(std::move(t));
}

RationalSubspace row_span(const RationalMatrix& rows) {
    return canonicalize_rows(rows);
}

bool RationalSubspace::contains(const std::vector<Rat>& vec) const {
    RationalMatrix stacked(basis.rows() + 1, basis.cols());
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (std::size_t j = 0; j < basis.cols(); ++j)
            stacked.at(i, j) = basis.at(i, j);
    for (std::size_t j = 0; j < basis.cols(); ++j)
        stacked.at(basis.rows(), j) = vec[j];
    return rank(stacked) == basis.rows();
}

bool RationalSubspace::contains(const RationalSubspace& other) const {
    RationalMatrix stacked(basis.rows() + other.basis.rows(), basis.cols());
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (std::size_t j = 0; j < basis.cols(); ++j)
            stacked.at(i, j) = basis.at(i, j);
    for (std::size_t i = 0; i < other.basis.rows(); ++i)
        for (std::size_t j = 0; j < basis.cols(); ++j)
            stacked.at(basis.rows() + i, j) = other.basis.at(i, j);
    return rank(stacked) == basis.rows();
}

} // namespace hopf
