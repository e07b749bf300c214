#include "sl2ext/linalg.hpp"

#include <stdexcept>

namespace sl2ext::linalg {

Field::Field(Elem modulus) : r_(modulus)
{
    if (modulus < 2 || modulus >= (Elem{1} << 31))
        throw std::invalid_argument("field modulus out of range");
    for (Elem d = 2; std::uint64_t{d} * d <= modulus; ++d)
        if (modulus % d == 0)
            throw std::invalid_argument("field modulus must be prime, got " + std::to_string(modulus));
}

Elem Field::reduce(std::int64_t x) const
{
    const std::int64_t r = static_cast<std::int64_t>(r_);
    return static_cast<Elem>(((x % r) + r) % r);
}

Elem Field::inv(Elem x) const
{
    if (x == 0)
        throw std::domain_error("division by zero in F_r");
    // Fermat: x^(r-2)
    std::uint64_t result = 1;
    std::uint64_t base = x;
    for (Elem e = r_ - 2; e; e >>= 1) {
        if (e & 1)
            result = result * base % r_;
        base = base * base % r_;
    }
    return static_cast<Elem>(result);
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Vec Matrix::column(std::size_t j) const
{
    Vec v(rows);
    for (std::size_t i = 0; i < rows; ++i)
        v[i] = at(i, j);
    return v;
}

void Matrix::set_column(std::size_t j, const Vec& v)
{
    for (std::size_t i = 0; i < rows; ++i)
        at(i, j) = v[i];
}

bool Matrix::is_zero() const
{
    for (Elem x : a)
        if (x)
            return false;
    return true;
}

Matrix multiply(const Field& f, const Matrix& x, const Matrix& y)
{
    if (x.cols != y.rows)
        throw std::invalid_argument("matrix shapes do not compose");
    Matrix out(x.rows, y.cols);
    const std::uint64_t r = f.modulus();
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const std::uint64_t xik = x.at(i, k);
            if (!xik)
                continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                out.at(i, j) = static_cast<Elem>((out.at(i, j) + xik * y.at(k, j)) % r);
        }
    return out;
}

Vec apply(const Field& f, const Matrix& x, const Vec& v)
{
    if (x.cols != v.size())
        throw std::invalid_argument("matrix and vector shapes differ");
    Vec out(x.rows, 0);
    for (std::size_t i = 0; i < x.rows; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < x.cols; ++k)
            acc = (acc + std::uint64_t{x.at(i, k)} * v[k]) % f.modulus();
        out[i] = static_cast<Elem>(acc);
    }
    return out;
}

Matrix add(const Field& f, const Matrix& x, const Matrix& y)
{
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("matrix shapes differ");
    Matrix out = x;
    for (std::size_t i = 0; i < out.a.size(); ++i)
        out.a[i] = f.add(out.a[i], y.a[i]);
    return out;
}

Matrix hcat(const Matrix& x, const Matrix& y)
{
    if (x.rows != y.rows)
        throw std::invalid_argument("hcat needs equal row counts");
    Matrix out(x.rows, x.cols + y.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j)
            out.at(i, j) = x.at(i, j);
        for (std::size_t j = 0; j < y.cols; ++j)
            out.at(i, x.cols + j) = y.at(i, j);
    }
    return out;
}

Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols)
{
    Matrix out(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        out.set_column(j, cols[j]);
    return out;
}

Matrix submatrix(const Matrix& x, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols)
{
    Matrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.at(i, j) = x.at(rows[i], cols[j]);
    return out;
}

namespace {

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const Field& f, Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && m.at(sel, col) == 0)
            ++sel;
        if (sel == m.rows)
            continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(sel, j), m.at(row, j));
        const Elem inv = f.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols; ++j)
            m.at(row, j) = f.mul(m.at(row, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            const Elem factor = m.at(i, col);
            if (i == row || factor == 0)
                continue;
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Field& f, Matrix x) { return rref(f, x).size(); }

Matrix column_space(const Field& f, const Matrix& x)
{
    Matrix work = x;
    const auto pivots = rref(f, work);
    Matrix out(x.rows, pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t i = 0; i < x.rows; ++i)
            out.at(i, k) = x.at(i, pivots[k]);
    return out;
}

Matrix kernel(const Field& f, const Matrix& x)
{
    Matrix work = x;
    const auto pivots = rref(f, work);
    std::vector<bool> is_pivot(x.cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < x.cols; ++free) {
        if (is_pivot[free])
            continue;
        Vec v(x.cols, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = f.neg(work.at(k, free));
        basis.push_back(std::move(v));
    }
    return from_columns(x.cols, basis);
}

std::optional<Vec> solve(const Field& f, const Matrix& x, const Vec& b)
{
    if (b.size() != x.rows)
        throw std::invalid_argument("solve: right-hand side has the wrong length");
    Matrix aug(x.rows, x.cols + 1);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j)
            aug.at(i, j) = x.at(i, j);
        aug.at(i, x.cols) = b[i];
    }
    const auto pivots = rref(f, aug);
    Vec v(x.cols, 0);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == x.cols)
            return std::nullopt;
        v[pivots[k]] = aug.at(k, x.cols);
    }
    return v;
}

Matrix intersect(const Field& f, const Matrix& u, const Matrix& v)
{
    // u a = v b  <=>  [u | -v] (a, b) = 0
    Matrix neg_v = v;
    for (auto& e : neg_v.a)
        e = f.neg(e);
    const Matrix ker = kernel(f, hcat(u, neg_v));
    std::vector<std::size_t> rows(u.cols);
    std::vector<std::size_t> cols(ker.cols);
    for (std::size_t i = 0; i < u.cols; ++i)
        rows[i] = i;
    for (std::size_t j = 0; j < ker.cols; ++j)
        cols[j] = j;
    return column_space(f, multiply(f, u, submatrix(ker, rows, cols)));
}

bool is_injective(const Field& f, const Matrix& x) { return rank(f, x) == x.cols; }

std::optional<Matrix> inverse(const Field& f, const Matrix& x)
{
    if (x.rows != x.cols)
        throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = x.rows;
    Matrix work = hcat(x, Matrix::identity(n));
    const auto pivots = rref(f, work);
    if (pivots.size() < n || (n && pivots[n - 1] >= n))
        return std::nullopt;
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.at(i, j) = work.at(i, n + j);
    return out;
}

Subquotient::Subquotient(const Field& f, const Matrix& num, const Matrix& den)
{
    den_ = column_space(f, den);
    // pivots of [den | num] beyond den's columns give a complement
    Matrix joint = hcat(den_, num);
    Matrix work = joint;
    const auto pivots = rref(f, work);
    std::vector<Vec> lifts;
    for (auto c : pivots) {
        if (c < den_.cols)
            continue;
        lifts.push_back(joint.column(c));
    }
    lifts_ = from_columns(num.rows, lifts);
    basis_ = hcat(den_, lifts_);
}

Vec Subquotient::coords(const Field& f, const Vec& v) const
{
    const auto z = solve(f, basis_, v);
    if (!z)
        throw std::logic_error("vector is not in the numerator of the subquotient");
    return Vec(z->begin() + static_cast<std::ptrdiff_t>(den_.cols), z->end());
}

Matrix Subquotient::coords(const Field& f, const Matrix& m) const
{
    Matrix out(dim(), m.cols);
    for (std::size_t j = 0; j < m.cols; ++j)
        out.set_column(j, coords(f, m.column(j)));
    return out;
}

}  // namespace sl2ext::linalg
