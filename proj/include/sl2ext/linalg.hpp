#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sl2ext::linalg {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

/// Prime field F_r, r < 2^31.
class Field {
public:
    explicit Field(Elem modulus);

    Elem modulus() const { return r_; }
    Elem reduce(std::int64_t x) const;
    Elem add(Elem x, Elem y) const { return static_cast<Elem>((std::uint64_t{x} + y) % r_); }
    Elem sub(Elem x, Elem y) const { return static_cast<Elem>((std::uint64_t{x} + r_ - y) % r_); }
    Elem mul(Elem x, Elem y) const { return static_cast<Elem>(std::uint64_t{x} * y % r_); }
    Elem neg(Elem x) const { return x == 0 ? 0 : r_ - x; }
    Elem inv(Elem x) const;

private:
    Elem r_;
};

/// Dense row-major matrix.  A subspace of F^n is stored as an n x k matrix
/// whose columns form a basis.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Elem at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Matrix identity(std::size_t n);
    Vec column(std::size_t j) const;
    void set_column(std::size_t j, const Vec& v);
    bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix multiply(const Field& f, const Matrix& x, const Matrix& y);
Vec apply(const Field& f, const Matrix& x, const Vec& v);
Matrix add(const Field& f, const Matrix& x, const Matrix& y);
Matrix hcat(const Matrix& x, const Matrix& y);
Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);
Matrix submatrix(const Matrix& x, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

std::size_t rank(const Field& f, Matrix x);
/// Basis of the column space, chosen among the columns of x.
Matrix column_space(const Field& f, const Matrix& x);
/// Basis of { v : x v = 0 }.
Matrix kernel(const Field& f, const Matrix& x);
/// Some v with x v = b, if one exists.
std::optional<Vec> solve(const Field& f, const Matrix& x, const Vec& b);
/// Basis of span(u) intersect span(v).
Matrix intersect(const Field& f, const Matrix& u, const Matrix& v);

bool is_injective(const Field& f, const Matrix& x);
/// Inverse of a square matrix, if invertible.
std::optional<Matrix> inverse(const Field& f, const Matrix& x);

/// num / den with den inside num.  `lifts` are representatives of a basis of
/// the quotient; coords() expresses an element of num in that basis.
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(const Field& f, const Matrix& num, const Matrix& den);

    std::size_t dim() const { return lifts_.cols; }
    std::size_t ambient() const { return lifts_.rows; }
    const Matrix& lifts() const { return lifts_; }
    const Matrix& den() const { return den_; }

    /// Quotient coordinates of v; throws if v is not in num.
    Vec coords(const Field& f, const Vec& v) const;
    /// Matrix whose columns are coords() of the columns of m.
    Matrix coords(const Field& f, const Matrix& m) const;

private:
    Matrix den_;
    Matrix lifts_;
    Matrix basis_;  // [den | lifts]
};

}  // namespace sl2ext::linalg
