#include "sl2ext/specseq.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sl2ext::specseq {

using linalg::Field;
using linalg::Subquotient;
using linalg::Vec;

// ---------------------------------------------------------------- Bicomplex

Bicomplex::Bicomplex(std::size_t width, std::size_t height, Elem modulus)
    : width_(width),
      height_(height),
      field_(modulus),
      dims_(width * height, 0),
      d0_(width * height),
      d1_(width * height)
{
    if (width == 0 || height == 0)
        throw std::invalid_argument("bicomplex grid must be at least 1 x 1");
}

bool Bicomplex::inside(int m, int n) const
{
    return m >= 0 && n >= 0 && static_cast<std::size_t>(m) < width_ && static_cast<std::size_t>(n) < height_;
}

std::size_t Bicomplex::dim(int m, int n) const { return inside(m, n) ? dims_[index(m, n)] : 0; }

const Matrix& Bicomplex::d0(int m, int n) const { return inside(m, n) ? d0_[index(m, n)] : empty_; }

const Matrix& Bicomplex::d1(int m, int n) const { return inside(m, n) ? d1_[index(m, n)] : empty_; }

void Bicomplex::reset_maps(int m, int n)
{
    if (!inside(m, n))
        return;
    d0_[index(m, n)] = Matrix(dim(m, n + 1), dim(m, n));
    d1_[index(m, n)] = Matrix(dim(m + 1, n), dim(m, n));
}

void Bicomplex::set_dim(int m, int n, std::size_t d)
{
    if (!inside(m, n))
        throw std::out_of_range("cell outside the grid");
    dims_[index(m, n)] = d;
    reset_maps(m, n);
    reset_maps(m, n - 1);
    reset_maps(m - 1, n);
}

void Bicomplex::set_d0(int m, int n, Matrix x)
{
    if (!inside(m, n) || x.rows != dim(m, n + 1) || x.cols != dim(m, n))
        throw std::invalid_argument("d0 at (" + std::to_string(m) + "," + std::to_string(n) + ") has the wrong shape");
    d0_[index(m, n)] = std::move(x);
}

void Bicomplex::set_d1(int m, int n, Matrix x)
{
    if (!inside(m, n) || x.rows != dim(m + 1, n) || x.cols != dim(m, n))
        throw std::invalid_argument("d1 at (" + std::to_string(m) + "," + std::to_string(n) + ") has the wrong shape");
    d1_[index(m, n)] = std::move(x);
}

Bicomplex Bicomplex::toggle_vertical_signs() const
{
    Bicomplex out = *this;
    for (std::size_t m = 1; m < width_; m += 2)
        for (std::size_t n = 0; n < height_; ++n)
            for (auto& e : out.d0_[index(static_cast<int>(m), static_cast<int>(n))].a)
                e = field_.neg(e);
    return out;
}

bool operator==(const Bicomplex& x, const Bicomplex& y)
{
    return x.width_ == y.width_ && x.height_ == y.height_ && x.modulus() == y.modulus() && x.dims_ == y.dims_ &&
           x.d0_ == y.d0_ && x.d1_ == y.d1_;
}

ValidationReport validate(const Bicomplex& b)
{
    const Field& f = b.field();
    ValidationReport report;
    auto fail = [&](Violation::Kind kind, int m, int n, const std::string& what) {
        report.first = Violation{kind, m, n, what + " at (" + std::to_string(m) + "," + std::to_string(n) + ")"};
    };
    const int w = static_cast<int>(b.width());
    const int h = static_cast<int>(b.height());
    for (int m = 0; m < w; ++m)
        for (int n = 0; n < h; ++n) {
            const auto& v = b.d0(m, n);
            const auto& hz = b.d1(m, n);
            if (v.rows != b.dim(m, n + 1) || v.cols != b.dim(m, n) || hz.rows != b.dim(m + 1, n) ||
                hz.cols != b.dim(m, n)) {
                fail(Violation::Kind::Shape, m, n, "map shape mismatch");
                return report;
            }
        }
    for (int m = 0; m < w; ++m)
        for (int n = 0; n < h; ++n) {
            if (n + 2 < h && !multiply(f, b.d0(m, n + 1), b.d0(m, n)).is_zero()) {
                fail(Violation::Kind::D0Squared, m, n, "d0 d0 != 0");
                return report;
            }
            if (m + 2 < w && !multiply(f, b.d1(m + 1, n), b.d1(m, n)).is_zero()) {
                fail(Violation::Kind::D1Squared, m, n, "d1 d1 != 0");
                return report;
            }
            if (m + 1 < w && n + 1 < h) {
                const auto sum = add(f, multiply(f, b.d1(m, n + 1), b.d0(m, n)), multiply(f, b.d0(m + 1, n), b.d1(m, n)));
                if (!sum.is_zero()) {
                    fail(Violation::Kind::Anticommute, m, n, "d1 d0 + d0 d1 != 0 on the square");
                    return report;
                }
            }
        }
    return report;
}

// ----------------------------------------------------------- total complex

TotalComplex::TotalComplex(const Bicomplex& b) : b_(&b)
{
    const int w = static_cast<int>(b.width());
    const int top = w + static_cast<int>(b.height()) - 2;
    offsets_.resize(static_cast<std::size_t>(top + 1));
    for (int k = 0; k <= top; ++k) {
        auto& off = offsets_[static_cast<std::size_t>(k)];
        off.assign(static_cast<std::size_t>(w) + 1, 0);
        for (int m = 0; m < w; ++m)
            off[static_cast<std::size_t>(m) + 1] = off[static_cast<std::size_t>(m)] + b.dim(m, k - m);
    }
    total_.reserve(static_cast<std::size_t>(top + 2));
    total_.emplace_back(dim(0), 0);
    for (int k = 0; k <= top; ++k) {
        Matrix t(dim(k + 1), dim(k));
        for (int m = 0; m < w; ++m) {
            const int n = k - m;
            if (b.dim(m, n) == 0)
                continue;
            const std::size_t col0 = offset(k, m);
            auto place = [&](const Matrix& x, int tm) {
                const std::size_t row0 = offset(k + 1, tm);
                for (std::size_t i = 0; i < x.rows; ++i)
                    for (std::size_t j = 0; j < x.cols; ++j)
                        t.at(row0 + i, col0 + j) = x.at(i, j);
            };
            place(b.d0(m, n), m);
            place(b.d1(m, n), m + 1);
        }
        total_.push_back(std::move(t));
    }
}

std::size_t TotalComplex::dim(int k) const
{
    if (k < 0 || k > top_degree())
        return 0;
    return offsets_[static_cast<std::size_t>(k)].back();
}

std::size_t TotalComplex::offset(int k, int m) const
{
    if (k < 0 || k > top_degree())
        return 0;
    const auto& off = offsets_[static_cast<std::size_t>(k)];
    const int mm = std::clamp(m, 0, static_cast<int>(off.size()) - 1);
    return off[static_cast<std::size_t>(mm)];
}

const Matrix& TotalComplex::total(int k) const
{
    if (k < -1 || k > top_degree())
        throw std::out_of_range("total differential degree out of range");
    return total_[static_cast<std::size_t>(k + 1)];
}

std::vector<std::size_t> TotalComplex::at_or_above(int k, int t) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = offset(k, t); i < dim(k); ++i)
        out.push_back(i);
    return out;
}

std::vector<std::size_t> TotalComplex::below(int k, int t) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < offset(k, t) && i < dim(k); ++i)
        out.push_back(i);
    return out;
}

std::vector<std::size_t> total_homology(const Bicomplex& b)
{
    const TotalComplex tc(b);
    const Field& f = b.field();
    std::vector<std::size_t> out;
    for (int k = 0; k <= tc.top_degree(); ++k) {
        const std::size_t out_rank = linalg::rank(f, tc.total(k));
        const std::size_t in_rank = linalg::rank(f, tc.total(k - 1));
        out.push_back(tc.dim(k) - out_rank - in_rank);
    }
    return out;
}

namespace {

std::vector<std::size_t> all_indices(std::size_t n)
{
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = i;
    return v;
}

Matrix embed(const Matrix& x, const std::vector<std::size_t>& rows, std::size_t ambient)
{
    Matrix out(ambient, x.cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < x.cols; ++j)
            out.at(rows[i], j) = x.at(i, j);
    return out;
}

/// Cycles and boundaries of the column filtration F^t = columns >= t.
class Filtration {
public:
    explicit Filtration(const Bicomplex& b) : tc_(b), f_(b.field()) {}

    const TotalComplex& total() const { return tc_; }

    // Z_r^t = F^t intersect D^{-1} F^{t+r}, inside Tot^k
    Matrix cycles(int k, int t, int r) const
    {
        const auto cols = tc_.at_or_above(k, t);
        const auto rows = tc_.below(k + 1, t + r);
        const Matrix ker = linalg::kernel(f_, submatrix(tc_.total(k), rows, cols));
        return embed(ker, cols, tc_.dim(k));
    }

    // B_s^t = F^t intersect D(F^{t-s}), inside Tot^k
    Matrix boundaries(int k, int t, int s) const
    {
        if (k <= 0)
            return Matrix(tc_.dim(k), 0);
        const Matrix& d = tc_.total(k - 1);
        const auto cols = tc_.at_or_above(k - 1, t - s);
        const auto rows = tc_.below(k, t);
        const Matrix ker = linalg::kernel(f_, submatrix(d, rows, cols));
        return multiply(f_, submatrix(d, all_indices(d.rows), cols), ker);
    }

    std::size_t page_dim(int m, int n, int r) const
    {
        const int k = m + n;
        const Matrix z = cycles(k, m, r);
        const Matrix den = hcat(cycles(k, m + 1, r - 1), boundaries(k, m, r - 1));
        return z.cols - linalg::rank(f_, den);
    }

    Subquotient page_cell(int m, int n, int r) const
    {
        const int k = m + n;
        return Subquotient(f_, cycles(k, m, r), hcat(cycles(k, m + 1, r - 1), boundaries(k, m, r - 1)));
    }

private:
    TotalComplex tc_;
    const Field& f_;
};

}  // namespace

std::size_t Page::dim(int m, int n) const
{
    if (m < 0 || n < 0 || static_cast<std::size_t>(m) >= width || static_cast<std::size_t>(n) >= height)
        return 0;
    return dims[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
}

Page page(const Bicomplex& b, int r, bool with_differentials)
{
    if (r < 0)
        throw std::invalid_argument("page level must be >= 0");
    const int w = static_cast<int>(b.width());
    const int h = static_cast<int>(b.height());
    Page out;
    out.r = r;
    out.width = b.width();
    out.height = b.height();
    out.dims.assign(b.width(), std::vector<std::size_t>(b.height(), 0));

    if (r == 0) {
        for (int m = 0; m < w; ++m)
            for (int n = 0; n < h; ++n) {
                out.dims[m][n] = b.dim(m, n);
                if (with_differentials && b.dim(m, n) && b.dim(m, n + 1))
                    out.differentials.emplace(Spot{m, n}, b.d0(m, n));
            }
        return out;
    }

    const Filtration filt(b);
    if (!with_differentials) {
        for (int m = 0; m < w; ++m)
            for (int n = 0; n < h; ++n)
                out.dims[m][n] = b.dim(m, n) ? filt.page_dim(m, n, r) : 0;
        return out;
    }

    std::map<Spot, Subquotient> cells;
    for (int m = 0; m < w; ++m)
        for (int n = 0; n < h; ++n) {
            auto sq = filt.page_cell(m, n, r);
            out.dims[m][n] = sq.dim();
            cells.emplace(Spot{m, n}, std::move(sq));
        }
    const Field& f = b.field();
    for (const auto& [spot, src] : cells) {
        const auto target = cells.find(Spot{spot.first + r, spot.second - r + 1});
        if (src.dim() == 0 || target == cells.end() || target->second.dim() == 0)
            continue;
        const int k = spot.first + spot.second;
        const Matrix image = multiply(f, filt.total().total(k), src.lifts());
        out.differentials.emplace(spot, target->second.coords(f, image));
    }
    return out;
}

Page e_infinity(const Bicomplex& b) { return page(b, static_cast<int>(b.width() + b.height()) + 1); }

// ------------------------------------------------------------ exact couples

std::size_t ExactCouple::dim_d(int m, int n) const
{
    const auto it = d_rep.find(Spot{m, n});
    return it == d_rep.end() ? 0 : it->second.cols;
}

std::size_t ExactCouple::dim_e(int m, int n) const
{
    const auto it = e_rep.find(Spot{m, n});
    return it == e_rep.end() ? 0 : it->second.cols;
}

namespace {

Matrix lookup(const std::map<Spot, Matrix>& maps, Spot s, std::size_t rows, std::size_t cols)
{
    const auto it = maps.find(s);
    if (it == maps.end())
        return Matrix(rows, cols);
    return it->second;
}

}  // namespace

Matrix ExactCouple::i(int m, int n) const { return lookup(i_map, {m, n}, dim_d(m, n), dim_d(m + 1, n - 1)); }

Matrix ExactCouple::j(int m, int n) const
{
    return lookup(j_map, {m, n}, dim_e(m + level - 1, n - level + 1), dim_d(m, n));
}

Matrix ExactCouple::k(int m, int n) const { return lookup(k_map, {m, n}, dim_d(m + 1, n), dim_e(m, n)); }

ExactCouple exact_couple(const Bicomplex& b)
{
    const Field& f = b.field();
    const Filtration filt(b);
    const TotalComplex& tc = filt.total();
    const int w = static_cast<int>(b.width());
    const int h = static_cast<int>(b.height());

    ExactCouple c;
    c.level = 1;
    c.width = b.width();
    c.height = b.height();
    c.modulus = b.modulus();
    c.min_column = -(w + h + 2);
    const int top = c.max_degree();

    // D_1^{m,n} = H^{m+n}(F^m); below column 0 this is H(Tot)
    std::map<Spot, Subquotient> d_sq;
    for (int m = c.min_column; m < w; ++m)
        for (int k = 0; k <= top; ++k) {
            const int t = std::max(m, 0);
            const Matrix z = filt.cycles(k, t, w + h + 2);
            const Matrix bd = filt.boundaries(k, t, 0);
            Subquotient sq(f, z, bd);
            c.d_rep.emplace(Spot{m, k - m}, sq.lifts());
            d_sq.emplace(Spot{m, k - m}, std::move(sq));
        }

    // E_1^{m,n} = H(E_0^{m,n}, d0)
    std::map<Spot, Subquotient> e_sq;
    for (int m = 0; m < w; ++m)
        for (int n = 0; n < h; ++n) {
            const Matrix z = linalg::kernel(f, b.d0(m, n));
            const Matrix bd = n > 0 ? b.d0(m, n - 1) : Matrix(b.dim(m, n), 0);
            Subquotient sq(f, z, bd);
            c.e_rep.emplace(Spot{m, n}, sq.lifts());
            e_sq.emplace(Spot{m, n}, std::move(sq));
        }

    for (const auto& [spot, target] : d_sq) {
        const auto [m, n] = spot;
        // i: inclusion of F^{m+1} into F^m
        if (auto src = c.d_rep.find(Spot{m + 1, n - 1}); src != c.d_rep.end())
            c.i_map.emplace(spot, target.coords(f, src->second));
        // j: project a cycle of F^m onto column m
        if (auto e = e_sq.find(spot); e != e_sq.end()) {
            const Matrix& rep = c.d_rep.at(spot);
            std::vector<std::size_t> rows(b.dim(m, n));
            for (std::size_t r = 0; r < rows.size(); ++r)
                rows[r] = tc.offset(m + n, m) + r;
            c.j_map.emplace(spot, e->second.coords(f, submatrix(rep, rows, all_indices(rep.cols))));
        }
    }
    // k: apply D to a d0-cycle of column m; it lands in F^{m+1}
    for (const auto& [spot, sq] : e_sq) {
        const auto [m, n] = spot;
        const auto target = d_sq.find(Spot{m + 1, n});
        if (target == d_sq.end())
            continue;
        const int k = m + n;
        std::vector<std::size_t> rows(b.dim(m, n));
        for (std::size_t r = 0; r < rows.size(); ++r)
            rows[r] = tc.offset(k, m) + r;
        const Matrix lifted = embed(sq.lifts(), rows, tc.dim(k));
        c.k_map.emplace(spot, target->second.coords(f, multiply(f, tc.total(k), lifted)));
    }
    return c;
}

namespace {

/// Coordinates of the columns of x in the basis given by the columns of basis.
Matrix express(const Field& f, const Matrix& basis, const Matrix& x)
{
    Matrix out(basis.cols, x.cols);
    for (std::size_t j = 0; j < x.cols; ++j) {
        const auto z = linalg::solve(f, basis, x.column(j));
        if (!z)
            throw std::logic_error("derived couple: vector outside the image of i");
        out.set_column(j, *z);
    }
    return out;
}

}  // namespace

ExactCouple derive(const ExactCouple& c)
{
    const Field f(c.modulus);
    const int l = c.level;

    ExactCouple out;
    out.level = l + 1;
    out.width = c.width;
    out.height = c.height;
    out.modulus = c.modulus;
    out.min_column = c.min_column;

    // D_{l+1}^{m,n} = i_l(D_l^{m+1,n-1})
    std::map<Spot, Matrix> basis;
    for (const auto& [spot, rep] : c.d_rep) {
        Matrix bd = linalg::column_space(f, c.i(spot.first, spot.second));
        out.d_rep.emplace(spot, multiply(f, rep, bd));
        basis.emplace(spot, std::move(bd));
    }

    // E_{l+1} = H(E_l, j_l k_l)
    std::map<Spot, Subquotient> e_sq;
    for (const auto& [spot, rep] : c.e_rep) {
        const auto [m, n] = spot;
        const Matrix d_out = multiply(f, c.j(m + 1, n), c.k(m, n));
        const Matrix d_in = multiply(f, c.j(m - l + 1, n + l - 1), c.k(m - l, n + l - 1));
        Subquotient sq(f, linalg::kernel(f, d_out), d_in);
        out.e_rep.emplace(spot, multiply(f, rep, sq.lifts()));
        e_sq.emplace(spot, std::move(sq));
    }

    for (const auto& [spot, bd] : basis) {
        const auto [m, n] = spot;
        const Matrix i_old = c.i(m, n);
        // i_{l+1}: restriction of i_l
        if (auto src = basis.find(Spot{m + 1, n - 1}); src != basis.end())
            out.i_map.emplace(spot, express(f, bd, multiply(f, i_old, src->second)));
        // j_{l+1}(i_l y) = [j_l y]
        if (auto e = e_sq.find(Spot{m + l, n - l}); e != e_sq.end()) {
            Matrix pre(c.dim_d(m + 1, n - 1), bd.cols);
            for (std::size_t col = 0; col < bd.cols; ++col) {
                const auto y = linalg::solve(f, i_old, bd.column(col));
                if (!y)
                    throw std::logic_error("derived couple: basis vector outside the image of i");
                pre.set_column(col, *y);
            }
            out.j_map.emplace(spot, e->second.coords(f, multiply(f, c.j(m + 1, n - 1), pre)));
        }
    }

    // k_{l+1}([e]) = k_l(e)
    for (const auto& [spot, sq] : e_sq) {
        const auto [m, n] = spot;
        const auto target = basis.find(Spot{m + 1, n});
        if (target == basis.end())
            continue;
        out.k_map.emplace(spot, express(f, target->second, multiply(f, c.k(m, n), sq.lifts())));
    }
    return out;
}

bool is_exact(const ExactCouple& c)
{
    const Field f(c.modulus);
    const int l = c.level;
    auto exact_at = [&](const Matrix& in, const Matrix& out, std::size_t dim) {
        return multiply(f, out, in).is_zero() && linalg::rank(f, in) + linalg::rank(f, out) == dim;
    };
    for (const auto& [spot, rep] : c.d_rep) {
        const auto [m, n] = spot;
        if (m == c.min_column)
            continue;
        // D --i--> D --j--> E, at D^{m,n}
        if (!exact_at(c.i(m, n), c.j(m, n), rep.cols))
            return false;
        // E --k--> D --i--> D, at D^{m,n}
        if (!exact_at(c.k(m - 1, n), c.i(m - 1, n + 1), rep.cols))
            return false;
    }
    for (const auto& [spot, rep] : c.e_rep) {
        const auto [m, n] = spot;
        if (m - l + 1 <= c.min_column)
            continue;
        if (!exact_at(c.j(m - l + 1, n + l - 1), c.k(m, n), rep.cols))
            return false;
    }
    return true;
}

Page couple_page(const ExactCouple& c)
{
    Page out;
    out.r = c.level;
    out.width = c.width;
    out.height = c.height;
    out.dims.assign(c.width, std::vector<std::size_t>(c.height, 0));
    for (const auto& [spot, rep] : c.e_rep)
        out.dims[static_cast<std::size_t>(spot.first)][static_cast<std::size_t>(spot.second)] = rep.cols;
    return out;
}

bool k2_is_zero(const ExactCouple& c, int m, int n)
{
    if (c.level != 2)
        throw std::invalid_argument("k2_is_zero needs the level-2 couple");
    return c.k(m, n).is_zero();
}

// ----------------------------------------------------------------- collapse

bool CollapseReport::passed() const
{
    if (hypothesis == Hypothesis::None)
        return converges;
    return converges && e2_equals_einf;
}

CollapseReport::Hypothesis collapse_hypothesis(const Bicomplex& b)
{
    const Field& f = b.field();
    bool all_zero = true;
    bool all_injective = true;
    const int w = static_cast<int>(b.width());
    const int h = static_cast<int>(b.height());
    for (int m = 0; m < w; ++m)
        for (int n = 0; n < h; ++n) {
            const Matrix& d = b.d0(m, n);
            if (!d.is_zero())
                all_zero = false;
            if (n + 1 < h && !linalg::is_injective(f, d))
                all_injective = false;
        }
    if (all_zero)
        return CollapseReport::Hypothesis::AllZero;
    if (all_injective)
        return CollapseReport::Hypothesis::AllInjective;
    return CollapseReport::Hypothesis::None;
}

CollapseReport check_collapse(const Bicomplex& b)
{
    CollapseReport report;
    report.hypothesis = collapse_hypothesis(b);
    const Page e2 = page(b, 2);
    const Page einf = e_infinity(b);
    report.e2_equals_einf = e2.dims == einf.dims;
    if (!report.e2_equals_einf) {
        for (std::size_t m = 0; m < b.width() && report.first_discrepancy.empty(); ++m)
            for (std::size_t n = 0; n < b.height(); ++n)
                if (e2.dims[m][n] != einf.dims[m][n]) {
                    std::ostringstream os;
                    os << "E2 != Einf at (" << m << "," << n << "): " << e2.dims[m][n] << " vs " << einf.dims[m][n];
                    report.first_discrepancy = os.str();
                    break;
                }
    }
    const auto homology = total_homology(b);
    report.converges = true;
    for (std::size_t k = 0; k < homology.size(); ++k) {
        std::size_t sum = 0;
        for (std::size_t m = 0; m <= k && m < b.width(); ++m)
            sum += einf.dim(static_cast<int>(m), static_cast<int>(k - m));
        if (sum != homology[k]) {
            report.converges = false;
            if (report.first_discrepancy.empty())
                report.first_discrepancy = "diagonal " + std::to_string(k) + ": sum of Einf is " + std::to_string(sum) +
                                           ", H(Tot) is " + std::to_string(homology[k]);
            break;
        }
    }
    return report;
}

// ---------------------------------------------------------------- generator

std::string to_string(Mode mode)
{
    switch (mode) {
    case Mode::AllD0Zero:
        return "all-d0-zero";
    case Mode::AllD0Injective:
        return "all-d0-injective";
    case Mode::Generic:
        return "generic";
    }
    return "generic";
}

Mode parse_mode(const std::string& text)
{
    if (text == "all-d0-zero")
        return Mode::AllD0Zero;
    if (text == "all-d0-injective")
        return Mode::AllD0Injective;
    if (text == "generic")
        return Mode::Generic;
    throw std::invalid_argument("unknown bicomplex mode: " + text);
}

namespace {

class Sampler {
public:
    Sampler(std::uint64_t seed, const Field& f) : rng_(seed), f_(f) {}

    // inclusive; plain modulo keeps the stream identical across standard libraries
    std::size_t uniform(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1)); }
    Elem element() { return static_cast<Elem>(rng_() % f_.modulus()); }

    Matrix random(std::size_t rows, std::size_t cols)
    {
        Matrix x(rows, cols);
        for (auto& e : x.a)
            e = element();
        return x;
    }

    /// Random invertible matrix and its inverse.
    std::pair<Matrix, Matrix> invertible(std::size_t n)
    {
        for (int attempt = 0; attempt < 64; ++attempt) {
            Matrix p = random(n, n);
            if (auto inv = linalg::inverse(f_, p))
                return {std::move(p), std::move(*inv)};
        }
        throw std::runtime_error("bicomplex generation failed: no invertible basis change after 64 attempts");
    }

private:
    std::mt19937_64 rng_;
    const Field& f_;
};

/// A split complex of the given length with cell dims <= max_dim:
/// X^m = B^m + H^m + C^m and d maps C^m identically onto B^{m+1}.
struct Complex {
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;  // maps[m]: X^m -> X^{m+1}
};

Complex random_complex(Sampler& s, std::size_t length, std::size_t max_dim)
{
    Complex c;
    std::vector<std::size_t> ranks(length, 0);
    std::size_t incoming = 0;
    for (std::size_t m = 0; m < length; ++m) {
        const std::size_t cap = max_dim - incoming;
        const std::size_t rk = m + 1 < length ? s.uniform(0, std::min<std::size_t>(cap, max_dim)) : 0;
        const std::size_t homology = s.uniform(0, cap - rk);
        ranks[m] = rk;
        c.dims.push_back(incoming + homology + rk);
        incoming = rk;
    }
    for (std::size_t m = 0; m + 1 < length; ++m) {
        Matrix d(c.dims[m + 1], c.dims[m]);
        for (std::size_t q = 0; q < ranks[m]; ++q)
            d.at(q, c.dims[m] - ranks[m] + q) = 1;
        c.maps.push_back(std::move(d));
    }
    return c;
}

Bicomplex direct_sum(const Bicomplex& x, const Bicomplex& y)
{
    const int w = static_cast<int>(x.width());
    const int h = static_cast<int>(x.height());
    Bicomplex out(x.width(), x.height(), x.modulus());
    for (int m = 0; m < w; ++m)
        for (int n = 0; n < h; ++n)
            out.set_dim(m, n, x.dim(m, n) + y.dim(m, n));
    auto block = [](const Matrix& a, const Matrix& b) {
        Matrix s(a.rows + b.rows, a.cols + b.cols);
        for (std::size_t i = 0; i < a.rows; ++i)
            for (std::size_t j = 0; j < a.cols; ++j)
                s.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows; ++i)
            for (std::size_t j = 0; j < b.cols; ++j)
                s.at(a.rows + i, a.cols + j) = b.at(i, j);
        return s;
    };
    for (int m = 0; m < w; ++m)
        for (int n = 0; n < h; ++n) {
            out.set_d0(m, n, block(x.d0(m, n), y.d0(m, n)));
            out.set_d1(m, n, block(x.d1(m, n), y.d1(m, n)));
        }
    return out;
}

Bicomplex scramble(const Bicomplex& b, Sampler& s)
{
    const Field& f = b.field();
    const int w = static_cast<int>(b.width());
    const int h = static_cast<int>(b.height());
    std::map<Spot, std::pair<Matrix, Matrix>> change;
    for (int m = 0; m < w; ++m)
        for (int n = 0; n < h; ++n)
            change.emplace(Spot{m, n}, s.invertible(b.dim(m, n)));
    auto conj = [&](const Matrix& d, Spot from, Spot to) {
        const auto it = change.find(to);
        if (it == change.end())
            return d;
        return multiply(f, it->second.first, multiply(f, d, change.at(from).second));
    };
    Bicomplex out = b;
    for (int m = 0; m < w; ++m)
        for (int n = 0; n < h; ++n) {
            out.set_d0(m, n, conj(b.d0(m, n), {m, n}, {m, n + 1}));
            out.set_d1(m, n, conj(b.d1(m, n), {m, n}, {m + 1, n}));
        }
    return out;
}

Bicomplex rows_only(const Shape& shape, Sampler& s, Elem modulus)
{
    Bicomplex b(shape.width, shape.height, modulus);
    std::vector<Complex> rows;
    for (std::size_t n = 0; n < shape.height; ++n)
        rows.push_back(random_complex(s, shape.width, shape.max_dim));
    for (std::size_t n = 0; n < shape.height; ++n)
        for (std::size_t m = 0; m < shape.width; ++m)
            b.set_dim(static_cast<int>(m), static_cast<int>(n), rows[n].dims[m]);
    for (std::size_t n = 0; n < shape.height; ++n)
        for (std::size_t m = 0; m + 1 < shape.width; ++m)
            b.set_d1(static_cast<int>(m), static_cast<int>(n), rows[n].maps[m]);
    return b;
}

// Only the top two rows can carry data: d0 d0 = 0 with injective d0 forces
// every lower row to vanish.  Row h-2 is A, row h-1 is A + C, d0 = (-1)^m incl.
Bicomplex injective_window(const Shape& shape, Sampler& s, Elem modulus)
{
    if (shape.height == 1 || shape.max_dim < 2) {
        // top row only: every d0 leaves the grid
        Bicomplex b(shape.width, shape.height, modulus);
        const Complex top = random_complex(s, shape.width, shape.max_dim);
        const int n = static_cast<int>(shape.height) - 1;
        for (std::size_t m = 0; m < shape.width; ++m)
            b.set_dim(static_cast<int>(m), n, top.dims[m]);
        for (std::size_t m = 0; m + 1 < shape.width; ++m)
            b.set_d1(static_cast<int>(m), n, top.maps[m]);
        return b;
    }
    const Field f(modulus);
    const std::size_t a_max = shape.max_dim / 2;
    const Complex a = random_complex(s, shape.width, a_max);
    const Complex c = random_complex(s, shape.width, shape.max_dim - a_max);
    const int lo = static_cast<int>(shape.height) - 2;
    const int hi = lo + 1;
    Bicomplex b(shape.width, shape.height, modulus);
    for (std::size_t m = 0; m < shape.width; ++m) {
        b.set_dim(static_cast<int>(m), lo, a.dims[m]);
        b.set_dim(static_cast<int>(m), hi, a.dims[m] + c.dims[m]);
    }
    for (std::size_t m = 0; m < shape.width; ++m) {
        const int mm = static_cast<int>(m);
        Matrix incl(a.dims[m] + c.dims[m], a.dims[m]);
        const Elem sign = m % 2 ? f.neg(1) : 1;
        for (std::size_t q = 0; q < a.dims[m]; ++q)
            incl.at(q, q) = sign;
        b.set_d0(mm, lo, std::move(incl));
        if (m + 1 == shape.width)
            continue;
        b.set_d1(mm, lo, a.maps[m]);
        Matrix top(a.dims[m + 1] + c.dims[m + 1], a.dims[m] + c.dims[m]);
        for (std::size_t i = 0; i < a.dims[m + 1]; ++i)
            for (std::size_t j = 0; j < a.dims[m]; ++j)
                top.at(i, j) = a.maps[m].at(i, j);
        for (std::size_t i = 0; i < c.dims[m + 1]; ++i)
            for (std::size_t j = 0; j < c.dims[m]; ++j)
                top.at(a.dims[m + 1] + i, a.dims[m] + j) = c.maps[m].at(i, j);
        b.set_d1(mm, hi, std::move(top));
    }
    return b;
}

Bicomplex tensor(const Shape& shape, Sampler& s, Elem modulus)
{
    const Field f(modulus);
    const std::size_t a_max = std::min<std::size_t>(2, shape.max_dim);
    const std::size_t b_max = std::max<std::size_t>(1, shape.max_dim / 2);
    const Complex a = random_complex(s, shape.width, a_max);
    const Complex v = random_complex(s, shape.height, b_max);
    Bicomplex b(shape.width, shape.height, modulus);
    for (std::size_t m = 0; m < shape.width; ++m)
        for (std::size_t n = 0; n < shape.height; ++n)
            b.set_dim(static_cast<int>(m), static_cast<int>(n), a.dims[m] * v.dims[n]);
    for (std::size_t m = 0; m < shape.width; ++m)
        for (std::size_t n = 0; n < shape.height; ++n) {
            const int mm = static_cast<int>(m);
            const int nn = static_cast<int>(n);
            const std::size_t am = a.dims[m];
            const std::size_t bn = v.dims[n];
            if (m + 1 < shape.width) {
                Matrix d(a.dims[m + 1] * bn, am * bn);
                for (std::size_t p2 = 0; p2 < a.dims[m + 1]; ++p2)
                    for (std::size_t p = 0; p < am; ++p)
                        for (std::size_t q = 0; q < bn; ++q)
                            d.at(p2 * bn + q, p * bn + q) = a.maps[m].at(p2, p);
                b.set_d1(mm, nn, std::move(d));
            }
            if (n + 1 < shape.height) {
                const std::size_t bn2 = v.dims[n + 1];
                Matrix d(am * bn2, am * bn);
                for (std::size_t p = 0; p < am; ++p)
                    for (std::size_t q2 = 0; q2 < bn2; ++q2)
                        for (std::size_t q = 0; q < bn; ++q) {
                            const Elem e = v.maps[n].at(q2, q);
                            d.at(p * bn2 + q2, p * bn + q) = m % 2 ? f.neg(e) : e;
                        }
                b.set_d0(mm, nn, std::move(d));
            }
        }
    return b;
}

/// A zig-zag of one-dimensional spots carrying a single d_r from (m,n) to
/// (m+r, n-r+1).
Bicomplex staircase(const Shape& shape, int m, int n, int r, Elem modulus)
{
    Bicomplex b(shape.width, shape.height, modulus);
    b.set_dim(m, n, 1);
    for (int s = 1; s < r; ++s) {
        b.set_dim(m + s, n - s + 1, 1);
        b.set_dim(m + s, n - s, 1);
    }
    b.set_dim(m + r, n - r + 1, 1);
    Matrix one(1, 1);
    one.at(0, 0) = 1;
    b.set_d1(m, n, one);
    for (int s = 1; s < r; ++s) {
        b.set_d0(m + s, n - s, one);
        b.set_d1(m + s, n - s, one);
    }
    return b;
}

Bicomplex with_staircases(Bicomplex b, const Shape& shape, Sampler& s)
{
    const std::size_t count = s.uniform(0, 2);
    const int w = static_cast<int>(shape.width);
    const int h = static_cast<int>(shape.height);
    for (std::size_t c = 0; c < count; ++c) {
        const int r_max = std::min(w - 1, h);
        if (r_max < 1)
            break;
        const int r = 1 + static_cast<int>(s.uniform(0, static_cast<std::size_t>(r_max - 1)));
        const int m = static_cast<int>(s.uniform(0, static_cast<std::size_t>(w - r - 1)));
        const int n = r - 1 + static_cast<int>(s.uniform(0, static_cast<std::size_t>(h - r)));
        const Bicomplex stair = staircase(shape, m, n, r, b.modulus());
        bool fits = true;
        for (int x = 0; x < w; ++x)
            for (int y = 0; y < h; ++y)
                if (b.dim(x, y) + stair.dim(x, y) > shape.max_dim)
                    fits = false;
        if (fits)
            b = direct_sum(b, stair);
    }
    return b;
}

}  // namespace

Bicomplex random_bicomplex(std::uint64_t seed, const Shape& shape, Mode mode, Elem modulus)
{
    if (shape.width < 1 || shape.height < 1 || shape.width > 8 || shape.height > 8)
        throw std::invalid_argument("bicomplex shape must lie within 8 x 8");
    if (shape.max_dim > 6)
        throw std::invalid_argument("cell dimensions are limited to 6");
    const Field f(modulus);
    Sampler s(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(mode), f);
    Bicomplex b = [&] {
        switch (mode) {
        case Mode::AllD0Zero:
            return rows_only(shape, s, modulus);
        case Mode::AllD0Injective:
            return injective_window(shape, s, modulus);
        case Mode::Generic:
            return with_staircases(tensor(shape, s, modulus), shape, s);
        }
        throw std::invalid_argument("unknown mode");
    }();
    return scramble(b, s);
}

Bicomplex witness()
{
    Bicomplex b(3, 2);
    for (Spot s : {Spot{0, 1}, Spot{1, 1}, Spot{1, 0}, Spot{2, 0}})
        b.set_dim(s.first, s.second, 1);
    Matrix one(1, 1);
    one.at(0, 0) = 1;
    Matrix minus_one(1, 1);
    minus_one.at(0, 0) = b.field().neg(1);
    b.set_d1(0, 1, one);
    b.set_d1(1, 0, one);
    b.set_d0(1, 0, minus_one);  // (-1)^m with m = 1
    return b;
}

// ---------------------------------------------------------------- text form

void write_text(std::ostream& out, const Bicomplex& b)
{
    const int w = static_cast<int>(b.width());
    const int h = static_cast<int>(b.height());
    out << "specseq v1 " << b.modulus() << ' ' << w << ' ' << h << '\n';
    for (int m = 0; m < w; ++m)
        for (int n = 0; n < h; ++n)
            out << "dim " << m << ' ' << n << ' ' << b.dim(m, n) << '\n';
    auto emit = [&](const char* name, int m, int n, const Matrix& x) {
        if (x.rows == 0 || x.cols == 0)
            return;
        out << name << ' ' << m << ' ' << n << ' ' << x.rows << ' ' << x.cols << '\n';
        for (std::size_t i = 0; i < x.rows; ++i) {
            for (std::size_t j = 0; j < x.cols; ++j)
                out << (j ? " " : "") << x.at(i, j);
            out << '\n';
        }
    };
    for (int m = 0; m < w; ++m)
        for (int n = 0; n < h; ++n) {
            emit("d0", m, n, b.d0(m, n));
            emit("d1", m, n, b.d1(m, n));
        }
    out << "end\n";
}

Bicomplex read_text(std::istream& in)
{
    auto bad = [](const std::string& why) { return std::invalid_argument("specseq text: " + why); };
    std::string magic;
    std::string version;
    long long modulus = 0;
    long long w = 0;
    long long h = 0;
    if (!(in >> magic >> version >> modulus >> w >> h) || magic != "specseq" || version != "v1")
        throw bad("expected header 'specseq v1 <modulus> <W> <H>'");
    if (w < 1 || h < 1 || w > 64 || h > 64 || modulus < 2)
        throw bad("header values out of range");
    Bicomplex b(static_cast<std::size_t>(w), static_cast<std::size_t>(h), static_cast<Elem>(modulus));
    std::string tag;
    bool maps_started = false;
    while (in >> tag) {
        if (tag == "end")
            return b;
        long long m = 0;
        long long n = 0;
        if (tag == "dim") {
            long long d = 0;
            if (maps_started)
                throw bad("dim line after a map block");
            if (!(in >> m >> n >> d) || m < 0 || n < 0 || m >= w || n >= h || d < 0)
                throw bad("malformed dim line");
            b.set_dim(static_cast<int>(m), static_cast<int>(n), static_cast<std::size_t>(d));
        } else if (tag == "d0" || tag == "d1") {
            maps_started = true;
            long long rows = 0;
            long long cols = 0;
            if (!(in >> m >> n >> rows >> cols) || m < 0 || n < 0 || m >= w || n >= h || rows < 0 || cols < 0)
                throw bad("malformed map header");
            Matrix x(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
            for (auto& e : x.a) {
                long long v = 0;
                if (!(in >> v) || v < 0 || v >= modulus)
                    throw bad("matrix entry missing or outside [0, modulus)");
                e = static_cast<Elem>(v);
            }
            if (tag == "d0")
                b.set_d0(static_cast<int>(m), static_cast<int>(n), std::move(x));
            else
                b.set_d1(static_cast<int>(m), static_cast<int>(n), std::move(x));
        } else {
            throw bad("unknown line tag '" + tag + "'");
        }
    }
    throw bad("missing 'end'");
}

}  // namespace sl2ext::specseq
