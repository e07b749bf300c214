#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sl2ext/linalg.hpp"

namespace sl2ext::specseq {

using linalg::Elem;
using linalg::Matrix;

inline constexpr Elem kDefaultModulus = 32003;

/// (m, n): m is the column (horizontal degree), n the row.
using Spot = std::pair<int, int>;

/// First-quadrant double complex on [0,width) x [0,height).
///
/// d0(m,n): E^{m,n} -> E^{m,n+1} (vertical), d1(m,n): E^{m,n} -> E^{m+1,n}.
/// The stored vertical maps already carry the sign, so d0 and d1
/// anticommute and the total differential is d0 + d1.  Maps leaving the
/// grid are 0 x dim matrices.
class Bicomplex {
public:
    Bicomplex(std::size_t width, std::size_t height, Elem modulus = kDefaultModulus);

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }
    Elem modulus() const { return field_.modulus(); }
    const linalg::Field& field() const { return field_; }

    std::size_t dim(int m, int n) const;
    const Matrix& d0(int m, int n) const;
    const Matrix& d1(int m, int n) const;

    /// Resizes a cell; the maps touching it are reset to zero.
    void set_dim(int m, int n, std::size_t d);
    void set_d0(int m, int n, Matrix x);
    void set_d1(int m, int n, Matrix x);

    /// Builds from commuting squares by multiplying the vertical maps in
    /// column m by (-1)^m.  Applying it twice is the identity.
    Bicomplex toggle_vertical_signs() const;

    friend bool operator==(const Bicomplex&, const Bicomplex&);

private:
    bool inside(int m, int n) const;
    std::size_t index(int m, int n) const { return static_cast<std::size_t>(m) * height_ + static_cast<std::size_t>(n); }
    void reset_maps(int m, int n);

    std::size_t width_;
    std::size_t height_;
    linalg::Field field_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> d0_;
    std::vector<Matrix> d1_;
    Matrix empty_;
};

struct Violation {
    enum class Kind { Shape, D0Squared, D1Squared, Anticommute };
    Kind kind;
    int m = 0;
    int n = 0;
    std::string message;
};

struct ValidationReport {
    bool ok() const { return !first.has_value(); }
    std::optional<Violation> first;
};

ValidationReport validate(const Bicomplex& b);

/// Tot^k = sum over m+n = k, ordered by m; total(k): Tot^k -> Tot^{k+1}.
class TotalComplex {
public:
    explicit TotalComplex(const Bicomplex& b);

    int top_degree() const { return static_cast<int>(offsets_.size()) - 1; }
    std::size_t dim(int k) const;
    /// Offset of cell (m, k-m) inside Tot^k.
    std::size_t offset(int k, int m) const;
    const Matrix& total(int k) const;
    /// Coordinates of Tot^k lying in columns >= t (resp. < t).
    std::vector<std::size_t> at_or_above(int k, int t) const;
    std::vector<std::size_t> below(int k, int t) const;
    const Bicomplex& bicomplex() const { return *b_; }

private:
    const Bicomplex* b_;
    std::vector<std::vector<std::size_t>> offsets_;  // [k][m], size width+1
    std::vector<Matrix> total_;
    Matrix empty_;
};

/// dim H^k(Tot) for k = 0 .. width+height-2.
std::vector<std::size_t> total_homology(const Bicomplex& b);

struct Page {
    int r = 0;
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::vector<std::size_t>> dims;  // [m][n]
    /// d_r(m,n): E_r^{m,n} -> E_r^{m+r,n-r+1} on the chosen lifts; only
    /// filled when requested, and only for nonzero source and target.
    std::map<Spot, Matrix> differentials;

    std::size_t dim(int m, int n) const;
    friend bool operator==(const Page& x, const Page& y) { return x.r == y.r && x.dims == y.dims; }
};

/// E_r by the filtration method on the total complex (columns >= t).
Page page(const Bicomplex& b, int r, bool with_differentials = false);
/// The stable page, r = width + height + 1.
Page e_infinity(const Bicomplex& b);

/// Exact couple D -i-> D -j-> E -k-> D at level l.
///
/// i(m,n): D^{m+1,n-1} -> D^{m,n}
/// j(m,n): D^{m,n} -> E^{m+l-1,n-l+1}
/// k(m,n): E^{m,n} -> D^{m+1,n}
///
/// D^{m,n} is kept for negative m too (there it is H^{m+n}(Tot)), down to
/// min_column(), so exactness can be checked on the whole first quadrant.
/// Representatives: d_rep(m,n) has the cycles of Tot^{m+n} lifting the
/// basis of D^{m,n}; e_rep(m,n) has d0-cycles of the cell lifting E^{m,n}.
struct ExactCouple {
    int level = 1;
    std::size_t width = 0;
    std::size_t height = 0;
    Elem modulus = kDefaultModulus;
    int min_column = 0;

    std::map<Spot, Matrix> d_rep;
    std::map<Spot, Matrix> e_rep;
    std::map<Spot, Matrix> i_map;
    std::map<Spot, Matrix> j_map;
    std::map<Spot, Matrix> k_map;

    std::size_t dim_d(int m, int n) const;
    std::size_t dim_e(int m, int n) const;
    Matrix i(int m, int n) const;
    Matrix j(int m, int n) const;
    Matrix k(int m, int n) const;
    int max_degree() const { return static_cast<int>(width + height) - 2; }
};

ExactCouple exact_couple(const Bicomplex& b);
ExactCouple derive(const ExactCouple& c);
/// Kernel = image at every node, by rank arithmetic and zero composites.
bool is_exact(const ExactCouple& c);
/// E-part of the couple as a page of level c.level.
Page couple_page(const ExactCouple& c);
/// Whether k_2^{m,n} vanishes; c must be at level 2.
bool k2_is_zero(const ExactCouple& c, int m, int n);

struct CollapseReport {
    enum class Hypothesis { AllZero, AllInjective, None };
    Hypothesis hypothesis = Hypothesis::None;
    bool e2_equals_einf = false;
    bool converges = false;  // diagonal E_inf sums equal dim H(Tot)
    std::string first_discrepancy;

    /// Under the hypothesis both checks must hold; otherwise only convergence.
    bool passed() const;
};

/// "All d0 injective" ranges over the vertical maps whose target lies inside
/// the grid; the maps leaving the top row are not constrained.
CollapseReport::Hypothesis collapse_hypothesis(const Bicomplex& b);
CollapseReport check_collapse(const Bicomplex& b);

struct Shape {
    std::size_t width = 4;
    std::size_t height = 4;
    std::size_t max_dim = 5;
};

enum class Mode { AllD0Zero, AllD0Injective, Generic };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

/// Deterministic in (seed, shape, mode).  Throws std::invalid_argument for
/// shapes beyond 8 x 8 or cell dims beyond 6.
Bicomplex random_bicomplex(std::uint64_t seed, const Shape& shape, Mode mode, Elem modulus = kDefaultModulus);

/// The 4-spot witness: a single d2 from (0,1) to (2,0).
Bicomplex witness();

/// Text format:
///   specseq v1 <modulus> <width> <height>
///   dim <m> <n> <d>            one line per cell, m-major
///   d0|d1 <m> <n> <rows> <cols> followed by <rows> lines of entries
///   end
/// Only maps with nonzero source and target are written.
void write_text(std::ostream& out, const Bicomplex& b);
Bicomplex read_text(std::istream& in);

}  // namespace sl2ext::specseq
